#pragma once

#include <optional>
#include <vector>

#include "stonelat/semilattice.hpp"

namespace stonelat {

/// A subset satisfying the filter axioms: no zero, closed under meets, upward
/// closed, non-empty. Only constructible through the checked factories below.
class Filter {
 public:
  const ElementSet& carrier() const noexcept { return carrier_; }
  bool contains(Element e) const noexcept { return carrier_.contains(e); }
  std::size_t size() const noexcept { return carrier_.size(); }

  /// Least element of the carrier; in a finite semilattice every filter is
  /// the principal filter of this element.
  Element generator() const noexcept { return generator_; }

  /// Checked conversion; throws NotAFilter.
  static Filter from_set(const Semilattice& s, const ElementSet& carrier);

  friend bool operator==(const Filter& a, const Filter& b) { return a.carrier_ == b.carrier_; }
  friend bool operator<(const Filter& a, const Filter& b) { return a.carrier_ < b.carrier_; }

 private:
  Filter(ElementSet carrier, Element generator)
      : carrier_(std::move(carrier)), generator_(generator) {}

  ElementSet carrier_;
  Element generator_ = 0;
};

/// F1, F2, F3 and non-emptiness, checked literally.
bool is_filter(const Semilattice& s, const ElementSet& a);

/// e↑. Throws ZeroElement for e = 0.
Filter principal_filter(const Semilattice& s, Element e);

/// All filters, canonically sorted: {e↑ : e ≠ 0}.
std::vector<Filter> enumerate_filters(const Semilattice& s);

/// Reference enumeration over every subset of E; exponential, intended for
/// cross-checking enumerate_filters on small inputs. Throws TooLarge above
/// 20 elements.
std::vector<Filter> enumerate_filters_by_subsets(const Semilattice& s);

/// Ultrafilter criterion: F contains every b that meets all of F.
bool is_ultrafilter(const Semilattice& s, const Filter& f);
/// Unchecked-input variant; throws NotAFilter.
bool is_ultrafilter(const Semilattice& s, const ElementSet& candidate);
/// Same question answered by maximality among all filters.
bool is_maximal_filter(const Semilattice& s, const Filter& f);

/// Greedy extension of e↑, scanning candidates in index order. Throws
/// ZeroElement for e = 0.
Filter extend_to_ultrafilter(const Semilattice& s, Element e);

/// All ultrafilters, canonically sorted. Fails with Inconsistent if the
/// criterion and maximality disagree on any filter.
std::vector<Filter> enumerate_ultrafilters(const Semilattice& s);

/// A pair (f, Y) whose region E^{{f},Y} is covered by E^{{f},Y} ∖ F, proving
/// F is not tight.
struct TightnessViolation {
  Element below;
  ElementSet orthogonal_to;
  ElementSet cover;
  /// The region is {0}; only the empty cover is involved.
  bool vacuous;
};

/// Searches singletons X = {f}, f ∈ F, and every Y ⊆ E ∖ (F ∪ {0}) for a cover of
/// E^{X,Y} missing F. Exponential in |E ∖ F|. With `include_vacuous` false,
/// regions equal to {0} are skipped.
std::optional<TightnessViolation> find_tightness_violation(const Semilattice& s, const Filter& f,
                                                           bool include_vacuous = true);
inline bool is_tight(const Semilattice& s, const Filter& f) {
  return !find_tightness_violation(s, f).has_value();
}

/// Throws NotAFilter.
bool is_tight(const Semilattice& s, const ElementSet& candidate);

std::vector<Filter> tight_filters(const Semilattice& s);

}  // namespace stonelat
