#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stonelat/element_set.hpp"

namespace stonelat {

/// A finite bounded meet semilattice stored as a total meet table over dense
/// element indices. Zero and one are designated indices, not reserved labels.
///
/// Instances are immutable after construction and always satisfy the
/// semilattice laws; both factories reject tables that do not.
class Semilattice {
 public:
  /// Builds from generating strict-order pairs (`first < second`). The order is
  /// the reflexive-transitive closure of the pairs.
  static Semilattice from_order(std::vector<std::string> labels,
                                std::span<const std::pair<std::string, std::string>> less_than);

  /// Builds from an explicit row-major table, `table[i * n + j] = i ∧ j`.
  /// Zero and one are recovered from the table.
  static Semilattice from_table(std::vector<std::string> labels, std::vector<Element> table);

  std::size_t size() const noexcept { return labels_.size(); }
  Element zero() const noexcept { return zero_; }
  Element one() const noexcept { return one_; }

  Element meet(Element e, Element f) const { return table_[e * size() + f]; }
  bool leq(Element e, Element f) const { return meet(e, f) == e; }
  bool less(Element e, Element f) const { return e != f && leq(e, f); }
  bool orthogonal(Element e, Element f) const { return meet(e, f) == zero_; }

  const std::string& label(Element e) const { return labels_.at(e); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Element> find(const std::string& label) const;
  /// Like find(), but throws UnknownLabel.
  Element at(const std::string& label) const;

  const std::vector<Element>& table() const noexcept { return table_; }

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet all() const { return ElementSet::full(size()); }

  friend bool operator==(const Semilattice&, const Semilattice&) = default;

 private:
  Semilattice(std::vector<std::string> labels, std::vector<Element> table, Element zero, Element one)
      : labels_(std::move(labels)), table_(std::move(table)), zero_(zero), one_(one) {}

  std::vector<std::string> labels_;
  std::vector<Element> table_;
  Element zero_ = 0;
  Element one_ = 0;
};

// Order-theoretic primitives. All are pure and exact.

/// e∗: everything orthogonal to e.
ElementSet star(const Semilattice& s, Element e);
ElementSet up(const Semilattice& s, const ElementSet& x);
ElementSet down(const Semilattice& s, const ElementSet& x);
ElementSet up(const Semilattice& s, Element e);
ElementSet down(const Semilattice& s, Element e);

/// Meet of a finite set; the empty meet is one.
Element meet_of(const Semilattice& s, const ElementSet& x);

/// Elements below every member of `below` and orthogonal to every member of
/// `orthogonal_to`. Always contains zero.
ElementSet constrained_set(const Semilattice& s, const ElementSet& below,
                           const ElementSet& orthogonal_to);

/// Whether `z` is a cover of constrained_set(below, orthogonal_to): every
/// non-zero member meets some member of `z`. Throws NotSubset when `z` is
/// not contained in that set. The empty set covers {0}.
bool is_cover(const Semilattice& s, const ElementSet& z, const ElementSet& below,
              const ElementSet& orthogonal_to);

/// f → (e₁,…,e_m): every non-zero x ≤ f meets some e_i. Throws ZeroSource for
/// f = 0.
bool arrow(const Semilattice& s, Element f, std::span<const Element> targets);

/// Elements covered by e (e > f with nothing strictly between). Throws
/// ZeroElement for e = 0.
ElementSet covers_hat(const Semilattice& s, Element e);

/// Exhaustive check of commutativity, associativity, idempotence and the
/// bound laws. Used by tests and the catalog; construction already enforces it.
bool satisfies_semilattice_laws(const Semilattice& s);

/// Structure-preserving bijection from `a` onto `b` (meet, zero, one), if any.
std::optional<std::vector<Element>> find_isomorphism(const Semilattice& a, const Semilattice& b);
inline bool isomorphic(const Semilattice& a, const Semilattice& b) {
  return find_isomorphism(a, b).has_value();
}

/// Sorted labels of a set, for rendering.
std::vector<std::string> labels_of(const Semilattice& s, const ElementSet& x);
std::string format_set(const Semilattice& s, const ElementSet& x);

}  // namespace stonelat
