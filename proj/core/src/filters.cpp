#include "stonelat/filters.hpp"

#include <algorithm>
#include <cstdint>

#include "stonelat/error.hpp"

namespace stonelat {

bool is_filter(const Semilattice& s, const ElementSet& a) {
  if (a.universe() != s.size() || a.empty() || a.contains(s.zero())) return false;
  const auto members = a.elements();
  for (Element e : members) {
    for (Element f : members) {
      if (!a.contains(s.meet(e, f))) return false;
    }
    for (Element f = 0; f < s.size(); ++f) {
      if (s.leq(e, f) && !a.contains(f)) return false;
    }
  }
  return true;
}

Filter Filter::from_set(const Semilattice& s, const ElementSet& carrier) {
  if (!is_filter(s, carrier)) throw Error(Errc::kNotAFilter, format_set(s, carrier));
  return Filter(carrier, meet_of(s, carrier));
}

Filter principal_filter(const Semilattice& s, Element e) {
  if (e >= s.size()) throw Error(Errc::kInvalidIndex, std::to_string(e));
  if (e == s.zero()) throw Error(Errc::kZeroElement, "principal filter of zero");
  return Filter::from_set(s, up(s, e));
}

std::vector<Filter> enumerate_filters(const Semilattice& s) {
  std::vector<Filter> out;
  for (Element e = 0; e < s.size(); ++e) {
    if (e != s.zero()) out.push_back(principal_filter(s, e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Filter> enumerate_filters_by_subsets(const Semilattice& s) {
  const std::size_t n = s.size();
  if (n > 20) throw Error(Errc::kTooLarge, "subset scan limited to 20 elements");
  std::vector<Filter> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    ElementSet a(n);
    for (Element e = 0; e < n; ++e) {
      if ((mask >> e) & 1U) a.insert(e);
    }
    if (is_filter(s, a)) out.push_back(Filter::from_set(s, a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_ultrafilter(const Semilattice& s, const Filter& f) {
  const auto members = f.carrier().elements();
  for (Element b = 0; b < s.size(); ++b) {
    if (f.contains(b)) continue;
    bool meets_all = std::none_of(members.begin(), members.end(),
                                  [&](Element c) { return s.orthogonal(b, c); });
    if (meets_all) return false;
  }
  return true;
}

bool is_ultrafilter(const Semilattice& s, const ElementSet& candidate) {
  return is_ultrafilter(s, Filter::from_set(s, candidate));
}

bool is_maximal_filter(const Semilattice& s, const Filter& f) {
  for (const auto& g : enumerate_filters(s)) {
    if (g != f && f.carrier().subset_of(g.carrier())) return false;
  }
  return true;
}

Filter extend_to_ultrafilter(const Semilattice& s, Element e) {
  if (e >= s.size()) throw Error(Errc::kInvalidIndex, std::to_string(e));
  if (e == s.zero()) throw Error(Errc::kZeroElement, "zero lies in no filter");
  // The running filter is always principal, so "b meets every member" reduces
  // to "b meets the generator". A rejected b stays rejected as the generator
  // shrinks, so one pass reaches a fixed point.
  Element generator = e;
  for (Element b = 0; b < s.size(); ++b) {
    if (!s.orthogonal(b, generator)) generator = s.meet(b, generator);
  }
  return principal_filter(s, generator);
}

std::vector<Filter> enumerate_ultrafilters(const Semilattice& s) {
  std::vector<Filter> out;
  for (const auto& f : enumerate_filters(s)) {
    const bool by_criterion = is_ultrafilter(s, f);
    if (by_criterion != is_maximal_filter(s, f)) {
      throw Error(Errc::kInconsistent,
                  "ultrafilter criterion and maximality disagree on " + format_set(s, f.carrier()));
    }
    if (by_criterion) out.push_back(f);
  }
  return out;
}

std::optional<TightnessViolation> find_tightness_violation(const Semilattice& s, const Filter& f,
                                                           bool include_vacuous) {
  ElementSet outside = f.carrier().complement();
  outside.erase(s.zero());
  const auto candidates = outside.elements();
  if (candidates.size() > 24) {
    throw Error(Errc::kTooLarge, "tightness search over 2^" + std::to_string(candidates.size()) +
                                     " orthogonality sets");
  }
  const std::uint64_t subsets = std::uint64_t{1} << candidates.size();
  for (Element x : f.carrier().elements()) {
    const ElementSet below(s.size(), {x});
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      ElementSet ys(s.size());
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if ((mask >> i) & 1U) ys.insert(candidates[i]);
      }
      const auto region = constrained_set(s, below, ys);
      const bool vacuous = region.size() == 1;
      if (vacuous && !include_vacuous) continue;
      // Covers are closed under supersets inside the region, so the largest
      // candidate disjoint from F decides whether any such cover exists.
      const auto cover = region - f.carrier();
      if (is_cover(s, cover, below, ys)) {
        return TightnessViolation{x, ys, cover, vacuous};
      }
    }
  }
  return std::nullopt;
}

bool is_tight(const Semilattice& s, const ElementSet& candidate) {
  return is_tight(s, Filter::from_set(s, candidate));
}

std::vector<Filter> tight_filters(const Semilattice& s) {
  std::vector<Filter> out;
  for (const auto& f : enumerate_filters(s)) {
    if (is_tight(s, f)) out.push_back(f);
  }
  return out;
}

}  // namespace stonelat
