#include "stonelat/stone.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "stonelat/error.hpp"

namespace stonelat {

std::string UltrafilterSpace::point_name(std::size_t point) const {
  return "F_" + lattice_.label(points_.at(point).generator());
}

std::string UltrafilterSpace::format_points(const PointSet& p) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto i : p.elements()) {
    if (!first) os << ',';
    os << point_name(i);
    first = false;
  }
  os << '}';
  return os.str();
}

UltrafilterSpace build_space(const Semilattice& s) {
  auto points = enumerate_ultrafilters(s);
  std::vector<PointSet> base(s.size(), PointSet(points.size()));
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (Element e : points[p].carrier().elements()) base[e].insert(p);
  }
  if (!base[s.zero()].empty()) throw Error(Errc::kInconsistent, "K_0 is not empty");
  if (base[s.one()] != PointSet::full(points.size())) {
    throw Error(Errc::kInconsistent, "K_1 is not the whole space");
  }
  for (Element e = 0; e < s.size(); ++e) {
    for (Element f = 0; f < s.size(); ++f) {
      if (base[s.meet(e, f)] != (base[e] & base[f])) {
        throw Error(Errc::kInconsistent, "K_{e∧f} != K_e ∩ K_f at " + s.label(e) + " " + s.label(f));
      }
    }
  }
  return UltrafilterSpace(s, std::move(points), std::move(base));
}

std::pair<Element, Element> hausdorff_witness(const UltrafilterSpace& space, std::size_t first,
                                              std::size_t second) {
  const auto& pts = space.points();
  if (first >= pts.size() || second >= pts.size()) {
    throw Error(Errc::kInvalidIndex, "point index out of range");
  }
  if (first == second) throw Error(Errc::kSamePoint, space.point_name(first));
  const auto& s = space.semilattice();
  const auto& f = pts[first];
  const auto& g = pts[second];
  const auto only_f = (f.carrier() - g.carrier()).elements();
  if (only_f.empty()) throw Error(Errc::kInconsistent, "distinct ultrafilters are nested");
  const Element e = only_f.front();
  for (Element h : g.carrier().elements()) {
    if (s.orthogonal(e, h)) {
      if (space.base(e).intersects(space.base(h))) {
        throw Error(Errc::kInconsistent, "Hausdorff witness sets overlap");
      }
      return {e, h};
    }
  }
  throw Error(Errc::kInconsistent, "ultrafilter criterion failed for " + space.point_name(second));
}

std::vector<PointSet> opens(const UltrafilterSpace& space) {
  if (space.point_count() > 16) {
    throw Error(Errc::kTooLarge, "open-set enumeration limited to 16 points");
  }
  const auto& s = space.semilattice();
  std::set<PointSet> seen{space.no_points()};
  std::vector<PointSet> frontier{space.no_points()};
  while (!frontier.empty()) {
    std::vector<PointSet> next;
    for (const auto& u : frontier) {
      for (Element e = 0; e < s.size(); ++e) {
        auto v = u | space.base(e);
        if (seen.insert(v).second) next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

ClopenAlgebra::ClopenAlgebra(const UltrafilterSpace& space) : points_(space.point_count()) {
  const auto open = opens(space);
  const std::set<PointSet> open_set(open.begin(), open.end());
  for (const auto& u : open) {
    if (open_set.contains(u.complement())) elements_.push_back(u);
  }
}

bool ClopenAlgebra::contains(const PointSet& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool kappa_injective(const UltrafilterSpace& space) {
  const auto& s = space.semilattice();
  std::set<PointSet> images;
  for (Element e = 0; e < s.size(); ++e) images.insert(space.base(e));
  return images.size() == s.size();
}

std::optional<std::vector<Element>> join_decomposition(const UltrafilterSpace& space,
                                                       const PointSet& clopen) {
  const auto& s = space.semilattice();
  std::vector<Element> parts;
  PointSet covered = space.no_points();
  for (Element e = 0; e < s.size(); ++e) {
    if (e == s.zero() || !space.base(e).subset_of(clopen)) continue;
    if (clopen.empty()) continue;
    parts.push_back(e);
    covered |= space.base(e);
  }
  if (covered != clopen) return std::nullopt;
  return parts;
}

bool finite_join_embedding(const UltrafilterSpace& space) {
  if (!kappa_injective(space)) return false;
  const ClopenAlgebra algebra(space);
  for (const auto& c : algebra.elements()) {
    if (!join_decomposition(space, c)) return false;
  }
  return true;
}

bool base_is_dense(const UltrafilterSpace& space) {
  const auto& s = space.semilattice();
  const ClopenAlgebra algebra(space);
  for (const auto& c : algebra.elements()) {
    if (c.empty()) continue;
    bool found = false;
    for (Element e = 0; e < s.size() && !found; ++e) {
      found = e != s.zero() && !space.base(e).empty() && space.base(e).subset_of(c);
    }
    if (!found) return false;
  }
  return true;
}

bool dense_check(const UltrafilterSpace& space) {
  return kappa_injective(space) && base_is_dense(space);
}

bool is_representation(const Semilattice& s, const Representation& theta) {
  if (theta.values.size() != s.size()) return false;
  if (theta.values[s.zero()] || !theta.values[s.one()]) return false;
  for (Element e = 0; e < s.size(); ++e) {
    for (Element f = 0; f < s.size(); ++f) {
      if (theta.values[s.meet(e, f)] != (theta.values[e] && theta.values[f])) return false;
    }
  }
  return true;
}

Representation rep_of_filter(const Semilattice& s, const ElementSet& filter) {
  if (!is_filter(s, filter)) throw Error(Errc::kNotAFilter, format_set(s, filter));
  Representation theta{std::vector<bool>(s.size(), false)};
  for (Element e : filter.elements()) theta.values[e] = true;
  return theta;
}

Filter filter_of_rep(const Semilattice& s, const Representation& theta) {
  if (!is_representation(s, theta)) throw Error(Errc::kNotARepresentation, "θ is not a representation");
  ElementSet carrier(s.size());
  for (Element e = 0; e < s.size(); ++e) {
    if (theta.values[e]) carrier.insert(e);
  }
  return Filter::from_set(s, carrier);
}

std::vector<Filter> filterspace_nbhd(const Semilattice& s, Element e,
                                     std::span<const Element> omitted) {
  if (e >= s.size()) throw Error(Errc::kInvalidIndex, std::to_string(e));
  for (Element o : omitted) {
    if (o >= s.size()) throw Error(Errc::kInvalidIndex, std::to_string(o));
    if (!s.leq(o, e)) throw Error(Errc::kBadBasis, s.label(o) + " is not below " + s.label(e));
  }
  std::vector<Filter> out;
  for (const auto& f : enumerate_filters(s)) {
    if (!f.contains(e)) continue;
    if (std::any_of(omitted.begin(), omitted.end(), [&](Element o) { return f.contains(o); })) continue;
    out.push_back(f);
  }
  return out;
}

Element nbhd_basic_element(const Semilattice& s, const Filter& ultrafilter, Element e,
                           std::span<const Element> omitted) {
  if (!ultrafilter.contains(e)) throw Error(Errc::kBadBasis, "ultrafilter does not contain e");
  Element i = e;
  const auto members = ultrafilter.carrier().elements();
  for (Element o : omitted) {
    auto it = std::find_if(members.begin(), members.end(),
                           [&](Element m) { return s.orthogonal(m, o); });
    if (it == members.end()) {
      throw Error(Errc::kBadBasis, "no member orthogonal to " + s.label(o) + "; not an ultrafilter in the set");
    }
    i = s.meet(i, *it);
  }
  return i;
}

std::string FiniteBooleanAlgebra::format(const ElementSet& x) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto a : x.elements()) {
    if (!first) os << ',';
    os << atoms.at(a);
    first = false;
  }
  os << '}';
  return os.str();
}

const ElementSet& BooleanExtension::operator()(const PointSet& clopen) const {
  for (const auto& [c, image] : table_) {
    if (c == clopen) return image;
  }
  throw Error(Errc::kInvalidIndex, "not a clopen of this space");
}

BooleanExtension extend_hom(const Semilattice& s, const FiniteBooleanAlgebra& b,
                            const std::vector<ElementSet>& alpha) {
  if (alpha.size() != s.size()) throw Error(Errc::kNotAHomomorphism, "α must map every element");
  for (const auto& v : alpha) {
    if (v.universe() != b.atom_count()) throw Error(Errc::kNotAHomomorphism, "α value outside B");
  }
  if (!alpha[s.zero()].empty()) throw Error(Errc::kNotAHomomorphism, "α(0) != 0");
  if (alpha[s.one()] != b.top()) throw Error(Errc::kNotAHomomorphism, "α(1) != 1");
  for (Element e = 0; e < s.size(); ++e) {
    for (Element f = 0; f < s.size(); ++f) {
      if (alpha[s.meet(e, f)] != (alpha[e] & alpha[f])) {
        throw Error(Errc::kNotAHomomorphism, "α does not preserve " + s.label(e) + " ∧ " + s.label(f));
      }
    }
  }

  const auto space = build_space(s);
  if (!kappa_injective(space)) throw Error(Errc::kPreconditionFailed, "E is not separative");

  // Ultrafilters of a finite powerset algebra are the principal ones at atoms.
  std::vector<std::size_t> pullback_point(b.atom_count());
  for (std::size_t p = 0; p < b.atom_count(); ++p) {
    ElementSet pre(s.size());
    for (Element e = 0; e < s.size(); ++e) {
      if (alpha[e].contains(p)) pre.insert(e);
    }
    if (!is_filter(s, pre) || !is_ultrafilter(s, pre)) {
      throw Error(Errc::kPreconditionFailed, "pullback of the ultrafilter at " + b.atoms[p] + " is " +
                                                 format_set(s, pre) + ", not an ultrafilter");
    }
    const auto& pts = space.points();
    pullback_point[p] = static_cast<std::size_t>(
        std::find(pts.begin(), pts.end(), Filter::from_set(s, pre)) - pts.begin());
  }

  const ClopenAlgebra algebra(space);
  BooleanExtension beta;
  for (const auto& c : algebra.elements()) {
    const auto parts = join_decomposition(space, c);
    if (!parts) throw Error(Errc::kPreconditionFailed, "clopen " + space.format_points(c) + " is not a finite join");
    ElementSet image = b.bottom();
    for (Element e : *parts) image |= alpha[e];

    // Second decomposition, through the generators of the points of C.
    ElementSet via_points = b.bottom();
    for (auto p : c.elements()) via_points |= alpha[space.points()[p].generator()];
    ElementSet pointwise = b.bottom();
    for (std::size_t p = 0; p < b.atom_count(); ++p) {
      if (c.contains(pullback_point[p])) pointwise.insert(p);
    }
    if (image != via_points || image != pointwise) {
      throw Error(Errc::kInconsistent, "extension depends on the decomposition of " + space.format_points(c));
    }
    beta.table_.emplace_back(c, std::move(image));
  }

  const auto& tab = beta.table_;
  if (beta(algebra.bottom()) != b.bottom() || beta(algebra.top()) != b.top()) {
    throw Error(Errc::kInconsistent, "β does not preserve bounds");
  }
  for (const auto& [c, bc] : tab) {
    if (beta(algebra.complement(c)) != bc.complement()) {
      throw Error(Errc::kInconsistent, "β does not preserve complement");
    }
    for (const auto& [d, bd] : tab) {
      if (beta(c & d) != (bc & bd) || beta(c | d) != (bc | bd)) {
        throw Error(Errc::kInconsistent, "β does not preserve meets and joins");
      }
    }
  }
  for (Element e = 0; e < s.size(); ++e) {
    if (beta(space.base(e)) != alpha[e]) throw Error(Errc::kInconsistent, "βκ != α");
  }
  return beta;
}

}  // namespace stonelat
