#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stonelat/filters.hpp"

namespace stonelat {

/// Point sets of an ultrafilter space use the same bitset type as element
/// sets, over point indices.
using PointSet = ElementSet;

/// The ultrafilter space U(E) together with its base K_e = {F : e ∈ F}.
class UltrafilterSpace {
 public:
  const Semilattice& semilattice() const noexcept { return lattice_; }
  const std::vector<Filter>& points() const noexcept { return points_; }
  std::size_t point_count() const noexcept { return points_.size(); }
  const PointSet& base(Element e) const { return base_.at(e); }
  PointSet all_points() const { return PointSet::full(points_.size()); }
  PointSet no_points() const { return PointSet(points_.size()); }
  /// "F_<generator label>".
  std::string point_name(std::size_t point) const;
  std::string format_points(const PointSet& p) const;

 private:
  friend UltrafilterSpace build_space(const Semilattice& s);
  UltrafilterSpace(Semilattice s, std::vector<Filter> points, std::vector<PointSet> base)
      : lattice_(std::move(s)), points_(std::move(points)), base_(std::move(base)) {}

  Semilattice lattice_;
  std::vector<Filter> points_;
  std::vector<PointSet> base_;
};

/// Enumerates the ultrafilters, computes the base and checks K_0 = ∅,
/// K_1 = U(E) and K_{e∧f} = K_e ∩ K_f (Inconsistent on failure).
UltrafilterSpace build_space(const Semilattice& s);

/// For distinct points F, G: (e, f) with F ∈ K_e, G ∈ K_f and K_e ∩ K_f = ∅.
/// e is the first element of F ∖ G, f the first element of G orthogonal to e.
std::pair<Element, Element> hausdorff_witness(const UltrafilterSpace& space, std::size_t first,
                                              std::size_t second);

/// Every union of base sets, sorted. Throws TooLarge above 16 points.
std::vector<PointSet> opens(const UltrafilterSpace& space);

/// The Boolean algebra of clopen point sets.
class ClopenAlgebra {
 public:
  explicit ClopenAlgebra(const UltrafilterSpace& space);

  const std::vector<PointSet>& elements() const& noexcept { return elements_; }
  std::vector<PointSet> elements() && { return std::move(elements_); }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(const PointSet& p) const;

  PointSet top() const { return PointSet::full(points_); }
  PointSet bottom() const { return PointSet(points_); }
  PointSet meet(const PointSet& a, const PointSet& b) const { return a & b; }
  PointSet join(const PointSet& a, const PointSet& b) const { return a | b; }
  PointSet complement(const PointSet& a) const { return a.complement(); }

 private:
  std::size_t points_ = 0;
  std::vector<PointSet> elements_;
};

inline ClopenAlgebra clopen_algebra(const UltrafilterSpace& space) { return ClopenAlgebra(space); }

/// κ(e) = K_e.
inline const PointSet& kappa(const UltrafilterSpace& space, Element e) { return space.base(e); }
bool kappa_injective(const UltrafilterSpace& space);

/// Non-zero elements e with K_e ⊆ C, if their base sets cover C; empty for
/// the empty clopen. nullopt when C is not such a finite join.
std::optional<std::vector<Element>> join_decomposition(const UltrafilterSpace& space,
                                                       const PointSet& clopen);

/// Whether κ is an embedding (injective) through which every clopen is a
/// finite join of elements of E.
bool finite_join_embedding(const UltrafilterSpace& space);

/// Whether every non-empty clopen contains a non-empty K_e, ignoring whether
/// κ is injective.
bool base_is_dense(const UltrafilterSpace& space);

/// Whether κ is a dense embedding: injective, and base_is_dense().
bool dense_check(const UltrafilterSpace& space);

/// A map E → {0,1} with θ(0) = 0, θ(1) = 1 and θ(e∧f) = θ(e)θ(f).
struct Representation {
  std::vector<bool> values;
  friend bool operator==(const Representation&, const Representation&) = default;
};

bool is_representation(const Semilattice& s, const Representation& theta);
/// Characteristic function of a filter; throws NotAFilter.
Representation rep_of_filter(const Semilattice& s, const ElementSet& filter);
/// θ⁻¹(1); throws NotARepresentation.
Filter filter_of_rep(const Semilattice& s, const Representation& theta);

/// Filters containing e and omitting each listed element; the basic open set
/// of the filter space. Throws BadBasis unless every omitted element is ≤ e.
std::vector<Filter> filterspace_nbhd(const Semilattice& s, Element e,
                                     std::span<const Element> omitted);

/// For an ultrafilter F inside filterspace_nbhd(e, omitted): i = e ∧ f₁ ∧ … ∧ f_m
/// where f_j is the first member of F orthogonal to the j-th omitted element.
/// Every ultrafilter in K_i lies in the neighbourhood.
Element nbhd_basic_element(const Semilattice& s, const Filter& ultrafilter, Element e,
                           std::span<const Element> omitted);

/// Powerset Boolean algebra on a finite set of atoms; values are subsets of
/// atom indices.
struct FiniteBooleanAlgebra {
  std::vector<std::string> atoms;

  std::size_t atom_count() const noexcept { return atoms.size(); }
  ElementSet top() const { return ElementSet::full(atoms.size()); }
  ElementSet bottom() const { return ElementSet(atoms.size()); }
  std::string format(const ElementSet& x) const;
};

/// β : 𝔅(E) → B with β(K_e) = α(e), tabulated on every clopen.
class BooleanExtension {
 public:
  const ElementSet& operator()(const PointSet& clopen) const;
  const std::vector<std::pair<PointSet, ElementSet>>& table() const noexcept { return table_; }

 private:
  friend BooleanExtension extend_hom(const Semilattice& s, const FiniteBooleanAlgebra& b,
                                     const std::vector<ElementSet>& alpha);
  std::vector<std::pair<PointSet, ElementSet>> table_;
};

/// Extends a bounded-semilattice homomorphism α : E → B (indexed by element)
/// along κ. Requires E separative and every ultrafilter of B to pull back to
/// an ultrafilter of E (PreconditionFailed), and α to preserve 0, 1 and meets
/// (NotAHomomorphism). The result is computed through join decompositions and
/// checked against the point-level construction {p : α⁻¹(U_p) ∈ C}, against
/// a second decomposition, and for preservation of the Boolean operations.
BooleanExtension extend_hom(const Semilattice& s, const FiniteBooleanAlgebra& b,
                            const std::vector<ElementSet>& alpha);

}  // namespace stonelat
