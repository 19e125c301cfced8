#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stonelat/semilattice.hpp"

namespace stonelat {

/// For all 0 ≠ e < f some non-zero e′ ≤ f is orthogonal to e.
bool is_zero_disjunctive(const Semilattice& s);

/// e ↦ K_e is injective.
bool is_separative(const Semilattice& s);

/// For all e ≠ f some g meets exactly one of them.
bool munn_condition(const Semilattice& s);

/// For 0 ≠ f < e: W = (e↓ ∩ f∗) ∖ {0} when W is non-empty and e → (W, f).
/// Arrow is monotone in its targets, so the maximal W decides the question.
/// nullopt means the pair is not trapped. Throws BadPair otherwise.
std::optional<std::vector<Element>> trapping_witness(const Semilattice& s, Element e, Element f);

bool satisfies_trapping(const Semilattice& s);

struct Witness {
  std::string property;
  Element upper;
  Element lower;
  /// Witness elements; empty with `holds == false` marks a counterexample.
  std::vector<Element> elements;
  bool holds;
};

struct ClassificationReport {
  bool zero_disjunctive = false;
  bool separative = false;
  bool munn = false;
  bool trapping = false;
  bool tight_equals_ultra = false;
  std::vector<Witness> witnesses;
};

/// Runs every classification and the finite-case cross-checks:
/// zero_disjunctive = separative = trapping (Inconsistent otherwise) and
/// tight filters = ultrafilters (TheoremViolation, naming the filter).
ClassificationReport is_compactable_finite(const Semilattice& s);

/// `property=true|false` lines.
std::string format_kv(const ClassificationReport& r);
/// Human-readable rendering including witness lines.
std::string format_text(const Semilattice& s, const ClassificationReport& r);

}  // namespace stonelat
