#include "stonelat/classify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "stonelat/error.hpp"
#include "stonelat/filters.hpp"
#include "stonelat/stone.hpp"

namespace stonelat {

namespace {

std::optional<Element> zero_disjunctive_witness(const Semilattice& s, Element e, Element f) {
  for (Element g = 0; g < s.size(); ++g) {
    if (g != s.zero() && s.leq(g, f) && s.orthogonal(e, g)) return g;
  }
  return std::nullopt;
}

bool nonzero_strict_pair(const Semilattice& s, Element lower, Element upper) {
  return lower != s.zero() && upper != s.zero() && s.less(lower, upper);
}

}  // namespace

bool is_zero_disjunctive(const Semilattice& s) {
  for (Element e = 0; e < s.size(); ++e) {
    for (Element f = 0; f < s.size(); ++f) {
      if (nonzero_strict_pair(s, e, f) && !zero_disjunctive_witness(s, e, f)) return false;
    }
  }
  return true;
}

bool is_separative(const Semilattice& s) { return kappa_injective(build_space(s)); }

bool munn_condition(const Semilattice& s) {
  for (Element e = 0; e < s.size(); ++e) {
    for (Element f = e + 1; f < s.size(); ++f) {
      bool separated = false;
      for (Element g = 0; g < s.size() && !separated; ++g) {
        separated = s.orthogonal(e, g) != s.orthogonal(f, g);
      }
      if (!separated) return false;
    }
  }
  return true;
}

std::optional<std::vector<Element>> trapping_witness(const Semilattice& s, Element e, Element f) {
  if (e >= s.size() || f >= s.size() || !nonzero_strict_pair(s, f, e)) {
    throw Error(Errc::kBadPair, "trapping needs 0 != f < e");
  }
  ElementSet w = down(s, e) & star(s, f);
  w.erase(s.zero());
  if (w.empty()) return std::nullopt;
  auto targets = w.elements();
  targets.push_back(f);
  if (!arrow(s, e, targets)) return std::nullopt;
  targets.pop_back();
  return targets;
}

bool satisfies_trapping(const Semilattice& s) {
  for (Element e = 0; e < s.size(); ++e) {
    for (Element f = 0; f < s.size(); ++f) {
      if (nonzero_strict_pair(s, f, e) && !trapping_witness(s, e, f)) return false;
    }
  }
  return true;
}

ClassificationReport is_compactable_finite(const Semilattice& s) {
  ClassificationReport r;
  r.zero_disjunctive = is_zero_disjunctive(s);
  r.separative = is_separative(s);
  r.munn = munn_condition(s);
  r.trapping = satisfies_trapping(s);

  for (Element e = 0; e < s.size(); ++e) {
    for (Element f = 0; f < s.size(); ++f) {
      if (!nonzero_strict_pair(s, f, e)) continue;
      if (auto g = zero_disjunctive_witness(s, f, e)) {
        r.witnesses.push_back({"zero_disjunctive", e, f, {*g}, true});
      } else {
        r.witnesses.push_back({"zero_disjunctive", e, f, {}, false});
      }
      if (auto w = trapping_witness(s, e, f)) {
        r.witnesses.push_back({"trapping", e, f, *w, true});
      } else {
        r.witnesses.push_back({"trapping", e, f, {}, false});
      }
    }
  }

  if (r.zero_disjunctive != r.separative || r.trapping != r.separative) {
    std::ostringstream os;
    os << "zero_disjunctive=" << r.zero_disjunctive << " separative=" << r.separative
       << " trapping=" << r.trapping;
    throw Error(Errc::kInconsistent, os.str());
  }

  const auto ultra = enumerate_ultrafilters(s);
  const auto tight = tight_filters(s);
  r.tight_equals_ultra = ultra == tight;
  if (!r.tight_equals_ultra) {
    for (const auto& f : tight) {
      if (std::find(ultra.begin(), ultra.end(), f) == ultra.end()) {
        throw Error(Errc::kTheoremViolation,
                    "tight filter " + format_set(s, f.carrier()) + " is not an ultrafilter");
      }
    }
    for (const auto& f : ultra) {
      if (std::find(tight.begin(), tight.end(), f) == tight.end()) {
        throw Error(Errc::kTheoremViolation,
                    "ultrafilter " + format_set(s, f.carrier()) + " is not tight");
      }
    }
  }
  return r;
}

std::string format_kv(const ClassificationReport& r) {
  std::ostringstream os;
  auto b = [](bool v) { return v ? "true" : "false"; };
  os << "zero_disjunctive=" << b(r.zero_disjunctive) << '\n'
     << "separative=" << b(r.separative) << '\n'
     << "munn=" << b(r.munn) << '\n'
     << "trapping=" << b(r.trapping) << '\n'
     << "tight_equals_ultra=" << b(r.tight_equals_ultra) << '\n';
  return os.str();
}

std::string format_text(const Semilattice& s, const ClassificationReport& r) {
  std::ostringstream os;
  auto yes = [](bool v) { return v ? "yes" : "no"; };
  os << "0-disjunctive:        " << yes(r.zero_disjunctive) << '\n'
     << "separative:           " << yes(r.separative) << '\n'
     << "Munn condition:       " << yes(r.munn) << '\n'
     << "trapping:             " << yes(r.trapping) << '\n'
     << "tight = ultrafilters: " << yes(r.tight_equals_ultra) << '\n';
  if (!r.witnesses.empty()) os << "witnesses:\n";
  for (const auto& w : r.witnesses) {
    os << "  " << w.property << " (" << s.label(w.upper) << ", " << s.label(w.lower) << "): ";
    if (!w.holds) {
      os << "none\n";
      continue;
    }
    os << '[';
    for (std::size_t i = 0; i < w.elements.size(); ++i) {
      if (i) os << ", ";
      os << s.label(w.elements[i]);
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace stonelat
