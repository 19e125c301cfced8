#include "stonelat/catalog.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "stonelat/classify.hpp"
#include "stonelat/error.hpp"
#include "stonelat/filters.hpp"
#include "stonelat/stone.hpp"
#include "stonelat/text_format.hpp"

namespace stonelat {

namespace {

using Relation = std::vector<std::vector<bool>>;

// Bounded poset on k middle elements plus 0 and 1; nullopt when some pair
// lacks a meet.
std::optional<Semilattice> bounded_from_middle(const Relation& less) {
  const std::size_t k = less.size();
  std::vector<std::string> labels{"0"};
  for (std::size_t i = 0; i < k; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  labels.emplace_back("1");
  std::vector<std::pair<std::string, std::string>> pairs;
  if (k == 0) pairs.emplace_back("0", "1");
  for (std::size_t i = 0; i < k; ++i) {
    pairs.emplace_back("0", labels[i + 1]);
    pairs.emplace_back(labels[i + 1], "1");
    for (std::size_t j = 0; j < k; ++j) {
      if (less[i][j]) pairs.emplace_back(labels[i + 1], labels[j + 1]);
    }
  }
  try {
    return Semilattice::from_order(std::move(labels), pairs);
  } catch (const Error& e) {
    if (e.code() == Errc::kNoMeet) return std::nullopt;
    throw;
  }
}

void close_transitively(Relation& r) {
  const std::size_t k = r.size();
  for (std::size_t m = 0; m < k; ++m) {
    for (std::size_t i = 0; i < k; ++i) {
      if (!r[i][m]) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (r[m][j]) r[i][j] = true;
      }
    }
  }
}

// Strict relation with i < j only whenever bit (i, j) of `mask` is set.
Relation upper_relation(std::size_t k, std::uint64_t mask) {
  Relation r(k, std::vector<bool>(k, false));
  std::size_t bit = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j, ++bit) {
      if ((mask >> bit) & 1U) r[i][j] = true;
    }
  }
  close_transitively(r);
  return r;
}

std::vector<std::vector<Element>> combinations(std::size_t n, std::size_t max_len) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> cur;
  std::function<void(Element)> rec = [&](Element from) {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == max_len) return;
    for (Element e = from; e < n; ++e) {
      cur.push_back(e);
      rec(e + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

void validate(const CatalogSpec& spec) {
  if (spec.max_size < 2) throw Error(Errc::kTooSmall, "max_size must be at least 2");
  if (spec.mode == CatalogSpec::Mode::kExhaustive && spec.max_size > 7) {
    throw Error(Errc::kTooLarge, "exhaustive catalog is limited to 7 elements");
  }
  if (spec.mode == CatalogSpec::Mode::kRandom && spec.max_size > 12) {
    throw Error(Errc::kTooLarge, "random catalog is limited to 12 elements");
  }
}

std::string canonical_code(const Semilattice& s) {
  const std::size_t n = s.size();
  if (n > 10) throw Error(Errc::kTooLarge, "canonical code limited to 10 elements");
  std::vector<Element> middle;
  for (Element e = 0; e < n; ++e) {
    if (e != s.zero() && e != s.one()) middle.push_back(e);
  }
  std::string best;
  do {
    std::vector<Element> order{s.zero()};
    order.insert(order.end(), middle.begin(), middle.end());
    order.push_back(s.one());
    std::string code;
    code.reserve(n * n);
    for (Element i : order) {
      for (Element j : order) code.push_back(s.leq(i, j) ? '1' : '0');
    }
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(middle.begin(), middle.end()));
  return best;
}

std::vector<Semilattice> enumerate_catalog(const CatalogSpec& spec) {
  validate(spec);
  std::vector<Semilattice> out;
  if (spec.mode == CatalogSpec::Mode::kExhaustive) {
    for (std::size_t n = 2; n <= spec.max_size; ++n) {
      const std::size_t k = n - 2;
      const std::size_t bits = k == 0 ? 0 : k * (k - 1) / 2;
      std::map<std::string, Semilattice> classes;
      // Every finite poset has a linear extension, so orders compatible with
      // the index order already reach every isomorphism class.
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        auto s = bounded_from_middle(upper_relation(k, mask));
        if (!s) continue;
        auto code = canonical_code(*s);
        classes.try_emplace(std::move(code), std::move(*s));
      }
      for (auto& [code, s] : classes) out.push_back(std::move(s));
    }
    return out;
  }

  std::mt19937_64 rng(spec.seed);
  const std::size_t k = spec.max_size - 2;
  while (out.size() < spec.sample_count) {
    Relation r(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) r[i][j] = (rng() & 1U) != 0;
    }
    close_transitively(r);
    if (auto s = bounded_from_middle(r)) out.push_back(std::move(*s));
  }
  return out;
}

std::size_t VerificationReport::instance_count() const {
  std::size_t n = 0;
  for (const auto& [size, count] : instances_by_size) n += count;
  return n;
}

namespace {

using Check = std::function<bool(std::string&)>;

// Tallies one named property per call and records failures, including
// exceptions, as replayable counterexamples.
class Recorder {
 public:
  Recorder(const Semilattice& s, VerificationReport& report) : s_(s), report_(report) {}

  void operator()(const std::string& name, const Check& check) const {
    auto it = std::find_if(report_.properties.begin(), report_.properties.end(),
                           [&](const PropertyTally& t) { return t.name == name; });
    if (it == report_.properties.end()) {
      report_.properties.push_back({name, 0, 0});
      it = std::prev(report_.properties.end());
    }
    std::string detail;
    bool ok = false;
    try {
      ok = check(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    if (ok) {
      ++it->passed;
    } else {
      ++it->failed;
      report_.counterexamples.push_back({name, detail, to_text(s_)});
    }
  }

 private:
  const Semilattice& s_;
  VerificationReport& report_;
};

void verify_space_properties(const Semilattice& s, const Recorder& record) {
  const std::size_t n = s.size();
  const auto ultra = enumerate_ultrafilters(s);
  const auto space = build_space(s);
  const auto algebra = clopen_algebra(space);
  const bool zero_disjunctive = is_zero_disjunctive(s);
  const bool separative = is_separative(s);
  const bool trapping = satisfies_trapping(s);

  record("extend_to_ultrafilter", [&](std::string& why) {
    for (Element e = 0; e < n; ++e) {
      if (e == s.zero()) continue;
      const auto u = extend_to_ultrafilter(s, e);
      if (!u.contains(e) || std::find(ultra.begin(), ultra.end(), u) == ultra.end()) {
        why = "extension of " + s.label(e);
        return false;
      }
    }
    return true;
  });

  record("ultrafilters_are_tight", [&](std::string& why) {
    for (const auto& u : ultra) {
      if (!is_tight(s, u)) {
        why = format_set(s, u.carrier());
        return false;
      }
    }
    return true;
  });

  record("tight_equals_ultra", [&](std::string&) { return tight_filters(s) == ultra; });

  record("zero_disjunctive_iff_separative", [&](std::string&) { return zero_disjunctive == separative; });

  record("separative_iff_strict_k_monotone", [&](std::string&) {
    bool strict = true;
    for (Element e = 0; e < n; ++e) {
      for (Element f = 0; f < n; ++f) {
        if (e == s.zero() || !s.less(e, f)) continue;
        const auto& ke = space.base(e);
        const auto& kf = space.base(f);
        strict = strict && ke.subset_of(kf) && ke != kf;
      }
    }
    return strict == separative;
  });

  record("trapping_iff_separative", [&](std::string&) { return trapping == separative; });
  record("trapping_implies_zero_disjunctive", [&](std::string&) { return !trapping || zero_disjunctive; });
  record("munn_iff_zero_disjunctive", [&](std::string&) { return munn_condition(s) == zero_disjunctive; });

  const auto target_sets = combinations(n, 3);
  record("arrow_iff_base_cover", [&](std::string& why) {
    for (Element f = 0; f < n; ++f) {
      if (f == s.zero()) continue;
      for (const auto& es : target_sets) {
        PointSet cover = space.no_points();
        for (Element e : es) cover |= space.base(e);
        if (arrow(s, f, es) != space.base(f).subset_of(cover)) {
          why = "f=" + s.label(f);
          return false;
        }
      }
    }
    return true;
  });

  record("arrow_monotone", [&](std::string&) {
    for (Element f = 0; f < n; ++f) {
      if (f == s.zero()) continue;
      for (const auto& es : target_sets) {
        if (!arrow(s, f, es)) continue;
        for (Element g = 0; g < n; ++g) {
          auto more = es;
          more.push_back(g);
          if (!arrow(s, f, more)) return false;
        }
      }
    }
    return true;
  });

  record("base_inclusion_iff_arrow", [&](std::string&) {
    for (Element e = 0; e < n; ++e) {
      for (Element f = 0; f < n; ++f) {
        if (e == s.zero() || f == s.zero()) continue;
        const Element target[] = {f};
        if (space.base(e).subset_of(space.base(f)) != arrow(s, e, target)) return false;
      }
    }
    return true;
  });

  record("constrained_set_meet_reduction", [&](std::string&) {
    auto xs = combinations(n, 3);
    xs.emplace_back();
    auto ys = combinations(n, 2);
    ys.emplace_back();
    for (const auto& x : xs) {
      const auto xset = ElementSet::of(n, x);
      const ElementSet reduced(n, {meet_of(s, xset)});
      for (const auto& y : ys) {
        const auto yset = ElementSet::of(n, y);
        if (constrained_set(s, xset, yset) != constrained_set(s, reduced, yset)) return false;
      }
    }
    return true;
  });

  record("hausdorff", [&](std::string&) {
    for (std::size_t p = 0; p < space.point_count(); ++p) {
      for (std::size_t q = 0; q < space.point_count(); ++q) {
        if (p == q) continue;
        const auto [e, f] = hausdorff_witness(space, p, q);
        if (!space.base(e).contains(p) || !space.base(f).contains(q) ||
            space.base(e).intersects(space.base(f))) {
          return false;
        }
      }
    }
    return true;
  });

  record("finite_space_is_discrete", [&](std::string&) {
    return algebra.size() == (std::size_t{1} << space.point_count());
  });

  record("kappa_injective_iff_separative", [&](std::string&) {
    return kappa_injective(space) == separative;
  });

  record("every_clopen_is_a_finite_join", [&](std::string&) {
    return std::all_of(algebra.elements().begin(), algebra.elements().end(),
                       [&](const PointSet& c) { return join_decomposition(space, c).has_value(); });
  });

  record("finite_join_embedding_iff_separative", [&](std::string&) {
    return finite_join_embedding(space) == separative;
  });

  record("dense_iff_zero_disjunctive", [&](std::string&) { return dense_check(space) == zero_disjunctive; });

  record("representation_round_trip", [&](std::string&) {
    for (const auto& f : enumerate_filters(s)) {
      const auto theta = rep_of_filter(s, f.carrier());
      if (filter_of_rep(s, theta) != f || rep_of_filter(s, filter_of_rep(s, theta).carrier()) != theta) {
        return false;
      }
    }
    return true;
  });

  record("filterspace_nbhd_matches_subspace", [&](std::string& why) {
    for (Element e = 0; e < n; ++e) {
      if (e == s.zero()) continue;
      auto below = down(s, e).elements();
      for (const auto& pick : combinations(below.size(), 2)) {
        std::vector<Element> omitted;
        for (auto i : pick) omitted.push_back(below[i]);
        const auto nbhd = filterspace_nbhd(s, e, omitted);
        PointSet inside = space.no_points();
        for (std::size_t p = 0; p < space.point_count(); ++p) {
          if (std::find(nbhd.begin(), nbhd.end(), space.points()[p]) != nbhd.end()) inside.insert(p);
        }
        for (auto p : inside.elements()) {
          const Element i = nbhd_basic_element(s, space.points()[p], e, omitted);
          if (!space.base(i).contains(p) || !space.base(i).subset_of(inside)) {
            why = "e=" + s.label(e);
            return false;
          }
        }
      }
    }
    return true;
  });

  record("classification_report", [&](std::string&) {
    const auto r = is_compactable_finite(s);
    return r.tight_equals_ultra;
  });
}

}  // namespace

void verify_instance(const Semilattice& s, VerificationReport& report) {
  ++report.instances_by_size[s.size()];
  const std::size_t n = s.size();
  const Recorder record(s, report);

  record("semilattice_laws", [&](std::string&) { return satisfies_semilattice_laws(s); });

  record("filters_are_principal", [&](std::string&) {
    return n > 12 || enumerate_filters(s) == enumerate_filters_by_subsets(s);
  });

  try {
    verify_space_properties(s, record);
  } catch (const std::exception& e) {
    report.counterexamples.push_back({"space_construction", e.what(), to_text(s)});
  }
}


VerificationReport run_suite(const CatalogSpec& spec) {
  VerificationReport report;
  for (const auto& s : enumerate_catalog(spec)) verify_instance(s, report);
  return report;
}

std::string format_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "instances: " << r.instance_count() << '\n';
  for (const auto& [size, count] : r.instances_by_size) os << "  size " << size << ": " << count << '\n';
  os << "properties:\n";
  for (const auto& p : r.properties) {
    os << "  " << (p.failed == 0 ? "PASS " : "FAIL ") << p.name << " (" << p.passed << " passed, "
       << p.failed << " failed)\n";
  }
  os << "counterexamples: " << r.counterexamples.size() << '\n';
  for (const auto& c : r.counterexamples) {
    os << "# property: " << c.property;
    if (!c.detail.empty()) os << " (" << c.detail << ')';
    os << '\n' << c.instance;
  }
  return os.str();
}

std::string format_kv(const VerificationReport& r) {
  std::ostringstream os;
  os << "instances=" << r.instance_count() << '\n';
  for (const auto& [size, count] : r.instances_by_size) os << "instances.size" << size << '=' << count << '\n';
  for (const auto& p : r.properties) {
    os << "property." << p.name << ".passed=" << p.passed << '\n';
    os << "property." << p.name << ".failed=" << p.failed << '\n';
  }
  os << "counterexamples=" << r.counterexamples.size() << '\n';
  return os.str();
}

}  // namespace stonelat
