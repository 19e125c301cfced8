#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>

#include "stonelat/cantor.hpp"
#include "stonelat/classify.hpp"
#include "stonelat/error.hpp"
#include "stonelat/filters.hpp"
#include "stonelat/pathlat.hpp"
#include "stonelat/stone.hpp"
#include "stonelat/text_format.hpp"

namespace stonelat::cli {

namespace {

constexpr std::size_t kExhaustiveWarnSize = 12;

// Library errors split into bad input (2) and failed internal cross-checks (1).
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    if (e.code() == Errc::kTheoremViolation || e.code() == Errc::kInconsistent) {
      err << "violation: " << e.what() << '\n';
      return kViolation;
    }
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

const char* tf(bool v) { return v ? "true" : "false"; }

std::string join_filters(const Semilattice& s, const std::vector<Filter>& fs) {
  std::string out;
  for (const auto& f : fs) out += (out.empty() ? "" : " ") + format_set(s, f.carrier());
  return out.empty() ? "(none)" : out;
}

std::string join_labels(const Semilattice& s, const std::vector<Element>& es) {
  std::string out = "[";
  for (std::size_t i = 0; i < es.size(); ++i) out += (i ? ", " : "") + s.label(es[i]);
  return out + "]";
}

}  // namespace

int check_command(const std::string& file, ReportFormat format, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto s = read_semilattice_file(file);
    if (s.size() > kExhaustiveWarnSize) {
      err << "warning: " << s.size() << " elements; exhaustive checks are exponential above "
          << kExhaustiveWarnSize << '\n';
    }
    const auto filters = enumerate_filters(s);
    const auto ultra = enumerate_ultrafilters(s);
    const auto tight = tight_filters(s);
    const auto report = is_compactable_finite(s);

    if (format == ReportFormat::kKeyValue) {
      out << "elements=" << s.size() << '\n'
          << "filters=" << filters.size() << '\n'
          << "ultrafilters=" << ultra.size() << '\n'
          << "tight_filters=" << tight.size() << '\n'
          << format_kv(report);
      return kOk;
    }

    out << "elements: " << s.size() << " (zero " << s.label(s.zero()) << ", one " << s.label(s.one())
        << ")\n"
        << "filters: " << join_filters(s, filters) << '\n'
        << "ultrafilters: " << join_filters(s, ultra) << '\n'
        << "tight filters: " << join_filters(s, tight) << '\n';
    for (const auto& f : filters) {
      const auto v = find_tightness_violation(s, f);
      if (!v) continue;
      out << "not tight: " << format_set(s, f.carrier()) << " (X={" << s.label(v->below)
          << "}, Y=" << format_set(s, v->orthogonal_to) << ", cover " << format_set(s, v->cover) << ")\n";
      if (v->vacuous && !find_tightness_violation(s, f, false)) {
        out << "note: " << format_set(s, f.carrier())
            << " fails tightness only through a region E^{X,Y} = {0}, which the empty set covers\n";
      }
    }
    out << format_text(s, report);
    return kOk;
  });
}

int stone_command(const std::string& file, ReportFormat format, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto s = read_semilattice_file(file);
    if (s.size() > kExhaustiveWarnSize) {
      err << "warning: " << s.size() << " elements; exhaustive checks are exponential above "
          << kExhaustiveWarnSize << '\n';
    }
    const auto space = build_space(s);
    const auto algebra = clopen_algebra(space);
    const bool separative = kappa_injective(space);
    const bool dense = dense_check(space);

    if (format == ReportFormat::kKeyValue) {
      out << "points=" << space.point_count() << '\n'
          << "clopens=" << algebra.size() << '\n'
          << "separative=" << tf(separative) << '\n'
          << "dense_embedding=" << tf(dense) << '\n'
          << "finite_join_embedding=" << tf(finite_join_embedding(space)) << '\n';
      return kOk;
    }

    out << "points: " << space.point_count() << '\n';
    for (std::size_t p = 0; p < space.point_count(); ++p) {
      out << "  " << space.point_name(p) << " = " << format_set(s, space.points()[p].carrier()) << '\n';
    }
    out << "base:\n";
    for (Element e = 0; e < s.size(); ++e) {
      out << "  K_" << s.label(e) << " = " << space.format_points(space.base(e)) << '\n';
    }
    out << "clopens: " << algebra.size() << '\n'
        << "separative (kappa injective): " << (separative ? "yes" : "no") << '\n'
        << "dense embedding: " << (dense ? "yes" : "no") << '\n'
        << "decompositions:\n";
    for (const auto& c : algebra.elements()) {
      out << "  " << space.format_points(c) << " = ";
      if (auto parts = join_decomposition(space, c)) {
        out << "join " << join_labels(s, *parts) << '\n';
      } else {
        out << "undecomposable\n";
      }
    }
    return kOk;
  });
}

int catalog_command(const CatalogSpec& spec, ReportFormat format, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (spec.mode == CatalogSpec::Mode::kRandom && spec.max_size > kExhaustiveWarnSize) {
      err << "warning: exhaustive checks are exponential above " << kExhaustiveWarnSize << " elements\n";
    }
    const auto report = run_suite(spec);
    out << (format == ReportFormat::kKeyValue ? format_kv(report) : format_text(report));
    return report.ok() ? kOk : kViolation;
  });
}

int cantor_command(const std::string& alphabet, const std::string& expression,
                   const std::optional<std::string>& point, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const cantor::Alphabet a(alphabet);
    const auto value = cantor::eval(a, expression);
    out << cantor::render(value) << '\n';
    if (point) {
      out << "member " << *point << ": " << tf(cantor::membership(value, cantor::UPWord::parse(*point)))
          << '\n';
    }
    return kOk;
  });
}

int graph_command(const std::string& file, std::size_t depth, ReportFormat format, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    const auto g = read_graph_file(file);
    const auto missing = unreachable_vertices(g);
    if (!missing.empty()) {
      std::string list;
      for (const auto& v : missing) list += " " + v;
      err << "error: not rooted; no path to " << g.root << " from:" << list << '\n';
      return kInputError;
    }
    const bool zd_graph = zero_disjunctive_graph(g);
    const auto t = truncate(g, depth);
    const auto& s = t.lattice;

    std::size_t frontier = 0;
    for (Element e = 0; e < s.size(); ++e) frontier += t.on_frontier(e) ? 1 : 0;

    // Pairs 0 != f < e with f off the frontier.
    bool zd_interior = true;
    std::size_t pairs = 0, valid = 0;
    std::ostringstream table;
    for (Element e = 0; e < s.size(); ++e) {
      for (Element f = 0; f < s.size(); ++f) {
        if (t.is_zero(f) || !s.less(f, e) || t.on_frontier(f)) continue;
        ++pairs;
        auto w = descent_witness(t, e, f);
        auto targets = w;
        targets.push_back(f);
        const bool inside = std::all_of(w.begin(), w.end(), [&](Element x) {
          return x != s.zero() && s.leq(x, e) && s.orthogonal(x, f);
        });
        const bool ok = !w.empty() && inside && arrow(s, e, targets);
        valid += ok ? 1 : 0;
        bool witnessed = false;
        for (Element x = 0; x < s.size() && !witnessed; ++x) {
          witnessed = x != s.zero() && s.leq(x, e) && s.orthogonal(x, f);
        }
        zd_interior = zd_interior && witnessed;
        table << "  " << s.label(e) << " > " << s.label(f) << ": " << join_labels(s, w)
              << (ok ? "" : "  (does not trap)") << '\n';
      }
    }
    // Every vertex starts some walk shorter than the depth once depth >= |V|,
    // so only then can the truncation see every in-degree.
    const bool comparable = depth >= g.vertices.size();
    const bool verdicts_agree = !comparable || zd_interior == zd_graph;
    const bool witnesses_hold = !zd_graph || valid == pairs;

    if (format == ReportFormat::kKeyValue) {
      out << "rooted=true\n"
          << "zero_disjunctive_graph=" << tf(zd_graph) << '\n'
          << "pseudofinite_graph=" << tf(pseudofinite_graph(g)) << '\n'
          << "depth=" << depth << '\n'
          << "elements=" << s.size() << '\n'
          << "frontier=" << frontier << '\n'
          << "unambiguous=" << tf(is_unambiguous(s)) << '\n'
          << "zero_disjunctive_interior=" << tf(zd_interior) << '\n'
          << "witness_pairs=" << pairs << '\n'
          << "witness_valid=" << valid << '\n';
    } else {
      out << "rooted: yes\n"
          << "zero_disjunctive_graph: " << (zd_graph ? "yes" : "no") << '\n'
          << "pseudofinite_graph: yes (finite graph: every in-degree is finite)\n"
          << "truncation depth " << depth << ": " << s.size() << " elements, " << frontier
          << " on the frontier (excluded as lower elements below)\n"
          << "unambiguous: " << (is_unambiguous(s) ? "yes" : "no") << '\n'
          << "0-disjunctive away from frontier: " << (zd_interior ? "yes" : "no")
          << (comparable ? "" : " (depth below vertex count; not compared with the graph verdict)") << '\n'
          << "trapping witnesses (" << valid << "/" << pairs << " valid):\n"
          << table.str();
    }
    if (!verdicts_agree || !witnesses_hold) {
      err << "violation: graph-level and truncation-level verdicts disagree\n";
      return kViolation;
    }
    return kOk;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Filters, ultrafilters and Stone-type algebras of finite bounded meet semilattices"};
  app.require_subcommand(1);

  std::string report = "text";
  auto add_report = [&](CLI::App* sub) {
    sub->add_option("--report", report, "Output format")->check(CLI::IsMember({"text", "kv"}));
  };

  std::string file;
  auto* check = app.add_subcommand("check", "Classify a semilattice file");
  check->add_option("FILE", file, "Semilattice file")->required();
  add_report(check);

  auto* stone = app.add_subcommand("stone", "Report the ultrafilter space and clopen algebra");
  stone->add_option("FILE", file, "Semilattice file")->required();
  add_report(stone);

  CatalogSpec spec;
  std::size_t random = 0;
  auto* catalog = app.add_subcommand("catalog", "Verify every property on a catalog of semilattices");
  catalog->add_option("--max-size", spec.max_size, "Largest element count")->required();
  auto* random_opt = catalog->add_option("--random", random, "Number of random samples instead of exhaustive");
  catalog->add_option("--seed", spec.seed, "Random seed")->needs(random_opt);
  add_report(catalog);

  std::string alphabet, expression;
  std::optional<std::string> point;
  auto* cantor = app.add_subcommand("cantor", "Evaluate a clopen expression over Cantor space");
  cantor->add_option("--alphabet", alphabet, "Symbols, e.g. ab")->required();
  cantor->add_option("EXPR", expression, "Expression, e.g. '!(aa)'")->required();
  cantor->add_option("--point", point, "Ultimately periodic point u(v) to test for membership");

  std::size_t depth = 0;
  auto* graph = app.add_subcommand("graph", "Path semilattice of a rooted graph");
  graph->add_option("FILE", file, "Graph file")->required();
  graph->add_option("--depth", depth, "Truncation depth")->required();
  add_report(graph);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  const auto format = report == "kv" ? ReportFormat::kKeyValue : ReportFormat::kText;
  if (*check) return check_command(file, format, out, err);
  if (*stone) return stone_command(file, format, out, err);
  if (*catalog) {
    if (*random_opt) {
      spec.mode = CatalogSpec::Mode::kRandom;
      spec.sample_count = random;
    }
    return catalog_command(spec, format, out, err);
  }
  if (*cantor) return cantor_command(alphabet, expression, point, out, err);
  return graph_command(file, depth, format, out, err);
}

}  // namespace stonelat::cli
