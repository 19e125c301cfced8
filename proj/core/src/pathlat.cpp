#include "stonelat/pathlat.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include "stonelat/error.hpp"

namespace stonelat {

namespace {

constexpr std::size_t kMaxWalks = 256;

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

void require_rooted(const RootedGraph& g) {
  const auto missing = unreachable_vertices(g);
  if (missing.empty()) return;
  std::string list;
  for (const auto& v : missing) list += (list.empty() ? "" : " ") + v;
  throw Error(Errc::kNotRooted, "no path to the root from: " + list);
}

}  // namespace

RootedGraph parse_graph(std::string_view text) {
  RootedGraph g;
  bool have_vertices = false, have_root = false;
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  auto fail = [&](const std::string& why) {
    throw Error(Errc::kParse, "line " + std::to_string(lineno) + ": " + why);
  };
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto toks = tokens(line);
    if (toks.empty()) continue;
    if (toks[0] == "vertices:") {
      if (have_vertices) fail("duplicate vertices line");
      g.vertices.assign(toks.begin() + 1, toks.end());
      have_vertices = true;
    } else if (toks[0] == "root:") {
      if (toks.size() != 2 || have_root) fail("expected a single 'root: <vertex>'");
      g.root = toks[1];
      have_root = true;
    } else if (toks[0] == "edge") {
      if (toks.size() != 4) fail("expected 'edge <id> <source> <target>'");
      const auto& id = toks[1];
      if (id == "0" || id == "1" || id.find_first_of(".<") != std::string::npos) {
        fail("reserved edge id '" + id + "'");
      }
      g.edges.push_back({toks[1], toks[2], toks[3]});
    } else {
      fail("unknown directive '" + toks[0] + "'");
    }
  }
  if (!have_vertices || g.vertices.empty()) throw Error(Errc::kParse, "missing 'vertices:' line");
  if (!have_root) throw Error(Errc::kParse, "missing 'root:' line");

  const std::set<std::string> vs(g.vertices.begin(), g.vertices.end());
  if (vs.size() != g.vertices.size()) throw Error(Errc::kParse, "duplicate vertex");
  if (!vs.contains(g.root)) throw Error(Errc::kUnknownLabel, "root " + g.root);
  std::set<std::string> ids;
  for (const auto& e : g.edges) {
    if (!ids.insert(e.id).second) throw Error(Errc::kParse, "duplicate edge id " + e.id);
    if (!vs.contains(e.source)) throw Error(Errc::kUnknownLabel, "vertex " + e.source);
    if (!vs.contains(e.target)) throw Error(Errc::kUnknownLabel, "vertex " + e.target);
  }
  return g;
}

RootedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kParse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::vector<std::string> unreachable_vertices(const RootedGraph& g) {
  std::set<std::string> reached{g.root};
  std::deque<std::string> queue{g.root};
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (const auto& e : g.edges) {
      if (e.target == v && reached.insert(e.source).second) queue.push_back(e.source);
    }
  }
  std::vector<std::string> out;
  for (const auto& v : g.vertices) {
    if (!reached.contains(v)) out.push_back(v);
  }
  return out;
}

std::size_t in_degree(const RootedGraph& g, const std::string& vertex) {
  return static_cast<std::size_t>(
      std::count_if(g.edges.begin(), g.edges.end(), [&](const auto& e) { return e.target == vertex; }));
}

bool zero_disjunctive_graph(const RootedGraph& g) {
  require_rooted(g);
  return std::all_of(g.vertices.begin(), g.vertices.end(), [&](const std::string& v) {
    const auto d = in_degree(g, v);
    return d == 0 || d >= 2;
  });
}

bool pseudofinite_graph(const RootedGraph& g) {
  require_rooted(g);
  return true;
}

PathSemilattice::PathSemilattice(Semilattice l, std::vector<std::vector<std::size_t>> w, std::size_t d)
    : lattice(std::move(l)), walks(std::move(w)), depth(d) {
  for (Element e = 0; e < walks.size(); ++e) {
    if (e != lattice.zero()) index_.emplace(walks[e], e);
  }
}

Element PathSemilattice::find_walk(const std::vector<std::size_t>& walk) const {
  auto it = index_.find(walk);
  if (it == index_.end()) throw Error(Errc::kInvalidIndex, "walk not in truncation");
  return it->second;
}

PathSemilattice truncate(const RootedGraph& g, std::size_t depth) {
  require_rooted(g);
  if (depth < 1) throw Error(Errc::kBadDepth, "depth must be at least 1");

  // Walks grow at their far end: the next edge must enter the vertex where
  // the current walk starts (seen from the root).
  std::vector<std::vector<std::size_t>> walks{{}};
  std::vector<std::string> ends{g.root};
  for (std::size_t begin = 0, len = 0; len < depth; ++len) {
    const std::size_t end = walks.size();
    for (std::size_t w = begin; w < end; ++w) {
      for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (g.edges[e].target != ends[w]) continue;
        if (walks.size() >= kMaxWalks) throw Error(Errc::kTooLarge, "truncation exceeds 256 walks");
        auto next = walks[w];
        next.push_back(e);
        walks.push_back(std::move(next));
        ends.push_back(g.edges[e].source);
      }
    }
    begin = end;
  }

  const bool short_ids = std::all_of(g.edges.begin(), g.edges.end(),
                                     [](const auto& e) { return e.id.size() == 1; });
  std::vector<std::string> labels{"0"};
  for (const auto& w : walks) {
    if (w.empty()) {
      labels.emplace_back("1");
      continue;
    }
    std::string l;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0 && !short_ids) l += '.';
      l += g.edges[w[i]].id;
    }
    labels.push_back(std::move(l));
  }

  const std::size_t n = walks.size() + 1;
  std::vector<std::vector<std::size_t>> by_element{{}};
  by_element.insert(by_element.end(), walks.begin(), walks.end());
  auto prefix_of = [](const std::vector<std::size_t>& p, const std::vector<std::size_t>& w) {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
  };
  std::vector<Element> table(n * n, 0);
  for (Element a = 1; a < n; ++a) {
    for (Element b = 1; b < n; ++b) {
      if (prefix_of(by_element[a], by_element[b])) {
        table[a * n + b] = b;
      } else if (prefix_of(by_element[b], by_element[a])) {
        table[a * n + b] = a;
      }
    }
  }

  return PathSemilattice(Semilattice::from_table(std::move(labels), std::move(table)),
                         std::move(by_element), depth);
}

std::size_t level(const Semilattice& s, Element e) {
  if (e == s.zero()) return kInfiniteLevel;
  return up(s, e).size();
}

bool is_unambiguous(const Semilattice& s) {
  for (Element e = 0; e < s.size(); ++e) {
    for (Element f = 0; f < s.size(); ++f) {
      if (s.orthogonal(e, f)) continue;
      if (!s.leq(e, f) && !s.leq(f, e)) return false;
    }
  }
  return true;
}

std::vector<Element> descent_witness(const PathSemilattice& p, Element e, Element f) {
  const auto& s = p.lattice;
  if (e >= s.size() || f >= s.size() || f == s.zero() || !s.less(f, e)) {
    throw Error(Errc::kBadPair, "descent witness needs 0 != f < e");
  }
  const auto& target = p.walks[f];
  std::vector<Element> out;
  for (std::size_t len = p.walks[e].size(); len < target.size(); ++len) {
    const Element here = p.find_walk({target.begin(), target.begin() + static_cast<std::ptrdiff_t>(len)});
    const Element next = p.find_walk({target.begin(), target.begin() + static_cast<std::ptrdiff_t>(len) + 1});
    for (Element c : covers_hat(s, here).elements()) {
      if (c != next && c != s.zero()) out.push_back(c);
    }
  }
  return out;
}

}  // namespace stonelat
