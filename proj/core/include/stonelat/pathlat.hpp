#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "stonelat/semilattice.hpp"

namespace stonelat {

/// Directed multigraph with a distinguished root. Edges are identified by id,
/// so loops and parallel edges are ordinary.
struct RootedGraph {
  struct Edge {
    std::string id;
    std::string source;
    std::string target;
  };
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::string root;
};

/// Format:
///   vertices: t v ...
///   root: t
///   edge <id> <source> <target>
/// Edge ids may not be `0` or `1` (reserved for the bounds of the path
/// semilattice) and may not contain `.`, `<` or `#`.
RootedGraph parse_graph(std::string_view text);
RootedGraph read_graph_file(const std::string& path);

/// Vertices with no path to the root.
std::vector<std::string> unreachable_vertices(const RootedGraph& g);
inline bool validate_rooted(const RootedGraph& g) { return unreachable_vertices(g).empty(); }

std::size_t in_degree(const RootedGraph& g, const std::string& vertex);

/// Every in-degree is zero or at least two. Throws NotRooted.
bool zero_disjunctive_graph(const RootedGraph& g);
/// Every in-degree is finite; always true for a finite graph. Throws NotRooted.
bool pseudofinite_graph(const RootedGraph& g);

/// Finite slice of the prefix-order semilattice of backward walks from the
/// root: walks of length at most `depth`, the empty walk as top, and an
/// adjoined zero. Element 0 is zero, element 1 is the empty walk, the rest
/// follow by length and then edge order.
struct PathSemilattice {
  Semilattice lattice;
  /// Edge indices of each element's walk, first edge entering the root.
  /// Empty for both the top and the zero.
  std::vector<std::vector<std::size_t>> walks;
  std::size_t depth = 0;

  bool is_zero(Element e) const { return e == lattice.zero(); }
  std::size_t length(Element e) const { return walks.at(e).size(); }
  /// Elements whose walks have the maximal length; their down-sets are cut
  /// off by the truncation.
  bool on_frontier(Element e) const { return !is_zero(e) && length(e) == depth; }
  Element find_walk(const std::vector<std::size_t>& walk) const;

 private:
  friend PathSemilattice truncate(const RootedGraph& g, std::size_t depth);
  PathSemilattice(Semilattice l, std::vector<std::vector<std::size_t>> w, std::size_t d);
  std::map<std::vector<std::size_t>, Element> index_;
};

/// Throws NotRooted, BadDepth (depth < 1), TooLarge (more than 256 walks).
PathSemilattice truncate(const RootedGraph& g, std::size_t depth);

inline constexpr std::size_t kInfiniteLevel = std::numeric_limits<std::size_t>::max();

/// |e↑| for e ≠ 0; kInfiniteLevel for zero.
std::size_t level(const Semilattice& s, Element e);

/// Non-orthogonal non-zero elements are comparable.
bool is_unambiguous(const Semilattice& s);

/// Witness for the trapping condition at 0 ≠ f < e, built by walking from e
/// down to f one edge at a time and collecting, at each step, the other
/// covers of the current walk. Throws BadPair.
std::vector<Element> descent_witness(const PathSemilattice& p, Element e, Element f);

}  // namespace stonelat
