#include <gtest/gtest.h>

#include "stonelat/classify.hpp"
#include "stonelat/pathlat.hpp"
#include "support/errors.hpp"
#include "support/fixtures.hpp"

using namespace stonelat;
using fixtures::el;
using fixtures::error_of;
using fixtures::set;

namespace {

RootedGraph binary_tree() {
  // Two parallel edges into each vertex.
  return parse_graph(
      "vertices: t u v\nroot: t\n"
      "edge p u t\nedge q u t\nedge r v u\nedge s v u\nedge x t v\nedge y t v\n");
}

TEST(Graph, ParsingAndRootedness) {
  EXPECT_TRUE(validate_rooted(fixtures::two_loops()));
  EXPECT_TRUE(validate_rooted(fixtures::single_edge()));
  auto isolated = parse_graph("vertices: t v w\nroot: t\nedge x v t\n");
  EXPECT_FALSE(validate_rooted(isolated));
  EXPECT_EQ(unreachable_vertices(isolated), (std::vector<std::string>{"w"}));
  EXPECT_EQ(error_of([&] { zero_disjunctive_graph(isolated); }), Errc::kNotRooted);
  EXPECT_EQ(error_of([&] { truncate(isolated, 1); }), Errc::kNotRooted);

  EXPECT_EQ(error_of([] { parse_graph("vertices: t\nroot: t\nedge 0 t t\n"); }), Errc::kParse);
  EXPECT_EQ(error_of([] { parse_graph("vertices: t\nroot: t\nedge a.b t t\n"); }), Errc::kParse);
  EXPECT_EQ(error_of([] { parse_graph("vertices: t\nroot: z\n"); }), Errc::kUnknownLabel);
  EXPECT_EQ(error_of([] { parse_graph("vertices: t\nroot: t\nedge a t q\n"); }), Errc::kUnknownLabel);
  EXPECT_EQ(error_of([] { parse_graph("vertices: t\nroot: t\nedge a t t\nedge a t t\n"); }), Errc::kParse);
  EXPECT_EQ(in_degree(fixtures::two_loops(), "t"), 2U);
}

TEST(Graph, Criteria) {
  EXPECT_TRUE(zero_disjunctive_graph(fixtures::two_loops()));
  EXPECT_FALSE(zero_disjunctive_graph(fixtures::single_edge()));
  EXPECT_TRUE(zero_disjunctive_graph(binary_tree()));
  EXPECT_TRUE(pseudofinite_graph(fixtures::two_loops()));
  EXPECT_TRUE(pseudofinite_graph(fixtures::single_edge()));
  EXPECT_TRUE(pseudofinite_graph(binary_tree()));
}

TEST(Truncate, Examples) {
  auto d1 = truncate(fixtures::two_loops(), 1);
  EXPECT_TRUE(isomorphic(d1.lattice, fixtures::vee()));
  auto d2 = truncate(fixtures::two_loops(), 2);
  EXPECT_EQ(d2.lattice.size(), 8U);
  for (const auto* l : {"1", "a", "b", "aa", "ab", "ba", "bb"}) EXPECT_TRUE(d2.lattice.find(l)) << l;
  EXPECT_TRUE(isomorphic(truncate(fixtures::single_edge(), 1).lattice, fixtures::chain3()));
  EXPECT_EQ(error_of([] { truncate(fixtures::two_loops(), 0); }), Errc::kBadDepth);
  EXPECT_EQ(error_of([] { truncate(fixtures::two_loops(), 8); }), Errc::kTooLarge);
}

TEST(Truncate, PrefixOrderAndMeets) {
  auto p = truncate(fixtures::two_loops(), 2);
  const auto& s = p.lattice;
  EXPECT_TRUE(s.leq(el(s, "ab"), el(s, "a")));
  EXPECT_FALSE(s.leq(el(s, "ab"), el(s, "b")));
  EXPECT_EQ(s.meet(el(s, "a"), el(s, "ab")), el(s, "ab"));
  EXPECT_EQ(s.meet(el(s, "aa"), el(s, "ab")), s.zero());
  EXPECT_TRUE(p.on_frontier(el(s, "aa")));
  EXPECT_FALSE(p.on_frontier(el(s, "a")));
  EXPECT_FALSE(p.on_frontier(s.zero()));
  EXPECT_EQ(p.length(el(s, "ab")), 2U);
  EXPECT_TRUE(is_unambiguous(s));
}

TEST(Level, Examples) {
  auto p = truncate(fixtures::two_loops(), 2);
  const auto& s = p.lattice;
  EXPECT_EQ(level(s, s.one()), 1U);
  EXPECT_EQ(level(s, el(s, "aa")), 3U);
  EXPECT_EQ(level(s, s.zero()), kInfiniteLevel);
}

TEST(CoversHat, Examples) {
  auto p = truncate(fixtures::two_loops(), 2);
  const auto& s = p.lattice;
  EXPECT_EQ(covers_hat(s, s.one()), set(s, {"a", "b"}));
  EXPECT_EQ(covers_hat(s, el(s, "aa")), set(s, {"0"}));
}

TEST(DescentWitness, Examples) {
  auto p = truncate(fixtures::two_loops(), 2);
  const auto& s = p.lattice;
  EXPECT_EQ(descent_witness(p, s.one(), el(s, "aa")), (std::vector{el(s, "b"), el(s, "ab")}));
  EXPECT_EQ(descent_witness(p, el(s, "a"), el(s, "aa")), (std::vector{el(s, "ab")}));
  EXPECT_EQ(descent_witness(p, s.one(), el(s, "a")), (std::vector{el(s, "b")}));
  EXPECT_EQ(error_of([&] { descent_witness(p, el(s, "a"), el(s, "b")); }), Errc::kBadPair);
}

TEST(Truncate, MultiCharacterEdgeIds) {
  auto g = parse_graph("vertices: t\nroot: t\nedge left t t\nedge right t t\n");
  auto p = truncate(g, 2);
  EXPECT_TRUE(p.lattice.find("left.right"));
}

// Depths 1..5 on the two-loop graph and the binary tree: unambiguous,
// equal levels are equal or orthogonal, every off-frontier pair is
// witnessed by descent_witness and agrees with the maximal trapping witness.
TEST(Property, TruncationsAwayFromTheFrontier) {
  for (const auto& g : {fixtures::two_loops(), binary_tree()}) {
    for (std::size_t depth = 1; depth <= 5; ++depth) {
      auto p = truncate(g, depth);
      const auto& s = p.lattice;
      ASSERT_TRUE(satisfies_semilattice_laws(s));
      EXPECT_TRUE(is_unambiguous(s));
      for (Element e = 0; e < s.size(); ++e) {
        for (Element f = 0; f < s.size(); ++f) {
          if (e == s.zero() || f == s.zero()) continue;
          if (level(s, e) == level(s, f)) {
            EXPECT_TRUE(e == f || s.orthogonal(e, f));
          }
          if (!s.less(f, e) || p.on_frontier(f)) continue;
          auto w = descent_witness(p, e, f);
          ASSERT_FALSE(w.empty());
          auto targets = w;
          targets.push_back(f);
          EXPECT_TRUE(arrow(s, e, targets)) << s.label(e) << " > " << s.label(f);
          EXPECT_TRUE(trapping_witness(s, e, f).has_value());
        }
      }
    }
  }
}

}  // namespace
