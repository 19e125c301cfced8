#include <gtest/gtest.h>

#include <array>
#include <random>

#include "stonelat/catalog.hpp"
#include "stonelat/semilattice.hpp"
#include "stonelat/text_format.hpp"
#include "support/errors.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace stonelat;
using fixtures::el;
using fixtures::error_of;
using fixtures::set;

namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

TEST(FromOrder, Chain3MeetIsMinimum) {
  Pairs p{{"0", "a"}, {"a", "1"}};
  auto s = Semilattice::from_order({"0", "a", "1"}, p);
  EXPECT_EQ(s.meet(el(s, "a"), el(s, "1")), el(s, "a"));
  EXPECT_EQ(s.zero(), el(s, "0"));
  EXPECT_EQ(s.one(), el(s, "1"));
}

TEST(FromOrder, VeeAtomsMeetAtZero) {
  Pairs p{{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}};
  auto s = Semilattice::from_order({"0", "a", "b", "1"}, p);
  EXPECT_EQ(s.meet(el(s, "a"), el(s, "b")), s.zero());
}

TEST(FromOrder, Errors) {
  Pairs cycle{{"a", "b"}, {"b", "a"}};
  EXPECT_EQ(error_of([&] { Semilattice::from_order({"a", "b"}, cycle); }), Errc::kCycle);

  // Two maximal elements.
  Pairs no_top{{"0", "a"}, {"0", "b"}};
  EXPECT_EQ(error_of([&] { Semilattice::from_order({"0", "a", "b"}, no_top); }), Errc::kNoBound);

  // c and d are both maximal lower bounds of a and b.
  Pairs bowtie{{"0", "c"}, {"0", "d"}, {"c", "a"}, {"c", "b"}, {"d", "a"}, {"d", "b"}, {"a", "1"}, {"b", "1"}};
  EXPECT_EQ(error_of([&] { Semilattice::from_order({"0", "a", "b", "c", "d", "1"}, bowtie); }), Errc::kNoMeet);

  Pairs none;
  EXPECT_EQ(error_of([&] { Semilattice::from_order({"0"}, none); }), Errc::kTooSmall);
  Pairs dup{{"0", "1"}};
  EXPECT_EQ(error_of([&] { Semilattice::from_order({"0", "0", "1"}, dup); }), Errc::kDuplicateLabel);
  Pairs unknown{{"0", "z"}};
  EXPECT_EQ(error_of([&] { Semilattice::from_order({"0", "1"}, unknown); }), Errc::kUnknownLabel);
}

TEST(FromTable, RejectsNonSemilattices) {
  // Not commutative.
  EXPECT_EQ(error_of([] { Semilattice::from_table({"0", "1"}, {0, 0, 1, 1}); }), Errc::kBadTable);
  // Not idempotent.
  EXPECT_EQ(error_of([] { Semilattice::from_table({"0", "1"}, {0, 0, 0, 0}); }), Errc::kBadTable);
  auto s = Semilattice::from_table({"0", "1"}, {0, 0, 0, 1});
  EXPECT_EQ(s.zero(), 0U);
  EXPECT_EQ(s.one(), 1U);
}

TEST(Order, Leq) {
  auto c = fixtures::chain3();
  EXPECT_TRUE(c.leq(el(c, "a"), el(c, "1")));
  auto v = fixtures::vee();
  EXPECT_FALSE(v.leq(el(v, "a"), el(v, "b")));
  for (Element e = 0; e < v.size(); ++e) EXPECT_TRUE(v.leq(v.zero(), e));
}

TEST(Order, Star) {
  auto v = fixtures::vee();
  EXPECT_EQ(star(v, el(v, "a")), set(v, {"0", "b"}));
  EXPECT_EQ(star(v, v.one()), set(v, {"0"}));
  EXPECT_EQ(star(v, v.zero()), v.all());
}

TEST(Order, UpDown) {
  auto v = fixtures::vee();
  EXPECT_EQ(up(v, set(v, {"a"})), set(v, {"a", "1"}));
  EXPECT_EQ(down(v, set(v, {"a"})), set(v, {"0", "a"}));
  EXPECT_EQ(up(v, v.empty_set()), v.empty_set());
  EXPECT_EQ(meet_of(v, v.empty_set()), v.one());
  EXPECT_EQ(meet_of(v, set(v, {"a", "b"})), v.zero());
}

TEST(Order, ConstrainedSet) {
  auto v = fixtures::vee();
  EXPECT_EQ(constrained_set(v, set(v, {"1"}), set(v, {"a"})), set(v, {"0", "b"}));
  EXPECT_EQ(constrained_set(v, set(v, {"a"}), v.empty_set()), set(v, {"0", "a"}));
  EXPECT_EQ(constrained_set(v, set(v, {"a"}), set(v, {"a"})), set(v, {"0"}));
}

TEST(Order, IsCover) {
  auto v = fixtures::vee();
  EXPECT_TRUE(is_cover(v, set(v, {"a", "b"}), set(v, {"1"}), v.empty_set()));
  EXPECT_FALSE(is_cover(v, set(v, {"a"}), set(v, {"1"}), v.empty_set()));
  EXPECT_TRUE(is_cover(v, v.empty_set(), set(v, {"a"}), set(v, {"a"})));
  EXPECT_EQ(error_of([&] { is_cover(v, set(v, {"b"}), set(v, {"a"}), v.empty_set()); }), Errc::kNotSubset);
}

TEST(Order, Arrow) {
  auto v = fixtures::vee();
  std::array ab{el(v, "a"), el(v, "b")};
  std::array a{el(v, "a")};
  EXPECT_TRUE(arrow(v, v.one(), ab));
  EXPECT_FALSE(arrow(v, v.one(), a));
  EXPECT_TRUE(arrow(v, el(v, "a"), a));
  EXPECT_EQ(error_of([&] { arrow(v, v.zero(), a); }), Errc::kZeroSource);
}

TEST(Order, CoversHat) {
  auto c = fixtures::chain3();
  EXPECT_EQ(covers_hat(c, c.one()), set(c, {"a"}));
  auto v = fixtures::vee();
  EXPECT_EQ(covers_hat(v, v.one()), set(v, {"a", "b"}));
  EXPECT_EQ(covers_hat(v, el(v, "a")), set(v, {"0"}));
  EXPECT_EQ(error_of([&] { covers_hat(v, v.zero()); }), Errc::kZeroElement);
}

TEST(Isomorphism, DistinguishesSmallShapes) {
  EXPECT_TRUE(isomorphic(fixtures::vee(), parse_semilattice("elements: 1 y x z\norder: z<x<1 z<y<1\n")));
  EXPECT_FALSE(isomorphic(fixtures::vee(), fixtures::chain4()));
  EXPECT_FALSE(isomorphic(fixtures::vee(), fixtures::chain3()));
  auto iso = find_isomorphism(fixtures::chain4(), fixtures::chain4());
  ASSERT_TRUE(iso);
  for (Element e = 0; e < 4; ++e) EXPECT_EQ((*iso)[e], e);
}

TEST(ElementSetOps, BasicAlgebra) {
  ElementSet a(70, {1, 65});
  ElementSet b(70, {65, 3});
  EXPECT_EQ((a | b).elements(), (std::vector<Element>{1, 3, 65}));
  EXPECT_EQ((a & b).elements(), (std::vector<Element>{65}));
  EXPECT_EQ((a - b).elements(), (std::vector<Element>{1}));
  EXPECT_EQ(a.complement().size(), 68U);
  EXPECT_TRUE(a.intersects(b));
  EXPECT_TRUE((a & b).subset_of(a));
  EXPECT_FALSE(a.contains(200));
}

TEST(TextFormat, ParsesChainsCommentsAndMeets) {
  auto s = parse_semilattice(
      "# diamond\n"
      "elements: 0 a b 1\n"
      "order: a<1 b<1\n"
      "meet: a b = 0\n");
  EXPECT_TRUE(isomorphic(s, fixtures::vee()));
}

TEST(TextFormat, Errors) {
  EXPECT_EQ(error_of([] { parse_semilattice("order: 0<1\n"); }), Errc::kParse);
  EXPECT_EQ(error_of([] { parse_semilattice("elements: 0 1\nbogus: x\n"); }), Errc::kParse);
  EXPECT_EQ(error_of([] { parse_semilattice("elements: 0 1\norder: 0<\n"); }), Errc::kParse);
  EXPECT_EQ(error_of([] { parse_semilattice("elements: 0 a 1\norder: 0<a<1\nmeet: a 1 = 0\n"); }),
            Errc::kBadTable);
  EXPECT_EQ(error_of([] { read_semilattice_file("/nonexistent/file.txt"); }), Errc::kParse);
}

TEST(TextFormat, RoundTripsTheCatalog) {
  for (const auto& s : enumerate_catalog({6, CatalogSpec::Mode::kExhaustive, 0, 0})) {
    auto back = parse_semilattice(to_text(s));
    EXPECT_EQ(back, s) << to_text(s);
  }
}

// Random bounded semilattices built from random tables must satisfy the
// laws, and their orders must agree with the raw-table oracle.
TEST(Property, RandomInstancesSatisfyLaws) {
  for (const auto& s : enumerate_catalog({9, CatalogSpec::Mode::kRandom, 40, 1234})) {
    EXPECT_TRUE(satisfies_semilattice_laws(s));
    oracle::Table t(s);
    for (Element e = 0; e < s.size(); ++e) {
      for (Element f = 0; f < s.size(); ++f) {
        EXPECT_EQ(s.leq(e, f), t.leq(e, f));
        const auto g = s.meet(e, f);
        // g is the greatest common lower bound.
        for (Element h = 0; h < s.size(); ++h) {
          if (s.leq(h, e) && s.leq(h, f)) {
            EXPECT_TRUE(s.leq(h, g));
          }
        }
      }
    }
  }
}

}  // namespace
