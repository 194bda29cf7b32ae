#include <gtest/gtest.h>

#include "isofact/semigroup.hpp"
#include "oracles.hpp"

using namespace isofact;

TEST(Semigroup, DropsRedundantGenerators) {
  auto s = Semigroup::numerical({4, 6, 9, 10, 13, 4});
  EXPECT_EQ(s.values(), (std::vector<Int>{4, 6, 9}));
  EXPECT_EQ(s.embedding_dimension(), 3u);
  EXPECT_EQ(s.dimension(), 1u);
  EXPECT_EQ(s.codimension(), 2u);
  EXPECT_TRUE(s.is_numerical());
  EXPECT_TRUE(s.is_simplicial());
}

TEST(Semigroup, RejectsBadInput) {
  EXPECT_THROW(Semigroup::numerical({4, 6}), InvalidArgument);
  EXPECT_THROW(Semigroup::numerical({}), InvalidArgument);
  EXPECT_THROW(Semigroup(std::vector<Element>{{1, 0}, {0, 0}}), InvalidArgument);
  EXPECT_THROW(Semigroup(std::vector<Element>{{1, 0}, {1}}), InvalidArgument);
  EXPECT_NO_THROW(Semigroup(std::vector<Element>{{4}, {6}}, true));
}

TEST(Semigroup, NumericalInvariants) {
  auto s = Semigroup::numerical({3, 4, 5});
  EXPECT_EQ(frobenius(s), 2);
  EXPECT_EQ(genus(s), 2);
  EXPECT_EQ(multiplicity(s), 3);
  EXPECT_EQ(apery_numerical(s, 3), (std::vector<Int>{0, 4, 5}));
  EXPECT_TRUE(s.leq(4, 11));
  EXPECT_FALSE(s.leq(5, 7));
  EXPECT_FALSE(s.contains(2));
  auto t = Semigroup::numerical({24, 26, 36, 39});
  EXPECT_EQ(frobenius(t), oracle::frobenius({24, 26, 36, 39}));
}

TEST(Semigroup, AffineRaysComeFirst) {
  Semigroup s(std::vector<Element>{{0, 3}, {1, 0}, {0, 2}});
  EXPECT_TRUE(s.is_simplicial());
  EXPECT_FALSE(s.is_numerical());
  EXPECT_EQ(s.dimension(), 2u);
  EXPECT_EQ(s.gen(0), (Element{0, 3}));
  EXPECT_EQ(s.gen(1), (Element{1, 0}));
  EXPECT_TRUE(s.contains(Element{2, 5}));
  EXPECT_FALSE(s.contains(Element{0, 1}));
  EXPECT_EQ(valid_ray_sets(s).size(), 2u);
}

TEST(Semigroup, NonSimplicial) {
  Semigroup s(std::vector<Element>{{1, 0, 1}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(s.dimension(), 3u);
  EXPECT_EQ(s.codimension(), 1u);
  EXPECT_FALSE(s.is_simplicial());
  EXPECT_THROW(stored_rays(s), NotSimplicial);
}

TEST(Semigroup, CohenMacaulayAndGorenstein) {
  EXPECT_TRUE(is_gorenstein(Semigroup::numerical({3, 5})));
  EXPECT_FALSE(is_gorenstein(Semigroup::numerical({3, 4, 5})));
  // <(2,0),(0,2),(1,1)> is Cohen-Macaulay; adding (3,1) instead breaks it.
  Semigroup cm(std::vector<Element>{{2, 0}, {0, 2}, {1, 1}});
  EXPECT_TRUE(is_cohen_macaulay(cm));
  Semigroup not_cm(std::vector<Element>{{4, 0}, {0, 4}, {1, 3}, {3, 1}});
  EXPECT_FALSE(is_cohen_macaulay(not_cm));
}

TEST(Parse, GeneratorLists) {
  auto s = parse_semigroup(" 24, 26 ,36,39 ");
  EXPECT_EQ(s.values(), (std::vector<Int>{24, 26, 36, 39}));
  auto a = parse_semigroup("(1,0);(0,2);(0,3)");
  EXPECT_EQ(a.embedding_dimension(), 3u);
  EXPECT_EQ(parse_semigroup("(1,0), (0,2),(0,3)").gens(), a.gens());
  EXPECT_THROW(parse_semigroup("((1,0))"), ParseError);
  EXPECT_EQ(parse_element("(1,1,1)"), (Element{1, 1, 1}));
  EXPECT_EQ(parse_element("72"), (Element{72}));
  EXPECT_THROW(parse_semigroup("3,x"), ParseError);
  EXPECT_THROW(parse_semigroup("3,,4"), ParseError);
  EXPECT_THROW(parse_semigroup("(1,0;(0,1)"), ParseError);
  EXPECT_THROW(parse_semigroup("4,6"), ParseError);
  EXPECT_THROW(parse_semigroup("-3,4"), ParseError);
  EXPECT_THROW(parse_semigroup("99999999999999999999"), ParseError);
  EXPECT_EQ(format_semigroup(s), "⟨24,26,36,39⟩");
  EXPECT_EQ(format_generators(a), "(1,0);(0,2);(0,3)");
}

TEST(SemigroupProperty, MembershipAndFrobeniusMatchBruteForce) {
  oracle::Gen gen(3);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = gen.numerical(static_cast<std::size_t>(gen.uniform(2, 4)), 30);
    auto s = Semigroup::numerical(g);
    std::vector<Int> sorted = s.values();
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, g);
    Int f = oracle::frobenius(g);
    EXPECT_EQ(frobenius(s), f);
    EXPECT_EQ(genus(s), oracle::genus(g));
    auto in = oracle::members(g, f + 40);
    for (Int v = 0; v <= f + 40; ++v) ASSERT_EQ(s.contains(v), in[static_cast<std::size_t>(v)]) << v;
    // Apery set: one element per residue class, each minimal in its class.
    auto ap = apery_numerical(s, sorted[0]);
    ASSERT_EQ(static_cast<Int>(ap.size()), sorted[0]);
    std::set<Int> residues;
    for (Int w : ap) {
      residues.insert(w % sorted[0]);
      EXPECT_TRUE(in[static_cast<std::size_t>(w)]);
      if (w >= sorted[0]) {
        EXPECT_FALSE(in[static_cast<std::size_t>(w - sorted[0])]);
      }
    }
    EXPECT_EQ(static_cast<Int>(residues.size()), sorted[0]);
    EXPECT_EQ(*std::max_element(ap.begin(), ap.end()) - sorted[0], f);
  }
}
