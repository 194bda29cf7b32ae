#include <gtest/gtest.h>

#include "isofact/betti.hpp"
#include "oracles.hpp"

using namespace isofact;

namespace {

std::vector<Int> values_of(const std::vector<Element>& xs) {
  std::vector<Int> out;
  for (const auto& x : xs) out.push_back(x[0]);
  return out;
}

}  // namespace

TEST(Betti, FourGeneratorCompleteIntersection) {
  auto s = Semigroup::numerical({24, 26, 36, 39});
  auto p = betti_elements(s);
  EXPECT_EQ(values_of(p.betti), (std::vector<Int>{72, 78, 156}));
  EXPECT_TRUE(p.complete);
  EXPECT_EQ(p.method, "apery-candidates");
  EXPECT_EQ(presentation_size(p), 3u);
  EXPECT_TRUE(is_complete_intersection(s, p));
  EXPECT_EQ(p.fibers[0].factorizations, (std::vector<Factorization>{{0, 0, 2, 0}, {3, 0, 0, 0}}));
  EXPECT_EQ(p.fibers[1].factorizations, (std::vector<Factorization>{{0, 0, 0, 2}, {0, 3, 0, 0}}));
  EXPECT_EQ(p.ibetti(), (std::vector<Element>{{72}, {78}}));
}

TEST(Betti, MinimalPresentationConnectsEveryFiber) {
  for (std::vector<Int> g : {std::vector<Int>{3, 4, 5}, {16, 20, 30, 45}, {24, 26, 36, 39}, {5, 7, 9, 11}}) {
    auto s = Semigroup::numerical(g);
    auto p = betti_elements(s);
    auto rels = minimal_presentation(p);
    EXPECT_EQ(rels.size(), presentation_size(p));
    for (Int m = 0; m <= 150; ++m) {
      auto z = fiber(s, m).factorizations;
      ASSERT_TRUE(relations_connect_fiber(rels, z)) << format_semigroup(s) << " at " << m;
    }
    // Dropping any relation disconnects the fiber of its Betti element.
    for (std::size_t k = 0; k < rels.size(); ++k) {
      auto fewer = rels;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(k));
      Element b = phi(s, rels[k].lhs);
      EXPECT_FALSE(relations_connect_fiber(fewer, fiber(s, b).factorizations));
    }
  }
}

TEST(Betti, ThreeFourFive) {
  auto p = betti_elements(Semigroup::numerical({3, 4, 5}));
  EXPECT_EQ(values_of(p.betti), (std::vector<Int>{8, 9, 10}));
  EXPECT_EQ(presentation_size(p), 3u);
  EXPECT_FALSE(is_complete_intersection(Semigroup::numerical({3, 4, 5}), p));
}

TEST(Betti, AffineSimplicialUsesFreeArrangement) {
  Semigroup s(std::vector<Element>{{1, 0}, {0, 2}, {0, 3}});
  auto p = betti_elements(s);
  EXPECT_EQ(p.betti, (std::vector<Element>{{0, 6}}));
  EXPECT_TRUE(p.complete);
  EXPECT_EQ(p.method, "free-arrangement");
}

TEST(Betti, NonSimplicialNeedsABound) {
  Semigroup s(std::vector<Element>{{1, 0, 1}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
  EXPECT_THROW(betti_elements(s), Infeasible);
  BettiOptions opt;
  opt.degree_bound = 8;
  auto p = betti_elements(s, opt);
  EXPECT_EQ(p.betti, (std::vector<Element>{{1, 1, 1}}));
  EXPECT_FALSE(p.complete);
  EXPECT_THROW(minimal_presentation(p), IncompleteProfile);
}

TEST(Betti, AffineSweepMatchesBruteForce) {
  Semigroup s(std::vector<Element>{{1, 0, 1}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
  BettiOptions opt;
  opt.degree_bound = 8;
  auto p = betti_elements(s, opt);
  std::vector<Element> brute;
  for (const auto& m : elements_up_to_degree(s, 8))
    if (oracle::r_classes(oracle::factorizations_affine(s.gens(), m)).size() >= 2) brute.push_back(m);
  EXPECT_EQ(p.betti, brute);
}

TEST(BettiProperty, AperyCandidatesMatchSweep) {
  oracle::Gen gen(21);
  int compared = 0;
  for (int trial = 0; trial < 80; ++trial) {
    auto g = gen.numerical(static_cast<std::size_t>(gen.uniform(2, 5)), 24);
    if (oracle::frobenius(g) > 60) continue;
    auto s = Semigroup::numerical(g);
    EXPECT_EQ(values_of(betti_elements(s).betti), oracle::betti_sweep(s.values())) << format_semigroup(s);
    ++compared;
  }
  EXPECT_GT(compared, 30);
}
