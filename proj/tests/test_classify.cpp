#include <gtest/gtest.h>

#include "isofact/classify.hpp"
#include "oracles.hpp"

using namespace isofact;

namespace {

// Ap(S; n_r) equals the alpha-box, recomputed from a membership table.
bool alpha_rect_brute(const std::vector<Int>& n, std::size_t r) {
  Int top = 1;
  for (Int x : n) top = std::max(top, x);
  auto in = oracle::members(n, 200 * top);
  auto in_ap = [&](Int v) { return in[static_cast<std::size_t>(v)] && (v < n[r] || !in[static_cast<std::size_t>(v - n[r])]); };
  std::vector<Int> alpha(n.size(), 0);
  for (std::size_t i = 0; i < n.size(); ++i)
    if (i != r)
      while (in_ap((alpha[i] + 1) * n[i])) ++alpha[i];
  std::set<Int> box{0};
  for (std::size_t i = 0; i < n.size(); ++i) {
    std::set<Int> next;
    for (Int b : box)
      for (Int l = 0; l <= alpha[i]; ++l) next.insert(b + l * n[i]);
    box = std::move(next);
  }
  std::set<Int> ap;
  for (Int v = 0; static_cast<Int>(ap.size()) < n[r]; ++v)
    if (in_ap(v)) ap.insert(v);
  return box == ap;
}

}  // namespace

TEST(Classify, FourGeneratorCompleteIntersection) {
  Analysis A(Semigroup::numerical({24, 26, 36, 39}));
  EXPECT_TRUE(is_ci(A));
  EXPECT_TRUE(is_free(A, {0, 2, 1, 3}));
  EXPECT_FALSE(is_free(A, stored_arrangement(A.semigroup())));
  auto r = classify(A);
  EXPECT_EQ(r.complete_intersection, true);
  EXPECT_EQ(r.free_some_arrangement, true);
  EXPECT_EQ(r.free_all_arrangements, false);
  EXPECT_EQ(r.gorenstein, true);
  EXPECT_EQ(r.single_betti, false);
}

TEST(Classify, AlphaRectangularForTwenty) {
  Analysis A(Semigroup::numerical({16, 20, 30, 45}));
  ASSERT_EQ(A.semigroup().value(1), 20);
  EXPECT_TRUE(is_alpha_rectangular(A, {1}));
  EXPECT_EQ(alpha_vector(A, {1}), (std::vector<Int>{4, 0, 1, 1}));
  EXPECT_EQ(single_betti_minimal(A), (Element{60}));
}

TEST(Classify, SortedButNotDivisible) {
  Analysis A(Semigroup::numerical({4, 6, 9}));
  EXPECT_TRUE(is_betti_sorted(A));
  EXPECT_FALSE(is_betti_divisible(A));
  // alpha = (1, 1) off the ray 4 already gives the whole Apery set.
  EXPECT_EQ(alpha_vector(A, {0}), (std::vector<Int>{0, 1, 1}));
  EXPECT_TRUE(is_alpha_rectangular(A, {0}));
}

TEST(Classify, ThreeFourFiveIsNothingSpecial) {
  Analysis A(Semigroup::numerical({3, 4, 5}));
  auto r = classify(A);
  EXPECT_EQ(r.complete_intersection, false);
  EXPECT_EQ(r.free_some_arrangement, false);
  EXPECT_EQ(r.betti_sorted, false);
  EXPECT_EQ(r.gorenstein, false);
  EXPECT_EQ(r.rectangular, false);
}

TEST(Classify, DividesIsScalarMultiple) {
  EXPECT_FALSE(divides(Element{2, 4}, Element{3, 6}));
  EXPECT_TRUE(divides(Element{1, 2}, Element{3, 6}));
  EXPECT_TRUE(divides(Element{210}, Element{420}));
  EXPECT_FALSE(divides(Element{0, 2}, Element{1, 4}));
}

TEST(Classify, CSortedArrangementIsStable) {
  Analysis A(Semigroup::numerical({30, 42, 105, 140}));
  // c n = (210, 210, 210, 420).
  EXPECT_EQ(c_sorted_arrangement(A), (Arrangement{0, 1, 2, 3}));
}

TEST(Bounds, ThreeFourFiveChains) {
  Analysis A(Semigroup::numerical({3, 4, 5}));
  auto bounds = verify_bounds(A);
  auto it = std::find_if(bounds.begin(), bounds.end(), [](const BoundCheck& b) { return b.id == "is-chain"; });
  ASSERT_NE(it, bounds.end());
  EXPECT_EQ(it->values, (std::vector<Int>{6, 6, 6, 8}));
  for (const auto& b : bounds) EXPECT_TRUE(b.holds()) << b.id;
}

TEST(Bounds, NonSimplicialIsSkipped) {
  BettiOptions opt;
  opt.degree_bound = 6;
  Analysis A(Semigroup(std::vector<Element>{{1, 0, 1}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}}), opt);
  auto bounds = verify_bounds(A);
  ASSERT_EQ(bounds.size(), 2u);
  for (const auto& b : bounds) EXPECT_FALSE(b.applicable);
}

TEST(ClassifyProperty, AlphaRectMatchesBruteForce) {
  oracle::Gen gen(23);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = gen.numerical(static_cast<std::size_t>(gen.uniform(3, 4)), 30);
    Analysis A(Semigroup::numerical(g));
    auto n = A.semigroup().values();
    for (std::size_t r = 0; r < n.size(); ++r)
      EXPECT_EQ(is_alpha_rectangular(A, {r}), alpha_rect_brute(n, r)) << format_semigroup(A.semigroup()) << " ray " << r;
  }
}

TEST(ClassifyProperty, FreeAllMatchesPermutationScan) {
  oracle::Gen gen(29);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = gen.numerical(static_cast<std::size_t>(gen.uniform(3, 5)), 40);
    Analysis A(Semigroup::numerical(g));
    Arrangement a = stored_arrangement(A.semigroup());
    bool all = true, some = false;
    do {
      bool f = is_free(A, a);
      all = all && f;
      some = some || f;
    } while (std::next_permutation(a.begin(), a.end()));
    EXPECT_EQ(is_free_all_arrangements(A), all);
    EXPECT_EQ(free_arrangement_some(A).has_value(), some);
  }
}
