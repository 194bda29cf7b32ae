#include <gtest/gtest.h>

#include "isofact/factor.hpp"
#include "oracles.hpp"

using namespace isofact;

TEST(Fiber, EightyInFourGenerators) {
  auto s = Semigroup::numerical({16, 20, 30, 45});
  auto f = fiber(s, 80);
  ASSERT_EQ(f.denumerant(), 3u);
  EXPECT_EQ(f.factorizations, (std::vector<Factorization>{{0, 1, 2, 0}, {0, 4, 0, 0}, {5, 0, 0, 0}}));
  EXPECT_EQ(f.nc(), 2u);
  EXPECT_EQ(f.class_of(0), f.class_of(1));
  EXPECT_NE(f.class_of(0), f.class_of(2));
  EXPECT_EQ(f.isolated(), (std::vector<Factorization>{{5, 0, 0, 0}}));
}

TEST(Fiber, NoIsolatedAt156) {
  auto s = Semigroup::numerical({24, 26, 36, 39});
  auto f = fiber(s, 156);
  EXPECT_EQ(f.factorizations,
            (std::vector<Factorization>{{0, 0, 0, 4}, {0, 3, 0, 2}, {0, 6, 0, 0}, {2, 0, 3, 0}, {5, 0, 1, 0}}));
  // (0,3,0,2) links the two pure powers of 26 and 39.
  EXPECT_EQ(f.nc(), 2u);
  EXPECT_TRUE(f.isolated().empty());
}

TEST(Fiber, OutsideAndZero) {
  auto s = Semigroup::numerical({3, 5});
  EXPECT_EQ(fiber(s, 7).denumerant(), 0u);
  EXPECT_EQ(fiber(s, 0).factorizations, (std::vector<Factorization>{{0, 0}}));
  EXPECT_EQ(fiber(s, -4).denumerant(), 0u);
  EXPECT_THROW(fiber(s, 3000, 10), FiberTooLarge);
}

TEST(Fiber, Affine) {
  Semigroup s(std::vector<Element>{{1, 0}, {0, 2}, {0, 3}});
  auto f = fiber(s, Element{1, 6});
  EXPECT_EQ(f.factorizations, (std::vector<Factorization>{{1, 0, 2}, {1, 3, 0}}));
  EXPECT_EQ(f.nc(), 1u);
  EXPECT_EQ(nc(s, Element{0, 6}), 2u);
  EXPECT_EQ(phi(s, Factorization{2, 1, 1}), (Element{2, 5}));
}

TEST(FiberProperty, FactorizationsMatchNestedEnumeration) {
  oracle::Gen gen(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = gen.numerical(static_cast<std::size_t>(gen.uniform(2, 5)), 25);
    auto s = Semigroup::numerical(g);
    // Stored order may differ from the sorted list, so compare through phi.
    std::vector<Int> stored = s.values();
    for (Int m = 0; m <= 120; m += static_cast<Int>(gen.uniform(1, 7))) {
      auto f = fiber(s, m);
      auto want = oracle::factorizations(stored, m);
      ASSERT_EQ(f.factorizations, want) << "m=" << m;
      for (const auto& x : f.factorizations) EXPECT_EQ(phi(s, x), (Element{m}));
    }
  }
}

TEST(FiberProperty, RClassesMatchQuadraticClosure) {
  oracle::Gen gen(8);
  int compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto g = gen.numerical(static_cast<std::size_t>(gen.uniform(2, 5)), 30);
    auto s = Semigroup::numerical(g);
    Int m = gen.uniform(20, 200);
    auto z = oracle::factorizations(s.values(), m);
    if (z.size() > 50) continue;
    auto f = fiber(s, m);
    EXPECT_EQ(f.r_classes, oracle::r_classes(z)) << "m=" << m;
    EXPECT_EQ(r_classes_of(z), oracle::r_classes(z));
    ++compared;
  }
  EXPECT_GT(compared, 100);
}

TEST(UnionFind, UniteReportsMerges) {
  UnionFind uf(4);
  EXPECT_TRUE(uf.unite(0, 3));
  EXPECT_FALSE(uf.unite(3, 0));
  EXPECT_TRUE(uf.unite(1, 2));
  EXPECT_NE(uf.find(0), uf.find(1));
}
