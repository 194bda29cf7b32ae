#include <gtest/gtest.h>

#include <sstream>

#include "isofact/explore.hpp"
#include "oracles.hpp"

using namespace isofact;

TEST(Enumerate, GenusCountsKnownSequence) {
  std::vector<std::size_t> want{1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592};
  EXPECT_EQ(genus_counts(12), want);
}

TEST(Enumerate, GenusCountsMatchGapSetBruteForce) {
  auto counts = genus_counts(9);
  for (int g = 0; g <= 9; ++g) EXPECT_EQ(counts[static_cast<std::size_t>(g)], oracle::count_genus(g)) << "genus " << g;
}

TEST(Enumerate, SemigroupsAreMinimalAndHaveTheirGenus) {
  auto all = numerical_semigroups_up_to_genus(7);
  std::set<std::vector<Int>> unique(all.begin(), all.end());
  EXPECT_EQ(unique.size(), all.size());
  Int last = 0;
  for (const auto& g : all) {
    EXPECT_EQ(oracle::minimal_generators(g), g);
    Int gen = oracle::genus(g);
    EXPECT_LE(gen, 7);
    EXPECT_GE(gen, last);
    last = gen;
  }
  EXPECT_THROW(numerical_semigroups_up_to_genus(30), Infeasible);
}

TEST(Corpus, ParseDedupAndFormat) {
  std::istringstream in(
      "# comment line\n"
      "3,4,5\n"
      "\n"
      "5,4,3   # same semigroup reordered\n"
      "4,6,9,10\n");
  auto c = parse_corpus(in, "mem");
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.entries()[0].gens, (std::vector<Int>{3, 4, 5}));
  EXPECT_EQ(c.entries()[0].source, "mem:2");
  EXPECT_EQ(c.entries()[1].gens, (std::vector<Int>{4, 6, 9}));
  std::istringstream again(format_corpus(c));
  auto d = parse_corpus(again, "round");
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.entries()[1].gens, c.entries()[1].gens);
}

TEST(Corpus, ParseErrorsCarryLocation) {
  std::istringstream bad("3,4\n4,6\n");
  try {
    parse_corpus(bad, "f.txt");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("f.txt:2"), std::string::npos);
  }
  std::istringstream affine("(1,0);(0,1)\n");
  EXPECT_THROW(parse_corpus(affine, "a"), ParseError);
  EXPECT_THROW(load_corpus("/nonexistent/corpus.txt"), ParseError);
}

TEST(Corpus, MergeKeepsFirstProvenance) {
  Corpus a, b;
  a.add({3, 4, 5}, Provenance::Genus, "genus 2");
  b.add({3, 4, 5}, Provenance::File, "x:1");
  b.add({2, 3}, Provenance::File, "x:2");
  a.merge(b);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a.entries()[0].provenance, Provenance::Genus);
  EXPECT_EQ(a.entries()[1].source, "x:2");
}

TEST(Search, SmallestBettiDivisible) {
  auto two = min_frobenius_betti_divisible(2, 10);
  ASSERT_TRUE(two);
  EXPECT_EQ(two->frobenius, 1);
  EXPECT_EQ(two->gens, (std::vector<Int>{2, 3}));
  auto three = min_frobenius_betti_divisible(3, 60);
  ASSERT_TRUE(three);
  EXPECT_EQ(three->frobenius, 29);
  EXPECT_EQ(three->gens, (std::vector<Int>{6, 10, 15}));
  EXPECT_FALSE(min_frobenius_betti_divisible(4, 100));
  EXPECT_THROW(min_frobenius_betti_divisible(1, 10), InvalidArgument);
}

TEST(Search, EdimFourLiteralAndMultipleBetti) {
  auto any = min_frobenius_betti_divisible(4, 600);
  ASSERT_TRUE(any);
  EXPECT_EQ(any->frobenius, 383);
  EXPECT_EQ(any->gens, (std::vector<Int>{30, 42, 70, 105}));
  auto multi = min_frobenius_betti_divisible(4, 600, true);
  ASSERT_TRUE(multi);
  EXPECT_EQ(multi->frobenius, 523);
  EXPECT_EQ(multi->gens, (std::vector<Int>{30, 42, 105, 140}));
  EXPECT_EQ(betti_values(Semigroup::numerical(multi->gens)), (std::vector<Int>{210, 420}));
}

// Every three-generated semigroup with F <= 40, classified directly, against
// the parametrized search.
TEST(SearchProperty, EdimThreeMatchesDirectScan) {
  const Int f_max = 40;
  std::set<std::vector<Int>> direct;
  for (Int a = 3; a <= f_max + 1; ++a)
    for (Int b = a + 1; b <= f_max + a; ++b)
      for (Int c = b + 1; c <= f_max + a; ++c) {
        if (std::gcd(std::gcd(a, b), c) != 1 || b % a == 0) continue;
        std::vector<Int> g{a, b, c};
        // F <= f_max iff the a integers past f_max are all members.
        auto in = oracle::members(g, f_max + a);
        bool c_redundant = false;
        for (Int k = 0; k * b <= c && !c_redundant; ++k) c_redundant = (c - k * b) % a == 0;
        if (c_redundant) continue;
        bool small_f = true;
        for (Int v = f_max + 1; v <= f_max + a; ++v) small_f = small_f && in[static_cast<std::size_t>(v)];
        if (!small_f) continue;
        Analysis A(Semigroup::numerical(g));
        if (is_betti_divisible(A)) direct.insert(g);
      }
  std::set<std::vector<Int>> searched;
  for (const auto& h : betti_divisible_up_to_frobenius(3, f_max)) {
    EXPECT_EQ(oracle::frobenius(h.gens), h.frobenius);
    if (h.gens.size() == 3) searched.insert(h.gens);
  }
  EXPECT_EQ(direct, searched);
  EXPECT_FALSE(direct.empty());
}

TEST(Constructed, EntriesCarryPredictions) {
  auto c = constructed_corpus(40);
  ASSERT_FALSE(c.empty());
  std::size_t with_prediction = 0;
  for (const auto& e : c.entries()) {
    EXPECT_EQ(e.provenance, Provenance::Constructed);
    EXPECT_LE(oracle::frobenius(e.gens), 40);
    if (e.predicted_betti) {
      ++with_prediction;
      EXPECT_EQ(oracle::betti_sweep(e.gens), *e.predicted_betti) << e.source;
    }
  }
  EXPECT_GT(with_prediction, 0u);
}

TEST(Harness, SmallGenusHasNoViolations) {
  auto corpus = enumerate_numerical_by_genus(6);
  auto r = run_theorem_harness(corpus);
  EXPECT_EQ(r.semigroups, corpus.size());
  EXPECT_EQ(r.skipped_trivial, 1u);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_GT(r.checks, 1000u);
  for (const auto& step : r.chain) EXPECT_EQ(step.containment_failures, 0u) << step.smaller;
}

TEST(Harness, ThreadCountDoesNotChangeTheReport) {
  auto corpus = enumerate_numerical_by_genus(7);
  auto one = run_theorem_harness(corpus, {1, {}});
  auto four = run_theorem_harness(corpus, {4, {}});
  EXPECT_EQ(one.checks, four.checks);
  EXPECT_EQ(one.free_semigroups, four.free_semigroups);
  ASSERT_EQ(one.chain.size(), four.chain.size());
  for (std::size_t k = 0; k < one.chain.size(); ++k) {
    EXPECT_EQ(one.chain[k].strictness_witnesses, four.chain[k].strictness_witnesses);
    EXPECT_EQ(one.chain[k].first_witness, four.chain[k].first_witness);
  }
}
