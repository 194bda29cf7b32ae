#pragma once

#include <atomic>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "theorems.hpp"

namespace isofact {

inline constexpr Int kDefaultGenusCap = 25;

// ---------------------------------------------------------------------------
// Semigroup tree: children of S are S \ {x} for minimal generators x > F(S).

namespace detail {

// dec[x] = #{(a, b) in S x S : a + b = x}; x in S iff dec[x] > 0 and x > 0 is
// a minimal generator iff dec[x] == 2.
struct TreeNode {
  std::vector<std::uint16_t> dec;
  Int frobenius;
  Int genus;
};

template <class Visit>
void walk_semigroup_tree(Int genus_max, Visit&& visit) {
  const std::size_t L = static_cast<std::size_t>(3 * genus_max + 3);
  TreeNode root{std::vector<std::uint16_t>(L), -1, 0};
  for (std::size_t x = 0; x < L; ++x) root.dec[x] = static_cast<std::uint16_t>(x + 1);
  std::vector<TreeNode> stack{std::move(root)};
  while (!stack.empty()) {
    TreeNode node = std::move(stack.back());
    stack.pop_back();
    std::vector<Int> gens;
    for (std::size_t x = 1; x < L; ++x)
      if (node.dec[x] == 2) gens.push_back(static_cast<Int>(x));
    visit(node, gens);
    if (node.genus == genus_max) continue;
    // Push in reverse so children are visited in increasing order of x.
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
      const Int x = *it;
      if (x <= node.frobenius) break;
      TreeNode child{node.dec, x, node.genus + 1};
      const auto ux = static_cast<std::size_t>(x);
      for (std::size_t y = L - 1; y >= ux; --y) {
        if (node.dec[y - ux] > 0) child.dec[y] = static_cast<std::uint16_t>(child.dec[y] - (y == 2 * ux ? 1 : 2));
        if (y == ux) break;
      }
      stack.push_back(std::move(child));
    }
  }
}

}  // namespace detail

// Minimal generators of every numerical semigroup of genus <= g_max, sorted
// by genus and then lexicographically.
inline std::vector<std::vector<Int>> numerical_semigroups_up_to_genus(Int g_max, Int cap = kDefaultGenusCap) {
  if (g_max < 0) throw InvalidArgument("genus must be non-negative");
  if (g_max > cap) throw Infeasible("genus " + std::to_string(g_max) + " exceeds the cap " + std::to_string(cap));
  std::vector<std::pair<Int, std::vector<Int>>> found;
  detail::walk_semigroup_tree(g_max, [&](const detail::TreeNode& n, const std::vector<Int>& gens) {
    found.emplace_back(n.genus, gens);
  });
  std::sort(found.begin(), found.end());
  std::vector<std::vector<Int>> out;
  for (auto& [g, gens] : found) out.push_back(std::move(gens));
  return out;
}

// counts[g] = number of numerical semigroups of genus g.
inline std::vector<std::size_t> genus_counts(Int g_max, Int cap = kDefaultGenusCap) {
  if (g_max < 0) throw InvalidArgument("genus must be non-negative");
  if (g_max > cap) throw Infeasible("genus " + std::to_string(g_max) + " exceeds the cap " + std::to_string(cap));
  std::vector<std::size_t> counts(static_cast<std::size_t>(g_max + 1), 0);
  detail::walk_semigroup_tree(g_max, [&](const detail::TreeNode& n, const std::vector<Int>&) {
    ++counts[static_cast<std::size_t>(n.genus)];
  });
  return counts;
}

// ---------------------------------------------------------------------------
// Corpus.

enum class Provenance { Genus, File, Constructed };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Genus: return "genus";
    case Provenance::File: return "file";
    case Provenance::Constructed: return "constructed";
  }
  return "?";
}

struct CorpusEntry {
  std::vector<Int> gens;  // minimal generators, ascending
  Provenance provenance;
  std::string source;     // genus number, file:line, or construction
  std::optional<std::vector<Int>> predicted_betti;  // set for gluings
};

// Numerical semigroups deduplicated by minimal generating set; the first
// insertion wins.
class Corpus {
 public:
  bool add(const std::vector<Int>& raw, Provenance p, std::string source,
           std::optional<std::vector<Int>> predicted_betti = std::nullopt) {
    auto gens = Semigroup::numerical(raw).values();
    std::sort(gens.begin(), gens.end());
    if (!seen_.emplace(gens, entries_.size()).second) return false;
    entries_.push_back({std::move(gens), p, std::move(source), std::move(predicted_betti)});
    return true;
  }

  void merge(const Corpus& other) {
    for (const auto& e : other.entries_) add(e.gens, e.provenance, e.source, e.predicted_betti);
  }

  const std::vector<CorpusEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<CorpusEntry> entries_;
  std::map<std::vector<Int>, std::size_t> seen_;
};

inline Corpus enumerate_numerical_by_genus(Int g_max, Int cap = kDefaultGenusCap) {
  Corpus c;
  for (const auto& gens : numerical_semigroups_up_to_genus(g_max, cap)) {
    Int g = gens == std::vector<Int>{1} ? 0 : genus(Semigroup::numerical(gens));
    c.add(gens, Provenance::Genus, "genus " + std::to_string(g));
  }
  return c;
}

// One semigroup per line; blank lines and '#' comments ignored.
inline Corpus parse_corpus(std::istream& in, const std::string& name) {
  Corpus c;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (detail::trim(line).empty()) continue;
    const std::string where = name + ":" + std::to_string(lineno);
    try {
      auto gens = parse_generators(line);
      std::vector<Int> vals;
      for (const auto& g : gens) {
        if (g.size() != 1) throw ParseError("corpus entries must be numerical semigroups");
        vals.push_back(g[0]);
      }
      c.add(vals, Provenance::File, where);
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    } catch (const InvalidArgument& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  return c;
}

inline Corpus load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus file '" + path + "'");
  return parse_corpus(in, path);
}

inline std::string format_corpus(const Corpus& c) {
  std::ostringstream out;
  for (const auto& e : c.entries()) {
    out << "# " << to_string(e.provenance) << ": " << e.source << "\n";
    for (std::size_t i = 0; i < e.gens.size(); ++i) out << (i ? "," : "") << e.gens[i];
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Betti-divisible semigroups via their parametrization.

// F for the arrangement the parameters come in: sum_{i>=2} (a_i - 1) n_i - n_1.
inline Int params_frobenius(const BettiDivisibleParams& p) {
  auto n = params_generators(p);
  Int f = -n[0];
  for (std::size_t i = 1; i < n.size(); ++i) f = checked_add(f, checked_mul(p.a[i] - 1, n[i]));
  return f;
}

struct BettiDivisibleHit {
  Int frobenius;
  std::vector<Int> gens;  // ascending
  BettiDivisibleParams params;
};

namespace detail {

// Visits every valid parameter set with e >= e_min and free-formula Frobenius
// number <= f_max.
template <class Visit>
void for_each_betti_divisible_params(std::size_t e_min, Int f_max, Visit&& visit) {
  if (e_min < 2) throw InvalidArgument("embedding dimension must be at least 2");
  if (f_max < 1) return;
  // F >= (e-2) P / 2 for e >= 3 and F = a1 a2 - a1 - a2 for e = 2.
  for (std::size_t e = e_min;; ++e) {
    Int p_max = e == 2 ? 0 : (2 * f_max) / static_cast<Int>(e - 2);
    // Least product of e pairwise coprime integers >= 2 is the primorial.
    Int primorial = 1;
    {
      std::size_t k = 0;
      for (Int q = 2; k < e; ++q) {
        bool prime = true;
        for (Int d = 2; d * d <= q; ++d)
          if (q % d == 0) prime = false;
        if (prime) {
          primorial = saturating_mul(primorial, q);
          ++k;
        }
      }
    }
    if (e > 2 && primorial > p_max) return;

    std::vector<Int> a;
    auto rec_a = [&](auto&& self, Int prod) -> void {
      if (a.size() == e) {
        if (e == 2 && (a[0] - 1) * (a[1] - 1) > f_max + 1) return;
        BettiDivisibleParams p{a, std::vector<Int>(e, 1)};
        const Int P = prod;
        // Contribution of position i per unit of f_i.
        std::vector<Int> unit(e);
        for (std::size_t i = 1; i < e; ++i) unit[i] = (a[i] - 1) * (P / a[i]);
        const Int n1 = P / a[0];
        auto rec_f = [&](auto&& self_f, std::size_t i, Int partial) -> void {
          if (i == e) {
            if (partial - n1 <= f_max && !params_violation(p)) visit(p);
            return;
          }
          const Int prev = p.f[i - 1];
          Int rest_unit = 0;
          for (std::size_t j = i; j < e; ++j) rest_unit += unit[j];
          for (Int k = 1;; ++k) {
            const Int fi = prev * k;
            // f_j >= f_i for j > i.
            if (partial + rest_unit * fi - n1 > f_max) break;
            if (i >= 2 || fi == 1) {
              p.f[i] = fi;
              self_f(self_f, i + 1, partial + unit[i] * fi);
            }
            if (i < 2) break;
          }
          p.f[i] = 1;
        };
        rec_f(rec_f, 1, 0);
        return;
      }
      const std::size_t remaining = e - a.size() - 1;
      for (Int x = 2;; ++x) {
        Int np = saturating_mul(prod, x);
        // Remaining factors are at least 2 each.
        Int min_total = np;
        for (std::size_t k = 0; k < remaining; ++k) min_total = saturating_mul(min_total, 2);
        if (e == 2) {
          if (a.size() == 1 && (a[0] - 1) * (x - 1) > f_max + 1) break;
          if (a.empty() && x - 1 > f_max + 1) break;
        } else if (min_total > p_max) {
          break;
        }
        bool coprime = std::all_of(a.begin(), a.end(), [&](Int y) { return std::gcd(x, y) == 1; });
        if (!coprime) continue;
        a.push_back(x);
        self(self, np);
        a.pop_back();
      }
    };
    rec_a(rec_a, 1);
  }
}

}  // namespace detail

// The Betti-divisible numerical semigroup of embedding dimension >= edim_min
// with least Frobenius number <= f_max; ties go to the lexicographically least
// generator list. With multiple_betti_only, semigroups with a single Betti
// element (f_e = 1) are skipped.
inline std::optional<BettiDivisibleHit> min_frobenius_betti_divisible(std::size_t edim_min, Int f_max,
                                                                      bool multiple_betti_only = false) {
  std::optional<BettiDivisibleHit> best;
  detail::for_each_betti_divisible_params(edim_min, f_max, [&](const BettiDivisibleParams& p) {
    if (multiple_betti_only && p.f.back() == 1) return;
    auto n = params_generators(p);
    Semigroup s = Semigroup::numerical(n);
    if (s.embedding_dimension() != n.size()) return;
    const Int f = params_frobenius(p);
    auto gens = s.values();
    std::sort(gens.begin(), gens.end());
    if (!best || std::tie(f, gens) < std::tie(best->frobenius, best->gens)) best = BettiDivisibleHit{f, gens, p};
  });
  return best;
}

// Every Betti-divisible semigroup with edim >= edim_min and F <= f_max,
// sorted by (F, generators).
inline std::vector<BettiDivisibleHit> betti_divisible_up_to_frobenius(std::size_t edim_min, Int f_max) {
  std::map<std::vector<Int>, BettiDivisibleHit> found;
  detail::for_each_betti_divisible_params(edim_min, f_max, [&](const BettiDivisibleParams& p) {
    auto n = params_generators(p);
    Semigroup s = Semigroup::numerical(n);
    if (s.embedding_dimension() != n.size()) return;
    auto gens = s.values();
    std::sort(gens.begin(), gens.end());
    found.emplace(gens, BettiDivisibleHit{params_frobenius(p), gens, p});
  });
  std::vector<BettiDivisibleHit> out;
  for (auto& [g, h] : found) out.push_back(std::move(h));
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return std::tie(x.frobenius, x.gens) < std::tie(y.frobenius, y.gens); });
  return out;
}

// Semigroups with F <= f_max built two ways: Betti-divisible parameter sets
// of edim >= 3, and gluings a1 S1 + a2 S2 of complete intersections of genus
// <= 5 (or N) with multipliers up to 14. Small genus misses several families
// of the inclusion chain; these fill them in. Sorted by (F, generators).
inline Corpus constructed_corpus(Int f_max = 60) {
  struct Item {
    Int f;
    std::vector<Int> gens;
    std::string source;
    std::optional<std::vector<Int>> betti;
  };
  std::vector<Item> items;
  for (const auto& h : betti_divisible_up_to_frobenius(3, f_max))
    items.push_back({h.frobenius, h.gens, "Betti-divisible a=" + format_vector(h.params.a) + " f=" + format_vector(h.params.f),
                     std::nullopt});

  std::vector<Semigroup> parts{Semigroup::numerical({1})};
  for (const auto& g : numerical_semigroups_up_to_genus(5)) {
    if (g.size() < 2) continue;
    Semigroup s = Semigroup::numerical(g);
    if (is_complete_intersection(s, betti_elements(s))) parts.push_back(s);
  }
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i; j < parts.size(); ++j)
      for (Int a1 = 2; a1 <= 14; ++a1)
        for (Int a2 = 2; a2 <= 14; ++a2) {
          GluingSpec spec{parts[i], parts[j], a1, a2};
          if (numerical_gluing_violation(spec)) continue;
          auto r = glue_numerical(spec);
          const Int f = frobenius(r.glued);
          if (f > f_max) continue;
          auto gens = r.glued.values();
          std::sort(gens.begin(), gens.end());
          items.push_back({f, gens,
                           "gluing " + std::to_string(a1) + format_semigroup(parts[i]) + " + " + std::to_string(a2) +
                               format_semigroup(parts[j]),
                           r.predicted_betti});
        }
  std::stable_sort(items.begin(), items.end(),
                   [](const Item& x, const Item& y) { return std::tie(x.f, x.gens) < std::tie(y.f, y.gens); });
  Corpus c;
  for (auto& it : items) c.add(it.gens, Provenance::Constructed, it.source, it.betti);
  return c;
}

// ---------------------------------------------------------------------------
// Theorem harness.

struct HarnessOptions {
  unsigned threads = 1;
  BettiOptions betti;
};

struct Violation {
  std::vector<Int> gens;
  std::string source;
  std::string category;  // "theorem", "bound" or "error"
  std::optional<TheoremCheck> theorem;
  std::optional<BoundCheck> bound;
  std::string message;
};

struct CheckTally {
  std::size_t semigroups = 0, instances = 0, failures = 0;
};

struct ChainStep {
  std::string smaller, larger;
  std::size_t containment_failures = 0;
  std::size_t strictness_witnesses = 0;  // in the larger family, not the smaller
  std::optional<std::vector<Int>> first_witness;
};

struct HarnessReport {
  std::size_t semigroups = 0;
  std::size_t skipped_trivial = 0;  // N itself: no Betti elements
  std::size_t checks = 0;
  std::vector<Violation> violations;
  std::map<std::string, CheckTally> theorem_tallies, bound_tallies;
  std::vector<ChainStep> chain;
  std::size_t free_semigroups = 0, free_with_c_equal_cbar = 0;

  bool chain_strict() const {
    return std::all_of(chain.begin(), chain.end(), [](const ChainStep& c) { return c.strictness_witnesses > 0; });
  }
};

namespace detail {

struct HarnessOutcome {
  bool trivial = false;
  std::vector<TheoremCheck> checks;
  std::vector<BoundCheck> bounds;
  std::vector<bool> chain;
  bool free = false, c_equal_cbar = false;
  std::optional<std::string> error;
};

inline HarnessOutcome harness_one(const CorpusEntry& entry, const BettiOptions& opt) {
  HarnessOutcome o;
  try {
    Semigroup s = Semigroup::numerical(entry.gens);
    if (s.codimension() == 0) {
      o.trivial = true;
      return o;
    }
    Analysis A(s, opt);
    o.checks = check_all(A);
    if (entry.predicted_betti) {
      std::vector<Int> computed;
      for (const auto& b : A.betti().betti) computed.push_back(b[0]);
      o.checks.push_back({"gluing-betti-prediction", entry.source, CheckKind::Holds,
                          {"predicted Betti = computed Betti"}, {computed == *entry.predicted_betti}});
    }
    o.bounds = verify_bounds(A);
    o.chain = chain_flags(A).as_vector();
    if (auto a = free_arrangement_some(A)) {
      o.free = true;
      o.c_equal_cbar = true;
      for (std::size_t k = 1; k < a->size(); ++k) o.c_equal_cbar = o.c_equal_cbar && *A.c((*a)[k]) == c_bar(s, *a, k);
    }
  } catch (const std::exception& e) {
    o.error = e.what();
  }
  return o;
}

}  // namespace detail

// Runs every theorem and bound check over the corpus. Work is split across
// threads by index and merged in corpus order, so the report is independent
// of scheduling.
inline HarnessReport run_theorem_harness(const Corpus& corpus, const HarnessOptions& opt = {}) {
  const auto& entries = corpus.entries();
  std::vector<detail::HarnessOutcome> outcomes(entries.size());
  const unsigned threads = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(entries.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < entries.size();)
      outcomes[i] = detail::harness_one(entries[i], opt.betti);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  HarnessReport r;
  r.semigroups = entries.size();
  const auto& labels = chain_labels();
  for (std::size_t k = 0; k + 1 < labels.size(); ++k) r.chain.push_back({labels[k], labels[k + 1], 0, 0, std::nullopt});
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    auto& o = outcomes[i];
    if (o.trivial) {
      ++r.skipped_trivial;
      continue;
    }
    if (o.error) {
      r.violations.push_back({e.gens, e.source, "error", std::nullopt, std::nullopt, *o.error});
      continue;
    }
    std::set<std::string> seen;
    for (auto& c : o.checks) {
      auto& t = r.theorem_tallies[c.id];
      if (seen.insert(c.id).second) ++t.semigroups;
      t.instances += c.instances;
      ++r.checks;
      if (!c.ok()) {
        ++t.failures;
        r.violations.push_back({e.gens, e.source, "theorem", c, std::nullopt, ""});
      }
    }
    seen.clear();
    for (auto& b : o.bounds) {
      auto& t = r.bound_tallies[b.id];
      if (seen.insert(b.id).second) ++t.semigroups;
      ++t.instances;
      ++r.checks;
      if (!b.holds()) {
        ++t.failures;
        r.violations.push_back({e.gens, e.source, "bound", std::nullopt, b, ""});
      }
    }
    for (std::size_t k = 0; k + 1 < o.chain.size(); ++k) {
      auto& step = r.chain[k];
      if (o.chain[k] && !o.chain[k + 1]) ++step.containment_failures;
      if (!o.chain[k] && o.chain[k + 1]) {
        if (!step.first_witness) step.first_witness = e.gens;
        ++step.strictness_witnesses;
      }
    }
    if (o.free) {
      ++r.free_semigroups;
      if (o.c_equal_cbar) ++r.free_with_c_equal_cbar;
    }
  }
  return r;
}

}  // namespace isofact
