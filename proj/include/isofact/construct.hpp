#pragma once

#include <optional>
#include <string>
#include <vector>

#include "classify.hpp"

namespace isofact {

// S = a1*S1 + a2*S2 for numerical S1, S2 (either may be N = <1>).
struct GluingSpec {
  Semigroup left, right;
  Int a1 = 0, a2 = 0;
};

struct GluingResult {
  Semigroup glued;
  std::vector<Int> predicted_betti;  // ascending
};

inline std::vector<Int> betti_values(const Semigroup& s) {
  std::vector<Int> out;
  for (const auto& b : betti_elements(s).betti) out.push_back(b[0]);
  return out;
}

// Empty when valid, otherwise the first violated requirement.
inline std::optional<std::string> numerical_gluing_violation(const GluingSpec& g) {
  if (!g.left.is_numerical() || !g.right.is_numerical()) return "both parts must be numerical semigroups";
  if (g.a1 <= 0 || g.a2 <= 0) return "multipliers must be positive";
  if (std::gcd(g.a1, g.a2) != 1) return "multipliers are not coprime";
  if (!g.right.contains(g.a1)) return "a1 does not lie in the right semigroup";
  if (!g.left.contains(g.a2)) return "a2 does not lie in the left semigroup";
  auto is_gen = [](const Semigroup& s, Int v) {
    auto vals = s.values();
    return std::find(vals.begin(), vals.end(), v) != vals.end();
  };
  if (is_gen(g.right, g.a1)) return "a1 is a minimal generator of the right semigroup";
  if (is_gen(g.left, g.a2)) return "a2 is a minimal generator of the left semigroup";
  return std::nullopt;
}

inline GluingResult glue_numerical(const GluingSpec& g) {
  if (auto why = numerical_gluing_violation(g)) throw InvalidArgument("invalid gluing: " + *why);
  std::vector<Int> vals;
  for (Int v : g.left.values()) vals.push_back(checked_mul(g.a1, v));
  for (Int v : g.right.values()) vals.push_back(checked_mul(g.a2, v));
  GluingResult r{Semigroup::numerical(vals), {}};
  if (r.glued.embedding_dimension() != vals.size()) throw InvariantBreach("gluing lost a minimal generator");
  r.predicted_betti.push_back(checked_mul(g.a1, g.a2));
  for (Int b : betti_values(g.left)) r.predicted_betti.push_back(checked_mul(g.a1, b));
  for (Int b : betti_values(g.right)) r.predicted_betti.push_back(checked_mul(g.a2, b));
  std::sort(r.predicted_betti.begin(), r.predicted_betti.end());
  r.predicted_betti.erase(std::unique(r.predicted_betti.begin(), r.predicted_betti.end()), r.predicted_betti.end());
  return r;
}

inline Semigroup scaled_down(const std::vector<Int>& vals) {
  Int d = gcd_all(vals);
  std::vector<Int> q;
  for (Int v : vals) q.push_back(v / d);
  return Semigroup::numerical(q);
}

// The split of S along a partition of its generators: S1 = <A/gcd A>,
// S2 = <B/gcd B>, a1 = gcd A, a2 = gcd B. nullopt when it is not a gluing.
inline std::optional<GluingSpec> split_as_gluing(const Semigroup& s, const std::vector<std::size_t>& part_a) {
  if (!s.is_numerical()) throw InvalidArgument("numerical semigroup expected");
  std::vector<Int> va, vb;
  for (std::size_t i = 0; i < s.embedding_dimension(); ++i)
    (std::find(part_a.begin(), part_a.end(), i) != part_a.end() ? va : vb).push_back(s.value(i));
  if (va.empty() || vb.empty()) throw InvalidArgument("partition must be nontrivial");
  GluingSpec g{scaled_down(va), scaled_down(vb), gcd_all(va), gcd_all(vb)};
  if (numerical_gluing_violation(g)) return std::nullopt;
  return g;
}

// Affine gluing of <A1> and <A2> over d: d lies in both monoids and the
// intersection of their groups is exactly dZ.
struct AffineGluing {
  Semigroup glued;
  std::vector<Element> predicted_betti;  // sorted
  bool parts_complete = true;            // component Betti sets certified
};

inline std::optional<std::string> affine_gluing_violation(const std::vector<Element>& a1, const std::vector<Element>& a2,
                                                          const Element& d) {
  if (a1.empty() || a2.empty()) return "both parts need generators";
  if (is_zero(d) || !non_negative(d)) return "glue element must be a non-zero element of N^r";
  if (!Monoid(a1).contains(d)) return "glue element not in the first part";
  if (!Monoid(a2).contains(d)) return "glue element not in the second part";
  std::vector<Element> both(a1);
  both.insert(both.end(), a2.begin(), a2.end());
  if (group_rank(a1) + group_rank(a2) != group_rank(both) + 1) return "the groups of the parts do not meet in rank one";
  Int g = 0;
  for (Int x : d) g = std::gcd(g, x);
  for (Int k = 2; k <= g; ++k) {
    if (g % k) continue;
    Element q = d;
    for (auto& x : q) x /= k;
    if (in_group(q, a1) && in_group(q, a2)) return "the groups meet in a lattice strictly larger than dZ";
  }
  return std::nullopt;
}

inline AffineGluing glue_affine(const std::vector<Element>& a1, const std::vector<Element>& a2, const Element& d,
                                const BettiOptions& opt = {}) {
  if (auto why = affine_gluing_violation(a1, a2, d)) throw InvalidArgument("invalid gluing: " + *why);
  std::vector<Element> all(a1);
  all.insert(all.end(), a2.begin(), a2.end());
  AffineGluing r{Semigroup(all, true), {}, true};
  if (r.glued.embedding_dimension() != all.size()) throw InvalidArgument("parts are not minimally generated");
  std::set<Element> pred{d};
  for (const auto* part : {&a1, &a2}) {
    Semigroup sp(*part, true);
    auto p = betti_elements(sp, opt);
    r.parts_complete = r.parts_complete && p.complete;
    pred.insert(p.betti.begin(), p.betti.end());
  }
  r.predicted_betti.assign(pred.begin(), pred.end());
  return r;
}

// ---------------------------------------------------------------------------
// The Betti-divisible family n_i = f_i * prod(a) / a_i.

struct BettiDivisibleParams {
  std::vector<Int> a, f;
  friend bool operator==(const BettiDivisibleParams&, const BettiDivisibleParams&) = default;
};

inline std::optional<std::string> params_violation(const BettiDivisibleParams& p) {
  const std::size_t e = p.a.size();
  if (e < 2) return "at least two parameters are needed";
  if (p.f.size() != e) return "a and f differ in length";
  for (Int x : p.a)
    if (x < 2) return "every a_i must be at least 2";
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = i + 1; j < e; ++j)
      if (std::gcd(p.a[i], p.a[j]) != 1) return "a_i are not pairwise coprime";
  if (p.f[0] != 1 || p.f[1] != 1) return "f_1 and f_2 must equal 1";
  for (std::size_t i = 2; i < e; ++i)
    if (p.f[i] <= 0 || p.f[i] % p.f[i - 1] != 0) return "f must form a divisibility chain";
  for (std::size_t i = 0; i < e; ++i)
    if (std::gcd(p.f[i], p.a[i]) != 1) return "f_i and a_i are not coprime";
  return std::nullopt;
}

inline Int product(const std::vector<Int>& xs) {
  Int p = 1;
  for (Int x : xs) p = checked_mul(p, x);
  return p;
}

inline std::vector<Int> params_generators(const BettiDivisibleParams& p) {
  if (auto why = params_violation(p)) throw InvalidArgument("invalid parameters: " + *why);
  const Int all = product(p.a);
  std::vector<Int> n;
  for (std::size_t i = 0; i < p.a.size(); ++i) n.push_back(checked_mul(p.f[i], all / p.a[i]));
  return n;
}

inline Semigroup betti_divisible_from_params(const BettiDivisibleParams& p) {
  auto n = params_generators(p);
  Semigroup s = Semigroup::numerical(n);
  if (s.embedding_dimension() != n.size()) throw InvariantBreach("parametrized generators are not minimal");
  return s;
}

inline std::vector<Int> params_betti(const BettiDivisibleParams& p) {
  const Int all = product(p.a);
  std::vector<Int> out;
  for (std::size_t i = 1; i < p.a.size(); ++i) out.push_back(checked_mul(p.f[i], all));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct RecoveredParams {
  BettiDivisibleParams params;
  Arrangement arrangement;  // generator index for each parameter position
};

// Parameters read off the c-sorted arrangement: a_i = c_i and
// f_i = c_i n_i / (c_1 n_1). Present only when they satisfy the family
// hypotheses and reproduce S.
inline std::optional<RecoveredParams> recover_params(Analysis& A) {
  const auto& s = A.semigroup();
  if (!s.is_numerical()) throw InvalidArgument("numerical semigroup expected");
  if (s.embedding_dimension() < 2) return std::nullopt;
  RecoveredParams r;
  r.arrangement = c_sorted_arrangement(A);
  const Int base = checked_mul(*A.c(r.arrangement[0]), s.value(r.arrangement[0]));
  for (auto i : r.arrangement) {
    Int ci = *A.c(i), key = checked_mul(ci, s.value(i));
    if (key % base) return std::nullopt;
    r.params.a.push_back(ci);
    r.params.f.push_back(key / base);
  }
  if (params_violation(r.params)) return std::nullopt;
  auto n = params_generators(r.params);
  for (std::size_t k = 0; k < n.size(); ++k)
    if (n[k] != s.value(r.arrangement[k])) return std::nullopt;
  return r;
}

// Pairwise coprime a with n_i = prod_{j != i} a_j, if any.
inline std::optional<std::vector<Int>> single_betti_product_form(const Semigroup& s) {
  if (!s.is_numerical() || s.embedding_dimension() < 2) return std::nullopt;
  auto n = s.values();
  Int l = 1;
  for (Int x : n) l = checked_mul(l / std::gcd(l, x), x);
  std::vector<Int> a;
  for (Int x : n) a.push_back(l / x);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Int p = 1;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j == i) continue;
      if (std::gcd(a[i], a[j]) != 1) return std::nullopt;
      p = saturating_mul(p, a[j]);
    }
    if (p != n[i]) return std::nullopt;
  }
  return a;
}

}  // namespace isofact
