#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "isolated.hpp"

namespace isofact {

using RaySet = std::vector<std::size_t>;

// Lazily computed data for one semigroup. Caches are unsynchronized: use one
// instance per thread.
class Analysis {
 public:
  explicit Analysis(Semigroup s, BettiOptions opt = {}) : s_(std::move(s)), opt_(opt) {}
  Analysis(const Analysis&) = delete;
  Analysis& operator=(const Analysis&) = delete;

  const Semigroup& semigroup() const { return s_; }
  const BettiOptions& options() const { return opt_; }
  std::size_t edim() const { return s_.embedding_dimension(); }

  const BettiProfile& betti() {
    if (!betti_) betti_ = betti_elements(s_, opt_);
    return *betti_;
  }

  const IsolatedProfile& isolated() {
    if (!isolated_) isolated_ = isolated_profile(s_, betti(), opt_.degree_bound);
    return *isolated_;
  }

  const Fiber& fiber_of(const Element& m) {
    auto it = fibers_.find(m);
    if (it == fibers_.end()) it = fibers_.emplace(m, fiber(s_, m, opt_.fiber_cap)).first;
    return it->second;
  }
  const Fiber& fiber_of(Int m) { return fiber_of(Element{m}); }
  std::size_t denumerant(const Element& m) { return fiber_of(m).denumerant(); }

  // Sorted Ap(S; rays).
  const std::vector<Element>& apery(const RaySet& rays) {
    auto it = apery_.find(rays);
    if (it != apery_.end()) return it->second;
    std::vector<Element> ap;
    if (s_.is_numerical()) {
      if (rays.size() != 1) throw NotSimplicial("a numerical ray set is a single generator");
      for (Int v : apery_numerical(s_, s_.value(rays[0]))) ap.push_back(Element{v});
    } else {
      ap = apery_rays(s_, rays);
    }
    return apery_.emplace(rays, std::move(ap)).first->second;
  }

  bool in_apery(const RaySet& rays, const Element& v) {
    const auto& ap = apery(rays);
    return std::binary_search(ap.begin(), ap.end(), v);
  }

  std::optional<Int> c(std::size_t i) {
    if (c_.empty()) {
      c_.resize(edim());
      for (std::size_t j = 0; j < edim(); ++j) c_[j] = c_plain_opt(s_, j);
    }
    return c_[i];
  }

  Int alpha(const RaySet& rays, std::size_t i) {
    auto key = std::make_pair(rays, i);
    auto it = alpha_.find(key);
    if (it == alpha_.end()) it = alpha_.emplace(key, isofact::alpha(s_, rays, i)).first;
    return it->second;
  }

  detail::FreeStepOracle& free_oracle() {
    if (!oracle_) oracle_ = std::make_unique<detail::FreeStepOracle>(s_);
    return *oracle_;
  }

  std::vector<std::size_t> non_rays(const RaySet& rays) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < s_.embedding_dimension(); ++i)
      if (std::find(rays.begin(), rays.end(), i) == rays.end()) out.push_back(i);
    return out;
  }

  const std::vector<RaySet>& ray_sets() {
    if (!ray_sets_) ray_sets_ = s_.is_simplicial() ? valid_ray_sets(s_) : std::vector<RaySet>{};
    return *ray_sets_;
  }

 private:
  Semigroup s_;
  BettiOptions opt_;
  std::optional<BettiProfile> betti_;
  std::optional<IsolatedProfile> isolated_;
  std::map<Element, Fiber> fibers_;
  std::map<RaySet, std::vector<Element>> apery_;
  std::vector<std::optional<Int>> c_;
  std::map<std::pair<RaySet, std::size_t>, Int> alpha_;
  std::unique_ptr<detail::FreeStepOracle> oracle_;
  std::optional<std::vector<RaySet>> ray_sets_;
};

// ---------------------------------------------------------------------------
// Free arrangements.

inline bool is_free(Analysis& A, const Arrangement& a) {
  const auto& s = A.semigroup();
  check_arrangement(s, a);
  detail::require_small_edim(s);
  std::uint64_t placed = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i >= s.dimension() && !A.free_oracle().step_ok(placed, a[i])) return false;
    placed |= std::uint64_t{1} << a[i];
  }
  return true;
}

inline std::optional<Arrangement> free_arrangement_some(Analysis& A) {
  for (const auto& rays : A.ray_sets())
    if (auto a = find_free_arrangement(A.semigroup(), rays, &A.free_oracle())) return a;
  return std::nullopt;
}

inline std::optional<Arrangement> free_arrangement_from(Analysis& A, const RaySet& rays) {
  return find_free_arrangement(A.semigroup(), rays, &A.free_oracle());
}

// Every arrangement (over every valid ray set) is free. Memoized on the
// placed set since a step's validity depends only on it.
inline bool is_free_all_arrangements(Analysis& A) {
  const auto& s = A.semigroup();
  if (!s.is_simplicial()) return false;
  detail::require_small_edim(s);
  const std::size_t e = s.embedding_dimension();
  const std::uint64_t full = e == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << e) - 1;
  std::unordered_map<std::uint64_t, bool> memo;
  auto rec = [&](auto&& self, std::uint64_t placed) -> bool {
    if (placed == full) return true;
    if (auto it = memo.find(placed); it != memo.end()) return it->second;
    bool ok = true;
    for (std::size_t g = 0; g < e && ok; ++g) {
      if (placed >> g & 1) continue;
      ok = A.free_oracle().step_ok(placed, g) && self(self, placed | std::uint64_t{1} << g);
    }
    memo.emplace(placed, ok);
    return ok;
  };
  for (const auto& rays : A.ray_sets()) {
    std::uint64_t placed = 0;
    for (auto r : rays) placed |= std::uint64_t{1} << r;
    if (!rec(rec, placed)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Rectangular Apery sets.

// Whether Ap(S; rays) equals {sum lambda_i n_i : 0 <= lambda_i <= bound[i]}
// as a set of elements; bound is indexed by generator, rays ignored. Box
// points are only expanded while their value stays inside the Apery set.
inline bool apery_is_box(Analysis& A, const RaySet& rays, const std::vector<Int>& bound) {
  const auto& s = A.semigroup();
  const auto& ap = A.apery(rays);
  auto idx = A.non_rays(rays);
  std::set<Element> seen;
  bool inside = true;
  auto rec = [&](auto&& self, std::size_t k, const Element& v) -> void {
    if (!inside) return;
    if (k == idx.size()) {
      seen.insert(v);
      return;
    }
    Element w = v;
    for (Int l = 0; l <= bound[idx[k]] && inside; ++l) {
      if (!std::binary_search(ap.begin(), ap.end(), w)) {
        inside = false;
        return;
      }
      self(self, k + 1, w);
      w = w + s.gen(idx[k]);
    }
  };
  rec(rec, 0, Element(s.ambient_dim(), 0));
  return inside && seen.size() == ap.size();
}

// Exponents mu (indexed by generator, zero on rays) with Ap(S; rays) the mu-box.
inline std::optional<std::vector<Int>> rectangular_exponents(Analysis& A, const RaySet& rays) {
  const auto& s = A.semigroup();
  auto maxima = maximal_elements(s, A.apery(rays));
  if (maxima.size() != 1) return std::nullopt;
  for (const auto& mu : A.fiber_of(maxima[0]).factorizations)
    if (apery_is_box(A, rays, mu)) return mu;
  return std::nullopt;
}

inline bool is_rectangular(Analysis& A, const RaySet& rays) { return rectangular_exponents(A, rays).has_value(); }

inline bool is_c_rectangular(Analysis& A, const RaySet& rays) {
  std::vector<Int> bound(A.edim(), 0);
  for (auto i : A.non_rays(rays)) {
    auto c = A.c(i);
    if (!c) return false;
    bound[i] = *c - 1;
  }
  return apery_is_box(A, rays, bound);
}

inline std::vector<Int> alpha_vector(Analysis& A, const RaySet& rays) {
  std::vector<Int> bound(A.edim(), 0);
  for (auto i : A.non_rays(rays)) bound[i] = A.alpha(rays, i);
  return bound;
}

inline bool is_alpha_rectangular(Analysis& A, const RaySet& rays) { return apery_is_box(A, rays, alpha_vector(A, rays)); }

inline bool is_alpha_rectangular_every_generator(Analysis& A) {
  if (!A.semigroup().is_numerical()) throw InvalidArgument("defined for numerical semigroups");
  for (std::size_t j = 0; j < A.edim(); ++j)
    if (!is_alpha_rectangular(A, {j})) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Orderings of Betti elements.

// b = k * a for some integer k.
inline bool divides(const Element& a, const Element& b) {
  std::size_t p = 0;
  while (p < a.size() && a[p] == 0) ++p;
  if (p == a.size()) return is_zero(b);
  if (b[p] % a[p] != 0) return false;
  return scale(b[p] / a[p], a) == b;
}

template <class Rel>
bool totally_ordered(const std::vector<Element>& xs, Rel rel) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!rel(xs[i], xs[j]) && !rel(xs[j], xs[i])) return false;
  return true;
}

inline bool is_betti_sorted(Analysis& A) {
  A.betti().require_complete();
  return totally_ordered(A.betti().betti, [&](const Element& a, const Element& b) { return A.semigroup().leq(a, b); });
}

inline bool is_betti_isolated_sorted(Analysis& A) {
  A.betti().require_complete();
  return totally_ordered(A.betti().ibetti(), [&](const Element& a, const Element& b) { return A.semigroup().leq(a, b); });
}

inline bool is_betti_divisible(Analysis& A) {
  A.betti().require_complete();
  return totally_ordered(A.betti().betti, divides);
}

inline bool is_betti_isolated_divisible(Analysis& A) {
  A.betti().require_complete();
  return totally_ordered(A.betti().ibetti(), divides);
}

inline bool has_single_betti(Analysis& A) {
  A.betti().require_complete();
  return A.betti().betti.size() == 1;
}

inline std::optional<Element> single_betti_minimal(Analysis& A) {
  A.betti().require_complete();
  auto mins = betti_minimals(A.semigroup(), A.betti());
  if (mins.size() != 1) return std::nullopt;
  return mins[0];
}

inline bool is_ci(Analysis& A) { return is_complete_intersection(A.semigroup(), A.betti()); }

// Generator indices stably sorted by c_i * n_i (numerical).
inline Arrangement c_sorted_arrangement(Analysis& A) {
  const auto& s = A.semigroup();
  if (!s.is_numerical()) throw InvalidArgument("defined for numerical semigroups");
  Arrangement a = stored_arrangement(s);
  std::vector<Int> key(a.size());
  for (auto i : a) key[i] = checked_mul(*A.c(i), s.value(i));
  std::stable_sort(a.begin(), a.end(), [&](std::size_t x, std::size_t y) { return key[x] < key[y]; });
  return a;
}

// ---------------------------------------------------------------------------
// Classification report.

struct ClassificationReport {
  std::optional<bool> cohen_macaulay, gorenstein;
  std::optional<bool> free_for_stored, free_some_arrangement, free_all_arrangements;
  std::optional<Arrangement> free_witness;
  std::optional<bool> complete_intersection;
  std::optional<bool> rectangular, c_rectangular, alpha_rectangular, alpha_rectangular_every_generator;
  std::vector<RaySet> rectangular_for, c_rectangular_for, alpha_rectangular_for;
  std::optional<std::vector<Int>> rectangular_exponents;  // for the first ray set in rectangular_for
  std::optional<bool> betti_sorted, betti_isolated_sorted, betti_divisible, betti_isolated_divisible;
  std::optional<bool> single_betti, single_betti_minimal;
  std::optional<Element> betti_minimal;
  std::vector<std::string> notes;
};

inline ClassificationReport classify(Analysis& A) {
  ClassificationReport r;
  const auto& s = A.semigroup();
  if (s.is_simplicial()) {
    r.cohen_macaulay = is_cohen_macaulay(s);
    if (*r.cohen_macaulay) r.gorenstein = is_gorenstein(s);
    if (s.embedding_dimension() <= 63) {
      r.free_for_stored = is_free(A, stored_arrangement(s));
      r.free_witness = free_arrangement_some(A);
      r.free_some_arrangement = r.free_witness.has_value();
      r.free_all_arrangements = is_free_all_arrangements(A);
    } else {
      r.notes.push_back("arrangement searches skipped: more than 63 generators");
    }
    for (const auto& rays : A.ray_sets()) {
      if (auto mu = rectangular_exponents(A, rays)) {
        if (r.rectangular_for.empty()) r.rectangular_exponents = *mu;
        r.rectangular_for.push_back(rays);
      }
      if (is_c_rectangular(A, rays)) r.c_rectangular_for.push_back(rays);
      if (is_alpha_rectangular(A, rays)) r.alpha_rectangular_for.push_back(rays);
    }
    r.rectangular = !r.rectangular_for.empty();
    r.c_rectangular = !r.c_rectangular_for.empty();
    r.alpha_rectangular = !r.alpha_rectangular_for.empty();
    if (s.is_numerical()) r.alpha_rectangular_every_generator = r.alpha_rectangular_for.size() == s.embedding_dimension();
  } else {
    r.notes.push_back("not simplicial: Apery-set and arrangement predicates skipped");
  }
  const auto& p = A.betti();
  if (p.complete) {
    r.complete_intersection = is_ci(A);
    r.betti_sorted = is_betti_sorted(A);
    r.betti_isolated_sorted = is_betti_isolated_sorted(A);
    r.betti_divisible = is_betti_divisible(A);
    r.betti_isolated_divisible = is_betti_isolated_divisible(A);
    r.single_betti = has_single_betti(A);
    r.betti_minimal = single_betti_minimal(A);
    r.single_betti_minimal = r.betti_minimal.has_value();
  } else {
    r.notes.push_back("Betti elements from a bounded sweep: Betti-based flags skipped");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Bound chains on isolated-factorization counts. Each chain holds when its
// values are non-decreasing.

struct BoundCheck {
  std::string id;
  std::string context;
  std::vector<std::string> names;
  std::vector<Int> values;
  bool applicable = true;
  std::string skipped_reason;

  bool holds() const {
    if (!applicable) return true;
    for (std::size_t k = 1; k < values.size(); ++k)
      if (values[k - 1] > values[k]) return false;
    return true;
  }
};

inline std::string ray_context(const Semigroup& s, const RaySet& rays) {
  std::string out = s.is_numerical() ? "generator " : "rays ";
  for (std::size_t k = 0; k < rays.size(); ++k) out += (k ? "," : "") + std::to_string(rays[k] + 1);
  return out;
}

inline Int product_of_c(Analysis& A) {
  Int p = 1;
  for (std::size_t i = 0; i < A.edim(); ++i) p = saturating_mul(p, A.c(i).value_or(0));
  return p;
}

inline Int sum_nc(const BettiProfile& p) {
  Int n = 0;
  for (const auto& f : p.fibers) n += static_cast<Int>(f.nc());
  return n;
}

inline std::vector<BoundCheck> verify_bounds(Analysis& A) {
  std::vector<BoundCheck> out;
  const auto& s = A.semigroup();
  auto skip = [&](std::string id, std::string why) {
    BoundCheck b;
    b.id = std::move(id);
    b.applicable = false;
    b.skipped_reason = std::move(why);
    out.push_back(std::move(b));
  };
  if (!s.is_simplicial() || !A.betti().complete) {
    skip("ib-codim-lower", "needs a simplicial semigroup with complete Betti data");
    skip("ib-cm-upper", "needs a simplicial semigroup with complete Betti data");
    return out;
  }
  if (s.codimension() == 0) {
    skip("ib-codim-lower", "codimension zero: no Betti elements");
    return out;
  }
  const auto& p = A.betti();
  const auto& iso = A.isolated();
  const Int m = static_cast<Int>(s.codimension());
  const Int ib = static_cast<Int>(iso.i_b());
  const Int snc = sum_nc(p);
  out.push_back({"ib-codim-lower", "", {"m+1", "i_b"}, {m + 1, ib}, true, {}});

  if (is_cohen_macaulay(s)) {
    for (const auto& rays : A.ray_sets()) {
      const Int d = static_cast<Int>(A.apery(rays).size());
      out.push_back({"ib-cm-upper",
                     ray_context(s, rays),
                     {"i_b", "sum nc", "(2d-m)(m-1)+2", "d(d-1)"},
                     {ib, snc, checked_add(checked_mul(2 * d - m, m - 1), 2), checked_mul(d, d - 1)}, true, {}});
    }
  } else {
    skip("ib-cm-upper", "not Cohen-Macaulay");
  }

  if (!s.is_numerical()) return out;
  const Int e = static_cast<Int>(s.embedding_dimension());
  const Int is = static_cast<Int>(iso.i_s());
  const Int i_total = is + ib;
  const Int b1 = p.betti.front()[0];
  const Int mult = multiplicity(s);
  Int sum_c = 0;
  for (std::size_t i = 0; i < A.edim(); ++i) sum_c += *A.c(i);
  const Int prod_c = product_of_c(A);
  out.push_back({"is-chain", "", {"e+3", "sum c - e + 2", "i_s", "min Betti"}, {e + 3, sum_c - e + 2, is, b1}, true, {}});
  out.push_back({"i-atom-upper", "", {"i", "e + prod c"}, {i_total, prod_c == INT64_MAX ? prod_c : e + prod_c}, true, {}});
  out.push_back({"is-atom-upper", "", {"i_s", "prod c"}, {is, prod_c}, true, {}});
  out.push_back({"i-chain",
                 "",
                 {"2e+3", "i", "min Betti + sum nc", "min Betti + m(S)(m(S)-1)"},
                 {2 * e + 3, i_total, b1 + snc, b1 + mult * (mult - 1)}, true, {}});
  return out;
}

}  // namespace isofact
