#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "factor.hpp"

namespace isofact {

// Least c with c * n_{a[i]} in the monoid of the generators before it.
inline Int c_star(const Semigroup& s, const Arrangement& a, std::size_t i) {
  check_arrangement(s, a);
  if (i < s.dimension() || i >= a.size()) throw InvalidArgument("c* is defined only past the rays");
  return prefix_min_multiple(s, a, i);
}

// d_i = gcd of the first i generators of the arrangement (numerical only).
inline Int prefix_gcd(const Semigroup& s, const Arrangement& a, std::size_t i) {
  Int d = 0;
  for (std::size_t j = 0; j < i; ++j) d = std::gcd(d, s.value(a[j]));
  return d;
}

namespace detail {

inline Int group_min_multiple(const std::vector<Element>& prefix, const Element& g) {
  if (g.size() == 1) {
    Int d = 0;
    for (const auto& p : prefix) d = std::gcd(d, p[0]);
    return d / std::gcd(d, g[0]);
  }
  for (Int c = 1; c <= 1'000'000; ++c)
    if (in_group(scale(c, g), prefix)) return c;
  throw Infeasible("no multiple lies in the group of the prefix");
}

}  // namespace detail

// Least c with c * n_{a[i]} in the group generated by the generators before it.
inline Int c_bar(const Semigroup& s, const Arrangement& a, std::size_t i) {
  check_arrangement(s, a);
  if (i < s.dimension() || i >= a.size()) throw InvalidArgument("c-bar is defined only past the rays");
  std::vector<Element> prefix;
  for (std::size_t j = 0; j < i; ++j) prefix.push_back(s.gen(a[j]));
  return detail::group_min_multiple(prefix, s.gen(a[i]));
}

// Least c with c * n_i in the monoid of all other generators; nullopt when no
// multiple ever lands there.
inline std::optional<Int> c_plain_opt(const Semigroup& s, std::size_t i) {
  if (s.embedding_dimension() < 2) return std::nullopt;
  std::vector<Element> others;
  for (std::size_t j = 0; j < s.embedding_dimension(); ++j)
    if (j != i) others.push_back(s.gen(j));
  return detail::min_multiple_in(Monoid(others), s.gen(i));
}

inline Int c_plain(const Semigroup& s, std::size_t i) {
  auto c = c_plain_opt(s, i);
  if (!c) throw InvalidArgument("no multiple of generator " + std::to_string(i + 1) + " lies in the other generators");
  return *c;
}

// Largest h with h * n_i in Ap(S; rays), scanning upwards.
inline Int alpha(const Semigroup& s, const std::vector<std::size_t>& rays, std::size_t i) {
  if (!Semigroup::is_valid_ray_set(s.gens(), rays)) throw NotSimplicial("not a valid set of rays");
  if (std::find(rays.begin(), rays.end(), i) != rays.end()) throw InvalidArgument("alpha is not defined for rays");
  auto in_apery = [&](const Element& v) {
    for (auto j : rays) {
      Element d = v - s.gen(j);
      if (non_negative(d) && s.contains(d)) return false;
    }
    return true;
  };
  Int h = 1;
  Element v = s.gen(i);
  while (true) {
    Element next = v + s.gen(i);
    if (!in_apery(next)) return h;
    v = std::move(next);
    ++h;
  }
}

struct ArrangementConstants {
  Arrangement arrangement;
  std::size_t rays = 0;
  // Indexed by arrangement position. c_bar, c_star and alpha are zero at ray
  // positions; c is zero where no multiple lands in the other generators.
  std::vector<Int> c_bar, c_star, c, alpha;
  std::vector<Int> d;  // numerical: d[i] = gcd of the first i generators, d[0] = 0
};

inline ArrangementConstants arrangement_constants(const Semigroup& s, const Arrangement& a) {
  check_arrangement(s, a);
  ArrangementConstants k;
  k.arrangement = a;
  k.rays = s.dimension();
  const std::size_t e = a.size();
  k.c_bar.assign(e, 0);
  k.c_star.assign(e, 0);
  k.c.assign(e, 0);
  k.alpha.assign(e, 0);
  std::vector<std::size_t> rays(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k.rays));
  for (std::size_t i = 0; i < e; ++i) {
    k.c[i] = c_plain_opt(s, a[i]).value_or(0);
    if (i < k.rays) continue;
    k.c_bar[i] = c_bar(s, a, i);
    k.c_star[i] = c_star(s, a, i);
    k.alpha[i] = alpha(s, rays, a[i]);
  }
  if (s.ambient_dim() == 1)
    for (std::size_t i = 0; i <= e; ++i) k.d.push_back(prefix_gcd(s, a, i));
  return k;
}

namespace detail {

// Decides, for a set of already placed generators, whether appending g keeps
// the arrangement free: c-bar * g must lie in the monoid of the placed ones.
class FreeStepOracle {
 public:
  explicit FreeStepOracle(const Semigroup& s) : s_(s) {}

  bool step_ok(std::uint64_t placed, std::size_t g) {
    auto key = std::make_pair(placed, g);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    std::vector<Element> prefix;
    for (std::size_t j = 0; j < s_.embedding_dimension(); ++j)
      if (placed >> j & 1) prefix.push_back(s_.gen(j));
    Int cb = group_min_multiple(prefix, s_.gen(g));
    bool ok = Monoid(prefix).contains(scale(cb, s_.gen(g)));
    cache_.emplace(key, ok);
    return ok;
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::size_t>& k) const noexcept {
      return std::hash<std::uint64_t>{}(k.first * 131 + k.second);
    }
  };
  const Semigroup& s_;
  std::unordered_map<std::pair<std::uint64_t, std::size_t>, bool, KeyHash> cache_;
};

inline void require_small_edim(const Semigroup& s) {
  if (s.embedding_dimension() > 63) throw Infeasible("arrangement search supports at most 63 generators");
}

}  // namespace detail

// First free arrangement (in lexicographic search order) starting with the
// given rays, or nullopt.
inline std::optional<Arrangement> find_free_arrangement(const Semigroup& s, const std::vector<std::size_t>& rays,
                                                        detail::FreeStepOracle* oracle = nullptr) {
  detail::require_small_edim(s);
  if (!Semigroup::is_valid_ray_set(s.gens(), rays)) throw NotSimplicial("not a valid set of rays");
  detail::FreeStepOracle local(s);
  if (!oracle) oracle = &local;
  const std::size_t e = s.embedding_dimension();
  Arrangement a(rays);
  std::uint64_t placed = 0;
  for (auto r : rays) placed |= std::uint64_t{1} << r;
  std::optional<Arrangement> found;
  // Completability depends only on the placed set.
  std::unordered_set<std::uint64_t> dead;
  auto rec = [&](auto&& self) -> void {
    if (found) return;
    if (a.size() == e) {
      found = a;
      return;
    }
    if (dead.count(placed)) return;
    for (std::size_t g = 0; g < e && !found; ++g) {
      if (placed >> g & 1) continue;
      if (!oracle->step_ok(placed, g)) continue;
      a.push_back(g);
      placed |= std::uint64_t{1} << g;
      self(self);
      placed &= ~(std::uint64_t{1} << g);
      a.pop_back();
    }
    if (!found) dead.insert(placed);
  };
  rec(rec);
  return found;
}

inline std::optional<Arrangement> find_free_arrangement_any(const Semigroup& s) {
  if (!s.is_simplicial()) return std::nullopt;
  detail::FreeStepOracle oracle(s);
  for (const auto& rays : valid_ray_sets(s))
    if (auto a = find_free_arrangement(s, rays, &oracle)) return a;
  return std::nullopt;
}

}  // namespace isofact
