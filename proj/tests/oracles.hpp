#pragma once

// Brute-force reference implementations. Nothing here calls into the library's
// algorithms beyond plain vector arithmetic, so agreement is meaningful.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "isofact/intlin.hpp"

namespace oracle {

using isofact::Int;
using Vec = std::vector<Int>;

// Every x in N^e with sum x_i g_i = m, by nested enumeration.
inline std::vector<Vec> factorizations(const std::vector<Int>& g, Int m) {
  std::vector<Vec> out;
  Vec x(g.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, Int rest) -> void {
    if (i + 1 == g.size()) {
      if (rest % g[i] == 0) {
        x[i] = rest / g[i];
        out.push_back(x);
      }
      return;
    }
    for (Int c = 0; c * g[i] <= rest; ++c) {
      x[i] = c;
      self(self, i + 1, rest - c * g[i]);
    }
  };
  if (m >= 0) rec(rec, 0, m);
  std::sort(out.begin(), out.end());
  return out;
}

// Factorizations in N^e of an affine element, coordinates bounded by the
// element itself.
inline std::vector<Vec> factorizations_affine(const std::vector<Vec>& g, const Vec& m) {
  std::vector<Vec> out;
  Vec x(g.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, Vec rest) -> void {
    if (i == g.size()) {
      if (std::all_of(rest.begin(), rest.end(), [](Int v) { return v == 0; })) out.push_back(x);
      return;
    }
    for (Int c = 0;; ++c) {
      x[i] = c;
      self(self, i + 1, rest);
      for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= g[i][k];
      if (std::any_of(rest.begin(), rest.end(), [](Int v) { return v < 0; })) break;
    }
    x[i] = 0;
  };
  rec(rec, 0, m);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool meet(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return true;
  return false;
}

// R-classes by repeated O(n^2) relaxation of a label array until stable.
// Returned as sorted index lists, ordered by first index.
inline std::vector<std::vector<std::size_t>> r_classes(const std::vector<Vec>& z) {
  std::vector<std::size_t> label(z.size());
  std::iota(label.begin(), label.end(), std::size_t{0});
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < z.size(); ++i)
      for (std::size_t j = 0; j < z.size(); ++j)
        if (meet(z[i], z[j]) && label[j] < label[i]) {
          label[i] = label[j];
          changed = true;
        }
  }
  // Labels settle on the least index of each class, which is met first.
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (label[i] == i) {
      slot[i] = out.size();
      out.emplace_back();
    }
    out[slot[label[i]]].push_back(i);
  }
  return out;
}

// Membership table of <g> on [0, limit].
inline std::vector<bool> members(const std::vector<Int>& g, Int limit) {
  std::vector<bool> in(static_cast<std::size_t>(limit + 1), false);
  in[0] = true;
  for (Int v = 1; v <= limit; ++v)
    for (Int x : g)
      if (x <= v && in[static_cast<std::size_t>(v - x)]) {
        in[static_cast<std::size_t>(v)] = true;
        break;
      }
  return in;
}

// Frobenius number by scanning for a run of min(g) consecutive members.
inline Int frobenius(const std::vector<Int>& g) {
  Int m = *std::min_element(g.begin(), g.end());
  Int limit = 4 * m * *std::max_element(g.begin(), g.end()) + 4;
  auto in = members(g, limit);
  Int last = -1;
  for (Int v = 0; v <= limit; ++v)
    if (!in[static_cast<std::size_t>(v)]) last = v;
  return last;
}

inline Int genus(const std::vector<Int>& g) {
  Int f = frobenius(g);
  if (f < 0) return 0;
  auto in = members(g, f);
  return static_cast<Int>(std::count(in.begin(), in.end(), false));
}

// Betti elements of a numerical semigroup: every s up to max(g) + max Ap(S; g0)
// with at least two R-classes.
inline std::vector<Int> betti_sweep(const std::vector<Int>& g) {
  Int n1 = *std::min_element(g.begin(), g.end());
  Int f = frobenius(g);
  auto in = members(g, f + n1 + 1);
  Int max_ap = 0;
  for (Int v = 0; v <= f + n1; ++v)
    if (in[static_cast<std::size_t>(v)] && (v < n1 || !in[static_cast<std::size_t>(v - n1)])) max_ap = std::max(max_ap, v);
  Int limit = *std::max_element(g.begin(), g.end()) + max_ap;
  std::vector<Int> out;
  for (Int s = 1; s <= limit; ++s)
    if (r_classes(factorizations(g, s)).size() >= 2) out.push_back(s);
  return out;
}

// Numerical semigroups of genus g as sorted gap sets, by testing every g-subset
// of [1, 2g - 1] for closure of the complement under addition.
inline std::size_t count_genus(int g) {
  if (g == 0) return 1;
  const int top = 2 * g - 1;
  std::size_t count = 0;
  std::vector<int> gaps;
  auto closed = [&] {
    std::vector<bool> gap(static_cast<std::size_t>(2 * top + 2), false);
    for (int x : gaps) gap[static_cast<std::size_t>(x)] = true;
    for (int a = 1; a <= top; ++a)
      for (int b = a; a + b <= top; ++b)
        if (!gap[static_cast<std::size_t>(a)] && !gap[static_cast<std::size_t>(b)] && gap[static_cast<std::size_t>(a + b)])
          return false;
    return true;
  };
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(gaps.size()) == g) {
      if (closed()) ++count;
      return;
    }
    for (int x = start; x <= top; ++x) {
      gaps.push_back(x);
      self(self, x + 1);
      gaps.pop_back();
    }
  };
  rec(rec, 1);
  return count;
}

// Minimal generators of the numerical semigroup spanned by g.
inline std::vector<Int> minimal_generators(std::vector<Int> g) {
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  std::vector<Int> out;
  Int limit = g.back();
  auto in = members(g, limit);
  for (Int x : g) {
    bool reducible = false;
    for (Int a = 1; a < x && !reducible; ++a)
      reducible = in[static_cast<std::size_t>(a)] && in[static_cast<std::size_t>(x - a)];
    if (!reducible) out.push_back(x);
  }
  return out;
}

// Hand-rolled generator of small numerical semigroups.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  Int uniform(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng_); }

  // Minimal generators of <x_1..x_k> with gcd 1 and values in [2, hi].
  std::vector<Int> numerical(std::size_t k, Int hi) {
    while (true) {
      std::vector<Int> g;
      for (std::size_t i = 0; i < k; ++i) g.push_back(uniform(2, hi));
      Int d = 0;
      for (Int x : g) d = std::gcd(d, x);
      if (d != 1) continue;
      return minimal_generators(g);
    }
  }

  std::pair<Int, Int> coprime_pair(Int product_max) {
    while (true) {
      Int a = uniform(2, product_max / 2), b = uniform(2, product_max / 2);
      if (a == b || std::gcd(a, b) != 1 || a * b > product_max) continue;
      return {std::min(a, b), std::max(a, b)};
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
