#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace isofact {

using Int = std::int64_t;
// A point of Z^r; semigroup elements are the ones with non-negative coordinates.
using Vec = std::vector<Int>;
using Element = Vec;
// Exponent vector over the stored generators.
using Factorization = Vec;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("integer overflow in multiplication");
  return r;
}

// Product that clamps at INT64_MAX; only for quantities used in comparisons.
inline Int saturating_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) return INT64_MAX;
  return r;
}

inline Vec operator+(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

inline Vec scale(Int k, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(k, a[i]);
  return r;
}

inline bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

inline bool non_negative(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x >= 0; });
}

inline Int total_degree(const Vec& v) {
  Int s = 0;
  for (Int x : v) s = checked_add(s, x);
  return s;
}

// Coordinatewise a <= b.
inline bool dominated(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Shared support, i.e. x . y != 0 for non-negative vectors.
inline bool supports_meet(const Vec& x, const Vec& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > 0 && y[i] > 0) return true;
  return false;
}

inline Vec unit_vector(std::size_t n, std::size_t i, Int k = 1) {
  Vec v(n, 0);
  v[i] = k;
  return v;
}

// Combination sum_i x_i * gens[i].
inline Element evaluate(const Factorization& x, std::span<const Element> gens) {
  Element r(gens.empty() ? 0 : gens[0].size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) r = r + scale(x[i], gens[i]);
  return r;
}

inline Int gcd_all(std::span<const Int> xs) {
  Int g = 0;
  for (Int x : xs) g = std::gcd(g, x);
  return g;
}

// Exact rational with checked 64-bit parts, always normalised (den > 0).
class Rational {
 public:
  Rational(Int n = 0) : num_(n), den_(1) {}
  Rational(Int n, Int d) : num_(n), den_(d) {
    if (d == 0) throw InvalidArgument("zero denominator");
    normalise();
  }

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Int g = std::gcd(a.den_, b.den_);
    Int n = checked_add(checked_mul(a.num_, b.den_ / g), checked_mul(b.num_, a.den_ / g));
    return Rational(n, checked_mul(a.den_ / g, b.den_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + Rational(-b.num_, b.den_); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Int g1 = std::gcd(a.num_, b.den_), g2 = std::gcd(b.num_, a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return Rational(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw InvalidArgument("division by zero");
    return a * Rational(b.den_, b.num_);
  }
  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  void normalise() {
    if (den_ < 0) {
      num_ = checked_sub(0, num_);
      den_ = checked_sub(0, den_);
    }
    Int g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }
  Int num_, den_;
};

namespace detail {

inline std::size_t common_dimension(std::span<const Vec> gens) {
  if (gens.empty()) throw InvalidArgument("empty generator list");
  std::size_t r = gens[0].size();
  if (r == 0) throw InvalidArgument("zero-dimensional vector");
  for (const auto& g : gens)
    if (g.size() != r) throw InvalidArgument("dimension mismatch among generators");
  return r;
}

// Row echelon form of the lattice spanned by the rows, built with unimodular
// row operations only, so the row lattice is preserved.
struct Echelon {
  std::vector<Vec> rows;                  // non-zero rows, pivots strictly increasing
  std::vector<std::size_t> pivot_column;  // one per row, pivot entry > 0
};

inline Echelon integer_echelon(std::span<const Vec> gens) {
  std::size_t cols = common_dimension(gens);
  std::vector<Vec> m(gens.begin(), gens.end());
  Echelon out;
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < m.size(); ++c) {
    while (true) {
      std::size_t best = m.size();
      for (std::size_t i = top; i < m.size(); ++i)
        if (m[i][c] != 0 && (best == m.size() || std::abs(m[i][c]) < std::abs(m[best][c]))) best = i;
      if (best == m.size()) break;
      std::swap(m[top], m[best]);
      bool reduced = true;
      for (std::size_t i = top + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        Int q = m[i][c] / m[top][c];
        for (std::size_t k = c; k < cols; ++k) m[i][k] = checked_sub(m[i][k], checked_mul(q, m[top][k]));
        if (m[i][c] != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (top < m.size() && m[top][c] != 0) {
      if (m[top][c] < 0)
        for (auto& x : m[top]) x = -x;
      out.rows.push_back(m[top]);
      out.pivot_column.push_back(c);
      ++top;
    }
  }
  return out;
}

// Solve sum_j lambda_j gens_j = v over Q for independent gens.
inline std::optional<std::vector<Rational>> solve_rational(const Vec& v, std::span<const Vec> gens) {
  std::size_t r = common_dimension(gens);
  if (v.size() != r) throw InvalidArgument("dimension mismatch between vector and generators");
  std::size_t k = gens.size();
  // Augmented matrix: r equations, k unknowns.
  std::vector<std::vector<Rational>> a(r, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = Rational(gens[j][i]);
    a[i][k] = Rational(v[i]);
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = row;
    while (p < r && a[p][c].sign() == 0) ++p;
    if (p == r) throw InvalidArgument("generators are linearly dependent");
    std::swap(a[row], a[p]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row || a[i][c].sign() == 0) continue;
      Rational f = a[i][c] / a[row][c];
      for (std::size_t t = c; t <= k; ++t) a[i][t] = a[i][t] - f * a[row][t];
    }
    pivots.push_back(row);
    ++row;
  }
  for (std::size_t i = row; i < r; ++i)
    if (a[i][k].sign() != 0) return std::nullopt;
  std::vector<Rational> sol(k);
  for (std::size_t c = 0; c < k; ++c) sol[c] = a[pivots[c]][k] / a[pivots[c]][c];
  return sol;
}

}  // namespace detail

// Rank of the subgroup of Z^r generated by gens.
inline std::size_t group_rank(std::span<const Vec> gens) {
  return detail::integer_echelon(gens).rows.size();
}

inline bool in_group(const Vec& v, std::span<const Vec> gens) {
  std::size_t r = detail::common_dimension(gens);
  if (v.size() != r) throw InvalidArgument("dimension mismatch between vector and generators");
  auto ech = detail::integer_echelon(gens);
  Vec w = v;
  std::size_t next = 0;
  for (std::size_t c = 0; c < r; ++c) {
    if (next < ech.rows.size() && ech.pivot_column[next] == c) {
      const Vec& row = ech.rows[next];
      if (w[c] % row[c] != 0) return false;
      Int q = w[c] / row[c];
      for (std::size_t k = c; k < r; ++k) w[k] = checked_sub(w[k], checked_mul(q, row[k]));
      ++next;
    } else if (w[c] != 0) {
      return false;
    }
  }
  return true;
}

// v in the cone spanned over Q+ by rays, which must be linearly independent.
inline bool in_rational_cone(const Vec& v, std::span<const Vec> rays) {
  auto sol = detail::solve_rational(v, rays);
  if (!sol) return false;
  return std::all_of(sol->begin(), sol->end(), [](const Rational& q) { return q.sign() >= 0; });
}

// Cone membership for an arbitrary finite generating set: by Caratheodory the
// point lies in the cone of some linearly independent subset.
inline bool in_rational_cone_general(const Vec& v, std::span<const Vec> gens) {
  if (is_zero(v)) return true;
  if (gens.empty()) return false;
  std::size_t k = gens.size();
  std::size_t rank = group_rank(gens);
  std::vector<std::size_t> idx;
  bool found = false;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (found) return;
    if (!idx.empty()) {
      std::vector<Vec> sub;
      for (auto i : idx) sub.push_back(gens[i]);
      if (group_rank(sub) < sub.size()) return;
      if (in_rational_cone(v, sub)) {
        found = true;
        return;
      }
    }
    if (idx.size() == rank) return;
    for (std::size_t i = start; i < k && !found; ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);
  return found;
}

// Integer coordinates of v in the lattice of independent gens, if any.
inline std::optional<Vec> solve_in_lattice_of_independent_gens(const Vec& v, std::span<const Vec> gens) {
  auto sol = detail::solve_rational(v, gens);
  if (!sol) return std::nullopt;
  Vec z;
  for (const auto& q : *sol) {
    if (!q.is_integer()) return std::nullopt;
    z.push_back(q.num());
  }
  return z;
}

}  // namespace isofact
