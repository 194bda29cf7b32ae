#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "intlin.hpp"

namespace isofact {

struct VecHash {
  std::size_t operator()(const Vec& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
    for (Int x : v) h ^= std::hash<Int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

inline constexpr std::size_t kDefaultFiberCap = 1'000'000;

// The monoid generated by an arbitrary finite list of vectors (redundancy and
// gcd allowed). Answers membership, including membership in the submonoid of
// any prefix of the list, and enumerates factorizations. Copies share caches.
class Monoid {
 public:
  explicit Monoid(std::vector<Element> gens) : state_(std::make_shared<State>()) {
    state_->dim = detail::common_dimension(gens);
    for (const auto& g : gens) {
      if (!non_negative(g) || is_zero(g)) throw InvalidArgument("generators must be non-zero and non-negative");
    }
    state_->gens = std::move(gens);
    state_->memo.resize(state_->gens.size() + 1);
  }

  std::size_t dim() const { return state_->dim; }
  std::size_t size() const { return state_->gens.size(); }
  const std::vector<Element>& gens() const { return state_->gens; }

  bool contains(const Element& v) const { return contains_prefix(size(), v); }

  // v in the monoid generated by the first k generators.
  bool contains_prefix(std::size_t k, const Element& v) const {
    if (v.size() != dim()) throw InvalidArgument("dimension mismatch");
    if (!non_negative(v)) return false;
    if (dim() == 1) {
      auto t = table_for(v[0]);
      return t->reach[k][static_cast<std::size_t>(v[0])] != 0;
    }
    std::lock_guard lock(state_->mu);
    return affine_in(k, v);
  }

  // All factorizations of v, lexicographically sorted. Throws FiberTooLarge once
  // more than cap factorizations are produced.
  std::vector<Factorization> factorizations(const Element& v, std::size_t cap = kDefaultFiberCap) const {
    if (v.size() != dim()) throw InvalidArgument("dimension mismatch");
    std::vector<Factorization> out;
    if (!non_negative(v)) return out;
    const std::size_t e = size();
    Factorization x(e, 0);
    auto emit = [&] {
      if (out.size() >= cap) throw FiberTooLarge("fiber exceeds cap of " + std::to_string(cap) + " factorizations");
      out.push_back(x);
    };
    if (dim() == 1) {
      auto t = table_for(v[0]);
      std::vector<Int> g(e);
      for (std::size_t i = 0; i < e; ++i) g[i] = state_->gens[i][0];
      // Highest index first; a branch is entered only if its residue is
      // reachable with the remaining lower-index generators.
      auto rec = [&](auto&& self, std::size_t k, Int rest) -> void {
        if (k == 0) {
          if (rest == 0) emit();
          return;
        }
        const Int gk = g[k - 1];
        const auto& below = t->reach[k - 1];
        for (Int c = 0; c * gk <= rest; ++c) {
          Int left = rest - c * gk;
          if (!below[static_cast<std::size_t>(left)]) continue;
          x[k - 1] = c;
          self(self, k - 1, left);
        }
        x[k - 1] = 0;
      };
      if (t->reach[e][static_cast<std::size_t>(v[0])]) rec(rec, e, v[0]);
    } else {
      std::lock_guard lock(state_->mu);
      auto rec = [&](auto&& self, std::size_t k, const Element& rest) -> void {
        if (k == 0) {
          if (is_zero(rest)) emit();
          return;
        }
        const Element& gk = state_->gens[k - 1];
        Element left = rest;
        for (Int c = 0;; ++c) {
          if (affine_in(k - 1, left)) {
            x[k - 1] = c;
            self(self, k - 1, left);
          }
          left = left - gk;
          if (!non_negative(left)) break;
        }
        x[k - 1] = 0;
      };
      if (affine_in(e, v)) rec(rec, e, v);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Table {
    Int limit = -1;
    std::vector<std::vector<unsigned char>> reach;  // reach[k][v]: v in <g_0..g_{k-1}>
  };
  struct State {
    std::size_t dim = 0;
    std::vector<Element> gens;
    std::mutex mu;
    std::shared_ptr<const Table> table;
    std::vector<std::unordered_map<Element, bool, VecHash>> memo;
  };

  static constexpr Int kTableLimit = 200'000'000;

  std::shared_ptr<const Table> table_for(Int value) const {
    std::lock_guard lock(state_->mu);
    if (state_->table && state_->table->limit >= value) return state_->table;
    Int lo = 0, hi = 0;
    for (const auto& g : state_->gens) {
      lo = lo == 0 ? g[0] : std::min(lo, g[0]);
      hi = std::max(hi, g[0]);
    }
    Int limit = std::max({value, saturating_mul(lo, hi), Int{64}});
    if (state_->table) limit = std::max(limit, saturating_mul(state_->table->limit, 2));
    if (value > kTableLimit / static_cast<Int>(state_->gens.size() + 1))
      throw Infeasible("membership table for " + std::to_string(value) + " is too large");
    limit = std::min(limit, kTableLimit / static_cast<Int>(state_->gens.size() + 1));
    auto t = std::make_shared<Table>();
    t->limit = limit;
    const std::size_t n = static_cast<std::size_t>(limit) + 1;
    t->reach.assign(state_->gens.size() + 1, std::vector<unsigned char>(n, 0));
    t->reach[0][0] = 1;
    for (std::size_t k = 1; k <= state_->gens.size(); ++k) {
      const auto g = static_cast<std::size_t>(state_->gens[k - 1][0]);
      auto& cur = t->reach[k];
      const auto& prev = t->reach[k - 1];
      for (std::size_t v = 0; v < n; ++v) cur[v] = prev[v] || (v >= g && cur[v - g]);
    }
    state_->table = t;
    return t;
  }

  // Caller holds the mutex.
  bool affine_in(std::size_t k, const Element& v) const {
    if (is_zero(v)) return true;
    if (k == 0) return false;
    auto& memo = state_->memo[k];
    if (auto it = memo.find(v); it != memo.end()) return it->second;
    bool ok = false;
    const Element& g = state_->gens[k - 1];
    Element left = v;
    while (true) {
      if (affine_in(k - 1, left)) {
        ok = true;
        break;
      }
      left = left - g;
      if (!non_negative(left)) break;
    }
    state_->memo[k].emplace(v, ok);
    return ok;
  }

  std::shared_ptr<State> state_;
};

namespace detail {

// Least c >= 1 with c*g in the monoid, or nullopt if no multiple ever lands.
inline std::optional<Int> min_multiple_in(const Monoid& m, const Element& g, Int cap = 10'000'000) {
  if (m.size() == 0) return std::nullopt;
  if (m.dim() > 1 && !in_rational_cone_general(g, m.gens())) return std::nullopt;
  if (m.dim() == 1) {
    std::vector<Int> vals;
    for (const auto& h : m.gens()) vals.push_back(h[0]);
    Int d = gcd_all(vals);
    Int step = d / std::gcd(d, g[0]);
    for (Int c = step; c <= cap; c += step)
      if (m.contains(Element{checked_mul(c, g[0])})) return c;
  } else {
    for (Int c = 1; c <= cap; ++c)
      if (m.contains(scale(c, g))) return c;
  }
  throw Infeasible("no multiple found below search cap");
}

}  // namespace detail

// Minimally generated submonoid of N^r. Numerical semigroups (r = 1, gcd 1)
// and affine semigroups share one type. When the semigroup is simplicial the
// first dimension() generators are the extreme rays.
class Semigroup {
 public:
  Semigroup() = default;

  explicit Semigroup(std::vector<Element> raw, bool allow_non_numerical = false) {
    if (raw.empty()) throw InvalidArgument("empty generator list");
    std::size_t r = detail::common_dimension(raw);
    for (const auto& g : raw) {
      if (!non_negative(g)) throw InvalidArgument("generators must have non-negative coordinates");
      if (is_zero(g)) throw InvalidArgument("zero generator");
    }
    if (r == 1 && !allow_non_numerical) {
      std::vector<Int> vals;
      for (const auto& g : raw) vals.push_back(g[0]);
      if (gcd_all(vals) != 1) throw InvalidArgument("generators have gcd > 1: not a numerical semigroup");
    }
    // Drop duplicates (keeping first occurrence), then any generator lying in
    // the monoid of the remaining ones.
    std::vector<Element> gens;
    for (auto& g : raw)
      if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(std::move(g));
    for (std::size_t i = 0; i < gens.size();) {
      std::vector<Element> others;
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (j != i) others.push_back(gens[j]);
      if (!others.empty() && Monoid(others).contains(gens[i]))
        gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
      else
        ++i;
    }
    auto impl = std::make_shared<Impl>(Impl{r, {}, 0, false, false, Monoid(gens)});
    impl->rank = group_rank(gens);
    auto rays = first_valid_ray_set(gens, impl->rank);
    if (rays) {
      impl->simplicial = true;
      std::vector<Element> reordered;
      for (auto i : *rays) reordered.push_back(gens[i]);
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (std::find(rays->begin(), rays->end(), i) == rays->end()) reordered.push_back(gens[i]);
      gens = std::move(reordered);
      impl->monoid = Monoid(gens);
    }
    impl->gens = std::move(gens);
    impl_ = std::move(impl);
    impl_->numerical = r == 1 && gcd_all(values_unchecked()) == 1;
  }

  static Semigroup numerical(std::vector<Int> values) {
    std::vector<Element> raw;
    for (Int v : values) raw.push_back(Element{v});
    return Semigroup(std::move(raw));
  }

  const std::vector<Element>& gens() const { return impl_->gens; }
  const Element& gen(std::size_t i) const { return impl_->gens[i]; }
  std::size_t ambient_dim() const { return impl_->ambient; }
  std::size_t embedding_dimension() const { return impl_->gens.size(); }
  std::size_t dimension() const { return impl_->rank; }
  std::size_t codimension() const { return embedding_dimension() - dimension(); }
  bool is_numerical() const { return impl_->numerical; }
  bool is_simplicial() const { return impl_->simplicial; }
  const Monoid& monoid() const { return impl_->monoid; }

  // Generator values of a one-dimensional semigroup.
  std::vector<Int> values() const {
    if (impl_->ambient != 1) throw InvalidArgument("semigroup is not one-dimensional");
    return values_unchecked();
  }
  Int value(std::size_t i) const { return impl_->gens[i][0]; }

  bool contains(const Element& v) const { return impl_->monoid.contains(v); }
  bool contains(Int v) const { return contains(Element{v}); }

  // a <=_S b, i.e. b - a in S.
  bool leq(const Element& a, const Element& b) const {
    Element d = b - a;
    return non_negative(d) && contains(d);
  }
  bool leq(Int a, Int b) const { return leq(Element{a}, Element{b}); }

  friend bool operator==(const Semigroup& a, const Semigroup& b) { return a.gens() == b.gens(); }

 private:
  struct Impl {
    std::size_t ambient;
    std::vector<Element> gens;
    std::size_t rank;
    bool simplicial;
    bool numerical;
    Monoid monoid;
  };

  std::vector<Int> values_unchecked() const {
    std::vector<Int> v;
    for (const auto& g : impl_->gens) v.push_back(g[0]);
    return v;
  }

  static std::optional<std::vector<std::size_t>> first_valid_ray_set(const std::vector<Element>& gens, std::size_t r) {
    std::optional<std::vector<std::size_t>> found;
    std::vector<std::size_t> idx;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (found) return;
      if (idx.size() == r) {
        if (is_valid_ray_set(gens, idx)) found = idx;
        return;
      }
      for (std::size_t i = start; i < gens.size() && !found; ++i) {
        idx.push_back(i);
        self(self, i + 1);
        idx.pop_back();
      }
    };
    rec(rec, 0);
    return found;
  }

 public:
  // idx names r generators that are linearly independent and whose rational
  // cone contains every generator.
  static bool is_valid_ray_set(const std::vector<Element>& gens, const std::vector<std::size_t>& idx) {
    std::vector<Element> rays;
    for (auto i : idx) rays.push_back(gens[i]);
    if (rays.empty() || group_rank(rays) != rays.size()) return false;
    if (rays.size() != group_rank(gens)) return false;
    for (const auto& g : gens)
      if (!in_rational_cone(g, rays)) return false;
    return true;
  }

 private:
  std::shared_ptr<Impl> impl_;
};

// An arrangement lists every generator index exactly once, ray indices first.
using Arrangement = std::vector<std::size_t>;

inline Arrangement stored_arrangement(const Semigroup& s) {
  Arrangement a(s.embedding_dimension());
  std::iota(a.begin(), a.end(), std::size_t{0});
  return a;
}

// Every set of generator indices usable as rays, in lexicographic order.
inline std::vector<std::vector<std::size_t>> valid_ray_sets(const Semigroup& s) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t r = s.dimension(), e = s.embedding_dimension();
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (idx.size() == r) {
      if (Semigroup::is_valid_ray_set(s.gens(), idx)) out.push_back(idx);
      return;
    }
    for (std::size_t i = start; i < e; ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline void check_arrangement(const Semigroup& s, const Arrangement& a) {
  const std::size_t e = s.embedding_dimension();
  if (a.size() != e) throw InvalidArgument("arrangement has wrong length");
  std::vector<bool> seen(e, false);
  for (auto i : a) {
    if (i >= e || seen[i]) throw InvalidArgument("arrangement is not a permutation");
    seen[i] = true;
  }
  std::vector<std::size_t> rays(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(s.dimension()));
  std::sort(rays.begin(), rays.end());
  if (!Semigroup::is_valid_ray_set(s.gens(), rays)) throw InvalidArgument("arrangement does not start with rays");
}

// Arrangement putting the given rays first and the rest in stored order.
inline Arrangement arrangement_with_rays(const Semigroup& s, const std::vector<std::size_t>& rays) {
  Arrangement a(rays);
  for (std::size_t i = 0; i < s.embedding_dimension(); ++i)
    if (std::find(rays.begin(), rays.end(), i) == rays.end()) a.push_back(i);
  return a;
}

// Least c with c * n_{a[i]} in the monoid of the generators a[0..i).
inline Int prefix_min_multiple(const Semigroup& s, const Arrangement& a, std::size_t i) {
  std::vector<Element> prefix;
  for (std::size_t j = 0; j < i; ++j) prefix.push_back(s.gen(a[j]));
  auto c = detail::min_multiple_in(Monoid(prefix), s.gen(a[i]));
  if (!c) throw NotSimplicial("no multiple of the generator lies in the prefix monoid");
  return *c;
}

// ---------------------------------------------------------------------------
// Apery sets, Frobenius number, Cohen-Macaulay and Gorenstein tests.

inline std::vector<Int> apery_numerical(const Semigroup& s, Int n) {
  if (n <= 0 || !s.contains(n)) throw InvalidArgument("Apery base must be a non-zero element");
  std::vector<Int> out;
  for (Int v = 0; static_cast<Int>(out.size()) < n; ++v)
    if (s.contains(v) && (v < n || !s.contains(v - n))) out.push_back(v);
  return out;
}

inline Int multiplicity(const Semigroup& s) {
  auto v = s.values();
  return *std::min_element(v.begin(), v.end());
}

inline Int frobenius(const Semigroup& s) {
  if (!s.is_numerical()) throw InvalidArgument("Frobenius number needs a numerical semigroup");
  Int m = multiplicity(s);
  auto ap = apery_numerical(s, m);
  return ap.back() - m;
}

inline Int genus(const Semigroup& s) {
  Int f = frobenius(s), g = 0;
  for (Int v = 1; v <= f; ++v) g += !s.contains(v);
  return g;
}

// Ap(S; rays) for a valid ray set, from the candidate box 0 <= lambda_i < c*_i
// over the remaining generators taken in stored order.
inline std::vector<Element> apery_rays(const Semigroup& s, const std::vector<std::size_t>& rays) {
  if (!Semigroup::is_valid_ray_set(s.gens(), rays)) throw NotSimplicial("base is not a valid set of rays");
  Arrangement a = arrangement_with_rays(s, rays);
  const std::size_t r = rays.size(), e = a.size();
  std::vector<Int> bound(e, 0);
  for (std::size_t i = r; i < e; ++i) bound[i] = prefix_min_multiple(s, a, i);
  std::set<Element> out;
  Element cur(s.ambient_dim(), 0);
  auto rec = [&](auto&& self, std::size_t i, const Element& v) -> void {
    if (i == e) {
      for (auto j : rays) {
        Element d = v - s.gen(j);
        if (non_negative(d) && s.contains(d)) return;
      }
      out.insert(v);
      return;
    }
    Element w = v;
    for (Int l = 0; l < bound[i]; ++l) {
      self(self, i + 1, w);
      w = w + s.gen(a[i]);
    }
  };
  rec(rec, r, cur);
  return {out.begin(), out.end()};
}

// Apery set with respect to a list of base elements.
inline std::vector<Element> apery(const Semigroup& s, const std::vector<Element>& base) {
  if (base.empty()) throw InvalidArgument("empty Apery base");
  for (const auto& b : base)
    if (is_zero(b) || !s.contains(b)) throw InvalidArgument("Apery base elements must be non-zero elements");
  if (s.is_numerical()) {
    std::vector<Int> acc = apery_numerical(s, base[0][0]);
    for (std::size_t k = 1; k < base.size(); ++k) {
      auto next = apery_numerical(s, base[k][0]);
      std::vector<Int> both;
      std::set_intersection(acc.begin(), acc.end(), next.begin(), next.end(), std::back_inserter(both));
      acc = std::move(both);
    }
    std::vector<Element> out;
    for (Int v : acc) out.push_back(Element{v});
    return out;
  }
  std::vector<std::size_t> rays;
  for (const auto& b : base) {
    auto it = std::find(s.gens().begin(), s.gens().end(), b);
    if (it == s.gens().end()) throw Infeasible("Apery set is infinite or unsupported for this base");
    rays.push_back(static_cast<std::size_t>(it - s.gens().begin()));
  }
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  if (!Semigroup::is_valid_ray_set(s.gens(), rays)) throw Infeasible("Apery set is infinite or unsupported for this base");
  return apery_rays(s, rays);
}

inline std::vector<std::size_t> stored_rays(const Semigroup& s) {
  if (!s.is_simplicial()) throw NotSimplicial("semigroup is not simplicial");
  std::vector<std::size_t> r(s.dimension());
  std::iota(r.begin(), r.end(), std::size_t{0});
  return r;
}

inline bool is_cohen_macaulay(const Semigroup& s) {
  if (s.is_numerical()) return true;
  auto rays = stored_rays(s);
  auto ap = apery_rays(s, rays);
  std::vector<Element> basis;
  for (auto i : rays) basis.push_back(s.gen(i));
  for (std::size_t i = 0; i < ap.size(); ++i)
    for (std::size_t j = i + 1; j < ap.size(); ++j)
      if (solve_in_lattice_of_independent_gens(ap[i] - ap[j], basis)) return false;
  return true;
}

// Maximal elements of a finite subset of S under <=_S.
inline std::vector<Element> maximal_elements(const Semigroup& s, const std::vector<Element>& set) {
  std::vector<Element> out;
  for (const auto& a : set) {
    bool dominated_by_other = false;
    for (const auto& b : set)
      if (a != b && s.leq(a, b)) {
        dominated_by_other = true;
        break;
      }
    if (!dominated_by_other) out.push_back(a);
  }
  return out;
}

inline bool is_gorenstein(const Semigroup& s) {
  if (!is_cohen_macaulay(s)) throw InvalidArgument("Gorenstein test needs a Cohen-Macaulay semigroup");
  return maximal_elements(s, apery_rays(s, stored_rays(s))).size() == 1;
}

// ---------------------------------------------------------------------------
// Text format: "24,26,36,39", "(1,0,1);(0,1,0)" or "(1,0,1),(0,1,0)".

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline Int parse_int(std::string_view tok) {
  std::string t = trim(tok);
  if (t.empty()) throw ParseError("empty number");
  std::size_t pos = 0;
  if (t[0] == '+' || t[0] == '-') pos = 1;
  if (pos == t.size()) throw ParseError("malformed number '" + t + "'");
  for (std::size_t i = pos; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) throw ParseError("malformed number '" + t + "'");
  try {
    return std::stoll(t);
  } catch (const std::out_of_range&) {
    throw ParseError("number out of range '" + t + "'");
  }
}

inline std::vector<Int> parse_int_list(std::string_view s, char sep) {
  std::vector<Int> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(parse_int(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(parse_int(cur));
  return out;
}

}  // namespace detail

// A vector literal: "72" or "(1,1,1)".
inline Element parse_element(std::string_view text) {
  std::string t = detail::trim(text);
  if (t.empty()) throw ParseError("empty element");
  if (t.front() == '(') {
    if (t.back() != ')') throw ParseError("unbalanced parentheses in '" + t + "'");
    return detail::parse_int_list(std::string_view(t).substr(1, t.size() - 2), ',');
  }
  return Element{detail::parse_int(t)};
}

inline std::vector<Element> parse_generators(std::string_view text) {
  std::string t = detail::trim(text);
  if (t.empty()) throw ParseError("empty generator list");
  std::vector<Element> out;
  if (t.find('(') != std::string::npos) {
    // Vectors separated by ';' or by ',' outside parentheses.
    std::string cur;
    int depth = 0;
    for (char ch : t) {
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (depth < 0 || depth > 1) throw ParseError("unbalanced parentheses in '" + t + "'");
      if (depth == 0 && (ch == ';' || ch == ',')) {
        out.push_back(parse_element(cur));
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    out.push_back(parse_element(cur));
  } else {
    for (Int v : detail::parse_int_list(t, ',')) out.push_back(Element{v});
  }
  for (const auto& g : out)
    if (!non_negative(g)) throw ParseError("generators must be non-negative");
  return out;
}

inline Semigroup parse_semigroup(std::string_view text) {
  auto gens = parse_generators(text);
  try {
    return Semigroup(std::move(gens));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

inline std::string format_vector(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

inline std::string format_element(const Element& v) {
  return v.size() == 1 ? std::to_string(v[0]) : format_vector(v);
}

inline std::string format_generators(const Semigroup& s) {
  std::string out;
  for (std::size_t i = 0; i < s.embedding_dimension(); ++i) {
    if (i) out += s.ambient_dim() == 1 ? "," : ";";
    out += format_element(s.gen(i));
  }
  return out;
}

inline std::string format_semigroup(const Semigroup& s) { return "⟨" + format_generators(s) + "⟩"; }

}  // namespace isofact
