#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "constants.hpp"

namespace isofact {

struct BettiOptions {
  std::optional<Int> degree_bound;  // affine sweeps only
  std::size_t fiber_cap = kDefaultFiberCap;
};

struct BettiProfile {
  std::vector<Element> betti;  // ascending (numerical) or lexicographic (affine)
  std::vector<Fiber> fibers;   // parallel to betti
  bool complete = true;
  std::string method;  // "apery-candidates", "free-arrangement" or "degree-sweep"
  std::optional<Arrangement> free_arrangement;
  std::optional<Int> degree_bound;

  std::size_t index_of(const Element& b) const {
    auto it = std::lower_bound(betti.begin(), betti.end(), b);
    return (it != betti.end() && *it == b) ? static_cast<std::size_t>(it - betti.begin()) : betti.size();
  }

  // Betti elements having an isolated factorization.
  std::vector<Element> ibetti() const {
    std::vector<Element> out;
    for (std::size_t k = 0; k < betti.size(); ++k)
      if (!fibers[k].isolated().empty()) out.push_back(betti[k]);
    return out;
  }

  void require_complete() const {
    if (!complete) throw IncompleteProfile("Betti elements found by a bounded search are not certified complete");
  }
};

// Every element of S of total degree at most bound, lexicographically sorted.
inline std::vector<Element> elements_up_to_degree(const Semigroup& s, Int bound) {
  std::set<Element> seen;
  std::vector<Element> frontier{Element(s.ambient_dim(), 0)};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& v : frontier)
      for (const auto& g : s.gens()) {
        Element w = v + g;
        if (total_degree(w) > bound) continue;
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

inline Int default_degree_bound(const Semigroup& s) {
  if (!s.is_simplicial()) throw Infeasible("a degree bound is required for non-simplicial semigroups");
  Arrangement a = stored_arrangement(s);
  Int sum = 0;
  for (std::size_t i = s.dimension(); i < a.size(); ++i)
    sum = checked_add(sum, total_degree(scale(c_star(s, a, i), s.gen(a[i]))));
  return checked_mul(2, std::max<Int>(sum, 1));
}

namespace detail {

inline BettiProfile profile_from_candidates(const Semigroup& s, std::vector<Element> candidates, std::size_t cap) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  BettiProfile p;
  for (const auto& c : candidates) {
    Fiber f = fiber(s, c, cap);
    if (f.nc() >= 2) {
      p.betti.push_back(c);
      p.fibers.push_back(std::move(f));
    }
  }
  return p;
}

}  // namespace detail

inline BettiProfile betti_elements(const Semigroup& s, const BettiOptions& opt = {}) {
  if (s.is_numerical()) {
    // A Betti element b has some generator n_i with b - n_i in Ap(S; n_1).
    std::vector<Element> cand;
    for (Int w : apery_numerical(s, s.value(0))) {
      if (w == 0) continue;
      for (Int g : s.values()) cand.push_back(Element{checked_add(w, g)});
    }
    auto p = detail::profile_from_candidates(s, std::move(cand), opt.fiber_cap);
    p.method = "apery-candidates";
    return p;
  }
  if (s.is_simplicial() && is_cohen_macaulay(s)) {
    if (auto a = find_free_arrangement_any(s)) {
      std::vector<Element> cand;
      for (std::size_t i = s.dimension(); i < a->size(); ++i) cand.push_back(scale(c_star(s, *a, i), s.gen((*a)[i])));
      auto p = detail::profile_from_candidates(s, cand, opt.fiber_cap);
      std::sort(cand.begin(), cand.end());
      cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
      if (p.betti != cand) throw InvariantBreach("free arrangement predicts a non-Betti element");
      p.method = "free-arrangement";
      p.free_arrangement = a;
      return p;
    }
  }
  Int bound = opt.degree_bound ? *opt.degree_bound : default_degree_bound(s);
  auto p = detail::profile_from_candidates(s, elements_up_to_degree(s, bound), opt.fiber_cap);
  p.complete = false;
  p.method = "degree-sweep";
  p.degree_bound = bound;
  return p;
}

struct Relation {
  Factorization lhs, rhs;
  friend bool operator==(const Relation&, const Relation&) = default;
  friend auto operator<=>(const Relation&, const Relation&) = default;
};

// For each Betti element, a star over its R-classes rooted at the class of the
// lexicographically smallest factorization.
inline std::vector<Relation> minimal_presentation(const BettiProfile& p) {
  p.require_complete();
  std::vector<Relation> out;
  for (const auto& f : p.fibers) {
    const auto& root = f.factorizations[f.r_classes[0][0]];
    for (std::size_t c = 1; c < f.r_classes.size(); ++c) out.push_back({root, f.factorizations[f.r_classes[c][0]]});
  }
  return out;
}

inline std::size_t presentation_size(const BettiProfile& p) {
  std::size_t n = 0;
  for (const auto& f : p.fibers) n += f.nc() - 1;
  return n;
}

inline bool is_complete_intersection(const Semigroup& s, const BettiProfile& p) {
  p.require_complete();
  return presentation_size(p) == s.codimension();
}

// Whether the congruence generated by the relations joins all factorizations
// of m: x ~ y when x = u + a, y = u + b for a relation (a, b).
inline bool relations_connect_fiber(const std::vector<Relation>& rels, const std::vector<Factorization>& z) {
  if (z.size() <= 1) return true;
  UnionFind uf(z.size());
  for (std::size_t i = 0; i < z.size(); ++i)
    for (const auto& r : rels)
      for (int dir = 0; dir < 2; ++dir) {
        const auto& a = dir ? r.rhs : r.lhs;
        const auto& b = dir ? r.lhs : r.rhs;
        if (!dominated(a, z[i])) continue;
        Factorization y = z[i] - a + b;
        auto it = std::lower_bound(z.begin(), z.end(), y);
        if (it != z.end() && *it == y) uf.unite(i, static_cast<std::size_t>(it - z.begin()));
      }
  for (std::size_t i = 1; i < z.size(); ++i)
    if (uf.find(i) != uf.find(0)) return false;
  return true;
}

}  // namespace isofact
