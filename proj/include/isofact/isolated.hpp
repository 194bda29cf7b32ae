#pragma once

#include <map>
#include <optional>
#include <vector>

#include "betti.hpp"

namespace isofact {

// Generator index -> least c with c * n_i in the monoid of the other
// generators. Indices with no such c are absent.
inline std::map<std::size_t, Int> c_atoms(const Semigroup& s) {
  std::map<std::size_t, Int> out;
  for (std::size_t i = 0; i < s.embedding_dimension(); ++i)
    if (auto c = c_plain_opt(s, i)) out.emplace(i, *c);
  return out;
}

// Isolated factorizations of Betti elements, sorted.
inline std::vector<Factorization> ib_set(const BettiProfile& p) {
  std::vector<Factorization> out;
  for (const auto& f : p.fibers)
    for (auto& x : f.isolated()) out.push_back(std::move(x));
  std::sort(out.begin(), out.end());
  return out;
}

struct UniqueFactorizationSet {
  std::vector<Element> elements;              // elements with exactly one factorization
  std::vector<Factorization> factorizations;  // their factorizations, sorted
  bool exhaustive = true;
};

// Elements with a unique factorization. Numerical: exactly Ap(S; min Betti)
// filtered by denumerant 1. Affine: only a finite window of total degree at
// most degree_bound, flagged non-exhaustive.
inline UniqueFactorizationSet is_set(const Semigroup& s, const BettiProfile& p,
                                     std::optional<Int> degree_bound = std::nullopt,
                                     std::size_t cap = kDefaultFiberCap) {
  UniqueFactorizationSet out;
  std::vector<Element> window;
  if (s.is_numerical()) {
    if (p.betti.empty()) throw Infeasible("every element has a unique factorization: the set is infinite");
    for (Int v : apery_numerical(s, p.betti.front()[0])) window.push_back(Element{v});
  } else {
    if (!degree_bound) throw Infeasible("unique factorizations of an affine semigroup need a degree bound");
    window = elements_up_to_degree(s, *degree_bound);
    out.exhaustive = false;
  }
  for (const auto& m : window) {
    auto z = s.monoid().factorizations(m, cap);
    if (z.size() == 1) {
      out.elements.push_back(m);
      out.factorizations.push_back(std::move(z[0]));
    }
  }
  std::sort(out.factorizations.begin(), out.factorizations.end());
  return out;
}

// Betti elements minimal under <=_S.
inline std::vector<Element> betti_minimals(const Semigroup& s, const BettiProfile& p) {
  std::vector<Element> out;
  for (const auto& b : p.betti) {
    bool minimal = true;
    for (const auto& c : p.betti)
      if (c != b && s.leq(c, b)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(b);
  }
  return out;
}

inline bool is_minimal_multi_element(const Semigroup& s, const Element& m, std::size_t cap = kDefaultFiberCap) {
  if (s.monoid().factorizations(m, cap).size() < 2) return false;
  for (const auto& g : s.gens()) {
    Element d = m - g;
    if (!non_negative(d) || !s.contains(d)) continue;
    if (s.monoid().factorizations(d, cap).size() != 1) return false;
  }
  return true;
}

struct ElementSearch {
  std::vector<Element> elements;
  bool exhaustive = true;
};

// Elements b with two or more factorizations such that each b - n_i in S has
// exactly one. Numerical window: b0 + F + max n_i, b0 the least such element.
inline ElementSearch minimal_multi_elements(const Semigroup& s, std::optional<Int> degree_bound = std::nullopt,
                                            std::size_t cap = kDefaultFiberCap) {
  ElementSearch out;
  if (s.is_numerical()) {
    if (s.embedding_dimension() == 1) return out;
    Int b0 = 0;
    while (s.monoid().factorizations(Element{b0}, cap).size() < 2) ++b0;
    auto vals = s.values();
    Int limit = b0 + frobenius(s) + *std::max_element(vals.begin(), vals.end());
    for (Int m = b0; m <= limit; ++m)
      if (is_minimal_multi_element(s, Element{m}, cap)) out.elements.push_back(Element{m});
    return out;
  }
  if (!degree_bound) throw Infeasible("affine search needs a degree bound");
  out.exhaustive = false;
  for (const auto& m : elements_up_to_degree(s, *degree_bound))
    if (is_minimal_multi_element(s, m, cap)) out.elements.push_back(m);
  return out;
}

struct IsolatedProfile {
  std::vector<Factorization> ib;
  std::optional<UniqueFactorizationSet> is;  // absent when infinite and unbounded
  std::vector<Element> ibetti;
  std::vector<Element> betti_minimals;
  std::map<std::size_t, Int> c_atoms;
  bool complete = true;

  std::size_t i_b() const { return ib.size(); }
  std::size_t i_s() const { return is ? is->factorizations.size() : 0; }
};

inline IsolatedProfile isolated_profile(const Semigroup& s, const BettiProfile& p,
                                        std::optional<Int> degree_bound = std::nullopt) {
  IsolatedProfile out;
  out.ib = ib_set(p);
  out.ibetti = p.ibetti();
  out.betti_minimals = betti_minimals(s, p);
  out.c_atoms = c_atoms(s);
  out.complete = p.complete;
  if (s.is_numerical()) {
    if (!p.betti.empty()) out.is = is_set(s, p);
  } else if (degree_bound) {
    out.is = is_set(s, p, degree_bound);
  }
  return out;
}

}  // namespace isofact
