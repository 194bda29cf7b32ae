#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "semigroup.hpp"

namespace isofact {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Z(m) together with its partition into R-classes (components of the graph
// joining factorizations with common support).
struct Fiber {
  Element element;
  std::vector<Factorization> factorizations;  // lexicographically sorted
  // Each class lists indices into factorizations, ascending; classes are
  // ordered by their first index.
  std::vector<std::vector<std::size_t>> r_classes;

  std::size_t denumerant() const { return factorizations.size(); }
  std::size_t nc() const { return r_classes.size(); }

  std::size_t class_of(std::size_t idx) const {
    for (std::size_t c = 0; c < r_classes.size(); ++c)
      if (std::binary_search(r_classes[c].begin(), r_classes[c].end(), idx)) return c;
    return r_classes.size();
  }

  // Factorizations forming a singleton R-class.
  std::vector<Factorization> isolated() const {
    std::vector<Factorization> out;
    for (const auto& cls : r_classes)
      if (cls.size() == 1) out.push_back(factorizations[cls[0]]);
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline std::vector<std::vector<std::size_t>> r_classes_of(const std::vector<Factorization>& z) {
  if (z.empty()) return {};
  const std::size_t e = z[0].size();
  UnionFind uf(z.size());
  for (std::size_t i = 0; i < e; ++i) {
    std::size_t first = z.size();
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (z[k][i] == 0) continue;
      if (first == z.size())
        first = k;
      else
        uf.unite(first, k);
    }
  }
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> slot(z.size(), z.size());
  for (std::size_t k = 0; k < z.size(); ++k) {
    std::size_t root = uf.find(k);
    if (slot[root] == z.size()) {
      slot[root] = classes.size();
      classes.emplace_back();
    }
    classes[slot[root]].push_back(k);
  }
  return classes;
}

inline Fiber fiber(const Semigroup& s, const Element& m, std::size_t cap = kDefaultFiberCap) {
  Fiber f;
  f.element = m;
  f.factorizations = s.monoid().factorizations(m, cap);
  f.r_classes = r_classes_of(f.factorizations);
  return f;
}

inline Fiber fiber(const Semigroup& s, Int m, std::size_t cap = kDefaultFiberCap) { return fiber(s, Element{m}, cap); }

inline std::size_t denumerant(const Semigroup& s, const Element& m, std::size_t cap = kDefaultFiberCap) {
  return s.monoid().factorizations(m, cap).size();
}

inline std::size_t nc(const Semigroup& s, const Element& m, std::size_t cap = kDefaultFiberCap) {
  return fiber(s, m, cap).nc();
}

inline std::vector<Factorization> isolated_factorizations(const Semigroup& s, const Element& m,
                                                          std::size_t cap = kDefaultFiberCap) {
  return fiber(s, m, cap).isolated();
}

inline Element phi(const Semigroup& s, const Factorization& x) { return evaluate(x, s.gens()); }

}  // namespace isofact
