#pragma once

#include <optional>
#include <string>
#include <vector>

#include "construct.hpp"

namespace isofact {

enum class CheckKind { Equivalent, Implies, Holds };

inline const char* to_string(CheckKind k) {
  switch (k) {
    case CheckKind::Equivalent: return "equivalent";
    case CheckKind::Implies: return "implies";
    case CheckKind::Holds: return "holds";
  }
  return "?";
}

// One evaluated statement. Unevaluated conditions (an implication whose
// premise failed) are nullopt.
struct TheoremCheck {
  std::string id;
  std::string context;
  CheckKind kind = CheckKind::Holds;
  std::vector<std::string> labels;
  std::vector<std::optional<bool>> values;
  std::size_t instances = 1;

  bool ok() const {
    switch (kind) {
      case CheckKind::Equivalent: {
        std::optional<bool> first;
        for (const auto& v : values) {
          if (!v) return false;
          if (!first) first = v;
          if (*v != *first) return false;
        }
        return true;
      }
      case CheckKind::Implies:
        if (values.empty() || !values[0] || !*values[0]) return true;
        for (std::size_t k = 1; k < values.size(); ++k)
          if (!values[k] || !*values[k]) return false;
        return true;
      case CheckKind::Holds:
        for (const auto& v : values)
          if (!v || !*v) return false;
        return true;
    }
    return false;
  }
};

namespace detail {

// Collapses many instances of one statement into a single record: the first
// failing instance if any, otherwise the last passing one.
class Aggregate {
 public:
  Aggregate(std::string id, CheckKind kind, std::vector<std::string> labels)
      : rec_{std::move(id), "", kind, std::move(labels), {}, 0} {}

  void add(std::vector<std::optional<bool>> values, std::string context) {
    ++count_;
    if (failed_) return;
    rec_.values = std::move(values);
    rec_.context = std::move(context);
    failed_ = !rec_.ok();
  }

  void flush(std::vector<TheoremCheck>& out) {
    if (count_ == 0) return;
    rec_.instances = count_;
    out.push_back(std::move(rec_));
  }

 private:
  TheoremCheck rec_;
  std::size_t count_ = 0;
  bool failed_ = false;
};

inline std::vector<std::optional<bool>> vals(std::initializer_list<bool> xs) {
  return std::vector<std::optional<bool>>(xs.begin(), xs.end());
}

inline bool strictly_below(const Factorization& z, const Factorization& x) { return z != x && dominated(z, x); }

inline std::vector<Int> sorted_unique(std::vector<Int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline std::vector<Int> element_values(const std::vector<Element>& xs) {
  std::vector<Int> out;
  for (const auto& x : xs) out.push_back(x[0]);
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Minimal presentations shaped as a chain along an arrangement.

// Sorted: relation i is (k_i e_i, y) with y supported before i and
// y_{i-1} >= k_{i-1}. Divisible: y is a multiple of k_{i-1} e_{i-1}.
enum class ChainShape { Sorted, Divisible };

struct ChainSearch {
  ChainShape shape = ChainShape::Sorted;
  bool multipliers_are_c = true;  // k_i = c_i, otherwise any k_i with k_i n_i Betti
  bool constrain_base = true;     // the first relation's right side obeys k_base = c_base
};

struct PresentationChain {
  Arrangement arrangement;
  std::vector<Relation> relations;  // relation k belongs to arrangement[k + 1]
};

// A minimal presentation of the requested shape along some arrangement
// starting at base (or along the given fixed arrangement). Numerical only.
inline std::optional<PresentationChain> find_presentation_chain(Analysis& A, std::size_t base,
                                                                const std::optional<Arrangement>& fixed,
                                                                ChainSearch spec) {
  const auto& s = A.semigroup();
  if (!s.is_numerical()) throw InvalidArgument("numerical semigroup expected");
  const auto& p = A.betti();
  p.require_complete();
  const std::size_t e = s.embedding_dimension();
  if (fixed && (fixed->size() != e || (*fixed)[0] != base)) throw InvalidArgument("fixed arrangement must start at base");
  if (e < 2 || presentation_size(p) != e - 1) return std::nullopt;

  struct Edge {
    std::size_t betti;
    std::size_t lhs_class;
    Factorization lhs;
    std::vector<std::pair<std::size_t, Factorization>> rhs;  // class -> representative
  };
  std::vector<Edge> edges;
  std::vector<std::size_t> used(p.betti.size(), 0);
  Arrangement order{base};
  std::vector<Int> mult{spec.constrain_base ? *A.c(base) : 0};
  std::uint64_t placed = std::uint64_t{1} << base;
  std::optional<PresentationChain> found;

  // Per Betti element, pick one right-hand class per edge so the edges form
  // a spanning tree on the R-classes.
  auto trees = [&]() -> std::optional<std::vector<Factorization>> {
    std::vector<Factorization> chosen(edges.size());
    for (std::size_t bi = 0; bi < p.betti.size(); ++bi) {
      if (used[bi] + 1 != p.fibers[bi].nc()) return std::nullopt;
      std::vector<std::size_t> mine;
      for (std::size_t k = 0; k < edges.size(); ++k)
        if (edges[k].betti == bi) mine.push_back(k);
      bool ok = false;
      auto rec = [&](auto&& self, std::size_t t, UnionFind uf) -> void {
        if (ok) return;
        if (t == mine.size()) {
          ok = true;
          return;
        }
        const auto& ed = edges[mine[t]];
        for (const auto& [cls, rep] : ed.rhs) {
          UnionFind next = uf;
          if (!next.unite(ed.lhs_class, cls)) continue;
          chosen[mine[t]] = rep;
          self(self, t + 1, next);
          if (ok) return;
        }
      };
      rec(rec, 0, UnionFind(p.fibers[bi].nc()));
      if (!ok) return std::nullopt;
    }
    return chosen;
  };

  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (found) return;
    if (pos == e) {
      if (auto rhs = trees()) {
        PresentationChain pc{order, {}};
        for (std::size_t k = 0; k < edges.size(); ++k) pc.relations.push_back({edges[k].lhs, (*rhs)[k]});
        found = std::move(pc);
      }
      return;
    }
    std::vector<std::size_t> cands;
    if (fixed)
      cands.push_back((*fixed)[pos]);
    else
      for (std::size_t g = 0; g < e; ++g)
        if (!(placed >> g & 1)) cands.push_back(g);
    const std::size_t prev = order.back();
    const Int bound = mult.back();
    for (std::size_t g : cands) {
      std::vector<Int> ks;
      if (spec.multipliers_are_c) {
        ks.push_back(*A.c(g));
      } else {
        for (const auto& b : p.betti)
          if (b[0] % s.value(g) == 0) ks.push_back(b[0] / s.value(g));
      }
      for (Int k : ks) {
        const std::size_t bi = p.index_of(Element{checked_mul(k, s.value(g))});
        if (bi == p.betti.size() || used[bi] + 1 >= p.fibers[bi].nc() + 1) continue;
        const Fiber& f = p.fibers[bi];
        Factorization lhs = unit_vector(e, g, k);
        auto it = std::lower_bound(f.factorizations.begin(), f.factorizations.end(), lhs);
        const std::size_t lc = f.class_of(static_cast<std::size_t>(it - f.factorizations.begin()));
        Edge ed{bi, lc, lhs, {}};
        for (std::size_t y = 0; y < f.factorizations.size(); ++y) {
          const auto& z = f.factorizations[y];
          bool ok = true;
          for (std::size_t j = 0; j < e && ok; ++j) {
            if (z[j] == 0) continue;
            if (spec.shape == ChainShape::Divisible ? j != prev : !(placed >> j & 1)) ok = false;
          }
          if (!ok || z[prev] == 0) continue;
          if (bound > 0 && (spec.shape == ChainShape::Sorted ? z[prev] < bound : z[prev] % bound != 0)) continue;
          const std::size_t cls = f.class_of(y);
          if (cls == lc) continue;
          if (std::none_of(ed.rhs.begin(), ed.rhs.end(), [&](const auto& r) { return r.first == cls; }))
            ed.rhs.emplace_back(cls, z);
        }
        if (ed.rhs.empty()) continue;
        edges.push_back(std::move(ed));
        ++used[bi];
        order.push_back(g);
        mult.push_back(k);
        placed |= std::uint64_t{1} << g;
        self(self, pos + 1);
        placed &= ~(std::uint64_t{1} << g);
        mult.pop_back();
        order.pop_back();
        --used[bi];
        edges.pop_back();
        if (found) return;
      }
    }
  };
  rec(rec, 1);
  return found;
}

// ---------------------------------------------------------------------------
// Arrangements with alpha_i + 1 = c*_i that are also free.

inline std::optional<Arrangement> find_alpha_free_arrangement(Analysis& A, const RaySet& rays) {
  const auto& s = A.semigroup();
  detail::require_small_edim(s);
  const std::size_t e = s.embedding_dimension();
  Arrangement a(rays);
  std::uint64_t placed = 0;
  for (auto r : rays) placed |= std::uint64_t{1} << r;
  std::unordered_set<std::uint64_t> dead;
  std::optional<Arrangement> found;
  auto rec = [&](auto&& self) -> void {
    if (found) return;
    if (a.size() == e) {
      found = a;
      return;
    }
    if (dead.count(placed)) return;
    for (std::size_t g = 0; g < e && !found; ++g) {
      if (placed >> g & 1) continue;
      std::vector<Element> prefix;
      for (std::size_t j = 0; j < e; ++j)
        if (placed >> j & 1) prefix.push_back(s.gen(j));
      auto cs = detail::min_multiple_in(Monoid(prefix), s.gen(g));
      if (!cs || *cs != A.alpha(rays, g) + 1) continue;
      if (!A.free_oracle().step_ok(placed, g)) continue;
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

// ---------------------------------------------------------------------------
// Families along the inclusion chain (numerical).

struct ChainFlags {
  bool single_betti, betti_divisible, betti_sorted, ci_single_minimal, alpha_rect_some, free_some, complete_intersection;

  std::vector<bool> as_vector() const {
    return {single_betti, betti_divisible, betti_sorted, ci_single_minimal, alpha_rect_some, free_some,
            complete_intersection};
  }
};

inline const std::vector<std::string>& chain_labels() {
  static const std::vector<std::string> labels{"single Betti",       "Betti divisible", "Betti sorted",
                                               "CI + single minimal", "alpha-rect",      "free",
                                               "complete intersection"};
  return labels;
}

inline ChainFlags chain_flags(Analysis& A) {
  ChainFlags f{};
  f.single_betti = has_single_betti(A);
  f.betti_divisible = is_betti_divisible(A);
  f.betti_sorted = is_betti_sorted(A);
  f.complete_intersection = is_ci(A);
  f.ci_single_minimal = f.complete_intersection && single_betti_minimal(A).has_value();
  f.alpha_rect_some = false;
  for (const auto& r : A.ray_sets())
    if (is_alpha_rectangular(A, r)) {
      f.alpha_rect_some = true;
      break;
    }
  f.free_some = free_arrangement_some(A).has_value();
  return f;
}

// ---------------------------------------------------------------------------
// Isolated-factorization lemmas over a finite window (numerical).

inline std::vector<TheoremCheck> check_isolation_lemmas(Analysis& A) {
  using detail::vals;
  std::vector<TheoremCheck> out;
  const auto& s = A.semigroup();
  if (!s.is_numerical()) throw InvalidArgument("numerical semigroup expected");
  const auto& p = A.betti();
  if (p.betti.empty()) return out;
  const auto& iso = A.isolated();
  const std::size_t e = s.embedding_dimension();
  const auto gens = s.values();
  const Int max_gen = *std::max_element(gens.begin(), gens.end());
  const Int b1 = p.betti.front()[0];
  const Int L = p.betti.back()[0] + max_gen;
  const Int F = frobenius(s);
  const auto betti_v = detail::element_values(p.betti);
  const auto ibetti_v = detail::element_values(iso.ibetti);
  const auto mins_v = detail::element_values(iso.betti_minimals);
  std::vector<Factorization> zb;
  for (const auto& f : p.fibers) zb.insert(zb.end(), f.factorizations.begin(), f.factorizations.end());
  const auto& ib = iso.ib;

  auto strictly_below_some = [&](const std::vector<Int>& set, Int m) {
    return std::any_of(set.begin(), set.end(), [&](Int b) { return b != m && s.leq(b, m); });
  };

  detail::Aggregate below("non-isolated-below-betti", CheckKind::Equivalent,
                          {"not isolated", "above a Betti factorization", "above an I_b factorization"});
  detail::Aggregate elem("non-isolated-element", CheckKind::Equivalent,
                         {"has a non-isolated factorization", "above an IBetti element", "above a Betti element"});
  detail::Aggregate minimal("betti-minimal-characterizations", CheckKind::Equivalent,
                            {"Betti-minimal", "minimal in IBetti", "all of >= 2 factorizations isolated",
                             "minimal multi-element"});
  std::vector<Factorization> multi;
  std::optional<Int> least_multi;
  for (Int m = 0; m <= L; ++m) {
    if (!s.contains(m)) continue;
    const Fiber& f = A.fiber_of(m);
    const std::string ctx = "element " + std::to_string(m);
    bool any_non_isolated = false;
    for (std::size_t k = 0; k < f.factorizations.size(); ++k) {
      const auto& x = f.factorizations[k];
      bool non_iso = f.r_classes[f.class_of(k)].size() != 1;
      any_non_isolated = any_non_isolated || non_iso;
      bool by_betti = std::any_of(zb.begin(), zb.end(), [&](const auto& z) { return detail::strictly_below(z, x); });
      bool by_ib = std::any_of(ib.begin(), ib.end(), [&](const auto& z) { return detail::strictly_below(z, x); });
      below.add(vals({non_iso, by_betti, by_ib}), ctx + " factorization " + format_vector(x));
    }
    elem.add(vals({any_non_isolated, strictly_below_some(ibetti_v, m), strictly_below_some(betti_v, m)}), ctx);
    const bool in_mins = std::binary_search(mins_v.begin(), mins_v.end(), m);
    const bool ibetti_min = std::binary_search(ibetti_v.begin(), ibetti_v.end(), m) && !strictly_below_some(ibetti_v, m);
    const bool all_iso = f.denumerant() >= 2 && f.nc() == f.denumerant();
    minimal.add(vals({in_mins, ibetti_min, all_iso, is_minimal_multi_element(s, Element{m}, A.options().fiber_cap)}),
                ctx);
    if (f.denumerant() >= 2) {
      if (!least_multi) least_multi = m;
      multi.insert(multi.end(), f.factorizations.begin(), f.factorizations.end());
    }
  }
  below.flush(out);
  elem.flush(out);
  minimal.flush(out);

  std::vector<Factorization> minimals;
  for (const auto& x : multi)
    if (std::none_of(multi.begin(), multi.end(), [&](const auto& y) { return detail::strictly_below(y, x); }))
      minimals.push_back(x);
  std::sort(minimals.begin(), minimals.end());
  minimals.erase(std::unique(minimals.begin(), minimals.end()), minimals.end());
  out.push_back({"ib-minimal-multi", "", CheckKind::Holds, {"I_b = minimal factorizations of multi-elements"},
                 vals({minimals == ib})});

  detail::Aggregate disjoint("betti-disjoint", CheckKind::Holds, {"Z(b) and I(b') share no support"});
  for (std::size_t i = 0; i < p.betti.size(); ++i)
    for (std::size_t j = 0; j < p.betti.size(); ++j) {
      if (i == j || !s.leq(p.betti[i], p.betti[j])) continue;
      bool ok = true;
      for (const auto& x : p.fibers[i].factorizations)
        for (const auto& y : p.fibers[j].isolated()) ok = ok && !supports_meet(x, y);
      disjoint.add(vals({ok}), std::to_string(betti_v[i]) + " <_S " + std::to_string(betti_v[j]));
    }
  disjoint.flush(out);

  out.push_back({"least-multi-is-min-betti", "", CheckKind::Holds,
                 {"least element with two factorizations is min Betti", "all its factorizations isolated"},
                 vals({least_multi == b1, A.fiber_of(b1).nc() == A.fiber_of(b1).denumerant()})});

  // Unique expressions against intersections of Apery sets.
  detail::Aggregate unique("unique-expression-apery", CheckKind::Equivalent,
                           {"unique expression", "in Ap of every Betti", "in Ap of every IBetti",
                            "in Ap of every Betti-minimal"});
  auto in_all_apery = [&](const std::vector<Int>& set, Int m) {
    return std::none_of(set.begin(), set.end(), [&](Int b) { return m >= b && s.contains(m - b); });
  };
  std::vector<Int> unique_values;
  for (Int m = 0; m <= std::max(L, b1 + F); ++m) {
    if (!s.contains(m)) continue;
    const bool u = A.denumerant(Element{m}) == 1;
    if (u) unique_values.push_back(m);
    unique.add(vals({u, in_all_apery(betti_v, m), in_all_apery(ibetti_v, m), in_all_apery(mins_v, m)}),
               "element " + std::to_string(m));
  }
  unique.flush(out);

  out.push_back({"single-minimal-apery", "", CheckKind::Equivalent,
                 {"single Betti-minimal", "Ap(S; min Betti) = unique expressions", "i_s = min Betti"},
                 vals({mins_v.size() == 1, apery_numerical(s, b1) == unique_values,
                       static_cast<Int>(iso.i_s()) == b1})});

  // Multiples of atoms.
  std::vector<Factorization> atoms;
  bool betti_atoms = true, small_unique = true;
  for (std::size_t i = 0; i < e; ++i) {
    const Int ci = *A.c(i);
    atoms.push_back(unit_vector(e, i, ci));
    betti_atoms = betti_atoms && p.index_of(Element{ci * gens[i]}) != p.betti.size();
    for (Int k = 1; k < ci; ++k) small_unique = small_unique && A.denumerant(Element{k * gens[i]}) == 1;
  }
  std::sort(atoms.begin(), atoms.end());
  const bool atoms_in_ib = std::includes(ib.begin(), ib.end(), atoms.begin(), atoms.end());
  bool rest_in_box = true;
  std::vector<const std::vector<Factorization>*> pools{&ib, &iso.is->factorizations};
  for (const auto* pool : pools)
    for (const auto& x : *pool) {
      if (std::binary_search(atoms.begin(), atoms.end(), x)) continue;
      for (std::size_t i = 0; i < e; ++i) rest_in_box = rest_in_box && x[i] < *A.c(i);
    }
  out.push_back({"atom-multiples-isolated", "", CheckKind::Holds,
                 {"c_i e_i in I_b", "other isolated factorizations below c", "c_i n_i Betti",
                  "k n_i unique for k < c_i"},
                 vals({atoms_in_ib, rest_in_box, betti_atoms, small_unique})});
  const Int prod_c = product_of_c(A);
  const Int is = static_cast<Int>(iso.i_s()), ibn = static_cast<Int>(iso.i_b()), E = static_cast<Int>(e);
  out.push_back({"atom-multiples-equality", "", CheckKind::Equivalent,
                 {"I_b = {c_i e_i}", "i_s + i_b - e = prod c"}, vals({ib == atoms, is + ibn - E == prod_c})});

  detail::Aggregate ray_iso("ray-multiple-isolated", CheckKind::Holds, {"some I_b factorization lives on the ray"});
  for (std::size_t j = 0; j < e; ++j) {
    bool found = std::any_of(ib.begin(), ib.end(), [&](const auto& x) {
      for (std::size_t i = 0; i < e; ++i)
        if (i != j && x[i] != 0) return false;
      return true;
    });
    ray_iso.add(vals({found}), "generator " + std::to_string(j + 1));
  }
  ray_iso.flush(out);

  // Equality cases of the bound chains.
  const Int m_codim = E - 1;
  bool all_two = std::all_of(p.fibers.begin(), p.fibers.end(), [](const Fiber& f) { return f.denumerant() == 2; });
  detail::Aggregate cm_eq("cm-upper-equality", CheckKind::Equivalent,
                          {"i_b = d(d-1)", "maximal codimension and every Betti denumerant 2"});
  for (std::size_t j = 0; j < e; ++j) {
    const Int d = gens[j];
    cm_eq.add(vals({ibn == d * (d - 1), m_codim == d - 1 && all_two}), "generator " + std::to_string(j + 1));
  }
  cm_eq.flush(out);
  out.push_back({"atom-upper-equality", "", CheckKind::Equivalent, {"i = e + prod c", "i_b = e", "i_s = prod c"},
                 vals({is + ibn == (prod_c == INT64_MAX ? -1 : E + prod_c), ibn == E, is == prod_c})});
  out.push_back({"single-betti-total", "", CheckKind::Equivalent, {"single Betti element", "i = min Betti + sum nc"},
                 vals({p.betti.size() == 1, is + ibn == b1 + sum_nc(p)})});
  return out;
}

// ---------------------------------------------------------------------------
// Structural equivalences.

namespace detail {

// I_b restricted to factorizations vanishing on the rays equals {c_i e_i}.
inline bool ib_off_rays_is_atoms(Analysis& A, const RaySet& rays) {
  const std::size_t e = A.edim();
  std::vector<Factorization> atoms, off;
  for (auto i : A.non_rays(rays)) {
    auto c = A.c(i);
    if (!c) return false;
    atoms.push_back(unit_vector(e, i, *c));
  }
  for (const auto& x : A.isolated().ib)
    if (std::all_of(rays.begin(), rays.end(), [&](std::size_t r) { return x[r] == 0; })) off.push_back(x);
  std::sort(atoms.begin(), atoms.end());
  return atoms == off;
}

inline bool c_multiples_outside_apery(Analysis& A, const RaySet& rays) {
  for (auto i : A.non_rays(rays)) {
    auto c = A.c(i);
    if (!c || A.in_apery(rays, scale(*c, A.semigroup().gen(i)))) return false;
  }
  return true;
}

inline Int product_c_off(Analysis& A, const RaySet& rays) {
  Int p = 1;
  for (auto i : A.non_rays(rays)) p = saturating_mul(p, A.c(i).value_or(0));
  return p;
}

inline bool apery_all_unique(Analysis& A, const RaySet& rays) {
  for (const auto& w : A.apery(rays))
    if (A.denumerant(w) != 1) return false;
  return true;
}

// Betti = IBetti = {c_i n_i : i not in skip}.
inline bool betti_is_c_multiples(Analysis& A, const std::vector<std::size_t>& skip) {
  std::set<Element> expected;
  for (std::size_t i = 0; i < A.edim(); ++i) {
    if (std::find(skip.begin(), skip.end(), i) != skip.end()) continue;
    auto c = A.c(i);
    if (!c) return false;
    expected.insert(scale(*c, A.semigroup().gen(i)));
  }
  const auto& b = A.betti().betti;
  return A.betti().ibetti() == b && std::vector<Element>(expected.begin(), expected.end()) == b;
}

inline bool divisible_parts(const Semigroup& part) {
  Analysis sub(part);
  return is_betti_divisible(sub);
}

// Every nontrivial partition of the generators splits S as a gluing of
// Betti-divisible parts.
inline bool every_partition_glues_divisibly(const Semigroup& s) {
  const std::size_t e = s.embedding_dimension();
  if (e < 2) return false;
  if (e > 20) throw Infeasible("too many generators for the partition check");
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (e - 1)); ++mask) {
    std::vector<std::size_t> part{e - 1};
    for (std::size_t i = 0; i + 1 < e; ++i)
      if (mask >> i & 1) part.push_back(i);
    if (part.size() == e) continue;
    auto g = split_as_gluing(s, part);
    if (!g || !divisible_parts(g->left) || !divisible_parts(g->right)) return false;
  }
  // The partition with e-1 alone on one side.
  auto g = split_as_gluing(s, {e - 1});
  return g && divisible_parts(g->left) && divisible_parts(g->right);
}

// S = a S' + n_g N is a gluing with S' alpha-rectangular for n_j / a and
// n_g not in Ap(S'; n_j / a), for some generator g != j.
inline bool alpha_rect_by_gluing(const Semigroup& s, std::size_t j) {
  const std::size_t e = s.embedding_dimension();
  if (e < 2) return false;
  for (std::size_t g = 0; g < e; ++g) {
    if (g == j) continue;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < e; ++i)
      if (i != g) rest.push_back(i);
    auto spec = split_as_gluing(s, rest);
    if (!spec) continue;
    const Semigroup& sp = spec->left;
    const Int a = spec->a1;
    const Int nj = s.value(j) / a;
    auto vals_p = sp.values();
    const std::size_t jj = static_cast<std::size_t>(std::find(vals_p.begin(), vals_p.end(), nj) - vals_p.begin());
    if (jj == vals_p.size()) continue;
    Analysis sub(sp);
    const Int b = s.value(g);
    if (is_alpha_rectangular(sub, {jj}) && b >= nj && sp.contains(b - nj)) return true;
  }
  return false;
}

}  // namespace detail

inline std::vector<TheoremCheck> check_equivalence_theorems(Analysis& A) {
  using detail::vals;
  std::vector<TheoremCheck> out;
  const auto& s = A.semigroup();
  if (!s.is_simplicial()) throw NotSimplicial("theorem checks need a simplicial semigroup");
  const auto& p = A.betti();
  p.require_complete();
  if (s.codimension() == 0) return out;
  const auto& iso = A.isolated();
  const bool numerical = s.is_numerical();
  const std::size_t e = s.embedding_dimension();
  const Int m = static_cast<Int>(s.codimension());
  const Int ib = static_cast<Int>(iso.i_b());
  const bool ci = is_ci(A);
  const bool cm = is_cohen_macaulay(s);
  const auto& mins = iso.betti_minimals;
  const bool single_min = mins.size() == 1;

  // Complete intersection with a single Betti-minimal element.
  {
    bool nc_form = false;
    for (const auto& b1 : mins) {
      if (ib != m + 1) break;
      bool ok = true;
      for (std::size_t k = 0; k < p.betti.size() && ok; ++k)
        if (p.betti[k] != b1) ok = p.fibers[k].nc() == p.fibers[k].isolated().size() + 1;
      nc_form = nc_form || ok;
    }
    out.push_back({"ci-single-minimal", "", CheckKind::Equivalent,
                   {"CI with single Betti-minimal", "i_b = m+1 and nc(b) = i(b)+1 off one minimal"},
                   vals({ci && single_min, nc_form})});
  }

  for (const auto& rays : A.ray_sets()) {
    const std::string ctx = ray_context(s, rays);
    const auto& ap = A.apery(rays);
    const auto nonrays = A.non_rays(rays);
    const bool alpha_rect = is_alpha_rectangular(A, rays);
    const bool c_rect = is_c_rectangular(A, rays);
    const auto maxima = maximal_elements(s, ap);
    const bool all_unique = detail::apery_all_unique(A, rays);
    Int box = 1;
    for (auto i : nonrays) box = saturating_mul(box, A.alpha(rays, i) + 1);
    out.push_back({"alpha-rect-characterizations", ctx, CheckKind::Equivalent,
                   {"alpha-rectangular", "unique maximal Apery element with unique expression",
                    "unique maximal Apery element and all Apery elements unique", "#Ap = prod(alpha_i + 1)"},
                   vals({alpha_rect, maxima.size() == 1 && A.denumerant(maxima[0]) == 1,
                         maxima.size() == 1 && all_unique, static_cast<Int>(ap.size()) == box})});

    TheoremCheck af{"alpha-rect-free-arrangement", ctx, CheckKind::Implies,
                    {"alpha-rectangular", "free arrangement with alpha_i + 1 = c*_i"}, {alpha_rect, std::nullopt}};
    if (alpha_rect && cm) af.values[1] = find_alpha_free_arrangement(A, rays).has_value();
    if (alpha_rect && !cm) af.values[1] = true;  // freeness is only claimed in the Cohen-Macaulay case
    out.push_back(std::move(af));

    const bool ib_atoms = detail::ib_off_rays_is_atoms(A, rays);
    const bool c_out = detail::c_multiples_outside_apery(A, rays);
    const bool card = static_cast<Int>(ap.size()) == detail::product_c_off(A, rays);
    std::vector<std::optional<bool>> six =
        vals({alpha_rect, c_rect && c_out, c_rect && ib_atoms, ib_atoms && all_unique, ib_atoms && c_out, ib_atoms && card});
    out.push_back({"alpha-c-rect", ctx, CheckKind::Equivalent,
                   {"alpha-rectangular", "c-rectangular, c_i n_i outside Ap", "c-rectangular, I_b off rays = {c_i e_i}",
                    "I_b off rays = {c_i e_i}, Apery elements unique", "I_b off rays = {c_i e_i}, c_i n_i outside Ap",
                    "I_b off rays = {c_i e_i}, #Ap = prod c_i"},
                   six});
    bool c_alpha = true;
    for (auto i : nonrays) c_alpha = c_alpha && A.c(i) == A.alpha(rays, i) + 1;
    out.push_back({"alpha-c-rect-constants", ctx, CheckKind::Implies, {"alpha-rectangular", "c_i = alpha_i + 1"},
                   vals({alpha_rect, c_alpha})});

    // Single Betti-minimal outside the Apery set.
    const bool b1_out = single_min && !A.in_apery(rays, mins[0]);
    const bool free_here = free_arrangement_from(A, rays).has_value();
    const bool cond1 = free_here && b1_out;
    out.push_back({"ci-single-minimal-rays", ctx, CheckKind::Equivalent,
                   {"free from these rays, single minimal outside Ap", "CI, single minimal outside Ap",
                    "i_b = m+1, single minimal outside Ap", "i_b = m+1, alpha-rectangular"},
                   vals({cond1, ci && b1_out, ib == m + 1 && b1_out, ib == m + 1 && alpha_rect})});
    {
      std::vector<Element> ray_gens;
      for (auto r : rays) ray_gens.push_back(s.gen(r));
      TheoremCheck cq{"ci-single-minimal-rays-consequences", ctx, CheckKind::Implies,
                      {"free from these rays, single minimal outside Ap", "Cohen-Macaulay", "min Betti on the rays",
                       "Betti = IBetti = {c_i n_i}"},
                      {cond1, std::nullopt, std::nullopt, std::nullopt}};
      if (cond1)
        cq.values = vals({true, cm, Monoid(ray_gens).contains(mins[0]), detail::betti_is_c_multiples(A, rays)});
      out.push_back(std::move(cq));
    }

    if (is_betti_isolated_sorted(A)) {
      out.push_back({"isolated-sorted-rect", ctx, CheckKind::Equivalent,
                     {"min Betti outside Ap", "alpha-rectangular", "c-rectangular", "c_i n_i outside Ap",
                      "#Ap = prod c_i"},
                     vals({single_min && !A.in_apery(rays, mins[0]), alpha_rect, c_rect, c_out, card})});
    }

    if (numerical) {
      const std::size_t j = rays[0];
      out.push_back({"alpha-rect-gluing", ctx, CheckKind::Equivalent,
                     {"alpha-rectangular", "gluing of an alpha-rectangular part with N"},
                     vals({alpha_rect, detail::alpha_rect_by_gluing(s, j)})});

      const Element b1 = p.betti.front();
      const bool min_out = !A.in_apery(rays, b1);
      const bool sorted = is_betti_sorted(A), isorted = is_betti_isolated_sorted(A);
      auto chain3 = find_presentation_chain(A, j, std::nullopt, {ChainShape::Sorted, true, false});
      auto chain4 = find_presentation_chain(A, j, std::nullopt, {ChainShape::Sorted, false, false});
      const bool c1 = sorted && cm && min_out;
      out.push_back({"sorted-presentation-rays", ctx, CheckKind::Equivalent,
                     {"Betti sorted, min Betti outside Ap", "Betti-isolated sorted, min Betti outside Ap",
                      "chain presentation with c_i", "chain presentation with free multipliers"},
                     vals({c1, isorted && cm && min_out, chain3.has_value(), chain4.has_value()})});
      TheoremCheck cq{"sorted-presentation-rays-consequences", ctx, CheckKind::Implies,
                      {"Betti sorted, min Betti outside Ap", "Betti = IBetti = {c_i n_i}"}, {c1, std::nullopt}};
      if (c1) cq.values[1] = detail::betti_is_c_multiples(A, rays);
      out.push_back(std::move(cq));
    }
  }

  if (!numerical) return out;

  // Numerical statements along the c-sorted arrangement.
  const auto gens = s.values();
  const Arrangement order = c_sorted_arrangement(A);
  const bool sorted = is_betti_sorted(A), isorted = is_betti_isolated_sorted(A);
  const bool divisible = is_betti_divisible(A), idivisible = is_betti_isolated_divisible(A);
  const bool single = p.betti.size() == 1;
  const bool free_some = free_arrangement_some(A).has_value();
  const Int E = static_cast<Int>(e);

  const Int min_key = *A.c(order[0]) * gens[order[0]];
  for (auto j : order) {
    if (*A.c(j) * gens[j] != min_key) break;
    const std::string ctx = "generator " + std::to_string(j + 1);
    const bool ar = is_alpha_rectangular(A, {j});
    const bool c1 = free_some && single_min;
    out.push_back({"ci-single-minimal-numerical", ctx, CheckKind::Equivalent,
                   {"free, single minimal", "CI, single minimal", "i_b = e, single minimal", "i_b = e, alpha-rectangular"},
                   vals({c1, ci && single_min, ib == E && single_min, ib == E && ar})});
    TheoremCheck cq{"ci-single-minimal-numerical-consequences", ctx, CheckKind::Implies,
                    {"free, single minimal", "Betti = IBetti = {c_i n_i}", "n_j = prod of other c_i"},
                    {c1, std::nullopt, std::nullopt}};
    if (c1) {
      Int prod = 1;
      for (std::size_t i = 0; i < e; ++i)
        if (i != j) prod = saturating_mul(prod, *A.c(i));
      cq.values = vals({true, detail::betti_is_c_multiples(A, {j}), prod == gens[j]});
    }
    out.push_back(std::move(cq));
  }

  if (isorted) {
    const std::size_t j = order[0];
    out.push_back({"isolated-sorted-alpha-free", "generator " + std::to_string(j + 1), CheckKind::Holds,
                   {"alpha-rectangular for the least c_i n_i", "free from that generator"},
                   vals({is_alpha_rectangular(A, {j}), free_arrangement_from(A, {j}).has_value()})});
  }

  {
    auto f3 = find_presentation_chain(A, order[0], order, {ChainShape::Sorted, true, true});
    auto f4 = find_presentation_chain(A, order[0], order, {ChainShape::Sorted, false, false});
    out.push_back({"sorted-presentation", "", CheckKind::Equivalent,
                   {"Betti sorted", "Betti-isolated sorted", "chain presentation with c_i",
                    "chain presentation with free multipliers"},
                   vals({sorted, isorted, f3.has_value(), f4.has_value()})});
    TheoremCheck cq{"sorted-presentation-consequences", "", CheckKind::Implies,
                    {"Betti sorted", "Betti = IBetti = {c_i n_i} past the first"}, {sorted, std::nullopt}};
    if (sorted) cq.values[1] = detail::betti_is_c_multiples(A, {order[0]});
    out.push_back(std::move(cq));

    auto d3 = find_presentation_chain(A, order[0], order, {ChainShape::Divisible, true, true});
    auto d4 = find_presentation_chain(A, order[0], order, {ChainShape::Divisible, false, false});
    out.push_back({"divisible-presentation", "", CheckKind::Equivalent,
                   {"Betti divisible", "Betti-isolated divisible", "divisible chain with c_i",
                    "divisible chain with free multipliers"},
                   vals({divisible, idivisible, d3.has_value(), d4.has_value()})});
  }

  {
    auto rec = recover_params(A);
    out.push_back({"divisible-parametrization", "", CheckKind::Equivalent,
                   {"Betti divisible", "parameters recovered and reproduce S"}, vals({divisible, rec.has_value()})});
    if (rec) {
      bool a_is_c = true;
      for (std::size_t k = 0; k < e; ++k) a_is_c = a_is_c && rec->params.a[k] == *A.c(rec->arrangement[k]);
      out.push_back({"divisible-parametrization-betti", "", CheckKind::Holds,
                     {"Betti = {f_i prod a}", "a_i = c_i"},
                     vals({params_betti(rec->params) == detail::element_values(p.betti), a_is_c})});
    }
    auto pf = single_betti_product_form(s);
    out.push_back({"single-betti-product", "", CheckKind::Equivalent,
                   {"single Betti element", "n_i = product of the other a_j"}, vals({single, pf.has_value()})});
    if (pf) {
      bool a_is_c = true;
      for (std::size_t i = 0; i < e; ++i) a_is_c = a_is_c && (*pf)[i] == *A.c(i);
      out.push_back({"single-betti-product-constants", "", CheckKind::Holds, {"a_i = c_i", "Betti = {prod c}"},
                     vals({a_is_c, p.betti.size() == 1 && p.betti[0][0] == product_of_c(A)})});
    }
  }

  {
    const bool free_all = is_free_all_arrangements(A);
    const bool parts = detail::every_partition_glues_divisibly(s);
    out.push_back({"divisible-gluing-free", "", CheckKind::Equivalent,
                   {"Betti divisible", "every partition glues divisible parts", "free for every arrangement"},
                   vals({divisible, parts, free_all})});
  }

  {
    bool c_all = true, a_all = true;
    for (std::size_t j = 0; j < e; ++j) {
      c_all = c_all && is_c_rectangular(A, {j});
      a_all = a_all && is_alpha_rectangular(A, {j});
    }
    out.push_back({"single-betti-rectangular", "", CheckKind::Equivalent,
                   {"single Betti element", "c-rectangular for every generator, i_b = e",
                    "alpha-rectangular for every generator"},
                   vals({single, c_all && ib == E, a_all})});
  }

  {
    auto f = chain_flags(A).as_vector();
    const auto& labels = chain_labels();
    for (std::size_t k = 0; k + 1 < f.size(); ++k)
      out.push_back({"inclusion-chain", labels[k] + " => " + labels[k + 1], CheckKind::Implies,
                     {labels[k], labels[k + 1]}, vals({f[k], f[k + 1]})});
  }
  return out;
}

// Everything checkable for one numerical semigroup of codimension >= 1.
inline std::vector<TheoremCheck> check_all(Analysis& A) {
  auto out = check_isolation_lemmas(A);
  auto more = check_equivalence_theorems(A);
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  return out;
}

}  // namespace isofact
