#pragma once

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "explore.hpp"

namespace isofact {

using Json = nlohmann::ordered_json;

namespace report {

inline constexpr Int kMaxExactDouble = Int{1} << 53;

// Integers beyond 2^53 lose precision in common JSON readers.
inline Json integer(Int v) {
  if (v > kMaxExactDouble || v < -kMaxExactDouble) return std::to_string(v);
  return v;
}

inline Json vec(const Vec& v) {
  Json a = Json::array();
  for (Int x : v) a.push_back(integer(x));
  return a;
}

inline Json element(const Element& v) { return v.size() == 1 ? integer(v[0]) : vec(v); }

inline Json elements(const std::vector<Element>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(element(x));
  return a;
}

inline Json vecs(const std::vector<Vec>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(vec(x));
  return a;
}

inline Json indices(const std::vector<std::size_t>& xs) {
  Json a = Json::array();
  for (auto i : xs) a.push_back(i + 1);
  return a;
}

inline Json opt_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

// ---------------------------------------------------------------------------

inline Json semigroup(const Semigroup& s) {
  Json j;
  j["generators"] = elements(s.gens());
  Json arr = Json::array();
  for (std::size_t i = 0; i < s.embedding_dimension(); ++i)
    arr.push_back({{"index", i + 1}, {"generator", element(s.gen(i))}});
  j["arrangement"] = arr;
  j["numerical"] = s.is_numerical();
  j["ambient_dimension"] = s.ambient_dim();
  j["dimension"] = s.dimension();
  j["embedding_dimension"] = s.embedding_dimension();
  j["simplicial"] = s.is_simplicial();
  if (s.is_numerical()) {
    j["multiplicity"] = integer(multiplicity(s));
    j["frobenius"] = integer(frobenius(s));
    j["genus"] = integer(genus(s));
  }
  return j;
}

inline Json fiber(const Fiber& f) {
  Json j;
  j["element"] = element(f.element);
  j["denumerant"] = f.denumerant();
  j["nc"] = f.nc();
  j["factorizations"] = vecs(f.factorizations);
  Json classes = Json::array();
  for (const auto& cls : f.r_classes) {
    std::vector<Vec> members;
    for (auto k : cls) members.push_back(f.factorizations[k]);
    classes.push_back(vecs(members));
  }
  j["r_classes"] = classes;
  j["isolated"] = vecs(f.isolated());
  return j;
}

inline Json relation(const Relation& r) { return {{"lhs", vec(r.lhs)}, {"rhs", vec(r.rhs)}}; }

inline Json betti(const BettiProfile& p) {
  Json j;
  j["elements"] = elements(p.betti);
  j["complete"] = p.complete;
  j["method"] = p.method;
  j["degree_bound"] = p.degree_bound ? integer(*p.degree_bound) : Json(nullptr);
  Json fibers = Json::array();
  for (const auto& f : p.fibers) fibers.push_back(fiber(f));
  j["fibers"] = fibers;
  if (p.complete) {
    Json rels = Json::array();
    for (const auto& r : minimal_presentation(p)) rels.push_back(relation(r));
    j["minimal_presentation"] = rels;
    j["presentation_size"] = presentation_size(p);
  }
  return j;
}

inline Json isolated(const IsolatedProfile& iso) {
  Json j;
  j["I_b"] = vecs(iso.ib);
  j["i_b"] = iso.i_b();
  if (iso.is) {
    j["i_s"] = iso.i_s();
    j["i_s_exhaustive"] = iso.is->exhaustive;
    j["I_s"] = vecs(iso.is->factorizations);
  } else {
    j["i_s"] = nullptr;
  }
  j["ibetti"] = elements(iso.ibetti);
  j["betti_minimals"] = elements(iso.betti_minimals);
  std::vector<std::size_t> cidx;
  Json c = Json::array();
  for (const auto& [i, v] : iso.c_atoms) {
    cidx.push_back(i);
    c.push_back({{"generator", i + 1}, {"c", integer(v)}});
  }
  j["C"] = indices(cidx);
  j["c"] = c;
  return j;
}

inline Json arrangement_constants_json(const ArrangementConstants& k) {
  Json j;
  j["arrangement"] = indices(k.arrangement);
  j["rays"] = k.rays;
  j["c_bar"] = vec(k.c_bar);
  j["c_star"] = vec(k.c_star);
  j["c"] = vec(k.c);
  j["alpha"] = vec(k.alpha);
  if (!k.d.empty()) j["d"] = vec(k.d);
  return j;
}

inline Json ray_sets_json(const std::vector<RaySet>& xs) {
  Json a = Json::array();
  for (const auto& r : xs) a.push_back(indices(r));
  return a;
}

inline Json classification(const ClassificationReport& r) {
  Json j;
  j["cohen_macaulay"] = opt_bool(r.cohen_macaulay);
  j["gorenstein"] = opt_bool(r.gorenstein);
  j["free_for_stored"] = opt_bool(r.free_for_stored);
  j["free_some_arrangement"] = opt_bool(r.free_some_arrangement);
  j["free_witness"] = r.free_witness ? indices(*r.free_witness) : Json(nullptr);
  j["free_all_arrangements"] = opt_bool(r.free_all_arrangements);
  j["complete_intersection"] = opt_bool(r.complete_intersection);
  j["rectangular"] = opt_bool(r.rectangular);
  j["rectangular_for"] = ray_sets_json(r.rectangular_for);
  j["rectangular_exponents"] = r.rectangular_exponents ? vec(*r.rectangular_exponents) : Json(nullptr);
  j["c_rectangular"] = opt_bool(r.c_rectangular);
  j["c_rectangular_for"] = ray_sets_json(r.c_rectangular_for);
  j["alpha_rectangular"] = opt_bool(r.alpha_rectangular);
  j["alpha_rectangular_for"] = ray_sets_json(r.alpha_rectangular_for);
  j["alpha_rectangular_every_generator"] = opt_bool(r.alpha_rectangular_every_generator);
  j["betti_sorted"] = opt_bool(r.betti_sorted);
  j["betti_isolated_sorted"] = opt_bool(r.betti_isolated_sorted);
  j["betti_divisible"] = opt_bool(r.betti_divisible);
  j["betti_isolated_divisible"] = opt_bool(r.betti_isolated_divisible);
  j["single_betti"] = opt_bool(r.single_betti);
  j["single_betti_minimal"] = opt_bool(r.single_betti_minimal);
  j["betti_minimal"] = r.betti_minimal ? element(*r.betti_minimal) : Json(nullptr);
  j["notes"] = r.notes;
  return j;
}

inline Json bound(const BoundCheck& b) {
  Json j;
  j["id"] = b.id;
  j["context"] = b.context;
  j["applicable"] = b.applicable;
  if (!b.applicable) {
    j["skipped_reason"] = b.skipped_reason;
    return j;
  }
  j["names"] = b.names;
  j["values"] = vec(b.values);
  j["holds"] = b.holds();
  return j;
}

inline Json theorem(const TheoremCheck& c) {
  Json j;
  j["id"] = c.id;
  j["context"] = c.context;
  j["kind"] = to_string(c.kind);
  j["labels"] = c.labels;
  Json v = Json::array();
  for (const auto& x : c.values) v.push_back(opt_bool(x));
  j["values"] = v;
  j["instances"] = c.instances;
  j["ok"] = c.ok();
  return j;
}

// ---------------------------------------------------------------------------

struct AnalyzeResult {
  Json json;
  std::string text;
};

namespace detail {

inline std::string fmt_elements(const std::vector<Element>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + format_element(xs[i]);
  return s + "}";
}

inline std::string fmt_vecs(const std::vector<Vec>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + format_vector(xs[i]);
  return s + "}";
}

inline std::string fmt_indices(const std::vector<std::size_t>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i] + 1);
  return s + "}";
}

inline std::string yes_no(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "n/a"; }

}  // namespace detail

inline std::string arrangement_line(const Semigroup& s) {
  std::string out = "arrangement:";
  for (std::size_t i = 0; i < s.embedding_dimension(); ++i)
    out += (i ? ", " : " ") + std::string("n") + std::to_string(i + 1) + "=" + format_element(s.gen(i));
  return out;
}

inline std::string semigroup_text(const Semigroup& s) {
  std::ostringstream o;
  o << "semigroup: " << format_semigroup(s) << "\n" << arrangement_line(s) << "\n";
  o << "embedding dimension " << s.embedding_dimension() << ", dimension " << s.dimension()
    << (s.is_simplicial() ? ", simplicial" : ", not simplicial") << "\n";
  if (s.is_numerical())
    o << "multiplicity " << multiplicity(s) << ", Frobenius number " << frobenius(s) << ", genus " << genus(s) << "\n";
  return o.str();
}

inline std::string fiber_text(const Fiber& f) {
  std::ostringstream o;
  o << format_element(f.element) << ": " << f.denumerant() << " factorizations in " << f.nc() << " R-classes\n";
  for (std::size_t c = 0; c < f.r_classes.size(); ++c) {
    std::vector<Vec> members;
    for (auto k : f.r_classes[c]) members.push_back(f.factorizations[k]);
    o << "  class " << c + 1 << ": " << detail::fmt_vecs(members) << "\n";
  }
  auto iso = f.isolated();
  if (iso.empty())
    o << "  " << format_element(f.element) << ": no isolated factorizations\n";
  else
    o << "  isolated: " << detail::fmt_vecs(iso) << "\n";
  return o.str();
}

inline std::string classification_text(const Semigroup& s, const ClassificationReport& cls) {
  std::ostringstream t;
  t << "classification:\n";
  t << "  Cohen-Macaulay " << detail::yes_no(cls.cohen_macaulay) << ", Gorenstein " << detail::yes_no(cls.gorenstein)
    << "\n";
  t << "  free for stored arrangement " << detail::yes_no(cls.free_for_stored) << ", for some "
    << detail::yes_no(cls.free_some_arrangement);
  if (cls.free_witness) t << " " << detail::fmt_indices(*cls.free_witness);
  t << ", for all " << detail::yes_no(cls.free_all_arrangements) << "\n";
  t << "  complete intersection " << detail::yes_no(cls.complete_intersection) << "\n";
  auto rays_text = [&](const std::vector<RaySet>& xs) {
    std::string out;
    for (const auto& rs : xs) out += " " + ray_context(s, rs) + ";";
    return out;
  };
  t << "  rectangular " << detail::yes_no(cls.rectangular) << rays_text(cls.rectangular_for) << "\n";
  t << "  c-rectangular " << detail::yes_no(cls.c_rectangular) << rays_text(cls.c_rectangular_for) << "\n";
  t << "  alpha-rectangular " << detail::yes_no(cls.alpha_rectangular) << rays_text(cls.alpha_rectangular_for) << "\n";
  t << "  Betti sorted " << detail::yes_no(cls.betti_sorted) << ", Betti-isolated sorted "
    << detail::yes_no(cls.betti_isolated_sorted) << "\n";
  t << "  Betti divisible " << detail::yes_no(cls.betti_divisible) << ", Betti-isolated divisible "
    << detail::yes_no(cls.betti_isolated_divisible) << "\n";
  t << "  single Betti element " << detail::yes_no(cls.single_betti) << ", single Betti-minimal "
    << detail::yes_no(cls.single_betti_minimal) << "\n";
  for (const auto& n : cls.notes) t << "  note: " << n << "\n";
  return t.str();
}

// Full report for one semigroup. Sections that cannot be computed are
// reported with the reason instead of failing the whole analysis.
inline AnalyzeResult analyze(Analysis& A) {
  const auto& s = A.semigroup();
  AnalyzeResult r;
  std::ostringstream t;
  r.json["semigroup"] = semigroup(s);
  t << semigroup_text(s);

  const auto& p = A.betti();
  r.json["betti"] = elements(p.betti);
  r.json["betti_profile"] = betti(p);
  t << "\nBetti elements " << detail::fmt_elements(p.betti);
  if (!p.complete) t << " (degree sweep up to " << *p.degree_bound << ", not certified complete)";
  t << "\n";
  for (const auto& f : p.fibers) t << fiber_text(f);
  if (p.complete) {
    t << "minimal presentation (" << presentation_size(p) << " relations):\n";
    for (const auto& rel : minimal_presentation(p))
      t << "  " << format_vector(rel.lhs) << " ~ " << format_vector(rel.rhs) << "\n";
  }

  const auto& iso = A.isolated();
  r.json["isolated"] = isolated(iso);
  t << "\nI_b = " << detail::fmt_vecs(iso.ib) << "  (i_b = " << iso.i_b() << ")\n";
  if (iso.is) t << "i_s = " << iso.i_s() << (iso.is->exhaustive ? "" : " (bounded window)") << "\n";
  t << "IBetti = " << detail::fmt_elements(iso.ibetti) << "\n";
  t << "Betti-minimals = " << detail::fmt_elements(iso.betti_minimals) << "\n";
  std::vector<std::size_t> cidx;
  std::string cvals;
  for (const auto& [i, v] : iso.c_atoms) {
    cidx.push_back(i);
    cvals += (cvals.empty() ? "" : ", ") + std::string("c") + std::to_string(i + 1) + "=" + std::to_string(v);
  }
  t << "𝒞 = " << detail::fmt_indices(cidx) << (cvals.empty() ? "" : "  (" + cvals + ")") << "\n";

  if (s.is_simplicial()) {
    try {
      auto k = arrangement_constants(s, stored_arrangement(s));
      r.json["constants"] = arrangement_constants_json(k);
      t << "\nconstants for the stored arrangement:\n  c_bar = " << format_vector(k.c_bar)
        << "\n  c*    = " << format_vector(k.c_star) << "\n  c     = " << format_vector(k.c)
        << "\n  alpha = " << format_vector(k.alpha) << "\n";
    } catch (const Infeasible& e) {
      r.json["constants"] = {{"skipped_reason", e.what()}};
    }
  }

  auto cls = classify(A);
  r.json["classification"] = classification(cls);
  t << "\n" << classification_text(s, cls);

  auto bounds = verify_bounds(A);
  Json jb = Json::array();
  t << "\nbounds:\n";
  for (const auto& b : bounds) {
    jb.push_back(bound(b));
    t << "  " << b.id << (b.context.empty() ? "" : " [" + b.context + "]") << ": ";
    if (!b.applicable) {
      t << "skipped (" << b.skipped_reason << ")\n";
      continue;
    }
    for (std::size_t k = 0; k < b.values.size(); ++k)
      t << (k ? " <= " : "") << b.names[k] << " = " << b.values[k];
    t << (b.holds() ? "" : "  VIOLATED") << "\n";
  }
  r.json["bounds"] = jb;
  r.text = t.str();
  return r;
}

// ---------------------------------------------------------------------------

inline Json harness(const HarnessReport& r, const Corpus& corpus) {
  Json j;
  std::map<std::string, std::size_t> by_provenance;
  for (const auto& e : corpus.entries()) ++by_provenance[to_string(e.provenance)];
  j["corpus"] = {{"size", corpus.size()}, {"by_provenance", by_provenance}};
  j["semigroups"] = r.semigroups;
  j["skipped_trivial"] = r.skipped_trivial;
  j["checks"] = r.checks;
  j["violation_count"] = r.violations.size();
  Json v = Json::array();
  for (const auto& x : r.violations) {
    Json e;
    e["generators"] = vec(x.gens);
    e["source"] = x.source;
    e["category"] = x.category;
    if (x.theorem) e["theorem"] = theorem(*x.theorem);
    if (x.bound) e["bound"] = bound(*x.bound);
    if (!x.message.empty()) e["message"] = x.message;
    v.push_back(e);
  }
  j["violations"] = v;
  auto tallies = [](const std::map<std::string, CheckTally>& m) {
    Json o = Json::object();
    for (const auto& [id, t] : m)
      o[id] = {{"semigroups", t.semigroups}, {"instances", t.instances}, {"failures", t.failures}};
    return o;
  };
  j["theorems"] = tallies(r.theorem_tallies);
  j["bounds"] = tallies(r.bound_tallies);
  Json chain = Json::array();
  for (const auto& c : r.chain)
    chain.push_back({{"smaller", c.smaller},
                     {"larger", c.larger},
                     {"containment_failures", c.containment_failures},
                     {"strictness_witnesses", c.strictness_witnesses},
                     {"first_witness", c.first_witness ? vec(*c.first_witness) : Json(nullptr)}});
  j["chain"] = chain;
  j["chain_strict"] = r.chain_strict();
  j["free_statistics"] = {{"free", r.free_semigroups}, {"c_equals_c_bar", r.free_with_c_equal_cbar}};
  return j;
}

inline std::string harness_text(const HarnessReport& r, const Corpus& corpus) {
  std::ostringstream o;
  std::map<std::string, std::size_t> by_provenance;
  for (const auto& e : corpus.entries()) ++by_provenance[to_string(e.provenance)];
  o << "corpus: " << corpus.size() << " semigroups";
  for (const auto& [k, n] : by_provenance) o << ", " << n << " " << k;
  o << "\nchecked " << r.semigroups - r.skipped_trivial << " semigroups (" << r.skipped_trivial
    << " trivial skipped), " << r.checks << " check records\n";
  for (const auto& x : r.violations) {
    o << "VIOLATION ⟨";
    for (std::size_t i = 0; i < x.gens.size(); ++i) o << (i ? "," : "") << x.gens[i];
    o << "⟩ [" << x.source << "] " << x.category << ": ";
    if (x.theorem) {
      o << x.theorem->id << " " << x.theorem->context << " (";
      for (std::size_t k = 0; k < x.theorem->values.size(); ++k)
        o << (k ? ", " : "") << x.theorem->labels[k] << "="
          << (x.theorem->values[k] ? (*x.theorem->values[k] ? "T" : "F") : "?");
      o << ")";
    }
    if (x.bound) {
      o << x.bound->id << " " << x.bound->context << " " << format_vector(x.bound->values);
    }
    o << x.message << "\n";
  }
  o << "inclusion chain:\n";
  for (const auto& c : r.chain) {
    o << "  " << c.smaller << " ⊂ " << c.larger << ": " << c.containment_failures << " containment failures, "
      << c.strictness_witnesses << " strictness witnesses";
    if (c.first_witness) o << ", first " << format_vector(*c.first_witness);
    o << "\n";
  }
  o << "free semigroups: " << r.free_semigroups << ", with c_i = c_bar_i along the free arrangement: "
    << r.free_with_c_equal_cbar << "\n";
  o << r.violations.size() << " violations\n";
  return o.str();
}

}  // namespace report
}  // namespace isofact
