#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "isofact/report.hpp"

using namespace isofact;

namespace {

enum Exit { kOk = 0, kViolations = 1, kParse = 2, kInfeasible = 3, kBreach = 4 };

struct Globals {
  bool json = false;
  bool timing = false;
  std::optional<Int> degree_bound;
  unsigned threads = 1;
  std::size_t fiber_cap = kDefaultFiberCap;

  BettiOptions betti() const { return {degree_bound, fiber_cap}; }
};

void emit(const Globals& g, const Json& j, const std::string& text) {
  if (g.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

Semigroup parse_gens(const std::string& text) { return parse_semigroup(text); }

std::vector<Int> parse_ints(const std::string& text) {
  std::vector<Int> out;
  for (const auto& e : parse_generators(text)) {
    if (e.size() != 1) throw ParseError("expected a comma-separated list of integers");
    out.push_back(e[0]);
  }
  return out;
}

int cmd_analyze(const Globals& g, const std::string& gens) {
  Analysis A(parse_gens(gens), g.betti());
  auto r = report::analyze(A);
  emit(g, r.json, r.text);
  return kOk;
}

int cmd_factorize(const Globals& g, const std::string& gens, const std::string& element) {
  Semigroup s = parse_gens(gens);
  Element m = parse_element(element);
  if (m.size() != s.ambient_dim()) throw ParseError("element dimension does not match the generators");
  Fiber f = fiber(s, m, g.fiber_cap);
  Json j;
  j["semigroup"] = report::semigroup(s);
  j["in_semigroup"] = f.denumerant() > 0;
  j["fiber"] = report::fiber(f);
  std::string text = report::semigroup_text(s) + "\n";
  text += f.denumerant() == 0 ? format_element(m) + " is not in the semigroup\n" : report::fiber_text(f);
  emit(g, j, text);
  return kOk;
}

int cmd_betti(const Globals& g, const std::string& gens) {
  Analysis A(parse_gens(gens), g.betti());
  const auto& p = A.betti();
  Json j;
  j["semigroup"] = report::semigroup(A.semigroup());
  j["betti"] = report::elements(p.betti);
  j["betti_profile"] = report::betti(p);
  if (p.complete) j["complete_intersection"] = is_ci(A);
  std::string text = report::semigroup_text(A.semigroup()) + "\nBetti elements " + report::detail::fmt_elements(p.betti);
  if (!p.complete) text += " (degree sweep, not certified complete)";
  text += "\n";
  for (const auto& f : p.fibers) text += report::fiber_text(f);
  if (p.complete) {
    text += "minimal presentation:\n";
    for (const auto& r : minimal_presentation(p)) text += "  " + format_vector(r.lhs) + " ~ " + format_vector(r.rhs) + "\n";
    text += std::string("complete intersection: ") + (is_ci(A) ? "yes" : "no") + "\n";
  }
  emit(g, j, text);
  return kOk;
}

int cmd_classify(const Globals& g, const std::string& gens, bool theorems) {
  Analysis A(parse_gens(gens), g.betti());
  auto cls = classify(A);
  Json j;
  j["semigroup"] = report::semigroup(A.semigroup());
  j["classification"] = report::classification(cls);
  std::string text = report::semigroup_text(A.semigroup()) + "\n" + report::classification_text(A.semigroup(), cls);
  int code = kOk;
  if (theorems) {
    if (!A.semigroup().is_numerical()) throw InvalidArgument("theorem checks run on numerical semigroups");
    Json arr = Json::array();
    std::size_t failed = 0;
    text += "\ntheorem checks:\n";
    if (A.semigroup().codimension() > 0) {
      for (const auto& c : check_all(A)) {
        arr.push_back(report::theorem(c));
        if (!c.ok()) ++failed;
        text += "  " + std::string(c.ok() ? "ok   " : "FAIL ") + c.id + (c.context.empty() ? "" : " [" + c.context + "]") +
                " x" + std::to_string(c.instances) + "\n";
      }
    }
    j["theorems"] = arr;
    text += std::to_string(failed) + " violations\n";
    if (failed) code = kViolations;
  }
  emit(g, j, text);
  return code;
}

int cmd_construct_params(const Globals& g, const std::string& a, const std::string& f) {
  BettiDivisibleParams p{parse_ints(a), parse_ints(f)};
  Semigroup s = betti_divisible_from_params(p);
  auto predicted = params_betti(p);
  auto computed = betti_values(s);
  if (predicted != computed) throw InvariantBreach("parametrized Betti prediction differs from the computed Betti set");
  Json j;
  j["a"] = report::vec(p.a);
  j["f"] = report::vec(p.f);
  j["semigroup"] = report::semigroup(s);
  j["betti"] = report::vec(computed);
  j["frobenius_formula"] = report::integer(params_frobenius(p));
  std::string text = "a = " + format_vector(p.a) + ", f = " + format_vector(p.f) + "\n" + report::semigroup_text(s) +
                     "Betti elements " + format_vector(computed) + "\n";
  emit(g, j, text);
  return kOk;
}

int cmd_construct_recover(const Globals& g, const std::string& gens) {
  Semigroup s = parse_gens(gens);
  if (!s.is_numerical()) throw InvalidArgument("parameter recovery needs a numerical semigroup");
  Analysis A(s, g.betti());
  auto r = recover_params(A);
  Json j;
  j["semigroup"] = report::semigroup(s);
  std::string text = report::semigroup_text(s);
  if (r) {
    j["params"] = {{"a", report::vec(r->params.a)}, {"f", report::vec(r->params.f)},
                   {"arrangement", report::indices(r->arrangement)}};
    std::string order;
    for (auto i : r->arrangement) order += (order.empty() ? "" : ",") + std::to_string(s.value(i));
    text += "a = " + format_vector(r->params.a) + ", f = " + format_vector(r->params.f) + " along (" + order + ")\n";
  } else {
    j["params"] = nullptr;
    text += "not Betti divisible: no parameters\n";
  }
  emit(g, j, text);
  return kOk;
}

int cmd_glue(const Globals& g, const std::string& left, const std::string& right, std::optional<Int> a1,
             std::optional<Int> a2, const std::string& d) {
  Json j;
  std::string text;
  if (!d.empty()) {
    auto l = parse_generators(left), r = parse_generators(right);
    auto res = glue_affine(l, r, parse_element(d), g.betti());
    auto computed = betti_elements(res.glued, g.betti());
    j["semigroup"] = report::semigroup(res.glued);
    j["predicted_betti"] = report::elements(res.predicted_betti);
    j["computed_betti"] = report::elements(computed.betti);
    j["computed_complete"] = computed.complete;
    j["parts_complete"] = res.parts_complete;
    j["agree"] = computed.betti == res.predicted_betti;
    text = report::semigroup_text(res.glued) + "predicted Betti " + report::detail::fmt_elements(res.predicted_betti) +
           "\ncomputed Betti  " + report::detail::fmt_elements(computed.betti) +
           (computed.complete ? "" : " (degree sweep)") + "\n";
    emit(g, j, text);
    return kOk;
  }
  if (!a1 || !a2) throw ParseError("numerical gluing needs --a1 and --a2 (or --d for an affine gluing)");
  GluingSpec spec{Semigroup::numerical(parse_ints(left)), Semigroup::numerical(parse_ints(right)), *a1, *a2};
  auto res = glue_numerical(spec);
  auto computed = betti_values(res.glued);
  if (computed != res.predicted_betti) throw InvariantBreach("gluing Betti prediction differs from the computed set");
  j["semigroup"] = report::semigroup(res.glued);
  j["predicted_betti"] = report::vec(res.predicted_betti);
  j["computed_betti"] = report::vec(computed);
  text = report::semigroup_text(res.glued) + "Betti elements " + format_vector(computed) + " (as predicted)\n";
  emit(g, j, text);
  return kOk;
}

int cmd_search_min_frobenius(const Globals& g, std::size_t edim, Int max_f, bool multiple) {
  auto hit = min_frobenius_betti_divisible(edim, max_f, multiple);
  if (!hit)
    throw Infeasible("no Betti-divisible semigroup with embedding dimension >= " + std::to_string(edim) +
                     " and Frobenius number <= " + std::to_string(max_f));
  Semigroup s = Semigroup::numerical(hit->gens);
  Json j;
  j["frobenius"] = report::integer(hit->frobenius);
  j["generators"] = report::vec(hit->gens);
  j["betti"] = report::vec(betti_values(s));
  j["params"] = {{"a", report::vec(hit->params.a)}, {"f", report::vec(hit->params.f)}};
  std::string gens;
  for (Int v : hit->gens) gens += (gens.empty() ? "" : ",") + std::to_string(v);
  std::string text = std::to_string(hit->frobenius) + " : ⟨" + gens + "⟩\n";
  emit(g, j, text);
  return kOk;
}

int cmd_search_genus_counts(const Globals& g, Int genus_max, Int cap) {
  auto counts = genus_counts(genus_max, cap);
  Json j = Json::array();
  std::string text;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    j.push_back({{"genus", k}, {"count", counts[k]}});
    text += "genus " + std::to_string(k) + ": " + std::to_string(counts[k]) + "\n";
  }
  emit(g, Json{{"counts", j}}, text);
  return kOk;
}

int cmd_search_corpus(Int genus_max, Int cap, bool constructed) {
  Corpus c = enumerate_numerical_by_genus(genus_max, cap);
  if (constructed) c.merge(constructed_corpus());
  std::cout << format_corpus(c);
  return kOk;
}

int cmd_verify(const Globals& g, std::optional<Int> genus_max, const std::string& corpus_file, bool constructed,
               Int cap) {
  if (!genus_max && corpus_file.empty() && !constructed) throw ParseError("verify needs --genus, --corpus or --constructed");
  Corpus c;
  if (genus_max) c.merge(enumerate_numerical_by_genus(*genus_max, cap));
  if (!corpus_file.empty()) c.merge(load_corpus(corpus_file));
  if (constructed) c.merge(constructed_corpus());
  auto r = run_theorem_harness(c, {g.threads, g.betti()});
  emit(g, report::harness(r, c), report::harness_text(r, c));
  return r.violations.empty() ? kOk : kViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factorizations, Betti elements, isolated factorizations and structural classes of affine semigroups"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON instead of text");
  app.add_flag("--timing", g.timing, "Report elapsed time on stderr");
  app.add_option("--degree-bound", g.degree_bound, "Total-degree bound for affine sweeps")->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads, "Worker threads for verify")->check(CLI::Range(1u, 1024u));
  app.add_option("--fiber-cap", g.fiber_cap, "Largest fiber enumerated before giving up")->check(CLI::PositiveNumber);

  std::string gens, element, left, right, d, a, f, corpus_file;
  std::optional<Int> a1, a2, genus_opt;
  bool theorems = false, multiple = false, constructed = false;
  std::size_t edim = 4;
  Int max_f = 600, genus_max = 0, cap = kDefaultGenusCap;

  auto* analyze = app.add_subcommand("analyze", "Full report for one semigroup");
  analyze->add_option("--gens", gens, "Generators: 24,26,36,39 or (1,0);(0,2)")->required();
  auto* factorize = app.add_subcommand("factorize", "Factorizations and R-classes of one element");
  factorize->add_option("--gens", gens)->required();
  factorize->add_option("--element", element, "Element: 80 or (1,1)")->required();
  auto* betti = app.add_subcommand("betti", "Betti elements and a minimal presentation");
  betti->add_option("--gens", gens)->required();
  auto* classify_cmd = app.add_subcommand("classify", "Structural classification");
  classify_cmd->add_option("--gens", gens)->required();
  classify_cmd->add_flag("--theorems", theorems, "Also evaluate every theorem check");

  auto* construct = app.add_subcommand("construct", "Betti-divisible family builders");
  construct->require_subcommand(1);
  auto* params = construct->add_subcommand("params", "Semigroup from parameters a, f");
  params->add_option("--a", a)->required();
  params->add_option("--f", f)->required();
  auto* recover = construct->add_subcommand("recover", "Parameters of a Betti-divisible semigroup");
  recover->add_option("--gens", gens)->required();

  auto* glue = app.add_subcommand("glue", "Glue two semigroups");
  glue->add_option("--left", left)->required();
  glue->add_option("--right", right)->required();
  glue->add_option("--a1", a1, "Multiplier of the left part (numerical)");
  glue->add_option("--a2", a2, "Multiplier of the right part (numerical)");
  glue->add_option("--d", d, "Glue element (affine)");

  auto* search = app.add_subcommand("search", "Computational searches");
  search->require_subcommand(1);
  auto* minf = search->add_subcommand("min-frobenius-betti-divisible", "Least Frobenius number among Betti-divisible semigroups");
  minf->add_option("--edim", edim, "Least embedding dimension")->check(CLI::Range(std::size_t{2}, std::size_t{63}));
  minf->add_option("--max-frobenius", max_f)->check(CLI::PositiveNumber);
  minf->add_flag("--multiple-betti", multiple, "Skip semigroups with a single Betti element");
  auto* counts = search->add_subcommand("genus-counts", "Number of numerical semigroups per genus");
  counts->add_option("--genus", genus_max)->required()->check(CLI::NonNegativeNumber);
  counts->add_option("--genus-cap", cap, "Largest genus the enumeration accepts")->capture_default_str();
  auto* corpus = search->add_subcommand("corpus", "Print a corpus file");
  corpus->add_option("--genus", genus_max)->required()->check(CLI::NonNegativeNumber);
  corpus->add_option("--genus-cap", cap, "Largest genus the enumeration accepts")->capture_default_str();
  corpus->add_flag("--constructed", constructed, "Append the constructed supplement");

  auto* verify = app.add_subcommand("verify", "Run every theorem and bound check over a corpus");
  verify->add_option("--genus", genus_opt, "All numerical semigroups up to this genus")->check(CLI::NonNegativeNumber);
  verify->add_option("--corpus", corpus_file, "Corpus file, one semigroup per line");
  verify->add_flag("--constructed", constructed, "Add the constructed supplement");
  verify->add_option("--genus-cap", cap, "Largest genus the enumeration accepts")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    if (*analyze) code = cmd_analyze(g, gens);
    else if (*factorize) code = cmd_factorize(g, gens, element);
    else if (*betti) code = cmd_betti(g, gens);
    else if (*classify_cmd) code = cmd_classify(g, gens, theorems);
    else if (*params) code = cmd_construct_params(g, a, f);
    else if (*recover) code = cmd_construct_recover(g, gens);
    else if (*glue) code = cmd_glue(g, left, right, a1, a2, d);
    else if (*minf) code = cmd_search_min_frobenius(g, edim, max_f, multiple);
    else if (*counts) code = cmd_search_genus_counts(g, genus_max, cap);
    else if (*corpus) code = cmd_search_corpus(genus_max, cap, constructed);
    else if (*verify) code = cmd_verify(g, genus_opt, corpus_file, constructed, cap);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kParse;
  } catch (const Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const InvariantBreach& e) {
    std::cerr << "invariant breach: " << e.what() << "\n";
    return kBreach;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invariant breach: " << e.what() << "\n";
    return kBreach;
  }
  if (g.timing)
    std::cerr << "elapsed "
              << std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count() << " ms\n";
  return code;
}
