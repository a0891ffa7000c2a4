#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pictam/bridge.hpp"
#include "pictam/document.hpp"
#include "pictam/generators.hpp"
#include "pictam/ktheory.hpp"
#include "pictam/nerve2.hpp"
#include "pictam/pipelines.hpp"
#include "pictam/suite.hpp"

using namespace pictam;

namespace {

struct IoOptions {
  std::string input = "-";
  std::string output = "-";
  std::string format = "machine";
  std::string corpus;
};

std::string read_all(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

void write_all(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

Document load_input(const IoOptions& io) {
  if (!io.corpus.empty()) {
    auto p = corpus_instance(io.corpus);
    return make_document("picard", picard_payload(*p), {"corpus " + p->label, 0, Json::object()});
  }
  return parse_document(read_all(io.input));
}

PicPtr load_picard(const IoOptions& io, Document* doc = nullptr) {
  auto d = load_input(io);
  if (d.kind != "picard") throw InputError("expected a picard document, got '" + d.kind + "'");
  if (doc) *doc = d;
  return picard_from_payload(d.payload);
}

std::string text_summary(const Document& d) {
  std::ostringstream os;
  if (d.kind == "verdict") {
    for (const auto& c : verdict_checks(d.payload)) {
      os << (c.ok ? "PASS " : "FAIL ") << c.name;
      if (!c.ok) os << ": " << c.witness;
      os << "\n";
    }
    os << (d.payload.value("ok", false) ? "all checks passed" : "some checks failed") << "\n";
    return os.str();
  }
  os << "kind: " << d.kind << "\n";
  os << "generator: " << d.provenance.generator << "\n";
  const auto& p = d.payload;
  if (d.kind == "category") {
    os << "objects: " << p["objects"].size() << "\nmorphisms: " << p["morphisms"].size() << "\n";
  } else if (d.kind == "picard") {
    os << "label: " << p["label"].get<std::string>() << "\nobjects: " << p["category"]["objects"].size()
       << "\nmorphisms: " << p["category"]["morphisms"].size() << "\n";
  } else if (d.kind == "gamma-groupoid") {
    os << "label: " << p["label"].get<std::string>() << "\n";
    for (std::size_t n = 0; n < p["levels"].size(); ++n)
      os << "level " << n << ": " << p["levels"][n]["objects"].size() << " objects, "
         << p["levels"][n]["morphisms"].size() << " morphisms\n";
  } else if (d.kind == "multisimplicial") {
    os << "dimension: " << p["dimension"] << "\ntruncation: " << p["truncation"] << "\n";
    for (const auto& l : p["levels"]) os << "level " << l["index"].dump() << ": " << l["elements"].size() << "\n";
  }
  return os.str();
}

int emit(const IoOptions& io, const Document& d) {
  write_all(io.output, io.format == "text" ? text_summary(d) : serialize_document(d));
  if (d.kind == "verdict") return d.payload.value("ok", false) ? 0 : 1;
  return 0;
}

Document verdict_document(std::vector<CheckResult> checks, const std::string& generator, std::uint64_t seed = 0,
                          Json bounds = Json::object()) {
  return make_document("verdict", verdict_payload(std::move(checks)), {generator, seed, std::move(bounds)});
}

int cmd_validate(const IoOptions& io) { return emit(io, validate_document(load_input(io))); }

int cmd_ktheory(const IoOptions& io, int level, double bound, int sample, std::uint64_t seed) {
  auto p = load_picard(io);
  EnumerationOptions o;
  o.bound = bound;
  o.sampled = sample > 0;
  o.samples = sample;
  o.seed = seed;
  return emit(io, k_theory_document(p, level, o));
}

// Number of elements of the levelwise nerve, computed from chain counts.
double levelwise_nerve_size(const SimplicialCategory& x) {
  double total = 0;
  for (const auto& c : x.levels) {
    std::vector<double> cur(c->num_objects(), 1.0);
    total += static_cast<double>(c->num_objects());
    for (int t = 1; t <= x.N; ++t) {
      std::vector<double> next(c->num_objects(), 0.0);
      for (Id f = 0; f < static_cast<Id>(c->num_morphisms()); ++f) next[c->target(f)] += cur[c->source(f)];
      cur = std::move(next);
      for (double v : cur) total += v;
    }
  }
  return total;
}

int cmd_nerve(const IoOptions& io, int level, double bound) {
  auto p = load_picard(io);
  require_valid_picard(*p);
  EnumerationOptions o;
  o.bound = bound;
  auto nv = nerve(p, level, o);
  const double size = levelwise_nerve_size(*nv.simplicial);
  if (size > bound)
    throw BoundExceeded("levelwise nerve would have " + std::to_string(static_cast<long long>(size)) +
                            " elements, above the bound; lower --level or raise --bound",
                        size);
  auto x = levelwise_nerve(*nv.simplicial);
  return emit(io, make_document("multisimplicial", multisimplicial_payload(x),
                                {"pictam nerve", 0, {{"enumeration", bound}, {"level", level}}}));
}

int cmd_compare(const IoOptions& io, int max_level, double bound, int sample, std::uint64_t seed) {
  auto p = load_picard(io);
  require_valid_picard(*p);
  if (max_level < 0 || max_level > 3) throw InputError("--max-level must be between 0 and 3");
  EnumerationOptions o;
  o.bound = bound;
  auto k = k_theory(p, max_level, o);
  auto nv = nerve(p, max_level, o);
  std::vector<CheckResult> checks;
  std::vector<FinFunctor> Us;
  for (int n = 0; n <= max_level; ++n) {
    const auto& kl = *k.levels[n];
    const auto& nl = *nv.levels[n];
    const std::string at = "n" + std::to_string(n) + "/";
    auto U = forget_U(kl, nl);
    auto F = extend_F(nl, kl);
    checks.push_back({at + "UF_identity", same_functor(compose_functors(U, F), identity_functor(nl.cat)),
                      "", Json()});
    if (!checks.back().ok) checks.back().witness = "U F differs from the identity";
    checks.push_back(check_from_verdict(at + "U_equivalence", Verdict{is_equivalence(U).is_equivalence,
                                                                        is_equivalence(U).witness}));
    auto e = eta(kl, U, F);
    if (sample > 0 && n >= 3) {
      auto s = verify_eta_sampled(kl, e, seed, sample);
      checks.push_back(check_from_verdict(at + "eta_sampled", s.verdict));
      checks.back().result = {{"draws", s.draws}, {"seed", s.seed}};
    } else {
      checks.push_back(check_from_verdict(at + "eta_natural_iso", verify_nat_iso(e.source, e.target, e.components)));
    }
    Us.push_back(std::move(U));
  }
  checks.push_back(check_from_verdict("U_naturality", u_naturality(k, nv, Us)));
  Json bounds{{"enumeration", bound}, {"max_level", max_level}};
  if (sample > 0) bounds["samples"] = sample;
  return emit(io, verdict_document(std::move(checks), "pictam compare", seed, bounds));
}

int cmd_picardize(const IoOptions& io, const std::string& policy_name_in, bool emit_picard, double bound) {
  auto d = load_input(io);
  GammaPtr a;
  KTheory k;
  if (d.kind == "picard") {
    auto p = picard_from_payload(d.payload);
    require_valid_picard(*p);
    EnumerationOptions o;
    o.bound = bound;
    k = k_theory(p, 3, o);
    a = k.gamma;
  } else if (d.kind == "gamma-groupoid") {
    a = gamma_from_payload(d.payload);
  } else {
    throw InputError("picardize expects a picard or gamma-groupoid document");
  }
  auto r = validate_pictam(*a);
  if (!r.ok()) {
    std::vector<CheckResult> checks{check_from_report("input_pictam", r)};
    return emit(io, verdict_document(std::move(checks), "pictam picardize"));
  }
  if (a->N < 3) throw InputError("picardize needs levels up to <3>");
  ChoicePolicy policy = policy_name_in == "max" ? ChoicePolicy::max_id : ChoicePolicy::min_id;
  auto m = picardize(a, policy);
  if (emit_picard)
    return emit(io, make_document("picard", picard_payload(*m.pic), {"pictam picardize", 0, {{"policy", policy_name_in}}}));
  std::vector<CheckResult> checks{check_from_report("input_pictam", r)};
  checks.push_back(check_from_verdict("quasi_inverse_2", verify_quasi_inverse(m.q2)));
  checks.push_back(check_from_verdict("quasi_inverse_3", verify_quasi_inverse(m.q3)));
  auto rp = validate_picard(*m.pic);
  checks.push_back(check_from_report("picard", rp));
  if (rp.ok()) checks.back().result = picard_payload(*m.pic);
  auto other = picardize(a, policy == ChoicePolicy::min_id ? ChoicePolicy::max_id : ChoicePolicy::min_id);
  checks.push_back(check_from_verdict("policies_isomorphic", tensor_policies_isomorphic(m, other)));
  if (rp.ok()) {
    EnumerationOptions o;
    o.bound = bound;
    auto kmm = k_theory(m.pic, a->N, o);
    auto z = zeta(m, kmm);
    checks.push_back(check_from_report("zeta_morphism", validate_gamma_morphism(z)));
    checks.push_back(check_from_verdict("zeta_levelwise_equivalence", is_levelwise_equivalence(z)));
    if (k.gamma) {
      auto mf = picardization_to_original(m, k);
      auto rf = validate_monoidal_functor(mf);
      checks.push_back(check_from_report("functor_to_original", rf));
      checks.push_back({"functor_isomorphism", rf.ok() && is_isomorphism_of_categories(mf.functor),
                        "underlying functor is not an isomorphism", Json()});
      if (checks.back().ok) checks.back().witness.clear();
    }
  }
  return emit(io, verdict_document(std::move(checks), "pictam picardize", 0,
                                   {{"enumeration", bound}, {"policy", policy_name_in}}));
}

int cmd_invariants(const IoOptions& io) { return emit(io, invariants_document(*load_picard(io))); }

int cmd_suite(const IoOptions& io, const std::string& config_path) {
  const std::string text = read_all(config_path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("config parse error: ") + e.what());
  }
  std::string base = ".";
  if (config_path != "-") base = std::filesystem::path(config_path).parent_path().string();
  if (base.empty()) base = ".";
  auto cfg = suite_config_from_json(j, base);
  auto res = run_suite(cfg);
  emit(io, res.verdict);
  return res.exit_code;
}

int cmd_corpus(const IoOptions& io, const std::string& name) {
  if (name.empty()) {
    write_all(io.output, join(corpus_names(), "\n") + "\n");
    return 0;
  }
  return emit(io, corpus_document(name));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pictam: finite Picard categories, K-theory Gamma-groupoids and 2-nerves"};
  app.require_subcommand(1);
  IoOptions io;
  auto add_io = [&](CLI::App* sub, bool with_input) {
    if (with_input) {
      sub->add_option("input", io.input, "input document, - for stdin")->capture_default_str();
      sub->add_option("--corpus", io.corpus, "use a corpus instance instead of an input document");
    }
    sub->add_option("-o,--output", io.output, "output file, - for stdout")->capture_default_str();
    sub->add_option("--format", io.format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
  };
  int level = 3, max_level = 3, sample = 0;
  std::uint64_t seed = 0;
  double bound = 1e6;
  std::string config, policy = "min", corpus_name;
  bool emit_picard = false;

  auto* validate = app.add_subcommand("validate", "validate a document of any kind");
  add_io(validate, true);
  auto* kt = app.add_subcommand("ktheory", "K-theory Gamma-groupoid of a Picard category");
  add_io(kt, true);
  kt->add_option("--level", level, "truncation level")->check(CLI::Range(0, 4))->capture_default_str();
  kt->add_option("--bound", bound, "exhaustive enumeration bound")->capture_default_str();
  kt->add_option("--sample", sample, "sampled mode with this many objects per level");
  kt->add_option("--seed", seed, "seed for sampled mode");
  auto* nv = app.add_subcommand("nerve", "levelwise nerve of the 2-nerve of a Picard category");
  add_io(nv, true);
  nv->add_option("--level", level, "truncation level")->check(CLI::Range(0, 4))->capture_default_str();
  nv->add_option("--bound", bound, "bound on enumerated elements")->capture_default_str();
  auto* cmp = app.add_subcommand("compare", "check U, F and eta between K-theory and the 2-nerve");
  add_io(cmp, true);
  cmp->add_option("--max-level", max_level, "highest level compared")->capture_default_str();
  cmp->add_option("--sample", sample, "eta components sampled at level 3 (0: exhaustive)");
  cmp->add_option("--seed", seed, "seed for sampling");
  cmp->add_option("--bound", bound, "exhaustive enumeration bound")->capture_default_str();
  auto* pic = app.add_subcommand("picardize", "Picard category of a Picard-Tamsamani Gamma-groupoid");
  add_io(pic, true);
  pic->add_option("--policy", policy, "preimage choice: min or max")
      ->check(CLI::IsMember({"min", "max"}))
      ->capture_default_str();
  pic->add_flag("--emit-picard", emit_picard, "write the resulting picard document instead of a verdict");
  pic->add_option("--bound", bound, "exhaustive enumeration bound")->capture_default_str();
  auto* inv = app.add_subcommand("invariants", "pi0, pi1 and the quadratic map of a Picard category");
  add_io(inv, true);
  auto* suite = app.add_subcommand("suite", "run the acceptance suite");
  add_io(suite, false);
  suite->add_option("--config", config, "suite configuration (JSON), - for stdin")->required();
  auto* corp = app.add_subcommand("corpus", "list corpus instances or write one as a picard document");
  add_io(corp, false);
  corp->add_option("name", corpus_name, "instance label");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) return cmd_validate(io);
    if (*kt) return cmd_ktheory(io, level, bound, sample, seed);
    if (*nv) return cmd_nerve(io, level, bound);
    if (*cmp) return cmd_compare(io, max_level, bound, sample, seed);
    if (*pic) return cmd_picardize(io, policy, emit_picard, bound);
    if (*inv) return cmd_invariants(io);
    if (*suite) return cmd_suite(io, config);
    if (*corp) return cmd_corpus(io, corpus_name);
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << " (estimate " << e.estimate << ")\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
