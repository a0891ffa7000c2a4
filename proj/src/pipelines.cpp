#include "pictam/pipelines.hpp"

#include "pictam/generators.hpp"

namespace pictam {

namespace {

Document verdict_document(std::vector<CheckResult> checks, const std::string& generator) {
  return make_document("verdict", verdict_payload(std::move(checks)), {generator, 0, Json::object()});
}

}  // namespace

Document validate_document(const Document& d) {
  std::vector<CheckResult> checks;
  if (d.kind == "category") {
    auto c = category_from_payload(d.payload);
    auto r = validate_category(*c);
    checks.push_back(check_from_report("category", r));
    if (r.ok()) checks.back().result = {{"groupoid", c->is_groupoid()}};
  } else if (d.kind == "picard") {
    auto p = picard_from_payload(d.payload);
    checks.push_back(check_from_report("picard", validate_picard(*p)));
  } else if (d.kind == "gamma-groupoid") {
    auto a = gamma_from_payload(d.payload);
    auto r = validate_gamma(*a);
    checks.push_back(check_from_report("gamma", r));
    if (r.ok()) checks.back().result = {{"special", is_special(*a).ok}, {"very_special", is_very_special(*a).ok}};
  } else if (d.kind == "multisimplicial") {
    auto x = multisimplicial_from_payload(d.payload);
    checks.push_back(check_from_report("structure", validate_structure(*x)));
  } else {
    checks = verdict_checks(d.payload);
  }
  return verdict_document(std::move(checks), "pictam validate");
}

void require_valid_picard(const PicardCategory& p) {
  auto r = validate_picard(p);
  if (!r.ok()) throw InputError("input is not a Picard category: " + r.summary());
}

Document invariants_document(const PicardCategory& p) {
  require_valid_picard(p);
  auto inv = pi_invariants(p);
  CheckResult c = check_from_report("invariants", inv.checks);
  c.result = {{"pi0", inv.pi0},
              {"pi0_table", inv.pi0_table},
              {"pi0_unit", inv.pi0_unit},
              {"pi1", inv.pi1},
              {"pi1_table", inv.pi1_table},
              {"q", inv.q}};
  return verdict_document({c}, "pictam invariants");
}

Document k_theory_document(const PicPtr& p, int level, const EnumerationOptions& opts) {
  require_valid_picard(*p);
  auto k = k_theory(p, level, opts);
  Json bounds{{"enumeration", opts.bound}, {"level", level}};
  if (opts.sampled) bounds["samples"] = opts.samples;
  return make_document("gamma-groupoid", gamma_payload(*k.gamma), {"pictam ktheory", opts.seed, bounds});
}

Document corpus_document(const std::string& name) {
  auto p = corpus_instance(name);
  return make_document("picard", picard_payload(*p), {"corpus " + p->label, 0, Json::object()});
}

}  // namespace pictam
