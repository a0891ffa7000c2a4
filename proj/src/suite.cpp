#include "pictam/suite.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include "pictam/bridge.hpp"
#include "pictam/generators.hpp"
#include "pictam/ktheory.hpp"
#include "pictam/nerve2.hpp"
#include "pictam/shapes.hpp"

namespace pictam {

const std::vector<std::string>& suite_groups() {
  static const std::vector<std::string> groups{"picard",     "very-special",  "tamsamani",
                                               "comparison", "picardization", "structural"};
  return groups;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t derive_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : name) h = (h ^ ch) * 1099511628211ull;
  return h ^ (seed * 0x9E3779B97F4A7C15ull);
}

}  // namespace

SuiteConfig suite_config_from_json(const Json& j, const std::string& base_dir) {
  static const std::set<std::string> keys{"seed",           "bound",
                                          "eta_samples",    "category_pairs",
                                          "truncation_instances", "two_category_instances",
                                          "corpus",         "checks",
                                          "picard_inputs"};
  if (!j.is_object()) throw InputError("config: expected an object");
  for (const auto& [k, v] : j.items())
    if (!keys.count(k)) throw InputError("config: unknown key '" + k + "'");
  SuiteConfig c;
  auto count = [&](const char* key, int& dst, int lo) {
    if (!j.contains(key)) return;
    if (!j[key].is_number_integer() || j[key].get<long long>() < lo || j[key].get<long long>() > 100000)
      throw InputError(std::string("config: '") + key + "' must be an integer >= " + std::to_string(lo));
    dst = j[key].get<int>();
  };
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer() || (!j["seed"].is_number_unsigned() && j["seed"].get<long long>() < 0))
      throw InputError("config: 'seed' must be a non-negative integer");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("bound")) {
    if (!j["bound"].is_number() || j["bound"].get<double>() <= 0) throw InputError("config: 'bound' must be positive");
    c.bound = j["bound"].get<double>();
  }
  count("eta_samples", c.eta_samples, 1);
  count("category_pairs", c.category_pairs, 0);
  count("truncation_instances", c.truncation_instances, 0);
  count("two_category_instances", c.two_category_instances, 0);
  auto strings = [&](const char* key) {
    std::vector<std::string> out;
    if (!j[key].is_array()) throw InputError(std::string("config: '") + key + "' must be an array");
    for (const auto& e : j[key]) {
      if (!e.is_string()) throw InputError(std::string("config: '") + key + "' entries must be strings");
      out.push_back(e.get<std::string>());
    }
    return out;
  };
  c.corpus = j.contains("corpus") ? strings("corpus") : corpus_names();
  for (const auto& name : c.corpus) corpus_instance(name);
  c.checks = j.contains("checks") ? strings("checks") : suite_groups();
  for (const auto& g : c.checks)
    if (std::find(suite_groups().begin(), suite_groups().end(), g) == suite_groups().end())
      throw InputError("config: unknown check group '" + g + "'; known: " + join(suite_groups(), ", "));
  if (j.contains("picard_inputs")) {
    if (!j["picard_inputs"].is_array()) throw InputError("config: 'picard_inputs' must be an array");
    for (const auto& e : j["picard_inputs"]) {
      Document d;
      if (e.is_string()) {
        std::filesystem::path p(e.get<std::string>());
        if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
        d = parse_document(read_file(p.string()));
      } else {
        d = document_from_json(e);
      }
      if (d.kind != "picard") throw InputError("config: picard_inputs entry of kind '" + d.kind + "'");
      picard_from_payload(d.payload);
      c.picard_inputs.push_back(std::move(d));
    }
  }
  return c;
}

CorruptionOutcome corruption_sweep(const PicardCategory& p) {
  static const std::map<std::string, std::set<std::string>> involved{
      {"associator", {"associator_naturality", "pentagon", "triangle", "hexagon"}},
      {"left_unitor", {"left_unitor_naturality", "triangle", "unit_coherence", "unit_symmetry"}},
      {"right_unitor", {"right_unitor_naturality", "triangle", "unit_coherence", "unit_symmetry"}},
      {"symmetry", {"symmetry_naturality", "symmetry_involution", "hexagon", "unit_symmetry"}},
  };
  CorruptionOutcome out;
  const auto& c = *p.cat;
  const Id n = static_cast<Id>(c.num_objects()), M = static_cast<Id>(c.num_morphisms());
  auto tuple_name = [&](const std::vector<Id>& objs) {
    std::vector<std::string> parts;
    for (Id x : objs) parts.push_back(c.object_name(x));
    return "(" + join(parts, ",") + ")";
  };
  auto run = [&](const std::string& kind, std::vector<Id> PicardCategory::*table, std::size_t index,
                 const std::vector<Id>& objs) {
    ++out.components;
    const Id orig = (p.*table)[index];
    const Id s = c.source(orig), t = c.target(orig);
    PicardCategory q = p;
    const auto& allowed = involved.at(kind);
    auto attributed = [&](const ValidationReport& r) {
      for (const auto& v : r.violations())
        if (!allowed.count(v.condition)) return false;
      return true;
    };
    auto miss = [&](const std::string& why) {
      ++out.missed;
      if (out.first_miss.empty()) out.first_miss = kind + tuple_name(objs) + ": " + why;
    };
    bool had_alternative = false;
    for (Id alt : c.hom(s, t)) {
      if (alt == orig) continue;
      had_alternative = true;
      (q.*table)[index] = alt;
      auto r = validate_picard(q);
      if (r.ok()) continue;
      if (attributed(r)) ++out.same_endpoint;
      else miss("violations " + r.summary());
      return;
    }
    if (had_alternative) out.valid_alternatives.push_back(kind + tuple_name(objs));
    Id wrong = M;
    for (Id f = 0; f < M; ++f)
      if (c.source(f) != s || c.target(f) != t) {
        wrong = f;
        break;
      }
    (q.*table)[index] = wrong;
    auto r = validate_picard(q);
    const std::string cond = kind + (wrong == M ? "_missing" : "_endpoints");
    if (r.ok()) miss("not detected");
    else if (r.violations().size() == 1 && r.violations()[0].condition == cond &&
             r.violations()[0].witness == tuple_name(objs) && r.violations()[0].count == 1)
      ++out.wrong_endpoint;
    else
      miss("violations " + r.summary());
  };
  for (Id x = 0; x < n; ++x)
    for (Id y = 0; y < n; ++y)
      for (Id z = 0; z < n; ++z)
        run("associator", &PicardCategory::assoc, static_cast<std::size_t>((x * n + y) * n + z), {x, y, z});
  for (Id x = 0; x < n; ++x) {
    run("left_unitor", &PicardCategory::left_unit, static_cast<std::size_t>(x), {x});
    run("right_unitor", &PicardCategory::right_unit, static_cast<std::size_t>(x), {x});
  }
  for (Id x = 0; x < n; ++x)
    for (Id y = 0; y < n; ++y) run("symmetry", &PicardCategory::sym, static_cast<std::size_t>(x * n + y), {x, y});
  return out;
}

namespace {

using Checks = std::vector<CheckResult>;

struct Context {
  const SuiteConfig& config;
  EnumerationOptions opts(const std::string& name) const {
    EnumerationOptions o;
    o.bound = config.bound;
    o.seed = derive_seed(config.seed, name);
    o.samples = 64;
    return o;
  }
};

CheckResult make_check(const std::string& name, bool ok, const std::string& witness, Json result = Json()) {
  return {name, ok, ok ? "" : witness, std::move(result)};
}

// Exhaustive when under the bound, otherwise sampled with a recorded seed.
KTheory k_theory_within_bound(const PicPtr& p, int N, const EnumerationOptions& base, Json& mode) {
  try {
    auto k = k_theory(p, N, base);
    mode = "exhaustive";
    return k;
  } catch (const BoundExceeded& e) {
    EnumerationOptions o = base;
    o.sampled = true;
    mode = {{"sampled", true}, {"seed", o.seed}, {"samples", o.samples}, {"estimate", e.estimate}};
    return k_theory(p, N, o);
  }
}

Checks picard_checks(const PicPtr& p) {
  const std::string at = "picard/" + p->label + "/";
  auto r = validate_picard(*p);
  auto cs = corruption_sweep(*p);
  Json detail = {{"components", cs.components}, {"same_endpoint", cs.same_endpoint},
                 {"wrong_endpoint", cs.wrong_endpoint}, {"valid_alternatives", cs.valid_alternatives}};
  return {check_from_report(at + "valid", r),
          make_check(at + "corruption", r.ok() && cs.missed == 0,
                     cs.first_miss.empty() ? "base instance invalid" : cs.first_miss, detail)};
}

// pi0 of K(P)<1>, through x_{1}, against the group of iso classes of P.
Verdict pi0_identification(const KTheory& k, const PicardCategory& p) {
  auto t = pi0_monoid(*k.gamma);
  auto inv = pi_invariants(p);
  const auto& lvl = *k.levels[1];
  auto cls = iso_classes(*p.cat);
  std::vector<int> to_p;
  for (const auto& name : t.elements) {
    Id o = lvl.cat->find_object(name);
    if (o == kNone) return Verdict::fail("unknown element " + name);
    to_p.push_back(cls.class_of[lvl.objects[o].x[1]]);
  }
  const int m = static_cast<int>(to_p.size());
  if (m != static_cast<int>(inv.pi0.size())) return Verdict::fail("class counts differ");
  std::set<int> image(to_p.begin(), to_p.end());
  if (static_cast<int>(image.size()) != m) return Verdict::fail("identification not injective");
  if (to_p[t.unit] != inv.pi0_unit) return Verdict::fail("units differ");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (to_p[t.table[i][j]] != inv.pi0_table[to_p[i]][to_p[j]])
        return Verdict::fail("product of " + t.elements[i] + " and " + t.elements[j]);
  return Verdict::pass();
}

Json table_json(const std::vector<std::vector<int>>& t) { return t; }

Checks very_special_checks(const Context& ctx, const PicPtr& p) {
  const std::string at = "very-special/" + p->label + "/";
  Json mode;
  auto k = k_theory_within_bound(p, 3, ctx.opts(at), mode);
  auto vs = is_very_special(*k.gamma);
  Checks out{check_from_verdict(at + "is_very_special", vs)};
  out.back().result = {{"enumeration", mode}};
  auto id = pi0_identification(k, *p);
  out.push_back(check_from_verdict(at + "pi0_table", id));
  if (id) out.back().result = {{"table", table_json(pi_invariants(*p).pi0_table)}};
  return out;
}

Checks tamsamani_checks(const Context& ctx, const PicPtr& p) {
  const std::string at = "tamsamani/" + p->label + "/";
  auto nv = nerve(p, 3, ctx.opts(at + "nerve"));
  Json mode;
  auto k = k_theory_within_bound(p, 3, ctx.opts(at + "k"), mode);
  auto ks = underlying_simplicial(*k.gamma);
  auto one_object = [](const SimplicialCategory& x) {
    return x.levels[0]->num_objects() == 1 ? Verdict::pass()
                                           : Verdict::fail(std::to_string(x.levels[0]->num_objects()) + " objects");
  };
  return {check_from_report(at + "nerve_groupoid", validate_tamsamani(*nv.simplicial, TamMode::groupoid)),
          check_from_verdict(at + "nerve_one_object", one_object(*nv.simplicial)),
          check_from_report(at + "k_theory_groupoid", validate_tamsamani(ks, TamMode::groupoid)),
          check_from_verdict(at + "k_theory_one_object", one_object(ks))};
}

Checks comparison_checks(const Context& ctx, const PicPtr& p) {
  const std::string at = "comparison/" + p->label + "/";
  Json mode;
  auto k = k_theory_within_bound(p, 3, ctx.opts(at + "k"), mode);
  auto nv = nerve(p, 3, ctx.opts(at + "nerve"));
  Checks out;
  std::vector<FinFunctor> Us;
  for (int n = 0; n <= 3; ++n) {
    const auto& kl = *k.levels[n];
    const auto& nl = *nv.levels[n];
    const std::string ln = at + "n" + std::to_string(n) + "/";
    auto U = forget_U(kl, nl);
    auto F = extend_F(nl, kl);
    out.push_back(make_check(ln + "UF_identity", same_functor(compose_functors(U, F), identity_functor(nl.cat)),
                             "U F differs from the identity"));
    auto e = eta(kl, U, F);
    if (n <= 2) {
      auto v = verify_nat_iso(e.source, e.target, e.components);
      out.push_back(check_from_verdict(ln + "eta_natural_iso", v));
      bool identity = same_functor(e.target, e.source);
      for (Id x = 0; identity && x < static_cast<Id>(kl.cat->num_objects()); ++x)
        identity = e.components[x] == kl.cat->identity(x);
      out.push_back(make_check(ln + "eta_identity", identity, "eta is not the identity"));
    } else {
      auto s = verify_eta_sampled(kl, e, derive_seed(ctx.config.seed, ln + "eta"), ctx.config.eta_samples);
      out.push_back(check_from_verdict(ln + "eta_sampled", s.verdict));
      out.back().result = {{"draws", s.draws}, {"seed", s.seed}};
    }
    Us.push_back(std::move(U));
  }
  out.push_back(check_from_verdict(at + "U_naturality", u_naturality(k, nv, Us)));
  return out;
}

Checks picardization_checks(const Context& ctx, const PicPtr& p) {
  const std::string at = "picardization/" + p->label + "/";
  Json mode;
  auto k = k_theory_within_bound(p, 3, ctx.opts(at + "k"), mode);
  auto m = picardize(k.gamma);
  Checks out{check_from_report(at + "valid", validate_picard(*m.pic))};
  auto mf = picardization_to_original(m, k);
  auto rf = validate_monoidal_functor(mf);
  out.push_back(check_from_report(at + "functor_to_original", rf));
  out.push_back(make_check(at + "functor_isomorphism", rf.ok() && is_isomorphism_of_categories(mf.functor),
                           "underlying functor is not an isomorphism"));
  Json mode2;
  auto kmm = k_theory_within_bound(m.pic, 3, ctx.opts(at + "kmm"), mode2);
  auto z = zeta(m, kmm);
  out.push_back(check_from_report(at + "zeta_morphism", validate_gamma_morphism(z)));
  out.push_back(check_from_verdict(at + "zeta_levelwise_equivalence", is_levelwise_equivalence(z)));

  int tested = 0;
  std::string failure;
  std::vector<std::string> names;
  for (const auto& g : generated_monoidal_functors(p)) {
    Json m3;
    auto kq = g.functor.cod == p ? k : k_theory_within_bound(g.functor.cod, 3, ctx.opts(at + g.name), m3);
    auto F = k_of_monoidal(g.functor, k, kq);
    auto mq = g.functor.cod == p ? m : picardize(kq.gamma);
    Json m4;
    auto kmq = g.functor.cod == p ? kmm : k_theory_within_bound(mq.pic, 3, ctx.opts(at + g.name + "/kmm"), m4);
    auto zq = g.functor.cod == p ? z : zeta(mq, kmq);
    auto MF = picardize_morphism(F, m, mq);
    auto v = zeta_naturality(F, MF, z, zq, kmm, kmq);
    ++tested;
    names.push_back(g.name);
    if (!v && failure.empty()) failure = g.name + ": " + v.witness;
  }
  out.push_back(make_check(at + "zeta_naturality", failure.empty() && tested >= 3,
                           failure.empty() ? "fewer than 3 generated morphisms" : failure,
                           Json{{"morphisms", names}}));
  return out;
}

Checks input_checks(const Document& d, std::size_t i) {
  auto p = picard_from_payload(d.payload);
  return {check_from_report("inputs/" + std::to_string(i) + "/" + p->label + "/valid", validate_picard(*p))};
}

// --- structural checks ---

std::string structural_difference(const MultiSimplicialSet& a, const MultiSimplicialSet& b) {
  if (a.dim() != b.dim() || a.truncation() != b.truncation()) return "shape";
  for (std::size_t l = 0; l < a.num_levels(); ++l) {
    if (a.elements(l) != b.elements(l)) return "elements at level " + std::to_string(l);
    auto k = a.multi_index(l);
    for (int c = 0; c < a.dim(); ++c)
      for (int i = 0; i <= k[c]; ++i) {
        if (k[c] >= 1 && a.face(c, l, i) != b.face(c, l, i)) return "face at level " + std::to_string(l);
        if (k[c] + 1 <= a.truncation() && a.degeneracy(c, l, i) != b.degeneracy(c, l, i))
          return "degeneracy at level " + std::to_string(l);
      }
  }
  return "";
}

CheckResult phi_checks() {
  auto maps = all_delta_maps_upto(4);
  std::map<int, std::vector<const DeltaMap*>> by_source;
  for (const auto& a : maps) by_source[a.m].push_back(&a);
  long pairs = 0;
  for (const auto& a : maps) {
    if (a.m == a.n && a == delta_identity(a.n) && !(phi(a) == gamma_identity(a.n)))
      return make_check("structural/phi_functorial", false, "identity " + a.name());
    for (const DeltaMap* b : by_source[a.n]) {
      ++pairs;
      if (!(phi(compose_delta(*b, a)) == compose_gamma(phi(a), phi(*b))))
        return make_check("structural/phi_functorial", false, b->name() + " after " + a.name());
    }
  }
  return make_check("structural/phi_functorial", true, "", Json{{"pairs", pairs}});
}

CheckResult phi_values() {
  for (int k = 1; k <= 4; ++k)
    for (int j = 1; j <= k; ++j)
      if (!(phi(delta_nu(k, j)) == gamma_nu_j(k, j)))
        return make_check("structural/phi_values", false, "nu^" + std::to_string(j) + " in [" + std::to_string(k) + "]");
  if (!(phi(coface(2, 1)) == gamma_mult())) return make_check("structural/phi_values", false, "d^1");
  return make_check("structural/phi_values", true, "");
}

CheckResult product_classes(const SuiteConfig& cfg) {
  std::mt19937_64 rng(derive_seed(cfg.seed, "structural/p_product"));
  for (int i = 0; i < cfg.category_pairs; ++i) {
    auto c = random_category(rng, 4), d = random_category(rng, 4);
    auto cd = product(*c, *d);
    auto pc = p_star(nerve_of(*c, 2)), pd = p_star(nerve_of(*d, 2)), pcd = p_star(nerve_of(*cd, 2));
    const auto& qc = pc.quotient[0];
    const auto& qd = pd.quotient[0];
    const auto& qcd = pcd.quotient[0];
    const std::size_t nd = d->num_objects();
    const std::size_t kc = pc.set.size(0), kd = pd.set.size(0), kcd = pcd.set.size(0);
    std::vector<int> pair_of(kcd, -1);
    std::vector<bool> hit(kc * kd, false);
    for (std::size_t o = 0; o < cd->num_objects(); ++o) {
      int pair = qc[o / nd] * static_cast<int>(kd) + qd[o % nd];
      int& slot = pair_of[qcd[o]];
      if (slot >= 0 && slot != pair)
        return make_check("structural/p_product", false, "pair " + std::to_string(i) + ": map not well defined");
      slot = pair;
      hit[pair] = true;
    }
    if (kcd != kc * kd || std::count(hit.begin(), hit.end(), true) != static_cast<long>(kc * kd))
      return make_check("structural/p_product", false, "pair " + std::to_string(i) + ": not a bijection");
    if (iso_classes(*cd).count != kcd) return make_check("structural/p_product", false, "class count disagrees");
  }
  return make_check("structural/p_product", true, "", Json{{"pairs", cfg.category_pairs}});
}

CheckResult truncation_slices(const SuiteConfig& cfg) {
  auto xs = generated_multisimplicial(derive_seed(cfg.seed, "structural/p_trunc"), cfg.truncation_instances);
  int compared = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto& x = *xs[i];
    for (int r = 1; r <= x.dim() - 1; ++r) {
      auto whole = p_trunc(x, r);
      for (int s = 0; s <= x.truncation(); ++s) {
        auto diff = structural_difference(slice(whole, s), p_trunc(slice(x, s), r - 1));
        ++compared;
        if (!diff.empty())
          return make_check("structural/p_trunc_slices", false,
                            "instance " + std::to_string(i) + " r=" + std::to_string(r) + " s=" + std::to_string(s) +
                                ": " + diff);
      }
    }
  }
  return make_check("structural/p_trunc_slices", true, "",
                    Json{{"instances", xs.size()}, {"comparisons", compared}});
}

bool bijective(const std::vector<int>& f, std::size_t cod) {
  if (f.size() != cod) return false;
  std::vector<bool> hit(cod, false);
  for (int v : f) {
    if (v < 0 || static_cast<std::size_t>(v) >= cod || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

std::vector<NamedSimplicialFunctor> two_equivalence_instances(const SuiteConfig& cfg) {
  auto maps = two_category_maps(derive_seed(cfg.seed, "structural/two_category"), cfg.two_category_instances);
  // U : K(P) -> nerve(P) on the two smallest corpus members
  for (const char* name : {"trivial", "split(Z/2,0,0)"}) {
    auto p = corpus_instance(name);
    EnumerationOptions o;
    o.bound = cfg.bound;
    auto k = k_theory(p, 3, o);
    auto nv = nerve(p, 3, o);
    SimplicialFunctor U{std::make_shared<SimplicialCategory>(underlying_simplicial(*k.gamma)), nv.simplicial, {}};
    for (int n = 0; n <= 3; ++n) U.level.push_back(forget_U(*k.levels[n], *nv.levels[n]));
    maps.push_back({std::string("U/") + name, std::move(U)});
  }
  return maps;
}

Checks two_category_checks(const SuiteConfig& cfg) {
  Checks out;
  auto maps = two_equivalence_instances(cfg);
  int forward = 0, backward = 0, equivalences = 0;
  std::string iff_fail, pi0_fail, shape_fail;
  for (const auto& [name, F] : maps) {
    auto rd = validate_tamsamani(*F.dom, TamMode::category);
    auto rc = validate_tamsamani(*F.cod, TamMode::category);
    auto rf = validate_simplicial_functor(F);
    if ((!rd.ok() || !rc.ok() || !rf.ok()) && shape_fail.empty())
      shape_fail = name + ": " + (!rd.ok() ? rd.summary() : !rc.ok() ? rc.summary() : rf.summary());
    const bool lw = is_levelwise_equivalence(F).ok;
    const bool two = is_2_equivalence(F).ok;
    const bool b0 = level0_bijective(F);
    if (lw != (two && b0) && iff_fail.empty())
      iff_fail = name + ": levelwise=" + (lw ? "true" : "false") + " 2-equivalence=" + (two ? "true" : "false") +
                   " level0-bijective=" + (b0 ? "true" : "false");
    if (lw) ++forward;
    if (two && b0) ++backward;
    if (two) {
      ++equivalences;
      if (!bijective(pi0_map(F), pi0_size(*F.cod)) && pi0_fail.empty()) pi0_fail = name;
      auto dn = std::make_shared<MultiSimplicialSet>(levelwise_nerve(*F.dom));
      auto cn = std::make_shared<MultiSimplicialSet>(levelwise_nerve(*F.cod));
      auto nf = levelwise_nerve_map(F, dn, cn);
      if (is_n_equivalence(nf) && !bijective(pi0_map(nf), pi0(*cn).size()) && pi0_fail.empty())
        pi0_fail = name + " (levelwise nerve)";
    }
  }
  out.push_back(make_check("structural/two_category_instances", shape_fail.empty(), shape_fail,
                           Json{{"maps", maps.size()}}));
  out.push_back(make_check("structural/levelwise_iff_2equivalence_and_level0", iff_fail.empty(), iff_fail,
                           Json{{"levelwise", forward}, {"2equivalence_and_level0", backward}}));

  // one-dimensional equivalences: nerves of functors
  std::mt19937_64 rng(derive_seed(cfg.seed, "structural/equivalences"));
  for (int i = 0; i < cfg.category_pairs; ++i) {
    auto c = random_category(rng, 4);
    auto cls = iso_classes(*c);
    std::vector<Id> origin;
    auto sk = full_subcategory(*c, cls.representative, &origin);
    auto ns = std::make_shared<MultiSimplicialSet>(nerve_of(*sk, 2));
    auto nc = std::make_shared<MultiSimplicialSet>(nerve_of(*c, 2));
    auto f = nerve_map(FinFunctor{sk, c, cls.representative, origin}, ns, nc);
    if (is_n_equivalence(f)) {
      ++equivalences;
      if (!bijective(pi0_map(f), pi0(*nc).size()) && pi0_fail.empty()) pi0_fail = "skeleton " + std::to_string(i);
    }
  }
  out.push_back(make_check("structural/equivalence_pi0_bijection", pi0_fail.empty() && equivalences > 0,
                           pi0_fail.empty() ? "no equivalences generated" : pi0_fail,
                           Json{{"equivalences", equivalences}}));
  return out;
}

CheckResult diag_components_check(const SuiteConfig& cfg) {
  std::vector<std::pair<std::string, SCatPtr>> xs;
  std::mt19937_64 rng(derive_seed(cfg.seed, "structural/diag"));
  for (int i = 0; i < 4; ++i) {
    auto g = random_groupoid(rng);
    xs.emplace_back("discrete-nerve#" + std::to_string(i), discrete_nerve(*g, 3));
    xs.emplace_back("fattened#" + std::to_string(i), fattened_nerve(*g, 2));
  }
  for (const char* name : {"trivial", "split(Z/2,0,0)", "split(0,Z/2,0)"}) {
    auto p = corpus_instance(name);
    xs.emplace_back(std::string("nerve/") + name, nerve(p, 2).simplicial);
    xs.emplace_back(std::string("k-theory/") + name,
                    std::make_shared<SimplicialCategory>(underlying_simplicial(*k_theory(p, 2).gamma)));
  }
  for (const auto& [name, x] : xs) {
    auto r = validate_tamsamani(*x, TamMode::groupoid);
    if (!r.ok()) return make_check("structural/diag_components", false, name + " is not a 2-groupoid: " + r.summary());
    auto ln = levelwise_nerve(*x);
    auto d = diag_components(ln);
    auto p0 = pi0(ln).size();
    if (d != p0)
      return make_check("structural/diag_components", false,
                        name + ": " + std::to_string(d) + " components, " + std::to_string(p0) + " classes");
  }
  return make_check("structural/diag_components", true, "", Json{{"instances", xs.size()}});
}

Checks structural_checks(const SuiteConfig& cfg) {
  Checks out{phi_checks(), phi_values(), product_classes(cfg), truncation_slices(cfg), diag_components_check(cfg)};
  for (auto& c : two_category_checks(cfg)) out.push_back(std::move(c));
  return out;
}

Checks guarded(const std::string& name, const std::function<Checks()>& fn) {
  try {
    return fn();
  } catch (const BoundExceeded& e) {
    return {make_check(name, false, std::string("bound exceeded: ") + e.what())};
  } catch (const std::exception& e) {
    return {make_check(name, false, std::string("error: ") + e.what())};
  }
}

}  // namespace

SuiteResult run_suite(const SuiteConfig& config) {
  Context ctx{config};
  std::vector<std::pair<std::string, std::function<Checks()>>> tasks;
  auto want = [&](const std::string& g) {
    return std::find(config.checks.begin(), config.checks.end(), g) != config.checks.end();
  };
  std::vector<PicPtr> instances;
  for (const auto& name : config.corpus) instances.push_back(corpus_instance(name));
  for (const auto& p : instances) {
    if (want("picard")) tasks.emplace_back("picard/" + p->label, [p] { return picard_checks(p); });
    if (want("very-special"))
      tasks.emplace_back("very-special/" + p->label, [&ctx, p] { return very_special_checks(ctx, p); });
    if (want("tamsamani"))
      tasks.emplace_back("tamsamani/" + p->label, [&ctx, p] { return tamsamani_checks(ctx, p); });
    if (want("comparison"))
      tasks.emplace_back("comparison/" + p->label, [&ctx, p] { return comparison_checks(ctx, p); });
    if (want("picardization"))
      tasks.emplace_back("picardization/" + p->label, [&ctx, p] { return picardization_checks(ctx, p); });
  }
  if (want("structural")) tasks.emplace_back("structural", [&config] { return structural_checks(config); });
  for (std::size_t i = 0; i < config.picard_inputs.size(); ++i)
    tasks.emplace_back("inputs/" + std::to_string(i),
                       [&config, i] { return input_checks(config.picard_inputs[i], i); });

  std::vector<std::future<Checks>> running;
  for (const auto& [name, fn] : tasks)
    running.push_back(std::async(std::launch::async, guarded, name, fn));
  Checks all;
  for (auto& f : running)
    for (auto& c : f.get()) all.push_back(std::move(c));

  Provenance prov{"pictam suite", config.seed,
                  Json{{"enumeration", config.bound},
                       {"eta_samples", config.eta_samples},
                       {"category_pairs", config.category_pairs},
                       {"truncation_instances", config.truncation_instances},
                       {"two_category_instances", config.two_category_instances}}};
  auto payload = verdict_payload(std::move(all));
  const bool ok = payload["ok"].get<bool>();
  return {make_document("verdict", std::move(payload), std::move(prov)), ok ? 0 : 1};
}

}  // namespace pictam
