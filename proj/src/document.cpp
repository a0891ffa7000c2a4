#include "pictam/document.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <set>

namespace pictam {

namespace {

const std::set<std::string> kKinds{"category", "picard", "gamma-groupoid", "multisimplicial", "verdict"};

[[noreturn]] void schema(const std::string& at, const std::string& what) {
  throw InputError((at.empty() ? "/" : at) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& at) {
  if (!j.is_object()) schema(at, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(at, std::string("missing field '") + key + "'");
  return *it;
}

std::string sub(const std::string& at, const std::string& key) { return at + "/" + key; }
std::string sub(const std::string& at, std::size_t i) { return at + "/" + std::to_string(i); }

const Json& array(const Json& j, const std::string& at) {
  if (!j.is_array()) schema(at, "expected an array");
  return j;
}

const Json& array_of(const Json& j, std::size_t n, const std::string& at) {
  array(j, at);
  if (j.size() != n) schema(at, "expected " + std::to_string(n) + " entries, found " + std::to_string(j.size()));
  return j;
}

long long integer(const Json& j, const std::string& at) {
  if (!j.is_number_integer()) schema(at, "expected an integer");
  return j.get<long long>();
}

Id index_in(const Json& j, std::size_t bound, const std::string& at) {
  const long long v = integer(j, at);
  if (v < 0 || static_cast<std::size_t>(v) >= bound)
    schema(at, "dangling reference " + std::to_string(v) + " (have " + std::to_string(bound) + ")");
  return static_cast<Id>(v);
}

std::string text(const Json& j, const std::string& at) {
  if (!j.is_string()) schema(at, "expected a string");
  return j.get<std::string>();
}

std::vector<Id> id_list(const Json& j, std::size_t n, std::size_t bound, const std::string& at) {
  array_of(j, n, at);
  std::vector<Id> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(index_in(j[i], bound, sub(at, i)));
  return out;
}

}  // namespace

Json document_to_json(const Document& d) {
  Json j;
  j["kind"] = d.kind;
  j["version"] = d.version;
  j["payload"] = d.payload;
  j["provenance"] = {{"generator", d.provenance.generator}, {"seed", d.provenance.seed}, {"bounds", d.provenance.bounds}};
  return j;
}

Document document_from_json(const Json& j) {
  Document d;
  d.kind = text(field(j, "kind", ""), "/kind");
  if (!kKinds.count(d.kind)) schema("/kind", "unknown document kind '" + d.kind + "'");
  d.version = static_cast<int>(integer(field(j, "version", ""), "/version"));
  if (d.version != kDocumentVersion) schema("/version", "unsupported version " + std::to_string(d.version));
  d.payload = field(j, "payload", "");
  if (!d.payload.is_object()) schema("/payload", "expected an object");
  const Json& prov = field(j, "provenance", "");
  d.provenance.generator = text(field(prov, "generator", "/provenance"), "/provenance/generator");
  const Json& seed = field(prov, "seed", "/provenance");
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0))
    schema("/provenance/seed", "expected a non-negative integer");
  d.provenance.seed = seed.get<std::uint64_t>();
  d.provenance.bounds = field(prov, "bounds", "/provenance");
  if (!d.provenance.bounds.is_object()) schema("/provenance/bounds", "expected an object");
  return d;
}

Document parse_document(const std::string& text_in) {
  Json j;
  try {
    j = Json::parse(text_in);
  } catch (const Json::parse_error& e) {
    throw InputError("parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return document_from_json(j);
}

std::string serialize_document(const Document& d) { return document_to_json(d).dump() + "\n"; }

Document make_document(std::string kind, Json payload, Provenance provenance) {
  Document d;
  d.kind = std::move(kind);
  d.payload = std::move(payload);
  d.provenance = std::move(provenance);
  return d;
}

Json category_payload(const FinCategory& c) {
  Json objects = Json::array(), morphisms = Json::array(), identities = Json::array();
  for (Id x = 0; x < static_cast<Id>(c.num_objects()); ++x) {
    objects.push_back(c.object_name(x));
    identities.push_back(c.identity(x));
  }
  std::vector<std::array<Id, 3>> comp;
  for (Id f = 0; f < static_cast<Id>(c.num_morphisms()); ++f) {
    morphisms.push_back(Json::array({c.morphism_name(f), c.source(f), c.target(f)}));
    for (Id g : c.out(c.target(f))) {
      Id h = c.compose(g, f);
      if (h != kNone) comp.push_back({g, f, h});
    }
  }
  std::sort(comp.begin(), comp.end());
  Json compose = Json::array();
  for (const auto& t : comp) compose.push_back(Json::array({t[0], t[1], t[2]}));
  return {{"objects", objects}, {"morphisms", morphisms}, {"identities", identities}, {"compose", compose}};
}

CatPtr category_from_payload(const Json& j, const std::string& at) {
  const Json& objs = array(field(j, "objects", at), sub(at, "objects"));
  const Json& mors = array(field(j, "morphisms", at), sub(at, "morphisms"));
  const std::size_t n = objs.size(), m = mors.size();
  FinCategory::Builder b;
  for (std::size_t i = 0; i < n; ++i) b.add_object(text(objs[i], sub(sub(at, "objects"), i)));
  std::vector<Id> src(m), tgt(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::string p = sub(sub(at, "morphisms"), i);
    const Json& e = array_of(mors[i], 3, p);
    src[i] = index_in(e[1], n, sub(p, 1));
    tgt[i] = index_in(e[2], n, sub(p, 2));
    b.add_morphism(text(e[0], sub(p, 0)), src[i], tgt[i]);
  }
  auto ids = id_list(field(j, "identities", at), n, m, sub(at, "identities"));
  for (std::size_t x = 0; x < n; ++x) b.set_identity(static_cast<Id>(x), ids[x]);
  const Json& comp = array(field(j, "compose", at), sub(at, "compose"));
  for (std::size_t i = 0; i < comp.size(); ++i) {
    const std::string p = sub(sub(at, "compose"), i);
    const Json& e = array_of(comp[i], 3, p);
    Id g = index_in(e[0], m, sub(p, 0)), f = index_in(e[1], m, sub(p, 1)), h = index_in(e[2], m, sub(p, 2));
    if (tgt[f] != src[g]) schema(p, "entry composes non-composable morphisms");
    b.set_compose(g, f, h);
  }
  return b.build();
}

Json picard_payload(const PicardCategory& p) {
  const Id n = static_cast<Id>(p.num_objects()), M = static_cast<Id>(p.num_morphisms());
  Json to = Json::array(), tm = Json::array(), as = Json::array(), lu = Json::array(), ru = Json::array(),
       sy = Json::array();
  for (Id x = 0; x < n; ++x) {
    lu.push_back(Json::array({x, p.lambda(x)}));
    ru.push_back(Json::array({x, p.rho(x)}));
    for (Id y = 0; y < n; ++y) {
      to.push_back(Json::array({x, y, p.tensor(x, y)}));
      sy.push_back(Json::array({x, y, p.gamma(x, y)}));
      for (Id z = 0; z < n; ++z) as.push_back(Json::array({x, y, z, p.alpha(x, y, z)}));
    }
  }
  for (Id f = 0; f < M; ++f)
    for (Id g = 0; g < M; ++g) tm.push_back(Json::array({f, g, p.tensor_mor[f * M + g]}));
  return {{"category", category_payload(*p.cat)},
          {"unit", p.unit},
          {"label", p.label},
          {"tensor_objects", to},
          {"tensor_morphisms", tm},
          {"associator", as},
          {"left_unitor", lu},
          {"right_unitor", ru},
          {"symmetry", sy}};
}

namespace {

// Fills table[key] from entries [k1, .., kr, value]; every key must appear once.
void fill_table(const Json& j, const char* key, const std::string& at, int arity, std::size_t key_bound,
                std::size_t value_bound, std::vector<Id>& table, const FinCategory& c, bool keys_are_objects,
                const char* component) {
  const std::string p = sub(at, key);
  const Json& arr = array(field(j, key, at), p);
  std::size_t total = 1;
  for (int i = 0; i < arity; ++i) total *= key_bound;
  table.assign(total, kNone);
  for (std::size_t e = 0; e < arr.size(); ++e) {
    const std::string pe = sub(p, e);
    const Json& row = array_of(arr[e], static_cast<std::size_t>(arity) + 1, pe);
    std::size_t k = 0;
    for (int i = 0; i < arity; ++i) k = k * key_bound + static_cast<std::size_t>(index_in(row[i], key_bound, sub(pe, i)));
    if (table[k] != kNone) schema(pe, std::string("duplicate ") + component + " entry");
    table[k] = index_in(row[arity], value_bound, sub(pe, static_cast<std::size_t>(arity)));
  }
  for (std::size_t k = 0; k < total; ++k) {
    if (table[k] != kNone) continue;
    std::vector<std::string> names;
    std::size_t rest = k;
    std::vector<Id> digits(arity);
    for (int i = arity - 1; i >= 0; --i) {
      digits[i] = static_cast<Id>(rest % key_bound);
      rest /= key_bound;
    }
    for (Id d : digits) names.push_back(keys_are_objects ? c.object_name(d) : c.morphism_name(d));
    schema(p, std::string(component) + " component missing for (" + join(names, ",") + ")");
  }
}

}  // namespace

PicPtr picard_from_payload(const Json& j, const std::string& at) {
  auto p = std::make_shared<PicardCategory>();
  p->cat = category_from_payload(field(j, "category", at), sub(at, "category"));
  const std::size_t n = p->cat->num_objects(), M = p->cat->num_morphisms();
  p->unit = index_in(field(j, "unit", at), n, sub(at, "unit"));
  p->label = text(field(j, "label", at), sub(at, "label"));
  const auto& c = *p->cat;
  fill_table(j, "tensor_objects", at, 2, n, n, p->tensor_obj, c, true, "tensor");
  fill_table(j, "tensor_morphisms", at, 2, M, M, p->tensor_mor, c, false, "tensor");
  fill_table(j, "associator", at, 3, n, M, p->assoc, c, true, "associator");
  fill_table(j, "left_unitor", at, 1, n, M, p->left_unit, c, true, "left unitor");
  fill_table(j, "right_unitor", at, 1, n, M, p->right_unit, c, true, "right unitor");
  fill_table(j, "symmetry", at, 2, n, M, p->sym, c, true, "symmetry");
  return p;
}

Json gamma_payload(const GammaGroupoid& a) {
  Json levels = Json::array(), action = Json::array();
  for (const auto& l : a.levels) levels.push_back(category_payload(*l));
  for (const auto& [s, f] : a.action)
    action.push_back({{"map", s.values}, {"source", s.n}, {"target", s.m}, {"objects", f.obj}, {"morphisms", f.mor}});
  return {{"truncation", a.N}, {"label", a.label}, {"levels", levels}, {"action", action}};
}

GammaPtr gamma_from_payload(const Json& j, const std::string& at) {
  auto a = std::make_shared<GammaGroupoid>();
  const long long N = integer(field(j, "truncation", at), sub(at, "truncation"));
  if (N < 0 || N > 6) schema(sub(at, "truncation"), "truncation out of range");
  a->N = static_cast<int>(N);
  a->label = text(field(j, "label", at), sub(at, "label"));
  const Json& levels = array_of(field(j, "levels", at), static_cast<std::size_t>(N) + 1, sub(at, "levels"));
  for (std::size_t i = 0; i < levels.size(); ++i)
    a->levels.push_back(category_from_payload(levels[i], sub(sub(at, "levels"), i)));
  const Json& action = array(field(j, "action", at), sub(at, "action"));
  for (std::size_t i = 0; i < action.size(); ++i) {
    const std::string p = sub(sub(at, "action"), i);
    GammaMap s;
    const Json& vals = array(field(action[i], "map", p), sub(p, "map"));
    s.n = static_cast<int>(integer(field(action[i], "source", p), sub(p, "source")));
    s.m = static_cast<int>(integer(field(action[i], "target", p), sub(p, "target")));
    if (s.n < 0 || s.n > a->N || s.m < 0 || s.m > a->N) schema(p, "rank outside the stored levels");
    for (std::size_t v = 0; v < vals.size(); ++v) s.values.push_back(static_cast<int>(integer(vals[v], sub(sub(p, "map"), v))));
    if (static_cast<int>(s.values.size()) != s.n + 1 || !s.valid()) schema(sub(p, "map"), "not a pointed map");
    if (a->action.count(s)) schema(p, "duplicate action for " + s.name());
    const auto& dom = a->levels[s.n];
    const auto& cod = a->levels[s.m];
    FinFunctor f{dom, cod, id_list(field(action[i], "objects", p), dom->num_objects(), cod->num_objects(), sub(p, "objects")),
                 id_list(field(action[i], "morphisms", p), dom->num_morphisms(), cod->num_morphisms(),
                         sub(p, "morphisms"))};
    a->action.emplace(std::move(s), std::move(f));
  }
  return a;
}

Json multisimplicial_payload(const MultiSimplicialSet& x) {
  Json levels = Json::array(), faces = Json::array(), degens = Json::array();
  for (std::size_t l = 0; l < x.num_levels(); ++l)
    levels.push_back({{"index", x.multi_index(l)}, {"elements", x.elements(l)}});
  for (int c = 0; c < x.dim(); ++c) {
    Json fc = Json::array(), dc = Json::array();
    for (std::size_t l = 0; l < x.num_levels(); ++l) {
      const int k = x.multi_index(l)[c];
      Json fl = Json::array(), dl = Json::array();
      if (k >= 1)
        for (int i = 0; i <= k; ++i) fl.push_back(x.face(c, l, i));
      if (k + 1 <= x.truncation())
        for (int i = 0; i <= k; ++i) dl.push_back(x.degeneracy(c, l, i));
      fc.push_back(fl);
      dc.push_back(dl);
    }
    faces.push_back(fc);
    degens.push_back(dc);
  }
  return {{"dimension", x.dim()}, {"truncation", x.truncation()}, {"levels", levels}, {"faces", faces},
          {"degeneracies", degens}};
}

MSSPtr multisimplicial_from_payload(const Json& j, const std::string& at) {
  const long long dim = integer(field(j, "dimension", at), sub(at, "dimension"));
  const long long N = integer(field(j, "truncation", at), sub(at, "truncation"));
  if (dim < 0 || dim > 4) schema(sub(at, "dimension"), "dimension out of range");
  if (N < 0 || N > 6) schema(sub(at, "truncation"), "truncation out of range");
  auto x = std::make_shared<MultiSimplicialSet>(static_cast<int>(dim), static_cast<int>(N));
  const Json& levels = array_of(field(j, "levels", at), x->num_levels(), sub(at, "levels"));
  for (std::size_t l = 0; l < levels.size(); ++l) {
    const std::string p = sub(sub(at, "levels"), l);
    std::vector<int> idx;
    const Json& ij = array_of(field(levels[l], "index", p), static_cast<std::size_t>(dim), sub(p, "index"));
    for (std::size_t c = 0; c < ij.size(); ++c) idx.push_back(static_cast<int>(integer(ij[c], sub(sub(p, "index"), c))));
    if (idx != x->multi_index(l)) schema(sub(p, "index"), "levels out of order");
    const Json& el = array(field(levels[l], "elements", p), sub(p, "elements"));
    for (std::size_t e = 0; e < el.size(); ++e) x->elements(l).push_back(text(el[e], sub(sub(p, "elements"), e)));
  }
  x->allocate_structure();
  for (int which = 0; which < 2; ++which) {
    const char* key = which == 0 ? "faces" : "degeneracies";
    const std::string p = sub(at, key);
    const Json& all = array_of(field(j, key, at), static_cast<std::size_t>(dim), p);
    for (int c = 0; c < dim; ++c) {
      const std::string pc = sub(p, static_cast<std::size_t>(c));
      const Json& per = array_of(all[c], x->num_levels(), pc);
      for (std::size_t l = 0; l < x->num_levels(); ++l) {
        const int k = x->multi_index(l)[c];
        const bool present = which == 0 ? k >= 1 : k + 1 <= N;
        const std::string pl = sub(pc, l);
        const Json& maps = array_of(per[l], present ? static_cast<std::size_t>(k) + 1 : 0, pl);
        if (!present) continue;
        const std::size_t tl = x->shifted(l, c, which == 0 ? -1 : 1);
        for (int i = 0; i <= k; ++i) {
          auto ids = id_list(maps[i], x->size(l), x->size(tl), sub(pl, static_cast<std::size_t>(i)));
          auto& dst = which == 0 ? x->face(c, l, i) : x->degeneracy(c, l, i);
          dst.assign(ids.begin(), ids.end());
        }
      }
    }
  }
  return x;
}

Json verdict_payload(std::vector<CheckResult> checks) {
  std::stable_sort(checks.begin(), checks.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  Json arr = Json::array();
  bool all = true;
  for (const auto& c : checks) {
    Json e = {{"name", c.name}, {"ok", c.ok}, {"witness", c.witness}};
    if (!c.result.is_null()) e["result"] = c.result;
    arr.push_back(std::move(e));
    all = all && c.ok;
  }
  return {{"checks", arr}, {"ok", all}};
}

std::vector<CheckResult> verdict_checks(const Json& payload, const std::string& at) {
  std::vector<CheckResult> out;
  const Json& arr = array(field(payload, "checks", at), sub(at, "checks"));
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = sub(sub(at, "checks"), i);
    CheckResult c;
    c.name = text(field(arr[i], "name", p), sub(p, "name"));
    const Json& ok = field(arr[i], "ok", p);
    if (!ok.is_boolean()) schema(sub(p, "ok"), "expected a boolean");
    c.ok = ok.get<bool>();
    c.witness = text(field(arr[i], "witness", p), sub(p, "witness"));
    if (arr[i].contains("result")) c.result = arr[i]["result"];
    out.push_back(std::move(c));
  }
  return out;
}

CheckResult check_from_report(const std::string& name, const ValidationReport& r) {
  return {name, r.ok(), r.ok() ? "" : r.summary(), Json()};
}

CheckResult check_from_verdict(const std::string& name, const Verdict& v) { return {name, v.ok, v.witness, Json()}; }

}  // namespace pictam
