#include "pictam/gamma.hpp"

#include <algorithm>

namespace pictam {

const FinFunctor& GammaGroupoid::act(const GammaMap& s) const {
  auto it = action.find(s);
  if (it == action.end()) throw InputError("no functor for " + s.name());
  return it->second;
}

ValidationReport validate_gamma(const GammaGroupoid& a) {
  ValidationReport r;
  if (a.N < 0 || static_cast<int>(a.levels.size()) != a.N + 1) {
    r.add("levels", "expected " + std::to_string(a.N + 1) + " levels");
    return r;
  }
  for (int n = 0; n <= a.N; ++n) {
    auto rn = validate_category(*a.levels[n]);
    if (!rn.ok()) r.merge(rn, "level[" + std::to_string(n) + "]");
    else if (!a.levels[n]->is_groupoid()) r.add("groupoid_levels", "level " + std::to_string(n));
  }
  if (!r.ok()) return r;
  if (a.levels[0]->num_objects() != 1 || a.levels[0]->num_morphisms() != 1)
    r.add("terminal_level0", "level <0> is not terminal");
  auto maps = all_gamma_maps_upto(a.N);
  for (const auto& s : maps) {
    auto it = a.action.find(s);
    if (it == a.action.end()) {
      r.add("action_missing", s.name());
      continue;
    }
    if (it->second.dom != a.levels[s.n] || it->second.cod != a.levels[s.m]) {
      r.add("action_endpoints", s.name());
      continue;
    }
    auto rf = validate_functor(it->second);
    if (!rf.ok()) r.merge(rf, "action[" + s.name() + "]");
  }
  if (!r.ok()) return r;
  for (int n = 0; n <= a.N; ++n)
    if (!same_functor(a.act(gamma_identity(n)), identity_functor(a.levels[n])))
      r.add("action_identity", gamma_identity(n).name());
  for (const auto& s : maps)
    for (const auto& t : maps) {
      if (s.m != t.n) continue;
      if (!same_functor(a.act(compose_gamma(t, s)), compose_functors(a.act(t), a.act(s))))
        r.add("action_composition", t.name() + " after " + s.name());
    }
  return r;
}

ValidationReport validate_gamma_morphism(const GammaMorphism& f) {
  ValidationReport r;
  const auto& A = *f.dom;
  const auto& B = *f.cod;
  if (A.N != B.N || static_cast<int>(f.level.size()) != A.N + 1) {
    r.add("morphism_shape", "truncation or level count mismatch");
    return r;
  }
  for (int n = 0; n <= A.N; ++n) {
    if (f.level[n].dom != A.levels[n] || f.level[n].cod != B.levels[n]) {
      r.add("morphism_endpoints", "level " + std::to_string(n));
      continue;
    }
    auto rn = validate_functor(f.level[n]);
    if (!rn.ok()) r.merge(rn, "level[" + std::to_string(n) + "]");
  }
  if (!r.ok()) return r;
  for (const auto& s : all_gamma_maps_upto(A.N))
    if (!same_functor(compose_functors(f.level[s.m], A.act(s)), compose_functors(B.act(s), f.level[s.n])))
      r.add("morphism_naturality", s.name());
  return r;
}

GammaMorphism identity_gamma_morphism(const GammaPtr& a) {
  GammaMorphism f{a, a, {}};
  for (const auto& c : a->levels) f.level.push_back(identity_functor(c));
  return f;
}

SimplicialCategory underlying_simplicial(const GammaGroupoid& a) {
  SimplicialCategory x;
  x.N = a.N;
  x.levels = a.levels;
  for (const auto& alpha : all_delta_maps_upto(a.N)) x.action.emplace(alpha, a.act(phi(alpha)));
  return x;
}

FinFunctor segal_functor(const GammaGroupoid& a, int n) {
  std::vector<const FinCategory*> factors(n, a.levels[1].get());
  auto prod = product_of(factors);
  std::vector<const FinFunctor*> parts;
  for (int j = 1; j <= n; ++j) parts.push_back(&a.act(gamma_nu_j(n, j)));
  return tuple_functor(parts, prod);
}

Verdict is_special(const GammaGroupoid& a) {
  if (a.levels[0]->num_objects() != 1 || a.levels[0]->num_morphisms() != 1)
    return Verdict::fail("level <0> is not terminal");
  for (int n = 2; n <= a.N; ++n) {
    auto v = is_equivalence(segal_functor(a, n));
    if (!v) return Verdict::fail("segal functor at <" + std::to_string(n) + ">: " + v.witness);
  }
  return Verdict::pass();
}

namespace {

MonoidTable monoid_with_section(const GammaGroupoid& a, bool minimal) {
  const auto& A1 = *a.levels[1];
  const auto& A2 = *a.levels[2];
  const int k = static_cast<int>(A1.num_iso_classes());
  const auto& n1 = a.act(gamma_nu_j(2, 1));
  const auto& n2 = a.act(gamma_nu_j(2, 2));
  const auto& m = a.act(gamma_mult());
  // section of pi0 A<2> -> pi0 A<1> x pi0 A<1>
  std::vector<Id> section(static_cast<std::size_t>(k) * k, kNone);
  std::vector<Id> class_of_key(static_cast<std::size_t>(k) * k, kNone);
  for (Id x = 0; x < static_cast<Id>(A2.num_objects()); ++x) {
    Id key = A1.iso_class(n1.obj[x]) * k + A1.iso_class(n2.obj[x]);
    Id cl = A2.iso_class(x);
    if (class_of_key[key] == kNone) class_of_key[key] = cl;
    else if (class_of_key[key] != cl) throw InputError("not special: pi0 segal map is not injective");
    if (section[key] == kNone || !minimal) section[key] = x;
  }
  MonoidTable t;
  std::vector<Id> rep(k, kNone);
  for (Id x = 0; x < static_cast<Id>(A1.num_objects()); ++x)
    if (rep[A1.iso_class(x)] == kNone) rep[A1.iso_class(x)] = x;
  for (Id r : rep) t.elements.push_back(A1.object_name(r));
  t.table.assign(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Id s = section[i * k + j];
      if (s == kNone) throw InputError("not special: pi0 segal map is not surjective");
      t.table[i][j] = A1.iso_class(m.obj[s]);
    }
  t.unit = A1.iso_class(a.act(gamma_unit()).obj[0]);
  return t;
}

}  // namespace

MonoidTable pi0_monoid(const GammaGroupoid& a) {
  if (a.N < 2) throw InputError("pi0_monoid needs levels up to <2>");
  auto t = monoid_with_section(a, true);
  auto t2 = monoid_with_section(a, false);
  if (t.table != t2.table) throw InternalError("monoid table depends on the chosen section");
  return t;
}

Verdict is_very_special(const GammaGroupoid& a) {
  auto s = is_special(a);
  if (!s) return s;
  MonoidTable t;
  try {
    t = pi0_monoid(a);
  } catch (const InputError& e) {
    return Verdict::fail(e.what());
  }
  const int k = static_cast<int>(t.table.size());
  for (int i = 0; i < k; ++i) {
    bool inv = false;
    for (int j = 0; j < k; ++j) {
      if (t.table[i][j] != t.table[j][i]) return Verdict::fail("pi0 monoid not commutative at " + t.elements[i]);
      for (int l = 0; l < k; ++l)
        if (t.table[t.table[i][j]][l] != t.table[i][t.table[j][l]])
          return Verdict::fail("pi0 monoid not associative at " + t.elements[i]);
      inv = inv || t.table[i][j] == t.unit;
    }
    if (t.table[i][t.unit] != i) return Verdict::fail("pi0 monoid unit law fails at " + t.elements[i]);
    if (!inv) return Verdict::fail("pi0 monoid element " + t.elements[i] + " has no inverse");
  }
  return Verdict::pass();
}

ValidationReport validate_pictam(const GammaGroupoid& a) {
  ValidationReport r = validate_gamma(a);
  if (!r.ok()) return r;
  if (a.N < 2) {
    r.add("truncation", "needs truncation >= 2");
    return r;
  }
  auto vs = is_very_special(a);
  auto x = underlying_simplicial(a);
  auto tam = validate_tamsamani(x, TamMode::groupoid);
  bool one_object = a.levels[0]->num_objects() == 1;
  bool tam_ok = tam.ok() && one_object;
  if (!vs) r.add("very_special", vs.witness);
  if (!tam.ok()) r.merge(tam, "underlying");
  if (static_cast<bool>(vs) != tam_ok)
    r.add("internal_consistency", "very special and one-object Tamsamani 2-groupoid checks disagree");
  return r;
}

Verdict is_levelwise_equivalence(const GammaMorphism& f) {
  for (std::size_t n = 0; n < f.level.size(); ++n) {
    auto v = is_equivalence(f.level[n]);
    if (!v) return Verdict::fail("level <" + std::to_string(n) + ">: " + v.witness);
  }
  return Verdict::pass();
}

GammaPtr terminal_gamma(int N) {
  auto a = std::make_shared<GammaGroupoid>();
  a->N = N;
  auto t = terminal_category();
  a->levels.assign(N + 1, t);
  for (const auto& s : all_gamma_maps_upto(N)) a->action.emplace(s, FinFunctor{t, t, {0}, {0}});
  a->label = "terminal";
  return a;
}

GammaPtr monoid_gamma(const std::vector<std::string>& names, const std::vector<std::vector<int>>& table, int unit,
                      int N, const std::string& label) {
  const int k = static_cast<int>(names.size());
  auto a = std::make_shared<GammaGroupoid>();
  a->N = N;
  a->label = label;
  auto decode = [k](int idx, int n) {
    std::vector<int> d(n);
    for (int i = n - 1; i >= 0; --i) {
      d[i] = idx % k;
      idx /= k;
    }
    return d;
  };
  auto encode = [k](const std::vector<int>& d) {
    int idx = 0;
    for (int v : d) idx = idx * k + v;
    return idx;
  };
  for (int n = 0; n <= N; ++n) {
    int count = 1;
    for (int i = 0; i < n; ++i) count *= k;
    std::vector<std::string> objs;
    for (int idx = 0; idx < count; ++idx) {
      if (n == 0) {
        objs.push_back("*");
        continue;
      }
      std::vector<std::string> parts;
      for (int v : decode(idx, n)) parts.push_back(names[v]);
      objs.push_back(n == 1 ? parts[0] : "(" + join(parts, ",") + ")");
    }
    a->levels.push_back(discrete_category(objs));
  }
  for (const auto& s : all_gamma_maps_upto(N)) {
    FinFunctor F{a->levels[s.n], a->levels[s.m], {}, {}};
    for (Id x = 0; x < static_cast<Id>(a->levels[s.n]->num_objects()); ++x) {
      auto d = decode(x, s.n);
      std::vector<int> out(s.m, unit);
      for (int j = 1; j <= s.n; ++j)
        if (s.values[j]) out[s.values[j] - 1] = table[out[s.values[j] - 1]][d[j - 1]];
      F.obj.push_back(encode(out));
    }
    F.mor = F.obj;
    a->action.emplace(s, std::move(F));
  }
  return a;
}

}  // namespace pictam
