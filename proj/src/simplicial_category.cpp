#include <map>

#include "pictam/tamsamani.hpp"

namespace pictam {

namespace {

bool bijective(const std::vector<Id>& m, std::size_t cod_size) {
  if (m.size() != cod_size) return false;
  std::vector<char> hit(cod_size, 0);
  for (Id v : m) {
    if (v < 0 || static_cast<std::size_t>(v) >= cod_size || hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

std::vector<int> class_map(const FinFunctor& f) {
  const auto& d = *f.dom;
  const auto& c = *f.cod;
  std::vector<int> out(d.num_iso_classes(), -1);
  for (Id x = 0; x < static_cast<Id>(d.num_objects()); ++x) out[d.iso_class(x)] = c.iso_class(f.obj[x]);
  return out;
}

}  // namespace

const FinFunctor& SimplicialCategory::act(const DeltaMap& alpha) const {
  auto it = action.find(alpha);
  if (it == action.end()) throw InputError("no functor for " + alpha.name());
  return it->second;
}

ValidationReport validate_simplicial_category(const SimplicialCategory& x) {
  ValidationReport r;
  if (static_cast<int>(x.levels.size()) != x.N + 1) {
    r.add("levels", "expected " + std::to_string(x.N + 1) + " levels");
    return r;
  }
  for (int k = 0; k <= x.N; ++k) {
    auto rk = validate_category(*x.levels[k]);
    if (!rk.ok()) r.merge(rk, "level[" + std::to_string(k) + "]");
  }
  if (!r.ok()) return r;
  auto maps = all_delta_maps_upto(x.N);
  for (const auto& a : maps) {
    auto it = x.action.find(a);
    if (it == x.action.end()) {
      r.add("action_missing", a.name());
      continue;
    }
    const auto& F = it->second;
    if (F.dom != x.levels[a.n] || F.cod != x.levels[a.m]) {
      r.add("action_endpoints", a.name());
      continue;
    }
    auto rf = validate_functor(F);
    if (!rf.ok()) r.merge(rf, "action[" + a.name() + "]");
  }
  if (!r.ok()) return r;
  for (int n = 0; n <= x.N; ++n)
    if (!same_functor(x.act(delta_identity(n)), identity_functor(x.levels[n])))
      r.add("action_identity", delta_identity(n).name());
  for (const auto& a : maps)
    for (const auto& b : maps) {
      if (a.n != b.m) continue;
      // X(b∘a) = X(a)∘X(b)
      if (!same_functor(x.act(compose_delta(b, a)), compose_functors(x.act(a), x.act(b))))
        r.add("action_composition", b.name() + " after " + a.name());
    }
  return r;
}

ValidationReport validate_simplicial_functor(const SimplicialFunctor& f) {
  ValidationReport r;
  const auto& X = *f.dom;
  const auto& Y = *f.cod;
  if (X.N != Y.N || static_cast<int>(f.level.size()) != X.N + 1) {
    r.add("functor_shape", "truncation or level count mismatch");
    return r;
  }
  for (int k = 0; k <= X.N; ++k) {
    if (f.level[k].dom != X.levels[k] || f.level[k].cod != Y.levels[k]) {
      r.add("functor_endpoints", "level " + std::to_string(k));
      continue;
    }
    auto rk = validate_functor(f.level[k]);
    if (!rk.ok()) r.merge(rk, "level[" + std::to_string(k) + "]");
  }
  if (!r.ok()) return r;
  for (const auto& a : all_delta_maps_upto(X.N))
    if (!same_functor(compose_functors(f.level[a.m], X.act(a)), compose_functors(Y.act(a), f.level[a.n])))
      r.add("functor_naturality", a.name());
  return r;
}

SegalFunctor segal_map(const SimplicialCategory& x, int k) {
  if (k < 2 || k > x.N) throw InputError("segal_map: k must lie in 2..truncation");
  const auto& X1 = *x.levels[1];
  const auto& Xk = *x.levels[k];
  const auto& src = x.act(coface(1, 1));
  const auto& tgt = x.act(coface(1, 0));

  std::map<Id, std::vector<Id>> starting_at;
  for (Id a = 0; a < static_cast<Id>(X1.num_objects()); ++a) starting_at[src.obj[a]].push_back(a);
  std::vector<std::vector<Id>> tuples;
  for (Id a = 0; a < static_cast<Id>(X1.num_objects()); ++a) tuples.push_back({a});
  for (int j = 1; j < k; ++j) {
    std::vector<std::vector<Id>> next;
    for (const auto& t : tuples) {
      auto it = starting_at.find(tgt.obj[t.back()]);
      if (it == starting_at.end()) continue;
      for (Id a : it->second) {
        auto u = t;
        u.push_back(a);
        next.push_back(std::move(u));
      }
    }
    tuples = std::move(next);
  }

  FinCategory::Builder b;
  std::map<std::vector<Id>, Id> obj_index, mor_index;
  std::vector<std::vector<Id>> mor_tuples;
  auto tuple_name = [](const std::vector<std::string>& parts) { return "(" + join(parts, ",") + ")"; };
  for (const auto& t : tuples) {
    std::vector<std::string> parts;
    for (Id a : t) parts.push_back(X1.object_name(a));
    obj_index[t] = b.add_object(tuple_name(parts));
  }
  for (const auto& s : tuples)
    for (const auto& t : tuples) {
      std::vector<std::vector<Id>> cur{{}};
      for (int j = 0; j < k; ++j) {
        std::vector<std::vector<Id>> next;
        for (const auto& c : cur)
          for (Id f : X1.hom(s[j], t[j])) {
            auto u = c;
            u.push_back(f);
            next.push_back(std::move(u));
          }
        cur = std::move(next);
      }
      for (const auto& m : cur) {
        std::vector<std::string> parts;
        for (Id f : m) parts.push_back(X1.morphism_name(f));
        mor_index[m] = b.add_morphism(tuple_name(parts), obj_index[s], obj_index[t]);
        mor_tuples.push_back(m);
      }
    }
  for (const auto& t : tuples) {
    std::vector<Id> ids;
    for (Id a : t) ids.push_back(X1.identity(a));
    b.set_identity(obj_index[t], mor_index.at(ids));
  }
  b.compose_with([&](Id g, Id f) {
    std::vector<Id> c(k);
    for (int j = 0; j < k; ++j) c[j] = X1.compose(mor_tuples[g][j], mor_tuples[f][j]);
    auto it = mor_index.find(c);
    return it == mor_index.end() ? kNone : it->second;
  });
  SegalFunctor out;
  out.k = k;
  out.pullback = b.build();

  std::vector<const FinFunctor*> proj;
  for (int j = 1; j <= k; ++j) proj.push_back(&x.act(delta_nu(k, j)));
  out.map = FinFunctor{x.levels[k], out.pullback, {}, {}};
  for (Id a = 0; a < static_cast<Id>(Xk.num_objects()); ++a) {
    std::vector<Id> t;
    for (auto* p : proj) t.push_back(p->obj[a]);
    auto it = obj_index.find(t);
    if (it == obj_index.end()) {
      out.verdict = {false, "object " + Xk.object_name(a) + " does not map to a composable tuple"};
      return out;
    }
    out.map.obj.push_back(it->second);
  }
  for (Id f = 0; f < static_cast<Id>(Xk.num_morphisms()); ++f) {
    std::vector<Id> t;
    for (auto* p : proj) t.push_back(p->mor[f]);
    out.map.mor.push_back(mor_index.at(t));
  }
  out.verdict = is_equivalence(out.map);
  return out;
}

CatPtr hom_fiber(const SimplicialCategory& x, Id a, Id b, std::vector<Id>* origin) {
  const auto& src = x.act(coface(1, 1));
  const auto& tgt = x.act(coface(1, 0));
  std::vector<Id> objs;
  for (Id o = 0; o < static_cast<Id>(x.levels[1]->num_objects()); ++o)
    if (src.obj[o] == a && tgt.obj[o] == b) objs.push_back(o);
  if (origin) *origin = objs;
  return full_subcategory(*x.levels[1], objs);
}

MultiSimplicialSet p1(const SimplicialCategory& x) {
  MultiSimplicialSet out(1, x.N);
  std::vector<std::vector<Id>> reps(x.N + 1);
  for (int k = 0; k <= x.N; ++k) {
    const auto& c = *x.levels[k];
    reps[k].assign(c.num_iso_classes(), kNone);
    for (Id o = 0; o < static_cast<Id>(c.num_objects()); ++o)
      if (reps[k][c.iso_class(o)] == kNone) reps[k][c.iso_class(o)] = o;
    for (Id r : reps[k]) out.elements(k).push_back(c.object_name(r));
  }
  out.allocate_structure();
  for (int k = 0; k <= x.N; ++k) {
    for (int i = 0; i <= k; ++i) {
      if (k >= 1) {
        const auto& F = x.act(coface(k, i));
        for (std::size_t cl = 0; cl < reps[k].size(); ++cl)
          out.face(0, k, i)[cl] = x.levels[k - 1]->iso_class(F.obj[reps[k][cl]]);
      }
      if (k + 1 <= x.N) {
        const auto& F = x.act(codegeneracy(k, i));
        for (std::size_t cl = 0; cl < reps[k].size(); ++cl)
          out.degeneracy(0, k, i)[cl] = x.levels[k + 1]->iso_class(F.obj[reps[k][cl]]);
      }
    }
  }
  return out;
}

MultiSimplicialSet levelwise_nerve(const SimplicialCategory& x) {
  const int N = x.N;
  std::vector<MSSPtr> nerves;
  for (int s = 0; s <= N; ++s) nerves.push_back(std::make_shared<MultiSimplicialSet>(nerve_of(*x.levels[s], N)));
  MultiSimplicialSet out(2, N);
  for (int s = 0; s <= N; ++s)
    for (int t = 0; t <= N; ++t) out.elements(out.level_index({s, t})) = nerves[s]->elements(t);
  out.allocate_structure();
  for (int s = 0; s <= N; ++s) {
    std::vector<MultiSimplicialMap> faces, degens;
    if (s >= 1)
      for (int i = 0; i <= s; ++i) faces.push_back(nerve_map(x.act(coface(s, i)), nerves[s], nerves[s - 1]));
    if (s + 1 <= N)
      for (int i = 0; i <= s; ++i)
        degens.push_back(nerve_map(x.act(codegeneracy(s, i)), nerves[s], nerves[s + 1]));
    for (int t = 0; t <= N; ++t) {
      std::size_t l = out.level_index({s, t});
      for (std::size_t i = 0; i < faces.size(); ++i) out.face(0, l, static_cast<int>(i)) = faces[i].level[t];
      for (std::size_t i = 0; i < degens.size(); ++i) out.degeneracy(0, l, static_cast<int>(i)) = degens[i].level[t];
      if (t >= 1)
        for (int i = 0; i <= t; ++i) out.face(1, l, i) = nerves[s]->face(0, t, i);
      if (t + 1 <= N)
        for (int i = 0; i <= t; ++i) out.degeneracy(1, l, i) = nerves[s]->degeneracy(0, t, i);
    }
  }
  return out;
}

MultiSimplicialMap levelwise_nerve_map(const SimplicialFunctor& f, const MSSPtr& dom, const MSSPtr& cod) {
  const int N = f.dom->N;
  MultiSimplicialMap out{dom, cod, std::vector<std::vector<int>>(dom->num_levels())};
  for (int s = 0; s <= N; ++s) {
    auto nd = std::make_shared<MultiSimplicialSet>(nerve_of(*f.dom->levels[s], N));
    auto nc = std::make_shared<MultiSimplicialSet>(nerve_of(*f.cod->levels[s], N));
    auto m = nerve_map(f.level[s], nd, nc);
    for (int t = 0; t <= N; ++t) out.level[dom->level_index({s, t})] = m.level[t];
  }
  return out;
}

ValidationReport validate_tamsamani(const SimplicialCategory& x, TamMode mode) {
  ValidationReport r = validate_simplicial_category(x);
  if (!r.ok()) return r;
  if (x.N < 2) {
    r.add("truncation", "needs truncation >= 2");
    return r;
  }
  if (!x.levels[0]->is_discrete()) r.add("discrete_level0", "level 0 has a non-identity morphism");
  if (mode == TamMode::groupoid)
    for (int k = 0; k <= x.N; ++k)
      if (!x.levels[k]->is_groupoid()) r.add("groupoid_levels", "level " + std::to_string(k) + " is not a groupoid");
  for (int k = 2; k <= x.N; ++k) {
    auto s = segal_map(x, k);
    if (!s.verdict) r.add("segal[" + std::to_string(k) + "]", s.verdict.witness);
  }
  if (!r.ok()) return r;
  auto rp = validate_tamsamani(p1(x), mode);
  if (!rp.ok()) r.merge(rp, "p");
  return r;
}

Verdict is_2_equivalence(const SimplicialFunctor& f) {
  const auto& X = *f.dom;
  const auto& Y = *f.cod;
  const auto& f0 = f.level[0];
  const auto& f1 = f.level[1];
  for (Id a = 0; a < static_cast<Id>(X.levels[0]->num_objects()); ++a)
    for (Id b = 0; b < static_cast<Id>(X.levels[0]->num_objects()); ++b) {
      std::vector<Id> ox, oy, mx, my;
      hom_fiber(X, a, b, &ox);
      hom_fiber(Y, f0.obj[a], f0.obj[b], &oy);
      auto hx = full_subcategory(*X.levels[1], ox, &mx);
      auto hy = full_subcategory(*Y.levels[1], oy, &my);
      std::map<Id, Id> back_obj, back_mor;
      for (std::size_t i = 0; i < oy.size(); ++i) back_obj[oy[i]] = static_cast<Id>(i);
      for (std::size_t i = 0; i < my.size(); ++i) back_mor[my[i]] = static_cast<Id>(i);
      FinFunctor g{hx, hy, {}, {}};
      for (Id o : ox) g.obj.push_back(back_obj.at(f1.obj[o]));
      for (Id m : mx) g.mor.push_back(back_mor.at(f1.mor[m]));
      auto v = is_equivalence(g);
      if (!v)
        return Verdict::fail("hom(" + X.levels[0]->object_name(a) + "," + X.levels[0]->object_name(b) +
                             "): " + v.witness);
    }
  auto px = std::make_shared<MultiSimplicialSet>(p1(X));
  auto py = std::make_shared<MultiSimplicialSet>(p1(Y));
  MultiSimplicialMap pm{px, py, {}};
  for (int k = 0; k <= X.N; ++k) pm.level.push_back(class_map(f.level[k]));
  auto v = is_n_equivalence(pm);
  if (!v) return Verdict::fail("p: " + v.witness);
  return Verdict::pass();
}

Verdict is_levelwise_equivalence(const SimplicialFunctor& f) {
  for (std::size_t k = 0; k < f.level.size(); ++k) {
    auto v = is_equivalence(f.level[k]);
    if (!v) return Verdict::fail("level " + std::to_string(k) + ": " + v.witness);
  }
  return Verdict::pass();
}

bool level0_bijective(const SimplicialFunctor& f) {
  return bijective(f.level[0].obj, f.cod->levels[0]->num_objects());
}

std::vector<int> pi0_map(const SimplicialFunctor& f) {
  auto px = std::make_shared<MultiSimplicialSet>(p1(*f.dom));
  auto py = std::make_shared<MultiSimplicialSet>(p1(*f.cod));
  MultiSimplicialMap pm{px, py, {}};
  for (int k = 0; k <= f.dom->N; ++k) pm.level.push_back(class_map(f.level[k]));
  return pi0_map(pm);
}

std::size_t pi0_size(const SimplicialCategory& x) { return pi0(p1(x)).size(); }

}  // namespace pictam
