#include "pictam/picard.hpp"

#include <numeric>

namespace pictam {

int FiniteAbelianGroup::size() const {
  int n = 1;
  for (int o : orders) n *= o;
  return n;
}

std::vector<int> FiniteAbelianGroup::coords(int a) const {
  std::vector<int> c(orders.size());
  for (int i = static_cast<int>(orders.size()) - 1; i >= 0; --i) {
    c[i] = a % orders[i];
    a /= orders[i];
  }
  return c;
}

int FiniteAbelianGroup::index(const std::vector<int>& c) const {
  int a = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) a = a * orders[i] + ((c[i] % orders[i]) + orders[i]) % orders[i];
  return a;
}

int FiniteAbelianGroup::add(int a, int b) const {
  auto ca = coords(a), cb = coords(b);
  for (std::size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
  return index(ca);
}

int FiniteAbelianGroup::neg(int a) const {
  auto c = coords(a);
  for (int& v : c) v = -v;
  return index(c);
}

std::string FiniteAbelianGroup::element_name(int a) const {
  if (orders.size() == 1) return std::to_string(a);
  if (orders.empty()) return "0";
  std::vector<std::string> parts;
  for (int v : coords(a)) parts.push_back(std::to_string(v));
  return "(" + join(parts, ",") + ")";
}

std::string FiniteAbelianGroup::name() const {
  if (orders.empty()) return "0";
  std::vector<std::string> parts;
  for (int o : orders) parts.push_back("Z/" + std::to_string(o));
  return join(parts, "x");
}

FiniteAbelianGroup cyclic_group(int order) {
  if (order < 1) throw InputError("cyclic group order must be positive");
  if (order == 1) return {};
  return {{order}};
}

FiniteAbelianGroup trivial_group() { return {}; }

BilinearForm zero_form(const FiniteAbelianGroup& a) { return BilinearForm(a.size() * a.size(), 0); }

BilinearForm product_form_z2() { return {0, 0, 0, 1}; }

Id PicardCategory::tensor_m(Id f, Id g) const {
  if (f == kNone || g == kNone) return kNone;
  return tensor_mor[static_cast<std::size_t>(f) * num_morphisms() + g];
}

Id PicardCategory::comp(Id g, Id f) const {
  if (f == kNone || g == kNone) return kNone;
  return cat->compose(g, f);
}

namespace {

struct Names {
  const FinCategory& c;
  std::string operator()(std::initializer_list<Id> objs) const {
    std::vector<std::string> parts;
    for (Id x : objs) parts.push_back(c.object_name(x));
    return "(" + join(parts, ",") + ")";
  }
};

}  // namespace

ValidationReport validate_picard(const PicardCategory& p) {
  ValidationReport r;
  if (!p.cat) {
    r.add("structure", "no underlying category");
    return r;
  }
  const auto& c = *p.cat;
  auto rc = validate_category(c);
  if (!rc.ok()) {
    r.merge(rc, "underlying");
    return r;
  }
  const Id n = static_cast<Id>(c.num_objects());
  const Id M = static_cast<Id>(c.num_morphisms());
  Names nm{c};
  auto in_obj = [&](Id x) { return x >= 0 && x < n; };
  auto in_mor = [&](Id f) { return f >= 0 && f < M; };
  if (!in_obj(p.unit)) {
    r.add("unit", "unit object missing");
    return r;
  }
  auto sized = [&](const std::vector<Id>& v, std::size_t want, const char* what) {
    if (v.size() != want) r.add("table_size", what);
  };
  sized(p.tensor_obj, n * n, "tensor_objects");
  sized(p.tensor_mor, static_cast<std::size_t>(M) * M, "tensor_morphisms");
  sized(p.assoc, static_cast<std::size_t>(n) * n * n, "associator");
  sized(p.left_unit, n, "left_unitor");
  sized(p.right_unit, n, "right_unitor");
  sized(p.sym, n * n, "symmetry");
  if (!r.ok()) return r;

  for (Id x = 0; x < n; ++x)
    for (Id y = 0; y < n; ++y)
      if (!in_obj(p.tensor(x, y))) r.add("tensor_objects_missing", nm({x, y}));
  if (!r.ok()) return r;
  for (Id f = 0; f < M; ++f)
    for (Id g = 0; g < M; ++g) {
      Id h = p.tensor_m(f, g);
      if (!in_mor(h)) {
        r.add("tensor_morphisms_missing", "(" + c.morphism_name(f) + "," + c.morphism_name(g) + ")");
        continue;
      }
      if (c.source(h) != p.tensor(c.source(f), c.source(g)) || c.target(h) != p.tensor(c.target(f), c.target(g)))
        r.add("tensor_morphisms_endpoints", "(" + c.morphism_name(f) + "," + c.morphism_name(g) + ")");
    }
  auto check_component = [&](Id m, Id s, Id t, const std::string& what, const std::string& where) {
    if (!in_mor(m)) {
      r.add(what + "_missing", where);
      return;
    }
    if (c.source(m) != s || c.target(m) != t) r.add(what + "_endpoints", where);
  };
  for (Id x = 0; x < n; ++x)
    for (Id y = 0; y < n; ++y)
      for (Id z = 0; z < n; ++z)
        check_component(p.alpha(x, y, z), p.tensor(x, p.tensor(y, z)), p.tensor(p.tensor(x, y), z), "associator",
                        nm({x, y, z}));
  for (Id x = 0; x < n; ++x) {
    check_component(p.lambda(x), x, p.tensor(p.unit, x), "left_unitor", nm({x}));
    check_component(p.rho(x), x, p.tensor(x, p.unit), "right_unitor", nm({x}));
    for (Id y = 0; y < n; ++y) check_component(p.gamma(x, y), p.tensor(x, y), p.tensor(y, x), "symmetry", nm({x, y}));
  }
  if (!r.ok()) return r;

  if (!c.is_groupoid())
    for (Id f = 0; f < M; ++f)
      if (c.inverse(f) == kNone) {
        r.add("groupoid", c.morphism_name(f) + " is not invertible");
        break;
      }

  auto mname = [&](Id f) { return c.morphism_name(f); };
  // ⊗ is a functor
  for (Id x = 0; x < n; ++x)
    for (Id y = 0; y < n; ++y)
      if (p.tensor_m(p.id(x), p.id(y)) != p.id(p.tensor(x, y))) r.add("tensor_identity", nm({x, y}));
  for (Id f = 0; f < M; ++f)
    for (Id f2 : c.out(c.target(f)))
      for (Id g = 0; g < M; ++g)
        for (Id g2 : c.out(c.target(g)))
          if (p.tensor_m(p.comp(f2, f), p.comp(g2, g)) != p.comp(p.tensor_m(f2, g2), p.tensor_m(f, g)))
            r.add("tensor_composition", "(" + mname(f2) + "∘" + mname(f) + ")⊗(" + mname(g2) + "∘" + mname(g) + ")");

  // naturality
  for (Id f = 0; f < M; ++f) {
    Id sf = c.source(f), tf = c.target(f);
    if (p.comp(p.lambda(tf), f) != p.comp(p.tensor_m(p.id(p.unit), f), p.lambda(sf)))
      r.add("left_unitor_naturality", mname(f));
    if (p.comp(p.rho(tf), f) != p.comp(p.tensor_m(f, p.id(p.unit)), p.rho(sf)))
      r.add("right_unitor_naturality", mname(f));
    for (Id g = 0; g < M; ++g) {
      Id sg = c.source(g), tg = c.target(g);
      if (p.comp(p.gamma(tf, tg), p.tensor_m(f, g)) != p.comp(p.tensor_m(g, f), p.gamma(sf, sg)))
        r.add("symmetry_naturality", "(" + mname(f) + "," + mname(g) + ")");
      for (Id h = 0; h < M; ++h) {
        Id sh = c.source(h), th = c.target(h);
        if (p.comp(p.alpha(tf, tg, th), p.tensor_m(f, p.tensor_m(g, h))) !=
            p.comp(p.tensor_m(p.tensor_m(f, g), h), p.alpha(sf, sg, sh)))
          r.add("associator_naturality", "(" + mname(f) + "," + mname(g) + "," + mname(h) + ")");
      }
    }
  }

  // coherence axioms
  const Id u = p.unit;
  for (Id w = 0; w < n; ++w)
    for (Id x = 0; x < n; ++x)
      for (Id y = 0; y < n; ++y)
        for (Id z = 0; z < n; ++z) {
          Id lhs = p.comp(p.alpha(p.tensor(w, x), y, z), p.alpha(w, x, p.tensor(y, z)));
          Id rhs = p.comp(p.tensor_id(p.alpha(w, x, y), z), p.alpha(w, p.tensor(x, y), z),
                          p.id_tensor(w, p.alpha(x, y, z)));
          if (lhs != rhs) r.add("pentagon", nm({w, x, y, z}));
        }
  for (Id x = 0; x < n; ++x)
    for (Id y = 0; y < n; ++y) {
      if (p.comp(p.alpha(x, u, y), p.id_tensor(x, p.lambda(y))) != p.tensor_id(p.rho(x), y))
        r.add("triangle", nm({x, y}));
      if (p.comp(p.gamma(y, x), p.gamma(x, y)) != p.id(p.tensor(x, y))) r.add("symmetry_involution", nm({x, y}));
      for (Id z = 0; z < n; ++z) {
        Id lhs = p.comp(p.inv(p.alpha(y, z, x)), p.gamma(x, p.tensor(y, z)), p.inv(p.alpha(x, y, z)));
        Id rhs = p.comp(p.id_tensor(y, p.gamma(x, z)), p.inv(p.alpha(y, x, z)), p.tensor_id(p.gamma(x, y), z));
        if (lhs != rhs) r.add("hexagon", nm({x, y, z}));
      }
    }
  if (p.lambda(u) != p.rho(u)) r.add("unit_coherence", nm({u}));
  for (Id x = 0; x < n; ++x)
    if (p.rho(x) != p.comp(p.gamma(u, x), p.lambda(x))) r.add("unit_symmetry", nm({x}));

  // every object invertible up to isomorphism
  for (Id x = 0; x < n; ++x) {
    bool found = false;
    for (Id y = 0; y < n && !found; ++y) found = c.iso_class(p.tensor(x, y)) == c.iso_class(u);
    if (!found) r.add("group_like", c.object_name(x) + " has no tensor inverse");
  }
  return r;
}

PicPtr build_split(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b, const BilinearForm& beta) {
  const int na = a.size(), nb = b.size();
  if (static_cast<int>(beta.size()) != na * na) throw InputError("beta table has the wrong size");
  for (int v : beta)
    if (v < 0 || v >= nb) throw InputError("beta value outside B");
  auto bt = [&](int x, int y) { return beta[x * na + y]; };
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < na; ++y) {
      if (b.add(bt(x, y), bt(y, x)) != 0)
        throw InputError("beta(x,y) + beta(y,x) != 0 at (" + a.element_name(x) + "," + a.element_name(y) + ")");
      for (int z = 0; z < na; ++z) {
        if (bt(a.add(x, y), z) != b.add(bt(x, z), bt(y, z)))
          throw InputError("beta is not additive in the first argument");
        if (bt(x, a.add(y, z)) != b.add(bt(x, y), bt(x, z)))
          throw InputError("beta is not additive in the second argument");
      }
    }
  FinCategory::Builder bld;
  for (int x = 0; x < na; ++x) bld.add_object(a.element_name(x));
  for (int x = 0; x < na; ++x)
    for (int l = 0; l < nb; ++l) bld.add_morphism(b.element_name(l) + "@" + a.element_name(x), x, x);
  for (int x = 0; x < na; ++x) bld.set_identity(x, x * nb);
  bld.compose_with([nb, b](Id g, Id f) { return (f / nb) * nb + b.add(g % nb, f % nb); });
  auto p = std::make_shared<PicardCategory>();
  p->cat = bld.build();
  p->unit = 0;
  const int M = na * nb;
  p->tensor_obj.resize(na * na);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < na; ++y) p->tensor_obj[x * na + y] = a.add(x, y);
  p->tensor_mor.resize(static_cast<std::size_t>(M) * M);
  for (int f = 0; f < M; ++f)
    for (int g = 0; g < M; ++g)
      p->tensor_mor[static_cast<std::size_t>(f) * M + g] = a.add(f / nb, g / nb) * nb + b.add(f % nb, g % nb);
  p->assoc.resize(na * na * na);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < na; ++y)
      for (int z = 0; z < na; ++z) p->assoc[(x * na + y) * na + z] = a.add(x, a.add(y, z)) * nb;
  p->left_unit.resize(na);
  p->right_unit.resize(na);
  for (int x = 0; x < na; ++x) p->left_unit[x] = p->right_unit[x] = x * nb;
  p->sym.resize(na * na);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < na; ++y) p->sym[x * na + y] = a.add(x, y) * nb + bt(x, y);
  bool zero = true;
  for (int v : beta) zero = zero && v == 0;
  p->label = "split(" + a.name() + "," + b.name() + "," + (zero ? "0" : "beta") + ")";
  p->split = SplitData{a, b, beta};
  return p;
}

PicPtr trivial_picard() {
  auto p = std::make_shared<PicardCategory>(*build_split(trivial_group(), trivial_group(), {0}));
  p->label = "trivial";
  return p;
}

Id split_morphism(const PicardCategory& p, int x, int b) {
  if (!p.split) throw InputError("not a split model");
  return x * p.split->b.size() + b;
}

PiInvariants pi_invariants(const PicardCategory& p) {
  PiInvariants out;
  const auto& c = *p.cat;
  auto cls = iso_classes(c);
  for (Id r : cls.representative) out.pi0.push_back(c.object_name(r));
  const int k = static_cast<int>(cls.count);
  out.pi0_table.assign(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      out.pi0_table[i][j] = cls.class_of[p.tensor(cls.representative[i], cls.representative[j])];
  out.pi0_unit = cls.class_of[p.unit];
  // representative independence and group laws
  for (Id x = 0; x < static_cast<Id>(c.num_objects()); ++x)
    for (Id y = 0; y < static_cast<Id>(c.num_objects()); ++y)
      if (cls.class_of[p.tensor(x, y)] != out.pi0_table[cls.class_of[x]][cls.class_of[y]])
        out.checks.add("pi0_well_defined", c.object_name(x) + "," + c.object_name(y));
  const auto& t = out.pi0_table;
  for (int i = 0; i < k; ++i) {
    if (t[i][out.pi0_unit] != i || t[out.pi0_unit][i] != i) out.checks.add("pi0_unit", out.pi0[i]);
    bool inv = false;
    for (int j = 0; j < k; ++j) {
      inv = inv || t[i][j] == out.pi0_unit;
      if (t[i][j] != t[j][i]) out.checks.add("pi0_commutative", out.pi0[i] + "," + out.pi0[j]);
      for (int l = 0; l < k; ++l)
        if (t[t[i][j]][l] != t[i][t[j][l]]) out.checks.add("pi0_associative", out.pi0[i] + "," + out.pi0[j] + "," + out.pi0[l]);
    }
    if (!inv) out.checks.add("pi0_inverses", out.pi0[i]);
  }

  const Id u = p.unit;
  out.pi1_ids = c.hom(u, u);
  for (Id f : out.pi1_ids) out.pi1.push_back(c.morphism_name(f));
  const int m = static_cast<int>(out.pi1_ids.size());
  std::vector<int> pos(c.num_morphisms(), -1);
  for (int i = 0; i < m; ++i) pos[out.pi1_ids[i]] = i;
  out.pi1_table.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out.pi1_table[i][j] = pos[c.compose(out.pi1_ids[i], out.pi1_ids[j])];
  const Id l1 = p.lambda(u);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Id f = out.pi1_ids[i], g = out.pi1_ids[j];
      if (p.comp(p.inv(l1), p.tensor_m(f, g), l1) != c.compose(f, g))
        out.checks.add("pi1_eckmann_hilton", out.pi1[i] + "," + out.pi1[j]);
      if (out.pi1_table[i][j] != out.pi1_table[j][i]) out.checks.add("pi1_commutative", out.pi1[i] + "," + out.pi1[j]);
    }

  // q[x]: the u in Aut(1) whose transport to Aut(x⊗x) is the symmetry.
  auto transport = [&](Id v, Id y) { return p.comp(p.inv(p.lambda(y)), p.tensor_m(v, p.id(y)), p.lambda(y)); };
  std::vector<int> q_obj(c.num_objects(), -1);
  for (Id x = 0; x < static_cast<Id>(c.num_objects()); ++x) {
    Id xx = p.tensor(x, x);
    for (int i = 0; i < m; ++i)
      if (transport(out.pi1_ids[i], xx) == p.gamma(x, x)) {
        q_obj[x] = i;
        break;
      }
    if (q_obj[x] < 0) out.checks.add("q_defined", c.object_name(x));
  }
  out.q.assign(k, -1);
  for (Id x = 0; x < static_cast<Id>(c.num_objects()); ++x) {
    int cl = cls.class_of[x];
    if (out.q[cl] < 0) out.q[cl] = q_obj[x];
    else if (out.q[cl] != q_obj[x]) out.checks.add("q_class_invariant", c.object_name(x));
  }
  for (int i = 0; i < k; ++i)
    if (out.q[i] >= 0 && c.compose(out.pi1_ids[out.q[i]], out.pi1_ids[out.q[i]]) != p.id(u))
      out.checks.add("q_order_two", out.pi0[i]);
  return out;
}

ValidationReport validate_monoidal_functor(const MonoidalFunctor& mf) {
  ValidationReport r;
  const auto& P = *mf.dom;
  const auto& Q = *mf.cod;
  const auto& F = mf.functor;
  if (F.dom != P.cat || F.cod != Q.cat) {
    r.add("functor_endpoints", "underlying functor does not connect the two Picard categories");
    return r;
  }
  auto rf = validate_functor(F);
  if (!rf.ok()) {
    r.merge(rf, "functor");
    return r;
  }
  const auto& c = *P.cat;
  const Id n = static_cast<Id>(c.num_objects());
  const Id M = static_cast<Id>(c.num_morphisms());
  if (F.obj[P.unit] != Q.unit) {
    r.add("unit_strict", "F(1) = " + Q.cat->object_name(F.obj[P.unit]));
    return r;
  }
  if (mf.psi.size() != static_cast<std::size_t>(n) * n) {
    r.add("psi_missing", "table size");
    return r;
  }
  auto psi = [&](Id x, Id y) { return mf.psi[x * n + y]; };
  auto Fm = [&](Id f) { return f == kNone ? kNone : F.mor[f]; };
  auto nm = [&](std::initializer_list<Id> xs) {
    std::vector<std::string> parts;
    for (Id x : xs) parts.push_back(c.object_name(x));
    return "(" + join(parts, ",") + ")";
  };
  for (Id x = 0; x < n; ++x)
    for (Id y = 0; y < n; ++y) {
      Id h = psi(x, y);
      if (h < 0 || h >= static_cast<Id>(Q.num_morphisms())) {
        r.add("psi_missing", nm({x, y}));
        continue;
      }
      if (Q.cat->source(h) != F.obj[P.tensor(x, y)] || Q.cat->target(h) != Q.tensor(F.obj[x], F.obj[y]))
        r.add("psi_endpoints", nm({x, y}));
    }
  if (!r.ok()) return r;
  for (Id f = 0; f < M; ++f)
    for (Id g = 0; g < M; ++g) {
      Id sf = c.source(f), tf = c.target(f), sg = c.source(g), tg = c.target(g);
      if (Q.comp(psi(tf, tg), Fm(P.tensor_m(f, g))) != Q.comp(Q.tensor_m(Fm(f), Fm(g)), psi(sf, sg)))
        r.add("psi_naturality", "(" + c.morphism_name(f) + "," + c.morphism_name(g) + ")");
    }
  for (Id x = 0; x < n; ++x) {
    Id fx = F.obj[x];
    if (Q.comp(psi(P.unit, x), Fm(P.lambda(x))) != Q.lambda(fx)) r.add("psi_left_unit", nm({x}));
    if (Q.comp(psi(x, P.unit), Fm(P.rho(x))) != Q.rho(fx)) r.add("psi_right_unit", nm({x}));
    for (Id y = 0; y < n; ++y) {
      Id fy = F.obj[y];
      if (Q.comp(Q.gamma(fx, fy), psi(x, y)) != Q.comp(psi(y, x), Fm(P.gamma(x, y))))
        r.add("psi_symmetry", nm({x, y}));
      for (Id z = 0; z < n; ++z) {
        Id fz = F.obj[z];
        Id lhs = Q.comp(Q.alpha(fx, fy, fz), Q.id_tensor(fx, psi(y, z)), psi(x, P.tensor(y, z)));
        Id rhs = Q.comp(Q.tensor_id(psi(x, y), fz), psi(P.tensor(x, y), z), Fm(P.alpha(x, y, z)));
        if (lhs != rhs) r.add("psi_associativity", nm({x, y, z}));
      }
    }
  }
  return r;
}

MonoidalFunctor identity_monoidal(const PicPtr& p) {
  MonoidalFunctor f{p, p, identity_functor(p->cat), {}};
  const Id n = static_cast<Id>(p->num_objects());
  for (Id x = 0; x < n; ++x)
    for (Id y = 0; y < n; ++y) f.psi.push_back(p->id(p->tensor(x, y)));
  return f;
}

MonoidalFunctor split_functor(const PicPtr& dom, const PicPtr& cod, const std::vector<int>& on_objects,
                              const std::vector<int>& on_labels) {
  if (!dom->split || !cod->split) throw InputError("split_functor needs split models");
  const auto& A = dom->split->a;
  const auto& B = dom->split->b;
  const auto& A2 = cod->split->a;
  const auto& B2 = cod->split->b;
  if (static_cast<int>(on_objects.size()) != A.size() || static_cast<int>(on_labels.size()) != B.size())
    throw InputError("split_functor: homomorphism tables have the wrong size");
  for (int x = 0; x < A.size(); ++x)
    for (int y = 0; y < A.size(); ++y)
      if (on_objects[A.add(x, y)] != A2.add(on_objects[x], on_objects[y]))
        throw InputError("split_functor: object map is not a homomorphism");
  for (int x = 0; x < B.size(); ++x)
    for (int y = 0; y < B.size(); ++y)
      if (on_labels[B.add(x, y)] != B2.add(on_labels[x], on_labels[y]))
        throw InputError("split_functor: label map is not a homomorphism");
  MonoidalFunctor f{dom, cod, FinFunctor{dom->cat, cod->cat, {}, {}}, {}};
  for (int x = 0; x < A.size(); ++x) f.functor.obj.push_back(on_objects[x]);
  for (int x = 0; x < A.size(); ++x)
    for (int b = 0; b < B.size(); ++b) f.functor.mor.push_back(split_morphism(*cod, on_objects[x], on_labels[b]));
  for (int x = 0; x < A.size(); ++x)
    for (int y = 0; y < A.size(); ++y) f.psi.push_back(cod->id(on_objects[A.add(x, y)]));
  return f;
}

bool is_isomorphism_of_categories(const FinFunctor& f) {
  auto bij = [](const std::vector<Id>& m, std::size_t n) {
    if (m.size() != n) return false;
    std::vector<char> hit(n, 0);
    for (Id v : m) {
      if (v < 0 || static_cast<std::size_t>(v) >= n || hit[v]) return false;
      hit[v] = 1;
    }
    return true;
  };
  return bij(f.obj, f.cod->num_objects()) && bij(f.mor, f.cod->num_morphisms());
}

}  // namespace pictam
