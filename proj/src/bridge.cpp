#include "pictam/bridge.hpp"

#include <algorithm>
#include <random>

namespace pictam {

ConvexDecomposition convex_decomposition(Subset I) {
  ConvexDecomposition d;
  d.set = I;
  Subset cur = 0;
  for (int e = 1; e <= 32 && (I >> (e - 1)); ++e) {
    if (I & (Subset{1} << (e - 1))) {
      cur |= Subset{1} << (e - 1);
    } else if (cur) {
      d.blocks.push_back(cur);
      cur = 0;
    }
  }
  if (cur) d.blocks.push_back(cur);
  return d;
}

namespace {

int lowest(Subset s) { return __builtin_ctz(s) + 1; }
int highest(Subset s) { return 32 - __builtin_clz(s); }

// Binary tensor words over distinct leaves, used to build the canonical
// coherence isomorphism between two bracketings and orderings.
struct Term {
  int leaf = -1;
  Id obj = kNone;
  std::vector<Term> kids;
};

using Leaves = std::vector<std::pair<int, Id>>;

class Coherence {
 public:
  explicit Coherence(const PicardCategory& p) : p_(p) {}

  Term leaf(int id, Id obj) const { return {id, obj, {}}; }
  Term node(Term a, Term b) const {
    Id o = p_.tensor(a.obj, b.obj);
    return {-1, o, {std::move(a), std::move(b)}};
  }
  // items[last] ⊗ (... ⊗ items[0])
  Term nest(std::vector<Term> items) const {
    Term t = std::move(items.front());
    for (std::size_t i = 1; i < items.size(); ++i) t = node(std::move(items[i]), std::move(t));
    return t;
  }

  Id canonical(const Term& from, const Term& to) const {
    Leaves a, b;
    Id na = to_normal(from, a), nb = to_normal(to, b);
    if (a != b) throw InternalError("coherence: words have different leaves");
    return p_.comp(p_.inv(nb), na);
  }

 private:
  Id rn(const Leaves& l, std::size_t from) const {
    Id o = l.back().second;
    for (std::size_t i = l.size() - 1; i-- > from;) o = p_.tensor(l[i].second, o);
    return o;
  }

  Id merge(const Leaves& l, std::size_t from, const Leaves& r) const {
    Id right = rn(r, 0);
    if (from + 1 == l.size()) return p_.id(p_.tensor(l[from].second, right));
    Id a = l[from].second, rest = rn(l, from + 1);
    Id step = p_.inv(p_.alpha(a, rest, right));
    return p_.comp(p_.id_tensor(a, merge(l, from + 1, r)), step);
  }

  Id flatten(const Term& t, Leaves& out) const {
    if (t.kids.empty()) {
      out = {{t.leaf, t.obj}};
      return p_.id(t.obj);
    }
    Leaves l, r;
    Id ml = flatten(t.kids[0], l), mr = flatten(t.kids[1], r);
    Id m = p_.comp(merge(l, 0, r), p_.tensor_m(ml, mr));
    out = l;
    out.insert(out.end(), r.begin(), r.end());
    return m;
  }

  Id to_normal(const Term& t, Leaves& out) const {
    Id m = flatten(t, out);
    const std::size_t n = out.size();
    for (std::size_t pass = 0; pass < n; ++pass)
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (out[i].first < out[i + 1].first) continue;
        Id a = out[i].second, b = out[i + 1].second;
        Id s;
        if (i + 2 == n) {
          s = p_.gamma(a, b);
        } else {
          Id r = rn(out, i + 2);
          s = p_.comp(p_.inv(p_.alpha(b, a, r)), p_.tensor_id(p_.gamma(a, b), r), p_.alpha(a, b, r));
        }
        for (std::size_t j = i; j-- > 0;) s = p_.id_tensor(out[j].second, s);
        m = p_.comp(s, m);
        std::swap(out[i], out[i + 1]);
      }
    return m;
  }

  const PicardCategory& p_;
};

Id nerve_x(const NObject& o, Subset block) { return o.xx(lowest(block) - 1, highest(block)); }

// Split the interval C of nerve data into the consecutive runs cuts:
// x_C -> x_{R_s} ⊗ (... ⊗ x_{R_1}).
Id split_interval(const PicardCategory& p, const NObject& o, const std::vector<Subset>& runs, std::size_t s) {
  if (s == 1) return p.id(nerve_x(o, runs[0]));
  const int a = lowest(runs[0]) - 1, c = highest(runs[s - 2]), b = highest(runs[s - 1]);
  return p.comp(p.id_tensor(nerve_x(o, runs[s - 1]), split_interval(p, o, runs, s - 1)), o.fx(a, c, b));
}

Id extend_f(const PicardCategory& p, const NObject& o, Subset I, Subset J) {
  Coherence coh(p);
  std::vector<Term> block_terms;
  std::vector<Id> block_mors;
  std::vector<Term> i_runs, j_runs;
  for (Subset C : convex_decomposition(I | J).blocks) {
    std::vector<Subset> runs;
    Subset cur = 0;
    bool in_i = false;
    for (int e = lowest(C); e <= highest(C); ++e) {
      Subset bit = Subset{1} << (e - 1);
      bool here = (I & bit) != 0;
      if (cur && here != in_i) {
        runs.push_back(cur);
        cur = 0;
      }
      cur |= bit;
      in_i = here;
    }
    runs.push_back(cur);
    std::vector<Term> leaves;
    for (Subset r : runs) {
      Term t = coh.leaf(lowest(r), nerve_x(o, r));
      leaves.push_back(t);
      ((r & I) ? i_runs : j_runs).push_back(t);
    }
    block_terms.push_back(coh.nest(leaves));
    block_mors.push_back(split_interval(p, o, runs, runs.size()));
  }
  Id S = block_mors.front();
  for (std::size_t i = 1; i < block_mors.size(); ++i) S = p.tensor_m(block_mors[i], S);
  Term t1 = coh.nest(block_terms);
  Term t2 = coh.node(coh.nest(i_runs), coh.nest(j_runs));
  return p.comp(coh.canonical(t1, t2), S);
}

Id nested_tensor_obj(const PicardCategory& p, const std::vector<Id>& items) {
  Id o = items.front();
  for (std::size_t i = 1; i < items.size(); ++i) o = p.tensor(items[i], o);
  return o;
}

Id nested_tensor_mor(const PicardCategory& p, const std::vector<Id>& items) {
  Id m = items.front();
  for (std::size_t i = 1; i < items.size(); ++i) m = p.tensor_m(items[i], m);
  return m;
}

KObject extend_object(const PicardCategory& p, const NObject& o) {
  const int n = o.n;
  const Subset S = Subset{1} << n;
  KObject y;
  y.x.assign(S, kNone);
  y.f.assign(static_cast<std::size_t>(S) * S, kNone);
  y.x[0] = p.unit;
  for (Subset I = 1; I < S; ++I) {
    std::vector<Id> parts;
    for (Subset B : convex_decomposition(I).blocks) parts.push_back(nerve_x(o, B));
    y.x[I] = nested_tensor_obj(p, parts);
  }
  for (Subset I = 0; I < S; ++I)
    for (Subset J = 0; J < S; ++J) {
      if (I & J) continue;
      Id f;
      if (I == 0) f = p.lambda(y.x[J]);
      else if (J == 0) f = p.rho(y.x[I]);
      else f = extend_f(p, o, I, J);
      y.f[static_cast<std::size_t>(I) * S + J] = f;
    }
  return y;
}

std::vector<Id> singleton_ids(const PicardCategory& p, const KObject& a, int n) {
  std::vector<Id> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = p.id(a.x[Subset{1} << i]);
  return ids;
}

}  // namespace

FinFunctor forget_U(const KLevel& k, const NLevel& nv) {
  if (k.n != nv.n || k.P != nv.P) throw InputError("forget_U: levels do not match");
  const int n = k.n, w = n + 1;
  FinFunctor U{k.cat, nv.cat, {}, {}};
  for (const auto& a : k.objects) {
    NObject y = blank_nerve_object(n);
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        y.x[i * w + j] = a.x[interval(i + 1, j)];
        for (int l = j; l <= n; ++l) y.f[(i * w + j) * w + l] = a.fx(interval(j + 1, l), interval(i + 1, j));
      }
    Id t = nv.find_object(y);
    if (t == kNone) {
      if (k.sampled || nv.sampled) throw InputError("forget_U image missing from sampled nerve level");
      throw InternalError("forget_U image of " + k.cat->object_name(U.obj.size()) + " is not a nerve object");
    }
    U.obj.push_back(t);
  }
  for (Id h = 0; h < static_cast<Id>(k.H.size()); ++h) {
    std::vector<Id> steps(n);
    for (int i = 0; i < n; ++i) steps[i] = k.H[h][Subset{1} << i];
    Id g = nv.find_morphism(U.obj[k.cat->source(h)], U.obj[k.cat->target(h)], steps);
    if (g == kNone) throw InternalError("forget_U image of a morphism missing");
    U.mor.push_back(g);
  }
  return U;
}

FinFunctor extend_F(const NLevel& nv, const KLevel& k) {
  if (k.n != nv.n || k.P != nv.P) throw InputError("extend_F: levels do not match");
  const auto& p = *k.P;
  const int n = k.n, w = n + 1;
  const Subset S = Subset{1} << n;
  FinFunctor F{nv.cat, k.cat, {}, {}};
  for (const auto& o : nv.objects) {
    KObject y = extend_object(p, o);
    Id t = k.find_object(y);
    if (t == kNone) {
      auto rep = validate_k_object(p, n, y);
      std::string what = rep.ok() ? "missing from K level" : rep.summary();
      if (rep.ok() && (k.sampled || nv.sampled)) throw InputError("extend_F image missing from sampled K level");
      throw InternalError("extend_F image of " + nv.cat->object_name(F.obj.size()) + ": " + what);
    }
    F.obj.push_back(t);
  }
  for (Id h = 0; h < static_cast<Id>(nv.H.size()); ++h) {
    std::vector<Id> full(S);
    full[0] = p.id(p.unit);
    for (Subset I = 1; I < S; ++I) {
      std::vector<Id> parts;
      for (Subset B : convex_decomposition(I).blocks) parts.push_back(nv.H[h][(lowest(B) - 1) * w + highest(B)]);
      full[I] = nested_tensor_mor(p, parts);
    }
    std::vector<Id> single(n);
    for (int i = 0; i < n; ++i) single[i] = full[Subset{1} << i];
    Id g = k.find_morphism(F.obj[nv.cat->source(h)], F.obj[nv.cat->target(h)], single);
    if (g == kNone || k.H[g] != full) throw InternalError("extend_F image of a morphism is not a K morphism");
    F.mor.push_back(g);
  }
  return F;
}

std::vector<Id> eta_family(const PicardCategory& p, int n, const KObject& a) {
  const Subset S = Subset{1} << n;
  std::vector<Id> H(S);
  H[0] = p.id(p.unit);
  for (Subset I = 1; I < S; ++I) {
    auto blocks = convex_decomposition(I).blocks;
    if (blocks.size() == 1) {
      H[I] = p.id(a.x[I]);
      continue;
    }
    Subset last = blocks.back(), rest = I ^ last;
    H[I] = p.comp(p.id_tensor(a.x[last], H[rest]), a.fx(last, rest));
  }
  return H;
}

NatTransformation eta(const KLevel& k, const FinFunctor& U, const FinFunctor& F) {
  NatTransformation e{identity_functor(k.cat), compose_functors(F, U), {}};
  const auto& p = *k.P;
  for (Id a = 0; a < static_cast<Id>(k.objects.size()); ++a) {
    Id c = k.find_morphism(a, e.target.obj[a], singleton_ids(p, k.objects[a], k.n));
    if (c == kNone || k.H[c] != eta_family(p, k.n, k.objects[a]))
      throw InternalError("eta component at " + k.cat->object_name(a) + " is not a K morphism");
    e.components.push_back(c);
  }
  return e;
}

SampleVerdict verify_eta_sampled(const KLevel& k, const NatTransformation& e, std::uint64_t seed, int draws) {
  SampleVerdict out;
  out.seed = seed;
  const auto& c = *k.cat;
  const auto& p = *k.P;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Id> pick(0, static_cast<Id>(c.num_morphisms()) - 1);
  for (int d = 0; d < draws; ++d) {
    Id h = pick(rng);
    Id a = c.source(h), b = c.target(h);
    ++out.draws;
    if (k.H[e.components[a]] != eta_family(p, k.n, k.objects[a])) {
      out.verdict = Verdict::fail("component formula at " + c.object_name(a));
      return out;
    }
    if (c.compose(e.components[b], e.source.mor[h]) != c.compose(e.target.mor[h], e.components[a])) {
      out.verdict = Verdict::fail("naturality square at " + c.morphism_name(h));
      return out;
    }
  }
  return out;
}

Verdict u_naturality(const KTheory& k, const Nerve& nv, const std::vector<FinFunctor>& U) {
  const int N = static_cast<int>(U.size()) - 1;
  for (const auto& a : all_delta_maps_upto(N)) {
    auto lhs = compose_functors(nv.simplicial->act(a), U[a.n]);
    auto rhs = compose_functors(U[a.m], k.gamma->act(phi(a)));
    if (!same_functor(lhs, rhs)) return Verdict::fail("square fails for " + a.name());
  }
  return Verdict::pass();
}

const char* policy_name(ChoicePolicy p) { return p == ChoicePolicy::min_id ? "min" : "max"; }

QuasiInverse choose_segal_inverse(const GammaGroupoid& a, int k, ChoicePolicy policy) {
  if (k < 1 || k > a.N) throw InputError("no level <" + std::to_string(k) + "> to invert");
  QuasiInverse q;
  q.k = k;
  q.policy = policy;
  q.S = segal_functor(a, k);
  auto v = is_equivalence(q.S);
  if (!v) throw InputError("Segal functor at <" + std::to_string(k) + "> is not an equivalence: " + v.witness);
  const auto& Ak = *a.levels[k];
  const auto& Pk = *q.S.cod;
  const std::uint64_t na = Ak.num_objects(), mp = Pk.num_morphisms();
  std::unordered_map<std::uint64_t, Id> lift;
  for (Id g = 0; g < static_cast<Id>(Ak.num_morphisms()); ++g)
    lift.emplace((static_cast<std::uint64_t>(Ak.source(g)) * na + Ak.target(g)) * mp + q.S.mor[g], g);
  auto lift_of = [&](Id src, Id tgt, Id m) {
    auto it = lift.find((static_cast<std::uint64_t>(src) * na + tgt) * mp + m);
    if (it == lift.end()) throw InternalError("Segal functor is not full");
    return it->second;
  };
  const Id nt = static_cast<Id>(Pk.num_objects());
  std::vector<Id> connect(nt);
  q.T = FinFunctor{q.S.cod, a.levels[k], std::vector<Id>(nt, kNone), {}};
  for (Id t = 0; t < nt; ++t) {
    for (Id i = 0; i < static_cast<Id>(na); ++i) {
      Id x = policy == ChoicePolicy::min_id ? i : static_cast<Id>(na) - 1 - i;
      const auto& hom = Pk.hom(q.S.obj[x], t);
      if (hom.empty()) continue;
      q.T.obj[t] = x;
      if (q.S.obj[x] == t) connect[t] = Pk.identity(t);
      else connect[t] = policy == ChoicePolicy::min_id ? hom.front() : hom.back();
      break;
    }
    if (q.T.obj[t] == kNone) throw InternalError("Segal functor is not essentially surjective");
    q.counit.push_back(Pk.inverse(connect[t]));
  }
  for (Id h = 0; h < static_cast<Id>(Pk.num_morphisms()); ++h) {
    Id s = Pk.source(h), t = Pk.target(h);
    Id m = Pk.compose(Pk.inverse(connect[t]), Pk.compose(h, connect[s]));
    q.T.mor.push_back(lift_of(q.T.obj[s], q.T.obj[t], m));
  }
  for (Id x = 0; x < static_cast<Id>(na); ++x) {
    Id t = q.S.obj[x];
    q.unit.push_back(lift_of(x, q.T.obj[t], q.counit[t]));
  }
  return q;
}

Verdict verify_quasi_inverse(const QuasiInverse& q) {
  auto rt = validate_functor(q.T);
  if (!rt.ok()) return Verdict::fail("T is not a functor: " + rt.summary());
  auto v1 = verify_nat_iso(identity_functor(q.S.dom), compose_functors(q.T, q.S), q.unit);
  if (!v1) return Verdict::fail("unit: " + v1.witness);
  auto v2 = verify_nat_iso(identity_functor(q.S.cod), compose_functors(q.S, q.T), q.counit);
  if (!v2) return Verdict::fail("counit: " + v2.witness);
  return Verdict::pass();
}

Picardization picardize(const GammaPtr& ap, ChoicePolicy policy) {
  const auto& A = *ap;
  if (A.N < 3) throw InputError("picardize needs levels up to <3>");
  if (A.levels[0]->num_objects() != 1) throw InputError("picardize needs a terminal level <0>");
  Picardization m;
  m.source = ap;
  m.q2 = choose_segal_inverse(A, 2, policy);
  m.q3 = choose_segal_inverse(A, 3, policy);
  auto P = std::make_shared<PicardCategory>();
  const auto& C = *A.levels[1];
  const Id n = static_cast<Id>(C.num_objects()), M = static_cast<Id>(C.num_morphisms());
  const auto& Am = A.act(gamma_mult());
  P->cat = A.levels[1];
  P->label = "M(" + A.label + ")";
  P->unit = A.act(gamma_unit()).obj[0];
  for (Id t = 0; t < n * n; ++t) P->tensor_obj.push_back(Am.obj[m.q2.T.obj[t]]);
  for (Id h = 0; h < M * M; ++h) P->tensor_mor.push_back(Am.mor[m.q2.T.mor[h]]);
  const auto& A2 = *A.levels[2];
  for (Id a = 0; a < static_cast<Id>(A2.num_objects()); ++a) m.sigma.push_back(Am.mor[m.q2.unit[a]]);

  const auto& i1 = A.act(gamma_iota(1));
  const auto& i2 = A.act(gamma_iota(2));
  for (Id x = 0; x < n; ++x) {
    P->right_unit.push_back(m.sigma[i1.obj[x]]);
    P->left_unit.push_back(m.sigma[i2.obj[x]]);
  }

  const auto& P2 = *m.q2.S.cod;
  const auto& tau = A.act(gamma_twist());
  P->sym.assign(static_cast<std::size_t>(n) * n, kNone);
  for (Id x = 0; x < n; ++x)
    for (Id y = 0; y < n; ++y) {
      Id t = x * n + y, b = m.q2.T.obj[t];
      Id e = P2.inverse(m.q2.counit[t]);
      Id e1 = e / M, e2 = e % M;
      P->sym[t] = P->comp(P->tensor_m(e2, e1), P->comp(m.sigma[tau.obj[b]], P->inv(m.sigma[b])),
                          P->inv(P->tensor_m(e1, e2)));
    }
  for (Id a = 0; a < static_cast<Id>(A2.num_objects()); ++a) {
    Id s = m.q2.S.obj[a];
    if (P->comp(P->sym[s], m.sigma[a]) != m.sigma[tau.obj[a]])
      throw InternalError("symmetry pasting equation has no solution at " + A2.object_name(a));
  }

  const auto& P3 = *m.q3.S.cod;
  const auto& mu12_3 = A.act(gamma_mu(3, 0b011, 0b100));
  const auto& mu1_2 = A.act(gamma_mu(3, 0b001, 0b010));
  const auto& mu1_23 = A.act(gamma_mu(3, 0b001, 0b110));
  const auto& mu2_3 = A.act(gamma_mu(3, 0b010, 0b100));
  P->assoc.assign(static_cast<std::size_t>(n) * n * n, kNone);
  for (Id t = 0; t < n * n * n; ++t) {
    Id b = m.q3.T.obj[t];
    Id e = P3.inverse(m.q3.counit[t]);
    Id e1 = e / (M * M), e2 = (e / M) % M, e3 = e % M;
    Id s = m.q3.S.obj[b];
    Id s1 = s / (n * n), s3 = s % n;
    Id R = P->comp(P->tensor_m(P->tensor_m(e1, e2), e3),
                   P->comp(P->tensor_id(m.sigma[mu1_2.obj[b]], s3), m.sigma[mu12_3.obj[b]]));
    Id L = P->comp(P->tensor_m(e1, P->tensor_m(e2, e3)),
                   P->comp(P->id_tensor(s1, m.sigma[mu2_3.obj[b]]), m.sigma[mu1_23.obj[b]]));
    P->assoc[t] = P->comp(R, P->inv(L));
  }
  m.pic = P;
  return m;
}

MonoidalFunctor picardization_to_original(const Picardization& m, const KTheory& k) {
  const auto& L1 = *k.levels.at(1);
  const auto& L2 = *k.levels.at(2);
  if (m.source != k.gamma) throw InputError("picardization is not of this K-theory");
  const auto& P = *L1.P;
  MonoidalFunctor F;
  F.dom = m.pic;
  F.cod = L1.P;
  F.functor = FinFunctor{m.pic->cat, P.cat, {}, {}};
  for (const auto& o : L1.objects) F.functor.obj.push_back(o.x[1]);
  for (const auto& H : L1.H) F.functor.mor.push_back(H[1]);
  const Id n = static_cast<Id>(m.pic->num_objects()), M = static_cast<Id>(m.pic->num_morphisms());
  const auto& P2 = *m.q2.S.cod;
  for (Id t = 0; t < n * n; ++t) {
    Id c = m.q2.T.obj[t];
    Id e = P2.inverse(m.q2.counit[t]);
    Id e1 = e / M, e2 = e % M;
    F.psi.push_back(P.comp(P.tensor_m(F.functor.mor[e1], F.functor.mor[e2]), L2.objects[c].fx(1, 2)));
  }
  return F;
}

Verdict tensor_policies_isomorphic(const Picardization& a, const Picardization& b) {
  if (a.source != b.source || a.pic->cat != b.pic->cat) return Verdict::fail("different underlying categories");
  const auto& A = *a.source;
  const auto& Am = A.act(gamma_mult());
  const auto& A2 = *A.levels[2];
  const auto& P2 = *a.q2.S.cod;
  std::vector<Id> comps;
  for (Id t = 0; t < static_cast<Id>(P2.num_objects()); ++t) {
    Id target = P2.compose(b.q2.counit[t], P2.inverse(a.q2.counit[t]));
    Id g = kNone;
    for (Id h : A2.hom(a.q2.T.obj[t], b.q2.T.obj[t]))
      if (a.q2.S.mor[h] == target) {
        g = h;
        break;
      }
    if (g == kNone) return Verdict::fail("no lift between the chosen preimages of " + P2.object_name(t));
    comps.push_back(Am.mor[g]);
  }
  FinFunctor ta{a.q2.S.cod, a.pic->cat, a.pic->tensor_obj, a.pic->tensor_mor};
  FinFunctor tb{a.q2.S.cod, b.pic->cat, b.pic->tensor_obj, b.pic->tensor_mor};
  return verify_nat_iso(ta, tb, comps);
}

GammaMorphism zeta(const Picardization& m, const KTheory& target) {
  const auto& A = *m.source;
  if (static_cast<int>(target.levels.size()) != A.N + 1) throw InputError("zeta: truncations differ");
  if (target.levels[0]->P != m.pic) throw InputError("zeta: target is not the K-theory of this picardization");
  const auto& p = *m.pic;
  GammaMorphism z{m.source, target.gamma, {}};
  for (int n = 0; n <= A.N; ++n) {
    const auto& L = *target.levels[n];
    const Subset S = Subset{1} << n;
    std::vector<const FinFunctor*> nu(S);
    std::vector<const FinFunctor*> mu(static_cast<std::size_t>(S) * S, nullptr);
    for (Subset I = 0; I < S; ++I) nu[I] = &A.act(gamma_nu(n, I));
    for (Subset I = 0; I < S; ++I)
      for (Subset J = 0; J < S; ++J)
        if (!(I & J)) mu[I * S + J] = &A.act(gamma_mu(n, I, J));
    FinFunctor F{A.levels[n], L.cat, {}, {}};
    for (Id x = 0; x < static_cast<Id>(A.levels[n]->num_objects()); ++x) {
      KObject y;
      y.x.resize(S);
      y.f.assign(static_cast<std::size_t>(S) * S, kNone);
      for (Subset I = 0; I < S; ++I) y.x[I] = nu[I]->obj[x];
      for (Subset I = 0; I < S; ++I)
        for (Subset J = 0; J < S; ++J)
          if (!(I & J)) y.f[I * S + J] = m.sigma[mu[I * S + J]->obj[x]];
      Id t = L.find_object(y);
      if (t == kNone) {
        auto rep = validate_k_object(p, n, y);
        if (rep.ok() && L.sampled) throw InputError("zeta image missing from sampled K level");
        throw InternalError("zeta image of " + A.levels[n]->object_name(x) + ": " +
                            (rep.ok() ? std::string("missing from K level") : rep.summary()));
      }
      F.obj.push_back(t);
    }
    for (Id h = 0; h < static_cast<Id>(A.levels[n]->num_morphisms()); ++h) {
      std::vector<Id> full(S);
      for (Subset I = 0; I < S; ++I) full[I] = nu[I]->mor[h];
      std::vector<Id> single(n);
      for (int i = 0; i < n; ++i) single[i] = full[Subset{1} << i];
      Id g = L.find_morphism(F.obj[A.levels[n]->source(h)], F.obj[A.levels[n]->target(h)], single);
      if (g == kNone || L.H[g] != full)
        throw InternalError("zeta image of " + A.levels[n]->morphism_name(h) + " is not a K morphism");
      F.mor.push_back(g);
    }
    z.level.push_back(std::move(F));
  }
  return z;
}

MonoidalFunctor picardize_morphism(const GammaMorphism& F, const Picardization& ma, const Picardization& mb) {
  if (F.dom != ma.source || F.cod != mb.source) throw InputError("picardize_morphism: endpoints differ");
  const auto& PA = *ma.pic;
  const auto& PB = *mb.pic;
  const auto& F1 = F.level.at(1);
  const auto& F2 = F.level.at(2);
  MonoidalFunctor out;
  out.dom = ma.pic;
  out.cod = mb.pic;
  out.functor = FinFunctor{PA.cat, PB.cat, F1.obj, F1.mor};
  const Id n = static_cast<Id>(PA.num_objects()), M = static_cast<Id>(PA.num_morphisms());
  const auto& P2 = *ma.q2.S.cod;
  for (Id t = 0; t < n * n; ++t) {
    Id a = ma.q2.T.obj[t];
    Id e = P2.inverse(ma.q2.counit[t]);
    Id e1 = e / M, e2 = e % M;
    Id psi = PB.comp(PB.tensor_m(F1.mor[e1], F1.mor[e2]),
                     PB.comp(mb.sigma[F2.obj[a]],
                             PB.comp(F1.mor[PA.inv(ma.sigma[a])], F1.mor[PA.inv(PA.tensor_m(e1, e2))])));
    out.psi.push_back(psi);
  }
  const auto& A2 = *ma.source->levels[2];
  for (Id a = 0; a < static_cast<Id>(A2.num_objects()); ++a)
    if (PB.comp(out.psi[ma.q2.S.obj[a]], F1.mor[ma.sigma[a]]) != mb.sigma[F2.obj[a]])
      throw InternalError("compatibility pasting equation has no solution at " + A2.object_name(a));
  return out;
}

Verdict zeta_naturality(const GammaMorphism& F, const MonoidalFunctor& MF, const GammaMorphism& zeta_a,
                        const GammaMorphism& zeta_b, const KTheory& kma, const KTheory& kmb) {
  for (std::size_t n = 0; n < F.level.size(); ++n) {
    auto lhs = compose_functors(zeta_b.level[n], F.level[n]);
    auto rhs = compose_functors(k_of_functor(MF, *kma.levels[n], *kmb.levels[n]), zeta_a.level[n]);
    if (!same_functor(lhs, rhs)) return Verdict::fail("square fails at level <" + std::to_string(n) + ">");
  }
  return Verdict::pass();
}

}  // namespace pictam
