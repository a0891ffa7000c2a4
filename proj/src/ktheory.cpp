#include "pictam/ktheory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>

namespace pictam {

int KObject::bits() const { return __builtin_ctz(static_cast<unsigned>(x.size())); }

std::uint64_t KLevel::morphism_key(Id src, Id tgt, const std::vector<Id>& singletons) const {
  const std::uint64_t M = P->num_morphisms();
  std::uint64_t key = static_cast<std::uint64_t>(src) * objects.size() + static_cast<std::uint64_t>(tgt);
  for (Id h : singletons) key = key * M + static_cast<std::uint64_t>(h);
  return key;
}

Id KLevel::find_object(const KObject& o) const {
  std::vector<Id> key = o.x;
  key.insert(key.end(), o.f.begin(), o.f.end());
  auto it = object_index.find(key);
  return it == object_index.end() ? kNone : it->second;
}

Id KLevel::find_morphism(Id src, Id tgt, const std::vector<Id>& singletons) const {
  auto it = morphism_index.find(morphism_key(src, tgt, singletons));
  return it == morphism_index.end() ? kNone : it->second;
}

ValidationReport validate_k_object(const PicardCategory& p, int n, const KObject& o) {
  ValidationReport r;
  const Subset S = Subset{1} << n;
  if (o.x.size() != S || o.f.size() != static_cast<std::size_t>(S) * S) {
    r.add("k_shape", "tables do not match level " + std::to_string(n));
    return r;
  }
  const Id nobj = static_cast<Id>(p.num_objects()), M = static_cast<Id>(p.num_morphisms());
  for (Subset i = 0; i < S; ++i)
    if (o.x[i] < 0 || o.x[i] >= nobj) {
      r.add("k_dangling", "x" + subset_name(i));
      return r;
    }
  if (o.x[0] != p.unit) r.add("k_unit_object", "x{} is not the unit");
  for (Subset i = 0; i < S; ++i)
    for (Subset j = 0; j < S; ++j) {
      Id f = o.fx(i, j);
      if (i & j) continue;
      std::string w = subset_name(i) + subset_name(j);
      if (f < 0 || f >= M) {
        r.add("k_dangling", "f" + w);
        continue;
      }
      if (p.cat->source(f) != o.x[i | j] || p.cat->target(f) != p.tensor(o.x[i], o.x[j]))
        r.add("k_f_endpoints", "f" + w);
      if (p.cat->inverse(f) == kNone) r.add("k_f_invertible", "f" + w);
    }
  if (!r.ok()) return r;
  for (Subset j = 0; j < S; ++j) {
    if (o.fx(0, j) != p.lambda(o.x[j])) r.add("k_unit_left", "f{}" + subset_name(j));
    if (o.fx(j, 0) != p.rho(o.x[j])) r.add("k_unit_right", "f" + subset_name(j) + "{}");
  }
  for (Subset i = 0; i < S; ++i)
    for (Subset j = 0; j < S; ++j) {
      if (i & j) continue;
      if (p.comp(p.gamma(o.x[i], o.x[j]), o.fx(i, j)) != o.fx(j, i))
        r.add("k_symmetry", subset_name(i) + subset_name(j));
      for (Subset k = 0; k < S; ++k) {
        if ((i & k) || (j & k)) continue;
        Id lhs = p.comp(p.alpha(o.x[i], o.x[j], o.x[k]), p.id_tensor(o.x[i], o.fx(j, k)), o.fx(i, j | k));
        Id rhs = p.comp(p.tensor_id(o.fx(i, j), o.x[k]), o.fx(i | j, k));
        if (lhs != rhs) r.add("k_associativity", subset_name(i) + subset_name(j) + subset_name(k));
      }
    }
  return r;
}

ValidationReport validate_k_morphism(const PicardCategory& p, int n, const KObject& a, const KObject& b,
                                     const std::vector<Id>& H) {
  ValidationReport r;
  const Subset S = Subset{1} << n;
  if (H.size() != S) {
    r.add("k_morphism_shape", "H has the wrong size");
    return r;
  }
  for (Subset i = 0; i < S; ++i)
    if (H[i] < 0 || H[i] >= static_cast<Id>(p.num_morphisms()) || p.cat->source(H[i]) != a.x[i] ||
        p.cat->target(H[i]) != b.x[i]) {
      r.add("k_morphism_endpoints", "H" + subset_name(i));
      return r;
    }
  if (H[0] != p.id(p.unit)) r.add("k_morphism_unit", "H{} is not the identity");
  for (Subset i = 0; i < S; ++i)
    for (Subset j = 0; j < S; ++j) {
      if (i & j) continue;
      if (p.comp(b.fx(i, j), H[i | j]) != p.comp(p.tensor_m(H[i], H[j]), a.fx(i, j)))
        r.add("k_morphism_square", subset_name(i) + subset_name(j));
    }
  return r;
}

namespace {

struct KShape {
  int n;
  Subset S;
  std::vector<Subset> order;                 // nonempty subsets, (size, lex)
  std::vector<std::pair<Subset, Subset>> pairs;  // canonical unordered pairs
  std::vector<std::vector<std::array<Subset, 3>>> checks_at;

  explicit KShape(int n_) : n(n_), S(Subset{1} << n_), order(ordered_subsets(n_)) {
    std::vector<int> pos(S, -1);
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    auto low = [](Subset s) { return s & (~s + 1); };
    for (Subset a : order)
      for (Subset b : order)
        if (!(a & b) && low(a) < low(b)) pairs.push_back({a, b});
    std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& u, const auto& v) {
      if (pos[u.first | u.second] != pos[v.first | v.second]) return pos[u.first | u.second] < pos[v.first | v.second];
      return pos[u.first] < pos[v.first];
    });
    std::vector<int> idx(static_cast<std::size_t>(S) * S, -1);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      idx[pairs[i].first * S + pairs[i].second] = static_cast<int>(i);
      idx[pairs[i].second * S + pairs[i].first] = static_cast<int>(i);
    }
    checks_at.resize(pairs.size());
    for (Subset i : order)
      for (Subset j : order)
        for (Subset k : order) {
          if ((i & j) || (i & k) || (j & k)) continue;
          int m = std::max({idx[j * S + k], idx[i * S + (j | k)], idx[i * S + j], idx[(i | j) * S + k]});
          checks_at[m].push_back({i, j, k});
        }
  }
};

struct KSearch {
  const PicardCategory& p;
  const KShape& shape;
  KObject cur;
  std::mt19937_64* rng = nullptr;
  std::function<bool(const KObject&)> emit;  // return false to stop

  KSearch(const PicardCategory& p_, const KShape& s) : p(p_), shape(s) {
    cur.x.assign(s.S, kNone);
    cur.f.assign(static_cast<std::size_t>(s.S) * s.S, kNone);
    cur.x[0] = p.unit;
  }

  Id& F(Subset i, Subset j) { return cur.f[static_cast<std::size_t>(i) * shape.S + j]; }

  bool cocycle(const std::array<Subset, 3>& t) {
    auto [i, j, k] = t;
    const auto& x = cur.x;
    Id lhs = p.comp(p.alpha(x[i], x[j], x[k]), p.id_tensor(x[i], F(j, k)), F(i, j | k));
    Id rhs = p.comp(p.tensor_id(F(i, j), x[k]), F(i | j, k));
    return lhs == rhs;
  }

  void shuffle(std::vector<Id>& v) {
    if (rng) std::shuffle(v.begin(), v.end(), *rng);
  }

  // returns false when emission asked to stop
  bool x_slot(std::size_t pos) {
    if (pos == shape.order.size()) return f_slot(0);
    Subset I = shape.order[pos];
    std::vector<Id> cands;
    for (Id y = 0; y < static_cast<Id>(p.num_objects()); ++y) {
      bool ok = true;
      if (subset_size(I) >= 2)
        for (Subset a = (I - 1) & I; a && ok; a = (a - 1) & I)
          ok = !p.cat->hom(y, p.tensor(cur.x[a], cur.x[I ^ a])).empty();
      if (ok) cands.push_back(y);
    }
    shuffle(cands);
    for (Id y : cands) {
      cur.x[I] = y;
      if (!x_slot(pos + 1)) return false;
    }
    cur.x[I] = kNone;
    return true;
  }

  bool f_slot(std::size_t idx) {
    if (idx == shape.pairs.size()) return finish();
    auto [a, b] = shape.pairs[idx];
    std::vector<Id> cands = p.cat->hom(cur.x[a | b], p.tensor(cur.x[a], cur.x[b]));
    shuffle(cands);
    for (Id f : cands) {
      F(a, b) = f;
      F(b, a) = p.comp(p.gamma(cur.x[a], cur.x[b]), f);
      bool ok = true;
      for (const auto& t : shape.checks_at[idx])
        if (!cocycle(t)) {
          ok = false;
          break;
        }
      if (ok && !f_slot(idx + 1)) return false;
    }
    F(a, b) = F(b, a) = kNone;
    return true;
  }

  bool finish() {
    for (Subset j = 0; j < shape.S; ++j) {
      F(0, j) = p.lambda(cur.x[j]);
      F(j, 0) = p.rho(cur.x[j]);
    }
    auto rep = validate_k_object(p, shape.n, cur);
    if (!rep.ok()) throw InternalError("enumerated K-object fails validation: " + rep.summary());
    return emit(cur);
  }
};

}  // namespace

std::string k_object_name(const PicardCategory& p, int n, const KObject& o) {
  const auto& c = *p.cat;
  std::vector<std::string> xs, fs;
  for (Subset I : ordered_subsets(n)) xs.push_back(c.object_name(o.x[I]));
  KShape shape(n);
  for (auto [a, b] : shape.pairs) fs.push_back(c.morphism_name(o.fx(a, b)));
  return "x(" + join(xs, ",") + ")f(" + join(fs, ",") + ")";
}

double k_level_estimate(const PicardCategory& p, int n) {
  KShape shape(n);
  std::size_t maxhom = 1;
  for (Id a = 0; a < static_cast<Id>(p.num_objects()); ++a)
    for (Id b = 0; b < static_cast<Id>(p.num_objects()); ++b) maxhom = std::max(maxhom, p.cat->hom(a, b).size());
  return std::pow(static_cast<double>(p.num_objects()), static_cast<double>(shape.order.size())) *
         std::pow(static_cast<double>(maxhom), static_cast<double>(shape.pairs.size()));
}

namespace {

void build_morphisms(KLevel& L, FinCategory::Builder& b, std::vector<Id>& msrc, std::vector<Id>& mtgt) {
  const auto& p = *L.P;
  const int n = L.n;
  const Subset S = Subset{1} << n;
  const auto order = ordered_subsets(n);
  const Id nobj = static_cast<Id>(L.objects.size());
  for (Id s = 0; s < nobj; ++s) {
    const auto& a = L.objects[s];
    for (Id t = 0; t < nobj; ++t) {
      const auto& y = L.objects[t];
      std::vector<const std::vector<Id>*> homs;
      bool empty = false;
      for (int i = 0; i < n && !empty; ++i) {
        homs.push_back(&p.cat->hom(a.x[Subset{1} << i], y.x[Subset{1} << i]));
        empty = homs.back()->empty();
      }
      if (empty) continue;
      std::vector<std::size_t> digit(n, 0);
      while (true) {
        std::vector<Id> H(S, kNone);
        H[0] = p.id(p.unit);
        for (int i = 0; i < n; ++i) H[Subset{1} << i] = (*homs[i])[digit[i]];
        for (Subset I : order) {
          if (subset_size(I) < 2) continue;
          Subset A = I & (~I + 1), B = I ^ A;
          H[I] = p.comp(p.inv(y.fx(A, B)), p.tensor_m(H[A], H[B]), a.fx(A, B));
        }
        if (validate_k_morphism(p, n, a, y, H).ok()) {
          std::vector<Id> single(n);
          std::vector<std::string> hn;
          for (int i = 0; i < n; ++i) {
            single[i] = H[Subset{1} << i];
            hn.push_back(p.cat->morphism_name(single[i]));
          }
          Id m = b.add_morphism("[" + std::to_string(s) + "]H(" + join(hn, ",") + ")[" + std::to_string(t) + "]",
                                s, t);
          L.morphism_index.emplace(L.morphism_key(s, t, single), m);
          L.H.push_back(std::move(H));
          msrc.push_back(s);
          mtgt.push_back(t);
        }
        int i = n - 1;
        while (i >= 0 && ++digit[i] == homs[i]->size()) digit[i--] = 0;
        if (i < 0) break;
      }
    }
  }
}

std::vector<Id> content_key(const KObject& o) {
  std::vector<Id> key = o.x;
  key.insert(key.end(), o.f.begin(), o.f.end());
  return key;
}

}  // namespace

KLevelPtr k_level(const PicPtr& pp, int n, const EnumerationOptions& opts) {
  if (n < 0 || n > 5) throw InputError("K level out of range: " + std::to_string(n));
  const auto& p = *pp;
  auto L = std::make_shared<KLevel>();
  L->n = n;
  L->P = pp;
  L->sampled = opts.sampled;
  L->seed = opts.seed;
  KShape shape(n);
  KSearch search(p, shape);
  std::unordered_map<std::vector<Id>, Id, VecHash> seen;
  auto record = [&](const KObject& o) {
    auto key = content_key(o);
    if (seen.emplace(key, static_cast<Id>(L->objects.size())).second) L->objects.push_back(o);
  };
  if (!opts.sampled) {
    double est = k_level_estimate(p, n);
    if (est > opts.bound)
      throw BoundExceeded("K level " + std::to_string(n) + " estimate " + std::to_string(est) +
                              " exceeds bound " + std::to_string(opts.bound),
                          est);
    search.emit = [&](const KObject& o) {
      record(o);
      return true;
    };
    search.x_slot(0);
  } else {
    if (opts.samples <= 0) throw InputError("sampled enumeration needs a positive sample count");
    std::mt19937_64 rng(opts.seed);
    search.rng = &rng;
    search.emit = [&](const KObject& o) {
      record(o);
      return false;
    };
    const int attempts = opts.samples * 20;
    for (int k = 0; k < attempts && static_cast<int>(L->objects.size()) < opts.samples; ++k) search.x_slot(0);
  }
  L->object_index = std::move(seen);

  FinCategory::Builder b;
  for (const auto& o : L->objects) b.add_object(k_object_name(p, n, o));
  std::vector<Id> msrc, mtgt;
  build_morphisms(*L, b, msrc, mtgt);
  for (Id s = 0; s < static_cast<Id>(L->objects.size()); ++s) {
    std::vector<Id> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = p.id(L->objects[s].x[Subset{1} << i]);
    Id e = L->find_morphism(s, s, ids);
    if (e == kNone) throw InternalError("K level has no identity at object " + std::to_string(s));
    b.set_identity(s, e);
  }
  const KLevel& Lc = *L;
  b.compose_with([&](Id g, Id f) {
    std::vector<Id> single(n);
    for (int i = 0; i < n; ++i) single[i] = p.comp(Lc.H[g][Subset{1} << i], Lc.H[f][Subset{1} << i]);
    Id h = Lc.find_morphism(msrc[f], mtgt[g], single);
    if (h == kNone) throw InternalError("K level is not closed under composition");
    return h;
  });
  L->cat = b.build();
  return L;
}

FinFunctor k_action(const KLevel& from, const KLevel& to, const GammaMap& s) {
  if (s.n != from.n || s.m != to.n) throw InputError("map " + s.name() + " does not match K levels");
  const Subset T = Subset{1} << to.n;
  FinFunctor F{from.cat, to.cat, {}, {}};
  std::vector<Subset> pre(T);
  for (Subset K = 0; K < T; ++K) pre[K] = s.preimage(K);
  for (const auto& o : from.objects) {
    KObject y;
    y.x.resize(T);
    y.f.assign(static_cast<std::size_t>(T) * T, kNone);
    for (Subset K = 0; K < T; ++K) y.x[K] = o.x[pre[K]];
    for (Subset K = 0; K < T; ++K)
      for (Subset L = 0; L < T; ++L)
        if (!(K & L)) y.f[static_cast<std::size_t>(K) * T + L] = o.fx(pre[K], pre[L]);
    Id t = to.find_object(y);
    if (t == kNone) {
      std::string msg = "image of " + from.cat->object_name(F.obj.size()) + " under " + s.name() +
                        " missing from K level " + std::to_string(to.n);
      if (from.sampled || to.sampled) throw InputError(msg + " (sampled level)");
      throw InternalError(msg);
    }
    F.obj.push_back(t);
  }
  for (Id h = 0; h < static_cast<Id>(from.H.size()); ++h) {
    std::vector<Id> single(to.n);
    for (int i = 0; i < to.n; ++i) single[i] = from.H[h][pre[Subset{1} << i]];
    Id g = to.find_morphism(F.obj[from.cat->source(h)], F.obj[from.cat->target(h)], single);
    if (g == kNone) throw InternalError("morphism image under " + s.name() + " missing");
    F.mor.push_back(g);
  }
  return F;
}

KTheory k_theory(const PicPtr& p, int N, const EnumerationOptions& opts) {
  KTheory k;
  auto a = std::make_shared<GammaGroupoid>();
  a->N = N;
  a->label = "K(" + p->label + ")";
  for (int n = 0; n <= N; ++n) {
    k.levels.push_back(k_level(p, n, opts));
    a->levels.push_back(k.levels.back()->cat);
  }
  for (const auto& s : all_gamma_maps_upto(N)) a->action.emplace(s, k_action(*k.levels[s.n], *k.levels[s.m], s));
  k.gamma = a;
  return k;
}

FinFunctor k_of_functor(const MonoidalFunctor& F, const KLevel& from, const KLevel& to) {
  if (from.n != to.n) throw InputError("K levels differ in rank");
  if (F.dom != from.P || F.cod != to.P) throw InputError("monoidal functor does not match the K levels");
  const auto& Q = *F.cod;
  const auto& f = F.functor;
  const std::size_t np = F.dom->num_objects();
  const Subset S = Subset{1} << from.n;
  FinFunctor G{from.cat, to.cat, {}, {}};
  for (const auto& o : from.objects) {
    KObject y;
    y.x.resize(S);
    y.f.assign(static_cast<std::size_t>(S) * S, kNone);
    for (Subset I = 0; I < S; ++I) y.x[I] = f.obj[o.x[I]];
    for (Subset I = 0; I < S; ++I)
      for (Subset J = 0; J < S; ++J)
        if (!(I & J))
          y.f[static_cast<std::size_t>(I) * S + J] = Q.comp(F.psi[o.x[I] * np + o.x[J]], f.mor[o.fx(I, J)]);
    Id t = to.find_object(y);
    if (t == kNone) {
      if (from.sampled || to.sampled) throw InputError("functor image missing from sampled K level");
      throw InternalError("functor image missing from K level " + std::to_string(to.n));
    }
    G.obj.push_back(t);
  }
  for (Id h = 0; h < static_cast<Id>(from.H.size()); ++h) {
    std::vector<Id> single(from.n);
    for (int i = 0; i < from.n; ++i) single[i] = f.mor[from.H[h][Subset{1} << i]];
    Id g = to.find_morphism(G.obj[from.cat->source(h)], G.obj[from.cat->target(h)], single);
    if (g == kNone) throw InternalError("functor image of a K morphism missing");
    G.mor.push_back(g);
  }
  return G;
}

GammaMorphism k_of_monoidal(const MonoidalFunctor& F, const KTheory& from, const KTheory& to) {
  GammaMorphism m{from.gamma, to.gamma, {}};
  for (std::size_t n = 0; n < from.levels.size(); ++n)
    m.level.push_back(k_of_functor(F, *from.levels[n], *to.levels[n]));
  return m;
}

}  // namespace pictam
