#include "pictam/nerve2.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>

namespace pictam {

namespace {

std::string pair_name(int i, int j) { return std::to_string(i) + std::to_string(j); }
std::string triple_name(int i, int j, int k) { return pair_name(i, j) + std::to_string(k); }

std::vector<Id> content_key(const NObject& o) {
  std::vector<Id> key = o.x;
  key.insert(key.end(), o.f.begin(), o.f.end());
  return key;
}

}  // namespace

NObject blank_nerve_object(int n) {
  NObject o;
  o.n = n;
  const std::size_t w = n + 1;
  o.x.assign(w * w, kNone);
  o.f.assign(w * w * w, kNone);
  return o;
}

void fill_degenerate(const PicardCategory& p, NObject& o) {
  const int n = o.n, w = n + 1;
  for (int i = 0; i <= n; ++i) o.x[i * w + i] = p.unit;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      o.f[(i * w + i) * w + j] = p.rho(o.x[i * w + j]);
      o.f[(i * w + j) * w + j] = p.lambda(o.x[i * w + j]);
    }
}

std::uint64_t NLevel::morphism_key(Id src, Id tgt, const std::vector<Id>& steps) const {
  const std::uint64_t M = P->num_morphisms();
  std::uint64_t key = static_cast<std::uint64_t>(src) * objects.size() + static_cast<std::uint64_t>(tgt);
  for (Id h : steps) key = key * M + static_cast<std::uint64_t>(h);
  return key;
}

Id NLevel::find_object(const NObject& o) const {
  auto it = object_index.find(content_key(o));
  return it == object_index.end() ? kNone : it->second;
}

Id NLevel::find_morphism(Id src, Id tgt, const std::vector<Id>& steps) const {
  auto it = morphism_index.find(morphism_key(src, tgt, steps));
  return it == morphism_index.end() ? kNone : it->second;
}

ValidationReport validate_nerve_object(const PicardCategory& p, const NObject& o) {
  ValidationReport r;
  const int n = o.n, w = n + 1;
  if (n < 0 || o.x.size() != static_cast<std::size_t>(w * w) || o.f.size() != static_cast<std::size_t>(w * w * w)) {
    r.add("nerve_shape", "tables do not match the level");
    return r;
  }
  const Id nobj = static_cast<Id>(p.num_objects()), M = static_cast<Id>(p.num_morphisms());
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      if (o.xx(i, j) < 0 || o.xx(i, j) >= nobj) {
        r.add("nerve_dangling", "x" + pair_name(i, j));
        return r;
      }
  for (int i = 0; i <= n; ++i)
    if (o.xx(i, i) != p.unit) r.add("nerve_unit_object", "x" + pair_name(i, i));
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k) {
        Id f = o.fx(i, j, k);
        if (f < 0 || f >= M) {
          r.add("nerve_dangling", "f" + triple_name(i, j, k));
          continue;
        }
        if (p.cat->source(f) != o.xx(i, k) || p.cat->target(f) != p.tensor(o.xx(j, k), o.xx(i, j)))
          r.add("nerve_f_endpoints", "f" + triple_name(i, j, k));
        else if (p.cat->inverse(f) == kNone)
          r.add("nerve_f_invertible", "f" + triple_name(i, j, k));
      }
  if (!r.ok()) return r;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      if (o.fx(i, i, j) != p.rho(o.xx(i, j))) r.add("nerve_unit_right", "f" + triple_name(i, i, j));
      if (o.fx(i, j, j) != p.lambda(o.xx(i, j))) r.add("nerve_unit_left", "f" + triple_name(i, j, j));
    }
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k)
        for (int l = k; l <= n; ++l) {
          Id lhs = p.comp(p.alpha(o.xx(k, l), o.xx(j, k), o.xx(i, j)), p.id_tensor(o.xx(k, l), o.fx(i, j, k)),
                          o.fx(i, k, l));
          Id rhs = p.comp(p.tensor_id(o.fx(j, k, l), o.xx(i, j)), o.fx(i, j, l));
          if (lhs != rhs) r.add("nerve_cocycle", triple_name(i, j, k) + std::to_string(l));
        }
  return r;
}

ValidationReport validate_nerve_morphism(const PicardCategory& p, const NObject& a, const NObject& b,
                                         const std::vector<Id>& H) {
  ValidationReport r;
  const int n = a.n, w = n + 1;
  if (b.n != n || H.size() != static_cast<std::size_t>(w * w)) {
    r.add("nerve_morphism_shape", "H has the wrong size");
    return r;
  }
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      Id h = H[i * w + j];
      if (h < 0 || h >= static_cast<Id>(p.num_morphisms()) || p.cat->source(h) != a.xx(i, j) ||
          p.cat->target(h) != b.xx(i, j)) {
        r.add("nerve_morphism_endpoints", "H" + pair_name(i, j));
        return r;
      }
    }
  for (int i = 0; i <= n; ++i)
    if (H[i * w + i] != p.id(p.unit)) r.add("nerve_morphism_unit", "H" + pair_name(i, i));
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k)
        if (p.comp(b.fx(i, j, k), H[i * w + k]) != p.comp(p.tensor_m(H[j * w + k], H[i * w + j]), a.fx(i, j, k)))
          r.add("nerve_morphism_square", triple_name(i, j, k));
  return r;
}

namespace {

struct NShape {
  int n;
  std::vector<std::pair<int, int>> pairs;          // i < j by (length, i)
  std::vector<std::array<int, 3>> triples;         // i < j < k by (length, i, j)
  std::vector<std::vector<std::array<int, 4>>> checks_at;

  explicit NShape(int n_) : n(n_) {
    for (int len = 1; len <= n; ++len)
      for (int i = 0; i + len <= n; ++i) pairs.push_back({i, i + len});
    for (int len = 2; len <= n; ++len)
      for (int i = 0; i + len <= n; ++i)
        for (int j = i + 1; j < i + len; ++j) triples.push_back({i, j, i + len});
    const int w = n + 1;
    std::vector<int> pos(static_cast<std::size_t>(w) * w * w, -1);
    for (std::size_t t = 0; t < triples.size(); ++t)
      pos[(triples[t][0] * w + triples[t][1]) * w + triples[t][2]] = static_cast<int>(t);
    checks_at.resize(triples.size());
    auto at = [&](int i, int j, int k) { return pos[(i * w + j) * w + k]; };
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l) {
            int m = std::max({at(i, j, k), at(i, k, l), at(j, k, l), at(i, j, l)});
            checks_at[m].push_back({i, j, k, l});
          }
  }
};

struct NSearch {
  const PicardCategory& p;
  const NShape& shape;
  NObject cur;
  std::mt19937_64* rng = nullptr;
  std::function<bool(const NObject&)> emit;

  NSearch(const PicardCategory& p_, const NShape& s) : p(p_), shape(s), cur(blank_nerve_object(s.n)) {
    for (int i = 0; i <= s.n; ++i) cur.x[i * (s.n + 1) + i] = p.unit;
  }

  int w() const { return shape.n + 1; }
  Id& X(int i, int j) { return cur.x[i * w() + j]; }
  Id& F(int i, int j, int k) { return cur.f[(i * w() + j) * w() + k]; }

  void shuffle(std::vector<Id>& v) {
    if (rng) std::shuffle(v.begin(), v.end(), *rng);
  }

  bool x_slot(std::size_t pos) {
    if (pos == shape.pairs.size()) return f_slot(0);
    auto [i, k] = shape.pairs[pos];
    std::vector<Id> cands;
    for (Id y = 0; y < static_cast<Id>(p.num_objects()); ++y) {
      bool ok = true;
      for (int j = i + 1; j < k && ok; ++j) ok = !p.cat->hom(y, p.tensor(X(j, k), X(i, j))).empty();
      if (ok) cands.push_back(y);
    }
    shuffle(cands);
    for (Id y : cands) {
      X(i, k) = y;
      if (!x_slot(pos + 1)) return false;
    }
    X(i, k) = kNone;
    return true;
  }

  bool cocycle(const std::array<int, 4>& q) {
    auto [i, j, k, l] = q;
    Id lhs = p.comp(p.alpha(X(k, l), X(j, k), X(i, j)), p.id_tensor(X(k, l), F(i, j, k)), F(i, k, l));
    Id rhs = p.comp(p.tensor_id(F(j, k, l), X(i, j)), F(i, j, l));
    return lhs == rhs;
  }

  bool f_slot(std::size_t idx) {
    if (idx == shape.triples.size()) return finish();
    auto [i, j, k] = shape.triples[idx];
    std::vector<Id> cands = p.cat->hom(X(i, k), p.tensor(X(j, k), X(i, j)));
    shuffle(cands);
    for (Id f : cands) {
      F(i, j, k) = f;
      bool ok = true;
      for (const auto& q : shape.checks_at[idx])
        if (!cocycle(q)) {
          ok = false;
          break;
        }
      if (ok && !f_slot(idx + 1)) return false;
    }
    F(i, j, k) = kNone;
    return true;
  }

  bool finish() {
    NObject o = cur;
    fill_degenerate(p, o);
    auto rep = validate_nerve_object(p, o);
    if (!rep.ok()) throw InternalError("enumerated nerve object fails validation: " + rep.summary());
    return emit(o);
  }
};

void build_morphisms(NLevel& L, FinCategory::Builder& b, std::vector<Id>& msrc, std::vector<Id>& mtgt) {
  const auto& p = *L.P;
  const int n = L.n, w = n + 1;
  const Id nobj = static_cast<Id>(L.objects.size());
  for (Id s = 0; s < nobj; ++s) {
    const auto& a = L.objects[s];
    for (Id t = 0; t < nobj; ++t) {
      const auto& y = L.objects[t];
      std::vector<const std::vector<Id>*> homs;
      bool empty = false;
      for (int i = 0; i < n && !empty; ++i) {
        homs.push_back(&p.cat->hom(a.xx(i, i + 1), y.xx(i, i + 1)));
        empty = homs.back()->empty();
      }
      if (empty) continue;
      std::vector<std::size_t> digit(n, 0);
      while (true) {
        std::vector<Id> H(static_cast<std::size_t>(w) * w, kNone);
        for (int i = 0; i <= n; ++i) H[i * w + i] = p.id(p.unit);
        for (int i = 0; i < n; ++i) H[i * w + i + 1] = (*homs[i])[digit[i]];
        for (int len = 2; len <= n; ++len)
          for (int i = 0; i + len <= n; ++i) {
            int j = i + 1, k = i + len;
            H[i * w + k] = p.comp(p.inv(y.fx(i, j, k)), p.tensor_m(H[j * w + k], H[i * w + j]), a.fx(i, j, k));
          }
        if (validate_nerve_morphism(p, a, y, H).ok()) {
          std::vector<Id> steps(n);
          std::vector<std::string> hn;
          for (int i = 0; i < n; ++i) {
            steps[i] = H[i * w + i + 1];
            hn.push_back(p.cat->morphism_name(steps[i]));
          }
          Id m = b.add_morphism("[" + std::to_string(s) + "]H(" + join(hn, ",") + ")[" + std::to_string(t) + "]",
                                s, t);
          L.morphism_index.emplace(L.morphism_key(s, t, steps), m);
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

}  // namespace

double nerve_level_estimate(const PicardCategory& p, int n) {
  NShape shape(n);
  std::size_t maxhom = 1;
  for (Id a = 0; a < static_cast<Id>(p.num_objects()); ++a)
    for (Id b = 0; b < static_cast<Id>(p.num_objects()); ++b) maxhom = std::max(maxhom, p.cat->hom(a, b).size());
  return std::pow(static_cast<double>(p.num_objects()), static_cast<double>(shape.pairs.size())) *
         std::pow(static_cast<double>(maxhom), static_cast<double>(shape.triples.size()));
}

std::string nerve_object_name(const PicardCategory& p, const NObject& o) {
  NShape shape(o.n);
  std::vector<std::string> xs, fs;
  for (auto [i, j] : shape.pairs) xs.push_back(p.cat->object_name(o.xx(i, j)));
  for (auto [i, j, k] : shape.triples) fs.push_back(p.cat->morphism_name(o.fx(i, j, k)));
  return "x(" + join(xs, ",") + ")f(" + join(fs, ",") + ")";
}

NLevelPtr nerve_level(const PicPtr& pp, int n, const EnumerationOptions& opts) {
  if (n < 0 || n > 6) throw InputError("nerve level out of range: " + std::to_string(n));
  const auto& p = *pp;
  auto L = std::make_shared<NLevel>();
  L->n = n;
  L->P = pp;
  L->sampled = opts.sampled;
  L->seed = opts.seed;
  NShape shape(n);
  NSearch search(p, shape);
  std::unordered_map<std::vector<Id>, Id, VecHash> seen;
  auto record = [&](const NObject& o) {
    if (seen.emplace(content_key(o), static_cast<Id>(L->objects.size())).second) L->objects.push_back(o);
  };
  if (!opts.sampled) {
    double est = nerve_level_estimate(p, n);
    if (est > opts.bound)
      throw BoundExceeded("nerve level " + std::to_string(n) + " estimate " + std::to_string(est) +
                              " exceeds bound " + std::to_string(opts.bound),
                          est);
    search.emit = [&](const NObject& o) {
      record(o);
      return true;
    };
    search.x_slot(0);
  } else {
    if (opts.samples <= 0) throw InputError("sampled enumeration needs a positive sample count");
    std::mt19937_64 rng(opts.seed);
    search.rng = &rng;
    search.emit = [&](const NObject& o) {
      record(o);
      return false;
    };
    for (int k = 0; k < opts.samples * 20 && static_cast<int>(L->objects.size()) < opts.samples; ++k)
      search.x_slot(0);
  }
  L->object_index = std::move(seen);

  FinCategory::Builder b;
  for (const auto& o : L->objects) b.add_object(nerve_object_name(p, o));
  std::vector<Id> msrc, mtgt;
  build_morphisms(*L, b, msrc, mtgt);
  for (Id s = 0; s < static_cast<Id>(L->objects.size()); ++s) {
    std::vector<Id> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = p.id(L->objects[s].xx(i, i + 1));
    Id e = L->find_morphism(s, s, ids);
    if (e == kNone) throw InternalError("nerve level has no identity at object " + std::to_string(s));
    b.set_identity(s, e);
  }
  const NLevel& Lc = *L;
  const int w = n + 1;
  b.compose_with([&](Id g, Id f) {
    std::vector<Id> steps(n);
    for (int i = 0; i < n; ++i) steps[i] = p.comp(Lc.H[g][i * w + i + 1], Lc.H[f][i * w + i + 1]);
    Id h = Lc.find_morphism(msrc[f], mtgt[g], steps);
    if (h == kNone) throw InternalError("nerve level is not closed under composition");
    return h;
  });
  L->cat = b.build();
  return L;
}

FinFunctor nerve_action(const NLevel& from, const NLevel& to, const DeltaMap& alpha) {
  if (alpha.n != from.n || alpha.m != to.n) throw InputError("map " + alpha.name() + " does not match nerve levels");
  const int m = to.n, wn = from.n + 1, wm = m + 1;
  FinFunctor F{from.cat, to.cat, {}, {}};
  for (const auto& o : from.objects) {
    NObject y = blank_nerve_object(m);
    for (int r = 0; r <= m; ++r)
      for (int s = r; s <= m; ++s) {
        y.x[r * wm + s] = o.xx(alpha(r), alpha(s));
        for (int t = s; t <= m; ++t) y.f[(r * wm + s) * wm + t] = o.fx(alpha(r), alpha(s), alpha(t));
      }
    Id t = to.find_object(y);
    if (t == kNone) {
      std::string msg = "image of " + from.cat->object_name(F.obj.size()) + " under " + alpha.name() +
                        " missing from nerve level " + std::to_string(m);
      if (from.sampled || to.sampled) throw InputError(msg + " (sampled level)");
      throw InternalError(msg);
    }
    F.obj.push_back(t);
  }
  for (Id h = 0; h < static_cast<Id>(from.H.size()); ++h) {
    std::vector<Id> steps(m);
    for (int r = 0; r < m; ++r) steps[r] = from.H[h][alpha(r) * wn + alpha(r + 1)];
    Id g = to.find_morphism(F.obj[from.cat->source(h)], F.obj[from.cat->target(h)], steps);
    if (g == kNone) throw InternalError("morphism image under " + alpha.name() + " missing");
    F.mor.push_back(g);
  }
  return F;
}

Nerve nerve(const PicPtr& p, int N, const EnumerationOptions& opts) {
  Nerve out;
  auto x = std::make_shared<SimplicialCategory>();
  x->N = N;
  for (int n = 0; n <= N; ++n) {
    out.levels.push_back(nerve_level(p, n, opts));
    x->levels.push_back(out.levels.back()->cat);
  }
  for (const auto& a : all_delta_maps_upto(N))
    x->action.emplace(a, nerve_action(*out.levels[a.n], *out.levels[a.m], a));
  out.simplicial = x;
  return out;
}

}  // namespace pictam
