#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "pictam/tamsamani.hpp"

namespace pictam {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

std::vector<int> with_front(int s, const std::vector<int>& k) {
  std::vector<int> out{s};
  out.insert(out.end(), k.begin(), k.end());
  return out;
}

std::vector<int> with_back(const std::vector<int>& k, int s) {
  std::vector<int> out = k;
  out.push_back(s);
  return out;
}

bool is_bijection(const std::vector<int>& m, std::size_t cod_size) {
  if (m.size() != cod_size) return false;
  std::vector<char> hit(cod_size, 0);
  for (int v : m) {
    if (v < 0 || static_cast<std::size_t>(v) >= cod_size || hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

std::string level_name(const std::vector<int>& k) {
  std::string out = "(";
  for (std::size_t i = 0; i < k.size(); ++i) out += (i ? "," : "") + std::to_string(k[i]);
  return out + ")";
}

// Classes of level-0 elements of a truncated simplicial set under the
// isomorphism relation of tau_1: level-1 elements are taken modulo the
// congruence generated by level-2 composition relations.
std::vector<int> tau1_classes(std::size_t n0, const std::vector<int>& src, const std::vector<int>& tgt,
                              const std::vector<int>& s0, const std::vector<int>& d0,
                              const std::vector<int>& d1, const std::vector<int>& d2) {
  const std::size_t n1 = src.size(), n2 = d0.size();
  UnionFind mor(n1);
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<int, int>, int> comp;
    for (std::size_t t = 0; t < n2; ++t) {
      auto key = std::make_pair(mor.find(d2[t]), mor.find(d0[t]));
      auto [it, fresh] = comp.emplace(key, d1[t]);
      if (!fresh && mor.unite(it->second, d1[t])) changed = true;
    }
  }
  // Pairs (f, g) with g∘f an identity.
  std::map<std::pair<int, int>, bool> left_inverse;
  for (std::size_t t = 0; t < n2; ++t) {
    int f = d2[t], g = d0[t];
    int v0 = src[f];
    if (mor.find(d1[t]) == mor.find(s0[v0])) left_inverse[{mor.find(f), mor.find(g)}] = true;
  }
  UnionFind obj(n0);
  for (const auto& [fg, unused] : left_inverse) {
    (void)unused;
    if (left_inverse.count({fg.second, fg.first})) {
      // any representative of the class carries its endpoints
      for (std::size_t f = 0; f < n1; ++f)
        if (mor.find(static_cast<int>(f)) == fg.first) {
          obj.unite(src[f], tgt[f]);
          break;
        }
    }
  }
  std::vector<int> cls(n0, -1), root(n0, -1);
  int next = 0;
  for (std::size_t x = 0; x < n0; ++x) {
    int r = obj.find(static_cast<int>(x));
    if (root[r] < 0) root[r] = next++;
    cls[x] = root[r];
  }
  return cls;
}

struct Gen {
  int c;
  bool face;
  int i;
};

// Apply a generator; returns {level, element} or {npos, -1} when undefined.
std::pair<std::size_t, int> apply_gen(const MultiSimplicialSet& x, const Gen& g, std::size_t level, int e) {
  auto k = x.multi_index(level);
  if (g.face) {
    if (k[g.c] < 1 || g.i > k[g.c]) return {std::size_t(-1), -1};
    return {x.shifted(level, g.c, -1), x.face(g.c, level, g.i)[e]};
  }
  if (k[g.c] + 1 > x.truncation() || g.i > k[g.c]) return {std::size_t(-1), -1};
  return {x.shifted(level, g.c, +1), x.degeneracy(g.c, level, g.i)[e]};
}

std::vector<Gen> generators_at(const MultiSimplicialSet& x, std::size_t level) {
  std::vector<Gen> out;
  auto k = x.multi_index(level);
  for (int c = 0; c < x.dim(); ++c) {
    if (k[c] >= 1)
      for (int i = 0; i <= k[c]; ++i) out.push_back({c, true, i});
    if (k[c] + 1 <= x.truncation())
      for (int i = 0; i <= k[c]; ++i) out.push_back({c, false, i});
  }
  return out;
}

std::string gen_name(const Gen& g) {
  return std::string(g.face ? "d" : "s") + std::to_string(g.i) + "@" + std::to_string(g.c);
}

}  // namespace

MultiSimplicialSet::MultiSimplicialSet(int dim, int truncation) : dim_(dim), N_(truncation) {
  if (dim < 0 || truncation < 0) throw InputError("negative dimension or truncation");
  std::size_t n = 1;
  for (int c = 0; c < dim; ++c) n *= static_cast<std::size_t>(truncation + 1);
  elems_.assign(n, {});
}

std::size_t MultiSimplicialSet::level_index(const std::vector<int>& k) const {
  if (static_cast<int>(k.size()) != dim_) throw InputError("multi-index of wrong dimension");
  std::size_t idx = 0;
  for (int v : k) {
    if (v < 0 || v > N_) throw InputError("multi-index beyond truncation");
    idx = idx * static_cast<std::size_t>(N_ + 1) + static_cast<std::size_t>(v);
  }
  return idx;
}

std::vector<int> MultiSimplicialSet::multi_index(std::size_t level) const {
  std::vector<int> k(dim_);
  for (int c = dim_ - 1; c >= 0; --c) {
    k[c] = static_cast<int>(level % static_cast<std::size_t>(N_ + 1));
    level /= static_cast<std::size_t>(N_ + 1);
  }
  return k;
}

std::size_t MultiSimplicialSet::shifted(std::size_t level, int c, int delta) const {
  std::size_t stride = 1;
  for (int i = dim_ - 1; i > c; --i) stride *= static_cast<std::size_t>(N_ + 1);
  return static_cast<std::size_t>(static_cast<long long>(level) + delta * static_cast<long long>(stride));
}

void MultiSimplicialSet::allocate_structure() {
  face_.assign(dim_, std::vector<std::vector<std::vector<int>>>(elems_.size()));
  degen_.assign(dim_, std::vector<std::vector<std::vector<int>>>(elems_.size()));
  for (std::size_t l = 0; l < elems_.size(); ++l) {
    auto k = multi_index(l);
    for (int c = 0; c < dim_; ++c) {
      if (k[c] >= 1) face_[c][l].assign(k[c] + 1, std::vector<int>(elems_[l].size(), -1));
      if (k[c] + 1 <= N_) degen_[c][l].assign(k[c] + 1, std::vector<int>(elems_[l].size(), -1));
    }
  }
}

int MultiSimplicialSet::act(int c, const DeltaMap& alpha, std::size_t level, int e) const {
  std::size_t cur = level;
  for (const auto& st : simplicial_word(alpha)) {
    if (st.face) {
      e = face(c, cur, st.index)[e];
      cur = shifted(cur, c, -1);
    } else {
      e = degeneracy(c, cur, st.index)[e];
      cur = shifted(cur, c, +1);
    }
    if (e < 0) return -1;
  }
  return e;
}

std::vector<int> MultiSimplicialSet::act_level(int c, const DeltaMap& alpha, std::size_t level) const {
  if (multi_index(level)[c] != alpha.n) throw InputError("act_level: rank mismatch");
  auto word = simplicial_word(alpha);
  std::vector<int> out(size(level));
  for (std::size_t e = 0; e < out.size(); ++e) {
    std::size_t cur = level;
    int v = static_cast<int>(e);
    for (const auto& st : word) {
      if (v < 0) break;
      if (st.face) {
        v = face(c, cur, st.index)[v];
        cur = shifted(cur, c, -1);
      } else {
        v = degeneracy(c, cur, st.index)[v];
        cur = shifted(cur, c, +1);
      }
    }
    out[e] = v;
  }
  return out;
}

ValidationReport validate_structure(const MultiSimplicialSet& x) {
  ValidationReport r;
  for (std::size_t l = 0; l < x.num_levels(); ++l) {
    for (const auto& g : generators_at(x, l)) {
      std::size_t tl = g.face ? x.shifted(l, g.c, -1) : x.shifted(l, g.c, +1);
      const auto& tab = g.face ? x.face(g.c, l, g.i) : x.degeneracy(g.c, l, g.i);
      if (tab.size() != x.size(l)) {
        r.add("structure_table_size", gen_name(g) + " at " + level_name(x.multi_index(l)));
        continue;
      }
      for (int v : tab)
        if (v < 0 || static_cast<std::size_t>(v) >= x.size(tl)) {
          r.add("structure_dangling", gen_name(g) + " at " + level_name(x.multi_index(l)));
          break;
        }
    }
  }
  if (!r.ok()) return r;

  // Simplicial identities within each coordinate, commutation across.
  for (std::size_t l = 0; l < x.num_levels(); ++l) {
    auto gens = generators_at(x, l);
    for (int e = 0; e < static_cast<int>(x.size(l)); ++e) {
      for (const auto& a : gens) {
        auto [la, ea] = apply_gen(x, a, l, e);
        for (const auto& b : generators_at(x, la)) {
          auto [lab, eab] = apply_gen(x, b, la, ea);
          // b∘a must equal the rewritten pair, when the identity applies.
          if (a.c != b.c) {
            Gen a2{a.c, a.face, a.i}, b2{b.c, b.face, b.i};
            auto [lb, eb] = apply_gen(x, b2, l, e);
            if (lb == std::size_t(-1)) continue;
            auto [lba, eba] = apply_gen(x, a2, lb, eb);
            if (lba == std::size_t(-1)) continue;
            if (lba != lab || eba != eab)
              r.add("cross_coordinate_commutation",
                    gen_name(a) + "," + gen_name(b) + " at " + level_name(x.multi_index(l)) + ":" +
                        x.elements(l)[e]);
            continue;
          }
          int c = a.c;
          // a applied first, then b. Classify (b, a) = (outer, inner).
          if (a.face && b.face) {
            // d_i d_j = d_{j-1} d_i for i < j : here inner = d_j, outer = d_i
            if (b.i < a.i) {
              auto [l1, e1] = apply_gen(x, {c, true, b.i}, l, e);
              auto [l2, e2] = apply_gen(x, {c, true, a.i - 1}, l1, e1);
              if (l2 != lab || e2 != eab)
                r.add("face_face_identity", gen_name(b) + gen_name(a) + " at " + level_name(x.multi_index(l)));
            }
          } else if (!a.face && b.face) {
            // outer d_i after inner s_j
            int i = b.i, j = a.i;
            if (i == j || i == j + 1) {
              if (lab != l || eab != e)
                r.add("face_degeneracy_identity", gen_name(b) + gen_name(a) + " at " + level_name(x.multi_index(l)));
            } else if (i < j) {
              auto [l1, e1] = apply_gen(x, {c, true, i}, l, e);
              if (l1 == std::size_t(-1)) continue;
              auto [l2, e2] = apply_gen(x, {c, false, j - 1}, l1, e1);
              if (l2 != std::size_t(-1) && (l2 != lab || e2 != eab))
                r.add("face_degeneracy_identity", gen_name(b) + gen_name(a) + " at " + level_name(x.multi_index(l)));
            } else {
              auto [l1, e1] = apply_gen(x, {c, true, i - 1}, l, e);
              if (l1 == std::size_t(-1)) continue;
              auto [l2, e2] = apply_gen(x, {c, false, j}, l1, e1);
              if (l2 != std::size_t(-1) && (l2 != lab || e2 != eab))
                r.add("face_degeneracy_identity", gen_name(b) + gen_name(a) + " at " + level_name(x.multi_index(l)));
            }
          } else if (!a.face && !b.face) {
            // s_i s_j = s_{j+1} s_i for i <= j : inner s_j, outer s_i
            if (b.i <= a.i) {
              auto [l1, e1] = apply_gen(x, {c, false, b.i}, l, e);
              auto [l2, e2] = apply_gen(x, {c, false, a.i + 1}, l1, e1);
              if (l2 != lab || e2 != eab)
                r.add("degeneracy_identity", gen_name(b) + gen_name(a) + " at " + level_name(x.multi_index(l)));
            }
          }
        }
      }
    }
  }
  return r;
}

ValidationReport validate_map(const MultiSimplicialMap& f) {
  ValidationReport r;
  const auto& X = *f.dom;
  const auto& Y = *f.cod;
  if (X.dim() != Y.dim() || X.truncation() != Y.truncation()) {
    r.add("map_shape", "dimension or truncation mismatch");
    return r;
  }
  if (f.level.size() != X.num_levels()) {
    r.add("map_shape", "level count mismatch");
    return r;
  }
  for (std::size_t l = 0; l < X.num_levels(); ++l) {
    if (f.level[l].size() != X.size(l)) {
      r.add("map_shape", "level " + level_name(X.multi_index(l)));
      return r;
    }
    for (int v : f.level[l])
      if (v < 0 || static_cast<std::size_t>(v) >= Y.size(l)) {
        r.add("map_dangling", "level " + level_name(X.multi_index(l)));
        return r;
      }
  }
  for (std::size_t l = 0; l < X.num_levels(); ++l)
    for (const auto& g : generators_at(X, l))
      for (int e = 0; e < static_cast<int>(X.size(l)); ++e) {
        auto [lx, ex] = apply_gen(X, g, l, e);
        auto [ly, ey] = apply_gen(Y, g, l, f.level[l][e]);
        if (f.level[lx][ex] != ey) {
          r.add("map_commutes", gen_name(g) + " at " + level_name(X.multi_index(l)) + ":" + X.elements(l)[e]);
          break;
        }
        (void)ly;
      }
  return r;
}

MultiSimplicialMap identity_map(const MSSPtr& x) {
  MultiSimplicialMap f{x, x, {}};
  for (std::size_t l = 0; l < x->num_levels(); ++l) {
    std::vector<int> v(x->size(l));
    std::iota(v.begin(), v.end(), 0);
    f.level.push_back(std::move(v));
  }
  return f;
}

MultiSimplicialMap compose_maps(const MultiSimplicialMap& g, const MultiSimplicialMap& f) {
  MultiSimplicialMap h{f.dom, g.cod, f.level};
  for (std::size_t l = 0; l < h.level.size(); ++l)
    for (auto& v : h.level[l]) v = g.level[l][v];
  return h;
}

MultiSimplicialSet slice(const MultiSimplicialSet& x, int s) {
  if (x.dim() < 1) throw InputError("slice of a 0-dimensional set");
  MultiSimplicialSet out(x.dim() - 1, x.truncation());
  for (std::size_t l = 0; l < out.num_levels(); ++l)
    out.elements(l) = x.elements(x.level_index(with_front(s, out.multi_index(l))));
  out.allocate_structure();
  for (std::size_t l = 0; l < out.num_levels(); ++l) {
    std::size_t xl = x.level_index(with_front(s, out.multi_index(l)));
    auto k = out.multi_index(l);
    for (int c = 0; c < out.dim(); ++c) {
      if (k[c] >= 1)
        for (int i = 0; i <= k[c]; ++i) out.face(c, l, i) = x.face(c + 1, xl, i);
      if (k[c] + 1 <= out.truncation())
        for (int i = 0; i <= k[c]; ++i) out.degeneracy(c, l, i) = x.degeneracy(c + 1, xl, i);
    }
  }
  return out;
}

MultiSimplicialMap slice_map(const MultiSimplicialMap& f, int s, const MSSPtr& dom, const MSSPtr& cod) {
  MultiSimplicialMap out{dom, cod, {}};
  for (std::size_t l = 0; l < dom->num_levels(); ++l)
    out.level.push_back(f.level[f.dom->level_index(with_front(s, dom->multi_index(l)))]);
  return out;
}

MultiSimplicialSet embed_discrete(const MultiSimplicialSet& x) {
  MultiSimplicialSet out(x.dim() + 1, x.truncation());
  for (std::size_t l = 0; l < out.num_levels(); ++l) {
    auto k = out.multi_index(l);
    k.pop_back();
    out.elements(l) = x.elements(x.level_index(k));
  }
  out.allocate_structure();
  for (std::size_t l = 0; l < out.num_levels(); ++l) {
    auto k = out.multi_index(l);
    int last = k.back();
    k.pop_back();
    std::size_t xl = x.level_index(k);
    std::vector<int> id(x.size(xl));
    std::iota(id.begin(), id.end(), 0);
    for (int c = 0; c < x.dim(); ++c) {
      if (k[c] >= 1)
        for (int i = 0; i <= k[c]; ++i) out.face(c, l, i) = x.face(c, xl, i);
      if (k[c] + 1 <= x.truncation())
        for (int i = 0; i <= k[c]; ++i) out.degeneracy(c, l, i) = x.degeneracy(c, xl, i);
    }
    int c = x.dim();
    if (last >= 1)
      for (int i = 0; i <= last; ++i) out.face(c, l, i) = id;
    if (last + 1 <= x.truncation())
      for (int i = 0; i <= last; ++i) out.degeneracy(c, l, i) = id;
  }
  return out;
}

MultiSimplicialSet discrete_set(const std::vector<std::string>& elements, int dim, int truncation) {
  MultiSimplicialSet base(0, truncation);
  base.elements(0) = elements;
  base.allocate_structure();
  for (int d = 0; d < dim; ++d) base = embed_discrete(base);
  return base;
}

namespace {

// k-simplices of the nerve: level 0 are objects, level k >= 1 are chains of
// k composable morphisms f_1, ..., f_k (f_1 first).
struct NerveLevels {
  std::vector<std::vector<std::vector<Id>>> chains;  // per k
  std::vector<std::map<std::vector<Id>, int>> index;
};

NerveLevels nerve_levels(const FinCategory& c, int N) {
  NerveLevels nl;
  nl.chains.resize(N + 1);
  nl.index.resize(N + 1);
  for (Id x = 0; x < static_cast<Id>(c.num_objects()); ++x) nl.chains[0].push_back({x});
  if (N >= 1)
    for (Id f = 0; f < static_cast<Id>(c.num_morphisms()); ++f) nl.chains[1].push_back({f});
  for (int k = 2; k <= N; ++k)
    for (const auto& ch : nl.chains[k - 1])
      for (Id g : c.out(c.target(ch.back()))) {
        auto next = ch;
        next.push_back(g);
        nl.chains[k].push_back(std::move(next));
      }
  for (int k = 0; k <= N; ++k)
    for (std::size_t i = 0; i < nl.chains[k].size(); ++i) nl.index[k][nl.chains[k][i]] = static_cast<int>(i);
  return nl;
}

std::vector<Id> nerve_face(const FinCategory& c, const std::vector<Id>& ch, int k, int i) {
  if (k == 1) return {i == 0 ? c.target(ch[0]) : c.source(ch[0])};
  std::vector<Id> out;
  if (i == 0) {
    out.assign(ch.begin() + 1, ch.end());
  } else if (i == k) {
    out.assign(ch.begin(), ch.end() - 1);
  } else {
    for (int j = 0; j < k; ++j) {
      if (j == i - 1) {
        out.push_back(c.compose(ch[i], ch[i - 1]));
        ++j;
      } else {
        out.push_back(ch[j]);
      }
    }
  }
  return out;
}

std::vector<Id> nerve_degeneracy(const FinCategory& c, const std::vector<Id>& ch, int k, int i) {
  if (k == 0) return {c.identity(ch[0])};
  Id vertex = i == 0 ? c.source(ch[0]) : c.target(ch[i - 1]);
  std::vector<Id> out(ch.begin(), ch.begin() + i);
  out.push_back(c.identity(vertex));
  out.insert(out.end(), ch.begin() + i, ch.end());
  return out;
}

std::string chain_name(const FinCategory& c, const std::vector<Id>& ch, int k) {
  if (k == 0) return c.object_name(ch[0]);
  std::vector<std::string> parts;
  for (Id f : ch) parts.push_back(c.morphism_name(f));
  return join(parts, "|");
}

// Fill one nerve direction (coordinate `coord`) of `out`, whose levels with
// coord-entry k are the k-chains of the category selected by `cat_at`.
template <class CatAt>
void fill_nerve_direction(MultiSimplicialSet& out, int coord, CatAt cat_at,
                          const std::vector<NerveLevels>& per_outer, const std::vector<std::size_t>& outer_of) {
  for (std::size_t l = 0; l < out.num_levels(); ++l) {
    auto k = out.multi_index(l);
    int kk = k[coord];
    const FinCategory& c = cat_at(l);
    const NerveLevels& nl = per_outer[outer_of[l]];
    for (std::size_t e = 0; e < nl.chains[kk].size(); ++e) {
      const auto& ch = nl.chains[kk][e];
      if (kk >= 1)
        for (int i = 0; i <= kk; ++i) out.face(coord, l, i)[e] = nl.index[kk - 1].at(nerve_face(c, ch, kk, i));
      if (kk + 1 <= out.truncation())
        for (int i = 0; i <= kk; ++i)
          out.degeneracy(coord, l, i)[e] = nl.index[kk + 1].at(nerve_degeneracy(c, ch, kk, i));
    }
  }
}

}  // namespace

MultiSimplicialSet nerve_of(const FinCategory& c, int N) {
  MultiSimplicialSet out(1, N);
  std::vector<NerveLevels> per{nerve_levels(c, N)};
  for (int k = 0; k <= N; ++k)
    for (const auto& ch : per[0].chains[k]) out.elements(k).push_back(chain_name(c, ch, k));
  out.allocate_structure();
  std::vector<std::size_t> outer_of(N + 1, 0);
  fill_nerve_direction(out, 0, [&](std::size_t) -> const FinCategory& { return c; }, per, outer_of);
  return out;
}

MultiSimplicialMap nerve_map(const FinFunctor& F, const MSSPtr& dom, const MSSPtr& cod) {
  const int N = dom->truncation();
  auto nd = nerve_levels(*F.dom, N);
  auto nc = nerve_levels(*F.cod, N);
  MultiSimplicialMap m{dom, cod, std::vector<std::vector<int>>(N + 1)};
  for (int k = 0; k <= N; ++k)
    for (const auto& ch : nd.chains[k]) {
      std::vector<Id> img;
      for (Id v : ch) img.push_back(k == 0 ? F.obj[v] : F.mor[v]);
      m.level[k].push_back(nc.index[k].at(img));
    }
  return m;
}

MultiSimplicialSet product(const MultiSimplicialSet& x, const MultiSimplicialSet& y) {
  if (x.dim() != y.dim() || x.truncation() != y.truncation()) throw InputError("product: shape mismatch");
  MultiSimplicialSet out(x.dim(), x.truncation());
  for (std::size_t l = 0; l < out.num_levels(); ++l)
    for (const auto& a : x.elements(l))
      for (const auto& b : y.elements(l)) out.elements(l).push_back("(" + a + "," + b + ")");
  out.allocate_structure();
  for (std::size_t l = 0; l < out.num_levels(); ++l) {
    auto k = out.multi_index(l);
    const int ny = static_cast<int>(y.size(l));
    for (int c = 0; c < out.dim(); ++c) {
      auto fill = [&](bool face, int i) {
        std::size_t tl = out.shifted(l, c, face ? -1 : 1);
        const auto& tx = face ? x.face(c, l, i) : x.degeneracy(c, l, i);
        const auto& ty = face ? y.face(c, l, i) : y.degeneracy(c, l, i);
        auto& dst = face ? out.face(c, l, i) : out.degeneracy(c, l, i);
        const int nyt = static_cast<int>(y.size(tl));
        for (std::size_t e = 0; e < dst.size(); ++e) {
          int a = static_cast<int>(e) / ny, b = static_cast<int>(e) % ny;
          dst[e] = tx[a] * nyt + ty[b];
        }
      };
      if (k[c] >= 1)
        for (int i = 0; i <= k[c]; ++i) fill(true, i);
      if (k[c] + 1 <= out.truncation())
        for (int i = 0; i <= k[c]; ++i) fill(false, i);
    }
  }
  return out;
}

MultiSimplicialSet external_product(const MultiSimplicialSet& x, const MultiSimplicialSet& y) {
  if (x.truncation() != y.truncation()) throw InputError("external_product: truncation mismatch");
  MultiSimplicialSet out(x.dim() + y.dim(), x.truncation());
  auto split = [&](std::size_t l) {
    auto k = out.multi_index(l);
    std::vector<int> kx(k.begin(), k.begin() + x.dim()), ky(k.begin() + x.dim(), k.end());
    return std::make_pair(x.level_index(kx), y.level_index(ky));
  };
  for (std::size_t l = 0; l < out.num_levels(); ++l) {
    auto [lx, ly] = split(l);
    for (const auto& a : x.elements(lx))
      for (const auto& b : y.elements(ly)) out.elements(l).push_back("(" + a + "," + b + ")");
  }
  out.allocate_structure();
  for (std::size_t l = 0; l < out.num_levels(); ++l) {
    auto k = out.multi_index(l);
    auto [lx, ly] = split(l);
    const int ny = static_cast<int>(y.size(ly));
    for (int c = 0; c < out.dim(); ++c) {
      bool in_x = c < x.dim();
      auto fill = [&](bool face, int i) {
        std::size_t tl = out.shifted(l, c, face ? -1 : 1);
        auto [tlx, tly] = split(tl);
        const int nyt = static_cast<int>(y.size(tly));
        auto& dst = face ? out.face(c, l, i) : out.degeneracy(c, l, i);
        for (std::size_t e = 0; e < dst.size(); ++e) {
          int a = static_cast<int>(e) / ny, b = static_cast<int>(e) % ny;
          if (in_x) {
            int a2 = face ? x.face(c, lx, i)[a] : x.degeneracy(c, lx, i)[a];
            dst[e] = a2 * nyt + b;
          } else {
            int cy = c - x.dim();
            int b2 = face ? y.face(cy, ly, i)[b] : y.degeneracy(cy, ly, i)[b];
            dst[e] = a * nyt + b2;
          }
        }
        (void)tlx;
      };
      if (k[c] >= 1)
        for (int i = 0; i <= k[c]; ++i) fill(true, i);
      if (k[c] + 1 <= out.truncation())
        for (int i = 0; i <= k[c]; ++i) fill(false, i);
    }
  }
  return out;
}

PStar p_star(const MultiSimplicialSet& x) {
  if (x.dim() < 1) throw InputError("p of a 0-dimensional set");
  if (x.truncation() < 2) throw InputError("truncation too small to compute tau_1 (needs levels 0..2)");
  const int n = x.dim(), last = n - 1;
  PStar out{MultiSimplicialSet(n - 1, x.truncation()), {}};
  MultiSimplicialSet& p = out.set;
  out.quotient.resize(p.num_levels());
  std::vector<std::vector<int>> reps(p.num_levels());
  for (std::size_t l = 0; l < p.num_levels(); ++l) {
    auto K = p.multi_index(l);
    std::size_t L0 = x.level_index(with_back(K, 0)), L1 = x.level_index(with_back(K, 1)),
                L2 = x.level_index(with_back(K, 2));
    auto cls = tau1_classes(x.size(L0), x.face(last, L1, 1), x.face(last, L1, 0), x.degeneracy(last, L0, 0),
                            x.face(last, L2, 0), x.face(last, L2, 1), x.face(last, L2, 2));
    int count = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
    reps[l].assign(count, -1);
    for (std::size_t e = 0; e < cls.size(); ++e)
      if (reps[l][cls[e]] < 0) reps[l][cls[e]] = static_cast<int>(e);
    for (int r : reps[l]) p.elements(l).push_back(x.elements(L0)[r]);
    out.quotient[l] = std::move(cls);
  }
  p.allocate_structure();
  for (std::size_t l = 0; l < p.num_levels(); ++l) {
    auto K = p.multi_index(l);
    std::size_t L0 = x.level_index(with_back(K, 0));
    for (int c = 0; c < p.dim(); ++c) {
      auto fill = [&](bool face, int i) {
        std::size_t tl = p.shifted(l, c, face ? -1 : 1);
        const auto& tab = face ? x.face(c, L0, i) : x.degeneracy(c, L0, i);
        auto& dst = face ? p.face(c, l, i) : p.degeneracy(c, l, i);
        for (std::size_t cl = 0; cl < dst.size(); ++cl) dst[cl] = out.quotient[tl][tab[reps[l][cl]]];
      };
      if (K[c] >= 1)
        for (int i = 0; i <= K[c]; ++i) fill(true, i);
      if (K[c] + 1 <= p.truncation())
        for (int i = 0; i <= K[c]; ++i) fill(false, i);
    }
  }
  return out;
}

MultiSimplicialMap p_star_map(const MultiSimplicialMap& f, const PStar& dom, const PStar& cod,
                              const MSSPtr& pdom, const MSSPtr& pcod) {
  const auto& X = *f.dom;
  MultiSimplicialMap out{pdom, pcod, {}};
  for (std::size_t l = 0; l < pdom->num_levels(); ++l) {
    auto K = pdom->multi_index(l);
    std::size_t L0 = X.level_index(with_back(K, 0));
    std::vector<int> m(pdom->size(l), -1);
    for (std::size_t e = 0; e < X.size(L0); ++e) {
      int v = cod.quotient[l][f.level[L0][e]];
      int& slot = m[dom.quotient[l][e]];
      if (slot >= 0 && slot != v) throw InternalError("map does not respect tau_1 isomorphism classes");
      slot = v;
    }
    out.level.push_back(std::move(m));
  }
  return out;
}

MultiSimplicialSet p_trunc(const MultiSimplicialSet& x, int r) {
  if (r < 0 || r > x.dim() - 1) throw InputError("p_trunc: r out of range");
  MultiSimplicialSet cur = x;
  while (cur.dim() > r) cur = p_star(cur).set;
  return cur;
}

std::vector<std::string> pi0(const MultiSimplicialSet& x) {
  if (x.dim() == 0) return x.elements(0);
  return p_trunc(x, 0).elements(0);
}

std::vector<int> pi0_map(const MultiSimplicialMap& f) {
  MultiSimplicialMap cur = f;
  while (cur.dom->dim() > 0) {
    auto pd = p_star(*cur.dom);
    auto pc = p_star(*cur.cod);
    auto dptr = std::make_shared<MultiSimplicialSet>(pd.set);
    auto cptr = std::make_shared<MultiSimplicialSet>(pc.set);
    cur = p_star_map(cur, pd, pc, dptr, cptr);
  }
  return cur.level[0];
}

MultiSimplicialSet diag(const MultiSimplicialSet& x) {
  const int n = x.dim(), N = x.truncation();
  if (n == 0) throw InputError("diag of a 0-dimensional set");
  MultiSimplicialSet out(1, N);
  auto diag_level = [&](int r) { return x.level_index(std::vector<int>(n, r)); };
  for (int r = 0; r <= N; ++r) out.elements(r) = x.elements(diag_level(r));
  out.allocate_structure();
  for (int r = 0; r <= N; ++r) {
    for (int i = 0; i <= r; ++i) {
      for (int pass = 0; pass < 2; ++pass) {
        bool face = pass == 0;
        if (face && r < 1) continue;
        if (!face && r + 1 > N) continue;
        auto& dst = face ? out.face(0, r, i) : out.degeneracy(0, r, i);
        for (std::size_t e = 0; e < dst.size(); ++e) {
          std::size_t cur = diag_level(r);
          int v = static_cast<int>(e);
          for (int c = 0; c < n; ++c) {
            v = face ? x.face(c, cur, i)[v] : x.degeneracy(c, cur, i)[v];
            cur = x.shifted(cur, c, face ? -1 : 1);
          }
          dst[e] = v;
        }
      }
    }
  }
  return out;
}

std::size_t diag_components(const MultiSimplicialSet& x) {
  auto d = diag(x);
  UnionFind uf(d.size(0));
  if (d.truncation() >= 1)
    for (std::size_t e = 0; e < d.size(1); ++e) uf.unite(d.face(0, 1, 0)[e], d.face(0, 1, 1)[e]);
  std::size_t count = 0;
  for (std::size_t v = 0; v < d.size(0); ++v)
    if (uf.find(static_cast<int>(v)) == static_cast<int>(v)) ++count;
  return count;
}

SegalComparison segal_map(const MSSPtr& xp, int k) {
  const auto& X = *xp;
  const int n = X.dim(), N = X.truncation();
  if (n < 1) throw InputError("segal_map on a 0-dimensional set");
  if (k < 2 || k > N) throw InputError("segal_map: k must lie in 2..truncation");
  auto pb = std::make_shared<MultiSimplicialSet>(n - 1, N);
  std::vector<std::map<std::vector<int>, int>> index(pb->num_levels());
  std::vector<std::vector<std::vector<int>>> tuples(pb->num_levels());
  for (std::size_t l = 0; l < pb->num_levels(); ++l) {
    auto K = pb->multi_index(l);
    std::size_t L1 = X.level_index(with_front(1, K));
    const auto& src = X.face(0, L1, 1);
    const auto& tgt = X.face(0, L1, 0);
    std::map<int, std::vector<int>> starting_at;
    for (std::size_t e = 0; e < X.size(L1); ++e) starting_at[src[e]].push_back(static_cast<int>(e));
    std::vector<std::vector<int>> cur;
    for (std::size_t e = 0; e < X.size(L1); ++e) cur.push_back({static_cast<int>(e)});
    for (int j = 1; j < k; ++j) {
      std::vector<std::vector<int>> next;
      for (const auto& t : cur) {
        auto it = starting_at.find(tgt[t.back()]);
        if (it == starting_at.end()) continue;
        for (int e : it->second) {
          auto u = t;
          u.push_back(e);
          next.push_back(std::move(u));
        }
      }
      cur = std::move(next);
    }
    for (const auto& t : cur) {
      std::vector<std::string> parts;
      for (int e : t) parts.push_back(X.elements(L1)[e]);
      index[l][t] = static_cast<int>(pb->elements(l).size());
      pb->elements(l).push_back("(" + join(parts, "|") + ")");
    }
    tuples[l] = std::move(cur);
  }
  pb->allocate_structure();
  bool closed = true;
  for (std::size_t l = 0; l < pb->num_levels(); ++l) {
    auto K = pb->multi_index(l);
    std::size_t L1 = X.level_index(with_front(1, K));
    for (int c = 0; c < pb->dim(); ++c) {
      auto fill = [&](bool face, int i) {
        std::size_t tl = pb->shifted(l, c, face ? -1 : 1);
        const auto& tab = face ? X.face(c + 1, L1, i) : X.degeneracy(c + 1, L1, i);
        auto& dst = face ? pb->face(c, l, i) : pb->degeneracy(c, l, i);
        for (std::size_t e = 0; e < dst.size(); ++e) {
          auto t = tuples[l][e];
          for (int& v : t) v = tab[v];
          auto it = index[tl].find(t);
          if (it == index[tl].end()) closed = false;
          dst[e] = it == index[tl].end() ? 0 : it->second;
        }
      };
      if (K[c] >= 1)
        for (int i = 0; i <= K[c]; ++i) fill(true, i);
      if (K[c] + 1 <= N)
        for (int i = 0; i <= K[c]; ++i) fill(false, i);
    }
  }
  SegalComparison out;
  out.k = k;
  out.pullback = pb;
  out.map = {xp, pb, {}};
  bool total = true;
  for (std::size_t l = 0; l < pb->num_levels(); ++l) {
    std::size_t Lk = X.level_index(with_front(k, pb->multi_index(l)));
    std::vector<std::vector<int>> proj;
    for (int j = 1; j <= k; ++j) proj.push_back(X.act_level(0, delta_nu(k, j), Lk));
    std::vector<int> m(X.size(Lk));
    for (std::size_t e = 0; e < m.size(); ++e) {
      std::vector<int> t(k);
      for (int j = 0; j < k; ++j) t[j] = proj[j][e];
      auto it = index[l].find(t);
      if (it == index[l].end()) {
        total = false;
        m[e] = 0;
      } else {
        m[e] = it->second;
      }
    }
    out.map.level.push_back(std::move(m));
  }
  if (!closed || !total) {
    out.verdict = Verdict::fail("segal map is not well defined: level data do not form a simplicial object");
    return out;
  }
  if (n == 1) {
    if (!is_bijection(out.map.level[0], pb->size(0)))
      out.verdict = Verdict::fail("S_" + std::to_string(k) + " is not a bijection (" +
                                  std::to_string(X.size(X.level_index({k}))) + " simplices, " +
                                  std::to_string(pb->size(0)) + " composable tuples)");
    return out;
  }
  out.map.dom = std::make_shared<MultiSimplicialSet>(slice(X, k));
  out.verdict = is_n_equivalence(out.map);
  out.map.dom = xp;
  return out;
}

HomFiber hom_fiber(const MultiSimplicialSet& x, int a, int b) {
  const int n = x.dim();
  if (n < 1) throw InputError("hom_fiber of a 0-dimensional set");
  std::size_t base = x.level_index(std::vector<int>(n, 0));
  if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= x.size(base) || static_cast<std::size_t>(b) >= x.size(base))
    throw InputError("hom_fiber: endpoint not in level 0");
  HomFiber out{MultiSimplicialSet(n - 1, x.truncation()), {}};
  auto& F = out.set;
  out.origin.resize(F.num_levels());
  std::vector<std::unordered_map<int, int>> local(F.num_levels());
  for (std::size_t l = 0; l < F.num_levels(); ++l) {
    auto K = F.multi_index(l);
    // the images of a, b in X_{0,K} under the total degeneracy
    int da = a, db = b;
    std::size_t cur = base;
    for (int c = 1; c < n; ++c) {
      DeltaMap to_zero{K[c - 1], 0, std::vector<int>(K[c - 1] + 1, 0)};
      da = x.act(c, to_zero, cur, da);
      db = x.act(c, to_zero, cur, db);
      auto idx = x.multi_index(cur);
      idx[c] = K[c - 1];
      cur = x.level_index(idx);
    }
    std::size_t L1 = x.level_index(with_front(1, K));
    for (std::size_t e = 0; e < x.size(L1); ++e)
      if (x.face(0, L1, 1)[e] == da && x.face(0, L1, 0)[e] == db) {
        local[l][static_cast<int>(e)] = static_cast<int>(F.elements(l).size());
        F.elements(l).push_back(x.elements(L1)[e]);
        out.origin[l].push_back(static_cast<int>(e));
      }
  }
  F.allocate_structure();
  for (std::size_t l = 0; l < F.num_levels(); ++l) {
    auto K = F.multi_index(l);
    std::size_t L1 = x.level_index(with_front(1, K));
    for (int c = 0; c < F.dim(); ++c) {
      auto fill = [&](bool face, int i) {
        std::size_t tl = F.shifted(l, c, face ? -1 : 1);
        const auto& tab = face ? x.face(c + 1, L1, i) : x.degeneracy(c + 1, L1, i);
        auto& dst = face ? F.face(c, l, i) : F.degeneracy(c, l, i);
        for (std::size_t e = 0; e < dst.size(); ++e) {
          auto it = local[tl].find(tab[out.origin[l][e]]);
          dst[e] = it == local[tl].end() ? -1 : it->second;
        }
      };
      if (K[c] >= 1)
        for (int i = 0; i <= K[c]; ++i) fill(true, i);
      if (K[c] + 1 <= F.truncation())
        for (int i = 0; i <= K[c]; ++i) fill(false, i);
    }
  }
  return out;
}

CatPtr nerve_category(const MultiSimplicialSet& x) {
  if (x.dim() != 1 || x.truncation() < 2) throw InputError("nerve_category needs a simplicial set truncated at >= 2");
  FinCategory::Builder b;
  for (const auto& s : x.elements(0)) b.add_object(s);
  for (std::size_t e = 0; e < x.size(1); ++e)
    b.add_morphism(x.elements(1)[e], x.face(0, 1, 1)[e], x.face(0, 1, 0)[e]);
  for (std::size_t v = 0; v < x.size(0); ++v) b.set_identity(static_cast<Id>(v), x.degeneracy(0, 0, 0)[v]);
  for (std::size_t t = 0; t < x.size(2); ++t)
    b.set_compose(x.face(0, 2, 0)[t], x.face(0, 2, 2)[t], x.face(0, 2, 1)[t]);
  return b.build();
}

ValidationReport validate_tamsamani(const MultiSimplicialSet& x, TamMode mode) {
  ValidationReport r = validate_structure(x);
  if (!r.ok()) return r;
  const int n = x.dim(), N = x.truncation();
  if (n == 0) return r;
  if (N < 2) {
    r.add("truncation", "needs truncation >= 2");
    return r;
  }
  auto xp = std::make_shared<MultiSimplicialSet>(x);
  if (n == 1) {
    for (int k = 2; k <= N; ++k) {
      auto s = segal_map(xp, k);
      if (!s.verdict) r.add("segal[" + std::to_string(k) + "]", s.verdict.witness);
    }
    if (!r.ok()) return r;
    auto c = nerve_category(x);
    auto cr = validate_category(*c);
    if (!cr.ok()) r.merge(cr, "tau1");
    else if (mode == TamMode::groupoid && !c->is_groupoid()) {
      for (Id f = 0; f < static_cast<Id>(c->num_morphisms()); ++f)
        if (c->inverse(f) == kNone) {
          r.add("groupoid", "morphism " + c->morphism_name(f) + " is not invertible");
          break;
        }
    }
    return r;
  }
  // (a) level 0 is discrete: every structure map inside it is a bijection.
  auto x0 = slice(x, 0);
  for (std::size_t l = 0; l < x0.num_levels(); ++l)
    for (const auto& g : generators_at(x0, l)) {
      std::size_t tl = g.face ? x0.shifted(l, g.c, -1) : x0.shifted(l, g.c, +1);
      const auto& tab = g.face ? x0.face(g.c, l, g.i) : x0.degeneracy(g.c, l, g.i);
      if (!is_bijection(tab, x0.size(tl))) {
        r.add("discrete_level0", gen_name(g) + " at " + level_name(x0.multi_index(l)));
        break;
      }
    }
  // (b) levels are Tam^{n-1} (GTam^{n-1} in groupoid mode, including level 0).
  for (int s = mode == TamMode::groupoid ? 0 : 1; s <= N; ++s) {
    auto rs = validate_tamsamani(slice(x, s), mode);
    if (!rs.ok()) r.merge(rs, "level[" + std::to_string(s) + "]");
  }
  if (!r.ok()) return r;
  // (c) Segal maps are (n-1)-equivalences.
  for (int k = 2; k <= N; ++k) {
    auto s = segal_map(xp, k);
    if (!s.verdict) r.add("segal[" + std::to_string(k) + "]", s.verdict.witness);
  }
  if (mode == TamMode::groupoid) {
    auto rp = validate_tamsamani(p_star(x).set, mode);
    if (!rp.ok()) r.merge(rp, "p");
  }
  return r;
}

Verdict is_n_equivalence(const MultiSimplicialMap& f) {
  const auto& X = *f.dom;
  const auto& Y = *f.cod;
  const int n = X.dim();
  if (Y.dim() != n) throw InputError("is_n_equivalence: dimension mismatch");
  if (n == 0) {
    if (!is_bijection(f.level[0], Y.size(0))) return Verdict::fail("not a bijection of sets");
    return Verdict::pass();
  }
  if (n == 1) {
    auto cx = nerve_category(X);
    auto cy = nerve_category(Y);
    if (!validate_category(*cx).ok() || !validate_category(*cy).ok())
      return Verdict::fail("endpoints are not nerves of categories");
    FinFunctor F{cx, cy, {}, {}};
    for (int v : f.level[0]) F.obj.push_back(v);
    for (int v : f.level[1]) F.mor.push_back(v);
    auto rep = validate_functor(F);
    if (!rep.ok()) return Verdict::fail("levels 0..1 do not form a functor: " + rep.summary());
    auto eq = is_equivalence(F);
    if (!eq) return Verdict::fail(eq.witness);
    return Verdict::pass();
  }
  std::size_t base = X.level_index(std::vector<int>(n, 0));
  for (std::size_t a = 0; a < X.size(base); ++a)
    for (std::size_t b = 0; b < X.size(base); ++b) {
      int fa = f.level[base][a], fb = f.level[base][b];
      auto hx = hom_fiber(X, static_cast<int>(a), static_cast<int>(b));
      auto hy = hom_fiber(Y, fa, fb);
      auto hxp = std::make_shared<MultiSimplicialSet>(std::move(hx.set));
      auto hyp = std::make_shared<MultiSimplicialSet>(std::move(hy.set));
      MultiSimplicialMap g{hxp, hyp, {}};
      for (std::size_t l = 0; l < hxp->num_levels(); ++l) {
        std::size_t L1 = X.level_index(with_front(1, hxp->multi_index(l)));
        std::unordered_map<int, int> back;
        for (std::size_t e = 0; e < hy.origin[l].size(); ++e) back[hy.origin[l][e]] = static_cast<int>(e);
        std::vector<int> m;
        for (int orig : hx.origin[l]) {
          auto it = back.find(f.level[L1][orig]);
          if (it == back.end()) return Verdict::fail("map leaves the hom-fiber");
          m.push_back(it->second);
        }
        g.level.push_back(std::move(m));
      }
      auto v = is_n_equivalence(g);
      if (!v)
        return Verdict::fail("hom(" + X.elements(base)[a] + "," + X.elements(base)[b] + "): " + v.witness);
    }
  auto pd = p_star(X);
  auto pc = p_star(Y);
  auto pdp = std::make_shared<MultiSimplicialSet>(pd.set);
  auto pcp = std::make_shared<MultiSimplicialSet>(pc.set);
  auto v = is_n_equivalence(p_star_map(f, pd, pc, pdp, pcp));
  if (!v) return Verdict::fail("p: " + v.witness);
  return Verdict::pass();
}

Verdict is_levelwise_equivalence(const MultiSimplicialMap& f) {
  const auto& X = *f.dom;
  if (X.dim() < 1) throw InputError("levelwise equivalence needs dimension >= 1");
  for (int s = 0; s <= X.truncation(); ++s) {
    auto d = std::make_shared<MultiSimplicialSet>(slice(X, s));
    auto c = std::make_shared<MultiSimplicialSet>(slice(*f.cod, s));
    auto v = is_n_equivalence(slice_map(f, s, d, c));
    if (!v) return Verdict::fail("level " + std::to_string(s) + ": " + v.witness);
  }
  return Verdict::pass();
}

bool level0_bijective(const MultiSimplicialMap& f) {
  std::size_t base = f.dom->level_index(std::vector<int>(f.dom->dim(), 0));
  return is_bijection(f.level[base], f.cod->size(base));
}

}  // namespace pictam
