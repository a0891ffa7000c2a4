#include "pictam/fincat.hpp"

#include <algorithm>
#include <numeric>

namespace pictam {

namespace {

std::uint64_t pair_key(Id a, Id b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

const std::vector<Id> kEmpty;

struct UnionFind {
  std::vector<Id> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  Id find(Id x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(Id a, Id b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Id FinCategory::Builder::add_object(std::string name) {
  obj_names_.push_back(std::move(name));
  ident_.push_back(kNone);
  return static_cast<Id>(obj_names_.size() - 1);
}

Id FinCategory::Builder::add_morphism(std::string name, Id source, Id target) {
  Id n = static_cast<Id>(obj_names_.size());
  if (source < 0 || source >= n || target < 0 || target >= n)
    throw InputError("morphism '" + name + "' references an unknown object");
  mor_names_.push_back(std::move(name));
  src_.push_back(source);
  tgt_.push_back(target);
  return static_cast<Id>(mor_names_.size() - 1);
}

void FinCategory::Builder::set_identity(Id object, Id morphism) {
  if (object < 0 || object >= static_cast<Id>(obj_names_.size()) || morphism < 0 ||
      morphism >= static_cast<Id>(mor_names_.size()))
    throw InputError("identity entry references an unknown id");
  ident_[object] = morphism;
}

void FinCategory::Builder::set_compose(Id g, Id f, Id h) {
  Id m = static_cast<Id>(mor_names_.size());
  if (g < 0 || g >= m || f < 0 || f >= m || h < 0 || h >= m)
    throw InputError("composition entry references an unknown morphism");
  entries_.push_back({g, f, h});
}

void FinCategory::Builder::compose_with(std::function<Id(Id, Id)> fn) { fill_ = std::move(fn); }

CatPtr FinCategory::Builder::build() {
  auto cat = std::make_shared<FinCategory>();
  FinCategory& c = *cat;
  c.obj_names_ = std::move(obj_names_);
  c.mor_names_ = std::move(mor_names_);
  c.src_ = std::move(src_);
  c.tgt_ = std::move(tgt_);
  c.ident_ = std::move(ident_);
  const std::size_t n = c.obj_names_.size(), m = c.mor_names_.size();

  for (std::size_t i = 0; i < n; ++i)
    if (!c.obj_index_.emplace(c.obj_names_[i], static_cast<Id>(i)).second)
      c.structural_.add("duplicate_object_id", c.obj_names_[i]);
  for (std::size_t i = 0; i < m; ++i)
    if (!c.mor_index_.emplace(c.mor_names_[i], static_cast<Id>(i)).second)
      c.structural_.add("duplicate_morphism_id", c.mor_names_[i]);

  c.in_.assign(n, {});
  c.out_.assign(n, {});
  c.in_pos_.assign(m, 0);
  for (std::size_t f = 0; f < m; ++f) {
    Id id = static_cast<Id>(f);
    c.in_pos_[f] = static_cast<Id>(c.in_[c.tgt_[f]].size());
    c.in_[c.tgt_[f]].push_back(id);
    c.out_[c.src_[f]].push_back(id);
    c.hom_[pair_key(c.src_[f], c.tgt_[f])].push_back(id);
  }
  c.comp_off_.assign(m, 0);
  std::size_t total = 0;
  for (std::size_t g = 0; g < m; ++g) {
    c.comp_off_[g] = total;
    total += c.in_[c.src_[g]].size();
  }
  c.comp_.assign(total, kNone);
  for (const auto& e : entries_) {
    Id g = e[0], f = e[1], h = e[2];
    if (c.tgt_[f] != c.src_[g]) {
      c.structural_.add("compose_not_composable", c.mor_names_[g] + "∘" + c.mor_names_[f]);
      continue;
    }
    Id& slot = c.comp_[c.comp_off_[g] + c.in_pos_[f]];
    if (slot != kNone && slot != h)
      c.structural_.add("compose_conflict", c.mor_names_[g] + "∘" + c.mor_names_[f]);
    slot = h;
  }
  if (fill_) {
    for (std::size_t g = 0; g < m; ++g) {
      const auto& ins = c.in_[c.src_[g]];
      for (std::size_t k = 0; k < ins.size(); ++k) {
        Id& slot = c.comp_[c.comp_off_[g] + k];
        if (slot == kNone) slot = fill_(static_cast<Id>(g), ins[k]);
      }
    }
  }

  for (std::size_t x = 0; x < n; ++x) {
    Id i = c.ident_[x];
    if (i == kNone)
      c.structural_.add("missing_identity", c.obj_names_[x]);
  }
  for (std::size_t g = 0; g < m; ++g) {
    const auto& ins = c.in_[c.src_[g]];
    for (std::size_t k = 0; k < ins.size(); ++k)
      if (c.comp_[c.comp_off_[g] + k] == kNone)
        c.structural_.add("compose_missing", c.mor_names_[g] + "∘" + c.mor_names_[ins[k]]);
  }

  // Invertibility by exhaustive search for a two-sided inverse.
  c.inverse_.assign(m, kNone);
  c.groupoid_ = true;
  for (std::size_t f = 0; f < m; ++f) {
    Id a = c.src_[f], b = c.tgt_[f];
    Id ia = c.ident_[a], ib = c.ident_[b];
    if (ia != kNone && ib != kNone) {
      for (Id g : c.hom(b, a)) {
        if (c.compose(g, static_cast<Id>(f)) == ia && c.compose(static_cast<Id>(f), g) == ib) {
          c.inverse_[f] = g;
          break;
        }
      }
    }
    if (c.inverse_[f] == kNone) c.groupoid_ = false;
  }

  UnionFind uf(n);
  for (std::size_t f = 0; f < m; ++f)
    if (c.inverse_[f] != kNone) uf.unite(c.src_[f], c.tgt_[f]);
  c.iso_class_.assign(n, kNone);
  std::vector<Id> root_class(n, kNone);
  for (std::size_t x = 0; x < n; ++x) {
    Id r = uf.find(static_cast<Id>(x));
    if (root_class[r] == kNone) root_class[r] = static_cast<Id>(c.num_classes_++);
    c.iso_class_[x] = root_class[r];
  }
  return cat;
}

Id FinCategory::find_object(std::string_view name) const {
  auto it = obj_index_.find(std::string(name));
  return it == obj_index_.end() ? kNone : it->second;
}

Id FinCategory::find_morphism(std::string_view name) const {
  auto it = mor_index_.find(std::string(name));
  return it == mor_index_.end() ? kNone : it->second;
}

Id FinCategory::compose(Id g, Id f) const {
  if (g == kNone || f == kNone || tgt_[f] != src_[g]) return kNone;
  return comp_[comp_off_[g] + in_pos_[f]];
}

Id FinCategory::compose(Id h, Id g, Id f) const { return compose(h, compose(g, f)); }

const std::vector<Id>& FinCategory::hom(Id a, Id b) const {
  auto it = hom_.find(pair_key(a, b));
  return it == hom_.end() ? kEmpty : it->second;
}

bool FinCategory::is_discrete() const {
  if (mor_names_.size() != obj_names_.size()) return false;
  for (std::size_t x = 0; x < obj_names_.size(); ++x)
    if (ident_[x] == kNone) return false;
  return true;
}

ValidationReport validate_category(const FinCategory& c) {
  ValidationReport r = c.structural();
  if (!r.ok()) return r;
  const Id n = static_cast<Id>(c.num_objects()), m = static_cast<Id>(c.num_morphisms());
  for (Id x = 0; x < n; ++x) {
    Id i = c.identity(x);
    if (c.source(i) != x || c.target(i) != x)
      r.add("identity_endpoints", c.object_name(x));
  }
  for (Id f = 0; f < m; ++f) {
    if (c.compose(f, c.identity(c.source(f))) != f)
      r.add("right_unit_law", c.morphism_name(f));
    if (c.compose(c.identity(c.target(f)), f) != f)
      r.add("left_unit_law", c.morphism_name(f));
    for (Id g : c.out(c.target(f))) {
      Id gf = c.compose(g, f);
      if (c.source(gf) != c.source(f) || c.target(gf) != c.target(g))
        r.add("compose_typing", c.morphism_name(g) + "∘" + c.morphism_name(f));
    }
  }
  if (!r.ok()) return r;
  for (Id f = 0; f < m; ++f) {
    for (Id g : c.out(c.target(f))) {
      Id gf = c.compose(g, f);
      for (Id h : c.out(c.target(g))) {
        if (c.compose(h, gf) != c.compose(c.compose(h, g), f))
          r.add("associativity",
                "(" + c.morphism_name(h) + "," + c.morphism_name(g) + "," + c.morphism_name(f) + ")");
      }
    }
  }
  return r;
}

ValidationReport validate_functor(const FinFunctor& F) {
  ValidationReport r;
  const FinCategory& d = *F.dom;
  const FinCategory& c = *F.cod;
  if (F.obj.size() != d.num_objects() || F.mor.size() != d.num_morphisms()) {
    r.add("functor_shape", "table sizes do not match the domain");
    return r;
  }
  for (Id x : F.obj)
    if (x < 0 || x >= static_cast<Id>(c.num_objects())) {
      r.add("functor_dangling", "object image out of range");
      return r;
    }
  for (Id f : F.mor)
    if (f < 0 || f >= static_cast<Id>(c.num_morphisms())) {
      r.add("functor_dangling", "morphism image out of range");
      return r;
    }
  for (Id f = 0; f < static_cast<Id>(d.num_morphisms()); ++f) {
    Id Ff = F.mor[f];
    if (c.source(Ff) != F.obj[d.source(f)] || c.target(Ff) != F.obj[d.target(f)])
      r.add("functor_endpoints", d.morphism_name(f));
  }
  for (Id x = 0; x < static_cast<Id>(d.num_objects()); ++x)
    if (F.mor[d.identity(x)] != c.identity(F.obj[x])) r.add("functor_identity", d.object_name(x));
  if (!r.ok()) return r;
  for (Id f = 0; f < static_cast<Id>(d.num_morphisms()); ++f)
    for (Id g : d.out(d.target(f)))
      if (F.mor[d.compose(g, f)] != c.compose(F.mor[g], F.mor[f]))
        r.add("functor_composition", d.morphism_name(g) + "∘" + d.morphism_name(f));
  return r;
}

EquivalenceVerdict is_equivalence(const FinFunctor& F) {
  auto rep = validate_functor(F);
  if (!rep.ok()) throw InputError("is_equivalence on an invalid functor: " + rep.summary());
  const FinCategory& d = *F.dom;
  const FinCategory& c = *F.cod;
  const Id n = static_cast<Id>(d.num_objects());
  std::vector<char> seen(c.num_morphisms(), 0);
  for (Id a = 0; a < n; ++a) {
    for (Id b = 0; b < n; ++b) {
      const auto& src = d.hom(a, b);
      const auto& dst = c.hom(F.obj[a], F.obj[b]);
      std::string where = "Hom(" + d.object_name(a) + "," + d.object_name(b) + ")";
      if (src.size() != dst.size())
        return {false, where + " has " + std::to_string(src.size()) + " elements but its image hom-set has " +
                           std::to_string(dst.size())};
      for (Id f : src) {
        Id Ff = F.mor[f];
        if (seen[Ff]) {
          for (Id g : dst) seen[g] = 0;
          return {false, where + " is not mapped injectively"};
        }
        seen[Ff] = 1;
      }
      for (Id g : dst) seen[g] = 0;
    }
  }
  std::vector<char> hit(c.num_iso_classes(), 0);
  for (Id a = 0; a < n; ++a) hit[c.iso_class(F.obj[a])] = 1;
  for (Id y = 0; y < static_cast<Id>(c.num_objects()); ++y)
    if (!hit[c.iso_class(y)])
      return {false, "object " + c.object_name(y) + " is not isomorphic to any image object"};
  return {};
}

IsoClasses iso_classes(const FinCategory& c) {
  IsoClasses out;
  out.count = c.num_iso_classes();
  out.class_of.resize(c.num_objects());
  out.representative.assign(out.count, kNone);
  for (Id x = 0; x < static_cast<Id>(c.num_objects()); ++x) {
    Id k = c.iso_class(x);
    out.class_of[x] = k;
    if (out.representative[k] == kNone) out.representative[k] = x;
  }
  return out;
}

std::vector<Id> induced_on_classes(const FinFunctor& F) {
  std::vector<Id> out(F.dom->num_iso_classes(), kNone);
  for (Id x = 0; x < static_cast<Id>(F.dom->num_objects()); ++x) {
    Id k = F.dom->iso_class(x);
    Id v = F.cod->iso_class(F.obj[x]);
    if (out[k] == kNone) out[k] = v;
    else if (out[k] != v) throw InternalError("functor does not respect isomorphism classes");
  }
  return out;
}

Verdict verify_nat_iso(const FinFunctor& F, const FinFunctor& G, const std::vector<Id>& comp) {
  if (F.dom != G.dom && F.dom->num_objects() != G.dom->num_objects())
    throw InputError("verify_nat_iso: functors are not parallel");
  const FinCategory& d = *F.dom;
  const FinCategory& c = *F.cod;
  if (comp.size() != d.num_objects())
    throw InputError("verify_nat_iso: component missing for some object");
  for (Id x = 0; x < static_cast<Id>(d.num_objects()); ++x) {
    Id t = comp[x];
    if (t == kNone || t < 0 || t >= static_cast<Id>(c.num_morphisms()))
      throw InputError("verify_nat_iso: component missing at " + d.object_name(x));
    if (c.source(t) != F.obj[x] || c.target(t) != G.obj[x])
      return Verdict::fail("component at " + d.object_name(x) + " has the wrong endpoints");
    if (c.inverse(t) == kNone) return Verdict::fail("component at " + d.object_name(x) + " is not invertible");
  }
  for (Id f = 0; f < static_cast<Id>(d.num_morphisms()); ++f) {
    Id a = d.source(f), b = d.target(f);
    if (c.compose(comp[b], F.mor[f]) != c.compose(G.mor[f], comp[a]))
      return Verdict::fail("naturality square at " + d.morphism_name(f));
  }
  return Verdict::pass();
}

FinFunctor identity_functor(const CatPtr& c) {
  FinFunctor F{c, c, {}, {}};
  F.obj.resize(c->num_objects());
  F.mor.resize(c->num_morphisms());
  std::iota(F.obj.begin(), F.obj.end(), 0);
  std::iota(F.mor.begin(), F.mor.end(), 0);
  return F;
}

FinFunctor compose_functors(const FinFunctor& G, const FinFunctor& F) {
  FinFunctor H{F.dom, G.cod, {}, {}};
  H.obj.resize(F.obj.size());
  H.mor.resize(F.mor.size());
  for (std::size_t i = 0; i < F.obj.size(); ++i) H.obj[i] = G.obj[F.obj[i]];
  for (std::size_t i = 0; i < F.mor.size(); ++i) H.mor[i] = G.mor[F.mor[i]];
  return H;
}

bool same_functor(const FinFunctor& a, const FinFunctor& b) {
  return a.obj == b.obj && a.mor == b.mor;
}

CatPtr product_of(const std::vector<const FinCategory*>& factors) {
  // Ids are mixed-radix tuples with the first factor most significant.
  FinCategory::Builder b;
  const std::size_t k = factors.size();
  std::size_t nobj = 1, nmor = 1;
  for (auto* f : factors) {
    nobj *= f->num_objects();
    nmor *= f->num_morphisms();
  }
  std::vector<Id> digits(k);
  auto decode = [&](std::size_t idx, bool objects) {
    for (std::size_t i = k; i-- > 0;) {
      std::size_t base = objects ? factors[i]->num_objects() : factors[i]->num_morphisms();
      digits[i] = static_cast<Id>(idx % base);
      idx /= base;
    }
  };
  auto encode = [&](const std::vector<Id>& d, bool objects) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t base = objects ? factors[i]->num_objects() : factors[i]->num_morphisms();
      idx = idx * base + static_cast<std::size_t>(d[i]);
    }
    return static_cast<Id>(idx);
  };
  for (std::size_t o = 0; o < nobj; ++o) {
    decode(o, true);
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < k; ++i) parts.push_back(factors[i]->object_name(digits[i]));
    b.add_object("(" + join(parts, ",") + ")");
  }
  std::vector<Id> s(k), t(k);
  for (std::size_t mo = 0; mo < nmor; ++mo) {
    decode(mo, false);
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < k; ++i) {
      parts.push_back(factors[i]->morphism_name(digits[i]));
      s[i] = factors[i]->source(digits[i]);
      t[i] = factors[i]->target(digits[i]);
    }
    b.add_morphism("(" + join(parts, ",") + ")", encode(s, true), encode(t, true));
  }
  for (std::size_t o = 0; o < nobj; ++o) {
    decode(o, true);
    std::vector<Id> ids(k);
    for (std::size_t i = 0; i < k; ++i) ids[i] = factors[i]->identity(digits[i]);
    b.set_identity(static_cast<Id>(o), encode(ids, false));
  }
  b.compose_with([factors, k, encode, decode_m = [factors, k](std::size_t idx) {
                    std::vector<Id> d(k);
                    for (std::size_t i = k; i-- > 0;) {
                      d[i] = static_cast<Id>(idx % factors[i]->num_morphisms());
                      idx /= factors[i]->num_morphisms();
                    }
                    return d;
                  }](Id g, Id f) {
    auto dg = decode_m(static_cast<std::size_t>(g));
    auto df = decode_m(static_cast<std::size_t>(f));
    std::vector<Id> h(k);
    for (std::size_t i = 0; i < k; ++i) {
      h[i] = factors[i]->compose(dg[i], df[i]);
      if (h[i] == kNone) return kNone;
    }
    return encode(h, false);
  });
  return b.build();
}

CatPtr product(const FinCategory& c, const FinCategory& d) { return product_of({&c, &d}); }

FinFunctor tuple_functor(const std::vector<const FinFunctor*>& parts, const CatPtr& prod) {
  FinFunctor T{parts.at(0)->dom, prod, {}, {}};
  const FinCategory& d = *T.dom;
  T.obj.resize(d.num_objects());
  T.mor.resize(d.num_morphisms());
  for (Id x = 0; x < static_cast<Id>(d.num_objects()); ++x) {
    std::size_t idx = 0;
    for (auto* p : parts) idx = idx * p->cod->num_objects() + static_cast<std::size_t>(p->obj[x]);
    T.obj[x] = static_cast<Id>(idx);
  }
  for (Id f = 0; f < static_cast<Id>(d.num_morphisms()); ++f) {
    std::size_t idx = 0;
    for (auto* p : parts) idx = idx * p->cod->num_morphisms() + static_cast<std::size_t>(p->mor[f]);
    T.mor[f] = static_cast<Id>(idx);
  }
  return T;
}

CatPtr terminal_category() { return discrete_category({"*"}); }

CatPtr discrete_category(const std::vector<std::string>& names) {
  FinCategory::Builder b;
  for (const auto& n : names) b.add_object(n);
  for (Id i = 0; i < static_cast<Id>(names.size()); ++i) {
    b.add_morphism("id:" + names[i], i, i);
    b.set_identity(i, i);
    b.set_compose(i, i, i);
  }
  return b.build();
}

CatPtr cyclic_group_category(int order) {
  FinCategory::Builder b;
  b.add_object("*");
  for (int i = 0; i < order; ++i) b.add_morphism(std::to_string(i), 0, 0);
  b.set_identity(0, 0);
  b.compose_with([order](Id g, Id f) { return static_cast<Id>((g + f) % order); });
  return b.build();
}

CatPtr codiscrete_category(const std::vector<std::string>& names) {
  FinCategory::Builder b;
  const Id n = static_cast<Id>(names.size());
  for (const auto& s : names) b.add_object(s);
  for (Id i = 0; i < n; ++i)
    for (Id j = 0; j < n; ++j) b.add_morphism(names[i] + ">" + names[j], i, j);
  for (Id i = 0; i < n; ++i) b.set_identity(i, i * n + i);
  b.compose_with([n](Id g, Id f) { return (f / n) * n + g % n; });
  return b.build();
}

CatPtr full_subcategory(const FinCategory& c, const std::vector<Id>& objects,
                        std::vector<Id>* origin) {
  FinCategory::Builder b;
  std::vector<Id> local(c.num_objects(), kNone);
  for (Id x : objects) local[x] = b.add_object(c.object_name(x));
  std::vector<Id> mor_local(c.num_morphisms(), kNone);
  std::vector<Id> back;
  for (Id x : objects)
    for (Id y : objects)
      for (Id f : c.hom(x, y)) {
        mor_local[f] = b.add_morphism(c.morphism_name(f), local[x], local[y]);
        back.push_back(f);
      }
  for (Id x : objects) b.set_identity(local[x], mor_local[c.identity(x)]);
  b.compose_with([&c, back, mor_local](Id g, Id f) {
    Id h = c.compose(back[g], back[f]);
    return h == kNone ? kNone : mor_local[h];
  });
  if (origin) *origin = back;
  return b.build();
}

}  // namespace pictam
