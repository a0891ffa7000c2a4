#include "pictam/generators.hpp"

#include <algorithm>
#include <memory>

namespace pictam {

std::vector<PicPtr> corpus() {
  auto z2 = cyclic_group(2), z3 = cyclic_group(3), o = trivial_group();
  return {
      trivial_picard(),
      build_split(z2, o, zero_form(z2)),
      build_split(z3, o, zero_form(z3)),
      build_split(o, z2, zero_form(o)),
      build_split(z2, z2, zero_form(z2)),
      build_split(z2, z2, product_form_z2()),
  };
}

std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& p : corpus()) out.push_back(p->label);
  return out;
}

PicPtr corpus_instance(const std::string& name) {
  for (const auto& p : corpus())
    if (p->label == name) return p;
  throw InputError("unknown corpus instance '" + name + "'; known: " + join(corpus_names(), ", "));
}

std::vector<NamedMonoidal> generated_monoidal_functors(const PicPtr& p) {
  std::vector<NamedMonoidal> out;
  auto keep = [&](const std::string& name, MonoidalFunctor f) {
    if (validate_monoidal_functor(f).ok()) out.push_back({name, std::move(f)});
  };
  keep("identity", identity_monoidal(p));
  auto triv = trivial_picard();
  if (!p->split) return out;
  const auto& A = p->split->a;
  const auto& B = p->split->b;
  auto attempt = [&](const std::string& name, const PicPtr& cod, std::vector<int> obj, std::vector<int> lab) {
    try {
      keep(name, split_functor(p, cod, obj, lab));
    } catch (const InputError&) {
    }
  };
  std::vector<int> neg_obj, neg_lab, zero_obj(A.size(), 0), zero_lab(B.size(), 0), ident_obj;
  for (int x = 0; x < A.size(); ++x) {
    neg_obj.push_back(A.neg(x));
    ident_obj.push_back(x);
  }
  for (int b = 0; b < B.size(); ++b) neg_lab.push_back(B.neg(b));
  attempt("negation", p, neg_obj, neg_lab);
  if (B.size() > 1) attempt("quotient", build_split(A, trivial_group(), zero_form(A)), ident_obj, zero_lab);
  attempt("to-trivial", triv, zero_obj, zero_lab);
  return out;
}

CatPtr thin_category(int n, std::vector<std::vector<bool>> rel) {
  for (int i = 0; i < n; ++i) rel[i][i] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rel[i][k] && rel[k][j]) rel[i][j] = true;
  FinCategory::Builder b;
  for (int i = 0; i < n; ++i) b.add_object("o" + std::to_string(i));
  std::vector<std::vector<Id>> arrow(n, std::vector<Id>(n, kNone));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rel[i][j]) arrow[i][j] = b.add_morphism("o" + std::to_string(i) + "<o" + std::to_string(j), i, j);
  for (int i = 0; i < n; ++i) b.set_identity(i, arrow[i][i]);
  std::vector<std::pair<int, int>> ends;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rel[i][j]) ends.emplace_back(i, j);
  b.compose_with([arrow, ends](Id g, Id f) { return arrow[ends[f].first][ends[g].second]; });
  return b.build();
}

CatPtr random_thin_category(std::mt19937_64& rng, int max_objects) {
  std::uniform_int_distribution<int> size(1, std::max(1, max_objects));
  std::bernoulli_distribution edge(0.35);
  const int n = size(rng);
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && edge(rng)) rel[i][j] = true;
  return thin_category(n, rel);
}

CatPtr random_groupoid(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> small(1, 2), order(1, 3);
  const int a = small(rng), b = small(rng), m = order(rng);
  std::vector<std::string> dn, cn;
  for (int i = 0; i < a; ++i) dn.push_back("d" + std::to_string(i));
  for (int i = 0; i < b; ++i) cn.push_back("c" + std::to_string(i));
  auto d = discrete_category(dn), c = codiscrete_category(cn), z = cyclic_group_category(m);
  return product_of({d.get(), c.get(), z.get()});
}

CatPtr random_category(std::mt19937_64& rng, int max_objects) {
  std::bernoulli_distribution coin(0.5);
  return coin(rng) ? random_thin_category(rng, max_objects) : random_groupoid(rng);
}

SCatPtr discrete_nerve(const FinCategory& c, int N) {
  auto nv = nerve_of(c, N);
  auto x = std::make_shared<SimplicialCategory>();
  x->N = N;
  for (int s = 0; s <= N; ++s) x->levels.push_back(discrete_category(nv.elements(s)));
  for (const auto& alpha : all_delta_maps_upto(N)) {
    auto img = nv.act_level(0, alpha, static_cast<std::size_t>(alpha.n));
    x->action.emplace(alpha, FinFunctor{x->levels[alpha.n], x->levels[alpha.m],
                                        std::vector<Id>(img.begin(), img.end()),
                                        std::vector<Id>(img.begin(), img.end())});
  }
  return x;
}

namespace {

CatPtr fat_level(const std::vector<std::string>& base, const std::vector<std::string>& fibre) {
  const Id ny = static_cast<Id>(fibre.size());
  FinCategory::Builder b;
  for (const auto& e : base)
    for (const auto& y : fibre) b.add_object(e + "|" + y);
  for (Id e = 0; e < static_cast<Id>(base.size()); ++e)
    for (Id y = 0; y < ny; ++y)
      for (Id z = 0; z < ny; ++z)
        b.add_morphism(base[e] + "|" + fibre[y] + ">" + fibre[z], e * ny + y, e * ny + z);
  for (Id o = 0; o < static_cast<Id>(base.size()) * ny; ++o) b.set_identity(o, o * ny + o % ny);
  // (e,y,z) has id (e*ny + y)*ny + z
  b.compose_with([ny](Id g, Id f) { return (f / ny) * ny + g % ny; });
  return b.build();
}

}  // namespace

SCatPtr fattened_nerve(const FinCategory& c, int N) {
  auto nv = nerve_of(c, N);
  auto fib = nerve_of(*cyclic_group_category(2), N);
  auto x = std::make_shared<SimplicialCategory>();
  x->N = N;
  for (int s = 0; s <= N; ++s) x->levels.push_back(fat_level(nv.elements(s), fib.elements(s)));
  for (const auto& alpha : all_delta_maps_upto(N)) {
    auto base = nv.act_level(0, alpha, static_cast<std::size_t>(alpha.n));
    auto fibre = fib.act_level(0, alpha, static_cast<std::size_t>(alpha.n));
    const Id ny = static_cast<Id>(fib.size(alpha.n));
    const Id my = static_cast<Id>(fib.size(alpha.m));
    FinFunctor f{x->levels[alpha.n], x->levels[alpha.m], {}, {}};
    for (Id e = 0; e < static_cast<Id>(nv.size(alpha.n)); ++e)
      for (Id y = 0; y < ny; ++y) f.obj.push_back(base[e] * my + fibre[y]);
    for (Id e = 0; e < static_cast<Id>(nv.size(alpha.n)); ++e)
      for (Id y = 0; y < ny; ++y)
        for (Id z = 0; z < ny; ++z) f.mor.push_back((base[e] * my + fibre[y]) * my + fibre[z]);
    x->action.emplace(alpha, std::move(f));
  }
  return x;
}

SimplicialFunctor fattened_projection(const SCatPtr& fat, const SCatPtr& dn) {
  SimplicialFunctor out{fat, dn, {}};
  for (int s = 0; s <= fat->N; ++s) {
    const auto& from = *fat->levels[s];
    const Id ne = static_cast<Id>(dn->levels[s]->num_objects());
    const Id ny = static_cast<Id>(from.num_objects()) / ne;
    FinFunctor f{fat->levels[s], dn->levels[s], {}, {}};
    for (Id o = 0; o < static_cast<Id>(from.num_objects()); ++o) f.obj.push_back(o / ny);
    for (Id m = 0; m < static_cast<Id>(from.num_morphisms()); ++m) f.mor.push_back(m / (ny * ny));
    out.level.push_back(std::move(f));
  }
  return out;
}

SimplicialFunctor discrete_nerve_map(const FinFunctor& F, const SCatPtr& dom, const SCatPtr& cod) {
  auto nd = std::make_shared<MultiSimplicialSet>(nerve_of(*F.dom, dom->N));
  auto nc = std::make_shared<MultiSimplicialSet>(nerve_of(*F.cod, cod->N));
  auto m = nerve_map(F, nd, nc);
  SimplicialFunctor out{dom, cod, {}};
  for (int s = 0; s <= dom->N; ++s) {
    std::vector<Id> img(m.level[s].begin(), m.level[s].end());
    out.level.push_back(FinFunctor{dom->levels[s], cod->levels[s], img, img});
  }
  return out;
}

namespace {

FinFunctor to_terminal(const CatPtr& c, const CatPtr& t) {
  return FinFunctor{c, t, std::vector<Id>(c->num_objects(), 0), std::vector<Id>(c->num_morphisms(), 0)};
}

}  // namespace

std::vector<NamedSimplicialFunctor> two_category_maps(std::uint64_t seed, int count) {
  constexpr int N = 3;
  std::vector<NamedSimplicialFunctor> out;
  auto term = terminal_category();
  auto dterm = discrete_nerve(*term, N);
  auto two_disc = discrete_category({"a", "b"});
  auto two_codisc = codiscrete_category({"a", "b"});
  auto dd = discrete_nerve(*two_disc, N);
  auto dc = discrete_nerve(*two_codisc, N);

  out.push_back({"identity(codiscrete{a,b})", discrete_nerve_map(identity_functor(two_codisc), dc, dc)});
  out.push_back({"collapse(codiscrete{a,b})", discrete_nerve_map(to_terminal(two_codisc, term), dc, dterm)});
  out.push_back({"collapse(discrete{a,b})", discrete_nerve_map(to_terminal(two_disc, term), dd, dterm)});
  {
    FinFunctor inc{two_disc, two_codisc, {0, 1}, {0, 3}};
    out.push_back({"inclusion(discrete{a,b},codiscrete{a,b})", discrete_nerve_map(inc, dd, dc)});
  }

  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    auto c = random_category(rng, 4);
    const std::string tag = "#" + std::to_string(i);
    auto dn = discrete_nerve(*c, N);
    auto fat = fattened_nerve(*c, 2);
    auto dn2 = discrete_nerve(*c, 2);
    out.push_back({"fat-projection" + tag, fattened_projection(fat, dn2)});
    auto cls = iso_classes(*c);
    std::vector<Id> origin;
    auto sk = full_subcategory(*c, cls.representative, &origin);
    auto dsk = discrete_nerve(*sk, N);
    out.push_back({"skeleton" + tag, discrete_nerve_map(FinFunctor{sk, c, cls.representative, origin}, dsk, dn)});
    out.push_back({"collapse" + tag, discrete_nerve_map(to_terminal(c, term), dn, dterm)});
  }
  return out;
}

std::vector<MSSPtr> generated_multisimplicial(std::uint64_t seed, int count) {
  std::vector<MSSPtr> out;
  std::mt19937_64 rng(seed);
  for (int i = 0; static_cast<int>(out.size()) < count; ++i) {
    auto c = random_category(rng, 3);
    auto d = random_category(rng, 3);
    switch (i % 4) {
      case 0:
        out.push_back(std::make_shared<MultiSimplicialSet>(levelwise_nerve(*discrete_nerve(*c, 2))));
        break;
      case 1:
        out.push_back(std::make_shared<MultiSimplicialSet>(levelwise_nerve(*fattened_nerve(*c, 2))));
        break;
      case 2:
        out.push_back(std::make_shared<MultiSimplicialSet>(external_product(nerve_of(*c, 2), nerve_of(*d, 2))));
        break;
      default: {
        auto e = random_groupoid(rng);
        auto cd = external_product(nerve_of(*c, 2), nerve_of(*d, 2));
        out.push_back(std::make_shared<MultiSimplicialSet>(external_product(cd, nerve_of(*e, 2))));
      }
    }
  }
  return out;
}

GammaPtr capped_monoid_gamma(int N) {
  std::vector<std::vector<int>> table(3, std::vector<int>(3));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) table[a][b] = std::min(a + b, 2);
  return monoid_gamma({"0", "1", "2"}, table, 0, N, "capped{0,1,2}");
}

GammaPtr terminal_level2_gamma() {
  auto a = std::make_shared<GammaGroupoid>();
  a->N = 2;
  a->label = "terminal-level2";
  auto t = terminal_category();
  auto mid = discrete_category({"a", "b"});
  a->levels = {t, mid, t};
  for (const auto& s : all_gamma_maps_upto(2)) {
    const auto& dom = a->levels[s.n];
    const auto& cod = a->levels[s.m];
    FinFunctor f{dom, cod, {}, {}};
    const bool keep = s == gamma_identity(1);
    for (Id x = 0; x < static_cast<Id>(dom->num_objects()); ++x) f.obj.push_back(keep ? x : 0);
    for (Id m = 0; m < static_cast<Id>(dom->num_morphisms()); ++m) f.mor.push_back(keep ? m : 0);
    a->action.emplace(s, std::move(f));
  }
  return a;
}

}  // namespace pictam
