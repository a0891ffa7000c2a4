#include <doctest.h>

#include <set>

#include "pictam/bridge.hpp"
#include "pictam/generators.hpp"

using namespace pictam;

namespace {

bool injective_on_objects(const FinFunctor& f) {
  std::set<Id> s(f.obj.begin(), f.obj.end());
  return s.size() == f.obj.size();
}

bool all_identity(const KLevel& k, const NatTransformation& e) {
  for (Id x = 0; x < static_cast<Id>(k.cat->num_objects()); ++x)
    if (e.components[x] != k.cat->identity(x)) return false;
  return true;
}

}  // namespace

TEST_SUITE("bridge") {
  TEST_CASE("convex decomposition") {
    auto d = convex_decomposition(subset_of({1, 3}));
    CHECK(d.blocks == std::vector<Subset>{subset_of({1}), subset_of({3})});
    d = convex_decomposition(subset_of({1, 2, 4, 6, 7}));
    CHECK(d.blocks == std::vector<Subset>{subset_of({1, 2}), subset_of({4}), subset_of({6, 7})});
    CHECK(convex_decomposition(0).blocks.empty());
    for (Subset s = 1; s < 64; ++s) {
      Subset all = 0;
      auto blocks = convex_decomposition(s).blocks;
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        CHECK(is_convex(blocks[i]));
        CHECK((all & blocks[i]) == 0);
        if (i > 0) CHECK_FALSE(is_convex(blocks[i - 1] | blocks[i]));
        all |= blocks[i];
      }
      CHECK(all == s);
    }
  }

  TEST_CASE("forget and extend at low levels are inverse isomorphisms") {
    for (const auto& p : corpus()) {
      CAPTURE(p->label);
      for (int n = 0; n <= 2; ++n) {
        auto k = k_level(p, n);
        auto nv = nerve_level(p, n);
        auto U = forget_U(*k, *nv);
        auto F = extend_F(*nv, *k);
        CHECK(is_isomorphism_of_categories(U));
        CHECK(same_functor(compose_functors(U, F), identity_functor(nv->cat)));
        CHECK(same_functor(compose_functors(F, U), identity_functor(k->cat)));
        auto e = eta(*k, U, F);
        CHECK(verify_nat_iso(e.source, e.target, e.components));
        CHECK(all_identity(*k, e));
      }
    }
  }

  TEST_CASE("level 3 of the one-object model") {
    auto p = corpus_instance("split(0,Z/2,0)");
    auto k = k_level(p, 3);
    auto nv = nerve_level(p, 3);
    auto U = forget_U(*k, *nv);
    auto F = extend_F(*nv, *k);
    CHECK(validate_functor(U).ok());
    CHECK_FALSE(injective_on_objects(U));
    CHECK(is_equivalence(U));
    CHECK(same_functor(compose_functors(U, F), identity_functor(nv->cat)));
    auto e = eta(*k, U, F);
    CHECK(verify_nat_iso(e.source, e.target, e.components));
    CHECK_FALSE(all_identity(*k, e));
  }

  TEST_CASE("extension along convex blocks") {
    auto p = corpus_instance("split(Z/2,Z/2,beta)");
    auto k = k_level(p, 3);
    auto nv = nerve_level(p, 3);
    auto F = extend_F(*nv, *k);
    const Subset s1 = subset_of({1}), s3 = subset_of({3}), s13 = subset_of({1, 3});
    for (Id a = 0; a < static_cast<Id>(nv->objects.size()); ++a) {
      const auto& o = nv->objects[a];
      const auto& img = k->objects[F.obj[a]];
      // convex I = [i+1, j] keeps x_ij
      CHECK(img.x[subset_of({2, 3})] == o.xx(1, 3));
      CHECK(img.x[s1] == o.xx(0, 1));
      CHECK(img.x[s13] == p->tensor(img.x[s3], img.x[s1]));
      CHECK(validate_k_object(*p, 3, img).ok());
    }
  }

  TEST_CASE("eta component at {1,3} is f_{{3},{1}}") {
    auto p = corpus_instance("split(Z/2,Z/2,beta)");
    auto k = k_level(p, 3);
    auto nv = nerve_level(p, 3);
    auto U = forget_U(*k, *nv);
    auto F = extend_F(*nv, *k);
    auto e = eta(*k, U, F);
    const Subset s1 = subset_of({1}), s3 = subset_of({3}), s13 = subset_of({1, 3});
    int nontrivial = 0;
    for (Id a = 0; a < static_cast<Id>(k->objects.size()); ++a) {
      const auto& o = k->objects[a];
      Id comp = e.components[a];
      CHECK(k->H[comp][s13] == o.fx(s3, s1));
      CHECK(eta_family(*p, 3, o) == k->H[comp]);
      if (o.fx(s3, s1) != p->id(o.x[s13])) ++nontrivial;
    }
    CHECK(nontrivial > 0);
    auto s = verify_eta_sampled(*k, e, 99, 200);
    CHECK(s.verdict);
    CHECK(s.draws == 200);
    CHECK(s.seed == 99);
  }

  TEST_CASE("forgetting is natural over Delta") {
    for (const auto& name : {"split(0,Z/2,0)", "split(Z/3,0,0)", "split(Z/2,Z/2,beta)"}) {
      CAPTURE(name);
      auto p = corpus_instance(name);
      auto k = k_theory(p, 3);
      auto nv = nerve(p, 3);
      std::vector<FinFunctor> U;
      for (int n = 0; n <= 3; ++n) U.push_back(forget_U(*k.levels[n], *nv.levels[n]));
      CHECK(u_naturality(k, nv, U));
    }
  }

  TEST_CASE("Segal quasi-inverses") {
    auto z3 = monoid_gamma({"0", "1", "2"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 0, 2, "Z/3");
    auto q = choose_segal_inverse(*z3, 2);
    CHECK(verify_quasi_inverse(q));
    CHECK(same_functor(compose_functors(q.S, q.T), identity_functor(q.S.cod)));
    CHECK(same_functor(compose_functors(q.T, q.S), identity_functor(q.S.dom)));
    for (std::size_t i = 0; i < q.unit.size(); ++i) CHECK(q.unit[i] == q.S.dom->identity(static_cast<Id>(i)));

    auto k = k_theory(corpus_instance("split(0,Z/2,0)"), 3);
    for (int lvl : {2, 3}) {
      auto a = choose_segal_inverse(*k.gamma, lvl);
      auto b = choose_segal_inverse(*k.gamma, lvl);
      CHECK(verify_quasi_inverse(a));
      CHECK(a.T.obj == b.T.obj);
      CHECK(a.T.mor == b.T.mor);
      CHECK(a.unit == b.unit);
      CHECK(a.counit == b.counit);
    }
    // several preimages per tuple: min picks the smallest id, max the largest
    auto lo = choose_segal_inverse(*k.gamma, 2, ChoicePolicy::min_id);
    auto hi = choose_segal_inverse(*k.gamma, 2, ChoicePolicy::max_id);
    CHECK(verify_quasi_inverse(hi));
    const auto& S = lo.S;
    for (Id t = 0; t < static_cast<Id>(S.cod->num_objects()); ++t) {
      Id first = kNone, last = kNone;
      for (Id a = 0; a < static_cast<Id>(S.dom->num_objects()); ++a)
        if (S.cod->iso_class(S.obj[a]) == S.cod->iso_class(t)) {
          if (first == kNone) first = a;
          last = a;
        }
      CHECK(lo.T.obj[t] == first);
      CHECK(hi.T.obj[t] == last);
    }
    CHECK(lo.T.obj != hi.T.obj);

    CHECK_THROWS_AS(choose_segal_inverse(*terminal_level2_gamma(), 2), InputError);
    CHECK_THROWS_AS(choose_segal_inverse(*z3, 3), InputError);
  }

  TEST_CASE("picardization of the terminal Gamma-groupoid is trivial") {
    auto m = picardize(terminal_gamma(3));
    CHECK(m.pic->num_objects() == 1);
    CHECK(m.pic->num_morphisms() == 1);
    CHECK(validate_picard(*m.pic).ok());
  }

  TEST_CASE("picardization of K-theory recovers the model") {
    for (const auto& name : {"split(Z/3,0,0)", "split(Z/2,Z/2,beta)"}) {
      CAPTURE(name);
      auto p = corpus_instance(name);
      auto k = k_theory(p, 3);
      auto m = picardize(k.gamma);
      CHECK(validate_picard(*m.pic).ok());
      CHECK(m.pic->cat == k.levels[1]->cat);
      auto f = picardization_to_original(m, k);
      CHECK(validate_monoidal_functor(f).ok());
      CHECK(is_isomorphism_of_categories(f.functor));
      auto other = picardize(k.gamma, ChoicePolicy::max_id);
      CHECK(validate_picard(*other.pic).ok());
      CHECK(tensor_policies_isomorphic(m, other));
    }
  }

  TEST_CASE("zeta") {
    auto p = corpus_instance("split(Z/2,Z/2,beta)");
    auto k = k_theory(p, 3);
    auto m = picardize(k.gamma);
    auto km = k_theory(m.pic, 3);
    auto z = zeta(m, km);
    CHECK(validate_gamma_morphism(z).ok());
    CHECK(z.level[0].obj == std::vector<Id>{0});
    CHECK(z.level[0].mor == std::vector<Id>{0});
    CHECK(is_isomorphism_of_categories(z.level[1]));
    CHECK(is_levelwise_equivalence(z));
    for (int n = 1; n <= 3; ++n)
      for (const auto& o : km.levels[n]->objects) CHECK(validate_k_object(*m.pic, n, o).ok());
  }

  TEST_CASE("zeta is natural") {
    auto p = corpus_instance("split(Z/3,0,0)");
    auto k = k_theory(p, 3);
    auto m = picardize(k.gamma);
    auto km = k_theory(m.pic, 3);
    auto z = zeta(m, km);
    int tested = 0;
    for (const auto& g : generated_monoidal_functors(p)) {
      CAPTURE(g.name);
      const bool self = g.functor.cod == p;
      auto kq = self ? k : k_theory(g.functor.cod, 3);
      auto F = k_of_monoidal(g.functor, k, kq);
      auto mq = self ? m : picardize(kq.gamma);
      auto kmq = self ? km : k_theory(mq.pic, 3);
      auto zq = self ? z : zeta(mq, kmq);
      auto MF = picardize_morphism(F, m, mq);
      CHECK(validate_monoidal_functor(MF).ok());
      CHECK(zeta_naturality(F, MF, z, zq, km, kmq));
      ++tested;
    }
    CHECK(tested >= 3);
  }
}
