#include <doctest.h>

#include <set>

#include "pictam/generators.hpp"
#include "pictam/ktheory.hpp"

using namespace pictam;

namespace {

std::size_t hom_size(const PicardCategory& p, Id a, Id b) { return p.cat->hom(a, b).size(); }

// Level 2 is determined by x_1, x_2, x_12 and f_{1,2} : x_12 -> x_1 x_2;
// a morphism is determined by H_1 and H_2.
std::pair<std::size_t, std::size_t> level2_counts(const PicardCategory& p) {
  const Id n = static_cast<Id>(p.num_objects());
  std::size_t objects = 0, morphisms = 0;
  for (Id x1 = 0; x1 < n; ++x1)
    for (Id x2 = 0; x2 < n; ++x2)
      for (Id x12 = 0; x12 < n; ++x12) objects += hom_size(p, x12, p.tensor(x1, x2));
  // each object pair (a, b) contributes hom(a1,b1) * hom(a2,b2)
  std::vector<std::size_t> weight(n * n, 0);
  for (Id x1 = 0; x1 < n; ++x1)
    for (Id x2 = 0; x2 < n; ++x2)
      for (Id x12 = 0; x12 < n; ++x12) weight[x1 * n + x2] += hom_size(p, x12, p.tensor(x1, x2));
  for (Id a = 0; a < n * n; ++a)
    for (Id b = 0; b < n * n; ++b)
      morphisms += weight[a] * weight[b] * hom_size(p, a / n, b / n) * hom_size(p, a % n, b % n);
  return {objects, morphisms};
}

}  // namespace

TEST_SUITE("ktheory") {
  TEST_CASE("level 0 is terminal") {
    for (const auto& p : corpus()) {
      auto l = k_level(p, 0);
      CHECK(l->cat->num_objects() == 1);
      CHECK(l->cat->num_morphisms() == 1);
    }
  }

  TEST_CASE("level 1 is the underlying groupoid") {
    for (const auto& p : corpus()) {
      CAPTURE(p->label);
      auto l = k_level(p, 1);
      const auto& c = *l->cat;
      REQUIRE(c.num_objects() == p->num_objects());
      REQUIRE(c.num_morphisms() == p->num_morphisms());
      std::set<Id> objs, mors;
      for (const auto& o : l->objects) {
        objs.insert(o.x[1]);
        CHECK(o.x[0] == p->unit);
      }
      for (Id f = 0; f < static_cast<Id>(c.num_morphisms()); ++f) {
        Id h = l->H[f][1];
        mors.insert(h);
        CHECK(p->cat->source(h) == l->objects[c.source(f)].x[1]);
        CHECK(p->cat->target(h) == l->objects[c.target(f)].x[1]);
        for (Id g : c.out(c.target(f))) CHECK(l->H[c.compose(g, f)][1] == p->comp(l->H[g][1], h));
      }
      CHECK(objs.size() == p->num_objects());
      CHECK(mors.size() == p->num_morphisms());
    }
  }

  TEST_CASE("trivial model gives terminal levels") {
    auto p = trivial_picard();
    for (int n = 0; n <= 4; ++n) {
      auto l = k_level(p, n);
      CHECK(l->cat->num_objects() == 1);
      CHECK(l->cat->num_morphisms() == 1);
    }
  }

  TEST_CASE("level 2 counts") {
    for (const auto& p : corpus()) {
      CAPTURE(p->label);
      auto l = k_level(p, 2);
      auto [objects, morphisms] = level2_counts(*p);
      CHECK(l->cat->num_objects() == objects);
      CHECK(l->cat->num_morphisms() == morphisms);
      CHECK(l->cat->is_groupoid());
      for (const auto& o : l->objects) CHECK(validate_k_object(*p, 2, o).ok());
    }
    auto z2 = corpus_instance("split(Z/2,0,0)");
    auto l = k_level(z2, 2);
    CHECK(l->cat->num_objects() == 4);
    CHECK(l->cat->is_discrete());
    for (const auto& o : l->objects) CHECK(o.x[3] == z2->tensor(o.x[1], o.x[2]));
  }

  TEST_CASE("actions") {
    auto p = corpus_instance("split(Z/2,Z/2,beta)");
    auto l1 = k_level(p, 1), l2 = k_level(p, 2);
    CHECK(same_functor(k_action(*l2, *l2, gamma_identity(2)), identity_functor(l2->cat)));
    auto m = k_action(*l2, *l1, gamma_mult());
    CHECK(validate_functor(m).ok());
    for (Id a = 0; a < static_cast<Id>(l2->objects.size()); ++a)
      CHECK(l1->objects[m.obj[a]].x[1] == l2->objects[a].x[3]);
    auto tw = k_action(*l2, *l2, gamma_twist());
    for (Id a = 0; a < static_cast<Id>(l2->objects.size()); ++a) {
      const auto& src = l2->objects[a];
      const auto& img = l2->objects[tw.obj[a]];
      CHECK(img.x[1] == src.x[2]);
      CHECK(img.fx(1, 2) == src.fx(2, 1));
    }
  }

  TEST_CASE("actions compose") {
    for (const auto& name : {"split(0,Z/2,0)", "split(Z/2,0,0)"}) {
      auto k = k_theory(corpus_instance(name), 3);
      REQUIRE(validate_gamma(*k.gamma).ok());
      auto maps = all_gamma_maps_upto(3);
      int pairs = 0;
      for (const auto& s : maps)
        for (const auto& t : maps) {
          if (s.m != t.n) continue;
          auto direct = k_action(*k.levels[s.n], *k.levels[t.m], compose_gamma(t, s));
          auto stepwise = compose_functors(k_action(*k.levels[t.n], *k.levels[t.m], t),
                                           k_action(*k.levels[s.n], *k.levels[s.m], s));
          CHECK(same_functor(direct, stepwise));
          ++pairs;
        }
      CHECK(pairs > 1000);
    }
  }

  TEST_CASE("K-theory is very special") {
    for (const auto& p : corpus()) {
      CAPTURE(p->label);
      auto k = k_theory(p, 3);
      CHECK(validate_gamma(*k.gamma).ok());
      CHECK(is_special(*k.gamma));
      CHECK(is_very_special(*k.gamma));
      for (const auto& l : k.levels) CHECK(l->cat->is_groupoid());
    }
  }

  TEST_CASE("bound and sampling") {
    auto p = corpus_instance("split(Z/2,Z/2,beta)");
    EnumerationOptions tight;
    tight.bound = 4;
    try {
      k_level(p, 3, tight);
      FAIL("expected refusal");
    } catch (const BoundExceeded& e) {
      CHECK(e.estimate > 4);
      CHECK(e.estimate == doctest::Approx(k_level_estimate(*p, 3)));
    }
    EnumerationOptions s;
    s.sampled = true;
    s.seed = 42;
    s.samples = 5;
    auto a = k_level(p, 3, s);
    auto b = k_level(p, 3, s);
    CHECK(a->sampled);
    CHECK(a->seed == 42);
    CHECK(a->objects.size() <= 5);
    CHECK(a->objects.size() > 0);
    REQUIRE(a->objects.size() == b->objects.size());
    for (std::size_t i = 0; i < a->objects.size(); ++i) {
      CHECK(a->objects[i].x == b->objects[i].x);
      CHECK(validate_k_object(*p, 3, a->objects[i]).ok());
    }
    s.samples = 0;
    CHECK_THROWS_AS(k_level(p, 3, s), InputError);
  }

  TEST_CASE("functor between K-theories") {
    auto p = corpus_instance("split(Z/3,0,0)");
    auto k = k_theory(p, 2);
    for (const auto& g : generated_monoidal_functors(p)) {
      CAPTURE(g.name);
      auto kt = g.functor.cod == p ? k : k_theory(g.functor.cod, 2);
      auto f = k_of_monoidal(g.functor, k, kt);
      CHECK(validate_gamma_morphism(f).ok());
    }
    auto other = k_theory(corpus_instance("split(Z/2,0,0)"), 2);
    CHECK_THROWS_AS(k_of_functor(identity_monoidal(p), *other.levels[1], *other.levels[1]), InputError);
  }
}
