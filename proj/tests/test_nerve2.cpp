#include <doctest.h>

#include "pictam/generators.hpp"
#include "pictam/nerve2.hpp"

using namespace pictam;

TEST_SUITE("nerve2") {
  TEST_CASE("levels 0 and 1") {
    for (const auto& p : corpus()) {
      CAPTURE(p->label);
      auto l0 = nerve_level(p, 0);
      CHECK(l0->cat->num_objects() == 1);
      CHECK(l0->cat->num_morphisms() == 1);
      auto l1 = nerve_level(p, 1);
      REQUIRE(l1->cat->num_objects() == p->num_objects());
      CHECK(l1->cat->num_morphisms() == p->num_morphisms());
      for (Id a = 0; a < static_cast<Id>(l1->objects.size()); ++a) {
        const auto& o = l1->objects[a];
        CHECK(o.xx(0, 0) == p->unit);
        CHECK(o.xx(1, 1) == p->unit);
        for (Id b = 0; b < static_cast<Id>(l1->objects.size()); ++b)
          CHECK(l1->cat->hom(a, b).size() == p->cat->hom(o.xx(0, 1), l1->objects[b].xx(0, 1)).size());
      }
    }
  }

  TEST_CASE("level 2 of the one-object model") {
    auto p = corpus_instance("split(0,Z/2,0)");
    auto l = nerve_level(p, 2);
    REQUIRE(l->objects.size() == 2);
    std::vector<Id> choices;
    for (const auto& o : l->objects) {
      for (int i = 0; i <= 2; ++i)
        for (int j = i; j <= 2; ++j) CHECK(o.xx(i, j) == 0);
      choices.push_back(o.fx(0, 1, 2));
      CHECK(validate_nerve_object(*p, o).ok());
    }
    CHECK(choices[0] != choices[1]);
  }

  TEST_CASE("actions") {
    auto p = corpus_instance("split(Z/2,Z/2,beta)");
    auto l0 = nerve_level(p, 0), l1 = nerve_level(p, 1), l2 = nerve_level(p, 2);
    CHECK(same_functor(nerve_action(*l2, *l2, delta_identity(2)), identity_functor(l2->cat)));
    auto degen = nerve_action(*l0, *l1, codegeneracy(0, 0));
    CHECK(l1->objects[degen.obj[0]].xx(0, 1) == p->unit);
    auto d1 = nerve_action(*l2, *l1, coface(2, 1));
    for (Id a = 0; a < static_cast<Id>(l2->objects.size()); ++a)
      CHECK(l1->objects[d1.obj[a]].xx(0, 1) == l2->objects[a].xx(0, 2));
  }

  TEST_CASE("trivial model") {
    auto nv = nerve(trivial_picard(), 3);
    for (const auto& l : nv.simplicial->levels) {
      CHECK(l->num_objects() == 1);
      CHECK(l->num_morphisms() == 1);
    }
  }

  TEST_CASE("the 2-nerve is a one-object Tamsamani 2-groupoid") {
    for (const auto& p : corpus()) {
      CAPTURE(p->label);
      auto nv = nerve(p, 3);
      CHECK(validate_simplicial_category(*nv.simplicial).ok());
      CHECK(nv.simplicial->levels[0]->num_objects() == 1);
      CHECK(segal_map(*nv.simplicial, 2).verdict);
      CHECK(segal_map(*nv.simplicial, 3).verdict);
      CHECK(validate_tamsamani(*nv.simplicial, TamMode::groupoid).ok());
      for (const auto& l : nv.simplicial->levels) CHECK(l->is_groupoid());

      auto h = hom_fiber(*nv.simplicial, 0, 0);
      CHECK(h->num_objects() == p->num_objects());
      CHECK(h->num_morphisms() == p->num_morphisms());

      // p^(1) is the nerve of the group pi0 P
      auto p1x = p1(*nv.simplicial);
      auto c = nerve_category(p1x);
      CHECK(c->num_objects() == 1);
      CHECK(c->num_morphisms() == p->cat->num_iso_classes());
      CHECK(c->is_groupoid());
    }
  }

  TEST_CASE("levelwise nerve passes the multisimplicial check") {
    auto nv = nerve(corpus_instance("split(Z/2,0,0)"), 3);
    auto x = levelwise_nerve(*nv.simplicial);
    CHECK(validate_tamsamani(x, TamMode::groupoid).ok());
    CHECK(pi0(x).size() == 1);
  }

  TEST_CASE("bound") {
    auto p = corpus_instance("split(Z/2,Z/2,beta)");
    EnumerationOptions tight;
    tight.bound = 2;
    CHECK_THROWS_AS(nerve_level(p, 3, tight), BoundExceeded);
    CHECK(nerve_level_estimate(*p, 3) > 2);
  }
}
