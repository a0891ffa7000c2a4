#include <doctest.h>

#include <random>
#include <set>

#include "pictam/fincat.hpp"
#include "pictam/generators.hpp"
#include "pictam/tamsamani.hpp"

using namespace pictam;

namespace {

MSSPtr share(MultiSimplicialSet x) { return std::make_shared<MultiSimplicialSet>(std::move(x)); }

// One vertex, edges e (degenerate) and f, and only the three degenerate
// 2-simplices ee, ef, fe: the composite of f with itself is missing.
MultiSimplicialSet missing_composite() {
  MultiSimplicialSet x(1, 2);
  auto l0 = x.level_index({0}), l1 = x.level_index({1}), l2 = x.level_index({2});
  x.elements(l0) = {"a"};
  x.elements(l1) = {"e", "f"};
  x.elements(l2) = {"ee", "ef", "fe"};
  x.allocate_structure();
  x.degeneracy(0, l0, 0) = {0};
  x.face(0, l1, 0) = {0, 0};
  x.face(0, l1, 1) = {0, 0};
  x.degeneracy(0, l1, 0) = {0, 1};  // x -> (e, x)
  x.degeneracy(0, l1, 1) = {0, 2};  // x -> (x, e)
  x.face(0, l2, 0) = {0, 1, 0};     // second edge
  x.face(0, l2, 1) = {0, 1, 1};     // composite
  x.face(0, l2, 2) = {0, 0, 1};     // first edge
  return x;
}

std::size_t level_size(const MultiSimplicialSet& x, std::vector<int> k) { return x.size(x.level_index(k)); }

FinFunctor to_terminal(const CatPtr& c) {
  return FinFunctor{c, terminal_category(), std::vector<Id>(c->num_objects(), 0),
                    std::vector<Id>(c->num_morphisms(), 0)};
}

}  // namespace

TEST_SUITE("tamsamani") {
  TEST_CASE("nerve of a category satisfies the strict Segal condition") {
    auto c = thin_category(3, {{true, true, false}, {false, true, true}, {false, false, true}});
    auto x = share(nerve_of(*c, 3));
    CHECK(validate_structure(*x).ok());
    auto s = segal_map(x, 2);
    CHECK(s.verdict);
    CHECK(s.pullback->size(0) == x->size(2));
    CHECK(validate_tamsamani(*x, TamMode::category).ok());
    auto g = validate_tamsamani(*x, TamMode::groupoid);
    CHECK(g.has("groupoid"));
    CHECK(validate_tamsamani(nerve_of(*codiscrete_category({"a", "b"}), 3), TamMode::groupoid).ok());
  }

  TEST_CASE("missing composite makes S_2 non-surjective") {
    auto x = share(missing_composite());
    REQUIRE(validate_structure(*x).ok());
    auto s = segal_map(x, 2);
    CHECK(s.pullback->size(0) == 4);
    CHECK_FALSE(s.verdict);
    CHECK(validate_tamsamani(*x, TamMode::category).has("segal[2]"));
  }

  TEST_CASE("non-discrete level 0 is rejected") {
    auto x = external_product(nerve_of(*codiscrete_category({"a", "b"}), 3), nerve_of(*cyclic_group_category(2), 3));
    REQUIRE(validate_structure(x).ok());
    CHECK(validate_tamsamani(x, TamMode::category).has("discrete_level0"));
  }

  TEST_CASE("levelwise nerve of a discrete nerve is a Tamsamani 2-groupoid") {
    auto g = product(*codiscrete_category({"a", "b"}), *cyclic_group_category(2));
    auto dn = discrete_nerve(*g, 3);
    CHECK(validate_simplicial_category(*dn).ok());
    CHECK(validate_tamsamani(*dn, TamMode::groupoid).ok());
    auto x = levelwise_nerve(*dn);
    CHECK(validate_tamsamani(x, TamMode::groupoid).ok());
    CHECK(validate_tamsamani(x, TamMode::category).ok());
  }

  TEST_CASE("hom fibers") {
    auto c = thin_category(2, {{true, true}, {false, true}});
    auto x = nerve_of(*c, 3);
    CHECK(hom_fiber(x, 0, 1).set.size(0) == 1);
    CHECK(hom_fiber(x, 1, 0).set.size(0) == 0);
    CHECK_THROWS_AS(hom_fiber(x, 0, 2), InputError);

    auto one = levelwise_nerve(*discrete_nerve(*cyclic_group_category(3), 3));
    auto h = hom_fiber(one, 0, 0);
    REQUIRE(h.set.dim() == 1);
    for (int t = 0; t <= 3; ++t) CHECK(level_size(h.set, {t}) == level_size(one, {1, t}));
  }

  TEST_CASE("p truncation") {
    auto g = product(*discrete_category({"a", "b", "c"}), *codiscrete_category({"x", "y"}));
    auto p = p_trunc(nerve_of(*g, 3), 0);
    CHECK(p.dim() == 0);
    CHECK(p.size(0) == iso_classes(*g).count);

    auto d = discrete_set({"u", "v", "w"}, 2, 3);
    auto pd = p_trunc(d, 1);
    for (std::size_t l = 0; l < pd.num_levels(); ++l) CHECK(pd.elements(l) == std::vector<std::string>{"u", "v", "w"});
    CHECK_THROWS_AS(p_trunc(d, 2), InputError);
  }

  TEST_CASE("p truncation commutes with slicing") {
    int compared = 0;
    for (const auto& x : generated_multisimplicial(17, 8)) {
      for (int r = 1; r <= x->dim() - 1; ++r) {
        auto whole = p_trunc(*x, r);
        for (int s = 0; s <= x->truncation(); ++s) {
          auto lhs = slice(whole, s);
          auto rhs = p_trunc(slice(*x, s), r - 1);
          REQUIRE(lhs.num_levels() == rhs.num_levels());
          for (std::size_t l = 0; l < lhs.num_levels(); ++l) CHECK(lhs.size(l) == rhs.size(l));
          ++compared;
        }
      }
    }
    CHECK(compared > 0);
  }

  TEST_CASE("pi0") {
    CHECK(pi0(nerve_of(*terminal_category(), 3)).size() == 1);
    auto two = product(*discrete_category({"a", "b"}), *cyclic_group_category(2));
    CHECK(pi0(nerve_of(*two, 3)).size() == 2);
    std::mt19937_64 rng(23);
    for (int t = 0; t < 10; ++t) {
      auto c = random_groupoid(rng);
      auto d = random_groupoid(rng);
      auto xc = nerve_of(*c, 3), xd = nerve_of(*d, 3);
      CHECK(pi0(product(xc, xd)).size() == pi0(xc).size() * pi0(xd).size());
      auto lc = levelwise_nerve(*discrete_nerve(*c, 3));
      auto ld = levelwise_nerve(*discrete_nerve(*d, 3));
      CHECK(pi0(product(lc, ld)).size() == pi0(lc).size() * pi0(ld).size());
    }
  }

  TEST_CASE("n-equivalences") {
    auto c = codiscrete_category({"a", "b"});
    auto x = share(nerve_of(*c, 3));
    CHECK(is_n_equivalence(identity_map(x)));

    auto disc = discrete_category({"a", "b"});
    auto xd = share(nerve_of(*disc, 3));
    auto xt = share(nerve_of(*terminal_category(), 3));
    auto collapse = nerve_map(to_terminal(disc), xd, xt);
    CHECK(validate_map(collapse).ok());
    CHECK_FALSE(is_n_equivalence(collapse));
    auto through_codisc = nerve_map(to_terminal(c), x, xt);
    CHECK(is_n_equivalence(through_codisc));
  }

  TEST_CASE("levelwise equivalence iff 2-equivalence and level-0 bijection") {
    int both = 0, neither = 0;
    for (const auto& m : two_category_maps(9, 4)) {
      CAPTURE(m.name);
      REQUIRE(validate_simplicial_functor(m.functor).ok());
      bool lw = static_cast<bool>(is_levelwise_equivalence(m.functor));
      bool eq2 = static_cast<bool>(is_2_equivalence(m.functor));
      bool l0 = level0_bijective(m.functor);
      CHECK(lw == (eq2 && l0));
      if (eq2) {
        auto on = pi0_map(m.functor);
        std::set<int> hit(on.begin(), on.end());
        CHECK(hit.size() == on.size());
        CHECK(on.size() == pi0_size(*m.functor.cod));
      }
      lw ? ++both : ++neither;
    }
    CHECK(both > 0);
    CHECK(neither > 0);
  }

  TEST_CASE("multisimplicial 2-equivalence agrees with the simplicial-category form") {
    for (const auto& m : two_category_maps(4, 2)) {
      CAPTURE(m.name);
      auto d = share(levelwise_nerve(*m.functor.dom));
      auto c = share(levelwise_nerve(*m.functor.cod));
      auto f = levelwise_nerve_map(m.functor, d, c);
      REQUIRE(validate_map(f).ok());
      CHECK(static_cast<bool>(is_n_equivalence(f)) == static_cast<bool>(is_2_equivalence(m.functor)));
      CHECK(static_cast<bool>(is_levelwise_equivalence(f)) ==
            static_cast<bool>(is_levelwise_equivalence(m.functor)));
    }
  }

  TEST_CASE("diagonal") {
    auto d = discrete_set({"p", "q"}, 2, 3);
    auto dd = diag(d);
    REQUIRE(dd.dim() == 1);
    for (int t = 0; t <= 3; ++t) CHECK(level_size(dd, {t}) == 2);

    auto g = codiscrete_category({"a", "b", "c"});
    auto n = nerve_of(*g, 3);
    auto dn = diag(embed_discrete(n));
    for (int t = 0; t <= 3; ++t) CHECK(level_size(dn, {t}) == level_size(n, {t}));

    std::mt19937_64 rng(31);
    for (int t = 0; t < 8; ++t) {
      auto c = random_groupoid(rng);
      auto x = levelwise_nerve(*fattened_nerve(*c, 2));
      REQUIRE(validate_tamsamani(x, TamMode::groupoid).ok());
      CHECK(diag_components(x) == pi0(x).size());
      CHECK(pi0(x).size() == iso_classes(*c).count);
    }
  }
}
