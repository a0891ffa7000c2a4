#include <doctest.h>

#include <set>

#include "pictam/gamma.hpp"
#include "pictam/generators.hpp"
#include "pictam/ktheory.hpp"

using namespace pictam;

namespace {

// Group element of the split model behind each element of the pi0 table.
std::vector<int> table_elements(const MonoidTable& t, const KTheory& k) {
  const auto& l1 = *k.levels[1];
  std::vector<int> out;
  for (const auto& name : t.elements) {
    Id o = l1.cat->find_object(name);
    REQUIRE(o != kNone);
    out.push_back(l1.objects[o].x[1]);
  }
  return out;
}

bool rows_are_permutations(const MonoidTable& t) {
  for (const auto& row : t.table) {
    std::set<int> s(row.begin(), row.end());
    if (s.size() != row.size()) return false;
  }
  return true;
}

GammaMorphism to_terminal(const GammaPtr& a) {
  auto t = terminal_gamma(a->N);
  GammaMorphism f{a, t, {}};
  for (int n = 0; n <= a->N; ++n)
    f.level.push_back(FinFunctor{a->levels[n], t->levels[n], std::vector<Id>(a->levels[n]->num_objects(), 0),
                                 std::vector<Id>(a->levels[n]->num_morphisms(), 0)});
  return f;
}

}  // namespace

TEST_SUITE("gamma") {
  TEST_CASE("constant terminal Gamma-groupoid") {
    auto t = terminal_gamma(3);
    CHECK(validate_gamma(*t).ok());
    CHECK(is_special(*t));
    CHECK(is_very_special(*t));
    CHECK(validate_pictam(*t).ok());
    auto m = pi0_monoid(*t);
    CHECK(m.table == std::vector<std::vector<int>>{{0}});
    CHECK(is_levelwise_equivalence(identity_gamma_morphism(t)));
  }

  TEST_CASE("capped monoid is special but not very special") {
    auto a = capped_monoid_gamma(3);
    REQUIRE(validate_gamma(*a).ok());
    CHECK(is_special(*a));
    auto vs = is_very_special(*a);
    CHECK_FALSE(vs);
    CHECK(vs.witness.find("has no inverse") != std::string::npos);
    auto m = pi0_monoid(*a);
    REQUIRE(m.table.size() == 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(m.table[i][j] == std::min(i + j, 2));
    auto r = validate_pictam(*a);
    CHECK(r.has("very_special"));
    CHECK_FALSE(r.has("internal_consistency"));
  }

  TEST_CASE("a Gamma-groupoid with terminal level 2 over a two-object level 1") {
    auto a = terminal_level2_gamma();
    CHECK_FALSE(validate_gamma(*a).ok());
    CHECK_FALSE(is_special(*a));
  }

  TEST_CASE("discrete Gamma-set of Z/3") {
    auto a = monoid_gamma({"0", "1", "2"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 0, 3, "Z/3");
    REQUIRE(validate_gamma(*a).ok());
    CHECK(is_very_special(*a));
    CHECK(validate_pictam(*a).ok());
    auto m = pi0_monoid(*a);
    CHECK(rows_are_permutations(m));
  }

  TEST_CASE("underlying simplicial object") {
    auto k = k_theory(build_split(cyclic_group(2), trivial_group(), zero_form(cyclic_group(2))), 3);
    auto x = underlying_simplicial(*k.gamma);
    CHECK(validate_simplicial_category(x).ok());
    CHECK(x.levels[0]->num_objects() == 1);
    CHECK(x.levels[0]->num_morphisms() == 1);
    CHECK(same_functor(x.act(coface(2, 1)), k.gamma->act(gamma_mult())));
    for (int j = 1; j <= 3; ++j) CHECK(same_functor(x.act(delta_nu(3, j)), k.gamma->act(gamma_nu_j(3, j))));
  }

  TEST_CASE("underlying Segal maps are equivalences iff special") {
    std::vector<GammaPtr> cases = {terminal_gamma(3), capped_monoid_gamma(3)};
    for (const auto& p : corpus())
      if (p->num_morphisms() <= 3) cases.push_back(k_theory(p, 3).gamma);
    for (const auto& a : cases) {
      CAPTURE(a->label);
      auto x = underlying_simplicial(*a);
      bool segal = true;
      for (int k = 2; k <= 3; ++k) segal = segal && static_cast<bool>(segal_map(x, k).verdict);
      CHECK(segal == static_cast<bool>(is_special(*a)));
    }
  }

  TEST_CASE("pi0 monoid of K-theory is the group of objects") {
    for (int order : {2, 3}) {
      auto g = cyclic_group(order);
      auto p = build_split(g, trivial_group(), zero_form(g));
      auto k = k_theory(p, 3);
      CHECK(is_very_special(*k.gamma));
      CHECK(validate_pictam(*k.gamma).ok());
      auto m = pi0_monoid(*k.gamma);
      auto elem = table_elements(m, k);
      REQUIRE(m.table.size() == static_cast<std::size_t>(order));
      CHECK(elem[m.unit] == 0);
      for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) CHECK(elem[m.table[i][j]] == (elem[i] + elem[j]) % order);
      CHECK(rows_are_permutations(m));
    }
  }

  TEST_CASE("levelwise equivalence") {
    auto a = monoid_gamma({"0", "1"}, {{0, 1}, {1, 0}}, 0, 2, "Z/2");
    CHECK(is_levelwise_equivalence(identity_gamma_morphism(a)));
    auto f = to_terminal(a);
    CHECK(validate_gamma_morphism(f).ok());
    auto v = is_levelwise_equivalence(f);
    CHECK_FALSE(v);
    CHECK(v.witness.find("level <1>") == 0);
  }
}
