#include <doctest.h>

#include "pictam/common.hpp"
#include "pictam/shapes.hpp"

using namespace pictam;

namespace {

// Pointed map from the interval formula, written out directly.
std::vector<int> phi_oracle(const std::vector<int>& alpha, int n) {
  std::vector<int> out(n + 1, 0);
  for (int j = 1; j <= n; ++j)
    for (std::size_t i = 1; i < alpha.size(); ++i)
      if (alpha[i - 1] + 1 <= j && j <= alpha[i]) out[j] = static_cast<int>(i);
  return out;
}

std::vector<int> after(const std::vector<int>& outer, const std::vector<int>& inner) {
  std::vector<int> out;
  for (int v : inner) out.push_back(outer[v]);
  return out;
}

bool is_monotone(const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] > v[i]) return false;
  return true;
}

}  // namespace

TEST_SUITE("shapes") {
  TEST_CASE("phi of named maps") {
    CHECK(phi(coface(2, 1)) == gamma_mult());
    CHECK(phi(coface(2, 1)).values == std::vector<int>{0, 1, 1});
    for (int k = 1; k <= 4; ++k)
      for (int j = 1; j <= k; ++j) CHECK(phi(delta_nu(k, j)) == gamma_nu_j(k, j));
    for (int n = 0; n <= 4; ++n) CHECK(phi(delta_identity(n)) == gamma_identity(n));
    CHECK(phi(codegeneracy(0, 0)) == gamma_unit());
  }

  TEST_CASE("phi agrees with the interval formula") {
    for (const auto& a : all_delta_maps_upto(4)) CHECK(phi(a).values == phi_oracle(a.values, a.n));
  }

  TEST_CASE("phi is contravariantly functorial") {
    auto maps = all_delta_maps_upto(4);
    int pairs = 0;
    for (const auto& a : maps)
      for (const auto& b : maps) {
        if (a.n != b.m) continue;
        CHECK(phi(compose_delta(b, a)) == compose_gamma(phi(a), phi(b)));
        ++pairs;
      }
    CHECK(pairs > 0);
  }

  TEST_CASE("delta generators") {
    CHECK(delta_nu(2, 1).values == std::vector<int>{0, 1});
    CHECK(coface(1, 0).values == std::vector<int>{1});
    CHECK_THROWS_AS(coface(2, 3), InputError);
    CHECK_THROWS_AS(delta_nu(2, 0), InputError);
    auto gens = delta_generators(2);
    REQUIRE(gens.size() == 3 + 3 + 2);
    CHECK(gens.front().name == "d^0");
    for (const auto& g : gens) CHECK(g.map.valid());
  }

  TEST_CASE("cosimplicial identities") {
    for (int n = 2; n <= 4; ++n)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i < j; ++i) {
          auto lhs = compose_delta(coface(n, j), coface(n - 1, i));
          auto rhs = compose_delta(coface(n, i), coface(n - 1, j - 1));
          CHECK(lhs == rhs);
          CHECK(lhs.values == after(coface(n, j).values, coface(n - 1, i).values));
        }
    for (int n = 0; n <= 4; ++n) {
      CHECK(compose_delta(codegeneracy(n, 0), coface(n + 1, 0)) == delta_identity(n));
      CHECK(compose_delta(delta_identity(n + 1), coface(n + 1, 0)) == coface(n + 1, 0));
    }
  }

  TEST_CASE("all delta maps are monotone and counted") {
    // C(m+n+1, m+1) monotone maps [m] -> [n]
    CHECK(all_delta_maps(1, 2).size() == 6);
    CHECK(all_delta_maps(2, 2).size() == 10);
    for (const auto& a : all_delta_maps_upto(3)) CHECK(is_monotone(a.values));
    CHECK_THROWS_AS(compose_delta(coface(2, 0), coface(3, 0)), InputError);
  }

  TEST_CASE("gamma generators") {
    CHECK(gamma_nu(3, 0).values == std::vector<int>{0, 0, 0, 0});
    CHECK(gamma_mu(2, subset_of({1}), subset_of({2})) == gamma_identity(2));
    CHECK(gamma_twist().values == std::vector<int>{0, 2, 1});
    CHECK(gamma_iota(2).values == std::vector<int>{0, 2});
    CHECK(gamma_unit().values == std::vector<int>{0});
    CHECK_THROWS_AS(gamma_mu(3, subset_of({1, 2}), subset_of({2})), InputError);
    CHECK_THROWS_AS(gamma_iota(3), InputError);
    auto gens = gamma_generators(2);
    bool has_tau = false;
    for (const auto& g : gens) {
      CHECK(g.map.valid());
      has_tau = has_tau || g.name == "tau";
    }
    CHECK(has_tau);
  }

  TEST_CASE("mu and nu relations") {
    for (int n = 0; n <= 4; ++n)
      for (Subset I = 0; I <= full_subset(n); ++I)
        for (Subset J = 0; J <= full_subset(n); ++J) {
          if (I & J) continue;
          auto mu = gamma_mu(n, I, J);
          CHECK(mu.preimage(1) == I);
          CHECK(mu.preimage(2) == J);
          CHECK(compose_gamma(gamma_nu_j(2, 1), mu) == gamma_nu(n, I));
          CHECK(compose_gamma(gamma_nu_j(2, 2), mu) == gamma_nu(n, J));
          CHECK(compose_gamma(gamma_mult(), mu) == gamma_nu(n, I | J));
        }
  }

  TEST_CASE("gamma composition") {
    CHECK_THROWS_AS(compose_gamma(gamma_mult(), gamma_mult()), InputError);
    for (const auto& s : all_gamma_maps(2, 2)) {
      CHECK(compose_gamma(gamma_identity(2), s) == s);
      CHECK(compose_gamma(s, gamma_identity(2)) == s);
      CHECK(s.values[0] == 0);
    }
    // (m+1)^n pointed maps <n> -> <m>
    CHECK(all_gamma_maps(2, 3).size() == 16);
  }

  TEST_CASE("subsets and convexity") {
    auto ord = ordered_subsets(3);
    REQUIRE(ord.size() == 7);
    CHECK(ord[0] == subset_of({1}));
    CHECK(ord[3] == subset_of({1, 2}));
    CHECK(ord[4] == subset_of({1, 3}));
    CHECK(ord[6] == subset_of({1, 2, 3}));
    CHECK(is_convex(interval(2, 4)));
    CHECK_FALSE(is_convex(subset_of({1, 3})));
    CHECK(interval(3, 2) == 0);
    CHECK(elements_of(subset_of({2, 5})) == std::vector<int>{2, 5});
  }
}
