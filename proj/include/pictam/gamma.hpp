#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pictam/common.hpp"
#include "pictam/fincat.hpp"
#include "pictam/shapes.hpp"
#include "pictam/tamsamani.hpp"

namespace pictam {

// Groupoids A<0>..A<N> with a functor A<n> -> A<m> for every pointed map
// <n> -> <m> among the stored ranks.
struct GammaGroupoid {
  int N = 0;
  std::vector<CatPtr> levels;
  std::map<GammaMap, FinFunctor> action;
  std::string label;

  const FinFunctor& act(const GammaMap& s) const;
};
using GammaPtr = std::shared_ptr<const GammaGroupoid>;

struct GammaMorphism {
  GammaPtr dom, cod;
  std::vector<FinFunctor> level;
};

ValidationReport validate_gamma(const GammaGroupoid& a);
ValidationReport validate_gamma_morphism(const GammaMorphism& f);
GammaMorphism identity_gamma_morphism(const GammaPtr& a);

SimplicialCategory underlying_simplicial(const GammaGroupoid& a);

// (nu_1, ..., nu_n) : A<n> -> A<1>^n
FinFunctor segal_functor(const GammaGroupoid& a, int n);

Verdict is_special(const GammaGroupoid& a);

struct MonoidTable {
  std::vector<std::string> elements;  // class representatives of A<1>
  std::vector<std::vector<int>> table;
  int unit = 0;
};
// Refuses with InputError when (nu_1, nu_2) is not bijective on classes.
MonoidTable pi0_monoid(const GammaGroupoid& a);
Verdict is_very_special(const GammaGroupoid& a);
ValidationReport validate_pictam(const GammaGroupoid& a);
Verdict is_levelwise_equivalence(const GammaMorphism& f);

GammaPtr terminal_gamma(int N);
// The discrete Gamma-set n -> M^n of a finite commutative monoid.
GammaPtr monoid_gamma(const std::vector<std::string>& names, const std::vector<std::vector<int>>& table, int unit,
                      int N, const std::string& label);

}  // namespace pictam
