#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pictam/fincat.hpp"
#include "pictam/gamma.hpp"
#include "pictam/picard.hpp"
#include "pictam/tamsamani.hpp"

namespace pictam {

// trivial, split(Z/2,0,0), split(Z/3,0,0), split(0,Z/2,0), split(Z/2,Z/2,0),
// split(Z/2,Z/2,beta) with beta(x,y) = xy.
std::vector<PicPtr> corpus();
std::vector<std::string> corpus_names();
PicPtr corpus_instance(const std::string& name);

struct NamedMonoidal {
  std::string name;
  MonoidalFunctor functor;
};
// Functors out of p: identity, negation, quotient to split(A,0,0) and the
// map to the trivial model; only those passing validate_monoidal_functor
// are returned.
std::vector<NamedMonoidal> generated_monoidal_functors(const PicPtr& p);

// Thin category of a random preorder on 1..max_objects objects.
CatPtr random_thin_category(std::mt19937_64& rng, int max_objects);
// discrete(a) x codiscrete(b) x Z/m with small random a, b, m.
CatPtr random_groupoid(std::mt19937_64& rng);
CatPtr random_category(std::mt19937_64& rng, int max_objects);
// Thin category of a preorder given as a reflexive relation matrix; the
// transitive closure is taken.
CatPtr thin_category(int n, std::vector<std::vector<bool>> rel);

// Levelwise discrete simplicial category on the nerve of c.
SCatPtr discrete_nerve(const FinCategory& c, int N);
// Levels N(c)_s x codiscrete(N(Z/2)_s); equivalent levelwise to the discrete nerve.
SCatPtr fattened_nerve(const FinCategory& c, int N);
SimplicialFunctor fattened_projection(const SCatPtr& fat, const SCatPtr& dn);
// Discrete nerve of a functor.
SimplicialFunctor discrete_nerve_map(const FinFunctor& f, const SCatPtr& dom, const SCatPtr& cod);

struct NamedSimplicialFunctor {
  std::string name;
  SimplicialFunctor functor;
};
// Maps of Tamsamani 2-categories with all combinations of levelwise
// equivalence, 2-equivalence and level-0 bijectivity that can occur.
std::vector<NamedSimplicialFunctor> two_category_maps(std::uint64_t seed, int count);

// Two- and three-fold simplicial sets for truncation checks.
std::vector<MSSPtr> generated_multisimplicial(std::uint64_t seed, int count);

// {0,1,2} under addition capped at 2: special, not group-like.
GammaPtr capped_monoid_gamma(int N);
// A<0> = A<2> = terminal, A<1> discrete on two objects, with actions that
// are as close to functorial as such data allows. No such Gamma-groupoid
// exists; validation reports why.
GammaPtr terminal_level2_gamma();

}  // namespace pictam
