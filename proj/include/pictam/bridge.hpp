#pragma once

#include <cstdint>
#include <vector>

#include "pictam/common.hpp"
#include "pictam/fincat.hpp"
#include "pictam/gamma.hpp"
#include "pictam/ktheory.hpp"
#include "pictam/nerve2.hpp"
#include "pictam/picard.hpp"

namespace pictam {

// Maximal convex blocks of I, ordered by left endpoint.
struct ConvexDecomposition {
  Subset set = 0;
  std::vector<Subset> blocks;
};
ConvexDecomposition convex_decomposition(Subset I);

// Restriction of K-theory data to convex subsets.
FinFunctor forget_U(const KLevel& k, const NLevel& nv);
// Nested tensors over maximal convex decompositions.
FinFunctor extend_F(const NLevel& nv, const KLevel& k);
// Component at each K object: the iterated f into the nested tensor.
NatTransformation eta(const KLevel& k, const FinFunctor& U, const FinFunctor& F);
// The H-family of the eta component at object a, recomputed from f.
std::vector<Id> eta_family(const PicardCategory& p, int n, const KObject& a);

struct SampleVerdict {
  Verdict verdict;
  int draws = 0;
  std::uint64_t seed = 0;
};
// Naturality squares and component formulas on `draws` morphisms picked
// uniformly with replacement.
SampleVerdict verify_eta_sampled(const KLevel& k, const NatTransformation& e, std::uint64_t seed, int draws);

// alpha^* U_n = U_m phi(alpha)^* for every Delta-map among [0..N].
Verdict u_naturality(const KTheory& k, const Nerve& nv, const std::vector<FinFunctor>& U);

enum class ChoicePolicy { min_id, max_id };
const char* policy_name(ChoicePolicy p);

// T with unit : id => T S and counit : id => S T, where S is the Segal
// functor A<k> -> A<1>^k.
struct QuasiInverse {
  int k = 0;
  ChoicePolicy policy = ChoicePolicy::min_id;
  FinFunctor S, T;
  std::vector<Id> unit;    // a -> T S a, per object of A<k>
  std::vector<Id> counit;  // t -> S T t, per object of A<1>^k
};
QuasiInverse choose_segal_inverse(const GammaGroupoid& a, int k, ChoicePolicy policy = ChoicePolicy::min_id);
Verdict verify_quasi_inverse(const QuasiInverse& q);

struct Picardization {
  GammaPtr source;
  PicPtr pic;
  QuasiInverse q2, q3;
  std::vector<Id> sigma;  // per object a of A<2>: A(m)a -> (x)(S a)
};
Picardization picardize(const GammaPtr& a, ChoicePolicy policy = ChoicePolicy::min_id);

// For A = K(P): the functor M K P -> P, x -> x_{1}, with its compatibility
// isomorphisms built from f_{{1},{2}}.
MonoidalFunctor picardization_to_original(const Picardization& m, const KTheory& k);
// Natural isomorphism between the tensor functors of two picardizations of
// the same Gamma-groupoid.
Verdict tensor_policies_isomorphic(const Picardization& a, const Picardization& b);

// zeta : A -> K M A into target = k_theory(m.pic, N).
GammaMorphism zeta(const Picardization& m, const KTheory& target);
// M F for a morphism F : A -> B of Gamma-groupoids.
MonoidalFunctor picardize_morphism(const GammaMorphism& F, const Picardization& ma, const Picardization& mb);
// zeta_B F = K M F zeta_A, levelwise.
Verdict zeta_naturality(const GammaMorphism& F, const MonoidalFunctor& MF, const GammaMorphism& zeta_a,
                        const GammaMorphism& zeta_b, const KTheory& kma, const KTheory& kmb);

}  // namespace pictam
