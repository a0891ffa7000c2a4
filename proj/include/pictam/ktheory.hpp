#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "pictam/common.hpp"
#include "pictam/fincat.hpp"
#include "pictam/gamma.hpp"
#include "pictam/picard.hpp"
#include "pictam/shapes.hpp"

namespace pictam {

struct EnumerationOptions {
  double bound = 1e6;
  bool sampled = false;
  std::uint64_t seed = 0;
  int samples = 0;
};

// {x_I, f_{I,J}} at level n: x indexed by subset bitmask, f dense at
// I * 2^n + J with kNone on overlapping pairs.
struct KObject {
  std::vector<Id> x;
  std::vector<Id> f;

  Id fx(Subset i, Subset j) const { return f[(static_cast<std::size_t>(i) << (bits())) + j]; }
  int bits() const;
};

struct KLevel {
  int n = 0;
  PicPtr P;
  CatPtr cat;
  std::vector<KObject> objects;
  std::vector<std::vector<Id>> H;  // per morphism, indexed by subset
  bool sampled = false;
  std::uint64_t seed = 0;

  Id find_object(const KObject& o) const;
  // Morphism src -> tgt with the given H on singletons.
  Id find_morphism(Id src, Id tgt, const std::vector<Id>& singletons) const;

  std::unordered_map<std::vector<Id>, Id, VecHash> object_index;
  std::unordered_map<std::uint64_t, Id> morphism_index;
  std::uint64_t morphism_key(Id src, Id tgt, const std::vector<Id>& singletons) const;
};
using KLevelPtr = std::shared_ptr<const KLevel>;

ValidationReport validate_k_object(const PicardCategory& p, int n, const KObject& o);
ValidationReport validate_k_morphism(const PicardCategory& p, int n, const KObject& a, const KObject& b,
                                     const std::vector<Id>& H);
double k_level_estimate(const PicardCategory& p, int n);
KLevelPtr k_level(const PicPtr& p, int n, const EnumerationOptions& opts = {});
std::string k_object_name(const PicardCategory& p, int n, const KObject& o);

FinFunctor k_action(const KLevel& from, const KLevel& to, const GammaMap& s);

struct KTheory {
  GammaPtr gamma;
  std::vector<KLevelPtr> levels;
};
KTheory k_theory(const PicPtr& p, int N, const EnumerationOptions& opts = {});

// Levelwise functor induced by a monoidal functor P -> Q.
FinFunctor k_of_functor(const MonoidalFunctor& F, const KLevel& from, const KLevel& to);
GammaMorphism k_of_monoidal(const MonoidalFunctor& F, const KTheory& from, const KTheory& to);

}  // namespace pictam
