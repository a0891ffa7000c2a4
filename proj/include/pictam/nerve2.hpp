#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "pictam/common.hpp"
#include "pictam/fincat.hpp"
#include "pictam/ktheory.hpp"
#include "pictam/picard.hpp"
#include "pictam/shapes.hpp"
#include "pictam/tamsamani.hpp"

namespace pictam {

// {x_ij, f_ijk} at level n. Tables are dense over [n]^2 and [n]^3; entries
// outside i <= j (<= k) are kNone, and the degenerate f_iij = rho, f_ijj =
// lambda are filled in from the unit isomorphisms.
struct NObject {
  int n = 0;
  std::vector<Id> x, f;

  Id xx(int i, int j) const { return x[i * (n + 1) + j]; }
  Id fx(int i, int j, int k) const { return f[(i * (n + 1) + j) * (n + 1) + k]; }
};

struct NLevel {
  int n = 0;
  PicPtr P;
  CatPtr cat;
  std::vector<NObject> objects;
  std::vector<std::vector<Id>> H;  // per morphism, dense over [n]^2
  bool sampled = false;
  std::uint64_t seed = 0;

  Id find_object(const NObject& o) const;
  // Morphism src -> tgt with the given H_{i,i+1}.
  Id find_morphism(Id src, Id tgt, const std::vector<Id>& steps) const;

  std::unordered_map<std::vector<Id>, Id, VecHash> object_index;
  std::unordered_map<std::uint64_t, Id> morphism_index;
  std::uint64_t morphism_key(Id src, Id tgt, const std::vector<Id>& steps) const;
};
using NLevelPtr = std::shared_ptr<const NLevel>;

NObject blank_nerve_object(int n);
// Sets the degenerate f entries from the unit isomorphisms; x must be set.
void fill_degenerate(const PicardCategory& p, NObject& o);

ValidationReport validate_nerve_object(const PicardCategory& p, const NObject& o);
ValidationReport validate_nerve_morphism(const PicardCategory& p, const NObject& a, const NObject& b,
                                         const std::vector<Id>& H);
double nerve_level_estimate(const PicardCategory& p, int n);
NLevelPtr nerve_level(const PicPtr& p, int n, const EnumerationOptions& opts = {});
std::string nerve_object_name(const PicardCategory& p, const NObject& o);

// alpha : [m] -> [n] gives level n -> level m.
FinFunctor nerve_action(const NLevel& from, const NLevel& to, const DeltaMap& alpha);

struct Nerve {
  SCatPtr simplicial;
  std::vector<NLevelPtr> levels;
};
Nerve nerve(const PicPtr& p, int N, const EnumerationOptions& opts = {});

}  // namespace pictam
