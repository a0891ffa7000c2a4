#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pictam/common.hpp"
#include "pictam/fincat.hpp"
#include "pictam/shapes.hpp"

namespace pictam {

enum class TamMode { category, groupoid };

// An n-fold simplicial set stored for multi-indices with every entry <= N.
// Coordinate 0 is the outermost direction, coordinate dim-1 the innermost
// (nerve-like) one on which p acts. Dimension 0 is a plain finite set.
class MultiSimplicialSet {
 public:
  MultiSimplicialSet() = default;
  MultiSimplicialSet(int dim, int truncation);

  int dim() const { return dim_; }
  int truncation() const { return N_; }
  std::size_t num_levels() const { return elems_.size(); }
  std::size_t level_index(const std::vector<int>& k) const;
  std::vector<int> multi_index(std::size_t level) const;
  // Level obtained by changing coordinate c of `level` by delta.
  std::size_t shifted(std::size_t level, int c, int delta) const;

  std::vector<std::string>& elements(std::size_t level) { return elems_[level]; }
  const std::vector<std::string>& elements(std::size_t level) const { return elems_[level]; }
  std::size_t size(std::size_t level) const { return elems_[level].size(); }

  // d_i in coordinate c, from `level` to level - e_c.
  std::vector<int>& face(int c, std::size_t level, int i) { return face_[c][level][i]; }
  const std::vector<int>& face(int c, std::size_t level, int i) const { return face_[c][level][i]; }
  // s_i in coordinate c, from `level` to level + e_c.
  std::vector<int>& degeneracy(int c, std::size_t level, int i) { return degen_[c][level][i]; }
  const std::vector<int>& degeneracy(int c, std::size_t level, int i) const {
    return degen_[c][level][i];
  }
  // Allocates the face/degeneracy tables once all level sizes are set.
  void allocate_structure();

  // X(alpha) applied in coordinate c to element e of `level`, where the
  // c-th entry of level equals alpha.n.
  int act(int c, const DeltaMap& alpha, std::size_t level, int e) const;
  std::vector<int> act_level(int c, const DeltaMap& alpha, std::size_t level) const;

 private:
  int dim_ = 0, N_ = 0;
  std::vector<std::vector<std::string>> elems_;
  std::vector<std::vector<std::vector<std::vector<int>>>> face_, degen_;
};

using MSSPtr = std::shared_ptr<const MultiSimplicialSet>;

struct MultiSimplicialMap {
  MSSPtr dom, cod;
  std::vector<std::vector<int>> level;  // per level index
};

ValidationReport validate_structure(const MultiSimplicialSet& x);
ValidationReport validate_map(const MultiSimplicialMap& f);
MultiSimplicialMap identity_map(const MSSPtr& x);
MultiSimplicialMap compose_maps(const MultiSimplicialMap& g, const MultiSimplicialMap& f);

// Fix the outermost coordinate to s.
MultiSimplicialSet slice(const MultiSimplicialSet& x, int s);
MultiSimplicialMap slice_map(const MultiSimplicialMap& f, int s, const MSSPtr& dom, const MSSPtr& cod);
// Add a constant innermost coordinate.
MultiSimplicialSet embed_discrete(const MultiSimplicialSet& x);
MultiSimplicialSet discrete_set(const std::vector<std::string>& elements, int dim, int truncation);

MultiSimplicialSet nerve_of(const FinCategory& c, int truncation);
MultiSimplicialMap nerve_map(const FinFunctor& f, const MSSPtr& dom, const MSSPtr& cod);
// Levelwise product of sets of equal dimension and truncation.
MultiSimplicialSet product(const MultiSimplicialSet& x, const MultiSimplicialSet& y);
// X ⊠ Y with coordinates of X first.
MultiSimplicialSet external_product(const MultiSimplicialSet& x, const MultiSimplicialSet& y);

// p in the innermost coordinate. `quotient` maps the elements of each level
// (K, 0) of x to the classes forming level K of the result.
struct PStar {
  MultiSimplicialSet set;
  std::vector<std::vector<int>> quotient;
};
PStar p_star(const MultiSimplicialSet& x);
MultiSimplicialMap p_star_map(const MultiSimplicialMap& f, const PStar& dom, const PStar& cod,
                              const MSSPtr& pdom, const MSSPtr& pcod);
MultiSimplicialSet p_trunc(const MultiSimplicialSet& x, int r);
std::vector<std::string> pi0(const MultiSimplicialSet& x);
std::vector<int> pi0_map(const MultiSimplicialMap& f);

MultiSimplicialSet diag(const MultiSimplicialSet& x);
std::size_t diag_components(const MultiSimplicialSet& x);

struct SegalComparison {
  int k = 0;
  MSSPtr pullback;
  MultiSimplicialMap map;
  Verdict verdict;
};
SegalComparison segal_map(const MSSPtr& x, int k);

struct HomFiber {
  MultiSimplicialSet set;
  std::vector<std::vector<int>> origin;  // per level: element index in x at (1, K)
};
HomFiber hom_fiber(const MultiSimplicialSet& x, int a, int b);

// tau_1 of a nerve-like simplicial set (dimension 1) as a category.
CatPtr nerve_category(const MultiSimplicialSet& x);

ValidationReport validate_tamsamani(const MultiSimplicialSet& x, TamMode mode);
Verdict is_n_equivalence(const MultiSimplicialMap& f);
Verdict is_levelwise_equivalence(const MultiSimplicialMap& f);
bool level0_bijective(const MultiSimplicialMap& f);

// A truncated simplicial object in finite categories: levels[0..N] and a
// functor levels[n] -> levels[m] for every Delta-map [m] -> [n].
struct SimplicialCategory {
  int N = 0;
  std::vector<CatPtr> levels;
  std::map<DeltaMap, FinFunctor> action;

  const FinFunctor& act(const DeltaMap& alpha) const;
};
using SCatPtr = std::shared_ptr<const SimplicialCategory>;

struct SimplicialFunctor {
  SCatPtr dom, cod;
  std::vector<FinFunctor> level;
};

ValidationReport validate_simplicial_category(const SimplicialCategory& x);
ValidationReport validate_simplicial_functor(const SimplicialFunctor& f);

struct SegalFunctor {
  int k = 0;
  CatPtr pullback;
  FinFunctor map;
  EquivalenceVerdict verdict;
};
SegalFunctor segal_map(const SimplicialCategory& x, int k);
ValidationReport validate_tamsamani(const SimplicialCategory& x, TamMode mode);
// Full subcategory of level 1 over (a, b).
CatPtr hom_fiber(const SimplicialCategory& x, Id a, Id b, std::vector<Id>* origin = nullptr);
// p^(1): levelwise iso classes, a simplicial set.
MultiSimplicialSet p1(const SimplicialCategory& x);
MultiSimplicialSet levelwise_nerve(const SimplicialCategory& x);
MultiSimplicialMap levelwise_nerve_map(const SimplicialFunctor& f, const MSSPtr& dom, const MSSPtr& cod);

Verdict is_2_equivalence(const SimplicialFunctor& f);
Verdict is_levelwise_equivalence(const SimplicialFunctor& f);
bool level0_bijective(const SimplicialFunctor& f);
std::vector<int> pi0_map(const SimplicialFunctor& f);
std::size_t pi0_size(const SimplicialCategory& x);

}  // namespace pictam
