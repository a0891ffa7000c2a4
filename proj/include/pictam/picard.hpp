#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pictam/common.hpp"
#include "pictam/fincat.hpp"

namespace pictam {

// Product of cyclic groups Z/orders[0] x ... ; elements are mixed-radix
// indices with the first factor most significant.
struct FiniteAbelianGroup {
  std::vector<int> orders;

  int size() const;
  int add(int a, int b) const;
  int neg(int a) const;
  std::vector<int> coords(int a) const;
  int index(const std::vector<int>& c) const;
  std::string element_name(int a) const;
  std::string name() const;
};

FiniteAbelianGroup cyclic_group(int order);  // order 1 gives the trivial group
FiniteAbelianGroup trivial_group();

// beta(x, y) as a table indexed x * |A| + y with values in B.
using BilinearForm = std::vector<int>;
BilinearForm zero_form(const FiniteAbelianGroup& a);
// For A = B = Z/2: beta(x, y) = xy.
BilinearForm product_form_z2();

struct SplitData {
  FiniteAbelianGroup a, b;
  BilinearForm beta;
};

// A finite symmetric monoidal groupoid. Tables are indexed by ids:
// tensor_obj[x*n+y], tensor_mor[f*M+g], assoc[(x*n+y)*n+z], sym[x*n+y],
// left_unit[x] : x -> 1⊗x, right_unit[x] : x -> x⊗1,
// assoc : x⊗(y⊗z) -> (x⊗y)⊗z, sym : x⊗y -> y⊗x.
struct PicardCategory {
  CatPtr cat;
  Id unit = kNone;
  std::vector<Id> tensor_obj, tensor_mor, assoc, left_unit, right_unit, sym;
  std::string label;
  std::optional<SplitData> split;

  std::size_t num_objects() const { return cat->num_objects(); }
  std::size_t num_morphisms() const { return cat->num_morphisms(); }
  Id tensor(Id x, Id y) const { return tensor_obj[x * num_objects() + y]; }
  Id tensor_m(Id f, Id g) const;
  Id alpha(Id x, Id y, Id z) const { return assoc[(x * num_objects() + y) * num_objects() + z]; }
  Id lambda(Id x) const { return left_unit[x]; }
  Id rho(Id x) const { return right_unit[x]; }
  Id gamma(Id x, Id y) const { return sym[x * num_objects() + y]; }

  Id id(Id x) const { return cat->identity(x); }
  // Composition and inverse propagating kNone.
  Id comp(Id g, Id f) const;
  Id comp(Id h, Id g, Id f) const { return comp(h, comp(g, f)); }
  Id inv(Id f) const { return f == kNone ? kNone : cat->inverse(f); }
  // f⊗id_y and id_x⊗g
  Id tensor_id(Id f, Id y) const { return f == kNone ? kNone : tensor_m(f, id(y)); }
  Id id_tensor(Id x, Id g) const { return g == kNone ? kNone : tensor_m(id(x), g); }
};

using PicPtr = std::shared_ptr<const PicardCategory>;

ValidationReport validate_picard(const PicardCategory& p);

PicPtr build_split(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b, const BilinearForm& beta);
PicPtr trivial_picard();
// Morphism id of the automorphism labeled b at object x in a split model.
Id split_morphism(const PicardCategory& p, int x, int b);

struct PiInvariants {
  std::vector<std::string> pi0;  // class representatives
  std::vector<std::vector<int>> pi0_table;
  int pi0_unit = 0;
  std::vector<std::string> pi1;  // automorphisms of the unit, in id order
  std::vector<Id> pi1_ids;
  std::vector<std::vector<int>> pi1_table;
  std::vector<int> q;  // class -> index into pi1
  ValidationReport checks;
};

PiInvariants pi_invariants(const PicardCategory& p);

// Strong symmetric monoidal functor with F(1) = 1'. psi[x*n+y] : F(x⊗y) -> Fx⊗'Fy.
struct MonoidalFunctor {
  PicPtr dom, cod;
  FinFunctor functor;
  std::vector<Id> psi;
};

ValidationReport validate_monoidal_functor(const MonoidalFunctor& f);
MonoidalFunctor identity_monoidal(const PicPtr& p);
// Functor between split models induced by homomorphisms on objects and on
// automorphism labels, with identity compatibility components.
MonoidalFunctor split_functor(const PicPtr& dom, const PicPtr& cod, const std::vector<int>& on_objects,
                              const std::vector<int>& on_labels);
bool is_isomorphism_of_categories(const FinFunctor& f);

}  // namespace pictam
