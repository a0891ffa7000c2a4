#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pictam/common.hpp"

namespace pictam {

class FinCategory;
using CatPtr = std::shared_ptr<const FinCategory>;

// A finite category with explicit tables. Objects and morphisms are dense
// integer ids in creation order, each carrying an opaque string identifier.
// Everything derived (hom index, inverses, iso classes) is computed once in
// Builder::build, so a built category is immutable and thread-safe.
class FinCategory {
 public:
  class Builder {
   public:
    Id add_object(std::string name);
    Id add_morphism(std::string name, Id source, Id target);
    void set_identity(Id object, Id morphism);
    // compose(g, f) = g∘f; f must end where g starts.
    void set_compose(Id g, Id f, Id h);
    // Fill every composable pair from fn(g, f). Entries set explicitly win.
    void compose_with(std::function<Id(Id, Id)> fn);

    std::size_t num_objects() const { return obj_names_.size(); }
    std::size_t num_morphisms() const { return mor_names_.size(); }
    CatPtr build();

   private:
    std::vector<std::string> obj_names_, mor_names_;
    std::vector<Id> src_, tgt_, ident_;
    std::vector<std::array<Id, 3>> entries_;
    std::function<Id(Id, Id)> fill_;
  };

  std::size_t num_objects() const { return obj_names_.size(); }
  std::size_t num_morphisms() const { return mor_names_.size(); }
  const std::string& object_name(Id x) const { return obj_names_[x]; }
  const std::string& morphism_name(Id f) const { return mor_names_[f]; }
  Id find_object(std::string_view name) const;
  Id find_morphism(std::string_view name) const;

  Id source(Id f) const { return src_[f]; }
  Id target(Id f) const { return tgt_[f]; }
  Id identity(Id x) const { return ident_[x]; }
  // kNone when the pair is not composable or the table has no entry.
  Id compose(Id g, Id f) const;
  Id compose(Id h, Id g, Id f) const;

  const std::vector<Id>& hom(Id a, Id b) const;
  const std::vector<Id>& out(Id a) const { return out_[a]; }
  const std::vector<Id>& in(Id a) const { return in_[a]; }

  // Two-sided inverse, kNone if f is not invertible.
  Id inverse(Id f) const { return inverse_[f]; }
  bool is_groupoid() const { return groupoid_; }
  bool is_discrete() const;
  // Canonical iso-class index: classes numbered by first object.
  Id iso_class(Id x) const { return iso_class_[x]; }
  std::size_t num_iso_classes() const { return num_classes_; }

  // Problems found while laying out the tables (missing identities,
  // incomplete composition, duplicate names).
  const ValidationReport& structural() const { return structural_; }

 private:
  std::vector<std::string> obj_names_, mor_names_;
  std::unordered_map<std::string, Id> obj_index_, mor_index_;
  std::vector<Id> src_, tgt_, ident_;
  std::vector<std::vector<Id>> in_, out_;
  std::vector<Id> in_pos_;
  std::vector<std::size_t> comp_off_;
  std::vector<Id> comp_;
  std::unordered_map<std::uint64_t, std::vector<Id>> hom_;
  std::vector<Id> inverse_;
  std::vector<Id> iso_class_;
  std::size_t num_classes_ = 0;
  bool groupoid_ = false;
  ValidationReport structural_;
};

struct FinFunctor {
  CatPtr dom, cod;
  std::vector<Id> obj, mor;
};

struct NatTransformation {
  FinFunctor source, target;
  std::vector<Id> components;
};

struct EquivalenceVerdict {
  bool is_equivalence = true;
  std::string witness;
  explicit operator bool() const { return is_equivalence; }
};

struct IsoClasses {
  std::size_t count = 0;
  std::vector<Id> class_of;        // object -> class
  std::vector<Id> representative;  // class -> first object
};

ValidationReport validate_category(const FinCategory& c);
ValidationReport validate_functor(const FinFunctor& f);

EquivalenceVerdict is_equivalence(const FinFunctor& f);
IsoClasses iso_classes(const FinCategory& c);
// Map on iso classes induced by f.
std::vector<Id> induced_on_classes(const FinFunctor& f);

Verdict verify_nat_iso(const FinFunctor& f, const FinFunctor& g,
                       const std::vector<Id>& components);

FinFunctor identity_functor(const CatPtr& c);
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f);
bool same_functor(const FinFunctor& a, const FinFunctor& b);

CatPtr product(const FinCategory& c, const FinCategory& d);
CatPtr product_of(const std::vector<const FinCategory*>& factors);
// The functor into a product assembled from its components.
FinFunctor tuple_functor(const std::vector<const FinFunctor*>& parts, const CatPtr& product_cat);

CatPtr terminal_category();
CatPtr discrete_category(const std::vector<std::string>& names);
// One object, morphisms Z/n under addition.
CatPtr cyclic_group_category(int order);
// Every hom-set a singleton.
CatPtr codiscrete_category(const std::vector<std::string>& names);

// Full subcategory on the given objects (in the given order).
CatPtr full_subcategory(const FinCategory& c, const std::vector<Id>& objects,
                        std::vector<Id>* morphism_origin = nullptr);

}  // namespace pictam
