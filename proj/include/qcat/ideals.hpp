#pragma once

#include <functional>
#include <optional>

#include "qcat/dist.hpp"

namespace qcat {

enum class IdealKind { All, OrderIdeal, Fsw, RightAdjoint, Custom };
enum class BelowFlavor { Totally, Directed };

struct IdealClass {
  IdealKind kind = IdealKind::All;
  BelowFlavor fsw_below = BelowFlavor::Totally;
  std::string custom_name;

  static IdealClass all() { return {}; }
  static IdealClass order_ideal() { return {IdealKind::OrderIdeal, BelowFlavor::Totally, ""}; }
  static IdealClass fsw(BelowFlavor b = BelowFlavor::Totally) {
    return {IdealKind::Fsw, b, ""};
  }
  static IdealClass right_adjoint() {
    return {IdealKind::RightAdjoint, BelowFlavor::Totally, ""};
  }
  static IdealClass custom(std::string name) {
    return {IdealKind::Custom, BelowFlavor::Totally, std::move(name)};
  }

  std::string label() const;
};

// Named membership rules for Custom classes.  Registration happens once at
// startup for the builtin ones ("representables", "nonempty", "no_pair_supports").
using IdealPredicate = std::function<bool(const VCategory&, const Presheaf&)>;
void register_ideal_class(const std::string& name, IdealPredicate pred);
bool ideal_class_registered(const std::string& name);
std::vector<std::string> registered_ideal_classes();

// All maps X -> Q satisfying the presheaf condition, lexicographically
// ordered by value indices.  Throws resource_error past the caps.
std::vector<Presheaf> enumerate_presheaves(const VCategory& x, const Limits& limits = {});
std::vector<Copresheaf> enumerate_copresheaves(const VCategory& x, const Limits& limits = {});

// Membership predicates.  All of them presuppose a valid presheaf.
bool is_order_ideal(const VCategory& x, const Presheaf& p);
bool is_fsw_ideal(const VCategory& x, const Presheaf& p,
                  BelowFlavor flavor = BelowFlavor::Totally);
bool is_right_adjoint_presheaf(const VCategory& x, const Presheaf& p,
                               const Limits& limits = {});
bool ideal_member(const IdealClass& cls, const VCategory& x, const Presheaf& p,
                  const Limits& limits = {});

// The class applied to a category, materialized as a category of presheaves
// with the pointwise hom structure.
struct PresheafCategory {
  VCategory base;
  IdealClass cls;
  std::vector<Presheaf> members;
  VCategory cat;
  std::vector<int> repr_index;  // member index of each representable

  std::optional<int> find(const Presheaf& p) const;
};

PresheafCategory build_jx(const VCategory& x, const IdealClass& cls,
                          const Limits& limits = {});

// Yoneda embedding corestricted to a presheaf category containing the
// representables.
VFunctor yoneda_functor(const PresheafCategory& jx);

// An endodistributor belongs to the class when every column does.
bool endo_in_class(const IdealClass& cls, const Distributor& v, const Limits& limits = {});

// Closure of the class under forming suprema of ideals of ideals:
// for every member of J(JX), its flattening along the Yoneda star must be
// a member of JX.  Reports the first counterexample.
struct SaturationReport {
  bool saturated = true;
  std::optional<Presheaf> outer;      // the offending member of J(JX)
  std::optional<Presheaf> flattened;  // its flattening, not in JX
};
SaturationReport saturation_check(const VCategory& x, const IdealClass& cls,
                                  const Limits& limits = {});

}  // namespace qcat
