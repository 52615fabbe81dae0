#pragma once

#include "qcat/ideals.hpp"

namespace qcat {

// Objects representing a presheaf: w is a witness when X(w, z) equals the
// presheaf hom from p to the representable at z, for every z.  Witnesses
// are unique up to isomorphism; the canonical one is the least object index.
struct SupremumResult {
  Presheaf presheaf;
  std::vector<int> witnesses;
  std::optional<int> canonical;
};

SupremumResult supremum(const VCategory& x, const Presheaf& p);

// Members of the ideal category that have suprema, with their canonical
// witnesses, carried as a presheaf category of their own.
struct SupIdealCategory {
  PresheafCategory js;     // the sub-presheaf-category
  std::vector<int> sup;    // canonical witness per member
};

SupIdealCategory build_js(const VCategory& x, const IdealClass& cls,
                          const Limits& limits = {});
// Same restriction applied to an already-built ideal category.
SupIdealCategory restrict_to_sups(const PresheafCategory& jx);

// Witness-picking functor from the ideals-with-suprema to the base.
// Functoriality is a consequence of the representing equation; violation
// is an internal error.
VFunctor sup_functor(const SupIdealCategory& js);

// Every member of the ideal category has a supremum.
bool is_j_cocomplete(const VCategory& x, const IdealClass& cls, const Limits& limits = {});

// Supremum of a presheaf on a presheaf category: composition with the
// lower star of the Yoneda embedding (pointwise join of members weighted
// by the outer presheaf).
Presheaf presheaf_sup(const PresheafCategory& jx, const Presheaf& outer);

// f preserves suprema of class members whenever both sides exist:
// witnesses of p map into witnesses of the pushed presheaf p . f^*.
bool is_cocontinuous_functor(const VFunctor& f, const IdealClass& cls,
                             const Limits& limits = {});

// Push a presheaf on the source along a functor: value at y is the join
// over x of Y(y, fx) (x) p(x).
Presheaf push_presheaf(const VFunctor& f, const Presheaf& p);

}  // namespace qcat
