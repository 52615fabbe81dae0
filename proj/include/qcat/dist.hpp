#pragma once

#include "qcat/vcat.hpp"

namespace qcat {

// Quantale-valued bimodule between two categories over the same quantale.
// The matrix is indexed m(x, y) with x from the source, y from the target,
// matching the composition formula used throughout.
struct Distributor {
  VCategory source;
  VCategory target;
  ElemMatrix m;

  Elem operator()(int x, int y) const { return m(x, y); }
};

ValidationReport validate_distributor(const Distributor& d);

// The structure of a category as the identity distributor on it.
Distributor identity_dist(const VCategory& x);

// (psi . phi)(x, z) = join over y of phi(x,y) (x) psi(y,z);
// phi: X -|-> Y applied first, psi: Y -|-> Z second.
Distributor compose(const Distributor& psi, const Distributor& phi);

// Stars of a functor f: X -> Y.
// lower_star(f): X -|-> Y, (x,y) -> Y(fx, y)
// upper_star(f): Y -|-> X, (y,x) -> Y(y, fx)
Distributor lower_star(const VFunctor& f);
Distributor upper_star(const VFunctor& f);

// Lifting of psi: Z -|-> Y along phi: X -|-> Y, of type Z -|-> X:
//   (z, x) -> meet over y of hom(phi(x,y), psi(z,y)).
// Largest gamma with compose(phi, gamma) <= psi.
Distributor lifting(const Distributor& phi, const Distributor& psi);

// Right extension of psi: X -|-> Z along phi: X -|-> Y, of type Y -|-> Z:
//   (y, z) -> meet over x of hom(phi(x,y), psi(x,z)).
// Largest gamma with compose(gamma, phi) <= psi.
Distributor right_extension(const Distributor& psi, const Distributor& phi);

// phi: Z -|-> X is left adjoint to psi: X -|-> Z when
// compose(phi, psi) <= X and compose(psi, phi) >= Z.
bool adjoint_check(const Distributor& phi, const Distributor& psi);

bool dist_leq(const Distributor& a, const Distributor& b);

// Presheaves are distributors into the one-object category, stored as the
// vector of their values.
using Presheaf = std::vector<Elem>;
// Copresheaves are distributors out of the one-object category.
using Copresheaf = std::vector<Elem>;

Distributor presheaf_to_dist(const VCategory& x, const Presheaf& p);
Distributor copresheaf_to_dist(const VCategory& x, const Copresheaf& p);

// Column y of a distributor as a presheaf on the source; equals the
// composite of the distributor with the upper star of the point y.
Presheaf dist_column(const Distributor& d, int y);

// Representable presheaf at an object: X(-, x).
Presheaf representable(const VCategory& x, int obj);

// Pointwise presheaf hom: meet over z of hom(p(z), r(z)).
Elem presheaf_hom(const VCategory& x, const Presheaf& p, const Presheaf& r);

// Presheaf condition X(x', x) (x) p(x) <= p(x').
bool is_presheaf(const VCategory& x, const Presheaf& p);
bool is_copresheaf(const VCategory& x, const Copresheaf& p);

}  // namespace qcat
