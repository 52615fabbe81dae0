#pragma once

#include <string>
#include <vector>

#include "qcat/quantale.hpp"
#include "qcat/report.hpp"
#include "qcat/util.hpp"

namespace qcat {

// Finite category enriched in a quantale: objects plus a structure matrix
// hom(x,y) that is reflexive (unit <= hom(x,x)) and transitive.
struct VCategory {
  QuantalePtr q;
  std::vector<std::string> objects;
  ElemMatrix hom;  // hom(x, y), x row, y column

  int size() const { return static_cast<int>(objects.size()); }
  Elem operator()(int x, int y) const { return hom(x, y); }

  bool same_carrier(const VCategory& o) const {
    return objects == o.objects && hom == o.hom && *q == *o.q;
  }
};

struct VFunctor {
  VCategory source;
  VCategory target;
  std::vector<int> map;  // object assignment

  int operator()(int x) const { return map[x]; }
};

ValidationReport validate_vcategory(const VCategory& x);
ValidationReport validate_vfunctor(const VFunctor& f);

// Structure equality on images: X(x,y) == Y(fx,fy) everywhere.
bool is_fully_faithful(const VFunctor& f);

VCategory dual(const VCategory& x);

// Carrier is the set of pairs in row-major order; structure is the tensor
// of the component structures.
VCategory tensor_product(const VCategory& x, const VCategory& y);

// All maps X -> Y passing the functor condition, with pointwise structure
// hom(f,g) = meet over x of Y(fx, gx).  Enumerates |Y|^|X| candidates.
struct HomCategory {
  VCategory cat;
  std::vector<std::vector<int>> maps;  // aligned with cat.objects
};
HomCategory internal_hom_category(const VCategory& x, const VCategory& y,
                                  const Limits& limits = {});

// x below y iff unit <= X(x,y).
BoolMatrix underlying_preorder(const VCategory& x);

bool is_separated(const VCategory& x);  // underlying preorder antisymmetric

// Convenience builders used across tests and generators.
VCategory discrete_category(QuantalePtr q, int n);
// Poset as a category over the Boolean quantale.
VCategory poset_category(QuantalePtr two, const BoolMatrix& leq);
// A quantale as a category over itself via its internal hom.
VCategory self_category(QuantalePtr q);
VCategory one_object_category(QuantalePtr q);

}  // namespace qcat
