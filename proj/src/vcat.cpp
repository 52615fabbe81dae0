#include "qcat/vcat.hpp"

#include <cmath>

namespace qcat {

namespace {

void check_structure(const VCategory& x) {
  if (!x.q) throw structural_error("category: missing quantale");
  const int n = x.size();
  if (n == 0) throw structural_error("category: empty carrier");
  if (x.hom.rows() != n || x.hom.cols() != n)
    throw structural_error("category: structure matrix is not square over the objects");
  for (Elem v : x.hom.flat())
    if (v < 0 || v >= x.q->size())
      throw structural_error("category: structure entry is not a quantale element");
}

}  // namespace

ValidationReport validate_vcategory(const VCategory& x) {
  check_structure(x);
  ValidationReport rep;
  rep.subject = "category";
  const Quantale& q = *x.q;
  const int n = x.size();

  bool refl = true;
  std::string wr;
  for (int i = 0; i < n && refl; ++i)
    if (!q.leq(q.unit(), x.hom(i, i))) {
      refl = false;
      wr = x.objects[i];
    }
  rep.add("reflexive", refl, wr);

  bool trans = true;
  std::string wt;
  for (int a = 0; a < n && trans; ++a)
    for (int b = 0; b < n && trans; ++b)
      for (int c = 0; c < n && trans; ++c)
        if (!q.leq(q.tensor(x.hom(a, b), x.hom(b, c)), x.hom(a, c))) {
          trans = false;
          wt = "(" + x.objects[a] + ", " + x.objects[b] + ", " + x.objects[c] + ")";
        }
  rep.add("transitive", trans, wt);
  return rep;
}

ValidationReport validate_vfunctor(const VFunctor& f) {
  ValidationReport rep;
  rep.subject = "functor";
  if (!(*f.source.q == *f.target.q)) {
    rep.add("same_quantale", false, "source and target enriched in different quantales");
    return rep;
  }
  rep.add("same_quantale", true);
  const int n = f.source.size();
  if (static_cast<int>(f.map.size()) != n)
    throw structural_error("functor: object map has wrong length");
  for (int v : f.map)
    if (v < 0 || v >= f.target.size())
      throw structural_error("functor: object map out of range");

  const Quantale& q = *f.source.q;
  bool ok = true;
  std::string w;
  for (int a = 0; a < n && ok; ++a)
    for (int b = 0; b < n && ok; ++b)
      if (!q.leq(f.source.hom(a, b), f.target.hom(f.map[a], f.map[b]))) {
        ok = false;
        w = "(" + f.source.objects[a] + ", " + f.source.objects[b] + ")";
      }
  rep.add("structure_nonexpanding", ok, w);
  return rep;
}

bool is_fully_faithful(const VFunctor& f) {
  const int n = f.source.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (f.source.hom(a, b) != f.target.hom(f.map[a], f.map[b])) return false;
  return true;
}

VCategory dual(const VCategory& x) {
  VCategory d = x;
  for (int a = 0; a < x.size(); ++a)
    for (int b = 0; b < x.size(); ++b) d.hom(a, b) = x.hom(b, a);
  return d;
}

VCategory tensor_product(const VCategory& x, const VCategory& y) {
  if (!(*x.q == *y.q)) throw structural_error("tensor_product: quantale mismatch");
  VCategory p;
  p.q = x.q;
  const int nx = x.size(), ny = y.size();
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      p.objects.push_back("(" + x.objects[i] + "," + y.objects[j] + ")");
  p.hom = ElemMatrix(nx * ny, nx * ny);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      for (int k = 0; k < nx; ++k)
        for (int l = 0; l < ny; ++l)
          p.hom(i * ny + j, k * ny + l) = x.q->tensor(x.hom(i, k), y.hom(j, l));
  return p;
}

HomCategory internal_hom_category(const VCategory& x, const VCategory& y,
                                  const Limits& limits) {
  if (!(*x.q == *y.q)) throw structural_error("internal_hom: quantale mismatch");
  const int nx = x.size(), ny = y.size();
  double count = std::pow(static_cast<double>(ny), nx);
  if (count > static_cast<double>(limits.max_maps))
    throw resource_error("internal_hom: |Y|^|X| exceeds the enumeration cap");

  HomCategory result;
  result.cat.q = x.q;
  std::vector<int> f(nx, 0);
  const Quantale& q = *x.q;
  while (true) {
    bool functor = true;
    for (int a = 0; a < nx && functor; ++a)
      for (int b = 0; b < nx && functor; ++b)
        if (!q.leq(x.hom(a, b), y.hom(f[a], f[b]))) functor = false;
    if (functor) result.maps.push_back(f);

    int i = nx - 1;
    while (i >= 0 && f[i] == ny - 1) f[i--] = 0;
    if (i < 0) break;
    ++f[i];
  }

  const int k = static_cast<int>(result.maps.size());
  for (int i = 0; i < k; ++i) {
    std::string name = "[";
    for (int a = 0; a < nx; ++a)
      name += (a ? "," : "") + y.objects[result.maps[i][a]];
    result.cat.objects.push_back(name + "]");
  }
  result.cat.hom = ElemMatrix(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Elem acc = q.unit();
      for (int a = 0; a < nx; ++a)
        acc = q.meet(acc, y.hom(result.maps[i][a], result.maps[j][a]));
      result.cat.hom(i, j) = acc;
    }
  return result;
}

BoolMatrix underlying_preorder(const VCategory& x) {
  const int n = x.size();
  BoolMatrix r(n, n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      r(a, b) = x.q->leq(x.q->unit(), x.hom(a, b)) ? 1 : 0;
  return r;
}

bool is_separated(const VCategory& x) {
  BoolMatrix r = underlying_preorder(x);
  for (int a = 0; a < x.size(); ++a)
    for (int b = 0; b < x.size(); ++b)
      if (a != b && r(a, b) && r(b, a)) return false;
  return true;
}

VCategory discrete_category(QuantalePtr q, int n) {
  VCategory x;
  x.q = std::move(q);
  for (int i = 0; i < n; ++i) x.objects.push_back("x" + std::to_string(i));
  x.hom = ElemMatrix(n, n, x.q->bottom());
  for (int i = 0; i < n; ++i) x.hom(i, i) = x.q->unit();
  return x;
}

VCategory poset_category(QuantalePtr two, const BoolMatrix& leq) {
  if (two->size() != 2) throw structural_error("poset_category: expected the Boolean quantale");
  VCategory x;
  x.q = std::move(two);
  const int n = leq.rows();
  for (int i = 0; i < n; ++i) x.objects.push_back("p" + std::to_string(i));
  x.hom = ElemMatrix(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) x.hom(a, b) = leq(a, b) ? x.q->unit() : x.q->bottom();
  return x;
}

VCategory self_category(QuantalePtr q) {
  VCategory x;
  x.q = q;
  const int n = q->size();
  for (int i = 0; i < n; ++i) x.objects.push_back(q->name_of(i));
  x.hom = ElemMatrix(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) x.hom(a, b) = q->hom(a, b);
  return x;
}

VCategory one_object_category(QuantalePtr q) {
  VCategory x;
  x.q = std::move(q);
  x.objects = {"*"};
  x.hom = ElemMatrix(1, 1, x.q->unit());
  return x;
}

}  // namespace qcat
