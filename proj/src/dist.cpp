#include "qcat/dist.hpp"

namespace qcat {

namespace {

void check_compatible(const VCategory& a, const VCategory& b, const char* what) {
  if (!(*a.q == *b.q)) throw structural_error(std::string(what) + ": quantale mismatch");
}

}  // namespace

ValidationReport validate_distributor(const Distributor& d) {
  check_compatible(d.source, d.target, "distributor");
  ValidationReport rep;
  rep.subject = "distributor";
  const int nx = d.source.size(), ny = d.target.size();
  if (d.m.rows() != nx || d.m.cols() != ny)
    throw structural_error("distributor: matrix shape does not match the carriers");
  for (Elem v : d.m.flat())
    if (v < 0 || v >= d.source.q->size())
      throw structural_error("distributor: entry is not a quantale element");

  const Quantale& q = *d.source.q;
  // both bimodule laws at once: X(x',x) (x) m(x,y) (x) Y(y,y') <= m(x',y')
  bool ok = true;
  std::string w;
  for (int x1 = 0; x1 < nx && ok; ++x1)
    for (int x = 0; x < nx && ok; ++x)
      for (int y = 0; y < ny && ok; ++y)
        for (int y1 = 0; y1 < ny && ok; ++y1) {
          Elem lhs = q.tensor(q.tensor(d.source.hom(x1, x), d.m(x, y)), d.target.hom(y, y1));
          if (!q.leq(lhs, d.m(x1, y1))) {
            ok = false;
            w = "(" + d.source.objects[x1] + ", " + d.source.objects[x] + ", " +
                d.target.objects[y] + ", " + d.target.objects[y1] + ")";
          }
        }
  rep.add("bimodule", ok, w);
  return rep;
}

Distributor identity_dist(const VCategory& x) { return {x, x, x.hom}; }

Distributor compose(const Distributor& psi, const Distributor& phi) {
  check_compatible(phi.source, psi.target, "compose");
  if (!phi.target.same_carrier(psi.source))
    throw structural_error("compose: middle categories differ");
  const Quantale& q = *phi.source.q;
  const int nx = phi.source.size(), ny = phi.target.size(), nz = psi.target.size();
  Distributor r{phi.source, psi.target, ElemMatrix(nx, nz, q.bottom())};
  for (int x = 0; x < nx; ++x)
    for (int z = 0; z < nz; ++z) {
      Elem acc = q.bottom();
      for (int y = 0; y < ny; ++y)
        acc = q.join(acc, q.tensor(phi.m(x, y), psi.m(y, z)));
      r.m(x, z) = acc;
    }
  return r;
}

Distributor lower_star(const VFunctor& f) {
  Distributor d{f.source, f.target, ElemMatrix(f.source.size(), f.target.size())};
  for (int x = 0; x < f.source.size(); ++x)
    for (int y = 0; y < f.target.size(); ++y) d.m(x, y) = f.target.hom(f.map[x], y);
  return d;
}

Distributor upper_star(const VFunctor& f) {
  Distributor d{f.target, f.source, ElemMatrix(f.target.size(), f.source.size())};
  for (int y = 0; y < f.target.size(); ++y)
    for (int x = 0; x < f.source.size(); ++x) d.m(y, x) = f.target.hom(y, f.map[x]);
  return d;
}

Distributor lifting(const Distributor& phi, const Distributor& psi) {
  check_compatible(phi.source, psi.source, "lifting");
  if (!phi.target.same_carrier(psi.target))
    throw structural_error("lifting: the two distributors must share their target");
  const Quantale& q = *phi.source.q;
  const int nz = psi.source.size(), nx = phi.source.size(), ny = phi.target.size();
  Distributor r{psi.source, phi.source, ElemMatrix(nz, nx)};
  for (int z = 0; z < nz; ++z)
    for (int x = 0; x < nx; ++x) {
      Elem acc = q.unit();
      for (int y = 0; y < ny; ++y)
        acc = q.meet(acc, q.hom(phi.m(x, y), psi.m(z, y)));
      r.m(z, x) = acc;
    }
  return r;
}

Distributor right_extension(const Distributor& psi, const Distributor& phi) {
  check_compatible(phi.source, psi.source, "right_extension");
  if (!phi.source.same_carrier(psi.source))
    throw structural_error("right_extension: the two distributors must share their source");
  const Quantale& q = *phi.source.q;
  const int nx = phi.source.size(), ny = phi.target.size(), nz = psi.target.size();
  Distributor r{phi.target, psi.target, ElemMatrix(ny, nz)};
  for (int y = 0; y < ny; ++y)
    for (int z = 0; z < nz; ++z) {
      Elem acc = q.unit();
      for (int x = 0; x < nx; ++x)
        acc = q.meet(acc, q.hom(phi.m(x, y), psi.m(x, z)));
      r.m(y, z) = acc;
    }
  return r;
}

bool dist_leq(const Distributor& a, const Distributor& b) {
  if (a.m.rows() != b.m.rows() || a.m.cols() != b.m.cols())
    throw structural_error("dist_leq: shape mismatch");
  const Quantale& q = *a.source.q;
  for (int x = 0; x < a.m.rows(); ++x)
    for (int y = 0; y < a.m.cols(); ++y)
      if (!q.leq(a.m(x, y), b.m(x, y))) return false;
  return true;
}

bool adjoint_check(const Distributor& phi, const Distributor& psi) {
  // phi: Z -|-> X, psi: X -|-> Z
  Distributor left = compose(phi, psi);   // X -|-> X
  Distributor right = compose(psi, phi);  // Z -|-> Z
  return dist_leq(left, identity_dist(psi.source)) &&
         dist_leq(identity_dist(phi.source), right);
}

Distributor presheaf_to_dist(const VCategory& x, const Presheaf& p) {
  if (static_cast<int>(p.size()) != x.size())
    throw structural_error("presheaf length does not match the carrier");
  Distributor d{x, one_object_category(x.q), ElemMatrix(x.size(), 1)};
  for (int i = 0; i < x.size(); ++i) d.m(i, 0) = p[i];
  return d;
}

Distributor copresheaf_to_dist(const VCategory& x, const Copresheaf& p) {
  if (static_cast<int>(p.size()) != x.size())
    throw structural_error("copresheaf length does not match the carrier");
  Distributor d{one_object_category(x.q), x, ElemMatrix(1, x.size())};
  for (int i = 0; i < x.size(); ++i) d.m(0, i) = p[i];
  return d;
}

Presheaf dist_column(const Distributor& d, int y) {
  Presheaf p(d.source.size());
  for (int x = 0; x < d.source.size(); ++x) p[x] = d.m(x, y);
  return p;
}

Presheaf representable(const VCategory& x, int obj) {
  Presheaf p(x.size());
  for (int i = 0; i < x.size(); ++i) p[i] = x.hom(i, obj);
  return p;
}

Elem presheaf_hom(const VCategory& x, const Presheaf& p, const Presheaf& r) {
  const Quantale& q = *x.q;
  Elem acc = q.unit();
  for (int z = 0; z < x.size(); ++z) acc = q.meet(acc, q.hom(p[z], r[z]));
  return acc;
}

bool is_presheaf(const VCategory& x, const Presheaf& p) {
  const Quantale& q = *x.q;
  for (int a = 0; a < x.size(); ++a)
    for (int b = 0; b < x.size(); ++b)
      if (!q.leq(q.tensor(x.hom(a, b), p[b]), p[a])) return false;
  return true;
}

bool is_copresheaf(const VCategory& x, const Copresheaf& p) {
  const Quantale& q = *x.q;
  for (int a = 0; a < x.size(); ++a)
    for (int b = 0; b < x.size(); ++b)
      if (!q.leq(q.tensor(p[a], x.hom(a, b)), p[b])) return false;
  return true;
}

}  // namespace qcat
