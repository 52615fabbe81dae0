#include "qcat/cocomplete.hpp"

namespace qcat {

SupremumResult supremum(const VCategory& x, const Presheaf& p) {
  SupremumResult res;
  res.presheaf = p;
  const int n = x.size();
  // hom from p into each representable, computed once
  std::vector<Elem> into_repr(n);
  for (int z = 0; z < n; ++z) into_repr[z] = presheaf_hom(x, p, representable(x, z));
  for (int w = 0; w < n; ++w) {
    bool ok = true;
    for (int z = 0; z < n && ok; ++z)
      if (x.hom(w, z) != into_repr[z]) ok = false;
    if (ok) res.witnesses.push_back(w);
  }
  if (!res.witnesses.empty()) res.canonical = res.witnesses.front();
  return res;
}

SupIdealCategory restrict_to_sups(const PresheafCategory& jx) {
  SupIdealCategory out;
  out.js.base = jx.base;
  out.js.cls = jx.cls;
  std::vector<int> keep;
  for (int i = 0; i < static_cast<int>(jx.members.size()); ++i) {
    SupremumResult s = supremum(jx.base, jx.members[i]);
    if (s.canonical) {
      keep.push_back(i);
      out.js.members.push_back(jx.members[i]);
      out.sup.push_back(*s.canonical);
    }
  }
  const int k = static_cast<int>(keep.size());
  out.js.cat.q = jx.base.q;
  for (int i : keep) out.js.cat.objects.push_back(jx.cat.objects[i]);
  out.js.cat.hom = ElemMatrix(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) out.js.cat.hom(i, j) = jx.cat.hom(keep[i], keep[j]);

  out.js.repr_index.resize(jx.base.size());
  for (int i = 0; i < jx.base.size(); ++i) {
    auto idx = out.js.find(representable(jx.base, i));
    if (!idx)
      throw internal_error("a representable lost its supremum; the Yoneda image "
                           "always has witnesses");
    out.js.repr_index[i] = *idx;
  }
  return out;
}

SupIdealCategory build_js(const VCategory& x, const IdealClass& cls, const Limits& limits) {
  return restrict_to_sups(build_jx(x, cls, limits));
}

VFunctor sup_functor(const SupIdealCategory& js) {
  VFunctor f{js.js.cat, js.js.base, js.sup};
  if (!validate_vfunctor(f).ok())
    throw internal_error("supremum assignment failed functoriality");
  return f;
}

bool is_j_cocomplete(const VCategory& x, const IdealClass& cls, const Limits& limits) {
  PresheafCategory jx = build_jx(x, cls, limits);
  for (const Presheaf& p : jx.members)
    if (!supremum(x, p).canonical) return false;
  return true;
}

Presheaf presheaf_sup(const PresheafCategory& jx, const Presheaf& outer) {
  if (outer.size() != jx.members.size())
    throw structural_error("presheaf_sup: outer presheaf does not match the member list");
  const Quantale& q = *jx.base.q;
  Presheaf flat(jx.base.size(), q.bottom());
  for (int i = 0; i < static_cast<int>(jx.members.size()); ++i)
    for (int z = 0; z < jx.base.size(); ++z)
      flat[z] = q.join(flat[z], q.tensor(jx.members[i][z], outer[i]));
  return flat;
}

Presheaf push_presheaf(const VFunctor& f, const Presheaf& p) {
  const Quantale& q = *f.source.q;
  Presheaf out(f.target.size(), q.bottom());
  for (int y = 0; y < f.target.size(); ++y)
    for (int x = 0; x < f.source.size(); ++x)
      out[y] = q.join(out[y], q.tensor(f.target.hom(y, f.map[x]), p[x]));
  return out;
}

bool is_cocontinuous_functor(const VFunctor& f, const IdealClass& cls, const Limits& limits) {
  PresheafCategory jx = build_jx(f.source, cls, limits);
  for (const Presheaf& p : jx.members) {
    SupremumResult sx = supremum(f.source, p);
    if (!sx.canonical) continue;
    Presheaf pushed = push_presheaf(f, p);
    SupremumResult sy = supremum(f.target, pushed);
    if (!sy.canonical) continue;  // both suprema must exist for the law to bite
    for (int w : sx.witnesses) {
      bool found = false;
      for (int wy : sy.witnesses)
        if (wy == f.map[w]) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace qcat
