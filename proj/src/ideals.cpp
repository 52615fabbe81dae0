#include "qcat/ideals.hpp"

#include <algorithm>
#include <map>

namespace qcat {

std::string IdealClass::label() const {
  switch (kind) {
    case IdealKind::All:
      return "all";
    case IdealKind::OrderIdeal:
      return "order";
    case IdealKind::Fsw:
      return fsw_below == BelowFlavor::Totally ? "fsw" : "fsw-directed";
    case IdealKind::RightAdjoint:
      return "radj";
    case IdealKind::Custom:
      return "custom:" + custom_name;
  }
  return "?";
}

namespace {

std::map<std::string, IdealPredicate>& registry() {
  static std::map<std::string, IdealPredicate> r = [] {
    std::map<std::string, IdealPredicate> m;
    m["representables"] = [](const VCategory& x, const Presheaf& p) {
      for (int i = 0; i < x.size(); ++i)
        if (p == representable(x, i)) return true;
      return false;
    };
    m["nonempty"] = [](const VCategory& x, const Presheaf& p) {
      for (int i = 0; i < x.size(); ++i)
        if (p[i] != x.q->bottom()) return true;
      return false;
    };
    // A class that deliberately fails saturation: it admits every support
    // size except two, so a union of two incomparable members escapes it.
    m["no_pair_supports"] = [](const VCategory& x, const Presheaf& p) {
      for (int i = 0; i < x.size(); ++i)
        if (p == representable(x, i)) return true;
      int support = 0;
      for (int i = 0; i < x.size(); ++i)
        if (p[i] != x.q->bottom()) ++support;
      return support != 2;
    };
    return m;
  }();
  return r;
}

// Shared DFS for presheaf / copresheaf enumeration.  `forward` selects the
// variance of the closure condition.
std::vector<Presheaf> enumerate_maps(const VCategory& x, bool presheaf_side,
                                     const Limits& limits) {
  const int n = x.size();
  const int qn = x.q->size();
  double total = 1;
  for (int i = 0; i < n; ++i) {
    total *= qn;
    if (total > static_cast<double>(limits.max_maps))
      throw resource_error("presheaf enumeration: |Q|^|X| exceeds the cap");
  }
  const Quantale& q = *x.q;
  std::vector<Presheaf> out;
  Presheaf p(n, 0);

  auto compatible = [&](int i) {
    // check the condition between position i and all j <= i
    for (int j = 0; j <= i; ++j) {
      if (presheaf_side) {
        if (!q.leq(q.tensor(x.hom(j, i), p[i]), p[j])) return false;
        if (!q.leq(q.tensor(x.hom(i, j), p[j]), p[i])) return false;
      } else {
        if (!q.leq(q.tensor(p[i], x.hom(i, j)), p[j])) return false;
        if (!q.leq(q.tensor(p[j], x.hom(j, i)), p[i])) return false;
      }
    }
    return true;
  };

  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      out.push_back(p);
      if (out.size() > limits.max_members)
        throw resource_error("presheaf enumeration: too many members");
      return;
    }
    for (Elem v = 0; v < qn; ++v) {
      p[i] = v;
      if (compatible(i)) rec(i + 1);
    }
    p[i] = 0;
  };
  rec(0);
  return out;
}

std::vector<int> support(const VCategory& x, const Presheaf& p) {
  std::vector<int> s;
  for (int i = 0; i < x.size(); ++i)
    if (p[i] != x.q->bottom()) s.push_back(i);
  return s;
}

}  // namespace

void register_ideal_class(const std::string& name, IdealPredicate pred) {
  registry()[name] = std::move(pred);
}

bool ideal_class_registered(const std::string& name) { return registry().count(name) > 0; }

std::vector<std::string> registered_ideal_classes() {
  std::vector<std::string> names;
  for (const auto& [k, v] : registry()) names.push_back(k);
  return names;
}

std::vector<Presheaf> enumerate_presheaves(const VCategory& x, const Limits& limits) {
  return enumerate_maps(x, true, limits);
}

std::vector<Copresheaf> enumerate_copresheaves(const VCategory& x, const Limits& limits) {
  return enumerate_maps(x, false, limits);
}

bool is_order_ideal(const VCategory& x, const Presheaf& p) {
  if (x.q->size() != 2)
    throw structural_error("order ideals are only defined over the Boolean quantale");
  std::vector<int> s = support(x, p);
  if (s.empty()) return false;  // directedness includes nonemptiness
  const Elem top = x.q->unit();
  for (int a : s)
    for (int b : s) {
      bool bounded = false;
      for (int c : s)
        if (x.hom(a, c) == top && x.hom(b, c) == top) {
          bounded = true;
          break;
        }
      if (!bounded) return false;
    }
  return true;
}

bool is_fsw_ideal(const VCategory& x, const Presheaf& p, BelowFlavor flavor) {
  const Quantale& q = *x.q;
  auto below_unit = [&](Elem e) {
    return flavor == BelowFlavor::Totally ? q.totally_below(e, q.unit())
                                          : q.way_below_directed(e, q.unit());
  };
  auto below = [&](Elem e, Elem v) {
    return flavor == BelowFlavor::Totally ? q.totally_below(e, v)
                                          : q.way_below_directed(e, v);
  };

  // (a) the values join up to the unit
  Elem total = q.bottom();
  for (Elem v : p) total = q.join(total, v);
  if (total != q.unit()) return false;

  // (b) pairs of approximated values admit a common refinement
  const int n = x.size();
  for (Elem e1 = 0; e1 < q.size(); ++e1) {
    if (!below_unit(e1)) continue;
    for (Elem e2 = 0; e2 < q.size(); ++e2) {
      if (!below_unit(e2)) continue;
      for (Elem d = 0; d < q.size(); ++d) {
        if (!below_unit(d)) continue;
        for (int x1 = 0; x1 < n; ++x1) {
          if (!below(e1, p[x1])) continue;
          for (int x2 = 0; x2 < n; ++x2) {
            if (!below(e2, p[x2])) continue;
            bool found = false;
            for (int z = 0; z < n && !found; ++z)
              if (below(d, p[z]) && below(e1, x.hom(x1, z)) && below(e2, x.hom(x2, z)))
                found = true;
            if (!found) return false;
          }
        }
      }
    }
  }
  return true;
}

bool is_right_adjoint_presheaf(const VCategory& x, const Presheaf& p, const Limits& limits) {
  Distributor pd = presheaf_to_dist(x, p);
  for (const Copresheaf& c : enumerate_copresheaves(x, limits))
    if (adjoint_check(copresheaf_to_dist(x, c), pd)) return true;
  return false;
}

bool ideal_member(const IdealClass& cls, const VCategory& x, const Presheaf& p,
                  const Limits& limits) {
  switch (cls.kind) {
    case IdealKind::All:
      return true;
    case IdealKind::OrderIdeal:
      return is_order_ideal(x, p);
    case IdealKind::Fsw:
      return is_fsw_ideal(x, p, cls.fsw_below);
    case IdealKind::RightAdjoint:
      return is_right_adjoint_presheaf(x, p, limits);
    case IdealKind::Custom: {
      auto it = registry().find(cls.custom_name);
      if (it == registry().end())
        throw structural_error("unknown custom ideal class: " + cls.custom_name +
                               " (registered: " + [] {
                                 std::string s;
                                 for (const auto& n : registered_ideal_classes())
                                   s += (s.empty() ? "" : ", ") + n;
                                 return s;
                               }() + ")");
      return it->second(x, p);
    }
  }
  return false;
}

std::optional<int> PresheafCategory::find(const Presheaf& p) const {
  auto it = std::lower_bound(members.begin(), members.end(), p);
  if (it != members.end() && *it == p) return static_cast<int>(it - members.begin());
  return std::nullopt;
}

PresheafCategory build_jx(const VCategory& x, const IdealClass& cls, const Limits& limits) {
  PresheafCategory jx;
  jx.base = x;
  jx.cls = cls;
  for (const Presheaf& p : enumerate_presheaves(x, limits))
    if (ideal_member(cls, x, p, limits)) jx.members.push_back(p);
  // enumeration is already lexicographic; keep it that way for determinism

  jx.repr_index.resize(x.size());
  for (int i = 0; i < x.size(); ++i) {
    auto idx = [&]() -> std::optional<int> {
      auto it = std::lower_bound(jx.members.begin(), jx.members.end(), representable(x, i));
      if (it != jx.members.end() && *it == representable(x, i))
        return static_cast<int>(it - jx.members.begin());
      return std::nullopt;
    }();
    if (!idx)
      throw std::invalid_argument("ideal class " + cls.label() +
                                  " is missing the representable at " + x.objects[i]);
    jx.repr_index[i] = *idx;
  }

  const int k = static_cast<int>(jx.members.size());
  jx.cat.q = x.q;
  for (int i = 0; i < k; ++i) {
    std::string name = "<";
    for (int z = 0; z < x.size(); ++z)
      name += (z ? "," : "") + x.q->name_of(jx.members[i][z]);
    jx.cat.objects.push_back(name + ">");
  }
  jx.cat.hom = ElemMatrix(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      jx.cat.hom(i, j) = presheaf_hom(x, jx.members[i], jx.members[j]);
  return jx;
}

VFunctor yoneda_functor(const PresheafCategory& jx) {
  VFunctor y{jx.base, jx.cat, jx.repr_index};
  return y;
}

bool endo_in_class(const IdealClass& cls, const Distributor& v, const Limits& limits) {
  if (!v.source.same_carrier(v.target))
    throw structural_error("endo_in_class: not an endodistributor");
  for (int y = 0; y < v.target.size(); ++y)
    if (!ideal_member(cls, v.source, dist_column(v, y), limits)) return false;
  return true;
}

SaturationReport saturation_check(const VCategory& x, const IdealClass& cls,
                                  const Limits& limits) {
  PresheafCategory jx = build_jx(x, cls, limits);
  PresheafCategory jjx = build_jx(jx.cat, cls, limits);
  SaturationReport rep;
  const Quantale& q = *x.q;
  for (const Presheaf& outer : jjx.members) {
    // flatten: value at z is the join over members phi of phi(z) (x) outer(phi)
    Presheaf flat(x.size(), q.bottom());
    for (int i = 0; i < static_cast<int>(jx.members.size()); ++i)
      for (int z = 0; z < x.size(); ++z)
        flat[z] = q.join(flat[z], q.tensor(jx.members[i][z], outer[i]));
    if (!ideal_member(cls, x, flat, limits)) {
      rep.saturated = false;
      rep.outer = outer;
      rep.flattened = flat;
      return rep;
    }
  }
  return rep;
}

}  // namespace qcat
