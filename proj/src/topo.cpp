#include "qcat/topo.hpp"

#include <algorithm>
#include <set>

namespace qcat {

std::optional<int> FinTop::open_index(uint64_t mask) const {
  auto it = std::lower_bound(opens.begin(), opens.end(), mask);
  if (it != opens.end() && *it == mask) return static_cast<int>(it - opens.begin());
  return std::nullopt;
}

ValidationReport validate_fintop(const FinTop& s) {
  if (s.points.empty()) throw structural_error("space: no points");
  if (s.size() > 20) throw resource_error("space: too many points");
  for (uint64_t m : s.opens)
    if (m & ~s.full_mask()) throw structural_error("space: open set mentions unknown points");
  if (!std::is_sorted(s.opens.begin(), s.opens.end()) ||
      std::adjacent_find(s.opens.begin(), s.opens.end()) != s.opens.end())
    throw structural_error("space: opens must be sorted and distinct");

  ValidationReport rep;
  rep.subject = "space";
  rep.add("has_empty_and_full",
          s.open_index(0).has_value() && s.open_index(s.full_mask()).has_value());
  bool closed = true;
  std::string w;
  for (uint64_t a : s.opens)
    for (uint64_t b : s.opens) {
      if (!s.open_index(a | b)) {
        closed = false;
        w = "union escapes";
      }
      if (!s.open_index(a & b)) {
        closed = false;
        w = "intersection escapes";
      }
    }
  rep.add("closed_under_union_and_intersection", closed, w);
  return rep;
}

bool filter_leq(const OpenFilter& a, const OpenFilter& b) {
  return (b.member_opens & ~a.member_opens) == 0;  // a contains b
}

bool filter_proper(const FinTop& s, const OpenFilter& f) {
  auto empty_idx = s.open_index(0);
  return empty_idx && !f.contains(*empty_idx);
}

std::vector<OpenFilter> enumerate_filters(const FinTop& s, const Limits& limits) {
  if (s.opens.size() > limits.max_opens)
    throw resource_error("filter enumeration: too many opens");
  std::vector<OpenFilter> out;
  for (std::size_t i = 0; i < s.opens.size(); ++i) {
    OpenFilter f;
    for (std::size_t j = 0; j < s.opens.size(); ++j)
      if ((s.opens[i] & ~s.opens[j]) == 0) f.member_opens |= (1ull << j);
    out.push_back(f);
  }
  return out;
}

FinTop f0_space(const FinTop& s, const Limits& limits) {
  std::vector<OpenFilter> filters = enumerate_filters(s, limits);
  const int k = static_cast<int>(filters.size());
  FinTop out;
  for (int i = 0; i < k; ++i) {
    std::string name = "<up:";
    uint64_t gen = s.opens[i];  // filters are aligned with their generators
    for (int p = 0; p < s.size(); ++p)
      if ((gen >> p) & 1ull) name += (name.back() == ':' ? "" : ",") + s.points[p];
    out.points.push_back(name + ">");
  }

  // basic opens {F : A in F}; the family is intersection-closed, so the
  // topology is its closure under unions plus the empty set
  std::set<uint64_t> opens;
  opens.insert(0);
  std::vector<uint64_t> basics;
  for (std::size_t a = 0; a < s.opens.size(); ++a) {
    uint64_t basic = 0;
    for (int i = 0; i < k; ++i)
      if (filters[i].contains(static_cast<int>(a))) basic |= (1ull << i);
    basics.push_back(basic);
    opens.insert(basic);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<uint64_t> cur(opens.begin(), opens.end());
    for (uint64_t a : cur)
      for (uint64_t b : basics)
        if (opens.insert(a | b).second) grew = true;
    if (opens.size() > limits.max_opens)
      throw resource_error("filter space: topology exceeds the open-set cap");
  }
  out.opens.assign(opens.begin(), opens.end());
  return out;
}

OpenFilter neighborhood_filter(const FinTop& s, int x) {
  OpenFilter f;
  for (std::size_t j = 0; j < s.opens.size(); ++j)
    if ((s.opens[j] >> x) & 1ull) f.member_opens |= (1ull << j);
  return f;
}

BoolMatrix specialization(const FinTop& s) {
  const int n = s.size();
  BoolMatrix leq(n, n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool below = true;  // x <= y iff every open containing y contains x
      for (uint64_t a : s.opens)
        if (((a >> y) & 1ull) && !((a >> x) & 1ull)) below = false;
      leq(x, y) = below;
    }
  return leq;
}

FinTop alexandroff(const std::vector<std::string>& names, const BoolMatrix& leq) {
  const int n = leq.rows();
  if (n != leq.cols()) throw structural_error("alexandroff: relation not square");
  if (n > 20) throw resource_error("alexandroff: carrier too large");
  FinTop s;
  s.points = names;
  if (static_cast<int>(names.size()) != n)
    throw structural_error("alexandroff: names do not match the relation");
  const uint64_t full = s.full_mask();
  for (uint64_t m = 0;; ++m) {
    bool down = true;
    for (int i = 0; i < n && down; ++i) {
      if (!((m >> i) & 1ull)) continue;
      for (int j = 0; j < n; ++j)
        if (leq(j, i) && !((m >> j) & 1ull)) down = false;
    }
    if (down) s.opens.push_back(m);
    if (m == full) break;
  }
  return s;
}

std::vector<int> convergence_points(const FinTop& s, const OpenFilter& f) {
  std::vector<int> pts;
  for (int x = 0; x < s.size(); ++x)
    if (filter_leq(f, neighborhood_filter(s, x))) pts.push_back(x);
  return pts;
}

FilterSup sup_filter(const FinTop& s, const OpenFilter& f) {
  FilterSup res;
  std::vector<int> conv = convergence_points(s, f);
  BoolMatrix leq = specialization(s);
  for (int w : conv) {
    bool smallest = true;
    for (int z : conv)
      if (!leq(w, z)) smallest = false;
    if (smallest) res.witnesses.push_back(w);
  }
  if (!res.witnesses.empty()) res.canonical = res.witnesses.front();
  return res;
}

bool filter_in_class(const FinTop& s, const OpenFilter& f, FilterClass cls) {
  return cls == FilterClass::All || filter_proper(s, f);
}

CocompleteTopReport is_cocomplete_top(const FinTop& s, FilterClass cls,
                                      const Limits& limits) {
  std::vector<OpenFilter> filters = enumerate_filters(s, limits);
  CocompleteTopReport rep;

  std::vector<int> class_members;
  std::vector<int> sup_of;  // canonical witness per class member
  for (int i = 0; i < static_cast<int>(filters.size()); ++i) {
    if (!filter_in_class(s, filters[i], cls)) continue;
    FilterSup sup = sup_filter(s, filters[i]);
    if (!sup.canonical) {
      rep.pointwise = false;
      rep.failing_filter = i;
      return rep;
    }
    class_members.push_back(i);
    sup_of.push_back(*sup.canonical);
  }

  // continuity of the witness assignment on the subspace of class filters:
  // each preimage point needs a basic neighborhood inside the preimage
  for (uint64_t u : s.opens) {
    std::vector<int> pre;  // positions within class_members
    for (int idx = 0; idx < static_cast<int>(class_members.size()); ++idx)
      if ((u >> sup_of[idx]) & 1ull) pre.push_back(idx);
    for (int idx : pre) {
      bool covered = false;
      for (std::size_t a = 0; a < s.opens.size() && !covered; ++a) {
        if (!filters[class_members[idx]].contains(static_cast<int>(a))) continue;
        // basic set {F : a in F} restricted to class members must sit in pre
        bool inside = true;
        for (int other = 0; other < static_cast<int>(class_members.size()); ++other)
          if (filters[class_members[other]].contains(static_cast<int>(a)) &&
              !((u >> sup_of[other]) & 1ull))
            inside = false;
        if (inside) covered = true;
      }
      if (!covered) {
        rep.sup_continuous = false;
        rep.failing_filter = class_members[idx];
        return rep;
      }
    }
  }
  return rep;
}

OpenFilter waybelow_filter(const FinTop& s, int x, FilterClass cls, const Limits& limits) {
  std::vector<OpenFilter> filters = enumerate_filters(s, limits);
  BoolMatrix leq = specialization(s);
  // union of all qualifying filters, then closure under intersection and
  // upward; on a finite lattice that is the up-set of the intersection of
  // everything collected
  uint64_t collected = 0;
  for (const OpenFilter& f : filters) {
    if (!filter_in_class(s, f, cls)) continue;
    FilterSup sup = sup_filter(s, f);
    if (!sup.canonical || !leq(x, *sup.canonical)) continue;
    collected |= f.member_opens;
  }
  uint64_t meet = s.full_mask();
  for (std::size_t j = 0; j < s.opens.size(); ++j)
    if ((collected >> j) & 1ull) meet &= s.opens[j];
  OpenFilter out;
  for (std::size_t j = 0; j < s.opens.size(); ++j)
    if ((meet & ~s.opens[j]) == 0) out.member_opens |= (1ull << j);
  return out;
}

namespace {

bool waybelow_assignment_continuous(const FinTop& s, const std::vector<OpenFilter>& wb) {
  // preimages of the basic opens of the filter space must be open
  for (std::size_t a = 0; a < s.opens.size(); ++a) {
    uint64_t pre = 0;
    for (int x = 0; x < s.size(); ++x)
      if (wb[x].contains(static_cast<int>(a))) pre |= (1ull << x);
    if (!s.open_index(pre)) return false;
  }
  return true;
}

}  // namespace

ContinuousTopReport is_continuous_top(const FinTop& s, FilterClass cls,
                                      const Limits& limits) {
  ContinuousTopReport rep;
  std::vector<OpenFilter> wb;
  for (int x = 0; x < s.size(); ++x) wb.push_back(waybelow_filter(s, x, cls, limits));

  for (int x = 0; x < s.size(); ++x) {
    if (cls == FilterClass::Proper && !filter_proper(s, wb[x])) {
      rep.filters_in_class = false;
      rep.failing_point = x;
    }
    FilterSup sup = sup_filter(s, wb[x]);
    bool among = false;
    for (int w : sup.witnesses)
      if (w == x) among = true;
    if (!among) {
      rep.points_recovered = false;
      if (!rep.failing_point) rep.failing_point = x;
    }
  }
  rep.assignment_continuous = waybelow_assignment_continuous(s, wb);
  return rep;
}

LocalWayBelowReport local_waybelow_consistency(const FinTop& s, FilterClass cls,
                                               const Limits& limits) {
  LocalWayBelowReport rep;
  std::vector<OpenFilter> wb;
  for (int x = 0; x < s.size(); ++x) wb.push_back(waybelow_filter(s, x, cls, limits));
  BoolMatrix leq = specialization(s);
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y)
      if (leq(x, y) && !filter_leq(wb[x], wb[y])) rep.monotone = false;
  rep.topologically_continuous = waybelow_assignment_continuous(s, wb);
  return rep;
}

FinTop subbasis_space(const std::vector<std::string>& names, const BoolMatrix& leq) {
  const int n = leq.rows();
  if (n > 16) throw resource_error("subbasis_space: carrier too large");
  // qualifying sets: down-closed, and meeting every subset whose meet they
  // contain (the empty subset has the top as meet)
  auto meet_of = [&](uint64_t m) -> std::optional<int> {
    // greatest lower bound of the subset, if any
    for (int c = 0; c < n; ++c) {
      bool lower = true;
      for (int i = 0; i < n; ++i)
        if (((m >> i) & 1ull) && !leq(c, i)) lower = false;
      if (!lower) continue;
      bool greatest = true;
      for (int d = 0; d < n; ++d) {
        bool lower_d = true;
        for (int i = 0; i < n; ++i)
          if (((m >> i) & 1ull) && !leq(d, i)) lower_d = false;
        if (lower_d && !leq(d, c)) greatest = false;
      }
      if (greatest) return c;
    }
    return std::nullopt;
  };

  std::vector<uint64_t> subbasis;
  const uint64_t full = (1ull << n) - 1;
  for (uint64_t a = 0; a <= full; ++a) {
    bool down = true;
    for (int i = 0; i < n && down; ++i) {
      if (!((a >> i) & 1ull)) continue;
      for (int j = 0; j < n; ++j)
        if (leq(j, i) && !((a >> j) & 1ull)) down = false;
    }
    if (!down) continue;
    bool qualifies = true;
    for (uint64_t b = 0; b <= full && qualifies; ++b) {
      auto m = meet_of(b);
      if (!m) continue;
      if (((a >> *m) & 1ull) && (a & b) == 0) qualifies = false;
    }
    if (qualifies) subbasis.push_back(a);
  }

  std::set<uint64_t> opens = {0, full};
  for (uint64_t a : subbasis) opens.insert(a);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<uint64_t> cur(opens.begin(), opens.end());
    for (uint64_t a : cur)
      for (uint64_t b : cur) {
        if (opens.insert(a | b).second) grew = true;
        if (opens.insert(a & b).second) grew = true;
      }
  }
  FinTop s;
  s.points = names;
  s.opens.assign(opens.begin(), opens.end());
  return s;
}

std::vector<FinTop> all_topologies(int n) {
  if (n > 5) throw resource_error("all_topologies: too many points");
  // finite topologies correspond to preorders through specialization
  std::vector<FinTop> out;
  const int offdiag = n * (n - 1);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("t" + std::to_string(i));
  for (uint64_t m = 0; m < (1ull << offdiag); ++m) {
    BoolMatrix leq(n, n, 0);
    for (int i = 0; i < n; ++i) leq(i, i) = 1;
    for (int k = 0; k < offdiag; ++k)
      if ((m >> k) & 1ull) leq(pairs[k].first, pairs[k].second) = 1;
    bool trans = true;
    for (int a = 0; a < n && trans; ++a)
      for (int b = 0; b < n && trans; ++b)
        for (int c = 0; c < n; ++c)
          if (leq(a, b) && leq(b, c) && !leq(a, c)) {
            trans = false;
            break;
          }
    if (!trans) continue;
    out.push_back(alexandroff(names, leq));
  }
  return out;
}

}  // namespace qcat
