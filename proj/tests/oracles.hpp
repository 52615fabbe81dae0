// Independent brute-force oracles used to freeze expected values.  These
// deliberately avoid the library's derived tables and recompute everything
// from raw order/tensor data.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "qcat/quantale.hpp"
#include "qcat/util.hpp"

namespace oracle {

using qcat::BoolMatrix;
using qcat::Elem;
using qcat::QuantaleTable;

// Least upper bound of a subset of a finite poset, by scanning candidates.
inline std::optional<int> poset_join(const BoolMatrix& leq, const std::vector<int>& xs) {
  const int n = leq.rows();
  std::optional<int> best;
  for (int c = 0; c < n; ++c) {
    bool upper = true;
    for (int x : xs)
      if (!leq(x, c)) upper = false;
    if (!upper) continue;
    bool least = true;
    for (int d = 0; d < n && least; ++d) {
      bool upper_d = true;
      for (int x : xs)
        if (!leq(x, d)) upper_d = false;
      if (upper_d && !leq(c, d)) least = false;
    }
    if (least) return c;
  }
  return best;
}

inline std::vector<int> mask_to_set(uint32_t m) {
  std::vector<int> s;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) s.push_back(i);
  return s;
}

// b totally below a: every subset (including the empty one) whose join
// dominates a contains an element above b.
inline bool totally_below(const BoolMatrix& leq, Elem b, Elem a) {
  const int n = leq.rows();
  for (uint32_t m = 0; m < (1u << n); ++m) {
    auto s = mask_to_set(m);
    auto j = poset_join(leq, s);
    if (!j || !leq(a, *j)) continue;
    bool witness = false;
    for (int x : s)
      if (leq(b, x)) witness = true;
    if (!witness) return false;
  }
  return true;
}

inline bool subset_directed(const BoolMatrix& leq, const std::vector<int>& s) {
  if (s.empty()) return false;
  for (int a : s)
    for (int b : s) {
      bool bounded = false;
      for (int c : s)
        if (leq(a, c) && leq(b, c)) bounded = true;
      if (!bounded) return false;
    }
  return true;
}

// Classical way-below via directed subsets with existing joins.
inline bool way_below_directed(const BoolMatrix& leq, Elem b, Elem a) {
  const int n = leq.rows();
  for (uint32_t m = 1; m < (1u << n); ++m) {
    auto s = mask_to_set(m);
    if (!subset_directed(leq, s)) continue;
    auto j = poset_join(leq, s);
    if (!j || !leq(a, *j)) continue;
    bool witness = false;
    for (int x : s)
      if (leq(b, x)) witness = true;
    if (!witness) return false;
  }
  return true;
}

// Largest c with a (x) c <= b, by scanning all candidates and insisting the
// result dominates every other solution.
inline std::optional<Elem> hom_scan(const QuantaleTable& t, Elem a, Elem b) {
  const int n = static_cast<int>(t.elements.size());
  for (Elem c = 0; c < n; ++c) {
    if (!t.leq(t.tensor(a, c), b)) continue;
    bool greatest = true;
    for (Elem d = 0; d < n; ++d)
      if (t.leq(t.tensor(a, d), b) && !t.leq(d, c)) greatest = false;
    if (greatest) return c;
  }
  return std::nullopt;
}

// Boolean relation composition: (s . r)(x, z) = exists y. r(x,y) and s(y,z).
inline BoolMatrix bool_compose(const BoolMatrix& s, const BoolMatrix& r) {
  BoolMatrix out(r.rows(), s.cols(), 0);
  for (int x = 0; x < r.rows(); ++x)
    for (int z = 0; z < s.cols(); ++z)
      for (int y = 0; y < r.cols(); ++y)
        if (r(x, y) && s(y, z)) out(x, z) = 1;
  return out;
}

// Lower subsets of a poset as bitmasks, ascending.
inline std::vector<uint32_t> lower_sets(const BoolMatrix& leq) {
  const int n = leq.rows();
  std::vector<uint32_t> out;
  for (uint32_t m = 0; m < (1u << n); ++m) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!(m & (1u << i))) continue;
      for (int j = 0; j < n; ++j)
        if (leq(j, i) && !(m & (1u << j))) ok = false;
    }
    if (ok) out.push_back(m);
  }
  return out;
}

// Complete-join inaccessibility of an upper set u: every subset whose join
// lands in u already meets u.  With directed_only, the classical Scott
// condition.
inline bool join_inaccessible(const BoolMatrix& leq, uint32_t upper, bool directed_only) {
  const int n = leq.rows();
  for (uint32_t m = 0; m < (1u << n); ++m) {
    auto s = mask_to_set(m);
    if (directed_only && !subset_directed(leq, s)) continue;
    auto j = poset_join(leq, s);
    if (!j || !(upper & (1u << *j))) continue;
    if ((m & upper) == 0) return false;
  }
  return true;
}

// Canonical form of a labeled poset: the lexicographically least adjacency
// flattening over all permutations.
inline std::vector<uint8_t> poset_canonical(const BoolMatrix& leq) {
  const int n = leq.rows();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<uint8_t> best;
  do {
    std::vector<uint8_t> cur;
    cur.reserve(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cur.push_back(leq(perm[i], perm[j]));
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace oracle
