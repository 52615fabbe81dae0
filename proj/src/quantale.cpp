#include "qcat/quantale.hpp"

#include <algorithm>
#include <set>

namespace qcat {

namespace {

std::string tuple2(const QuantaleTable& t, Elem a, Elem b) {
  return "(" + t.elements[a] + ", " + t.elements[b] + ")";
}

std::string tuple3(const QuantaleTable& t, Elem a, Elem b, Elem c) {
  return "(" + t.elements[a] + ", " + t.elements[b] + ", " + t.elements[c] + ")";
}

void check_structure(const QuantaleTable& t) {
  const int n = static_cast<int>(t.elements.size());
  if (n == 0) throw structural_error("quantale: empty carrier");
  std::set<std::string> seen(t.elements.begin(), t.elements.end());
  if (static_cast<int>(seen.size()) != n)
    throw structural_error("quantale: duplicate element identifiers");
  if (t.leq.rows() != n || t.leq.cols() != n)
    throw structural_error("quantale: leq table is not " + std::to_string(n) + "x" +
                           std::to_string(n));
  if (t.tensor.rows() != n || t.tensor.cols() != n)
    throw structural_error("quantale: tensor table is not square over the carrier");
  for (Elem v : t.tensor.flat())
    if (v < 0 || v >= n) throw structural_error("quantale: tensor entry out of range");
  if (t.unit < 0 || t.unit >= n) throw structural_error("quantale: unit out of range");
  if (!t.display.empty() && static_cast<int>(t.display.size()) != n)
    throw structural_error("quantale: display annotation length mismatch");
}

// Least upper bound of {a,b} if it exists.
std::optional<Elem> lub(const QuantaleTable& t, Elem a, Elem b) {
  const int n = static_cast<int>(t.elements.size());
  std::optional<Elem> best;
  for (Elem c = 0; c < n; ++c) {
    if (!t.leq(a, c) || !t.leq(b, c)) continue;
    if (!best || t.leq(c, *best)) {
      // candidate must be below every other upper bound
      bool least = true;
      for (Elem d = 0; d < n; ++d)
        if (t.leq(a, d) && t.leq(b, d) && !t.leq(c, d)) {
          least = false;
          break;
        }
      if (least) best = c;
    }
  }
  return best;
}

std::optional<Elem> glb(const QuantaleTable& t, Elem a, Elem b) {
  const int n = static_cast<int>(t.elements.size());
  for (Elem c = 0; c < n; ++c) {
    if (!t.leq(c, a) || !t.leq(c, b)) continue;
    bool greatest = true;
    for (Elem d = 0; d < n; ++d)
      if (t.leq(d, a) && t.leq(d, b) && !t.leq(d, c)) {
        greatest = false;
        break;
      }
    if (greatest) return c;
  }
  return std::nullopt;
}

}  // namespace

ValidationReport validate_quantale(const QuantaleTable& t) {
  check_structure(t);
  ValidationReport rep;
  rep.subject = "quantale";
  const int n = static_cast<int>(t.elements.size());

  // partial order
  {
    bool ok = true;
    std::string w;
    for (Elem a = 0; a < n && ok; ++a)
      if (!t.leq(a, a)) {
        ok = false;
        w = "not reflexive at " + t.elements[a];
      }
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        if (a != b && t.leq(a, b) && t.leq(b, a)) {
          ok = false;
          w = "not antisymmetric at " + tuple2(t, a, b);
        }
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        for (Elem c = 0; c < n && ok; ++c)
          if (t.leq(a, b) && t.leq(b, c) && !t.leq(a, c)) {
            ok = false;
            w = "not transitive at " + tuple3(t, a, b, c);
          }
    rep.add("partial_order", ok, w);
  }

  // lattice: every pair has a join and a meet (finite => complete)
  {
    bool ok = true;
    std::string w;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b) {
        if (!lub(t, a, b)) {
          ok = false;
          w = "no join for " + tuple2(t, a, b);
        } else if (!glb(t, a, b)) {
          ok = false;
          w = "no meet for " + tuple2(t, a, b);
        }
      }
    rep.add("lattice", ok, w);
    if (!rep.ok()) {
      // remaining axioms need the lattice structure
      rep.add("tensor_commutative", false, "skipped: carrier is not a lattice");
      rep.add("tensor_associative", false, "skipped");
      rep.add("unit_neutral", false, "skipped");
      rep.add("unit_is_top", false, "skipped");
      rep.add("bottom_distinct_from_unit", false, "skipped");
      rep.add("tensor_preserves_joins", false, "skipped");
      rep.add("completely_distributive", false, "skipped");
      return rep;
    }
  }

  // derived join table + bottom for the remaining checks
  ElemMatrix join(n, n), meet(n, n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      join(a, b) = *lub(t, a, b);
      meet(a, b) = *glb(t, a, b);
    }
  Elem bottom = 0;
  for (Elem a = 1; a < n; ++a) bottom = meet(bottom, a);

  {
    bool ok = true;
    std::string w;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        if (t.tensor(a, b) != t.tensor(b, a)) {
          ok = false;
          w = tuple2(t, a, b);
        }
    rep.add("tensor_commutative", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        for (Elem c = 0; c < n && ok; ++c)
          if (t.tensor(t.tensor(a, b), c) != t.tensor(a, t.tensor(b, c))) {
            ok = false;
            w = tuple3(t, a, b, c);
            break;
          }
    rep.add("tensor_associative", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (Elem a = 0; a < n && ok; ++a)
      if (t.tensor(t.unit, a) != a) {
        ok = false;
        w = t.elements[a];
      }
    rep.add("unit_neutral", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (Elem a = 0; a < n && ok; ++a)
      if (!t.leq(a, t.unit)) {
        ok = false;
        w = t.elements[a] + " not below unit";
      }
    rep.add("unit_is_top", ok, w);
  }
  rep.add("bottom_distinct_from_unit", bottom != t.unit,
          bottom == t.unit ? "carrier collapses to a point" : "");

  // tensor preserves binary and empty joins in each argument
  {
    bool ok = true;
    std::string w;
    for (Elem a = 0; a < n && ok; ++a) {
      if (t.tensor(a, bottom) != bottom) {
        ok = false;
        w = t.elements[a] + " (x) bottom != bottom";
      }
      for (Elem b = 0; b < n && ok; ++b)
        for (Elem c = 0; c < n && ok; ++c)
          if (t.tensor(a, join(b, c)) != join(t.tensor(a, b), t.tensor(a, c))) {
            ok = false;
            w = tuple3(t, a, b, c);
          }
    }
    rep.add("tensor_preserves_joins", ok, w);
  }

  // complete distributivity: a = join of everything totally below a
  {
    bool ok = true;
    std::string w;
    if (n > 25) {
      ok = false;
      w = "carrier too large for the subset scan";
    } else {
      std::vector<uint32_t> above(n, 0);  // above[b] = mask of s with b <= s
      for (Elem b = 0; b < n; ++b)
        for (Elem s = 0; s < n; ++s)
          if (t.leq(b, s)) above[b] |= (1u << s);
      const uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
      // join_of[mask] by peeling the lowest bit
      std::vector<Elem> join_of(full + 1, bottom);
      for (uint32_t m = 1; m <= full; ++m) {
        uint32_t low = m & (~m + 1);
        int i = __builtin_ctz(low);
        join_of[m] = join(join_of[m ^ low], i);
      }
      for (Elem a = 0; a < n && ok; ++a) {
        Elem rebuilt = bottom;
        for (Elem b = 0; b < n; ++b) {
          bool below = true;
          for (uint32_t m = 0; m <= full; ++m)
            if (t.leq(a, join_of[m]) && (above[b] & m) == 0) {
              below = false;
              break;
            }
          if (below) rebuilt = join(rebuilt, b);
        }
        if (rebuilt != a) {
          ok = false;
          w = t.elements[a] + " rebuilds to " + t.elements[rebuilt];
        }
      }
    }
    rep.add("completely_distributive", ok, w);
  }

  return rep;
}

Quantale Quantale::from_table(QuantaleTable table) {
  ValidationReport rep = validate_quantale(table);
  if (!rep.ok()) {
    for (const auto& c : rep.checks)
      if (!c.passed)
        throw std::invalid_argument("quantale axiom failed: " + c.name +
                                    (c.witness.empty() ? "" : " at " + c.witness));
  }
  Quantale q;
  q.table_ = std::move(table);
  const int n = q.size();
  const QuantaleTable& t = q.table_;

  q.join_ = ElemMatrix(n, n);
  q.meet_ = ElemMatrix(n, n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      q.join_(a, b) = *lub(t, a, b);
      q.meet_(a, b) = *glb(t, a, b);
    }
  q.bottom_ = 0;
  for (Elem a = 1; a < n; ++a) q.bottom_ = q.meet_(q.bottom_, a);

  // hom(a,b) = join of all c with a (x) c <= b; the adjunction then holds
  // because tensor preserves joins.
  q.hom_ = ElemMatrix(n, n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem acc = q.bottom_;
      for (Elem c = 0; c < n; ++c)
        if (t.leq(t.tensor(a, c), b)) acc = q.join_(acc, c);
      q.hom_(a, b) = acc;
    }

  // totally-below and the directed variant, by subset scan
  if (n > 25) throw resource_error("quantale carrier above the subset-scan cap");
  const uint32_t full = (1u << n) - 1;
  std::vector<Elem> join_of(full + 1, q.bottom_);
  for (uint32_t m = 1; m <= full; ++m) {
    uint32_t low = m & (~m + 1);
    join_of[m] = q.join_(join_of[m ^ low], __builtin_ctz(low));
  }
  std::vector<uint32_t> above(n, 0);
  for (Elem b = 0; b < n; ++b)
    for (Elem s = 0; s < n; ++s)
      if (t.leq(b, s)) above[b] |= (1u << s);

  std::vector<uint8_t> directed(full + 1, 0);
  for (uint32_t m = 1; m <= full; ++m) {
    bool dir = true;
    for (int i = 0; i < n && dir; ++i) {
      if (!(m & (1u << i))) continue;
      for (int j = i; j < n && dir; ++j) {
        if (!(m & (1u << j))) continue;
        uint32_t ub = above[i] & above[j] & m;
        if (ub == 0) dir = false;
      }
    }
    directed[m] = dir ? 1 : 0;
  }

  q.tot_below_ = BoolMatrix(n, n, 1);
  q.way_below_ = BoolMatrix(n, n, 1);
  for (Elem a = 0; a < n; ++a)
    for (uint32_t m = 0; m <= full; ++m) {
      if (!t.leq(a, join_of[m])) continue;
      for (Elem b = 0; b < n; ++b)
        if ((above[b] & m) == 0) {
          q.tot_below_(b, a) = 0;
          // the directed flavour only quantifies over nonempty directed sets
          if (m != 0 && directed[m]) q.way_below_(b, a) = 0;
        }
    }

  return q;
}

Elem Quantale::join_all(const std::vector<Elem>& xs) const {
  Elem acc = bottom_;
  for (Elem x : xs) acc = join_(acc, x);
  return acc;
}

Elem Quantale::meet_all(const std::vector<Elem>& xs) const {
  Elem acc = table_.unit;
  for (Elem x : xs) acc = meet_(acc, x);
  return acc;
}

QuantaleTable builtin_two() {
  QuantaleTable t;
  t.elements = {"bot", "top"};
  t.leq = BoolMatrix(2, 2, 0);
  t.leq(0, 0) = t.leq(1, 1) = t.leq(0, 1) = 1;
  t.tensor = ElemMatrix(2, 2, 0);
  t.tensor(1, 1) = 1;  // meet
  t.unit = 1;
  return t;
}

QuantaleTable builtin_lukasiewicz(int n) {
  if (n < 1) throw structural_error("lukasiewicz: n must be >= 1");
  QuantaleTable t;
  const int size = n + 1;
  t.elements.reserve(size);
  t.display.reserve(size);
  for (int i = 0; i <= n; ++i) {
    t.elements.push_back("q" + std::to_string(i));
    // grid value i/n of the unit interval
    t.display.push_back(std::to_string(i) + "/" + std::to_string(n));
  }
  t.leq = BoolMatrix(size, size, 0);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      if (i >= j) t.leq(i, j) = 1;  // order opposite to the numeric one
  t.tensor = ElemMatrix(size, size, 0);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) t.tensor(i, j) = std::min(i + j, n);
  t.unit = 0;
  return t;
}

QuantaleTable builtin_chain_plus(int n) {
  QuantaleTable t = builtin_lukasiewicz(n);
  for (int i = 0; i <= n; ++i) t.display[i] = (i == n) ? "inf" : std::to_string(i);
  return t;
}

QuantaleTable builtin_frame_of_downsets(const BoolMatrix& leq) {
  const int n = leq.rows();
  if (n != leq.cols()) throw structural_error("frame_of_downsets: leq not square");
  if (n > 20) throw resource_error("frame_of_downsets: poset too large");
  // collect downsets as bitmasks, in mask order
  std::vector<uint32_t> downsets;
  const uint32_t full = (n == 0) ? 0 : ((1u << n) - 1);
  for (uint32_t m = 0; m <= full; ++m) {
    bool down = true;
    for (int i = 0; i < n && down; ++i) {
      if (!(m & (1u << i))) continue;
      for (int j = 0; j < n; ++j)
        if (leq(j, i) && !(m & (1u << j))) {
          down = false;
          break;
        }
    }
    if (down) downsets.push_back(m);
    if (n == 0) break;
  }
  QuantaleTable t;
  const int k = static_cast<int>(downsets.size());
  for (uint32_t m : downsets) {
    std::string name = "{";
    for (int i = 0; i < n; ++i)
      if (m & (1u << i)) name += (name.size() > 1 ? ",p" : "p") + std::to_string(i);
    name += "}";
    t.elements.push_back(name);
  }
  t.leq = BoolMatrix(k, k, 0);
  t.tensor = ElemMatrix(k, k, 0);
  auto index_of = [&](uint32_t m) {
    for (int i = 0; i < k; ++i)
      if (downsets[i] == m) return i;
    throw internal_error("frame_of_downsets: intersection escaped the frame");
  };
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      t.leq(i, j) = (downsets[i] & ~downsets[j]) == 0;
      t.tensor(i, j) = index_of(downsets[i] & downsets[j]);
    }
  t.unit = index_of(full);
  return t;
}

QuantaleTable builtin_quantale(const std::string& name, std::optional<int> n) {
  if (name == "two") return builtin_two();
  if (name == "lukasiewicz") {
    if (!n) throw structural_error("lukasiewicz needs a chain length n");
    return builtin_lukasiewicz(*n);
  }
  if (name == "chain_plus") {
    if (!n) throw structural_error("chain_plus needs a chain length n");
    return builtin_chain_plus(*n);
  }
  throw structural_error("unknown builtin quantale: " + name);
}

QuantalePtr make_quantale(QuantaleTable table) {
  return std::make_shared<const Quantale>(Quantale::from_table(std::move(table)));
}

}  // namespace qcat
