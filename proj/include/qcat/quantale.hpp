#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcat/report.hpp"
#include "qcat/util.hpp"

namespace qcat {

// Raw presentation of a finite quantale: carrier, order, tensor, unit.
struct QuantaleTable {
  std::vector<std::string> elements;
  BoolMatrix leq;      // leq(a,b) == a <= b
  ElemMatrix tensor;   // tensor(a,b) = index of a (x) b
  Elem unit = 0;
  // Optional display annotation for numeric chains ("0", "0.25", ...).
  std::vector<std::string> display;
};

// Validated completely distributive commutative unital quantale with the
// unit as top element.  Derived tables are computed once on construction.
class Quantale {
 public:
  // Throws structural_error on malformed tables and structural_error-free
  // axiom failures are reported by validate_quantale; from_table throws
  // std::invalid_argument carrying the first failed axiom.
  static Quantale from_table(QuantaleTable table);

  int size() const { return static_cast<int>(table_.elements.size()); }
  const std::vector<std::string>& element_names() const { return table_.elements; }
  const QuantaleTable& table() const { return table_; }

  bool leq(Elem a, Elem b) const { return table_.leq(a, b) != 0; }
  Elem tensor(Elem a, Elem b) const { return table_.tensor(a, b); }
  Elem unit() const { return table_.unit; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return table_.unit; }

  Elem join(Elem a, Elem b) const { return join_(a, b); }
  Elem meet(Elem a, Elem b) const { return meet_(a, b); }

  // Fold over a subset; empty subsets give bottom / top.
  Elem join_all(const std::vector<Elem>& xs) const;
  Elem meet_all(const std::vector<Elem>& xs) const;

  // Largest c with a (x) c <= b.
  Elem hom(Elem a, Elem b) const { return hom_(a, b); }

  // b is totally below a: every subset whose join dominates a contains an
  // element above b.  Computed by a full subset scan on construction.
  bool totally_below(Elem b, Elem a) const { return tot_below_(b, a) != 0; }

  // Directed flavour: only directed subsets are quantified over.
  bool way_below_directed(Elem b, Elem a) const { return way_below_(b, a) != 0; }

  std::string name_of(Elem a) const { return table_.elements[a]; }

  bool operator==(const Quantale& o) const {
    return table_.elements == o.table_.elements && table_.leq == o.table_.leq &&
           table_.tensor == o.table_.tensor && table_.unit == o.table_.unit;
  }

 private:
  Quantale() = default;

  QuantaleTable table_;
  Elem bottom_ = 0;
  ElemMatrix join_;
  ElemMatrix meet_;
  ElemMatrix hom_;
  BoolMatrix tot_below_;
  BoolMatrix way_below_;
};

// Shared handle; categories over the same quantale share one instance.
using QuantalePtr = std::shared_ptr<const Quantale>;

// Checks structure first (throws structural_error for ragged tables or
// out-of-range indices), then reports every axiom with a witness on failure.
ValidationReport validate_quantale(const QuantaleTable& table);

// Builtins.  two: Boolean quantale.  lukasiewicz(n)/chain_plus(n): the
// (n+1)-chain in the order opposite to the numeric one with truncated
// addition, unit 0.  frame_of_downsets: downsets of a finite poset ordered
// by inclusion with intersection as tensor.
QuantaleTable builtin_two();
QuantaleTable builtin_lukasiewicz(int n);
QuantaleTable builtin_chain_plus(int n);
QuantaleTable builtin_frame_of_downsets(const BoolMatrix& poset_leq);

// Resolves {"two"} / {"lukasiewicz", n} / {"chain_plus", n}.
QuantaleTable builtin_quantale(const std::string& name, std::optional<int> n = std::nullopt);

QuantalePtr make_quantale(QuantaleTable table);

}  // namespace qcat
