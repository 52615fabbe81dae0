#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcat/report.hpp"
#include "qcat/util.hpp"

namespace qcat {

// Finite topological space; point sets are bitmasks over point indices.
struct FinTop {
  std::vector<std::string> points;
  std::vector<uint64_t> opens;  // sorted, contains 0 and the full mask

  int size() const { return static_cast<int>(points.size()); }
  uint64_t full_mask() const {
    return points.size() >= 64 ? ~0ull : ((1ull << points.size()) - 1);
  }
  std::optional<int> open_index(uint64_t mask) const;
};

ValidationReport validate_fintop(const FinTop& s);

// A filter on the open-set lattice: upward closed, closed under binary
// intersection, containing the full set.  Improper filters (containing the
// empty set) are legal values.  Stored as a bitmask over open indices.
struct OpenFilter {
  uint64_t member_opens = 0;

  bool contains(int open_idx) const { return (member_opens >> open_idx) & 1ull; }
};

// The order on filters reverses inclusion: finer filters sit lower.
bool filter_leq(const OpenFilter& a, const OpenFilter& b);
bool filter_proper(const FinTop& s, const OpenFilter& f);

// All filters, in the order of their generating opens.  On a finite
// intersection-closed lattice every filter is the up-set of its own
// intersection, so filters correspond to opens.
std::vector<OpenFilter> enumerate_filters(const FinTop& s, const Limits& limits = {});

// The filter space: one point per filter, basic opens {F : A in F}.
FinTop f0_space(const FinTop& s, const Limits& limits = {});

// Neighborhood filter of a point.
OpenFilter neighborhood_filter(const FinTop& s, int x);

// x below y when y lies in the closure of x; opens are down-sets of this
// order and finite spaces are recovered from it exactly.
BoolMatrix specialization(const FinTop& s);
FinTop alexandroff(const std::vector<std::string>& names, const BoolMatrix& leq);

// Convergence points of a filter are the points whose neighborhood filter
// it refines; witnesses are the convergence points below every other one.
std::vector<int> convergence_points(const FinTop& s, const OpenFilter& f);
struct FilterSup {
  std::vector<int> witnesses;
  std::optional<int> canonical;
};
FilterSup sup_filter(const FinTop& s, const OpenFilter& f);

// Filter classes of the final examples: every filter, or the proper ones.
enum class FilterClass { All, Proper };

bool filter_in_class(const FinTop& s, const OpenFilter& f, FilterClass cls);

// Every class filter has a smallest convergence point and the induced
// assignment is continuous from the filter space; pointwise suprema alone
// do not suffice.
struct CocompleteTopReport {
  bool pointwise = true;        // all class filters have witnesses
  bool sup_continuous = true;   // the witness assignment is continuous
  std::optional<int> failing_filter;  // index into enumerate_filters
  bool ok() const { return pointwise && sup_continuous; }
};
CocompleteTopReport is_cocomplete_top(const FinTop& s, FilterClass cls,
                                      const Limits& limits = {});

// Filter generated by every class filter whose supremum dominates x.
OpenFilter waybelow_filter(const FinTop& s, int x, FilterClass cls,
                           const Limits& limits = {});

// Local characterization of continuity: the way-below assignment is
// continuous into the filter space and every point is the smallest
// convergence point of its own way-below filter (for the proper class the
// filter must also be proper).
struct ContinuousTopReport {
  bool points_recovered = true;   // x is a smallest convergence point of its filter
  bool assignment_continuous = true;
  bool filters_in_class = true;   // proper when the class demands it
  std::optional<int> failing_point;
  bool ok() const { return points_recovered && assignment_continuous && filters_in_class; }
};
ContinuousTopReport is_continuous_top(const FinTop& s, FilterClass cls,
                                      const Limits& limits = {});

// The way-below assignment is always monotone for the specialization
// order; its topological continuity is reported but not required.
struct LocalWayBelowReport {
  bool monotone = true;
  bool topologically_continuous = true;
};
LocalWayBelowReport local_waybelow_consistency(const FinTop& s, FilterClass cls,
                                               const Limits& limits = {});

// Space on a complete ordered carrier whose opens are generated by the
// down-closed sets meeting every subset whose meet they contain.  Every
// filter of opens has a smallest convergence point here.
FinTop subbasis_space(const std::vector<std::string>& names, const BoolMatrix& lattice_leq);

// All finite topologies on n labeled points, via their specialization
// preorders.
std::vector<FinTop> all_topologies(int n);

}  // namespace qcat
