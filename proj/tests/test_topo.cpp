#include "qcat/topo.hpp"

#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "qcat/continuity.hpp"

using namespace qcat;

namespace {

QuantalePtr two() {
  static QuantalePtr q = make_quantale(builtin_two());
  return q;
}

BoolMatrix chain_leq(int n) {
  BoolMatrix m(n, n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = 1;
  return m;
}

BoolMatrix antichain_leq(int n) {
  BoolMatrix m(n, n, 0);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

BoolMatrix n_poset_leq() {
  BoolMatrix m(4, 4, 0);
  for (int i = 0; i < 4; ++i) m(i, i) = 1;
  m(0, 1) = m(1, 3) = m(0, 3) = m(2, 3) = 1;
  return m;
}

BoolMatrix m3_leq() {
  BoolMatrix m(5, 5, 0);
  for (int i = 0; i < 5; ++i) m(i, i) = 1;
  for (int i = 1; i <= 3; ++i) {
    m(0, i) = 1;
    m(i, 4) = 1;
  }
  m(0, 4) = 1;
  return m;
}

std::vector<std::string> pnames(int n) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back("p" + std::to_string(i));
  return v;
}

FinTop sierpinski() { return alexandroff(pnames(2), chain_leq(2)); }
FinTop discrete2() { return alexandroff(pnames(2), antichain_leq(2)); }
FinTop indiscrete2() {
  BoolMatrix all(2, 2, 1);
  return alexandroff(pnames(2), all);
}
FinTop point_space() { return alexandroff(pnames(1), chain_leq(1)); }

// brute-force filter families: upward closed, intersection closed,
// containing the full set
std::vector<uint64_t> filter_families_oracle(const FinTop& s) {
  const int k = static_cast<int>(s.opens.size());
  std::vector<uint64_t> families;
  for (uint64_t fam = 0; fam < (1ull << k); ++fam) {
    auto has = [&](int i) { return (fam >> i) & 1ull; };
    int full_idx = *s.open_index(s.full_mask());
    if (!has(full_idx)) continue;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      if (!has(i)) continue;
      for (int j = 0; j < k && ok; ++j) {
        if ((s.opens[i] & ~s.opens[j]) == 0 && !has(j)) ok = false;  // upward
        if (has(j)) {
          auto cap = s.open_index(s.opens[i] & s.opens[j]);
          if (!cap || !has(*cap)) ok = false;
        }
      }
    }
    if (ok) families.push_back(fam);
  }
  return families;
}

}  // namespace

TEST_CASE("the 2-chain becomes the two-point space with the top point closed") {
  FinTop s = sierpinski();
  CHECK(validate_fintop(s).ok());
  REQUIRE(s.opens.size() == 3);
  CHECK(s.opens[0] == 0);     // empty
  CHECK(s.opens[1] == 0b01);  // the lower point alone is open
  CHECK(s.opens[2] == 0b11);
}

TEST_CASE("specialization round trips") {
  // poset -> space -> order
  for (const BoolMatrix& leq : {chain_leq(3), antichain_leq(2), n_poset_leq()}) {
    FinTop s = alexandroff(pnames(leq.rows()), leq);
    CHECK(specialization(s) == leq);
  }
  // space -> order -> space, for every topology on up to three points
  for (int n = 1; n <= 3; ++n)
    for (const FinTop& s : all_topologies(n)) {
      FinTop back = alexandroff(s.points, specialization(s));
      CHECK(back.opens == s.opens);
    }
}

TEST_CASE("filters are the up-sets of their generators") {
  FinTop s = sierpinski();
  auto filters = enumerate_filters(s);
  CHECK(filters.size() == 3);

  CHECK(enumerate_filters(point_space()).size() == 2);
  CHECK(enumerate_filters(discrete2()).size() == 4);
  CHECK(enumerate_filters(indiscrete2()).size() == 2);

  // brute-force family oracle agrees on several small spaces
  for (const FinTop& sp : {sierpinski(), discrete2(), indiscrete2(), point_space()}) {
    auto families = filter_families_oracle(sp);
    auto listed = enumerate_filters(sp);
    std::set<uint64_t> a(families.begin(), families.end());
    std::set<uint64_t> b;
    for (const OpenFilter& f : listed) b.insert(f.member_opens);
    CHECK(a == b);
  }
}

TEST_CASE("filter order reverses inclusion and properness is the empty-set test") {
  FinTop s = sierpinski();
  auto filters = enumerate_filters(s);
  // generator order: up of empty (improper) <= up of {p0} <= up of X
  OpenFilter improper = filters[0], mid = filters[1], trivial = filters[2];
  CHECK(filter_leq(improper, mid));
  CHECK(filter_leq(mid, trivial));
  CHECK_FALSE(filter_leq(trivial, mid));
  CHECK_FALSE(filter_proper(s, improper));
  CHECK(filter_proper(s, mid));
  CHECK(filter_proper(s, trivial));
}

TEST_CASE("neighborhood filters and the Yoneda order embedding") {
  FinTop s = sierpinski();
  OpenFilter n_open = neighborhood_filter(s, 0);
  OpenFilter n_closed = neighborhood_filter(s, 1);
  CHECK(n_open.member_opens == 0b110);   // {p0} and X
  CHECK(n_closed.member_opens == 0b100);  // X only

  FinTop d = discrete2();
  CHECK(neighborhood_filter(d, 0).contains(*d.open_index(0b01)));

  FinTop i = indiscrete2();
  CHECK(neighborhood_filter(i, 0).member_opens == neighborhood_filter(i, 1).member_opens);

  // fully faithful: filter order between neighborhood filters is the
  // specialization order
  for (const FinTop& sp : {sierpinski(), discrete2(), indiscrete2()}) {
    BoolMatrix leq = specialization(sp);
    for (int x = 0; x < sp.size(); ++x)
      for (int y = 0; y < sp.size(); ++y)
        CHECK(static_cast<bool>(leq(x, y)) ==
              filter_leq(neighborhood_filter(sp, x), neighborhood_filter(sp, y)));
  }
}

TEST_CASE("filter space of the two-point chain space is the three-chain") {
  FinTop f0 = f0_space(sierpinski());
  CHECK(f0.size() == 3);
  REQUIRE(f0.opens.size() == 4);
  BoolMatrix leq = specialization(f0);
  // the improper filter is the bottom, the trivial filter the top
  int chain_pairs = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (leq(a, b)) ++chain_pairs;
  CHECK(chain_pairs == 6);

  // basic opens generate: {F : A in F} is open for each A
  FinTop s = sierpinski();
  auto filters = enumerate_filters(s);
  for (std::size_t a = 0; a < s.opens.size(); ++a) {
    uint64_t basic = 0;
    for (std::size_t i = 0; i < filters.size(); ++i)
      if (filters[i].contains(static_cast<int>(a))) basic |= (1ull << i);
    CHECK(f0.open_index(basic).has_value());
  }
}

TEST_CASE("smallest convergence points") {
  FinTop s = sierpinski();
  auto filters = enumerate_filters(s);  // improper, up{p0}, up{X}
  // the trivial filter converges only to the closed point
  FilterSup t = sup_filter(s, filters[2]);
  REQUIRE(t.canonical.has_value());
  CHECK(*t.canonical == 1);
  // the improper filter converges everywhere; the bottom wins
  FilterSup imp = sup_filter(s, filters[0]);
  REQUIRE(imp.canonical.has_value());
  CHECK(*imp.canonical == 0);
  // neighborhood filters recover their points
  for (const FinTop& sp : {sierpinski(), discrete2(), indiscrete2()}) {
    for (int x = 0; x < sp.size(); ++x) {
      FilterSup sup = sup_filter(sp, neighborhood_filter(sp, x));
      bool among = false;
      for (int w : sup.witnesses)
        if (w == x) among = true;
      CHECK(among);
    }
  }
  // multiple equivalent witnesses in a non-separated space
  FinTop i = indiscrete2();
  FilterSup both = sup_filter(i, enumerate_filters(i)[0]);
  CHECK(both.witnesses.size() == 2);
}

TEST_CASE("cocompleteness of spaces") {
  CHECK(is_cocomplete_top(sierpinski(), FilterClass::All).ok());
  CocompleteTopReport d = is_cocomplete_top(discrete2(), FilterClass::All);
  CHECK_FALSE(d.ok());
  CHECK_FALSE(d.pointwise);  // the trivial filter has no convergence point

  // orders with all nonempty joins give proper-cocomplete spaces
  CHECK(is_cocomplete_top(alexandroff(pnames(4), n_poset_leq()), FilterClass::Proper).ok());
  CHECK(is_cocomplete_top(alexandroff(pnames(5), m3_leq()), FilterClass::All).ok());
  // while the discrete space is not even proper-cocomplete
  CHECK_FALSE(is_cocomplete_top(discrete2(), FilterClass::Proper).ok());
}

TEST_CASE("way-below filters on the two-point chain space") {
  FinTop s = sierpinski();
  OpenFilter at_open = waybelow_filter(s, 0, FilterClass::All);
  OpenFilter at_closed = waybelow_filter(s, 1, FilterClass::All);
  CHECK(at_open.member_opens == 0b111);    // improper
  CHECK(at_closed.member_opens == 0b100);  // the trivial filter
  OpenFilter proper_open = waybelow_filter(s, 0, FilterClass::Proper);
  CHECK(proper_open.member_opens == 0b110);  // neighborhood filter of the open point

  FinTop pt = point_space();
  CHECK(waybelow_filter(pt, 0, FilterClass::All).member_opens == 0b11);  // improper
}

TEST_CASE("continuity of spaces through the local way-below") {
  CHECK(is_continuous_top(sierpinski(), FilterClass::All).ok());
  CHECK(is_continuous_top(point_space(), FilterClass::All).ok());

  // filter spaces of small spaces are cocomplete and continuous
  for (const FinTop& sp : {sierpinski(), discrete2(), indiscrete2(), point_space()}) {
    FinTop f0 = f0_space(sp);
    CHECK(is_cocomplete_top(f0, FilterClass::All).ok());
    CHECK(is_continuous_top(f0, FilterClass::All).ok());
  }
}

TEST_CASE("the alexandroff pipeline matches the enriched pipeline") {
  // with every filter against every presheaf, the two sides compute the
  // same approximation data
  for (const BoolMatrix& leq : {chain_leq(2), chain_leq(3), antichain_leq(2),
                                antichain_leq(3), n_poset_leq(), m3_leq()}) {
    FinTop space = alexandroff(pnames(leq.rows()), leq);
    VCategory cat = poset_category(two(), leq);
    CHECK(is_continuous_top(space, FilterClass::All).ok() ==
          is_j_continuous(cat, IdealClass::all()).continuous);
    // proper filters correspond to presheaves with nonempty support
    CHECK(is_continuous_top(space, FilterClass::Proper).ok() ==
          is_j_continuous(cat, IdealClass::custom("nonempty")).continuous);
  }
}

TEST_CASE("proper filters are not order ideals: the two pipelines split") {
  // the smallest split: a < b < t with c < t; the non-directed lower set
  // {a,c} is a proper filter generator whose join jumps over b
  BoolMatrix leq = n_poset_leq();
  FinTop space = alexandroff(pnames(4), leq);
  VCategory cat = poset_category(two(), leq);
  CHECK(is_j_continuous(cat, IdealClass::order_ideal()).continuous);
  ContinuousTopReport rep = is_continuous_top(space, FilterClass::Proper);
  CHECK_FALSE(rep.ok());
  REQUIRE(rep.failing_point.has_value());
  CHECK(*rep.failing_point == 1);  // the jumped-over element
}

TEST_CASE("way-below assignment is monotone on every small space") {
  for (int n = 1; n <= 3; ++n)
    for (const FinTop& s : all_topologies(n)) {
      for (FilterClass cls : {FilterClass::All, FilterClass::Proper}) {
        LocalWayBelowReport rep = local_waybelow_consistency(s, cls);
        CHECK(rep.monotone);
      }
    }
}

TEST_CASE("subbasis spaces of complete orders") {
  for (const BoolMatrix& leq : {chain_leq(3), m3_leq()}) {
    FinTop s = subbasis_space(pnames(leq.rows()), leq);
    CHECK(validate_fintop(s).ok());
    // the induced order is the one we started with
    CHECK(specialization(s) == leq);
    // the whole space is the only neighborhood of the top element
    int top = -1;
    for (int i = 0; i < leq.rows(); ++i) {
      bool is_top = true;
      for (int j = 0; j < leq.rows(); ++j)
        if (!leq(j, i)) is_top = false;
      if (is_top) top = i;
    }
    REQUIRE(top >= 0);
    for (uint64_t a : s.opens)
      if ((a >> top) & 1ull) CHECK(a == s.full_mask());
    // every filter of opens has a smallest convergence point
    for (const OpenFilter& f : enumerate_filters(s))
      CHECK(sup_filter(s, f).canonical.has_value());
  }
}

TEST_CASE("space validation catches broken families") {
  FinTop s;
  s.points = pnames(2);
  s.opens = {0b01, 0b11};  // missing the empty set
  CHECK_FALSE(validate_fintop(s).ok());

  FinTop u;
  u.points = pnames(3);
  u.opens = {0, 0b001, 0b010, 0b111};  // union {p0,p1} missing
  ValidationReport rep = validate_fintop(u);
  CHECK_FALSE(rep.find("closed_under_union_and_intersection")->passed);

  FinTop bad;
  bad.points = pnames(1);
  bad.opens = {0, 0b11};
  CHECK_THROWS_AS(validate_fintop(bad), structural_error);
}
