#include "qcat/laws.hpp"

#include <set>

#include "doctest.h"
#include "oracles.hpp"

using namespace qcat;

TEST_CASE("random posets are partial orders") {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    BoolMatrix leq = gen_poset(seed, 5);
    // reflexive, antisymmetric, transitive
    for (int i = 0; i < 5; ++i) CHECK(leq(i, i));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        if (i != j) CHECK_FALSE((leq(i, j) && leq(j, i)));
        for (int k = 0; k < 5; ++k)
          if (leq(i, j) && leq(j, k)) CHECK(leq(i, k));
      }
  }
  CHECK(gen_poset(3, 4) == gen_poset(3, 4));  // deterministic
}

TEST_CASE("poset enumeration matches the known counts up to isomorphism") {
  CHECK(enumerate_posets(1).size() == 1);
  CHECK(enumerate_posets(2).size() == 2);
  CHECK(enumerate_posets(3).size() == 5);
  CHECK(enumerate_posets(4).size() == 16);
  CHECK(enumerate_posets(5).size() == 63);
  // all distinct under the canonicalization oracle
  for (int n = 2; n <= 4; ++n) {
    std::set<std::vector<uint8_t>> canon;
    for (const BoolMatrix& p : enumerate_posets(n))
      CHECK(canon.insert(oracle::poset_canonical(p)).second);
  }
}

TEST_CASE("lattice enumeration contains the fixtures") {
  CHECK(enumerate_lattices(1).size() == 1);
  CHECK(enumerate_lattices(2).size() == 1);
  CHECK(enumerate_lattices(3).size() == 1);
  CHECK(enumerate_lattices(4).size() == 2);
  CHECK(enumerate_lattices(5).size() == 5);
  CHECK(enumerate_lattices(6).size() == 15);

  auto canon_in = [&](const BoolMatrix& m, int n) {
    auto c = oracle::poset_canonical(m);
    for (const BoolMatrix& l : enumerate_lattices(n))
      if (oracle::poset_canonical(l) == c) return true;
    return false;
  };
  CHECK(canon_in(m3_lattice(), 5));
  CHECK(canon_in(n5_lattice(), 5));
}

TEST_CASE("generated categories and distributors are valid") {
  auto luk = make_quantale(builtin_lukasiewicz(3));
  for (uint64_t seed = 0; seed < 20; ++seed) {
    VCategory x = gen_vcategory(seed, luk, 3);
    CHECK(validate_vcategory(x).ok());
    Distributor v = gen_endodist(seed + 100, x);
    CHECK(validate_distributor(v).ok());
  }
}

TEST_CASE("class-constrained generation lands in the class") {
  auto two = make_quantale(builtin_two());
  BoolMatrix leq = gen_poset(11, 3);
  VCategory x = poset_category(two, leq);
  ContinuityContext ctx = make_context(x, IdealClass::order_ideal());
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Distributor v = gen_endodist_in_class(seed, ctx);
    CHECK(endo_in_class(IdealClass::order_ideal(), v));
  }
}

TEST_CASE("law registry ids are unique and tiered") {
  std::set<std::string> ids;
  int theorem = 0, observation = 0;
  for (const Law& law : law_registry()) {
    CHECK(ids.insert(law.id).second);
    CHECK_FALSE(law.statement.empty());
    (law.tier == Tier::Theorem ? theorem : observation)++;
  }
  CHECK(theorem >= 25);
  CHECK(observation >= 5);
}

TEST_CASE("a quick theorem-tier run is clean and deterministic") {
  LawRunConfig cfg;
  cfg.seed = 7;
  cfg.count = 12;
  cfg.tier = Tier::Theorem;
  LawReport a = run_laws(cfg);
  CHECK(a.theorem_failures == 0);
  for (const LawResult& res : a.results) {
    CHECK(res.failures == 0);
    CHECK(res.cases > 0);
  }
  LawReport b = run_laws(cfg);
  CHECK(law_report_json(a) == law_report_json(b));
  CHECK(law_report_text(a) == law_report_text(b));
}

TEST_CASE("selection narrows the run") {
  LawRunConfig cfg;
  cfg.seed = 1;
  cfg.count = 5;
  cfg.selection = "quantale";
  LawReport rep = run_laws(cfg);
  CHECK(rep.results.size() == 4);
  for (const LawResult& res : rep.results)
    CHECK(res.id.find("quantale") != std::string::npos);
}

TEST_CASE("the spec'd class mismatch shows up as an observation finding") {
  LawRunConfig cfg;
  cfg.seed = 0;
  cfg.count = 8;
  cfg.selection = "obs_crossmodule_proper_orderideal";
  LawReport rep = run_laws(cfg);
  REQUIRE(rep.results.size() == 1);
  const LawResult& res = rep.results[0];
  CHECK(res.tier == Tier::Observation);
  CHECK(res.failures > 0);  // the 4-element split is real
  REQUIRE(res.counterexample.has_value());
  // the shrinker keeps the counterexample at the minimal size
  CHECK(res.counterexample->description.find("n=4") != std::string::npos);
  CHECK(rep.theorem_failures == 0);
}

TEST_CASE("mutation fixtures break exactly their targeted laws") {
  std::vector<MutationOutcome> outcomes = run_mutation_fixtures();
  REQUIRE(outcomes.size() == 7);
  std::set<std::string> targeted;
  for (const MutationOutcome& m : outcomes) {
    CAPTURE(m.law_id);
    CAPTURE(m.mutation);
    CHECK(m.honest_passes);
    CHECK(m.mutated_fails);
    targeted.insert(m.law_id);
  }
  CHECK(targeted.size() == 7);
}

TEST_CASE("report text mirrors the json verdicts") {
  LawRunConfig cfg;
  cfg.seed = 3;
  cfg.count = 4;
  cfg.selection = "dist_yoneda";
  LawReport rep = run_laws(cfg);
  std::string text = law_report_text(rep);
  std::string json = law_report_json(rep);
  CHECK(text.find("dist_yoneda") != std::string::npos);
  CHECK(json.find("\"dist_yoneda\"") != std::string::npos);
  CHECK(json.find("\"theorem_failures\": 0") != std::string::npos);
}
