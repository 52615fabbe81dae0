#pragma once

#include <functional>
#include <optional>

#include "qcat/continuity.hpp"
#include "qcat/topo.hpp"

namespace qcat {

// --- instance generators -------------------------------------------------

// Random partial order on n elements: a transitively closed random DAG under
// a random relabeling.
BoolMatrix gen_poset(uint64_t seed, int n);

// All posets on n elements up to isomorphism (canonical representatives),
// deterministic order.  n <= 5.
const std::vector<BoolMatrix>& enumerate_posets(int n);

// All lattices on n elements up to isomorphism.  n <= 6.
const std::vector<BoolMatrix>& enumerate_lattices(int n);

BoolMatrix m3_lattice();  // diamond with three atoms
BoolMatrix n5_lattice();  // pentagon

// Random category over a quantale: random matrix closed under reflexivity
// and tensor-transitivity.
VCategory gen_vcategory(uint64_t seed, QuantalePtr q, int n);

// Random lattice drawn from the enumerated pool.
BoolMatrix gen_lattice(uint64_t seed, int n);

// Random endodistributor: a random matrix smeared into a bimodule.
Distributor gen_endodist(uint64_t seed, const VCategory& x);

// Random class member; falls back to the structure when rejection fails.
Distributor gen_endodist_in_class(uint64_t seed, const ContinuityContext& ctx, int tries = 40);

// --- law registry ---------------------------------------------------------

enum class Tier { Theorem, Observation };

struct Counterexample {
  std::string description;  // deterministic rendering of the instance
  int shrink_steps = 0;
};

struct LawResult {
  std::string id;
  Tier tier = Tier::Theorem;
  int cases = 0;
  int engaged = 0;  // cases where the premises were not vacuous
  int failures = 0;
  std::optional<Counterexample> counterexample;
  std::string note;
};

struct Law {
  std::string id;
  Tier tier;
  std::string statement;
  std::function<LawResult(uint64_t seed, int count, const Limits&)> run;
};

const std::vector<Law>& law_registry();

struct LawRunConfig {
  std::string selection;  // substring filter on ids; empty = all
  std::optional<Tier> tier;
  uint64_t seed = 0;
  int count = 100;
  Limits limits;
};

struct LawReport {
  LawRunConfig config;
  std::vector<LawResult> results;
  int theorem_failures = 0;
};

LawReport run_laws(const LawRunConfig& config);

std::string law_report_json(const LawReport& report);
std::string law_report_text(const LawReport& report);

// --- mutation fixtures ----------------------------------------------------

// Each fixture corrupts one kernel operation and shows that exactly the
// targeted lemma check starts failing on its fixture instance.
struct MutationOutcome {
  std::string law_id;
  std::string mutation;
  bool honest_passes = false;
  bool mutated_fails = false;
  bool ok() const { return honest_passes && mutated_fails; }
};

std::vector<MutationOutcome> run_mutation_fixtures();

}  // namespace qcat
