#pragma once

// Verification suites: run audits and parametric analysis on seeded
// and hand-built instances and cross-check them.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ambipref/analysis.hpp"
#include "ambipref/axioms.hpp"
#include "ambipref/generator.hpp"

namespace ambipref {

struct LabeledInstance {
  std::string label;
  Instance instance;
};

/// disjoint, touching, cutting and overlap two-state collections.
std::vector<LabeledInstance> hand_built_instances();
/// Throws UnknownSuite for an unknown name.
Instance hand_built_instance(std::string_view name);

/// thm2 thm3 thm4 prop1 prop2 prop3 prop4 prop5 prop6 lemma3 fig4
const std::vector<std::string>& suite_ids();
/// Splits a comma list; "all" expands. Throws UnknownSuite.
std::vector<std::string> parse_suites(std::string_view list);

struct VerifyOptions {
  std::vector<std::string> suites;
  std::uint64_t first_seed = 0;
  std::uint64_t last_seed = 99;
  GenParams params;
  int resolution = 2;
  Rational radius = 1;
  bool hand_built = true;
  /// 0: AMBIPREF_THREADS when set, else hardware concurrency.
  std::size_t threads = 0;
};

struct Counterexample {
  std::string instance;
  std::string message;
};

struct SuiteResult {
  std::string id;
  std::string title;
  std::size_t instances = 0;  // instances the suite applied to
  std::vector<std::string> batteries;  // distinct battery descriptions
  bool passed = true;
  std::vector<Counterexample> counterexamples;
  std::size_t boundary_flags = 0;
  std::map<std::string, std::size_t> stats;  // suite-specific tallies
  /// fig4: replayed witnesses; other suites: per-instance notes worth keeping.
  std::vector<nlohmann::json> findings;
};

struct VerificationReport {
  static constexpr int schema_version = 1;
  VerifyOptions options;
  std::vector<SuiteResult> suites;
  bool passed = true;
};

/// Deterministic in (suites, seeds, params, battery) regardless of threads.
VerificationReport verify(const VerifyOptions& options);

/// Worker count honouring AMBIPREF_THREADS.
std::size_t worker_count(std::size_t requested);

}  // namespace ambipref
