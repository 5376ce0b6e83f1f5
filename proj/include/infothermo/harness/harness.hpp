#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "infothermo/core/model_oracle.hpp"

namespace infothermo::harness {

struct SuiteConfig {
  std::size_t cases_per_check = 500;
  std::size_t max_eidostate_size = 6;
  std::size_t max_state_depth = 4;
  std::size_t stability_n = 8;
  std::uint64_t seed = 42;

  /// Throws DomainError unless every bound is positive.
  void validate() const;
};

/// One failed or undecided case. Replaying `seed` through `replay_case`
/// regenerates the same inputs and verdict.
struct CounterexampleRecord {
  std::string check_id;
  std::uint64_t seed = 0;
  std::vector<std::string> inputs;
  std::string observed;
};

enum class Verdict { Pass, Violation, Inconclusive };

struct CaseOutcome {
  Verdict verdict = Verdict::Pass;
  std::vector<std::string> inputs;
  std::string observed;
};

struct CheckSummary {
  std::string id;
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::size_t inconclusive = 0;
};

struct SuiteResult {
  std::vector<CounterexampleRecord> violations;
  /// Cases that could not be decided (precision exhausted, resource caps,
  /// finite-stability anomalies). They never count as failures.
  std::vector<CounterexampleRecord> inconclusive;
  std::vector<CheckSummary> checks;

  bool passed() const { return violations.empty(); }
};

using CheckFn = std::function<CaseOutcome(const ModelOracle&, const SuiteConfig&, Rng&)>;

struct Check {
  std::string id;
  std::string description;
  CheckFn run;
};

const std::vector<Check>& axiom_checks();
const std::vector<Check>& theorem_checks();

enum class Execution { Parallel, Serial };

/// Seed of case `index` of `check_id`, derived from the master seed alone.
std::uint64_t case_seed(std::uint64_t master, const std::string& check_id, std::size_t index);

SuiteResult run_checks(const std::vector<Check>& checks, const ModelOracle& oracle,
                       const SuiteConfig& config, Execution mode = Execution::Parallel);
SuiteResult run_axiom_suite(const ModelOracle& oracle, const SuiteConfig& config,
                            Execution mode = Execution::Parallel);
SuiteResult run_theorem_suite(const ModelOracle& oracle, const SuiteConfig& config,
                              Execution mode = Execution::Parallel);

/// Runs a single case with an explicit seed. Nullopt for an unknown check id.
std::optional<CaseOutcome> replay_case(const ModelOracle& oracle, const SuiteConfig& config,
                                       const std::string& check_id, std::uint64_t seed);

std::string to_string(Verdict v);

}  // namespace infothermo::harness
