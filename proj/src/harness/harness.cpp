#include "infothermo/harness/harness.hpp"

#include <exception>

#include "infothermo/core/errors.hpp"

namespace infothermo::harness {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

CaseOutcome run_one(const Check& check, const ModelOracle& oracle, const SuiteConfig& config,
                    std::uint64_t seed) {
  Rng rng(seed);
  try {
    return check.run(oracle, config, rng);
  } catch (const PrecisionExhausted& e) {
    return {Verdict::Inconclusive, {}, std::string("precision exhausted: ") + e.what()};
  } catch (const ResourceError& e) {
    return {Verdict::Inconclusive, {}, std::string("resource cap: ") + e.what()};
  } catch (const std::exception& e) {
    return {Verdict::Violation, {}, std::string("unexpected error: ") + e.what()};
  }
}

}  // namespace

void SuiteConfig::validate() const {
  if (cases_per_check == 0 || max_eidostate_size == 0 || max_state_depth == 0 || stability_n == 0) {
    throw DomainError("suite bounds must be positive");
  }
}

std::uint64_t case_seed(std::uint64_t master, const std::string& check_id, std::size_t index) {
  return splitmix(splitmix(master ^ fnv1a(check_id)) + index);
}

SuiteResult run_checks(const std::vector<Check>& checks, const ModelOracle& oracle,
                       const SuiteConfig& config, Execution mode) {
  config.validate();
  const std::size_t per = config.cases_per_check;
  const std::size_t total = checks.size() * per;
  std::vector<CaseOutcome> outcomes(total);
  std::vector<std::uint64_t> seeds(total);
  for (std::size_t i = 0; i < total; ++i) seeds[i] = case_seed(config.seed, checks[i / per].id, i % per);

  if (mode == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < total; ++i) {
      outcomes[i] = run_one(checks[i / per], oracle, config, seeds[i]);
    }
  } else {
    for (std::size_t i = 0; i < total; ++i) outcomes[i] = run_one(checks[i / per], oracle, config, seeds[i]);
  }

  SuiteResult result;
  for (std::size_t c = 0; c < checks.size(); ++c) {
    CheckSummary summary{checks[c].id, per, 0, 0};
    for (std::size_t k = 0; k < per; ++k) {
      const std::size_t i = c * per + k;
      CaseOutcome& o = outcomes[i];
      if (o.verdict == Verdict::Pass) continue;
      CounterexampleRecord rec{checks[c].id, seeds[i], std::move(o.inputs), std::move(o.observed)};
      if (o.verdict == Verdict::Violation) {
        ++summary.violations;
        result.violations.push_back(std::move(rec));
      } else {
        ++summary.inconclusive;
        result.inconclusive.push_back(std::move(rec));
      }
    }
    result.checks.push_back(std::move(summary));
  }
  return result;
}

SuiteResult run_axiom_suite(const ModelOracle& oracle, const SuiteConfig& config, Execution mode) {
  return run_checks(axiom_checks(), oracle, config, mode);
}

SuiteResult run_theorem_suite(const ModelOracle& oracle, const SuiteConfig& config, Execution mode) {
  return run_checks(theorem_checks(), oracle, config, mode);
}

std::optional<CaseOutcome> replay_case(const ModelOracle& oracle, const SuiteConfig& config,
                                       const std::string& check_id, std::uint64_t seed) {
  for (const auto* list : {&axiom_checks(), &theorem_checks()}) {
    for (const auto& c : *list) {
      if (c.id == check_id) return run_one(c, oracle, config, seed);
    }
  }
  return std::nullopt;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Violation: return "violation";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace infothermo::harness
