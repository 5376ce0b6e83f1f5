#include <set>

#include "doctest.h"
#include "infothermo/core/errors.hpp"
#include "infothermo/harness/generators.hpp"
#include "infothermo/harness/harness.hpp"
#include "infothermo/macro/macro_model.hpp"
#include "infothermo/quantum/quantum_model.hpp"

using namespace infothermo;
using namespace infothermo::harness;

namespace {

bool same_records(const std::vector<CounterexampleRecord>& a, const std::vector<CounterexampleRecord>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].check_id != b[i].check_id || a[i].seed != b[i].seed || a[i].inputs != b[i].inputs ||
        a[i].observed != b[i].observed) {
      return false;
    }
  }
  return true;
}

SuiteConfig small(std::uint64_t seed = 42) {
  SuiteConfig c;
  c.cases_per_check = 60;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("check registries") {
  std::set<std::string> ids;
  for (const auto& c : axiom_checks()) ids.insert(c.id);
  for (const char* id : {"A1(a)", "A1(b)", "A1(c)", "A2(a)", "A2(b)", "A2(c)", "A2(d)", "A3", "A4(a)", "A4(b)",
                         "A5", "A6(a)", "A6(b)", "A7", "A8", "A9"}) {
    CHECK(ids.count(id) == 1);
  }
  ids.clear();
  for (const auto& c : theorem_checks()) ids.insert(c.id);
  for (const char* id : {"T3", "T5", "T6", "T8", "T9(c)", "T15", "T17", "cancellation", "independence",
                         "probability", "landauer", "gibbs", "demon", "content-shift"}) {
    CHECK(ids.count(id) == 1);
  }
}

TEST_CASE("case seeds depend only on the master seed, id and index") {
  CHECK(case_seed(42, "A3", 0) == case_seed(42, "A3", 0));
  CHECK(case_seed(42, "A3", 0) != case_seed(42, "A3", 1));
  CHECK(case_seed(42, "A3", 0) != case_seed(43, "A3", 0));
  CHECK(case_seed(42, "A3", 0) != case_seed(42, "A4(a)", 0));
}

TEST_CASE("configuration bounds") {
  SuiteConfig c;
  CHECK_NOTHROW(c.validate());
  c.stability_n = 0;
  CHECK_THROWS_AS(c.validate(), DomainError);
}

TEST_CASE("parallel and serial runs agree") {
  const macro::MacroModel m;
  const auto flip = m.with_mutation(macro::Mutation::FlipEntropyCriterion);
  for (const ModelOracle* o : {static_cast<const ModelOracle*>(&m), static_cast<const ModelOracle*>(&flip)}) {
    const auto par = run_axiom_suite(*o, small(), Execution::Parallel);
    const auto ser = run_axiom_suite(*o, small(), Execution::Serial);
    CHECK(same_records(par.violations, ser.violations));
    CHECK(same_records(par.inconclusive, ser.inconclusive));
    const auto again = run_axiom_suite(*o, small(), Execution::Parallel);
    CHECK(same_records(par.violations, again.violations));
  }
}

TEST_CASE("replaying a counterexample seed reproduces it") {
  const auto m = macro::MacroModel().with_mutation(macro::Mutation::DropQCriterion);
  const auto res = run_theorem_suite(m, small());
  REQUIRE_FALSE(res.violations.empty());
  for (std::size_t i = 0; i < std::min<std::size_t>(5, res.violations.size()); ++i) {
    const auto& rec = res.violations[i];
    const auto again = replay_case(m, small(), rec.check_id, rec.seed);
    REQUIRE(again);
    CHECK(again->verdict == Verdict::Violation);
    CHECK(again->inputs == rec.inputs);
    CHECK(again->observed == rec.observed);
  }
  CHECK_FALSE(replay_case(m, small(), "no-such-check", 1));
}

TEST_CASE("unmutated models pass a short run") {
  const macro::MacroModel m;
  const quantum::QuantumModel q;
  CHECK(run_axiom_suite(m, small(7)).passed());
  CHECK(run_theorem_suite(m, small(7)).passed());
  CHECK(run_axiom_suite(q, small(7)).passed());
  CHECK(run_theorem_suite(q, small(7)).passed());
}

TEST_CASE("each mutation is noticed") {
  const macro::MacroModel m;
  for (auto mu : {macro::Mutation::DropQCriterion, macro::Mutation::FlipEntropyCriterion,
                  macro::Mutation::BreakRecordFreeness}) {
    const auto bad = m.with_mutation(mu);
    CHECK_FALSE(run_axiom_suite(bad, small()).passed());
  }
}

TEST_CASE("generators") {
  const macro::MacroModel m;
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const auto e = random_eidostate(rng, m, 6, 4);
    CHECK(e.size() >= 1);
    const auto u = random_uniform(rng, m, 6, 4);
    CHECK(m.is_uniform(u));
    const std::size_t n = uniform_size(rng, 1, 64);
    const auto info = random_information_state_of_size(rng, m, n);
    CHECK(info.size() == n);
    for (const auto& x : info.elements()) CHECK(m.is_record(x));
    if (u.size() >= 2) {
      const auto sub = random_subset(rng, u, true);
      CHECK(is_proper_subset(sub, u));
    }
  }
  CHECK_THROWS_AS(random_information_state_of_size(rng, m, 0), DomainError);
  CHECK(to_string(Verdict::Inconclusive) == "inconclusive");
}
