#pragma once

#include <string>
#include <vector>

#include "infothermo/harness/generators.hpp"
#include "infothermo/harness/harness.hpp"

namespace infothermo::harness::detail {

inline CaseOutcome pass() { return {}; }

inline CaseOutcome violation(std::string observed, std::vector<std::string> inputs) {
  return {Verdict::Violation, std::move(inputs), std::move(observed)};
}

inline CaseOutcome inconclusive(std::string observed, std::vector<std::string> inputs) {
  return {Verdict::Inconclusive, std::move(inputs), std::move(observed)};
}

inline Eidostate single(const StateExpr& a) { return Eidostate::singleton(a); }

inline bool possible(const ModelOracle& o, const Eidostate& a, const Eidostate& b) {
  return o.arrow(a, b) || o.arrow(b, a);
}

inline bool reversible(const ModelOracle& o, const Eidostate& a, const Eidostate& b) {
  return o.arrow(a, b) && o.arrow(b, a);
}

}  // namespace infothermo::harness::detail
