#include "infothermo/core/process.hpp"

#include "infothermo/core/model_oracle.hpp"

namespace infothermo {

std::string to_string(ProcessType t) {
  switch (t) {
    case ProcessType::NaturalIrreversible: return "natural irreversible";
    case ProcessType::AntinaturalIrreversible: return "antinatural irreversible";
    case ProcessType::Reversible: return "reversible";
    case ProcessType::Impossible: return "impossible";
  }
  return "?";
}

std::string ModelOracle::describe(const StateExpr& a) const {
  return to_string(a, [this](AtomId id) { return atom_name(id); });
}

std::string ModelOracle::describe(const Eidostate& e) const {
  return to_string(e, [this](AtomId id) { return atom_name(id); });
}

}  // namespace infothermo
