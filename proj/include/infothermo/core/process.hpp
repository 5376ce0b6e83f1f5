#pragma once

#include <string>

#include "infothermo/core/eidostate.hpp"

namespace infothermo {

/// A formal process <initial, final>.
struct Process {
  Eidostate initial;
  Eidostate final_state;

  friend bool operator==(const Process&, const Process&) = default;
};

enum class ProcessType { NaturalIrreversible, AntinaturalIrreversible, Reversible, Impossible };

/// `natural irreversible`, `antinatural irreversible`, `reversible`, `impossible`.
std::string to_string(ProcessType t);

}  // namespace infothermo
