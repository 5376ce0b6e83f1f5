#pragma once

#include <cstddef>
#include <optional>

#include "infothermo/core/model_oracle.hpp"

namespace infothermo::harness {

/// Sizes are at most `max_size` before deduplication; depth bounds each state.
Eidostate random_eidostate(Rng& rng, const ModelOracle& oracle, std::size_t max_size,
                           std::size_t max_depth);

/// Elements share the components of `like` (or of a fresh random state), so
/// the result is uniform in any model whose possibility is decided by
/// components and entropy.
Eidostate random_uniform(Rng& rng, const ModelOracle& oracle, std::size_t max_size,
                         std::size_t max_depth, const std::optional<StateExpr>& like = std::nullopt);

/// A random n-element information state with 1 <= n <= max_n, not
/// necessarily a Cartesian product.
Eidostate random_information_state(Rng& rng, const ModelOracle& oracle, std::size_t max_n);
Eidostate random_information_state_of_size(Rng& rng, const ModelOracle& oracle, std::size_t n);

/// A random nonempty subset; `proper` requires |E| >= 2 and excludes E itself.
Eidostate random_subset(Rng& rng, const Eidostate& e, bool proper = false);

bool coin(Rng& rng, int one_in);
std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi);

}  // namespace infothermo::harness
