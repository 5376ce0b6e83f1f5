#include "infothermo/harness/generators.hpp"

#include <algorithm>

#include "infothermo/core/errors.hpp"
#include "infothermo/engine/engine.hpp"

namespace infothermo::harness {

bool coin(Rng& rng, int one_in) { return std::uniform_int_distribution<int>(1, one_in)(rng) == 1; }

std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Eidostate random_eidostate(Rng& rng, const ModelOracle& oracle, std::size_t max_size,
                           std::size_t max_depth) {
  const std::size_t k = uniform_size(rng, 1, max_size);
  if (k >= 4 && coin(rng, 4)) {
    const Eidostate l = random_eidostate(rng, oracle, k / 2, max_depth);
    return l + random_eidostate(rng, oracle, 2, max_depth);
  }
  std::vector<StateExpr> elems;
  for (std::size_t i = 0; i < k; ++i) elems.push_back(oracle.random_state(rng, max_depth));
  return Eidostate::of(std::move(elems));
}

Eidostate random_uniform(Rng& rng, const ModelOracle& oracle, std::size_t max_size,
                         std::size_t max_depth, const std::optional<StateExpr>& like) {
  const StateExpr ref = like ? *like : oracle.random_state(rng, max_depth);
  const std::size_t k = uniform_size(rng, 1, max_size);
  if (!like && k >= 4 && coin(rng, 5)) {
    const Eidostate l = random_uniform(rng, oracle, k / 2, max_depth);
    return l + random_uniform(rng, oracle, 2, max_depth);
  }
  std::vector<StateExpr> elems;
  elems.push_back(like ? oracle.random_state_like(rng, ref, max_depth) : ref);
  for (std::size_t i = 1; i < k; ++i) elems.push_back(oracle.random_state_like(rng, ref, max_depth));
  return Eidostate::of(std::move(elems));
}

Eidostate random_information_state_of_size(Rng& rng, const ModelOracle& oracle, std::size_t n) {
  if (n == 0) throw DomainError("information states are nonempty");
  // Draw n distinct records from a pool up to twice as large.
  const std::size_t pool_size = n + uniform_size(rng, 0, n);
  auto pool = engine::information_state(pool_size, oracle).elements();
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(n), pool.end());
  return Eidostate::of(std::move(pool));
}

Eidostate random_information_state(Rng& rng, const ModelOracle& oracle, std::size_t max_n) {
  return random_information_state_of_size(rng, oracle, uniform_size(rng, 1, max_n));
}

Eidostate random_subset(Rng& rng, const Eidostate& e, bool proper) {
  const auto elems = e.elements(kSubsetEnumerationCap);
  const std::size_t n = elems.size();
  if (proper && n < 2) throw DomainError("a proper nonempty subset needs |E| >= 2");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const std::uint64_t hi = proper ? full - 1 : full;
  const std::uint64_t mask = std::uniform_int_distribution<std::uint64_t>(1, hi)(rng);
  std::vector<StateExpr> pick;
  for (std::size_t i = 0; i < n; ++i)
    if (mask & (std::uint64_t{1} << i)) pick.push_back(elems[i]);
  return Eidostate::of(std::move(pick));
}

}  // namespace infothermo::harness
