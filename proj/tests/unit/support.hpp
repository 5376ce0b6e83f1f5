#pragma once

#include <random>
#include <vector>

#include "infothermo/core/eidostate.hpp"

namespace testing {

using infothermo::AtomId;
using infothermo::Eidostate;
using infothermo::StateExpr;

inline StateExpr atom(std::uint64_t id) { return StateExpr::atom(AtomId{id}); }
inline Eidostate one(const StateExpr& a) { return Eidostate::singleton(a); }
inline Eidostate set(std::vector<StateExpr> xs) { return Eidostate::of(std::move(xs)); }

/// Random tree over atoms 0..atoms-1, independent of any model.
inline StateExpr random_tree(std::mt19937_64& rng, std::size_t depth, std::uint64_t atoms = 4) {
  if (depth == 0 || std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
    return atom(std::uniform_int_distribution<std::uint64_t>(0, atoms - 1)(rng));
  }
  StateExpr l = random_tree(rng, depth - 1, atoms);
  return l + random_tree(rng, depth - 1, atoms);
}

/// Random eidostate; sometimes a product so that factorization has work to do.
inline Eidostate random_set(std::mt19937_64& rng, std::size_t max_size, std::size_t depth = 2) {
  const auto k = std::uniform_int_distribution<std::size_t>(1, max_size)(rng);
  if (k >= 3 && std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
    return random_set(rng, 2, depth) + random_set(rng, k / 2, depth);
  }
  std::vector<StateExpr> xs;
  for (std::size_t i = 0; i < k; ++i) xs.push_back(random_tree(rng, depth));
  return set(xs);
}

/// Brute-force Cartesian product as a plain element list.
inline std::vector<StateExpr> brute_product(const std::vector<StateExpr>& a, const std::vector<StateExpr>& b) {
  std::vector<StateExpr> out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x + y);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace testing
