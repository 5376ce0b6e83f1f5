#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "infothermo/core/eidostate.hpp"
#include "infothermo/core/state_expr.hpp"
#include "infothermo/exact/exact_entropy.hpp"
#include "infothermo/exact/rational.hpp"

namespace infothermo {

using Rng = std::mt19937_64;

/// The (e, x, y) of a state equivalence: x -> y and E + x <-> e + y.
///
/// When the model cannot hit the entropy exactly (an irrational value), the
/// nearest representable y is returned with `approximate` set and
/// `tolerance` bounding the entropy mismatch of the reversible relation.
struct StateEquivalence {
  StateExpr e;
  StateExpr x;
  StateExpr y;
  bool approximate = false;
  double tolerance = 0.0;
};

/// What a concrete model exposes to the engine and the harness.
///
/// Implementations must be immutable after construction: every method may
/// be called concurrently.
class ModelOracle {
 public:
  virtual ~ModelOracle() = default;

  virtual std::string model_name() const = 0;
  virtual std::string atom_name(AtomId id) const = 0;

  virtual bool arrow(const Eidostate& a, const Eidostate& b) const = 0;
  virtual ExactEntropy state_entropy(const StateExpr& a) const = 0;
  /// Conserved components of content; empty when the model has none.
  virtual std::vector<Rational> components(const StateExpr& a) const = 0;
  virtual bool is_record(const StateExpr& a) const = 0;
  virtual bool is_mechanical(const StateExpr& a) const = 0;
  virtual StateExpr make_record() const = 0;
  virtual Eidostate make_bit_state() const = 0;

  /// Requires a uniform E. Returns nullopt if the model has no construction.
  virtual std::optional<StateEquivalence> state_equivalence(const Eidostate& e) const = 0;

  /// A finite family of mechanical states used by bounded searches.
  virtual std::vector<StateExpr> mechanical_family(std::size_t max_count) const = 0;

  // Generators used by the harness. All randomness comes from `rng`.
  virtual StateExpr random_state(Rng& rng, std::size_t max_depth) const = 0;
  /// A random state whose components equal those of `like`.
  virtual StateExpr random_state_like(Rng& rng, const StateExpr& like, std::size_t max_depth) const = 0;
  virtual StateExpr random_record(Rng& rng, std::size_t max_depth) const = 0;

  std::string describe(const StateExpr& a) const;
  std::string describe(const Eidostate& e) const;

  bool arrow(const StateExpr& a, const StateExpr& b) const {
    return arrow(Eidostate::singleton(a), Eidostate::singleton(b));
  }
};

}  // namespace infothermo
