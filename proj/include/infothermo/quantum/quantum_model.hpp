#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "infothermo/core/model_oracle.hpp"

namespace infothermo::quantum {

/// Largest dimension a synthetic atom may carry.
inline constexpr std::uint64_t kMaxSyntheticDim = std::uint64_t{1} << 56;

/// A qubit-world atom: a d-dimensional subspace of L qubits, d <= 2^L.
struct QAtom {
  std::string name;
  BigInt dim = 1;
  std::uint64_t len = 1;
};

/// Throws DomainError unless 1 <= dim <= 2^len and len >= 1.
void validate(const QAtom& atom);

/// The subspace-dimension model. A state's dimension is the product of its
/// leaves' dimensions, an eidostate's is the sum over its elements, and
/// A -> B exactly when d_A <= d_B. There are no mechanical states and no
/// conserved components.
class QuantumModel final : public ModelOracle {
 public:
  /// Registers r (d = 1) and q2 ... q8, each on the fewest qubits that hold it.
  QuantumModel();
  explicit QuantumModel(std::vector<QAtom> atoms);

  std::span<const QAtom> registered() const noexcept { return atoms_; }
  QAtom atom(AtomId id) const;
  std::optional<AtomId> find(const std::string& name) const;
  /// A registered atom of dimension d if there is one, else a synthetic one.
  AtomId atom_with_dim(const BigInt& d) const;

  BigInt q_dim(const StateExpr& a) const;
  BigInt q_dim(const Eidostate& e) const;
  std::uint64_t q_length(const StateExpr& a) const;
  bool q_arrow(const Eidostate& a, const Eidostate& b) const { return q_dim(a) <= q_dim(b); }

  // ModelOracle
  std::string model_name() const override { return "quantum"; }
  std::string atom_name(AtomId id) const override;
  bool arrow(const Eidostate& a, const Eidostate& b) const override { return q_arrow(a, b); }
  using ModelOracle::arrow;
  ExactEntropy state_entropy(const StateExpr& a) const override;
  std::vector<Rational> components(const StateExpr&) const override { return {}; }
  bool is_record(const StateExpr& a) const override { return q_dim(a) == 1; }
  bool is_mechanical(const StateExpr&) const override { return false; }
  StateExpr make_record() const override;
  Eidostate make_bit_state() const override;
  std::optional<StateEquivalence> state_equivalence(const Eidostate& e) const override;
  std::vector<StateExpr> mechanical_family(std::size_t) const override { return {}; }
  StateExpr random_state(Rng& rng, std::size_t max_depth) const override;
  StateExpr random_state_like(Rng& rng, const StateExpr& like, std::size_t max_depth) const override;
  StateExpr random_record(Rng& rng, std::size_t max_depth) const override;

 private:
  StateExpr random_tree(Rng& rng, std::size_t max_depth, bool records_only) const;

  std::vector<QAtom> atoms_;
};

}  // namespace infothermo::quantum
