#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

#include "infothermo/quantum/quantum_model.hpp"

namespace infothermo::quantum {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr int kDefaultQubitBudget = 3;
inline constexpr int kMaxAgentDim = 8;

inline constexpr double kProjectorTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-9;
inline constexpr double kIsometryTolerance = 1e-10;

/// Concrete projectors on agent (x) qubits for a handful of states.
///
/// Each state gets its own agent basis vector |i>, so the projectors
/// Pi_a = |i><i| (x) pi_a are mutually orthogonal even when the qubit parts
/// pi_a overlap. An atom's pi is the projector onto a seeded pseudo-random
/// subspace of its declared dimension; composite states use the tensor
/// product of their parts, padded with |0> on unused qubits.
struct ExplicitRealization {
  int total_qubits = 0;
  int agent_dim = 0;
  std::vector<StateExpr> states;
  std::vector<CMatrix> projectors;
  std::vector<BigInt> dims;

  Eigen::Index space_dim() const { return static_cast<Eigen::Index>(agent_dim) << total_qubits; }
  /// Index of `a` in `states`; throws DomainError if absent.
  std::size_t index_of(const StateExpr& a) const;
  /// Sum of Pi_a over the elements of E.
  CMatrix projector(const Eidostate& e) const;
};

/// Throws ResourceError if more than `qubit_budget` qubits or more than
/// kMaxAgentDim distinct states would be needed.
ExplicitRealization realize(const QuantumModel& model, const std::vector<StateExpr>& states,
                            int qubit_budget = kDefaultQubitBudget, std::uint64_t seed = 0x5eed);
/// Realizes every element of the given eidostates.
ExplicitRealization realize(const QuantumModel& model, std::initializer_list<Eidostate> eidostates,
                            int qubit_budget = kDefaultQubitBudget, std::uint64_t seed = 0x5eed);

struct ProjectorDefects {
  double hermitian = 0;
  double idempotent = 0;
  double orthogonal = 0;
  double trace = 0;
  bool ok() const;
};

/// Largest deviation from the projector invariants across the realization.
ProjectorDefects check_projectors(const ExplicitRealization& r);

/// A unitary U on the whole space carrying the subspace of A into that of B,
/// or nullopt when d_A > d_B. Throws DomainError if a projector's numerical
/// rank disagrees with its trace.
std::optional<CMatrix> find_isometry(const Eidostate& a, const Eidostate& b,
                                     const ExplicitRealization& r);

/// ||(1 - Pi_B) U Pi_A||_F.
double isometry_residual(const CMatrix& u, const Eidostate& a, const Eidostate& b,
                         const ExplicitRealization& r);

/// Largest entrywise gap between Pi_E / d_E and sum_a P(a|E) Pi_a / d_a.
double mixture_identity_defect(const Eidostate& e, const ExplicitRealization& r);

/// Two states whose qubit parts |0> and (|0>+|1>)/sqrt2 overlap.
struct EntangledDemo {
  /// Rank of Pi_E for E = {a, b}.
  Eigen::Index rank = 0;
  /// ||Pi_E Psi - Psi|| for Psi = (|a>|psi_a> + |b>|psi_b>)/sqrt2.
  double membership_residual = 0;
  /// ||Pi_E chi|| for chi = |a>|1>, a vector in which the agent is wrong.
  double wrong_vector_overlap = 0;
  /// |<a|rho_agent|b>|: the agent's reduced state is not a definite record.
  double agent_coherence = 0;
};

EntangledDemo entangled_demo();

}  // namespace infothermo::quantum
