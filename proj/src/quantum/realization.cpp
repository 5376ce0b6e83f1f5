#include "infothermo/quantum/realization.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <random>

#include "infothermo/core/errors.hpp"

namespace infothermo::quantum {

namespace {

using cd = std::complex<double>;

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Projector onto a pseudo-random d-dimensional subspace of 2^len dimensions.
CMatrix atom_projector(const QAtom& atom, AtomId id, std::uint64_t seed) {
  const Eigen::Index n = Eigen::Index{1} << atom.len;
  const Eigen::Index d = atom.dim.get_si();
  std::mt19937_64 rng(splitmix(seed ^ splitmix(id.value) ^ splitmix(atom.len * 131 + d)));
  std::normal_distribution<double> gauss;
  CMatrix g(n, d);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = cd(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<CMatrix> qr(g);
  const CMatrix q = qr.householderQ() * CMatrix::Identity(n, d);
  return q * q.adjoint();
}

CMatrix state_projector(const QuantumModel& model, const StateExpr& a, std::uint64_t seed) {
  if (a.is_atom()) return atom_projector(model.atom(a.atom_id()), a.atom_id(), seed);
  return kron(state_projector(model, a.left(), seed), state_projector(model, a.right(), seed));
}

struct Split {
  CMatrix range;
  CMatrix complement;
};

Split split_subspace(const CMatrix& p, const BigInt& expected_rank) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(p);
  const auto& vals = es.eigenvalues();
  const Eigen::Index n = p.rows();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < n; ++i) rank += vals(i) > 0.5 ? 1 : 0;
  if (BigInt(static_cast<long>(rank)) != expected_rank) {
    throw DomainError("projector rank " + std::to_string(rank) + " differs from dimension " +
                      expected_rank.get_str());
  }
  // Eigenvalues come sorted ascending: complement first, range last.
  return {es.eigenvectors().rightCols(rank), es.eigenvectors().leftCols(n - rank)};
}

}  // namespace

std::size_t ExplicitRealization::index_of(const StateExpr& a) const {
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i] == a) return i;
  throw DomainError("state not part of this realization");
}

CMatrix ExplicitRealization::projector(const Eidostate& e) const {
  CMatrix p = CMatrix::Zero(space_dim(), space_dim());
  for (const auto& x : e.elements(kMaxAgentDim)) p += projectors[index_of(x)];
  return p;
}

ExplicitRealization realize(const QuantumModel& model, const std::vector<StateExpr>& states,
                            int qubit_budget, std::uint64_t seed) {
  ExplicitRealization out;
  for (const auto& s : states)
    if (std::find(out.states.begin(), out.states.end(), s) == out.states.end()) out.states.push_back(s);
  if (out.states.empty()) throw DomainError("nothing to realize");
  if (out.states.size() > static_cast<std::size_t>(kMaxAgentDim)) {
    throw ResourceError("more than " + std::to_string(kMaxAgentDim) + " distinct states");
  }
  std::uint64_t qubits = 0;
  for (const auto& s : out.states) qubits = std::max(qubits, model.q_length(s));
  if (qubits > static_cast<std::uint64_t>(qubit_budget)) {
    throw ResourceError("realization needs " + std::to_string(qubits) + " qubits, budget is " +
                        std::to_string(qubit_budget));
  }
  out.total_qubits = static_cast<int>(qubits);
  out.agent_dim = static_cast<int>(out.states.size());

  for (std::size_t i = 0; i < out.states.size(); ++i) {
    const auto& s = out.states[i];
    CMatrix pi = state_projector(model, s, seed);
    const std::uint64_t pad = qubits - model.q_length(s);
    if (pad > 0) {
      CMatrix zero = CMatrix::Zero(Eigen::Index{1} << pad, Eigen::Index{1} << pad);
      zero(0, 0) = 1.0;
      pi = kron(pi, zero);
    }
    CMatrix label = CMatrix::Zero(out.agent_dim, out.agent_dim);
    label(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0;
    out.projectors.push_back(kron(label, pi));
    out.dims.push_back(model.q_dim(s));
  }
  return out;
}

ExplicitRealization realize(const QuantumModel& model, std::initializer_list<Eidostate> eidostates,
                            int qubit_budget, std::uint64_t seed) {
  std::vector<StateExpr> states;
  for (const auto& e : eidostates) {
    for (auto& x : e.elements(kMaxAgentDim)) states.push_back(std::move(x));
  }
  return realize(model, states, qubit_budget, seed);
}

bool ProjectorDefects::ok() const {
  return hermitian <= kProjectorTolerance && idempotent <= kProjectorTolerance &&
         orthogonal <= kProjectorTolerance && trace <= kTraceTolerance;
}

ProjectorDefects check_projectors(const ExplicitRealization& r) {
  ProjectorDefects d;
  for (std::size_t i = 0; i < r.projectors.size(); ++i) {
    const CMatrix& p = r.projectors[i];
    d.hermitian = std::max(d.hermitian, (p - p.adjoint()).cwiseAbs().maxCoeff());
    d.idempotent = std::max(d.idempotent, (p * p - p).cwiseAbs().maxCoeff());
    d.trace = std::max(d.trace, std::abs(p.trace().real() - r.dims[i].get_d()));
    for (std::size_t j = i + 1; j < r.projectors.size(); ++j) {
      d.orthogonal = std::max(d.orthogonal, (p * r.projectors[j]).cwiseAbs().maxCoeff());
    }
  }
  return d;
}

std::optional<CMatrix> find_isometry(const Eidostate& a, const Eidostate& b,
                                     const ExplicitRealization& r) {
  BigInt da = 0;
  BigInt db = 0;
  for (const auto& x : a.elements(kMaxAgentDim)) da += r.dims[r.index_of(x)];
  for (const auto& x : b.elements(kMaxAgentDim)) db += r.dims[r.index_of(x)];
  if (da > db) return std::nullopt;

  const Split sa = split_subspace(r.projector(a), da);
  const Split sb = split_subspace(r.projector(b), db);
  const Eigen::Index ka = sa.range.cols();
  const Eigen::Index kb = sb.range.cols();
  const Eigen::Index n = r.space_dim();

  // Range of A onto the first d_A basis vectors of B's range; the leftover
  // range vectors of B plus B's complement absorb A's complement.
  CMatrix target(n, n - ka);
  target << sb.range.rightCols(kb - ka), sb.complement;
  CMatrix u = sb.range.leftCols(ka) * sa.range.adjoint() + target * sa.complement.adjoint();
  return u;
}

double isometry_residual(const CMatrix& u, const Eidostate& a, const Eidostate& b,
                         const ExplicitRealization& r) {
  const CMatrix id = CMatrix::Identity(r.space_dim(), r.space_dim());
  return ((id - r.projector(b)) * u * r.projector(a)).norm();
}

double mixture_identity_defect(const Eidostate& e, const ExplicitRealization& r) {
  double de = 0;
  for (const auto& x : e.elements(kMaxAgentDim)) de += r.dims[r.index_of(x)].get_d();
  const CMatrix rho_e = r.projector(e) / de;
  CMatrix mix = CMatrix::Zero(r.space_dim(), r.space_dim());
  for (const auto& x : e.elements(kMaxAgentDim)) {
    const std::size_t i = r.index_of(x);
    const double da = r.dims[i].get_d();
    mix += (da / de) * (r.projectors[i] / da);
  }
  return (rho_e - mix).cwiseAbs().maxCoeff();
}

EntangledDemo entangled_demo() {
  const double h = 1.0 / std::sqrt(2.0);
  CVector psi_a(2), psi_b(2), ket_a(2), ket_b(2), one(2);
  psi_a << 1, 0;
  psi_b << h, h;
  ket_a << 1, 0;
  ket_b << 0, 1;
  one << 0, 1;

  auto kv = [](const CVector& x, const CVector& y) {
    CVector out(x.size() * y.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) out.segment(i * y.size(), y.size()) = x(i) * y;
    return out;
  };
  const CVector a_state = kv(ket_a, psi_a);
  const CVector b_state = kv(ket_b, psi_b);
  const CMatrix pi_e = a_state * a_state.adjoint() + b_state * b_state.adjoint();

  EntangledDemo out;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(pi_e);
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.rank += es.eigenvalues()(i) > 0.5;

  const CVector psi = h * (a_state + b_state);
  out.membership_residual = (pi_e * psi - psi).norm();
  out.wrong_vector_overlap = (pi_e * kv(ket_a, one)).norm();

  // Partial trace over the qubit: rho_agent(i, j) = sum_q psi(i,q) conj(psi(j,q)).
  cd coherence = 0;
  for (Eigen::Index q = 0; q < 2; ++q) coherence += psi(q) * std::conj(psi(2 + q));
  out.agent_coherence = std::abs(coherence);
  return out;
}

}  // namespace infothermo::quantum
