#include "infothermo/quantum/quantum_model.hpp"

#include "infothermo/core/errors.hpp"

namespace infothermo::quantum {

namespace {

constexpr std::uint64_t kSynthetic = std::uint64_t{1} << 63;

bool is_synthetic(AtomId id) { return (id.value & kSynthetic) != 0; }

std::uint64_t qubits_for(const BigInt& d) { return std::max(1u, ceil_log2(d)); }

std::vector<QAtom> default_atoms() {
  std::vector<QAtom> out{{"r", 1, 1}};
  for (unsigned long d = 2; d <= 8; ++d) out.push_back({"q" + std::to_string(d), d, qubits_for(d)});
  return out;
}

}  // namespace

void validate(const QAtom& atom) {
  if (atom.len < 1) throw DomainError("atom " + atom.name + ": len must be >= 1");
  if (atom.dim < 1) throw DomainError("atom " + atom.name + ": dim must be >= 1");
  if (atom.len < 64 && atom.dim > (BigInt(1) << static_cast<mp_bitcnt_t>(atom.len))) {
    throw DomainError("atom " + atom.name + ": dim exceeds 2^len");
  }
}

QuantumModel::QuantumModel() : QuantumModel(default_atoms()) {}

QuantumModel::QuantumModel(std::vector<QAtom> atoms) : atoms_(std::move(atoms)) {
  for (const auto& a : atoms_) validate(a);
}

QAtom QuantumModel::atom(AtomId id) const {
  if (is_synthetic(id)) {
    const std::uint64_t d = id.value & ~kSynthetic;
    return {"d[" + std::to_string(d) + "]", BigInt(static_cast<unsigned long>(d)), qubits_for(d)};
  }
  if (id.value >= atoms_.size()) throw UnknownAtom("unknown atom id " + std::to_string(id.value));
  return atoms_[id.value];
}

std::optional<AtomId> QuantumModel::find(const std::string& name) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (atoms_[i].name == name) return AtomId{i};
  return std::nullopt;
}

AtomId QuantumModel::atom_with_dim(const BigInt& d) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (atoms_[i].dim == d) return AtomId{i};
  if (d < 1 || d > BigInt(static_cast<unsigned long>(kMaxSyntheticDim))) {
    throw ResourceError("no atom of dimension " + d.get_str() + " within the synthetic cap");
  }
  return AtomId{kSynthetic | d.get_ui()};
}

std::string QuantumModel::atom_name(AtomId id) const { return atom(id).name; }

BigInt QuantumModel::q_dim(const StateExpr& a) const {
  BigInt d = 1;
  a.for_each_leaf([&](AtomId id) { d *= atom(id).dim; });
  return d;
}

BigInt QuantumModel::q_dim(const Eidostate& e) const {
  if (e.is_product()) return q_dim(e.left_factor()) * q_dim(e.right_factor());
  BigInt d = 0;
  for (const auto& x : e.prime_elements()) d += q_dim(x);
  return d;
}

std::uint64_t QuantumModel::q_length(const StateExpr& a) const {
  std::uint64_t len = 0;
  a.for_each_leaf([&](AtomId id) { len += atom(id).len; });
  return len;
}

ExactEntropy QuantumModel::state_entropy(const StateExpr& a) const {
  return ExactEntropy::log2_of(q_dim(a));
}

StateExpr QuantumModel::make_record() const { return StateExpr::atom(atom_with_dim(1)); }

Eidostate QuantumModel::make_bit_state() const {
  const StateExpr r = make_record();
  return Eidostate::of({r, r + r});
}

std::optional<StateEquivalence> QuantumModel::state_equivalence(const Eidostate& e) const {
  const StateExpr r = make_record();
  return StateEquivalence{StateExpr::atom(atom_with_dim(q_dim(e))), r, r};
}

StateExpr QuantumModel::random_tree(Rng& rng, std::size_t max_depth, bool records_only) const {
  const bool leaf = max_depth == 0 || std::uniform_int_distribution<int>(0, 2)(rng) == 0;
  if (leaf) {
    if (records_only) return make_record();
    // Small dimensions dominate so that random eidostates often tie.
    const unsigned long d = std::uniform_int_distribution<unsigned long>(1, 8)(rng);
    const unsigned long dim = std::uniform_int_distribution<int>(0, 1)(rng) ? d : 1 + d % 3;
    return StateExpr::atom(atom_with_dim(dim));
  }
  StateExpr l = random_tree(rng, max_depth - 1, records_only);
  StateExpr r = random_tree(rng, max_depth - 1, records_only);
  return StateExpr::pair(std::move(l), std::move(r));
}

StateExpr QuantumModel::random_state(Rng& rng, std::size_t max_depth) const {
  return random_tree(rng, std::min<std::size_t>(max_depth, 2), false);
}

StateExpr QuantumModel::random_state_like(Rng& rng, const StateExpr&, std::size_t max_depth) const {
  return random_state(rng, max_depth);
}

StateExpr QuantumModel::random_record(Rng& rng, std::size_t max_depth) const {
  return random_tree(rng, std::min<std::size_t>(max_depth, 2), true);
}

}  // namespace infothermo::quantum
