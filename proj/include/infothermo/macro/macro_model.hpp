#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "infothermo/core/model_oracle.hpp"

namespace infothermo::macro {

/// Largest denominator allowed for an atomic entropy.
inline constexpr std::uint64_t kMaxDenominator = std::uint64_t{1} << 16;

/// An atomic state with one component of content Q and entropy S.
struct AtomDef {
  std::string name;
  std::int64_t q = 0;
  Rational s;
};

/// Throws DomainError unless q >= 0, 0 <= s <= 1, q = 0 implies s = 0 and
/// the denominator of s is at most kMaxDenominator.
void validate(const AtomDef& def);

/// Deliberate faults, used to show that the harness notices broken models.
enum class Mutation {
  None,
  DropQCriterion,
  FlipEntropyCriterion,
  /// Record atoms carry Q = 1 inside the arrow decision.
  BreakRecordFreeness,
};

std::string to_string(Mutation m);

struct NUDecomposition {
  std::vector<Eidostate> non_uniform;
  std::vector<Eidostate> uniform;
};

/// The atomic-state model: a record atom r and atoms s_lambda with Q = 1 and
/// S = lambda. Atoms are either registered (ids 0..n-1) or synthetic s_lambda
/// atoms whose id encodes lambda, so any rational lambda is available
/// without touching the registry.
class MacroModel final : public ModelOracle {
 public:
  /// Registers r, s_0, s_1/4, s_1/2, s_3/4 and s_1.
  MacroModel();
  explicit MacroModel(std::vector<AtomDef> atoms, Mutation mutation = Mutation::None);

  MacroModel with_mutation(Mutation m) const;
  Mutation mutation() const noexcept { return mutation_; }

  std::span<const AtomDef> registered() const noexcept { return atoms_; }
  /// Registered or synthetic atom. Throws UnknownAtom.
  AtomDef atom(AtomId id) const;
  std::optional<AtomId> find(const std::string& name) const;

  AtomId record_atom() const noexcept { return record_; }
  /// s_0. Mechanical states are built from this atom alone.
  AtomId mechanical_atom() const noexcept { return mechanical_; }
  /// A registered atom with Q = 1 and S = lambda if there is one, else synthetic.
  AtomId s_atom(const Rational& lambda) const;

  std::int64_t q_value(const StateExpr& a) const;
  Rational s_value(const StateExpr& a) const;
  bool is_uniform(const Eidostate& e) const;
  NUDecomposition nu_decompose(const Eidostate& e) const;
  /// Throws DomainError for a non-uniform E.
  ExactEntropy entropy_exact(const Eidostate& e) const;

  // ModelOracle
  std::string model_name() const override { return "macro"; }
  std::string atom_name(AtomId id) const override;
  bool arrow(const Eidostate& a, const Eidostate& b) const override;
  using ModelOracle::arrow;
  ExactEntropy state_entropy(const StateExpr& a) const override;
  std::vector<Rational> components(const StateExpr& a) const override;
  bool is_record(const StateExpr& a) const override;
  bool is_mechanical(const StateExpr& a) const override;
  StateExpr make_record() const override;
  Eidostate make_bit_state() const override;
  std::optional<StateEquivalence> state_equivalence(const Eidostate& e) const override;
  std::vector<StateExpr> mechanical_family(std::size_t max_count) const override;
  StateExpr random_state(Rng& rng, std::size_t max_depth) const override;
  StateExpr random_state_like(Rng& rng, const StateExpr& like, std::size_t max_depth) const override;
  StateExpr random_record(Rng& rng, std::size_t max_depth) const override;

 private:
  std::int64_t arrow_q(const StateExpr& a) const;
  ExactEntropy entropy_unchecked(const Eidostate& e) const;
  std::int64_t arrow_q_of_factor(const Eidostate& prime) const;
  std::optional<std::int64_t> constant_q(const Eidostate& e, bool for_arrow) const;
  Rational random_lambda(Rng& rng) const;
  StateExpr random_tree(Rng& rng, std::vector<StateExpr> leaves, std::size_t max_depth) const;

  std::vector<AtomDef> atoms_;
  AtomId record_;
  AtomId mechanical_;
  Mutation mutation_ = Mutation::None;
};

}  // namespace infothermo::macro
