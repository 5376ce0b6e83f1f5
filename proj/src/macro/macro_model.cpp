#include "infothermo/macro/macro_model.hpp"

#include <algorithm>
#include <functional>

#include "infothermo/core/errors.hpp"

namespace infothermo::macro {

namespace {

// Synthetic ids: top bit set, lambda = num/den packed below. den = 0 marks
// the synthetic record atom.
constexpr std::uint64_t kSynthetic = std::uint64_t{1} << 63;
constexpr unsigned kDenBits = 20;
constexpr std::uint64_t kDenMask = (std::uint64_t{1} << kDenBits) - 1;
constexpr AtomId kSyntheticRecord{kSynthetic};

bool is_synthetic(AtomId id) { return (id.value & kSynthetic) != 0; }

AtomId synthetic_s(const Rational& lambda) {
  const auto num = lambda.get_num().get_ui();
  const auto den = lambda.get_den().get_ui();
  return AtomId{kSynthetic | (num << kDenBits) | den};
}

const std::vector<Rational>& lambda_pool() {
  static const std::vector<Rational> pool = {Rational(0), Rational(1, 4), Rational(1, 2),
                                             Rational(3, 4), Rational(1)};
  return pool;
}

std::vector<AtomDef> default_atoms() {
  return {{"r", 0, Rational(0)},      {"s0", 1, Rational(0)},     {"s1/4", 1, Rational(1, 4)},
          {"s1/2", 1, Rational(1, 2)}, {"s3/4", 1, Rational(3, 4)}, {"s1", 1, Rational(1)}};
}

}  // namespace

void validate(const AtomDef& def) {
  if (def.q < 0) throw DomainError("atom " + def.name + ": Q must be nonnegative");
  if (def.s < 0 || def.s > 1) throw DomainError("atom " + def.name + ": S must lie in [0,1]");
  if (def.q == 0 && def.s != 0) throw DomainError("atom " + def.name + ": Q = 0 requires S = 0");
  if (def.s.get_den() > kMaxDenominator) {
    throw DomainError("atom " + def.name + ": denominator of S exceeds 65536");
  }
}

std::string to_string(Mutation m) {
  switch (m) {
    case Mutation::None: return "none";
    case Mutation::DropQCriterion: return "drop-q-criterion";
    case Mutation::FlipEntropyCriterion: return "flip-entropy-criterion";
    case Mutation::BreakRecordFreeness: return "break-record-freeness";
  }
  return "?";
}

MacroModel::MacroModel() : MacroModel(default_atoms()) {}

MacroModel::MacroModel(std::vector<AtomDef> atoms, Mutation mutation)
    : atoms_(std::move(atoms)), record_(kSyntheticRecord), mechanical_(synthetic_s(Rational(0))),
      mutation_(mutation) {
  for (const auto& a : atoms_) validate(a);
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i].q == 0) {
      record_ = AtomId{i};
      break;
    }
  }
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i].q == 1 && atoms_[i].s == 0) {
      mechanical_ = AtomId{i};
      break;
    }
  }
}

MacroModel MacroModel::with_mutation(Mutation m) const {
  MacroModel out = *this;
  out.mutation_ = m;
  return out;
}

AtomDef MacroModel::atom(AtomId id) const {
  if (is_synthetic(id)) {
    const std::uint64_t den = id.value & kDenMask;
    if (den == 0) return {"r", 0, Rational(0)};
    const std::uint64_t num = (id.value & ~kSynthetic) >> kDenBits;
    Rational lambda(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
    return {"s[" + infothermo::to_string(lambda) + "]", 1, lambda};
  }
  if (id.value >= atoms_.size()) throw UnknownAtom("unknown atom id " + std::to_string(id.value));
  return atoms_[id.value];
}

std::optional<AtomId> MacroModel::find(const std::string& name) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (atoms_[i].name == name) return AtomId{i};
  return std::nullopt;
}

AtomId MacroModel::s_atom(const Rational& lambda) const {
  if (lambda < 0 || lambda > 1) throw DomainError("lambda outside [0,1]");
  if (lambda.get_den() > kMaxDenominator) throw DomainError("lambda denominator exceeds 65536");
  if (lambda == 0) return mechanical_;
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (atoms_[i].q == 1 && atoms_[i].s == lambda) return AtomId{i};
  return synthetic_s(lambda);
}

std::string MacroModel::atom_name(AtomId id) const { return atom(id).name; }

std::int64_t MacroModel::q_value(const StateExpr& a) const {
  std::int64_t q = 0;
  a.for_each_leaf([&](AtomId id) { q += atom(id).q; });
  return q;
}

Rational MacroModel::s_value(const StateExpr& a) const {
  Rational s = 0;
  a.for_each_leaf([&](AtomId id) { s += atom(id).s; });
  return s;
}

std::int64_t MacroModel::arrow_q(const StateExpr& a) const {
  if (mutation_ != Mutation::BreakRecordFreeness) return q_value(a);
  std::int64_t q = 0;
  a.for_each_leaf([&](AtomId id) {
    const auto def = atom(id);
    q += def.q == 0 ? 1 : def.q;
  });
  return q;
}

std::optional<std::int64_t> MacroModel::constant_q(const Eidostate& e, bool for_arrow) const {
  if (e.is_product()) {
    const auto l = constant_q(e.left_factor(), for_arrow);
    if (!l) return std::nullopt;
    const auto r = constant_q(e.right_factor(), for_arrow);
    if (!r) return std::nullopt;
    return *l + *r;
  }
  const auto elems = e.prime_elements();
  const std::int64_t q0 = for_arrow ? arrow_q(elems.front()) : q_value(elems.front());
  for (const auto& x : elems.subspan(1)) {
    if ((for_arrow ? arrow_q(x) : q_value(x)) != q0) return std::nullopt;
  }
  return q0;
}

bool MacroModel::is_uniform(const Eidostate& e) const { return constant_q(e, false).has_value(); }

NUDecomposition MacroModel::nu_decompose(const Eidostate& e) const {
  NUDecomposition out;
  for (auto& f : prime_factor_multiset(e)) {
    (is_uniform(f) ? out.uniform : out.non_uniform).push_back(std::move(f));
  }
  return out;
}

ExactEntropy MacroModel::entropy_exact(const Eidostate& e) const {
  if (!is_uniform(e)) throw DomainError("entropy of a non-uniform eidostate");
  return entropy_unchecked(e);
}

ExactEntropy MacroModel::entropy_unchecked(const Eidostate& e) const {
  if (e.is_product()) return entropy_unchecked(e.left_factor()) + entropy_unchecked(e.right_factor());
  std::vector<Rational> exps;
  exps.reserve(e.prime_elements().size());
  for (const auto& x : e.prime_elements()) exps.push_back(s_value(x));
  return ExactEntropy::of(exps);
}

bool MacroModel::arrow(const Eidostate& a, const Eidostate& b) const {
  // NU split under the (possibly mutated) Q used by the arrow.
  auto split = [&](const Eidostate& e, std::vector<Eidostate>& n, std::vector<Eidostate>& u) {
    for (auto& f : prime_factor_multiset(e)) {
      (constant_q(f, true) ? u : n).push_back(std::move(f));
    }
  };
  std::vector<Eidostate> na, ua, nb, ub;
  split(a, na, ua);
  split(b, nb, ub);
  if (na != nb) return false;

  auto q_of = [&](const std::vector<Eidostate>& u) {
    std::int64_t q = 0;
    for (const auto& f : u) q += *constant_q(f, true);
    return q;
  };
  auto s_of = [&](const std::vector<Eidostate>& u) {
    ExactEntropy s = entropy_unchecked(u.front());
    for (std::size_t i = 1; i < u.size(); ++i) s = s + entropy_unchecked(u[i]);
    return s;
  };

  if (mutation_ != Mutation::DropQCriterion) {
    if (!ua.empty() && !ub.empty()) {
      if (q_of(ua) != q_of(ub)) return false;
    } else if (!ua.empty()) {
      if (q_of(ua) != 0) return false;
    } else if (!ub.empty()) {
      if (q_of(ub) != 0) return false;
    }
  }

  if (ua.empty()) return true;  // either both absent or only U_B, whose entropy is >= 0
  if (ub.empty()) return compare(s_of(ua), ExactEntropy::single(0)) == Ordering::Equal;
  const Ordering c = compare(s_of(ua), s_of(ub));
  if (mutation_ == Mutation::FlipEntropyCriterion) return c != Ordering::Less;
  return c != Ordering::Greater;
}

ExactEntropy MacroModel::state_entropy(const StateExpr& a) const {
  return ExactEntropy::single(s_value(a));
}

std::vector<Rational> MacroModel::components(const StateExpr& a) const {
  return {Rational(q_value(a))};
}

bool MacroModel::is_record(const StateExpr& a) const {
  bool record = true;
  a.for_each_leaf([&](AtomId id) { record = record && atom(id).q == 0; });
  return record;
}

bool MacroModel::is_mechanical(const StateExpr& a) const {
  bool mech = true;
  a.for_each_leaf([&](AtomId id) {
    const auto def = atom(id);
    mech = mech && def.q == 1 && def.s == 0;
  });
  return mech;
}

StateExpr MacroModel::make_record() const { return StateExpr::atom(record_); }

Eidostate MacroModel::make_bit_state() const {
  const StateExpr r = make_record();
  return Eidostate::of({r, r + r});
}

std::optional<StateEquivalence> MacroModel::state_equivalence(const Eidostate& e) const {
  if (!is_uniform(e)) throw DomainError("state equivalence needs a uniform eidostate");
  const std::int64_t q = *constant_q(e, false);
  const ExactEntropy sigma = entropy_exact(e);

  // n = smallest integer strictly greater than sigma.
  BigInt n = floor_of(sigma.max_exponent()) + 1;
  while (compare(sigma, ExactEntropy::single(Rational(n))) != Ordering::Less) n += 1;
  const std::size_t nn = n.get_ui();

  StateEquivalence out{q == 0 ? make_record() : n_copies(StateExpr::atom(mechanical_), q),
                       n_copies(StateExpr::atom(mechanical_), nn), make_record()};

  const auto exact = sigma.rational_value();
  Rational lambda;
  if (exact && Rational(*exact / Rational(n)).get_den() <= kMaxDenominator) {
    lambda = *exact / Rational(n);
  } else {
    // Round sigma/n up to the 2^-16 grid so that E + x -> e + y still holds.
    const Interval iv = sigma.bounds(256);
    BigReal scaled(256);
    mpfr_mul_2ui(scaled.get(), iv.hi.get(), 16, MPFR_RNDU);
    BigReal nq(Rational(n), 256);
    mpfr_div(scaled.get(), scaled.get(), nq.get(), MPFR_RNDU);
    mpfr_ceil(scaled.get(), scaled.get());
    lambda = Rational(BigInt(static_cast<unsigned long>(mpfr_get_ui(scaled.get(), MPFR_RNDU))),
                      BigInt(static_cast<unsigned long>(kMaxDenominator)));
    lambda.canonicalize();
    if (lambda > 1) lambda = 1;
    out.approximate = true;
    out.tolerance = static_cast<double>(nn) / static_cast<double>(kMaxDenominator);
  }
  out.y = n_copies(StateExpr::atom(s_atom(lambda)), nn);
  return out;
}

std::vector<StateExpr> MacroModel::mechanical_family(std::size_t max_count) const {
  std::vector<StateExpr> out;
  const StateExpr m = StateExpr::atom(mechanical_);
  for (std::size_t k = 1; k <= max_count; ++k) out.push_back(n_copies(m, k));
  return out;
}

Rational MacroModel::random_lambda(Rng& rng) const {
  const auto& pool = lambda_pool();
  if (std::uniform_int_distribution<int>(0, 5)(rng) != 0) {
    return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
  }
  const long den = std::uniform_int_distribution<long>(2, 16)(rng);
  const long num = std::uniform_int_distribution<long>(0, den)(rng);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

StateExpr MacroModel::random_tree(Rng& rng, std::vector<StateExpr> leaves,
                                  std::size_t max_depth) const {
  std::shuffle(leaves.begin(), leaves.end(), rng);
  // Random binary bracketing; falls back to balanced splits when the depth
  // budget gets tight.
  std::function<StateExpr(std::size_t, std::size_t, std::size_t)> build =
      [&](std::size_t lo, std::size_t hi, std::size_t depth) -> StateExpr {
    const std::size_t k = hi - lo;
    if (k == 1) return leaves[lo];
    std::size_t cut;
    if (depth <= ceil_log2(BigInt(static_cast<unsigned long>(k)))) {
      cut = lo + k / 2;
    } else {
      cut = std::uniform_int_distribution<std::size_t>(lo + 1, hi - 1)(rng);
    }
    const std::size_t next = depth > 0 ? depth - 1 : 0;
    return StateExpr::pair(build(lo, cut, next), build(cut, hi, next));
  };
  return build(0, leaves.size(), max_depth);
}

StateExpr MacroModel::random_state(Rng& rng, std::size_t max_depth) const {
  const std::size_t max_leaves = std::size_t{1} << std::min<std::size_t>(max_depth, 2);
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, max_leaves)(rng);
  std::vector<StateExpr> leaves;
  for (std::size_t i = 0; i < k; ++i) {
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
      leaves.push_back(make_record());
    } else {
      leaves.push_back(StateExpr::atom(s_atom(random_lambda(rng))));
    }
  }
  return random_tree(rng, std::move(leaves), max_depth);
}

StateExpr MacroModel::random_state_like(Rng& rng, const StateExpr& like,
                                        std::size_t max_depth) const {
  const std::int64_t q = q_value(like);
  std::vector<StateExpr> leaves;
  for (std::int64_t i = 0; i < q; ++i) leaves.push_back(StateExpr::atom(s_atom(random_lambda(rng))));
  const int records = std::uniform_int_distribution<int>(q == 0 ? 1 : 0, 2)(rng);
  for (int i = 0; i < records; ++i) leaves.push_back(make_record());
  return random_tree(rng, std::move(leaves), max_depth);
}

StateExpr MacroModel::random_record(Rng& rng, std::size_t max_depth) const {
  const std::size_t max_leaves = std::size_t{1} << std::min<std::size_t>(max_depth, 2);
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, max_leaves)(rng);
  return random_tree(rng, std::vector<StateExpr>(k, make_record()), max_depth);
}

}  // namespace infothermo::macro
