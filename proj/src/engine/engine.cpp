#include "infothermo/engine/engine.hpp"

#include <algorithm>
#include <functional>

#include "infothermo/core/errors.hpp"

namespace infothermo::engine {

namespace {

mpfr_prec_t precision_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(digits * 3.33) + 64;
}

// 2^k for an integer k of either sign.
Rational pow2(const BigInt& k) {
  Rational out(1);
  const unsigned long e = BigInt(abs(k)).get_ui();
  if (k >= 0) {
    mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), e);
  } else {
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), e);
  }
  return out;
}

// Sum of 2^{x - offset} over the exponents, when every x - offset is an integer.
std::optional<Rational> exact_power_sum(const ExactEntropy& s, const Rational& offset) {
  Rational sum(0);
  for (const auto& x : s.exponents()) {
    const Rational shifted = x - offset;
    if (shifted.get_den() != 1) return std::nullopt;
    sum += pow2(shifted.get_num());
  }
  return sum;
}

// Enclosure of 2^{num - den} from enclosures of both entropies.
Probability ratio(const ExactEntropy& num, const ExactEntropy& den, int digits) {
  const mpfr_prec_t prec = precision_for_digits(digits);
  const Interval in = num.bounds(prec);
  const Interval id = den.bounds(prec);
  Probability p{{BigReal(prec), BigReal(prec)}, std::nullopt};
  mpfr_sub(p.enclosure.lo.get(), in.lo.get(), id.hi.get(), MPFR_RNDD);
  mpfr_exp2(p.enclosure.lo.get(), p.enclosure.lo.get(), MPFR_RNDD);
  mpfr_sub(p.enclosure.hi.get(), in.hi.get(), id.lo.get(), MPFR_RNDU);
  mpfr_exp2(p.enclosure.hi.get(), p.enclosure.hi.get(), MPFR_RNDU);
  // Exponents sharing one fractional part f have a common factor 2^f that cancels.
  const Rational offset = den.exponents().front();
  const auto a = exact_power_sum(num, offset);
  const auto b = exact_power_sum(den, offset);
  if (a && b) {
    p.exact = Rational(*a / *b);
  } else if (num == den) {
    p.exact = Rational(1);
  }
  return p;
}

Probability zero_probability(int digits) {
  const mpfr_prec_t prec = precision_for_digits(digits);
  return {{BigReal(prec), BigReal(prec)}, Rational(0)};
}

std::optional<ExactEntropy> entropy_of_states(const std::vector<StateExpr>& states,
                                              const ModelOracle& oracle) {
  std::optional<ExactEntropy> out;
  for (const auto& x : states) {
    const ExactEntropy s = oracle.state_entropy(x);
    out = out ? merge_union(*out, s) : s;
  }
  return out;
}

ExactEntropy entropy_factorwise(const Eidostate& e, const ModelOracle& oracle) {
  if (e.is_product()) {
    return entropy_factorwise(e.left_factor(), oracle) + entropy_factorwise(e.right_factor(), oracle);
  }
  const auto elems = e.prime_elements();
  return *entropy_of_states({elems.begin(), elems.end()}, oracle);
}

Eidostate copies(const StateExpr& a, int q) { return Eidostate::singleton(n_copies(a, q)); }

}  // namespace

ProcessType classify(const Process& p, const ModelOracle& oracle) {
  const bool fwd = oracle.arrow(p.initial, p.final_state);
  const bool back = oracle.arrow(p.final_state, p.initial);
  if (fwd && back) return ProcessType::Reversible;
  if (fwd) return ProcessType::NaturalIrreversible;
  if (back) return ProcessType::AntinaturalIrreversible;
  return ProcessType::Impossible;
}

bool is_uniform(const Eidostate& e, const ModelOracle& oracle) {
  for (const auto& f : prime_factor_multiset(e)) {
    const auto elems = f.elements(kEnumerationCap);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = i + 1; j < elems.size(); ++j) {
        if (!oracle.arrow(elems[i], elems[j]) && !oracle.arrow(elems[j], elems[i])) return false;
      }
    }
  }
  return true;
}

ExactEntropy entropy_uniform(const Eidostate& e, const ModelOracle& oracle) {
  if (!is_uniform(e, oracle)) throw DomainError("entropy is only defined for uniform eidostates");
  return entropy_factorwise(e, oracle);
}

std::string Probability::to_decimal(int digits) const {
  if (exact) {
    BigReal v(*exact, precision_for_digits(digits));
    return v.to_decimal(digits);
  }
  return value().to_decimal(digits);
}

Probability entropic_probability(const StateExpr& a, const Eidostate& e, const ModelOracle& oracle,
                                 int digits) {
  const ExactEntropy se = entropy_uniform(e, oracle);
  if (!e.contains(a)) return zero_probability(digits);
  return ratio(oracle.state_entropy(a), se, digits);
}

Probability conditional_probability(const std::vector<StateExpr>& b, const std::vector<StateExpr>& a,
                                    const Eidostate& e, const ModelOracle& oracle, int digits) {
  if (!is_uniform(e, oracle)) throw DomainError("conditioning eidostate is not uniform");
  std::vector<StateExpr> ae;
  for (const auto& x : a)
    if (e.contains(x) && std::find(ae.begin(), ae.end(), x) == ae.end()) ae.push_back(x);
  if (ae.empty()) throw DomainError("conditioning event does not meet the eidostate");
  std::vector<StateExpr> bae;
  for (const auto& x : ae)
    if (std::find(b.begin(), b.end(), x) != b.end()) bae.push_back(x);
  // S of the empty set is -infinity, so the probability is exactly 0.
  if (bae.empty()) return zero_probability(digits);
  return ratio(*entropy_of_states(bae, oracle), *entropy_of_states(ae, oracle), digits);
}

ProbabilityReport shannon_decomposition(const Eidostate& e, const ModelOracle& oracle, int digits,
                                        mpfr_prec_t precision) {
  const ExactEntropy se = entropy_uniform(e, oracle);
  const auto elems = e.elements(kEnumerationCap);
  ProbabilityReport rep{{}, se.approx(precision), BigReal(precision), BigReal(precision),
                        BigReal(precision), BigReal(precision), digits};
  for (const auto& x : elems) {
    const ExactEntropy sa = oracle.state_entropy(x);
    const BigReal sx = sa.approx(precision);
    const BigReal p = exp2(sx - rep.entropy_total);
    rep.mean_state_entropy += p * sx;
    rep.shannon_term += -(p * log2(p));
    rep.probability_sum += p;
    rep.support.emplace_back(x, ratio(sa, se, digits));
  }
  rep.defect = abs(rep.entropy_total - rep.mean_state_entropy - rep.shannon_term);
  return rep;
}

BigReal gibbs_gap(const Eidostate& e, const std::vector<double>& p, const ModelOracle& oracle,
                  mpfr_prec_t precision) {
  const ExactEntropy se = entropy_uniform(e, oracle);
  const auto elems = e.elements(kEnumerationCap);
  if (p.size() != elems.size()) throw DomainError("distribution size does not match the eidostate");
  double total = 0;
  for (double v : p) {
    if (!(v >= 0.0)) throw DomainError("negative or NaN probability");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-12) throw DomainError("probabilities do not sum to 1");

  BigReal gap = se.approx(precision);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (p[i] == 0.0) continue;
    const BigReal pi = BigReal::from_double(p[i], precision);
    const BigReal sx = oracle.state_entropy(elems[i]).approx(precision);
    gap = gap - pi * sx + pi * log2(pi);
  }
  return gap;
}

namespace {

// Largest p in [-cap, cap] with pred(p), for pred true below some threshold
// and false above it. Gallops out from `start`, then bisects.
std::optional<long> max_true(const std::function<bool(long)>& pred, long start, long cap,
                             bool& complete) {
  long lo;
  long hi;
  if (pred(start)) {
    lo = start;
    long step = 1;
    for (;;) {
      if (lo == cap) {
        complete = false;
        return lo;
      }
      const long probe = std::min(cap, lo + step);
      if (!pred(probe)) {
        hi = probe;
        break;
      }
      lo = probe;
      step *= 2;
    }
  } else {
    hi = start;
    long step = 1;
    for (;;) {
      if (hi == -cap) {
        complete = false;
        return std::nullopt;
      }
      const long probe = std::max(-cap, hi - step);
      if (pred(probe)) {
        lo = probe;
        break;
      }
      hi = probe;
      step *= 2;
    }
  }
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    (pred(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace

IrreversibilityEstimate irreversibility_estimate(const StateExpr& a, const StateExpr& b, int q_max,
                                                 const ModelOracle& oracle) {
  if (q_max < 1) throw DomainError("qmax must be positive");
  if (!oracle.arrow(a, b) && !oracle.arrow(b, a)) {
    throw DomainError("irreversibility is only defined for possible processes");
  }
  const Eidostate ib = oracle.make_bit_state();
  const StateExpr r = oracle.make_record();
  IrreversibilityEstimate est;
  est.q_max = q_max;

  auto bits = [&](long p) { return n_copies(ib, static_cast<std::size_t>(p)); };
  auto recs = [&](long p) { return Eidostate::singleton(n_copies(r, static_cast<std::size_t>(p))); };

  // q alpha -> p Theta_b, i.e. qa + p I_b -> qb + p r (bits on the other side for p < 0).
  auto forward = [&](int q, long p) {
    ++est.arrow_calls;
    const Eidostate qa = copies(a, q);
    const Eidostate qb = copies(b, q);
    if (p == 0) return oracle.arrow(qa, qb);
    if (p > 0) return oracle.arrow(qa + bits(p), qb + recs(p));
    return oracle.arrow(qa + recs(-p), qb + bits(-p));
  };
  // p Theta_b -> q alpha, i.e. qb + p r -> qa + p I_b.
  auto backward = [&](int q, long p) {
    ++est.arrow_calls;
    const Eidostate qa = copies(a, q);
    const Eidostate qb = copies(b, q);
    if (p == 0) return oracle.arrow(qb, qa);
    if (p > 0) return oracle.arrow(qb + recs(p), qa + bits(p));
    return oracle.arrow(qb + bits(-p), qa + recs(-p));
  };

  const long span = 4 * static_cast<long>(a.leaf_count() + b.leaf_count()) + 8;
  bool have_lower = false;
  bool have_upper = false;
  for (int q = 1; q <= q_max; ++q) {
    const long cap = static_cast<long>(q) * span;
    const auto l = max_true([&](long p) { return forward(q, p); }, 0, cap, est.complete);
    if (l) {
      const Rational v(*l, q);
      if (!have_lower || v > est.lower) est.lower = v;
      have_lower = true;
    }
    // Smallest p with backward(q, p): mirror into a "largest true" search.
    const long start = l ? -*l : 0;
    const auto u = max_true([&](long p) { return backward(q, -p); }, start, cap, est.complete);
    if (u) {
      const Rational v(-*u, q);
      if (!have_upper || v < est.upper) est.upper = v;
      have_upper = true;
    }
  }
  if (!have_lower || !have_upper) {
    est.complete = false;
    if (!have_lower) est.lower = est.upper;
    if (!have_upper) est.upper = est.lower;
  }
  est.lower.canonicalize();
  est.upper.canonicalize();
  return est;
}

Eidostate information_state(std::size_t n, const ModelOracle& oracle) {
  if (n == 0) throw DomainError("an information state has at least one element");
  if (n == 1) return Eidostate::singleton(oracle.make_record());
  const unsigned k = ceil_log2(BigInt(static_cast<unsigned long>(n)));
  const Eidostate full = n_copies(oracle.make_bit_state(), k);
  if (full.size() == n) return full;
  auto elems = full.elements();
  elems.erase(elems.begin() + static_cast<std::ptrdiff_t>(n), elems.end());
  return Eidostate::of(std::move(elems));
}

std::string to_string(InformationResult::Status s) {
  switch (s) {
    case InformationResult::Status::Found: return "found";
    case InformationResult::Status::Blocked: return "blocked";
    case InformationResult::Status::NotFoundWithinBound: return "not found within bound";
  }
  return "?";
}

InformationResult min_information_to_transform(const Eidostate& a, const Eidostate& b,
                                               std::size_t n_max, const ModelOracle& oracle) {
  if (n_max < 1) throw DomainError("nmax must be positive");
  auto ok = [&](std::size_t n) { return oracle.arrow(a, b + information_state(n, oracle)); };
  if (!ok(n_max)) {
    // An information state adds no content, so mismatched components can never be repaired.
    bool any_match = false;
    const auto ea = a.elements(64);
    const auto eb = b.elements(64);
    for (const auto& x : ea) {
      for (const auto& y : eb) any_match = any_match || oracle.components(x) == oracle.components(y);
    }
    return {any_match ? InformationResult::Status::NotFoundWithinBound
                      : InformationResult::Status::Blocked,
            0};
  }
  std::size_t lo = 0;  // false (sentinel)
  std::size_t hi = n_max;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    (ok(mid) ? hi : lo) = mid;
  }
  return {InformationResult::Status::Found, hi};
}

bool demonically_possible(const StateExpr& a, const StateExpr& b, std::size_t n_max,
                          const ModelOracle& oracle) {
  const Eidostate ea = Eidostate::singleton(a);
  const Eidostate eb = Eidostate::singleton(b);
  using S = InformationResult::Status;
  return min_information_to_transform(ea, eb, n_max, oracle).status == S::Found ||
         min_information_to_transform(eb, ea, n_max, oracle).status == S::Found;
}

LandauerVerdict landauer_check(const StateExpr& a, const StateExpr& b, const ModelOracle& oracle) {
  LandauerVerdict v;
  const ExactEntropy sa = oracle.state_entropy(a);
  const ExactEntropy sb = oracle.state_entropy(b);
  const auto qa = sa.rational_value();
  const auto qb = sb.rational_value();
  if (qa && qb) v.exact_margin = Rational(*qb - *qa - 1);
  v.margin = sb.approx(kWorkingPrecision) - sa.approx(kWorkingPrecision) -
             BigReal(Rational(1), kWorkingPrecision);
  v.applicable = oracle.arrow(Eidostate::singleton(a) + oracle.make_bit_state(), Eidostate::singleton(b));
  if (v.applicable) v.holds = compare(sb, sa.shifted(1)) != Ordering::Less;
  return v;
}

InfoBalance info_balance_check(const Eidostate& a, const Eidostate& b, const ModelOracle& oracle) {
  InfoBalance v;
  v.applicable = oracle.arrow(a, b);
  const ProbabilityReport ra = shannon_decomposition(a, oracle);
  const ProbabilityReport rb = shannon_decomposition(b, oracle);
  v.delta_mean_entropy = rb.mean_state_entropy - ra.mean_state_entropy;
  v.delta_shannon = rb.shannon_term - ra.shannon_term;
  if (v.applicable) {
    v.holds = (v.delta_mean_entropy + v.delta_shannon).to_double() >= -v.tolerance;
  }
  return v;
}

Process process_sum(const Process& p, const Process& q) {
  return {p.initial + q.initial, p.final_state + q.final_state};
}

Process process_negate(const Process& p) { return {p.final_state, p.initial}; }

bool process_equivalent(const Process& p, const Process& q, const std::vector<StateExpr>& pads) {
  if (similar(p.initial, q.initial) && similar(p.final_state, q.final_state)) return true;
  std::vector<Eidostate> options;
  for (const auto& x : pads) options.push_back(Eidostate::singleton(x));
  for (const auto& x : pads)
    for (const auto& y : pads) options.push_back(Eidostate::singleton(x + y));
  for (const auto& x : options) {
    for (const auto& y : options) {
      if (similar(p.initial + x, q.initial + y) && similar(p.final_state + x, q.final_state + y)) {
        return true;
      }
    }
  }
  return false;
}

bool adiabatically_accessible(const StateExpr& a, const StateExpr& b, const ModelOracle& oracle,
                              std::size_t family_size) {
  std::vector<std::optional<StateExpr>> pads{std::nullopt};
  for (auto& m : oracle.mechanical_family(family_size)) pads.emplace_back(std::move(m));
  for (const auto& l : pads) {
    const StateExpr left = l ? a + *l : a;
    for (const auto& m : pads) {
      if (oracle.arrow(left, m ? b + *m : b)) return true;
    }
  }
  return false;
}

}  // namespace infothermo::engine
