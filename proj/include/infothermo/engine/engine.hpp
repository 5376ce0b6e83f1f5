#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "infothermo/core/model_oracle.hpp"
#include "infothermo/core/process.hpp"
#include "infothermo/exact/bigreal.hpp"

namespace infothermo::engine {

inline constexpr int kDefaultDigits = 30;
/// Working precision for the entropy decomposition checks.
inline constexpr mpfr_prec_t kWorkingPrecision = 128;
/// Largest prime factor checked pairwise for uniformity or enumerated for probabilities.
inline constexpr std::size_t kEnumerationCap = 4096;

ProcessType classify(const Process& p, const ModelOracle& oracle);

/// Pairwise possibility among the elements of every prime factor.
bool is_uniform(const Eidostate& e, const ModelOracle& oracle);

/// log2 of the sum of 2^S(e) over E, built factor by factor. Throws
/// DomainError when E is not uniform.
ExactEntropy entropy_uniform(const Eidostate& e, const ModelOracle& oracle);

/// A probability kept as an outward-rounded enclosure, plus its exact value
/// when every exponent involved is an integer.
struct Probability {
  Interval enclosure;
  std::optional<Rational> exact;

  BigReal value() const { return enclosure.midpoint(); }
  std::string to_decimal(int digits = kDefaultDigits) const;
};

/// P(a|E) = 2^{S(a) - S(E)} for a in E, 0 otherwise.
Probability entropic_probability(const StateExpr& a, const Eidostate& e, const ModelOracle& oracle,
                                 int digits = kDefaultDigits);

/// P(B | A and E). Throws DomainError when A misses E.
Probability conditional_probability(const std::vector<StateExpr>& b, const std::vector<StateExpr>& a,
                                    const Eidostate& e, const ModelOracle& oracle,
                                    int digits = kDefaultDigits);

struct ProbabilityReport {
  std::vector<std::pair<StateExpr, Probability>> support;
  BigReal entropy_total;
  BigReal mean_state_entropy;
  BigReal shannon_term;
  /// |S(E) - (<S> + H)|.
  BigReal defect;
  BigReal probability_sum;
  int digits = kDefaultDigits;
};

/// The split S(E) = <S(a)> + H(P) under the entropic distribution.
ProbabilityReport shannon_decomposition(const Eidostate& e, const ModelOracle& oracle,
                                        int digits = kDefaultDigits,
                                        mpfr_prec_t precision = kWorkingPrecision);

/// S(E) - (<S>_P + H(P)) for a distribution P on E's elements in canonical
/// order. Throws DomainError if P is not a distribution.
BigReal gibbs_gap(const Eidostate& e, const std::vector<double>& p, const ModelOracle& oracle,
                  mpfr_prec_t precision = kWorkingPrecision);

struct IrreversibilityEstimate {
  Rational lower;
  Rational upper;
  int q_max = 0;
  /// False when some search hit its cap; the bracket is then still valid but may be loose.
  bool complete = true;
  /// Number of arrow decisions made.
  std::size_t arrow_calls = 0;
};

/// Brackets the irreversibility of <a, b> by comparing q copies of it with
/// p bit processes, using the arrow alone. Throws DomainError if the process
/// is impossible.
IrreversibilityEstimate irreversibility_estimate(const StateExpr& a, const StateExpr& b, int q_max,
                                                 const ModelOracle& oracle);

/// The first n elements of the k-fold bit state, k = ceil(log2 n).
Eidostate information_state(std::size_t n, const ModelOracle& oracle);

struct InformationResult {
  enum class Status { Found, Blocked, NotFoundWithinBound };
  Status status = Status::NotFoundWithinBound;
  std::size_t n = 0;
};

std::string to_string(InformationResult::Status s);

/// Smallest n <= n_max with A -> B + J_n. `Blocked` when the components of
/// A and B differ, which no information state can repair.
InformationResult min_information_to_transform(const Eidostate& a, const Eidostate& b,
                                               std::size_t n_max, const ModelOracle& oracle);

bool demonically_possible(const StateExpr& a, const StateExpr& b, std::size_t n_max,
                          const ModelOracle& oracle);

struct LandauerVerdict {
  /// Whether a + I_b -> b holds at all.
  bool applicable = false;
  /// S(b) >= S(a) + 1 (only meaningful when applicable).
  bool holds = true;
  /// S(b) - S(a) - 1.
  std::optional<Rational> exact_margin;
  BigReal margin;
};

LandauerVerdict landauer_check(const StateExpr& a, const StateExpr& b, const ModelOracle& oracle);

struct InfoBalance {
  bool applicable = false;
  BigReal delta_mean_entropy;
  BigReal delta_shannon;
  /// Delta<S> >= -Delta H, up to `tolerance`.
  bool holds = true;
  double tolerance = 1e-12;
};

InfoBalance info_balance_check(const Eidostate& a, const Eidostate& b, const ModelOracle& oracle);

Process process_sum(const Process& p, const Process& q);
Process process_negate(const Process& p);
/// Bounded search for x, y with A + x ~ C + y and B + x ~ D + y, trying direct
/// similarity, then every candidate and every pair of candidates as pads.
/// True is conclusive; false only means no witness was found.
bool process_equivalent(const Process& p, const Process& q, const std::vector<StateExpr>& pads);

/// Searches mechanical l, m from the oracle's family (plus no padding) with a + l -> b + m.
bool adiabatically_accessible(const StateExpr& a, const StateExpr& b, const ModelOracle& oracle,
                              std::size_t family_size = 8);

}  // namespace infothermo::engine
