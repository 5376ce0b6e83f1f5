#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "infothermo/exact/bigreal.hpp"
#include "infothermo/exact/rational.hpp"

namespace infothermo {

/// Precision used for the first interval comparison attempt.
inline constexpr mpfr_prec_t kInitialComparePrecision = 128;
/// Default cap; interval comparison doubles precision until it reaches this.
inline constexpr mpfr_prec_t kDefaultPrecisionCap = 4096;

/// Process-wide precision cap used when none is passed explicitly.
mpfr_prec_t default_precision_cap();
void set_default_precision_cap(mpfr_prec_t bits);

enum class Ordering { Less, Equal, Greater };

/// The real number log2(sum_i 2^{x_i}) for a nonempty multiset of rationals.
///
/// Kept in merged form: two equal exponents x, x are replaced by x + 1 until
/// all exponents are distinct. Since the numbers 2^{j/d}, 0 <= j < d, are
/// linearly independent over the rationals, the merged form is unique for a
/// given real value, so comparing merged forms decides equality exactly and
/// interval arithmetic is only ever needed to order distinct values.
class ExactEntropy {
 public:
  /// Throws DomainError for an empty multiset.
  static ExactEntropy of(std::span<const Rational> exponents);
  static ExactEntropy of(std::initializer_list<Rational> exponents);
  static ExactEntropy single(const Rational& x);
  /// `count` copies of x, i.e. x + log2(count). `count` >= 1.
  static ExactEntropy repeated(const Rational& x, const BigInt& count);
  /// log2 of a positive integer, e.g. the entropy of an n-element information state.
  static ExactEntropy log2_of(const BigInt& n);

  /// Distinct exponents, ascending.
  std::span<const Rational> exponents() const noexcept { return exps_; }
  bool is_rational() const noexcept { return exps_.size() == 1; }
  /// The value when it is rational (a single merged exponent).
  std::optional<Rational> rational_value() const;
  const Rational& max_exponent() const { return exps_.back(); }

  /// Entropy of a Cartesian product: the sumset of exponents.
  friend ExactEntropy operator+(const ExactEntropy& a, const ExactEntropy& b);
  /// Adds a rational to the value.
  ExactEntropy shifted(const Rational& delta) const;
  /// Entropy of a disjoint union: the multiset union of exponents.
  friend ExactEntropy merge_union(const ExactEntropy& a, const ExactEntropy& b);

  /// Outward-rounded enclosure of the value at the given binary precision.
  Interval bounds(mpfr_prec_t precision) const;
  /// Round-to-nearest value at the given precision.
  BigReal approx(mpfr_prec_t precision) const;
  double to_double() const;
  std::string to_decimal(int digits) const;

  /// Exponents written as `{0, 1/2}`.
  std::string exact_string() const;

  friend bool operator==(const ExactEntropy&, const ExactEntropy&) = default;

 private:
  explicit ExactEntropy(std::vector<Rational> merged) : exps_(std::move(merged)) {}
  std::vector<Rational> exps_;
};

/// Decides the order of two entropies. Equal merged forms are Equal, two
/// rational values are compared exactly, anything else by interval
/// arithmetic from 128 bits doubling up to `cap`. Throws PrecisionExhausted
/// if the intervals still overlap at the cap.
Ordering compare(const ExactEntropy& a, const ExactEntropy& b, mpfr_prec_t cap);
Ordering compare(const ExactEntropy& a, const ExactEntropy& b);

inline bool less_equal(const ExactEntropy& a, const ExactEntropy& b) {
  return compare(a, b) != Ordering::Greater;
}

std::string to_string(Ordering o);

}  // namespace infothermo
