#pragma once

#include <mpfr.h>

#include <string>

#include "infothermo/exact/rational.hpp"

namespace infothermo {

/// Owning wrapper around an MPFR number. Every operation takes its rounding
/// mode explicitly where direction matters; the arithmetic operators round to
/// nearest at the precision of the left operand.
class BigReal {
 public:
  explicit BigReal(mpfr_prec_t precision = 128);
  BigReal(const Rational& q, mpfr_prec_t precision, mpfr_rnd_t rnd = MPFR_RNDN);
  static BigReal from_double(double v, mpfr_prec_t precision);
  static BigReal neg_infinity(mpfr_prec_t precision);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  mpfr_prec_t precision() const noexcept;
  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }

  bool is_inf() const noexcept;
  bool is_zero() const noexcept;
  int sign() const noexcept;
  double to_double() const;

  /// Scientific-free decimal rendering with `digits` significant digits,
  /// e.g. `1.58496250072115618145373894395`.
  std::string to_decimal(int digits) const;

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  BigReal operator-() const;
  BigReal& operator+=(const BigReal& b);

  friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.value_, b.value_); }
  friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.value_, b.value_); }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.value_, b.value_); }

 private:
  mpfr_t value_;
};

BigReal exp2(const BigReal& x, mpfr_rnd_t rnd = MPFR_RNDN);
BigReal log2(const BigReal& x, mpfr_rnd_t rnd = MPFR_RNDN);
BigReal abs(const BigReal& x);

/// Closed interval [lo, hi] with lo <= hi.
struct Interval {
  BigReal lo;
  BigReal hi;

  BigReal width() const { return hi - lo; }
  BigReal midpoint() const;
  bool contains(const BigReal& x) const { return lo <= x && x <= hi; }
};

}  // namespace infothermo
