#include "infothermo/exact/bigreal.hpp"

#include <algorithm>
#include <memory>

namespace infothermo {

BigReal::BigReal(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(const Rational& q, mpfr_prec_t precision, mpfr_rnd_t rnd) {
  mpfr_init2(value_, precision);
  mpfr_set_q(value_, q.get_mpq_t(), rnd);
}

BigReal BigReal::from_double(double v, mpfr_prec_t precision) {
  BigReal out(precision);
  mpfr_set_d(out.value_, v, MPFR_RNDN);
  return out;
}

BigReal BigReal::neg_infinity(mpfr_prec_t precision) {
  BigReal out(precision);
  mpfr_set_inf(out.value_, -1);
  return out;
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

mpfr_prec_t BigReal::precision() const noexcept { return mpfr_get_prec(value_); }
bool BigReal::is_inf() const noexcept { return mpfr_inf_p(value_) != 0; }
bool BigReal::is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
int BigReal::sign() const noexcept { return mpfr_sgn(value_); }
double BigReal::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string BigReal::to_decimal(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(value_)) return "0";
  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(digits), value_, MPFR_RNDN),
      mpfr_free_str);
  std::string mant(raw.get());
  std::string sign;
  if (mant.front() == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  // value = 0.mant * 10^exp10
  const auto len = static_cast<mpfr_exp_t>(mant.size());
  std::string out;
  if (exp10 <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-exp10), '0') + mant;
  } else if (exp10 >= len) {
    out = mant + std::string(static_cast<std::size_t>(exp10 - len), '0');
  } else {
    out = mant.substr(0, static_cast<std::size_t>(exp10)) + "." +
          mant.substr(static_cast<std::size_t>(exp10));
  }
  return sign + out;
}

namespace {

mpfr_prec_t wider(const BigReal& a, const BigReal& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal out(wider(a, b));
  mpfr_add(out.get(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal out(wider(a, b));
  mpfr_sub(out.get(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal out(wider(a, b));
  mpfr_mul(out.get(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal out(wider(a, b));
  mpfr_div(out.get(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

BigReal BigReal::operator-() const {
  BigReal out(precision());
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

BigReal& BigReal::operator+=(const BigReal& b) {
  mpfr_add(value_, value_, b.value_, MPFR_RNDN);
  return *this;
}

BigReal exp2(const BigReal& x, mpfr_rnd_t rnd) {
  BigReal out(x.precision());
  mpfr_exp2(out.get(), x.get(), rnd);
  return out;
}

BigReal log2(const BigReal& x, mpfr_rnd_t rnd) {
  BigReal out(x.precision());
  mpfr_log2(out.get(), x.get(), rnd);
  return out;
}

BigReal abs(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_abs(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigReal Interval::midpoint() const {
  BigReal out(std::max(lo.precision(), hi.precision()) + 1);
  mpfr_add(out.get(), lo.get(), hi.get(), MPFR_RNDN);
  mpfr_div_2ui(out.get(), out.get(), 1, MPFR_RNDN);
  return out;
}

}  // namespace infothermo
