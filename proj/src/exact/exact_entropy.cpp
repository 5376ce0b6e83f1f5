#include "infothermo/exact/exact_entropy.hpp"

#include <algorithm>
#include <atomic>
#include <map>

#include "infothermo/core/errors.hpp"

namespace infothermo {

namespace {

std::atomic<mpfr_prec_t> g_precision_cap{kDefaultPrecisionCap};

using CountMap = std::map<Rational, BigInt>;

// Binary carry: c copies of x become (c mod 2) copies of x and c/2 copies of x + 1.
std::vector<Rational> merge(CountMap counts) {
  for (auto it = counts.begin(); it != counts.end(); ++it) {
    if (it->second >= 2) {
      counts[it->first + 1] += it->second / 2;
      it->second %= 2;
    }
  }
  std::vector<Rational> out;
  for (const auto& [x, c] : counts)
    if (c == 1) out.push_back(x);
  return out;
}

// Outward bound for log2(sum 2^{x_i}), rounding every step in direction `rnd`.
BigReal bound(std::span<const Rational> exps, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  const Rational& m = exps.back();
  BigReal sum(prec);
  BigReal term(prec);
  for (const auto& x : exps) {
    const Rational t = x - m;
    mpfr_set_q(term.get(), t.get_mpq_t(), rnd);
    mpfr_exp2(term.get(), term.get(), rnd);
    mpfr_add(sum.get(), sum.get(), term.get(), rnd);
  }
  mpfr_log2(sum.get(), sum.get(), rnd);
  BigReal shift(m, prec, rnd);
  mpfr_add(sum.get(), sum.get(), shift.get(), rnd);
  return sum;
}

}  // namespace

mpfr_prec_t default_precision_cap() { return g_precision_cap.load(std::memory_order_relaxed); }

void set_default_precision_cap(mpfr_prec_t bits) {
  if (bits < MPFR_PREC_MIN) throw DomainError("precision cap too small");
  g_precision_cap.store(bits, std::memory_order_relaxed);
}

ExactEntropy ExactEntropy::of(std::span<const Rational> exponents) {
  if (exponents.empty()) throw DomainError("entropy of an empty multiset");
  CountMap counts;
  for (const auto& x : exponents) counts[x] += 1;
  return ExactEntropy(merge(std::move(counts)));
}

ExactEntropy ExactEntropy::of(std::initializer_list<Rational> exponents) {
  return of(std::span<const Rational>(exponents.begin(), exponents.size()));
}

ExactEntropy ExactEntropy::single(const Rational& x) { return ExactEntropy({x}); }

ExactEntropy ExactEntropy::repeated(const Rational& x, const BigInt& count) {
  if (count < 1) throw DomainError("repeated() needs a positive count");
  return ExactEntropy(merge(CountMap{{x, count}}));
}

ExactEntropy ExactEntropy::log2_of(const BigInt& n) { return repeated(Rational(0), n); }

std::optional<Rational> ExactEntropy::rational_value() const {
  if (!is_rational()) return std::nullopt;
  return exps_.front();
}

ExactEntropy operator+(const ExactEntropy& a, const ExactEntropy& b) {
  if (a.is_rational()) return b.shifted(a.exps_.front());
  if (b.is_rational()) return a.shifted(b.exps_.front());
  CountMap counts;
  for (const auto& x : a.exps_)
    for (const auto& y : b.exps_) counts[x + y] += 1;
  return ExactEntropy(merge(std::move(counts)));
}

ExactEntropy ExactEntropy::shifted(const Rational& delta) const {
  std::vector<Rational> out = exps_;
  for (auto& x : out) x += delta;
  return ExactEntropy(std::move(out));
}

ExactEntropy merge_union(const ExactEntropy& a, const ExactEntropy& b) {
  CountMap counts;
  for (const auto& x : a.exps_) counts[x] += 1;
  for (const auto& x : b.exps_) counts[x] += 1;
  return ExactEntropy(merge(std::move(counts)));
}

Interval ExactEntropy::bounds(mpfr_prec_t precision) const {
  if (is_rational()) {
    return {BigReal(exps_.front(), precision, MPFR_RNDD), BigReal(exps_.front(), precision, MPFR_RNDU)};
  }
  return {bound(exps_, precision, MPFR_RNDD), bound(exps_, precision, MPFR_RNDU)};
}

BigReal ExactEntropy::approx(mpfr_prec_t precision) const {
  return bound(exps_, precision, MPFR_RNDN);
}

double ExactEntropy::to_double() const { return approx(128).to_double(); }

std::string ExactEntropy::to_decimal(int digits) const {
  // Enough guard bits that the rounding of the last shown digit is reliable.
  const auto prec = static_cast<mpfr_prec_t>(digits * 3.33) + 64;
  return approx(prec).to_decimal(digits);
}

std::string ExactEntropy::exact_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) out += ", ";
    out += to_string(exps_[i]);
  }
  return out + "}";
}

Ordering compare(const ExactEntropy& a, const ExactEntropy& b, mpfr_prec_t cap) {
  if (a == b) return Ordering::Equal;
  if (a.is_rational() && b.is_rational()) {
    return a.exponents().front() < b.exponents().front() ? Ordering::Less : Ordering::Greater;
  }
  // Distinct merged forms are distinct reals, so the loop below can only
  // fail by running out of precision, never by a hidden tie.
  for (mpfr_prec_t prec = std::min(kInitialComparePrecision, cap);; prec *= 2) {
    prec = std::min(prec, cap);
    const Interval ia = a.bounds(prec);
    const Interval ib = b.bounds(prec);
    if (ia.hi < ib.lo) return Ordering::Less;
    if (ib.hi < ia.lo) return Ordering::Greater;
    if (prec >= cap) break;
  }
  throw PrecisionExhausted("entropy comparison undecided at " + std::to_string(cap) +
                           " bits: " + a.exact_string() + " vs " + b.exact_string());
}

Ordering compare(const ExactEntropy& a, const ExactEntropy& b) {
  return compare(a, b, default_precision_cap());
}

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "less";
    case Ordering::Equal: return "equal";
    case Ordering::Greater: return "greater";
  }
  return "?";
}

}  // namespace infothermo
