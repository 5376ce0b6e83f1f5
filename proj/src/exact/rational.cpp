#include "infothermo/exact/rational.hpp"

#include <cctype>

#include "infothermo/core/errors.hpp"

namespace infothermo {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw DomainError("not an exact rational (expected p/q): '" + std::string(text) + "'");
  }
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  Rational r(negative ? BigInt(-n) : n, d);
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return to_fraction_string(r);
}

BigInt floor_of(const Rational& r) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

BigInt ceil_of(const Rational& r) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

unsigned ceil_log2(const BigInt& n) {
  if (n < 1) throw DomainError("ceil_log2 requires n >= 1");
  if (n == 1) return 0;
  BigInt m = n - 1;
  return static_cast<unsigned>(mpz_sizeinbase(m.get_mpz_t(), 2));
}

bool is_power_of_two(const BigInt& n) {
  return n >= 1 && mpz_popcount(n.get_mpz_t()) == 1;
}

}  // namespace infothermo
