#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace infothermo {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses `p/q` or a bare integer `p`. Throws DomainError on anything else,
/// including decimal literals and a zero denominator.
Rational parse_rational(std::string_view text);

/// `p/q` with the denominator always written, e.g. `0/1`.
std::string to_fraction_string(const Rational& r);
/// `p` for integers, `p/q` otherwise.
std::string to_string(const Rational& r);

BigInt floor_of(const Rational& r);
BigInt ceil_of(const Rational& r);

/// Smallest k with 2^k >= n, for n >= 1.
unsigned ceil_log2(const BigInt& n);
bool is_power_of_two(const BigInt& n);

}  // namespace infothermo
