#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace w123::algebra {

// Arbitrary-precision integers and rationals. mpq_class keeps every value
// reduced with a positive denominator after each arithmetic operation.
using BigInt = mpz_class;
using Rational = mpq_class;

std::string to_decimal(const BigInt& v);
std::string to_decimal(const Rational& v);  // "p" or "p/q"

// Throws ParseError on malformed input.
BigInt parse_bigint(std::string_view text);
Rational parse_rational(std::string_view text);

std::size_t bit_size(const BigInt& v);
// Numerator plus denominator bit length; the pivot-size metric.
std::size_t bit_size(const Rational& v);

inline bool is_integral(const Rational& v) { return v.get_den() == 1; }

// Floor division for integral rationals that are known to be exact.
BigInt exact_quotient(const BigInt& num, const BigInt& den);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& base, unsigned long exponent);

}  // namespace w123::algebra
