#pragma once

#include <optional>
#include <span>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "json.hpp"

#include "algebra/numbers.hpp"

namespace w123::asymptotics {

using algebra::BigInt;
using algebra::Rational;
using Real = boost::multiprecision::mpfr_float_50;

// Richardson tableau depth used by every fit.
inline constexpr unsigned kRichardsonDepth = 3;
inline constexpr std::size_t kMinimumTerms = 50;

// Conjectured limit of w(n)/w(n-1): (r+1)*2^r.
BigInt conjectured_rate(unsigned r);

// Limit of w(n)/w(n-1) from the last kRichardsonDepth+1 ratios. The ratios and
// the extrapolation are exact; the result is rounded once at the end.
// Throws InsufficientTerms below kMinimumTerms terms.
Real growth_ratio(std::span<const BigInt> terms);

// Limit of n*(w(n)/(growth*w(n-1)) - 1), the exponent e in growth^n * n^e.
Real fit_exponent(std::span<const BigInt> terms, const Real& growth);

// Limit of w(n) / (growth^n * n^exponent). With an integral growth the
// quotient w(n)/growth^n is formed exactly before rounding.
Real fit_constant(std::span<const BigInt> terms, const Real& growth, const Real& exponent);

// Limit of n*(w(n)/(C*growth^n*n^exponent) - 1).
Real fit_first_correction(std::span<const BigInt> terms, const Real& growth, const Real& exponent,
                          const Real& constant);

// Published leading constants and first corrections, r = 1..5. The constant
// is reported through C^2*pi, which is rational in every published case.
std::optional<Rational> published_constant_squared_pi(unsigned r);
std::optional<Rational> published_first_correction(unsigned r);

struct AsymptoticReport {
  unsigned r = 0;
  std::size_t n_first = 0;  // window used by the extrapolations
  std::size_t n_last = 0;
  double tolerance = 0;
  Real growth;
  BigInt conjectured;
  Real growth_deviation;  // relative, nonnegative
  Real exponent;          // free fit
  Real exponent_deviation;
  Real constant;          // fitted with the conjectured rate and exponent -3/2
  Real constant_squared_pi;
  std::optional<Real> published_constant;
  std::optional<Real> constant_deviation;
  Real first_correction;
  std::optional<Rational> published_correction;
  std::optional<Real> correction_deviation;
  bool passed = false;  // growth_deviation <= tolerance

  nlohmann::json to_json() const;
  std::string to_table() const;
};

// Builds the report from w(0..N). Throws InsufficientTerms.
AsymptoticReport analyze(unsigned r, std::span<const BigInt> terms, double tolerance);

std::string format_real(const Real& v, int digits = 12);

}  // namespace w123::asymptotics
