#pragma once

#include <cstddef>
#include <vector>

#include "algebra/numbers.hpp"

namespace w123::algebra {

// Dense power series c_0 + c_1 x + ... + c_{N-1} x^{N-1} + O(x^N).
// Binary operations truncate to the smaller cutoff.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t cutoff) : coeffs_(cutoff) {}
  explicit TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}
  static TruncatedSeries from_integers(const std::vector<BigInt>& coeffs);
  static TruncatedSeries one(std::size_t cutoff);

  std::size_t cutoff() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  Rational& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  TruncatedSeries truncated(std::size_t cutoff) const;
  // Multiply by x^k, keeping the cutoff.
  TruncatedSeries shifted(std::size_t k) const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& s);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }

  bool operator==(const TruncatedSeries& other) const { return coeffs_ == other.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace w123::algebra
