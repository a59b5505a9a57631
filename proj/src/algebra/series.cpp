#include "algebra/series.hpp"

#include <algorithm>

namespace w123::algebra {

TruncatedSeries TruncatedSeries::from_integers(const std::vector<BigInt>& coeffs) {
  std::vector<Rational> q(coeffs.begin(), coeffs.end());
  return TruncatedSeries(std::move(q));
}

TruncatedSeries TruncatedSeries::one(std::size_t cutoff) {
  TruncatedSeries s(cutoff);
  if (cutoff > 0) s.coeffs_[0] = 1;
  return s;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

TruncatedSeries TruncatedSeries::truncated(std::size_t cutoff) const {
  std::size_t n = std::min(cutoff, coeffs_.size());
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + n));
}

TruncatedSeries TruncatedSeries::shifted(std::size_t k) const {
  TruncatedSeries out(cutoff());
  for (std::size_t i = 0; i + k < cutoff(); ++i) out.coeffs_[i + k] = coeffs_[i];
  return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  coeffs_.resize(std::min(cutoff(), other.cutoff()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  coeffs_.resize(std::min(cutoff(), other.cutoff()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.cutoff(), b.cutoff());
  TruncatedSeries out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b.coeffs_[j] == 0) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

}  // namespace w123::algebra
