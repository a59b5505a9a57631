#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "algebra/bivariate.hpp"
#include "algebra/numbers.hpp"
#include "algebra/series.hpp"
#include "deadline.hpp"

namespace w123::guessing {

using algebra::BigInt;

// sum_{k=0}^{L} p_k(n) w(n+k) = 0 with integer polynomial coefficients.
// coeffs[k][e] is the coefficient of n^e in p_k. Normalized on construction:
// all p_k padded to a common degree, the family content-free, and the
// leading coefficient of p_L positive.
class LinearRecurrence {
 public:
  explicit LinearRecurrence(std::vector<std::vector<BigInt>> coeffs);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  unsigned degree() const { return static_cast<unsigned>(coeffs_.front().size() - 1); }
  const std::vector<std::vector<BigInt>>& coefficients() const { return coeffs_; }
  BigInt evaluate_coefficient(unsigned k, const BigInt& n) const;

  std::string to_string() const;  // "(n + 2)*w(n+1) - (4*n + 2)*w(n) = 0"
  nlohmann::json to_json() const;
  static LinearRecurrence from_json(const nlohmann::json& j);

  bool operator==(const LinearRecurrence&) const = default;

 private:
  std::vector<std::vector<BigInt>> coeffs_;
};

struct GuessOptions {
  // Trailing equations withheld from fitting and used only for checking.
  unsigned margin = 10;
};

// Minimum sequence length accepted by guess_recurrence for these bounds.
std::size_t required_terms(unsigned max_order, unsigned max_degree, unsigned margin = 10);

// Searches (order L >= 1, degree d >= 0) by increasing L + d, then L. For each
// candidate the homogeneous system for the unknown coefficients is solved
// exactly on a fitting window; a kernel vector is accepted only if the
// recurrence holds on every remaining term. With several kernel vectors the
// one of least total bit size wins. Throws InsufficientTerms.
std::optional<LinearRecurrence> guess_recurrence(std::span<const BigInt> terms, unsigned max_order,
                                                 unsigned max_degree, const GuessOptions& options = {},
                                                 const Deadline& deadline = Deadline::unbounded());

// Exact check of the recurrence at every n where all of w(n..n+L) exist.
bool verify_recurrence(const LinearRecurrence& rec, std::span<const BigInt> terms);

// Terms w(0..N). The next term is -sum_{k<L} p_k(n) w(n+k) / p_L(n); throws
// SingularRecurrence when p_L(n) = 0 and NonIntegral when the division is
// inexact. N below the initial length returns the first N + 1 initial terms.
std::vector<BigInt> extend_with_recurrence(const LinearRecurrence& rec, std::span<const BigInt> initial,
                                           std::size_t N);

// Integer c_{a,b} (a <= max_deg_x, b <= max_deg_f), not all zero, with
// sum c_{a,b} x^a f^b == 0 mod x^cutoff(f), fitted on all but `margin`
// coefficients and checked on the rest. Throws InsufficientTerms.
std::optional<algebra::BivariatePolynomial> guess_algebraic(const algebra::TruncatedSeries& f,
                                                            unsigned max_deg_x, unsigned max_deg_f,
                                                            unsigned margin = 10);

// Denominator-cleared published recurrences, r = 1..3.
std::optional<LinearRecurrence> published_recurrence(unsigned r);

}  // namespace w123::guessing
