#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "algebra/numbers.hpp"
#include "algebra/polynomial.hpp"
#include "algebra/series.hpp"

namespace w123::algebra {

// Integer polynomial P(x, F) = sum c_{a,b} x^a F^b, always held in canonical
// form: integer content 1 and a positive leading coefficient, where "leading"
// means largest F-degree, then largest x-degree. The zero polynomial is its
// own canonical form.
class BivariatePolynomial {
 public:
  struct Key {
    std::uint32_t f_exp;
    std::uint32_t x_exp;
    auto operator<=>(const Key&) const = default;
  };
  using TermMap = std::map<Key, BigInt>;

  BivariatePolynomial() = default;
  // Canonicalizes the given coefficients (zeros dropped).
  explicit BivariatePolynomial(const std::map<Key, Rational>& coeffs);
  static BivariatePolynomial from_integer_terms(const std::map<Key, BigInt>& coeffs);
  // From a polynomial whose only variables are at indices x_var and f_var.
  static BivariatePolynomial from_polynomial(const Polynomial& p, std::size_t x_var, std::size_t f_var);
  static BivariatePolynomial one();

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::uint32_t degree_x() const;
  std::uint32_t degree_f() const;
  BigInt coefficient(std::uint32_t x_exp, std::uint32_t f_exp) const;

  // Evaluates P(x, f(x)) modulo x^cutoff(f).
  TruncatedSeries evaluate(const TruncatedSeries& f) const;

  // Polynomial over the variable set {x, F}.
  Polynomial to_polynomial() const;

  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);

  bool operator==(const BivariatePolynomial& other) const = default;

  std::string to_string() const;

 private:
  void canonicalize();
  TermMap terms_;
};

// Quotient q with num = den * q exactly (both canonical, so q is canonical by
// Gauss's lemma), or nullopt when den does not divide num.
std::optional<BivariatePolynomial> bivar_divide_exact(const BivariatePolynomial& num,
                                                      const BivariatePolynomial& den);

}  // namespace w123::algebra
