#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "algebra/numbers.hpp"

namespace w123::algebra {

// Ordered list of variable names. Polynomials share one instance; two sets
// are compatible when their names agree position by position.
class VariableSet {
 public:
  explicit VariableSet(std::vector<std::string> names);

  static std::shared_ptr<const VariableSet> make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool operator==(const VariableSet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using VarsPtr = std::shared_ptr<const VariableSet>;
using Exponents = std::vector<std::uint32_t>;

// Sparse multivariate polynomial with rational coefficients. Terms are keyed
// by exponent vector; std::map orders them lexicographically with variable 0
// most significant, so the last entry is the lex-leading term.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational>;

  explicit Polynomial(VarsPtr vars);
  Polynomial(VarsPtr vars, const Rational& constant);

  static Polynomial variable(VarsPtr vars, std::size_t index, std::uint32_t power = 1);
  static Polynomial variable(VarsPtr vars, const std::string& name, std::uint32_t power = 1);
  static Polynomial monomial(VarsPtr vars, Exponents exps, const Rational& coeff);

  const VarsPtr& vars() const { return vars_; }
  std::size_t num_vars() const { return vars_->size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Exponents& exps) const;

  // Adds coeff * monomial, dropping the entry if it cancels.
  void add_term(const Exponents& exps, const Rational& coeff);

  std::uint32_t degree(std::size_t var) const;
  std::uint32_t total_degree() const;
  bool contains(std::size_t var) const { return degree(var) > 0; }
  // Variables actually occurring, ascending.
  std::vector<std::size_t> support() const;

  // Coefficients c_k (as polynomials free of var) with p = sum_k c_k var^k.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;
  static Polynomial from_coefficients(const VarsPtr& vars, std::size_t var,
                                      const std::vector<Polynomial>& coeffs);
  Polynomial leading_coefficient_in(std::size_t var) const;

  Polynomial derivative(std::size_t var) const;
  Polynomial pow(unsigned exponent) const;

  // Integer-primitive form: rational denominators cleared, integer content
  // divided out, sign chosen so the lex-leading coefficient is positive.
  Polynomial primitive() const;
  // Largest monomial dividing every term (zero polynomial -> all zeros).
  Exponents monomial_content() const;
  Polynomial divide_by_monomial(const Exponents& m) const;

  // Rename/reorder onto another variable set; every occurring variable must
  // exist in the target set by name.
  Polynomial remap(const VarsPtr& target) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& other) const;

  VarsPtr vars_;
  TermMap terms_;
};

enum class PolyOp { add, sub, mul };
Polynomial poly_arith(const Polynomial& p, const Polynomial& q, PolyOp op);

// Exact quotient p / q, or nullopt if q does not divide p. Throws on q == 0.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q);

// Pseudo-remainder of a by b with respect to var: lc(b)^(deg a - deg b + 1) * a mod b.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var);

// Sylvester resultant with respect to var, via the subresultant PRS.
// Throws DegenerateInput when neither argument involves var.
Polynomial resultant(const Polynomial& p, const Polynomial& q, std::size_t var);

// Greatest common divisor in Q[vars], returned in primitive form.
Polynomial gcd(const Polynomial& p, const Polynomial& q);
// Same result by the subresultant PRS alone; gcd tries a heuristic first.
Polynomial subresultant_gcd(const Polynomial& p, const Polynomial& q);

// p / gcd(p, dp/dvar), primitive. Polynomials free of var are returned primitive.
Polynomial square_free_part(const Polynomial& p, std::size_t var);

}  // namespace w123::algebra
