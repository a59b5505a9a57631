#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "algebra/numbers.hpp"
#include "algebra/polynomial.hpp"
#include "algebra/series.hpp"

namespace w123::scheme {

using algebra::BigInt;
using algebra::Polynomial;
using algebra::TruncatedSeries;

// Superscript (i, j) of a weight enumerator, always stored with i <= j.
struct SchemeIndex {
  unsigned i = 0;
  unsigned j = 0;

  static SchemeIndex canonical(unsigned a, unsigned b) { return a <= b ? SchemeIndex{a, b} : SchemeIndex{b, a}; }
  // "G01"; indices of two or more digits are separated, "G3_12".
  std::string variable_name() const {
    if (i < 10 && j < 10) return "G" + std::to_string(i) + std::to_string(j);
    return "G" + std::to_string(i) + "_" + std::to_string(j);
  }
  auto operator<=>(const SchemeIndex&) const = default;
};

// The r(r+1)/2 equations G_ij = RHS_ij, each stored as RHS_ij - G_ij, over
// the variables x, G00, G01, ..., G(r-1)(r-1) (x first, then (i, j) ascending).
class AlgebraicScheme {
 public:
  AlgebraicScheme(unsigned r, algebra::VarsPtr vars, std::map<SchemeIndex, Polynomial> equations);

  unsigned r() const { return r_; }
  const algebra::VarsPtr& vars() const { return vars_; }
  const std::map<SchemeIndex, Polynomial>& equations() const { return equations_; }
  std::vector<SchemeIndex> indices() const;

  static constexpr std::size_t x_var = 0;
  std::size_t var_of(SchemeIndex idx) const;
  SchemeIndex index_of_var(std::size_t var) const;
  Polynomial rhs(SchemeIndex idx) const;

  // One line per equation, "G01 = x*G00^2 + x*G01^2".
  std::string pretty() const;
  nlohmann::json to_json() const;

 private:
  unsigned r_;
  algebra::VarsPtr vars_;
  std::map<SchemeIndex, Polynomial> equations_;
};

// Builds, for 0 <= i <= j <= r-1,
//   G_ij = [i=j=0] + x * sum_{t=0}^{r-1} G_{i,t} G_{(r-t) mod r, (j-1) mod r}
//              + sum_{m=0}^{i-1} x^{m+1} G_{i-m, j-1}
// with every index pair sorted. Throws InvalidArgument for r < 1.
AlgebraicScheme build_scheme(unsigned r);

struct SeriesSolution {
  unsigned r = 0;
  std::size_t cutoff = 0;
  std::map<SchemeIndex, TruncatedSeries> series;
};

// Degree-by-degree solution: every non-constant right-hand-side term carries
// a factor x, so [x^m] of each equation only reads coefficients below m.
// Cost O(N^2 r^3) coefficient products.
SeriesSolution solve_series(const AlgebraicScheme& scheme, std::size_t cutoff);

// Substitutes the solution into equation idx; zero up to the cutoff for a
// correct solution.
TruncatedSeries residual(const AlgebraicScheme& scheme, const SeriesSolution& sol, SchemeIndex idx);

// w_r(0..nmax).
struct CountSequence {
  unsigned r = 0;
  std::vector<BigInt> terms;

  std::size_t size() const { return terms.size(); }
  // f_r(x) = sum w_r(n) x^n truncated at the number of terms.
  TruncatedSeries as_series() const { return TruncatedSeries::from_integers(terms); }
  bool operator==(const CountSequence&) const = default;
};

// Coefficients of x^{rn} in g^(0,0), n = 0..nmax, from solve_series with
// cutoff r*nmax + 1.
CountSequence word_counts(unsigned r, unsigned nmax);

}  // namespace w123::scheme
