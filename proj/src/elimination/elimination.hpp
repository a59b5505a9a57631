#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algebra/bivariate.hpp"
#include "algebra/polynomial.hpp"
#include "algebra/series.hpp"
#include "deadline.hpp"
#include "scheme/scheme.hpp"

namespace w123::elimination {

using algebra::BivariatePolynomial;
using algebra::Polynomial;

enum class Backend { buchberger, resultants };

std::string to_string(Backend b);
Backend backend_from_string(const std::string& name);  // throws InvalidArgument

struct EliminationOptions {
  Backend backend = Backend::resultants;
  Deadline deadline = Deadline::after(120);
};

// Generic elimination: returns a nonzero polynomial in the ideal generated by
// `equations` that involves only x_var and f_var, expressed over the variable
// set {x, G00}. `eliminate_order` lists the variables to remove; the
// resultant backend removes them in that order, the Buchberger backend ranks
// earlier variables higher inside the eliminated block.
Polynomial eliminate_system(const std::vector<Polynomial>& equations,
                            const std::vector<std::size_t>& eliminate_order, std::size_t x_var,
                            std::size_t f_var, const EliminationOptions& options);

// Variables G_ij other than G00 in decreasing (i + j, i).
std::vector<std::size_t> default_elimination_order(const scheme::AlgebraicScheme& scheme);

// Annihilating polynomial Q(x, G00) of g^(0,0)(x) obtained from the scheme.
// Minimality is not claimed.
Polynomial eliminate(const scheme::AlgebraicScheme& scheme, const EliminationOptions& options = {});

// Replaces x^r by x and G00 by F, then canonicalizes. Throws NonDivisible
// naming the first monomial whose x-exponent is not a multiple of r.
BivariatePolynomial compress_exponents(const Polynomial& q, unsigned r);

struct AnnihilationOptions {
  // Requires cutoff(f) >= margin_factor * (deg_x P + deg_F P).
  std::size_t margin_factor = 2;
};

// True iff P(x, f(x)) == 0 mod x^cutoff(f). Throws InvalidArgument when the
// series is too short for the configured margin.
bool verify_annihilation(const BivariatePolynomial& p, const algebra::TruncatedSeries& f,
                         const AnnihilationOptions& options = {});

enum class MatchVerdict { equal, proper_multiple, mismatch };
std::string to_string(MatchVerdict v);

struct MatchResult {
  MatchVerdict verdict = MatchVerdict::mismatch;
  std::optional<BivariatePolynomial> quotient;  // set for proper_multiple
};

// Compares canonical forms; when unequal, tries ours / published.
MatchResult match_published_equation(const BivariatePolynomial& ours, const BivariatePolynomial& published);

// Shipped reference equations, r = 1..4.
std::optional<BivariatePolynomial> published_equation(unsigned r);

}  // namespace w123::elimination
