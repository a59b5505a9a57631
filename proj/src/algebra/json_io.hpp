#pragma once

#include "json.hpp"

#include "algebra/bivariate.hpp"
#include "algebra/polynomial.hpp"
#include "algebra/series.hpp"

namespace w123::algebra {

// Canonical JSON: {"variables": [...], "terms": [{"exponents": [...], "coeff": "p/q"}, ...]}
// with terms in ascending lexicographic exponent order; coefficients are
// decimal strings so big values round-trip losslessly.
nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

// Same layout with variables ["x", "F"] and exponents [x_exp, F_exp].
nlohmann::json to_json(const BivariatePolynomial& p);
BivariatePolynomial bivariate_from_json(const nlohmann::json& j);

// A list of decimal strings, one per coefficient.
nlohmann::json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

}  // namespace w123::algebra
