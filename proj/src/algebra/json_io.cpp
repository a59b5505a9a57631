#include "algebra/json_io.hpp"

#include "errors.hpp"

namespace w123::algebra {

using nlohmann::json;

json to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coeff", to_decimal(c)}});
  return {{"variables", p.vars()->names()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const json& j) {
  try {
    auto vars = VariableSet::make(j.at("variables").get<std::vector<std::string>>());
    Polynomial p(vars);
    for (const auto& t : j.at("terms")) {
      auto e = t.at("exponents").get<Exponents>();
      if (e.size() != vars->size()) throw ParseError("exponent vector length mismatch");
      p.add_term(e, parse_rational(t.at("coeff").get<std::string>()));
    }
    return p;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("malformed polynomial JSON: ") + ex.what());
  }
}

json to_json(const BivariatePolynomial& p) {
  json terms = json::array();
  for (const auto& [k, c] : p.terms())
    terms.push_back({{"exponents", {k.x_exp, k.f_exp}}, {"coeff", to_decimal(c)}});
  return {{"variables", {"x", "F"}}, {"terms", std::move(terms)}};
}

BivariatePolynomial bivariate_from_json(const json& j) {
  try {
    auto names = j.at("variables").get<std::vector<std::string>>();
    if (names.size() != 2) throw ParseError("bivariate polynomial needs exactly two variables");
    std::map<BivariatePolynomial::Key, Rational> coeffs;
    for (const auto& t : j.at("terms")) {
      auto e = t.at("exponents").get<std::vector<std::uint32_t>>();
      if (e.size() != 2) throw ParseError("bivariate exponent vector must have length 2");
      coeffs[{e[1], e[0]}] += parse_rational(t.at("coeff").get<std::string>());
    }
    return BivariatePolynomial(coeffs);
  } catch (const json::exception& ex) {
    throw ParseError(std::string("malformed polynomial JSON: ") + ex.what());
  }
}

json to_json(const TruncatedSeries& s) {
  json out = json::array();
  for (const auto& c : s.coefficients()) out.push_back(to_decimal(c));
  return out;
}

TruncatedSeries series_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("series JSON must be an array");
  std::vector<Rational> c;
  for (const auto& v : j) {
    if (!v.is_string()) throw ParseError("series coefficients must be decimal strings");
    c.push_back(parse_rational(v.get<std::string>()));
  }
  return TruncatedSeries(std::move(c));
}

}  // namespace w123::algebra
