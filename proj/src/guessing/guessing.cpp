#include "guessing/guessing.hpp"

#include <algorithm>
#include <sstream>

#include "algebra/linear_system.hpp"
#include "errors.hpp"
#include "fixtures/fixtures.hpp"

namespace w123::guessing {

using algebra::IntegerMatrix;
using algebra::Rational;

LinearRecurrence::LinearRecurrence(std::vector<std::vector<BigInt>> coeffs) {
  if (coeffs.size() < 2) throw InvalidArgument("a recurrence needs order at least 1");
  std::size_t width = 1;
  for (const auto& p : coeffs)
    for (std::size_t e = 0; e < p.size(); ++e)
      if (p[e] != 0) width = std::max(width, e + 1);
  BigInt g = 0;
  for (auto& p : coeffs) {
    p.resize(width, 0);
    for (const auto& c : p) g = algebra::gcd(g, c);
  }
  const auto& lead = coeffs.back();
  auto top = std::find_if(lead.rbegin(), lead.rend(), [](const BigInt& c) { return c != 0; });
  if (top == lead.rend()) throw InvalidArgument("leading recurrence coefficient is the zero polynomial");
  if (*top < 0) g = -g;
  if (g != 1)
    for (auto& p : coeffs)
      for (auto& c : p) c = algebra::exact_quotient(c, g);
  coeffs_ = std::move(coeffs);
}

BigInt LinearRecurrence::evaluate_coefficient(unsigned k, const BigInt& n) const {
  const auto& p = coeffs_.at(k);
  BigInt acc = 0;
  for (std::size_t e = p.size(); e-- > 0;) acc = acc * n + p[e];
  return acc;
}

namespace {

std::string poly_in_n(const std::vector<BigInt>& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t e = p.size(); e-- > 0;) {
    if (p[e] == 0) continue;
    BigInt mag = abs(p[e]);
    os << (first ? (p[e] < 0 ? "-" : "") : (p[e] < 0 ? " - " : " + "));
    first = false;
    if (e == 0 || mag != 1) os << mag.get_str() << (e ? "*" : "");
    if (e) os << "n" << (e > 1 ? "^" + std::to_string(e) : "");
  }
  return first ? "0" : os.str();
}

}  // namespace

std::string LinearRecurrence::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const auto& p = coeffs_[k];
    auto top = std::find_if(p.rbegin(), p.rend(), [](const BigInt& c) { return c != 0; });
    if (top == p.rend()) continue;
    std::vector<BigInt> shown = p;
    bool negative = *top < 0;
    if (negative)
      for (auto& c : shown) c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    os << "(" << poly_in_n(shown) << ")*w(n" << (k ? "+" + std::to_string(k) : "") << ")";
  }
  os << " = 0";
  return os.str();
}

nlohmann::json LinearRecurrence::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& p : coeffs_) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& c : p) row.push_back(c.get_str());
    rows.push_back(std::move(row));
  }
  return {{"order", order()}, {"degree", degree()}, {"coefficients", std::move(rows)}};
}

LinearRecurrence LinearRecurrence::from_json(const nlohmann::json& j) {
  try {
    std::vector<std::vector<BigInt>> coeffs;
    for (const auto& row : j.at("coefficients")) {
      std::vector<BigInt> p;
      for (const auto& c : row) p.push_back(algebra::parse_bigint(c.get<std::string>()));
      coeffs.push_back(std::move(p));
    }
    return LinearRecurrence(std::move(coeffs));
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed recurrence JSON: ") + ex.what());
  }
}

std::size_t required_terms(unsigned max_order, unsigned max_degree, unsigned margin) {
  return static_cast<std::size_t>(max_order + 1) * (max_degree + 1) + max_order + margin;
}

namespace {

std::size_t total_bits(const std::vector<BigInt>& v) {
  std::size_t s = 0;
  for (const auto& c : v) s += algebra::bit_size(c);
  return s;
}

}  // namespace

std::optional<LinearRecurrence> guess_recurrence(std::span<const BigInt> terms, unsigned max_order,
                                                 unsigned max_degree, const GuessOptions& options,
                                                 const Deadline& deadline) {
  if (max_order < 1) throw InvalidArgument("max_order must be at least 1");
  const std::size_t need = required_terms(max_order, max_degree, options.margin);
  if (terms.size() < need)
    throw InsufficientTerms("guessing with order <= " + std::to_string(max_order) + ", degree <= " +
                            std::to_string(max_degree) + " needs " + std::to_string(need) + " terms, got " +
                            std::to_string(terms.size()));
  const std::size_t m = terms.size();
  for (unsigned sum = 1; sum <= max_order + max_degree; ++sum) {
    for (unsigned order = 1; order <= std::min(sum, max_order); ++order) {
      const unsigned degree = sum - order;
      if (degree > max_degree) continue;
      deadline.check("recurrence guessing");
      const std::size_t unknowns = static_cast<std::size_t>(order + 1) * (degree + 1);
      const std::size_t available = m - order;
      const std::size_t fit_rows = std::min(available - options.margin, unknowns + 8);
      IntegerMatrix rows(fit_rows, std::vector<BigInt>(unknowns));
      for (std::size_t n = 0; n < fit_rows; ++n) {
        for (unsigned k = 0; k <= order; ++k) {
          BigInt power = 1;
          for (unsigned e = 0; e <= degree; ++e) {
            rows[n][k * (degree + 1) + e] = power * terms[n + k];
            power *= static_cast<unsigned long>(n);
          }
        }
      }
      if (algebra::rank_mod_prime(rows, unknowns) == unknowns) continue;
      auto kernel = algebra::integer_kernel(rows, unknowns);
      std::vector<LinearRecurrence> candidates;
      for (const auto& v : kernel) {
        std::vector<std::vector<BigInt>> coeffs(order + 1);
        for (unsigned k = 0; k <= order; ++k)
          coeffs[k].assign(v.begin() + k * (degree + 1), v.begin() + (k + 1) * (degree + 1));
        bool lead_zero = std::all_of(coeffs.back().begin(), coeffs.back().end(), [](const BigInt& c) { return c == 0; });
        if (lead_zero) continue;
        candidates.emplace_back(std::move(coeffs));
      }
      std::stable_sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        std::size_t ba = 0, bb = 0;
        for (const auto& p : a.coefficients()) ba += total_bits(p);
        for (const auto& p : b.coefficients()) bb += total_bits(p);
        return ba < bb;
      });
      for (const auto& rec : candidates)
        if (verify_recurrence(rec, terms)) return rec;
    }
  }
  return std::nullopt;
}

bool verify_recurrence(const LinearRecurrence& rec, std::span<const BigInt> terms) {
  const unsigned order = rec.order();
  BigInt sum, nn;
  for (std::size_t n = 0; n + order < terms.size(); ++n) {
    sum = 0;
    nn = static_cast<unsigned long>(n);
    for (unsigned k = 0; k <= order; ++k) sum += rec.evaluate_coefficient(k, nn) * terms[n + k];
    if (sum != 0) return false;
  }
  return true;
}

std::vector<BigInt> extend_with_recurrence(const LinearRecurrence& rec, std::span<const BigInt> initial,
                                           std::size_t N) {
  const unsigned order = rec.order();
  if (N + 1 <= initial.size()) return {initial.begin(), initial.begin() + static_cast<std::ptrdiff_t>(N + 1)};
  if (initial.size() < order)
    throw InvalidArgument("need at least " + std::to_string(order) + " initial terms");
  std::vector<BigInt> w(initial.begin(), initial.end());
  w.reserve(N + 1);
  BigInt acc, lead, nn, q, rem;
  while (w.size() <= N) {
    const std::size_t n = w.size() - order;
    nn = static_cast<unsigned long>(n);
    lead = rec.evaluate_coefficient(order, nn);
    if (lead == 0) throw SingularRecurrence("leading coefficient vanishes at n = " + std::to_string(n));
    acc = 0;
    for (unsigned k = 0; k < order; ++k) acc -= rec.evaluate_coefficient(k, nn) * w[n + k];
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(), lead.get_mpz_t());
    if (rem != 0)
      throw NonIntegral("non-integral term at index " + std::to_string(n + order) + ": wrong recurrence?");
    w.push_back(q);
  }
  return w;
}

std::optional<algebra::BivariatePolynomial> guess_algebraic(const algebra::TruncatedSeries& f, unsigned max_deg_x,
                                                            unsigned max_deg_f, unsigned margin) {
  const std::size_t n = f.cutoff();
  const std::size_t unknowns = static_cast<std::size_t>(max_deg_x + 1) * (max_deg_f + 1);
  if (n < unknowns + margin)
    throw InsufficientTerms("algebraic guessing needs " + std::to_string(unknowns + margin) +
                            " coefficients, got " + std::to_string(n));
  std::vector<algebra::TruncatedSeries> powers{algebra::TruncatedSeries::one(n)};
  for (unsigned b = 1; b <= max_deg_f; ++b) powers.push_back(powers.back() * f);

  // Row m: coefficient of x^m; column (b, a): [x^{m-a}] f^b.
  auto build = [&](std::size_t first, std::size_t count) {
    IntegerMatrix rows;
    for (std::size_t m = first; m < first + count; ++m) {
      std::vector<Rational> row(unknowns, 0);
      for (unsigned b = 0; b <= max_deg_f; ++b)
        for (unsigned a = 0; a <= max_deg_x && a <= m; ++a) row[b * (max_deg_x + 1) + a] = powers[b][m - a];
      BigInt den = 1;
      for (const auto& c : row) den = algebra::lcm(den, c.get_den());
      std::vector<BigInt> irow(unknowns);
      for (std::size_t k = 0; k < unknowns; ++k)
        irow[k] = algebra::exact_quotient(row[k].get_num() * den, row[k].get_den());
      rows.push_back(std::move(irow));
    }
    return rows;
  };
  IntegerMatrix fit = build(0, n - margin);
  if (algebra::rank_mod_prime(fit, unknowns) == unknowns) return std::nullopt;
  auto kernel = algebra::integer_kernel(fit, unknowns);
  std::stable_sort(kernel.begin(), kernel.end(), [](const auto& a, const auto& b) { return total_bits(a) < total_bits(b); });
  for (const auto& v : kernel) {
    std::map<algebra::BivariatePolynomial::Key, Rational> coeffs;
    for (unsigned b = 0; b <= max_deg_f; ++b)
      for (unsigned a = 0; a <= max_deg_x; ++a) coeffs[{b, a}] = Rational(v[b * (max_deg_x + 1) + a]);
    algebra::BivariatePolynomial p(coeffs);
    if (p.is_zero()) continue;
    if (p.evaluate(f).is_zero()) return p;
  }
  return std::nullopt;
}

std::optional<LinearRecurrence> published_recurrence(unsigned r) {
  auto text = fixtures::recurrence_json(r);
  if (!text) return std::nullopt;
  return LinearRecurrence::from_json(nlohmann::json::parse(*text));
}

}  // namespace w123::guessing
