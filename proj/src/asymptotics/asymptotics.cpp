#include "asymptotics/asymptotics.hpp"

#include <iomanip>
#include <sstream>

#include <boost/math/constants/constants.hpp>

#include "errors.hpp"

namespace w123::asymptotics {

namespace {

Real to_real(const Rational& q) {
  Real out;
  mpfr_set_q(out.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return out;
}

// Weights for extrapolating a(n) = L + b_1/n + ... + b_k/n^k from
// a(n0), ..., a(n0+k): sum_j a(n0+j) (n0+j)^k (-1)^(k+j) / (j! (k-j)!).
template <typename T, typename Value>
T richardson(std::size_t n0, Value&& value) {
  const unsigned k = kRichardsonDepth;
  T acc = 0;
  BigInt fact_j = 1;
  for (unsigned j = 0; j <= k; ++j) {
    if (j) fact_j *= j;
    BigInt fact_kj = 1;
    for (unsigned i = 2; i <= k - j; ++i) fact_kj *= i;
    BigInt npow = 1;
    for (unsigned i = 0; i < k; ++i) npow *= static_cast<unsigned long>(n0 + j);
    Rational weight(npow, fact_j * fact_kj);
    weight.canonicalize();
    if ((k + j) % 2) weight = -weight;
    if constexpr (std::is_same_v<T, Rational>)
      acc += weight * value(n0 + j);
    else
      acc += to_real(weight) * value(n0 + j);
  }
  return acc;
}

void require_terms(std::span<const BigInt> terms) {
  if (terms.size() < kMinimumTerms)
    throw InsufficientTerms("asymptotic fits need at least " + std::to_string(kMinimumTerms) + " terms, got " +
                            std::to_string(terms.size()));
  for (std::size_t n = terms.size() - kRichardsonDepth - 1; n < terms.size(); ++n)
    if (terms[n - 1] == 0 || terms[n] == 0) throw DegenerateInput("vanishing term in the extrapolation window");
}

std::size_t window_start(std::span<const BigInt> terms) { return terms.size() - 1 - kRichardsonDepth; }

Rational ratio(std::span<const BigInt> terms, std::size_t n) {
  Rational q(terms[n], terms[n - 1]);
  q.canonicalize();
  return q;
}

std::optional<BigInt> integral_value(const Real& v) {
  Real rounded = boost::multiprecision::round(v);
  if (rounded != v || rounded <= 0) return std::nullopt;
  BigInt out;
  mpfr_get_z(out.get_mpz_t(), rounded.backend().data(), MPFR_RNDN);
  return out;
}

// w(n) / (growth^n n^exponent), exact up to the power n^exponent when growth is integral.
Real scaled_term(std::span<const BigInt> terms, std::size_t n, const Real& growth, const Real& exponent,
                 const std::optional<BigInt>& integral_growth) {
  Real base;
  if (integral_growth) {
    BigInt g;
    mpz_pow_ui(g.get_mpz_t(), integral_growth->get_mpz_t(), n);
    Rational q(terms[n], g);
    q.canonicalize();
    base = to_real(q);
  } else {
    Real w;
    mpfr_set_z(w.backend().data(), terms[n].get_mpz_t(), MPFR_RNDN);
    base = w / boost::multiprecision::pow(growth, static_cast<long>(n));
  }
  return base / boost::multiprecision::pow(Real(n), exponent);
}

}  // namespace

BigInt conjectured_rate(unsigned r) {
  BigInt out = r + 1;
  return out << r;
}

Real growth_ratio(std::span<const BigInt> terms) {
  require_terms(terms);
  return to_real(richardson<Rational>(window_start(terms), [&](std::size_t n) { return ratio(terms, n); }));
}

Real fit_exponent(std::span<const BigInt> terms, const Real& growth) {
  require_terms(terms);
  return richardson<Real>(window_start(terms), [&](std::size_t n) {
    return Real(n) * (to_real(ratio(terms, n)) / growth - 1);
  });
}

Real fit_constant(std::span<const BigInt> terms, const Real& growth, const Real& exponent) {
  require_terms(terms);
  if (growth <= 0) throw InvalidArgument("growth must be positive");
  auto integral = integral_value(growth);
  return richardson<Real>(window_start(terms),
                          [&](std::size_t n) { return scaled_term(terms, n, growth, exponent, integral); });
}

Real fit_first_correction(std::span<const BigInt> terms, const Real& growth, const Real& exponent,
                          const Real& constant) {
  require_terms(terms);
  if (growth <= 0 || constant == 0) throw InvalidArgument("growth and constant must be nonzero");
  auto integral = integral_value(growth);
  return richardson<Real>(window_start(terms), [&](std::size_t n) {
    return Real(n) * (scaled_term(terms, n, growth, exponent, integral) / constant - 1);
  });
}

std::optional<Rational> published_constant_squared_pi(unsigned r) {
  switch (r) {
    case 1: return Rational(1);
    case 2: return Rational(27, 343);
    case 3: return Rational(1, 64);
    case 4: return Rational(1, 216);
    case 5: return Rational(27, 15625);
    default: return std::nullopt;
  }
}

std::optional<Rational> published_first_correction(unsigned r) {
  switch (r) {
    case 1: return Rational(-9, 8);
    case 2: return Rational(-249, 392);
    case 3: return Rational(-33, 64);
    case 4: return Rational(-23, 48);
    case 5: return Rational(-471, 1000);
    default: return std::nullopt;
  }
}

AsymptoticReport analyze(unsigned r, std::span<const BigInt> terms, double tolerance) {
  using boost::multiprecision::abs;
  AsymptoticReport rep;
  rep.r = r;
  rep.tolerance = tolerance;
  rep.growth = growth_ratio(terms);
  rep.n_first = window_start(terms);
  rep.n_last = terms.size() - 1;
  rep.conjectured = conjectured_rate(r);
  Real g0;
  mpfr_set_z(g0.backend().data(), rep.conjectured.get_mpz_t(), MPFR_RNDN);
  rep.growth_deviation = abs(rep.growth - g0) / g0;
  rep.exponent = fit_exponent(terms, rep.growth);
  const Real law = Real(-3) / 2;
  rep.exponent_deviation = abs(rep.exponent - law);
  rep.constant = fit_constant(terms, g0, law);
  const Real pi = boost::math::constants::pi<Real>();
  rep.constant_squared_pi = rep.constant * rep.constant * pi;
  if (auto q = published_constant_squared_pi(r)) {
    rep.published_constant = boost::multiprecision::sqrt(to_real(*q) / pi);
    rep.constant_deviation = abs(rep.constant - *rep.published_constant) / *rep.published_constant;
  }
  rep.first_correction = fit_first_correction(terms, g0, law, rep.constant);
  if (auto c1 = published_first_correction(r)) {
    rep.published_correction = c1;
    Real ref = to_real(*c1);
    rep.correction_deviation = abs(rep.first_correction - ref) / abs(ref);
  }
  rep.passed = rep.growth_deviation <= Real(tolerance);
  return rep;
}

std::string format_real(const Real& v, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

nlohmann::json AsymptoticReport::to_json() const {
  nlohmann::json j = {
      {"schema", "w123.asymptotics/1"},
      {"r", r},
      {"n_range", {n_first, n_last}},
      {"tolerance", tolerance},
      {"growth", {{"estimate", format_real(growth, 30)},
                  {"conjectured", conjectured.get_str()},
                  {"relative_deviation", format_real(growth_deviation, 6)},
                  {"passed", passed}}},
      {"exponent", {{"estimate", format_real(exponent, 20)},
                    {"law", "-3/2"},
                    {"deviation", format_real(exponent_deviation, 6)}}},
      {"constant", {{"status", "conjectural"},
                    {"estimate", format_real(constant, 20)},
                    {"squared_times_pi", format_real(constant_squared_pi, 20)}}},
      {"first_correction", {{"estimate", format_real(first_correction, 20)}}},
  };
  if (published_constant) {
    j["constant"]["published"] = format_real(*published_constant, 20);
    j["constant"]["relative_deviation"] = format_real(*constant_deviation, 6);
  }
  if (published_correction) {
    j["first_correction"]["published"] = published_correction->get_str();
    j["first_correction"]["relative_deviation"] = format_real(*correction_deviation, 6);
  }
  return j;
}

std::string AsymptoticReport::to_table() const {
  std::ostringstream os;
  auto row = [&](const std::string& name, const std::string& fit, const std::string& ref, const std::string& dev) {
    os << std::left << std::setw(20) << name << std::setw(26) << fit << std::setw(22) << ref << dev << "\n";
  };
  os << "r = " << r << ", fits over n = " << n_first << ".." << n_last << "\n";
  row("quantity", "estimate", "reference", "deviation");
  row("growth", format_real(growth, 18), conjectured.get_str(), format_real(growth_deviation, 4));
  row("exponent", format_real(exponent, 12), "-3/2", format_real(exponent_deviation, 4));
  row("C (conjectural)", format_real(constant, 12), published_constant ? format_real(*published_constant, 12) : "-",
      constant_deviation ? format_real(*constant_deviation, 4) : "-");
  row("C^2*pi", format_real(constant_squared_pi, 12), "-", "-");
  row("c1", format_real(first_correction, 12), published_correction ? published_correction->get_str() : "-",
      correction_deviation ? format_real(*correction_deviation, 4) : "-");
  os << "growth within " << tolerance << ": " << (passed ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace w123::asymptotics
