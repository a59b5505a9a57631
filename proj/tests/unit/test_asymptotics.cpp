#include <doctest.h>

#include <cmath>

#include <boost/math/constants/constants.hpp>

#include "asymptotics/asymptotics.hpp"
#include "errors.hpp"
#include "guessing/guessing.hpp"
#include "oracles.hpp"
#include "scheme/scheme.hpp"

using namespace w123;
using namespace w123::asymptotics;

namespace {

BigInt to_integer(const Real& v) {
  BigInt out;
  mpfr_get_z(out.get_mpz_t(), v.backend().data(), MPFR_RNDN);
  return out;
}

// w_r(0..nmax) from a verified recurrence, guessed when none is shipped.
std::vector<BigInt> long_counts(unsigned r, unsigned nmax) {
  auto head = scheme::word_counts(r, 120).terms;
  auto rec = guessing::published_recurrence(r);
  if (!rec) rec = guessing::guess_recurrence(head, 6, 10);
  REQUIRE(rec);
  REQUIRE(guessing::verify_recurrence(*rec, head));
  return guessing::extend_with_recurrence(*rec, std::span(head).first(rec->order() + 1), nmax);
}

double to_double(const Real& v) { return v.convert_to<double>(); }

}  // namespace

TEST_SUITE("asymptotics") {

TEST_CASE("geometric growth is exact") {
  std::vector<BigInt> v;
  for (unsigned n = 0; n < 60; ++n) v.push_back(algebra::pow(BigInt(3), n));
  CHECK(growth_ratio(v) == 3);
  CHECK_THROWS_AS(growth_ratio(std::span(v).first(20)), InsufficientTerms);
}

TEST_CASE("synthetic model sequence") {
  const Real c("0.7315");
  std::vector<BigInt> v{BigInt(1)};
  for (unsigned n = 1; n <= 400; ++n)
    v.push_back(to_integer(c * boost::multiprecision::pow(Real(4), n) * boost::multiprecision::pow(Real(n), Real(-1.5))));
  CHECK(std::abs(to_double(growth_ratio(v)) - 4) < 1e-6);
  auto e = fit_exponent(v, Real(4));
  CHECK(std::abs(to_double(e) + 1.5) < 1e-6);
  auto fitted = fit_constant(v, Real(4), Real(-1.5));
  CHECK(std::abs(to_double(fitted - c)) < 1e-6);
}

TEST_CASE("Catalan constants") {
  auto cat = oracle::catalan_prefix(2000);
  auto g = growth_ratio(cat);
  CHECK(std::abs(to_double(g) - 4) / 4 < 1e-4);
  auto c = fit_constant(cat, Real(4), Real(-1.5));
  const double inv_sqrt_pi = 1 / std::sqrt(boost::math::constants::pi<double>());
  CHECK(std::abs(to_double(c) - inv_sqrt_pi) / inv_sqrt_pi < 0.005);
  auto c1 = fit_first_correction(cat, Real(4), Real(-1.5), c);
  CHECK(std::abs(to_double(c1) + 9.0 / 8) / (9.0 / 8) < 0.05);
  CHECK(conjectured_rate(1) == 4);
  CHECK(conjectured_rate(5) == 192);
}

TEST_CASE("r=2 constant") {
  auto w = long_counts(2, 2000);
  CHECK(std::abs(to_double(growth_ratio(w)) - 12) / 12 < 1e-3);
  auto c = fit_constant(w, Real(12), Real(-1.5));
  CHECK(std::abs(to_double(c) - 0.158268) / 0.158268 < 0.02);
}

TEST_CASE("conjecture checks") {
  struct Case { unsigned r; double tol; };
  for (auto [r, tol] : {Case{1, 0.001}, Case{3, 0.001}, Case{5, 0.005}}) {
    auto w = long_counts(r, 2000);
    auto rep = analyze(r, w, tol);
    CHECK(rep.passed);
    CHECK(rep.conjectured == conjectured_rate(r));
    CHECK(rep.growth_deviation >= 0);
    CHECK(rep.exponent_deviation >= 0);
    CHECK(std::abs(to_double(rep.exponent) + 1.5) < 0.1);
    CHECK(rep.n_last == 2000);
    CHECK(rep.n_first < rep.n_last);
    auto j = rep.to_json();
    CHECK(j.at("schema") == "w123.asymptotics/1");
    CHECK(rep.to_table().find("growth") != std::string::npos);
  }
}

TEST_CASE("estimates improve with more terms") {
  for (unsigned r = 1; r <= 5; ++r) {
    auto w = long_counts(r, 2000);
    auto shorter = analyze(r, std::span(w).first(501), 0.01);
    auto full = analyze(r, w, 0.01);
    CHECK(full.growth_deviation <= shorter.growth_deviation);
    CHECK(full.exponent_deviation <= shorter.exponent_deviation);
  }
}

TEST_CASE("published constants") {
  CHECK(*published_constant_squared_pi(2) == algebra::Rational(27, 343));
  CHECK(*published_first_correction(1) == algebra::Rational(-9, 8));
  CHECK(*published_first_correction(2) == algebra::Rational(-249, 392));
  CHECK_FALSE(published_constant_squared_pi(6));
}

}  // TEST_SUITE
