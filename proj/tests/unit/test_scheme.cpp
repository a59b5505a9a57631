#include <doctest.h>

#include "oracles.hpp"
#include "scheme/scheme.hpp"
#include "words/words.hpp"

using namespace w123;
using namespace w123::scheme;
using algebra::Polynomial;

namespace {

Polynomial var(const AlgebraicScheme& s, const char* name) { return Polynomial::variable(s.vars(), name); }

}  // namespace

TEST_SUITE("scheme") {

TEST_CASE("r=1 is the Catalan equation") {
  auto s = build_scheme(1);
  REQUIRE(s.equations().size() == 1);
  auto x = var(s, "x"), g = var(s, "G00");
  CHECK(s.rhs({0, 0}) == Polynomial(s.vars(), 1) + x * g.pow(2));
}

TEST_CASE("r=2 reproduces the three warm-up equations") {
  auto s = build_scheme(2);
  REQUIRE(s.equations().size() == 3);
  auto x = var(s, "x"), g00 = var(s, "G00"), g01 = var(s, "G01"), g11 = var(s, "G11");
  Polynomial one(s.vars(), 1);
  CHECK(s.rhs({0, 0}) == one + x * g00 * g01 + x * g01 * g11);
  CHECK(s.rhs({0, 1}) == x * g00.pow(2) + x * g01.pow(2));
  CHECK(s.rhs({1, 1}) == x * g00 * g01 + x * g01 * (one + g11));
}

TEST_CASE("r=3 has six equations over seven variables") {
  auto s = build_scheme(3);
  CHECK(s.equations().size() == 6);
  CHECK(s.vars()->names() == std::vector<std::string>{"x", "G00", "G01", "G02", "G11", "G12", "G22"});
  for (unsigned r = 1; r <= 6; ++r) CHECK(build_scheme(r).equations().size() == r * (r + 1) / 2);
}

TEST_CASE("series examples") {
  auto s1 = solve_series(build_scheme(1), 7);
  const auto& g = s1.series.at({0, 0});
  for (unsigned n = 0; n < 7; ++n) CHECK(g[n] == oracle::catalan(n));

  auto s2 = solve_series(build_scheme(2), 7);
  const auto& h = s2.series.at({0, 0});
  CHECK(h[0] == 1);
  CHECK(h[2] == 1);
  CHECK(h[4] == 6);
  CHECK(h[6] == 43);
  for (unsigned n = 1; n < 7; n += 2) CHECK(h[n] == 0);

  for (unsigned r = 1; r <= 5; ++r) {
    auto sol = solve_series(build_scheme(r), 1);
    for (const auto& [idx, ser] : sol.series) CHECK(ser[0] == (idx == SchemeIndex{0, 0} ? 1 : 0));
  }
}

TEST_CASE("grading, residual and positivity") {
  for (unsigned r = 1; r <= 5; ++r) {
    auto s = build_scheme(r);
    auto sol = solve_series(s, 60);
    for (const auto& [idx, ser] : sol.series) {
      CHECK(residual(s, sol, idx).is_zero());
      for (unsigned m = 0; m < 60; ++m) {
        CHECK(algebra::is_integral(ser[m]));
        CHECK(ser[m] >= 0);
        if (m % r != (idx.i + idx.j) % r) CHECK(ser[m] == 0);
      }
    }
  }
}

TEST_CASE("word counts") {
  std::vector<BigInt> expect{1, 1, 2, 5, 14, 42};
  CHECK(word_counts(1, 5).terms == expect);
  CHECK(word_counts(2, 3).terms == std::vector<BigInt>{1, 1, 6, 43});
  CHECK(word_counts(3, 2).terms[2] == 20);
  CHECK(word_counts(2, 0).terms == std::vector<BigInt>{1});
}

TEST_CASE("word counts agree with brute force and the A-recurrence") {
  for (unsigned r = 1; r <= 4; ++r) {
    const unsigned nmax = 12 / r;
    auto seq = word_counts(r, nmax);
    for (unsigned n = 0; n <= nmax; ++n) {
      auto a = words::MultiplicityVector::uniform(r, n);
      CHECK(seq.terms[n] == words::count_avoiders_bruteforce(a, words::Pattern::p231()));
      CHECK(seq.terms[n] == words::count_avoiders_recurrence(a));
    }
  }
  // Larger n through the recurrence only.
  auto seq = word_counts(3, 8);
  for (unsigned n = 0; n <= 8; ++n)
    CHECK(seq.terms[n] == words::count_avoiders_recurrence(words::MultiplicityVector::uniform(3, n)));
}

TEST_CASE("rendering") {
  auto s = build_scheme(2);
  CHECK(s.pretty().find("G01 = x*G00^2 + x*G01^2") != std::string::npos);
  auto j = s.to_json();
  CHECK(j.at("r") == 2);
}

}  // TEST_SUITE
