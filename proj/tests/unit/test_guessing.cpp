#include <doctest.h>

#include "elimination/elimination.hpp"
#include "errors.hpp"
#include "guessing/guessing.hpp"
#include "oracles.hpp"
#include "scheme/scheme.hpp"

using namespace w123;
using namespace w123::guessing;
using algebra::BigInt;
using algebra::TruncatedSeries;

namespace {

using Poly = std::vector<BigInt>;

LinearRecurrence catalan_rec() { return LinearRecurrence({Poly{-2, -4}, Poly{2, 1}}); }

std::vector<BigInt> counts(unsigned r, unsigned nmax) { return scheme::word_counts(r, nmax).terms; }

}  // namespace

TEST_SUITE("guessing") {

TEST_CASE("normalization") {
  LinearRecurrence a({Poly{4, 8}, Poly{-4, -2}});
  CHECK(a == catalan_rec());
  CHECK(a.to_string() == "(n + 2)*w(n+1) - (4*n + 2)*w(n) = 0");
  CHECK(LinearRecurrence::from_json(a.to_json()) == a);
  CHECK_THROWS_AS(LinearRecurrence({Poly{1}}), InvalidArgument);
  CHECK_THROWS_AS(LinearRecurrence({Poly{1}, Poly{0}}), InvalidArgument);
  CHECK_THROWS_AS(LinearRecurrence::from_json(nlohmann::json{{"order", 1}}), ParseError);
}

TEST_CASE("guess examples") {
  auto cat = oracle::catalan_prefix(40);
  auto g = guess_recurrence(cat, 1, 1);
  REQUIRE(g);
  CHECK(*g == catalan_rec());

  std::vector<BigInt> ones(30, 1);
  auto c = guess_recurrence(ones, 1, 1);
  REQUIRE(c);
  CHECK(*c == LinearRecurrence({Poly{-1}, Poly{1}}));

  auto two = guess_recurrence(counts(2, 80), 3, 4);
  REQUIRE(two);
  CHECK(*two == *published_recurrence(2));
  const auto& p1 = two->coefficients()[1];
  CHECK(abs(p1[0]) == 528);
  CHECK(abs(p1[1]) == 1426);
  CHECK(abs(p1[2]) == 1215);
  CHECK(abs(p1[3]) == 329);
}

TEST_CASE("too few terms") {
  std::vector<BigInt> few(10, 1);
  CHECK_THROWS_AS(guess_recurrence(few, 2, 2), InsufficientTerms);
  CHECK(required_terms(1, 1) == 4 + 1 + 10);
}

TEST_CASE("no recurrence within small bounds") {
  // 2^(n^2) is not P-recursive.
  std::vector<BigInt> v;
  for (unsigned n = 0; n < 40; ++n) v.push_back(algebra::pow(BigInt(2), n * n));
  CHECK_FALSE(guess_recurrence(v, 2, 2));
}

TEST_CASE("verify examples") {
  CHECK(verify_recurrence(catalan_rec(), oracle::catalan_prefix(500)));
  CHECK_FALSE(verify_recurrence(catalan_rec(), counts(2, 20)));
  CHECK(verify_recurrence(*published_recurrence(3), counts(3, 200)));
}

TEST_CASE("extension examples") {
  auto ext = extend_with_recurrence(catalan_rec(), std::vector<BigInt>{1, 1}, 10);
  CHECK(ext == oracle::catalan_prefix(10));
  auto two = extend_with_recurrence(*published_recurrence(2), std::vector<BigInt>{1, 1, 6}, 3);
  CHECK(two.back() == 43);
  auto pre = extend_with_recurrence(*published_recurrence(2), std::vector<BigInt>{1, 1, 6}, 1);
  CHECK(pre == std::vector<BigInt>{1, 1});
  LinearRecurrence halving({Poly{-1}, Poly{2}});
  CHECK_THROWS_AS(extend_with_recurrence(halving, std::vector<BigInt>{1}, 3), NonIntegral);
  // (n - 3) w(n+1) = w(n) has a vanishing leading coefficient at n = 3.
  LinearRecurrence singular({Poly{-1}, Poly{-3, 1}});
  CHECK_THROWS_AS(extend_with_recurrence(singular, std::vector<BigInt>{0}, 6), SingularRecurrence);
}

TEST_CASE("guessed recurrences verify on twice the guessing window") {
  for (unsigned r = 1; r <= 3; ++r) {
    auto base = counts(r, 59);
    auto g = guess_recurrence(base, 3, 6);
    REQUIRE(g);
    CHECK(verify_recurrence(*g, counts(r, 119)));
  }
}

TEST_CASE("re-guessing an extended sequence is stable") {
  for (unsigned r = 1; r <= 3; ++r) {
    auto base = counts(r, 59);
    auto g = guess_recurrence(base, 3, 6);
    REQUIRE(g);
    auto longer = extend_with_recurrence(*g, std::span(base).first(g->order() + 1), 150);
    auto again = guess_recurrence(longer, 3, 6);
    REQUIRE(again);
    CHECK(*again == *g);
    for (std::size_t len : {80u, 110u, 151u}) {
      auto other = guess_recurrence(std::span(longer).first(len), 3, 6);
      REQUIRE(other);
      CHECK(*other == *g);
    }
  }
}

TEST_CASE("published recurrences for r=1..3") {
  CHECK(*published_recurrence(1) == catalan_rec());
  for (unsigned r = 1; r <= 3; ++r) {
    auto g = guess_recurrence(counts(r, 150), 4, 8);
    REQUIRE(g);
    CHECK(*g == *published_recurrence(r));
  }
  CHECK_FALSE(published_recurrence(4));
}

TEST_CASE("algebraic guessing") {
  auto cat = TruncatedSeries::from_integers(oracle::catalan_prefix(30));
  auto p = guess_algebraic(cat, 1, 2);
  REQUIRE(p);
  CHECK(p->to_string() == "x*F^2 - F + 1");

  std::vector<BigInt> ones(30, 1);
  auto geo = guess_algebraic(TruncatedSeries::from_integers(ones), 1, 1);
  REQUIRE(geo);
  CHECK(geo->to_string() == "x*F - F + 1");  // (1 - x)F - 1 in canonical sign

  auto two = guess_algebraic(scheme::word_counts(2, 40).as_series(), 2, 4);
  REQUIRE(two);
  CHECK(*two == *elimination::published_equation(2));

  CHECK_THROWS_AS(guess_algebraic(cat.truncated(8), 2, 4), InsufficientTerms);
}

}  // TEST_SUITE
