#include <doctest.h>

#include <algorithm>

#include "elimination/elimination.hpp"
#include "elimination/groebner.hpp"
#include "errors.hpp"
#include "oracles.hpp"
#include "scheme/scheme.hpp"

using namespace w123;
using namespace w123::elimination;
using algebra::BigInt;
using algebra::Polynomial;
using algebra::TruncatedSeries;

namespace {

using Key = BivariatePolynomial::Key;

BivariatePolynomial bivar(std::initializer_list<std::tuple<unsigned, unsigned, long>> terms) {
  std::map<Key, BigInt> m;
  for (auto [x, f, c] : terms) m[Key{f, x}] = c;
  return BivariatePolynomial::from_integer_terms(m);
}

const BivariatePolynomial kCatalan = bivar({{1, 2, 1}, {0, 1, -1}, {0, 0, 1}});
// 1 - (2x+1)F^2 + x(x+4)F^4
const BivariatePolynomial kTwo = bivar({{0, 0, 1}, {1, 2, -2}, {0, 2, -1}, {2, 4, 1}, {1, 4, 4}});

TruncatedSeries f_series(unsigned r, unsigned nmax) { return scheme::word_counts(r, nmax).as_series(); }

EliminationOptions with(Backend b) {
  EliminationOptions o;
  o.backend = b;
  o.deadline = Deadline::after(60);
  return o;
}

}  // namespace

TEST_SUITE("elimination") {

TEST_CASE("r=1 gives the Catalan equation") {
  for (auto b : {Backend::resultants, Backend::buchberger}) {
    auto q = eliminate(scheme::build_scheme(1), with(b));
    CHECK(compress_exponents(q, 1) == kCatalan);
  }
}

TEST_CASE("r=2 output has even x-exponents and contains the published equation") {
  for (auto b : {Backend::resultants, Backend::buchberger}) {
    auto q = eliminate(scheme::build_scheme(2), with(b));
    const std::size_t xv = *q.vars()->index_of("x");
    for (const auto& [e, c] : q.terms()) CHECK(e[xv] % 2 == 0);
    auto p = compress_exponents(q, 2);
    auto m = match_published_equation(p, kTwo);
    CHECK(m.verdict != MatchVerdict::mismatch);
    CHECK(verify_annihilation(p, f_series(2, 40)));
  }
}

TEST_CASE("published fixtures") {
  REQUIRE(published_equation(1));
  CHECK(*published_equation(1) == kCatalan);
  CHECK(*published_equation(2) == kTwo);
  auto p3 = published_equation(3);
  REQUIRE(p3);
  CHECK(p3->degree_f() == 8);
  CHECK(p3->coefficient(0, 0) == 1);    // (4x+1)^2 = 16x^2 + 8x + 1
  CHECK(p3->coefficient(1, 0) == 8);
  CHECK(p3->coefficient(2, 0) == 16);
  CHECK(p3->coefficient(2, 2) == 64);   // 64x^2 + 48x - 1
  CHECK(p3->coefficient(1, 2) == 48);
  CHECK(p3->coefficient(0, 2) == -1);
  auto p4 = published_equation(4);
  REQUIRE(p4);
  CHECK(p4->degree_f() == 16);
  CHECK_FALSE(published_equation(5));
}

TEST_CASE("published equations annihilate the series") {
  CHECK(verify_annihilation(kCatalan, TruncatedSeries::from_integers(oracle::catalan_prefix(49))));
  CHECK(verify_annihilation(*published_equation(2), f_series(2, 49)));
  CHECK(verify_annihilation(*published_equation(3), f_series(3, 59)));
  CHECK_FALSE(verify_annihilation(kCatalan, f_series(2, 49)));
  CHECK_THROWS_AS(verify_annihilation(*published_equation(3), f_series(3, 5)), InvalidArgument);
}

TEST_CASE("annihilation is monotone in the cutoff") {
  for (unsigned r = 1; r <= 3; ++r) {
    auto p = *published_equation(r);
    auto wrong = r == 1 ? kTwo : kCatalan;
    std::optional<bool> previous, previous_wrong;
    for (unsigned n : {30u, 45u, 60u, 75u}) {
      auto f = f_series(r, n);
      if (f.cutoff() < 2 * (p.degree_x() + p.degree_f())) continue;
      const bool ok = verify_annihilation(p, f), bad = verify_annihilation(wrong, f);
      CHECK(ok);
      CHECK_FALSE(bad);
      if (previous) CHECK((!*previous || ok));
      if (previous_wrong) CHECK((!*previous_wrong || bad));
      previous = ok;
      previous_wrong = bad;
    }
  }
}

TEST_CASE("match verdicts") {
  CHECK(match_published_equation(kTwo, kTwo).verdict == MatchVerdict::equal);
  auto factor = bivar({{1, 1, 1}, {0, 0, 1}});
  auto m = match_published_equation(kTwo * factor, kTwo);
  CHECK(m.verdict == MatchVerdict::proper_multiple);
  REQUIRE(m.quotient);
  CHECK(*m.quotient == factor);
  CHECK(match_published_equation(kCatalan, kTwo).verdict == MatchVerdict::mismatch);
  CHECK(to_string(MatchVerdict::proper_multiple) == "proper-multiple");
}

TEST_CASE("compress rejects exponents not divisible by r") {
  auto vars = algebra::VariableSet::make({"x", "G00"});
  auto x = Polynomial::variable(vars, "x"), g = Polynomial::variable(vars, "G00");
  CHECK_THROWS_AS(compress_exponents(x * g + g.pow(2), 2), NonDivisible);
  CHECK(compress_exponents(x.pow(2) * g, 2) == bivar({{1, 1, 1}}));
}

TEST_CASE("backends share the published polynomial for r=1,2") {
  for (unsigned r = 1; r <= 2; ++r) {
    auto a = compress_exponents(eliminate(scheme::build_scheme(r), with(Backend::resultants)), r);
    auto b = compress_exponents(eliminate(scheme::build_scheme(r), with(Backend::buchberger)), r);
    auto pub = *published_equation(r);
    CHECK(algebra::bivar_divide_exact(a, pub));
    CHECK(algebra::bivar_divide_exact(b, pub));
  }
}

TEST_CASE("output does not depend on the order equations are supplied") {
  for (unsigned r = 1; r <= 2; ++r) {
    auto s = scheme::build_scheme(r);
    std::vector<Polynomial> eqs;
    for (const auto& [idx, eq] : s.equations()) eqs.push_back(eq);
    const auto order = default_elimination_order(s);
    for (auto b : {Backend::resultants, Backend::buchberger}) {
      std::optional<BivariatePolynomial> first;
      std::vector<std::size_t> perm(eqs.size());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
      do {
        std::vector<Polynomial> shuffled;
        for (auto i : perm) shuffled.push_back(eqs[i]);
        auto q = eliminate_system(shuffled, order, scheme::AlgebraicScheme::x_var, s.var_of({0, 0}), with(b));
        auto p = compress_exponents(q, r);
        if (!first) first = p;
        CHECK(p == *first);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST_CASE("groebner basis of a small ideal") {
  auto vars = algebra::VariableSet::make({"x", "y", "z"});
  auto x = Polynomial::variable(vars, "x"), y = Polynomial::variable(vars, "y"),
       z = Polynomial::variable(vars, "z");
  Polynomial one(vars, 1);
  // z = x + y, y = x^2: eliminating {y, z} leaves nothing; adding z = 1 leaves x^2 + x - 1.
  BlockOrder order{{1, 2}, {0}};
  GroebnerStats stats;
  auto gb = groebner_basis({z - x - y, y - x.pow(2), z - one}, order, Deadline::after(10), &stats);
  bool found = false;
  for (const auto& g : gb)
    if (!g.contains(1) && !g.contains(2)) found = found || g.primitive() == (x.pow(2) + x - one).primitive();
  CHECK(found);
  CHECK(stats.basis_size == gb.size());
}

TEST_CASE("elimination honours its deadline") {
  EliminationOptions o;
  o.backend = Backend::buchberger;
  o.deadline = Deadline::after(1e-9);
  CHECK_THROWS_AS(eliminate(scheme::build_scheme(3), o), TimeoutError);
}

TEST_CASE("backend names") {
  CHECK(backend_from_string("buchberger") == Backend::buchberger);
  CHECK(to_string(Backend::resultants) == "resultants");
  CHECK_THROWS_AS(backend_from_string("magic"), InvalidArgument);
}

}  // TEST_SUITE
