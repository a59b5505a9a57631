#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "algebra/bivariate.hpp"
#include "algebra/polynomial.hpp"
#include "elimination/elimination.hpp"
#include "guessing/guessing.hpp"
#include "scheme/scheme.hpp"
#include "service/cache.hpp"
#include "words/words.hpp"

namespace w123::service {

enum class CountMethod { brute, recurrence, scheme, linear_rec };
std::string to_string(CountMethod m);
CountMethod count_method_from_string(const std::string& name);  // throws InvalidArgument

struct Context {
  std::optional<Cache> cache;  // empty: never read or write artifacts
  std::size_t brute_cap = words::kDefaultBruteForceCap;
};

// w_r(0..nmax) by the chosen method. linear_rec needs a known recurrence
// (shipped for r <= 3, otherwise one recorded by a successful guess) and
// throws NotAvailable without one.
scheme::CountSequence count_terms(const Context& ctx, unsigned r, unsigned nmax, CountMethod method);

enum class Format { text, json, bfile };
Format format_from_string(const std::string& name);  // throws InvalidArgument
std::string render_sequence(const scheme::CountSequence& seq, CountMethod method, Format format);

std::string render_scheme(const scheme::AlgebraicScheme& scheme, Format format);

struct EliminationOutcome {
  unsigned r = 0;
  elimination::Backend backend = elimination::Backend::resultants;
  algebra::Polynomial raw{algebra::VariableSet::make({"x", "G00"})};
  algebra::BivariatePolynomial equation;   // after x^r -> x
  std::size_t cutoff = 0;                  // series precision used for the checks
  bool annihilates = false;
  std::optional<algebra::BivariatePolynomial> published;
  std::optional<bool> published_annihilates;
  std::optional<elimination::MatchResult> match;

  bool passed() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

// Eliminates, compresses, checks annihilation of the series, and compares
// with the shipped equation when there is one. timeout_seconds <= 0 is unbounded.
EliminationOutcome run_elimination(const Context& ctx, unsigned r, elimination::Backend backend,
                                   double timeout_seconds);

struct GuessOutcome {
  unsigned r = 0;
  unsigned max_order = 0;
  unsigned max_degree = 0;
  std::size_t terms_used = 0;
  std::optional<guessing::LinearRecurrence> recurrence;
  std::optional<bool> matches_published;

  bool passed() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

inline constexpr unsigned kDefaultMaxOrder = 6;
inline constexpr unsigned kDefaultMaxDegree = 10;

// Guesses from scheme terms. A found recurrence is recorded in the cache so
// that linear_rec counting and asymptotics can use it later.
GuessOutcome run_guess(const Context& ctx, unsigned r, unsigned max_order = kDefaultMaxOrder,
                       unsigned max_degree = kDefaultMaxDegree);

// Shipped recurrence, else one recorded in the cache.
std::optional<guessing::LinearRecurrence> known_recurrence(const Context& ctx, unsigned r);

struct AsymptoticsOutcome {
  nlohmann::json json;
  std::string text;
  bool passed = false;
};

// Terms to nmax from a recurrence (known, or guessed on the spot and checked
// against scheme terms), then the asymptotic fits.
AsymptoticsOutcome run_asymptotics(const Context& ctx, unsigned r, unsigned nmax, double tolerance);

}  // namespace w123::service
