#include "scheme/scheme.hpp"

#include <algorithm>
#include <sstream>

#include "algebra/json_io.hpp"
#include "errors.hpp"

namespace w123::scheme {

using algebra::Exponents;
using algebra::Rational;
using algebra::VariableSet;

AlgebraicScheme::AlgebraicScheme(unsigned r, algebra::VarsPtr vars,
                                 std::map<SchemeIndex, Polynomial> equations)
    : r_(r), vars_(std::move(vars)), equations_(std::move(equations)) {}

std::vector<SchemeIndex> AlgebraicScheme::indices() const {
  std::vector<SchemeIndex> out;
  for (const auto& [idx, eq] : equations_) out.push_back(idx);
  return out;
}

std::size_t AlgebraicScheme::var_of(SchemeIndex idx) const {
  auto v = vars_->index_of(idx.variable_name());
  if (!v) throw InvalidArgument("no scheme variable " + idx.variable_name());
  return *v;
}

SchemeIndex AlgebraicScheme::index_of_var(std::size_t var) const {
  for (const auto& [idx, eq] : equations_)
    if (var_of(idx) == var) return idx;
  throw InvalidArgument("variable " + vars_->name(var) + " is not a scheme unknown");
}

Polynomial AlgebraicScheme::rhs(SchemeIndex idx) const {
  return equations_.at(idx) + Polynomial::variable(vars_, var_of(idx));
}

std::string AlgebraicScheme::pretty() const {
  std::ostringstream os;
  for (const auto& idx : indices()) {
    Polynomial rhs_poly = rhs(idx);
    // Constant first, then by power of x, then by the G factors.
    std::vector<std::pair<Exponents, Rational>> terms(rhs_poly.terms().begin(), rhs_poly.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
      if (a.first[0] != b.first[0]) return a.first[0] < b.first[0];
      return a.first > b.first;
    });
    os << idx.variable_name() << " =";
    bool first = true;
    for (const auto& [e, c] : terms) {
      os << (first ? " " : (c < 0 ? " - " : " + "));
      if (first && c < 0) os << "-";
      first = false;
      Rational mag = abs(c);
      std::vector<std::string> parts;
      bool unit = std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; });
      if (mag != 1 || unit) parts.push_back(algebra::to_decimal(mag));
      for (std::size_t v = 0; v < e.size(); ++v) {
        if (!e[v]) continue;
        std::string f = vars_->name(v);
        if (e[v] > 1) f += "^" + std::to_string(e[v]);
        parts.push_back(f);
      }
      for (std::size_t k = 0; k < parts.size(); ++k) os << (k ? "*" : "") << parts[k];
    }
    if (first) os << " 0";
    os << "\n";
  }
  return os.str();
}

nlohmann::json AlgebraicScheme::to_json() const {
  nlohmann::json eqs = nlohmann::json::array();
  for (const auto& [idx, eq] : equations_) {
    eqs.push_back({{"index", {idx.i, idx.j}},
                   {"variable", idx.variable_name()},
                   {"equation", algebra::to_json(eq)}});
  }
  return {{"schema", "w123.scheme/1"}, {"r", r_}, {"variables", vars_->names()}, {"equations", eqs}};
}

AlgebraicScheme build_scheme(unsigned r) {
  if (r < 1) throw InvalidArgument("scheme needs r >= 1");
  std::vector<std::string> names{"x"};
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = i; j < r; ++j) names.push_back(SchemeIndex{i, j}.variable_name());
  auto vars = VariableSet::make(names);
  auto g = [&](unsigned a, unsigned b) {
    return Polynomial::variable(vars, SchemeIndex::canonical(a, b).variable_name());
  };
  const Polynomial x = Polynomial::variable(vars, "x");

  std::map<SchemeIndex, Polynomial> eqs;
  for (unsigned i = 0; i < r; ++i) {
    for (unsigned j = i; j < r; ++j) {
      Polynomial rhs(vars, (i == 0 && j == 0) ? 1 : 0);
      const unsigned jm1 = (j + r - 1) % r;
      Polynomial sum(vars);
      for (unsigned t = 0; t < r; ++t) sum += g(i, t) * g((r - t) % r, jm1);
      rhs += x * sum;
      for (unsigned m = 0; m < i; ++m) rhs += Polynomial::variable(vars, "x", m + 1) * g(i - m, j - 1);
      eqs.emplace(SchemeIndex{i, j}, rhs - g(i, j));
    }
  }
  return AlgebraicScheme(r, vars, std::move(eqs));
}

namespace {

struct CompiledTerm {
  BigInt coeff;
  std::size_t x_power = 0;
  std::vector<std::size_t> factors;  // positions into the series table, with repetition
};

}  // namespace

SeriesSolution solve_series(const AlgebraicScheme& scheme, std::size_t cutoff) {
  if (cutoff < 1) throw InvalidArgument("series cutoff must be at least 1");
  const auto indices = scheme.indices();
  const std::size_t k = indices.size();
  std::vector<std::size_t> slot_of_var(scheme.vars()->size(), k);
  for (std::size_t s = 0; s < k; ++s) slot_of_var[scheme.var_of(indices[s])] = s;

  std::vector<std::vector<CompiledTerm>> program(k);
  std::vector<BigInt> constants(k, 0);
  for (std::size_t s = 0; s < k; ++s) {
    const Polynomial rhs = scheme.rhs(indices[s]);
    for (const auto& [e, c] : rhs.terms()) {
      if (!algebra::is_integral(c)) throw DefectError("scheme coefficient is not an integer");
      CompiledTerm t{c.get_num(), e[AlgebraicScheme::x_var], {}};
      for (std::size_t v = 0; v < e.size(); ++v) {
        if (v == AlgebraicScheme::x_var) continue;
        for (std::uint32_t rep = 0; rep < e[v]; ++rep) t.factors.push_back(slot_of_var[v]);
      }
      if (t.factors.empty() && t.x_power == 0) {
        constants[s] += t.coeff;
        continue;
      }
      if (t.x_power == 0) throw DefectError("scheme term without a factor of x: cannot solve degree by degree");
      if (t.factors.size() > 2) throw DefectError("scheme terms of degree above 2 are not supported");
      program[s].push_back(std::move(t));
    }
  }

  std::vector<std::vector<BigInt>> g(k, std::vector<BigInt>(cutoff));
  BigInt acc, conv;
  for (std::size_t m = 0; m < cutoff; ++m) {
    for (std::size_t s = 0; s < k; ++s) {
      acc = (m == 0) ? constants[s] : BigInt(0);
      for (const auto& t : program[s]) {
        if (t.x_power > m) continue;
        const std::size_t d = m - t.x_power;
        if (t.factors.empty()) {
          if (d == 0) acc += t.coeff;
        } else if (t.factors.size() == 1) {
          mpz_addmul(acc.get_mpz_t(), t.coeff.get_mpz_t(), g[t.factors[0]][d].get_mpz_t());
        } else {
          const auto& a = g[t.factors[0]];
          const auto& b = g[t.factors[1]];
          conv = 0;
          for (std::size_t u = 0; u <= d; ++u) {
            if (sgn(a[u]) == 0 || sgn(b[d - u]) == 0) continue;
            mpz_addmul(conv.get_mpz_t(), a[u].get_mpz_t(), b[d - u].get_mpz_t());
          }
          mpz_addmul(acc.get_mpz_t(), t.coeff.get_mpz_t(), conv.get_mpz_t());
        }
      }
      g[s][m] = acc;
    }
  }

  SeriesSolution sol{scheme.r(), cutoff, {}};
  for (std::size_t s = 0; s < k; ++s) sol.series.emplace(indices[s], TruncatedSeries::from_integers(g[s]));
  const auto& g00 = sol.series.at(SchemeIndex{0, 0});
  if (g00[0] != 1) throw DefectError("series solution has g00(0) != 1");
  return sol;
}

TruncatedSeries residual(const AlgebraicScheme& scheme, const SeriesSolution& sol, SchemeIndex idx) {
  const std::size_t n = sol.cutoff;
  TruncatedSeries total(n);
  for (const auto& [e, c] : scheme.equations().at(idx).terms()) {
    TruncatedSeries term = TruncatedSeries::one(n);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (v == AlgebraicScheme::x_var) continue;
      const auto& factor = sol.series.at(scheme.index_of_var(v));
      for (std::uint32_t rep = 0; rep < e[v]; ++rep) term = term * factor;
    }
    total += term.shifted(e[AlgebraicScheme::x_var]) * c;
  }
  return total;
}

CountSequence word_counts(unsigned r, unsigned nmax) {
  const std::size_t cutoff = static_cast<std::size_t>(r) * nmax + 1;
  SeriesSolution sol = solve_series(build_scheme(r), cutoff);
  const auto& g00 = sol.series.at(SchemeIndex{0, 0});
  CountSequence out{r, {}};
  out.terms.reserve(nmax + 1);
  for (unsigned n = 0; n <= nmax; ++n) out.terms.push_back(g00[static_cast<std::size_t>(r) * n].get_num());
  return out;
}

}  // namespace w123::scheme
