#include "elimination/elimination.hpp"

#include <algorithm>
#include <tuple>

#include "algebra/json_io.hpp"
#include "elimination/groebner.hpp"
#include "errors.hpp"
#include "fixtures/fixtures.hpp"

namespace w123::elimination {

using algebra::VariableSet;

std::string to_string(Backend b) { return b == Backend::buchberger ? "buchberger" : "resultants"; }

Backend backend_from_string(const std::string& name) {
  if (name == "buchberger") return Backend::buchberger;
  if (name == "resultants") return Backend::resultants;
  throw InvalidArgument("unknown elimination backend: " + name);
}

std::string to_string(MatchVerdict v) {
  switch (v) {
    case MatchVerdict::equal: return "equal";
    case MatchVerdict::proper_multiple: return "proper-multiple";
    case MatchVerdict::mismatch: return "mismatch";
  }
  return "mismatch";
}

namespace {

// Integer content and monomial factors removed.
Polynomial strip_content(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p.divide_by_monomial(p.monomial_content()).primitive();
}

// Total order on polynomials for deterministic pivot and result selection.
bool simpler(const Polynomial& a, const Polynomial& b, std::size_t var) {
  auto key = [var](const Polynomial& p) { return std::make_tuple(p.degree(var), p.total_degree(), p.num_terms()); };
  if (key(a) != key(b)) return key(a) < key(b);
  return a.terms() < b.terms();
}

Polynomial to_output_vars(const Polynomial& p, std::size_t x_var, std::size_t f_var) {
  static const auto out_vars = VariableSet::make({"x", "G00"});
  Polynomial out(out_vars);
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t v = 0; v < e.size(); ++v)
      if (v != x_var && v != f_var && e[v] != 0) throw DefectError("elimination output still involves " + p.vars()->name(v));
    out.add_term({e[x_var], e[f_var]}, c);
  }
  return out;
}

Polynomial eliminate_by_resultants(std::vector<Polynomial> polys, const std::vector<std::size_t>& order,
                                   std::size_t f_var, const Deadline& deadline) {
  for (auto& p : polys) p = strip_content(p);
  for (std::size_t step = 0; step < order.size(); ++step) {
    deadline.check("resultant elimination");
    const std::size_t v = order[step];
    const std::size_t next = step + 1 < order.size() ? order[step + 1] : f_var;
    std::vector<Polynomial> with, without;
    for (auto& p : polys) (p.contains(v) ? with : without).push_back(std::move(p));
    if (with.size() >= 2) {
      std::sort(with.begin(), with.end(), [v](const auto& a, const auto& b) { return simpler(a, b, v); });
      const Polynomial& pivot = with.front();
      for (std::size_t k = 1; k < with.size(); ++k) {
        deadline.check("resultant elimination");
        Polynomial res = algebra::resultant(pivot, with[k], v);
        if (res.is_zero()) {
          // Common factor in v: eliminate against the cofactor instead.
          Polynomial g = algebra::gcd(pivot, with[k]);
          auto cof = algebra::divide_exact(with[k], g);
          if (!cof) throw DefectError("gcd does not divide its argument");
          res = cof->contains(v) ? algebra::resultant(pivot, *cof, v) : *cof;
          if (res.is_zero()) continue;
        }
        res = strip_content(res);
        if (res.contains(next)) res = algebra::square_free_part(res, next);
        if (res.is_constant())
          throw DefectError("elimination produced a nonzero constant: the system looks inconsistent");
        without.push_back(std::move(res));
      }
    }
    // A lone equation in v only defines v and carries no constraint on the rest.
    polys = std::move(without);
    std::sort(polys.begin(), polys.end(), [next](const auto& a, const auto& b) { return simpler(a, b, next); });
  }
  std::vector<Polynomial> candidates;
  for (const auto& p : polys)
    if (p.contains(f_var)) candidates.push_back(p);
  if (candidates.empty()) throw DefectError("elimination left no polynomial in the target variable");
  std::sort(candidates.begin(), candidates.end(), [f_var](const auto& a, const auto& b) { return simpler(a, b, f_var); });
  return algebra::square_free_part(strip_content(candidates.front()), f_var);
}

Polynomial eliminate_by_groebner(const std::vector<Polynomial>& polys, const std::vector<std::size_t>& order,
                                 std::size_t x_var, std::size_t f_var, const Deadline& deadline) {
  BlockOrder block{order, {f_var, x_var}};
  for (std::size_t v = 0; v < polys.front().num_vars(); ++v) {
    bool listed = std::find(order.begin(), order.end(), v) != order.end() || v == x_var || v == f_var;
    if (listed) continue;
    for (const auto& p : polys)
      if (p.contains(v)) throw InvalidArgument("variable " + p.vars()->name(v) + " is neither kept nor eliminated");
    block.kept.push_back(v);
  }
  auto basis = groebner_basis(polys, block, deadline);
  for (const auto& g : basis) {  // ascending leading monomial
    bool free = std::none_of(order.begin(), order.end(), [&](std::size_t v) { return g.contains(v); });
    if (free && g.contains(f_var)) return strip_content(g);
  }
  throw DefectError("Groebner basis has no element in the elimination ideal");
}

}  // namespace

Polynomial eliminate_system(const std::vector<Polynomial>& equations, const std::vector<std::size_t>& eliminate_order,
                            std::size_t x_var, std::size_t f_var, const EliminationOptions& options) {
  if (equations.empty()) throw InvalidArgument("no equations to eliminate from");
  Polynomial q = options.backend == Backend::resultants
                     ? eliminate_by_resultants(equations, eliminate_order, f_var, options.deadline)
                     : eliminate_by_groebner(equations, eliminate_order, x_var, f_var, options.deadline);
  if (q.is_zero()) throw DefectError("empty elimination result");
  return to_output_vars(q, x_var, f_var);
}

std::vector<std::size_t> default_elimination_order(const scheme::AlgebraicScheme& scheme) {
  std::vector<scheme::SchemeIndex> idx;
  for (const auto& s : scheme.indices())
    if (!(s.i == 0 && s.j == 0)) idx.push_back(s);
  std::sort(idx.begin(), idx.end(), [](const auto& a, const auto& b) {
    return std::make_pair(a.i + a.j, a.i) > std::make_pair(b.i + b.j, b.i);
  });
  std::vector<std::size_t> out;
  for (const auto& s : idx) out.push_back(scheme.var_of(s));
  return out;
}

Polynomial eliminate(const scheme::AlgebraicScheme& scheme, const EliminationOptions& options) {
  std::vector<Polynomial> eqs;
  for (const auto& [idx, eq] : scheme.equations()) eqs.push_back(eq);
  return eliminate_system(eqs, default_elimination_order(scheme), scheme::AlgebraicScheme::x_var,
                          scheme.var_of({0, 0}), options);
}

BivariatePolynomial compress_exponents(const Polynomial& q, unsigned r) {
  if (r < 1) throw InvalidArgument("compression factor must be positive");
  auto x = q.vars()->index_of("x");
  auto f = q.vars()->index_of("G00");
  if (!f) f = q.vars()->index_of("F");
  if (!x || !f) throw InvalidArgument("expected a polynomial in x and G00");
  std::map<BivariatePolynomial::Key, algebra::Rational> coeffs;
  for (const auto& [e, c] : q.terms()) {
    for (std::size_t v = 0; v < e.size(); ++v)
      if (v != *x && v != *f && e[v] != 0) throw InvalidArgument("polynomial involves " + q.vars()->name(v));
    if (e[*x] % r != 0) {
      Polynomial mono = Polynomial::monomial(q.vars(), e, c);
      throw NonDivisible("x-exponent " + std::to_string(e[*x]) + " not divisible by " + std::to_string(r) +
                         " in monomial " + mono.to_string());
    }
    coeffs[{e[*f], e[*x] / r}] += c;
  }
  return BivariatePolynomial(coeffs);
}

bool verify_annihilation(const BivariatePolynomial& p, const algebra::TruncatedSeries& f,
                         const AnnihilationOptions& options) {
  const std::size_t need = options.margin_factor * (p.degree_x() + p.degree_f());
  if (f.cutoff() < need)
    throw InvalidArgument("series cutoff " + std::to_string(f.cutoff()) + " below the required " + std::to_string(need));
  return p.evaluate(f).is_zero();
}

MatchResult match_published_equation(const BivariatePolynomial& ours, const BivariatePolynomial& published) {
  if (ours == published) return {MatchVerdict::equal, std::nullopt};
  if (published.is_zero()) return {};
  auto q = algebra::bivar_divide_exact(ours, published);
  if (q && !q->is_constant()) return {MatchVerdict::proper_multiple, q};
  return {};
}

std::optional<BivariatePolynomial> published_equation(unsigned r) {
  auto text = fixtures::equation_json(r);
  if (!text) return std::nullopt;
  return algebra::bivariate_from_json(nlohmann::json::parse(*text));
}

}  // namespace w123::elimination
