#include "algebra/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace w123::algebra {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw InvalidArgument("duplicate variable name: " + names_[i]);
}

std::shared_ptr<const VariableSet> VariableSet::make(std::vector<std::string> names) {
  return std::make_shared<const VariableSet>(std::move(names));
}

std::optional<std::size_t> VariableSet::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

Polynomial::Polynomial(VarsPtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw InvalidArgument("polynomial needs a variable set");
}

Polynomial::Polynomial(VarsPtr vars, const Rational& constant) : Polynomial(std::move(vars)) {
  if (constant != 0) terms_.emplace(Exponents(vars_->size(), 0), constant);
}

Polynomial Polynomial::variable(VarsPtr vars, std::size_t index, std::uint32_t power) {
  if (index >= vars->size()) throw InvalidArgument("variable index out of range");
  Exponents e(vars->size(), 0);
  e[index] = power;
  return monomial(std::move(vars), std::move(e), 1);
}

Polynomial Polynomial::variable(VarsPtr vars, const std::string& name, std::uint32_t power) {
  auto idx = vars->index_of(name);
  if (!idx) throw InvalidArgument("unknown variable: " + name);
  return variable(std::move(vars), *idx, power);
}

Polynomial Polynomial::monomial(VarsPtr vars, Exponents exps, const Rational& coeff) {
  Polynomial p(std::move(vars));
  if (exps.size() != p.num_vars()) throw InvalidArgument("exponent vector length mismatch");
  if (coeff != 0) p.terms_.emplace(std::move(exps), coeff);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(),
                                            terms_.begin()->first.end(),
                                            [](std::uint32_t e) { return e == 0; }));
}

Rational Polynomial::constant_term() const { return coefficient(Exponents(num_vars(), 0)); }

Rational Polynomial::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& exps, const Rational& coeff) {
  if (coeff == 0) return;
  if (exps.size() != num_vars()) throw InvalidArgument("exponent vector length mismatch");
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::uint32_t Polynomial::degree(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    std::uint32_t s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < num_vars(); ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::vector<Polynomial> out(degree(var) + 1, Polynomial(vars_));
  if (is_zero()) return {};
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[var] = 0;
    out[e[var]].terms_.emplace(std::move(rest), c);
  }
  return out;
}

Polynomial Polynomial::from_coefficients(const VarsPtr& vars, std::size_t var,
                                         const std::vector<Polynomial>& coeffs) {
  Polynomial p(vars);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& [e, c] : coeffs[k].terms_) {
      Exponents f = e;
      f[var] += static_cast<std::uint32_t>(k);
      p.add_term(f, c);
    }
  }
  return p;
}

Polynomial Polynomial::leading_coefficient_in(std::size_t var) const {
  if (is_zero()) return Polynomial(vars_);
  return coefficients_in(var).back();
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial d(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    f[var] -= 1;
    d.terms_.emplace(std::move(f), c * e[var]);
  }
  return d;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(vars_, 1);
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  BigInt den = 1;
  for (const auto& [e, c] : terms_) den = lcm(den, c.get_den());
  BigInt content = 0;
  for (const auto& [e, c] : terms_) {
    BigInt num = exact_quotient(c.get_num() * den, c.get_den());
    content = gcd(content, num);
  }
  if (terms_.rbegin()->second < 0) content = -content;
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    BigInt num = exact_quotient(c.get_num() * den, c.get_den());
    out.terms_.emplace(e, Rational(exact_quotient(num, content)));
  }
  return out;
}

Exponents Polynomial::monomial_content() const {
  Exponents m(num_vars(), 0);
  if (is_zero()) return m;
  m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t v = 0; v < m.size(); ++v) m[v] = std::min(m[v], e[v]);
  return m;
}

Polynomial Polynomial::divide_by_monomial(const Exponents& m) const {
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    for (std::size_t v = 0; v < f.size(); ++v) {
      if (f[v] < m[v]) throw NonDivisible("monomial does not divide polynomial");
      f[v] -= m[v];
    }
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

Polynomial Polynomial::remap(const VarsPtr& target) const {
  std::vector<std::size_t> map(num_vars(), target->size());
  for (std::size_t v = 0; v < num_vars(); ++v) {
    auto idx = target->index_of(vars_->name(v));
    if (idx) map[v] = *idx;
  }
  Polynomial out(target);
  for (const auto& [e, c] : terms_) {
    Exponents f(target->size(), 0);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (map[v] == target->size())
        throw InvalidArgument("variable " + vars_->name(v) + " missing from target set");
      f[map[v]] = e[v];
    }
    out.add_term(f, c);
  }
  return out;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (vars_ != other.vars_ && !(*vars_ == *other.vars_))
    throw InvalidArgument("polynomials over different variable sets");
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.vars_);
  Exponents f(a.num_vars());
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t v = 0; v < f.size(); ++v) f[v] = ea[v] + eb[v];
      prod = ca * cb;
      out.add_term(f, prod);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return (vars_ == other.vars_ || *vars_ == *other.vars_) && terms_ == other.terms_;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    bool unit_monomial = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || unit_monomial) {
      os << to_decimal(mag);
      wrote = true;
    }
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (wrote) os << "*";
      os << vars_->name(v);
      if (e[v] > 1) os << "^" << e[v];
      wrote = true;
    }
  }
  return os.str();
}

Polynomial poly_arith(const Polynomial& p, const Polynomial& q, PolyOp op) {
  switch (op) {
    case PolyOp::add: return p + q;
    case PolyOp::sub: return p - q;
    case PolyOp::mul: return p * q;
  }
  throw InvalidArgument("unknown polynomial operation");
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw InvalidArgument("division by the zero polynomial");
  Polynomial rem = p;
  Polynomial quot(p.vars());
  const auto& [lead_e, lead_c] = *q.terms().rbegin();
  const std::size_t n = p.num_vars();
  Exponents m(n);
  while (!rem.is_zero()) {
    const auto& [e, c] = *rem.terms().rbegin();
    for (std::size_t v = 0; v < n; ++v) {
      if (e[v] < lead_e[v]) return std::nullopt;
      m[v] = e[v] - lead_e[v];
    }
    Rational coeff = c / lead_c;
    quot.add_term(m, coeff);
    Exponents f(n);
    for (const auto& [eq, cq] : q.terms()) {
      for (std::size_t v = 0; v < n; ++v) f[v] = eq[v] + m[v];
      rem.add_term(f, -coeff * cq);
    }
  }
  return quot;
}

namespace {

using Dense = std::vector<Polynomial>;  // coefficients in one variable, ascending

void trim(Dense& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Polynomial exact(const Polynomial& p, const Polynomial& q) {
  auto r = divide_exact(p, q);
  if (!r) throw DefectError("expected exact polynomial division failed");
  return *r;
}

Dense dense_prem(Dense a, const Dense& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return a;
  unsigned e = static_cast<unsigned>(a.size() - b.size() + 1);
  const Polynomial& lcb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    Polynomial lca = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lcb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= lca * b[i];
    trim(a);
    --e;
  }
  if (e > 0) {
    Polynomial f = lcb.pow(e);
    for (auto& c : a) c *= f;
  }
  return a;
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.vars());
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.primitive() : gcd(g, c);
    if (g.is_constant()) return Polynomial(p.vars(), 1);
  }
  return g;
}

}  // namespace

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
  if (b.is_zero()) throw InvalidArgument("pseudo-remainder by zero");
  Dense r = dense_prem(a.coefficients_in(var), b.coefficients_in(var));
  return Polynomial::from_coefficients(a.vars(), var, r);
}

Polynomial resultant(const Polynomial& p, const Polynomial& q, std::size_t var) {
  if (p.vars() != q.vars() && !(*p.vars() == *q.vars()))
    throw InvalidArgument("polynomials over different variable sets");
  const auto& vars = p.vars();
  const unsigned dp = p.degree(var), dq = q.degree(var);
  if (dp == 0 && dq == 0) throw DegenerateInput("resultant: neither polynomial involves " + vars->name(var));
  if (p.is_zero() || q.is_zero()) return Polynomial(vars);
  if (dp == 0) return p.pow(dq);
  if (dq == 0) return q.pow(dp);

  Dense a = p.coefficients_in(var), b = q.coefficients_in(var);
  Rational sign = 1;
  if (a.size() < b.size()) {
    std::swap(a, b);
    if ((dp & 1u) && (dq & 1u)) sign = -sign;
  }
  Polynomial g(vars, 1), h(vars, 1);
  for (;;) {
    const std::size_t da = a.size() - 1, db = b.size() - 1;
    const unsigned delta = static_cast<unsigned>(da - db);
    if ((da & 1u) && (db & 1u)) sign = -sign;
    Dense r = dense_prem(a, b);
    a = std::move(b);
    if (r.empty()) return Polynomial(vars);
    Polynomial div = g * h.pow(delta);
    for (auto& c : r) c = exact(c, div);
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact(g.pow(delta), h.pow(delta - 1));
    }
    if (b.size() == 1) {
      const std::size_t dA = a.size() - 1;
      Polynomial res = dA == 1 ? b.back() : exact(b.back().pow(static_cast<unsigned>(dA)),
                                                  h.pow(static_cast<unsigned>(dA - 1)));
      return res * sign;
    }
  }
}

namespace {

BigInt max_norm(const Polynomial& p) {
  BigInt m = 0;
  for (const auto& [e, c] : p.terms()) {
    BigInt a = abs(c.get_num());
    if (a > m) m = a;
  }
  return m;
}

Polynomial evaluate_at(const Polynomial& p, std::size_t var, const BigInt& value) {
  Polynomial out(p.vars());
  std::vector<BigInt> powers{1};
  for (const auto& [e, c] : p.terms()) {
    while (powers.size() <= e[var]) powers.push_back(powers.back() * value);
    Exponents f = e;
    f[var] = 0;
    out.add_term(f, c * powers[e[var]]);
  }
  return out;
}

// Inverse of evaluate_at with symmetric digits, valid when every coefficient
// of the answer is below xi / 2 in magnitude.
Polynomial xi_adic(Polynomial h, std::size_t var, const BigInt& xi) {
  Polynomial out(h.vars());
  const BigInt half = xi / 2;
  for (std::uint32_t i = 0; !h.is_zero(); ++i) {
    Polynomial next(h.vars());
    for (const auto& [e, c] : h.terms()) {
      BigInt digit = c.get_num() % xi;  // truncated, same sign as c
      if (digit > half) digit -= xi;
      if (digit < -half) digit += xi;
      Exponents f = e;
      f[var] = i;
      out.add_term(f, digit);
      next.add_term(e, Rational(exact_quotient(c.get_num() - digit, xi)));
    }
    h = std::move(next);
  }
  return out;
}

BigInt integer_content(const Polynomial& p) {
  BigInt g = 0;
  for (const auto& [e, c] : p.terms()) g = algebra::gcd(g, c.get_num());
  return g;
}

// Heuristic gcd of integer polynomials: evaluate the lowest variable at a
// large integer, recurse, reconstruct, and accept only a verified common divisor.
std::optional<Polynomial> heuristic_gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return std::nullopt;
  const auto& vars = p.vars();
  std::size_t var = vars->size();
  for (std::size_t v = 0; v < vars->size(); ++v)
    if (p.contains(v) || q.contains(v)) {
      var = v;
      break;
    }
  if (var == vars->size()) return Polynomial(vars, algebra::gcd(p.terms().begin()->second.get_num(),
                                                                q.terms().begin()->second.get_num()));
  BigInt xi = 2 * std::min(max_norm(p), max_norm(q)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    auto h = heuristic_gcd(evaluate_at(p, var, xi), evaluate_at(q, var, xi));
    if (h) {
      Polynomial cand = xi_adic(*h, var, xi).primitive();
      if (!cand.is_zero() && divide_exact(p, cand) && divide_exact(q, cand))
        return cand * Rational(algebra::gcd(integer_content(p), integer_content(q)));
    }
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), xi.get_mpz_t());
    mpz_sqrt(root.get_mpz_t(), root.get_mpz_t());
    xi = xi * root * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero()) return q.primitive();
  if (q.is_zero()) return p.primitive();
  if (auto h = heuristic_gcd(p.primitive(), q.primitive())) return h->primitive();
  return subresultant_gcd(p, q);
}

Polynomial subresultant_gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero()) return q.primitive();
  if (q.is_zero()) return p.primitive();
  const auto& vars = p.vars();
  std::size_t var = vars->size();
  for (std::size_t v = vars->size(); v-- > 0;) {
    if (p.contains(v) || q.contains(v)) {
      var = v;
      break;
    }
  }
  if (var == vars->size()) return Polynomial(vars, 1);
  if (!p.contains(var)) return gcd(p, content_in(q, var));
  if (!q.contains(var)) return gcd(content_in(p, var), q);

  Polynomial cp = content_in(p, var), cq = content_in(q, var);
  Polynomial c = gcd(cp, cq);
  Dense a = exact(p, cp).coefficients_in(var);
  Dense b = exact(q, cq).coefficients_in(var);
  if (a.size() < b.size()) std::swap(a, b);
  Polynomial g(vars, 1), h(vars, 1);
  Polynomial last(vars);
  for (;;) {
    const unsigned delta = static_cast<unsigned>(a.size() - b.size());
    Dense r = dense_prem(a, b);
    if (r.empty()) {
      last = Polynomial::from_coefficients(vars, var, b);
      break;
    }
    if (r.size() == 1) return c.primitive();
    a = std::move(b);
    Polynomial div = g * h.pow(delta);
    for (auto& x : r) x = exact(x, div);
    b = std::move(r);
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact(g.pow(delta), h.pow(delta - 1));
    }
  }
  Polynomial prim = exact(last, content_in(last, var));
  return (c * prim).primitive();
}

Polynomial square_free_part(const Polynomial& p, std::size_t var) {
  if (!p.contains(var)) return p.primitive();
  Polynomial g = gcd(p, p.derivative(var));
  if (g.is_constant()) return p.primitive();
  return exact(p, g).primitive();
}

}  // namespace w123::algebra
