#include "algebra/bivariate.hpp"

#include <sstream>
#include <vector>

#include "errors.hpp"

namespace w123::algebra {

BivariatePolynomial::BivariatePolynomial(const std::map<Key, Rational>& coeffs) {
  BigInt den = 1;
  for (const auto& [k, c] : coeffs) den = lcm(den, c.get_den());
  for (const auto& [k, c] : coeffs) {
    if (c == 0) continue;
    terms_.emplace(k, exact_quotient(c.get_num() * den, c.get_den()));
  }
  canonicalize();
}

BivariatePolynomial BivariatePolynomial::from_integer_terms(const std::map<Key, BigInt>& coeffs) {
  BivariatePolynomial p;
  for (const auto& [k, c] : coeffs)
    if (c != 0) p.terms_.emplace(k, c);
  p.canonicalize();
  return p;
}

BivariatePolynomial BivariatePolynomial::from_polynomial(const Polynomial& p, std::size_t x_var,
                                                         std::size_t f_var) {
  std::map<Key, Rational> coeffs;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t v = 0; v < e.size(); ++v)
      if (v != x_var && v != f_var && e[v] != 0)
        throw InvalidArgument("polynomial involves " + p.vars()->name(v) + "; expected only x and F");
    coeffs[Key{e[f_var], e[x_var]}] += c;
  }
  return BivariatePolynomial(coeffs);
}

BivariatePolynomial BivariatePolynomial::one() {
  return from_integer_terms({{Key{0, 0}, BigInt(1)}});
}

void BivariatePolynomial::canonicalize() {
  if (terms_.empty()) return;
  BigInt g = 0;
  for (const auto& [k, c] : terms_) g = gcd(g, c);
  if (terms_.rbegin()->second < 0) g = -g;
  if (g != 1)
    for (auto& [k, c] : terms_) c = exact_quotient(c, g);
}

bool BivariatePolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
}

std::uint32_t BivariatePolynomial::degree_x() const {
  std::uint32_t d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.x_exp);
  return d;
}

std::uint32_t BivariatePolynomial::degree_f() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.f_exp;
}

BigInt BivariatePolynomial::coefficient(std::uint32_t x_exp, std::uint32_t f_exp) const {
  auto it = terms_.find(Key{f_exp, x_exp});
  return it == terms_.end() ? BigInt(0) : it->second;
}

TruncatedSeries BivariatePolynomial::evaluate(const TruncatedSeries& f) const {
  const std::size_t n = f.cutoff();
  TruncatedSeries acc(n);
  if (terms_.empty()) return acc;
  // Horner in F, highest power first.
  const std::uint32_t df = degree_f();
  for (std::uint32_t b = df + 1; b-- > 0;) {
    acc = acc * f;
    for (auto it = terms_.lower_bound(Key{b, 0}); it != terms_.end() && it->first.f_exp == b; ++it)
      if (it->first.x_exp < n) acc[it->first.x_exp] += Rational(it->second);
  }
  return acc;
}

Polynomial BivariatePolynomial::to_polynomial() const {
  auto vars = VariableSet::make({"x", "F"});
  Polynomial p(vars);
  for (const auto& [k, c] : terms_) p.add_term({k.x_exp, k.f_exp}, Rational(c));
  return p;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      BivariatePolynomial::Key k{ka.f_exp + kb.f_exp, ka.x_exp + kb.x_exp};
      auto [it, inserted] = out.terms_.try_emplace(k, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
  out.canonicalize();
  return out;
}

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    BigInt mag = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    bool wrote = false;
    if (mag != 1 || (k.x_exp == 0 && k.f_exp == 0)) {
      os << mag.get_str();
      wrote = true;
    }
    if (k.x_exp) {
      os << (wrote ? "*" : "") << "x";
      if (k.x_exp > 1) os << "^" << k.x_exp;
      wrote = true;
    }
    if (k.f_exp) {
      os << (wrote ? "*" : "") << "F";
      if (k.f_exp > 1) os << "^" << k.f_exp;
    }
  }
  return os.str();
}

std::optional<BivariatePolynomial> bivar_divide_exact(const BivariatePolynomial& num,
                                                      const BivariatePolynomial& den) {
  if (den.is_zero()) throw InvalidArgument("division by the zero polynomial");
  using Key = BivariatePolynomial::Key;
  std::map<Key, BigInt> rem(num.terms().begin(), num.terms().end());
  std::map<Key, BigInt> quot;
  const auto& [lk, lc] = *den.terms().rbegin();
  while (!rem.empty()) {
    auto [k, c] = *rem.rbegin();
    if (k.f_exp < lk.f_exp || k.x_exp < lk.x_exp) return std::nullopt;
    if (!mpz_divisible_p(c.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    Key m{k.f_exp - lk.f_exp, k.x_exp - lk.x_exp};
    BigInt q = exact_quotient(c, lc);
    quot[m] = q;
    for (const auto& [dk, dc] : den.terms()) {
      Key t{dk.f_exp + m.f_exp, dk.x_exp + m.x_exp};
      BigInt& slot = rem[t];
      slot -= q * dc;
      if (slot == 0) rem.erase(t);
    }
  }
  return BivariatePolynomial::from_integer_terms(quot);
}

}  // namespace w123::algebra
