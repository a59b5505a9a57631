#include "algebra/numbers.hpp"

#include "errors.hpp"

namespace w123::algebra {

std::string to_decimal(const BigInt& v) { return v.get_str(10); }

std::string to_decimal(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str(10);
  return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw ParseError("empty integer literal");
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') throw ParseError("malformed integer literal: " + s);
  if (s[0] == '+') s.erase(0, 1);
  BigInt v;
  if (v.set_str(s, 10) != 0) throw ParseError("malformed integer literal: " + s);
  return v;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in rational literal");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::size_t bit_size(const BigInt& v) {
  return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

std::size_t bit_size(const Rational& v) {
  return bit_size(v.get_num()) + bit_size(v.get_den());
}

BigInt exact_quotient(const BigInt& num, const BigInt& den) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

}  // namespace w123::algebra
