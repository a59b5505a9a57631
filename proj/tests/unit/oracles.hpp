#pragma once

// Reference implementations used to cross-check the library. They are
// deliberately naive: cofactor expansion, binomial closed forms, exhaustive
// enumeration.

#include <algorithm>
#include <array>
#include <cstddef>
#include <random>
#include <vector>

#include "algebra/numbers.hpp"
#include "algebra/polynomial.hpp"
#include "algebra/series.hpp"

namespace w123::oracle {

using algebra::BigInt;
using algebra::Polynomial;
using algebra::Rational;

template <class T>
T laplace_determinant(const std::vector<std::vector<T>>& m, const T& zero, const T& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  if (n == 1) return m[0][0];
  T acc = zero;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == zero) continue;
    std::vector<std::vector<T>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    T term = m[0][c] * laplace_determinant(minor, zero, one);
    if (c % 2) acc = acc - term;
    else acc = acc + term;
  }
  return acc;
}

inline Rational determinant(const std::vector<std::vector<Rational>>& m) {
  return laplace_determinant<Rational>(m, Rational(0), Rational(1));
}

// Cramer's rule for a nonsingular square system.
inline std::vector<Rational> cramer(const std::vector<std::vector<Rational>>& m, const std::vector<Rational>& rhs) {
  const Rational d = determinant(m);
  std::vector<Rational> out;
  for (std::size_t c = 0; c < m.size(); ++c) {
    auto mc = m;
    for (std::size_t r = 0; r < m.size(); ++r) mc[r][c] = rhs[r];
    out.push_back(determinant(mc) / d);
  }
  return out;
}

// Determinant of the Sylvester matrix, expanded by cofactors.
inline Polynomial sylvester_resultant(const Polynomial& p, const Polynomial& q, std::size_t var) {
  const auto& vars = p.vars();
  const auto a = p.coefficients_in(var);  // a[k] multiplies var^k
  const auto b = q.coefficients_in(var);
  const std::size_t m = a.size() - 1, n = b.size() - 1, size = m + n;
  const Polynomial zero(vars), one(vars, 1);
  std::vector<std::vector<Polynomial>> s(size, std::vector<Polynomial>(size, zero));
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t k = 0; k <= m; ++k) s[row][row + k] = a[m - k];
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t k = 0; k <= n; ++k) s[n + row][row + k] = b[n - k];
  return laplace_determinant<Polynomial>(s, zero, one);
}

// Triple loop over positions.
inline bool naive_contains(const std::vector<int>& w, const std::array<int, 3>& perm) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const int t[3] = {w[i], w[j], w[k]};
        bool ok = t[0] != t[1] && t[1] != t[2] && t[0] != t[2];
        for (int a = 0; ok && a < 3; ++a)
          for (int b = 0; ok && b < 3; ++b)
            if ((perm[a] < perm[b]) != (t[a] < t[b])) ok = false;
        if (ok) return true;
      }
  return false;
}

// Enumerates every distinct rearrangement with std::next_permutation.
inline BigInt naive_count_avoiders(const std::vector<unsigned>& counts, const std::array<int, 3>& perm) {
  std::vector<int> w;
  for (std::size_t i = 0; i < counts.size(); ++i) w.insert(w.end(), counts[i], static_cast<int>(i + 1));
  BigInt total = 0;
  do {
    if (!naive_contains(w, perm)) ++total;
  } while (std::next_permutation(w.begin(), w.end()));
  return total;
}

// Calls fn on every word of length <= max_length over {1..alphabet}.
template <class Fn>
void for_each_word(unsigned max_length, unsigned alphabet, Fn&& fn) {
  std::vector<int> w;
  for (unsigned len = 0; len <= max_length; ++len) {
    w.assign(len, 1);
    for (;;) {
      fn(w);
      std::size_t pos = len;
      while (pos > 0 && w[pos - 1] == static_cast<int>(alphabet)) w[--pos] = 1;
      if (pos == 0) break;
      ++w[pos - 1];
    }
  }
}

// Calls fn on every vector of positive entries with sum <= max_total.
template <class Fn>
void for_each_composition(unsigned max_total, Fn&& fn) {
  std::vector<unsigned> v;
  auto rec = [&](auto&& self, unsigned left) -> void {
    fn(v);
    for (unsigned a = 1; a <= left; ++a) {
      v.push_back(a);
      self(self, left - a);
      v.pop_back();
    }
  };
  rec(rec, max_total);
}

inline BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

inline BigInt catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

inline std::vector<BigInt> catalan_prefix(unsigned nmax) {
  std::vector<BigInt> out;
  for (unsigned n = 0; n <= nmax; ++n) out.push_back(catalan(n));
  return out;
}

// Random polynomial with small integer coefficients over the given variables.
inline Polynomial random_polynomial(std::mt19937_64& rng, const algebra::VarsPtr& vars, unsigned max_degree,
                                    unsigned max_terms) {
  std::uniform_int_distribution<int> coeff(-9, 9), deg(0, static_cast<int>(max_degree)),
      count(0, static_cast<int>(max_terms));
  Polynomial p(vars);
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    algebra::Exponents e(vars->size());
    for (auto& v : e) v = static_cast<std::uint32_t>(deg(rng));
    p.add_term(e, Rational(coeff(rng)));
  }
  return p;
}

}  // namespace w123::oracle
