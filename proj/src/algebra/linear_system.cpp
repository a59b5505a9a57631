#include "algebra/linear_system.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

#include "errors.hpp"

namespace w123::algebra {
namespace {

// Row echelon form of an integer matrix (with optional augmented column).
struct Echelon {
  IntegerMatrix a;                   // rows permuted, columns permuted per col_order
  std::vector<std::size_t> col_order;  // col_order[k] = original column in position k
  std::size_t rank = 0;
  std::size_t ncols = 0;             // coefficient columns (augmented column excluded)
};

Echelon bareiss(IntegerMatrix a, std::size_t ncols) {
  Echelon e;
  e.ncols = ncols;
  e.col_order.resize(ncols);
  std::iota(e.col_order.begin(), e.col_order.end(), 0);
  const std::size_t rows = a.size();
  const std::size_t width = rows ? a[0].size() : ncols;
  BigInt prev = 1;
  std::size_t k = 0;
  for (; k < std::min(rows, ncols); ++k) {
    std::size_t best_i = rows, best_j = ncols;
    std::size_t best_bits = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < ncols; ++j) {
        if (a[i][j] == 0) continue;
        std::size_t b = bit_size(a[i][j]);
        if (b < best_bits) {
          best_bits = b;
          best_i = i;
          best_j = j;
        }
      }
    if (best_i == rows) break;
    std::swap(a[k], a[best_i]);
    if (best_j != k) {
      for (auto& row : a) std::swap(row[k], row[best_j]);
      std::swap(e.col_order[k], e.col_order[best_j]);
    }
    const BigInt& piv = a[k][k];
    BigInt t;
    for (std::size_t i = k + 1; i < rows; ++i) {
      const BigInt lead = a[i][k];
      for (std::size_t j = k + 1; j < width; ++j) {
        // a[i][j] = (piv * a[i][j] - lead * a[k][j]) / prev
        t = piv * a[i][j];
        if (lead != 0) t -= lead * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = piv;
  }
  e.rank = k;
  e.a = std::move(a);
  return e;
}

// Solves the leading rank x rank triangle for the pivot unknowns given values
// of the free unknowns, writing into x (indexed by permuted position).
void back_substitute(const Echelon& e, const std::vector<Rational>& rhs, std::vector<Rational>& x) {
  for (std::size_t i = e.rank; i-- > 0;) {
    Rational s = rhs[i];
    for (std::size_t j = i + 1; j < e.ncols; ++j)
      if (x[j] != 0 && e.a[i][j] != 0) s -= Rational(e.a[i][j]) * x[j];
    x[i] = s / Rational(e.a[i][i]);
  }
}

std::vector<std::vector<Rational>> kernel_from(const Echelon& e) {
  std::vector<std::vector<Rational>> basis;
  std::vector<Rational> zero_rhs(e.rank, 0);
  for (std::size_t f = e.rank; f < e.ncols; ++f) {
    std::vector<Rational> x(e.ncols, 0);
    x[f] = 1;
    back_substitute(e, zero_rhs, x);
    std::vector<Rational> v(e.ncols);
    for (std::size_t k = 0; k < e.ncols; ++k) v[e.col_order[k]] = x[k];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<BigInt> to_primitive(const std::vector<Rational>& v) {
  BigInt den = 1;
  for (const auto& c : v) den = lcm(den, c.get_den());
  std::vector<BigInt> out(v.size());
  BigInt g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = exact_quotient(v[i].get_num() * den, v[i].get_den());
    g = gcd(g, out[i]);
  }
  if (g == 0) return out;
  auto last = std::find_if(out.rbegin(), out.rend(), [](const BigInt& c) { return c != 0; });
  if (*last < 0) g = -g;
  for (auto& c : out) c = exact_quotient(c, g);
  return out;
}

}  // namespace

LinearSolution solve_linear_system(const RationalMatrix& m, const std::vector<Rational>& rhs) {
  const std::size_t rows = m.size();
  if (rhs.size() != rows) throw InvalidArgument("right-hand side length does not match row count");
  const std::size_t ncols = rows ? m[0].size() : 0;
  for (const auto& row : m)
    if (row.size() != ncols) throw InvalidArgument("ragged matrix");

  IntegerMatrix a(rows, std::vector<BigInt>(ncols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    BigInt den = rhs[i].get_den();
    for (const auto& c : m[i]) den = lcm(den, c.get_den());
    for (std::size_t j = 0; j < ncols; ++j)
      a[i][j] = exact_quotient(m[i][j].get_num() * den, m[i][j].get_den());
    a[i][ncols] = exact_quotient(rhs[i].get_num() * den, rhs[i].get_den());
  }
  Echelon e = bareiss(std::move(a), ncols);

  LinearSolution sol;
  sol.kernel = kernel_from(e);
  for (std::size_t i = e.rank; i < rows; ++i)
    if (e.a[i][ncols] != 0) return sol;

  std::vector<Rational> b(e.rank);
  for (std::size_t i = 0; i < e.rank; ++i) b[i] = Rational(e.a[i][ncols]);
  std::vector<Rational> x(ncols, 0);
  back_substitute(e, b, x);
  sol.particular.assign(ncols, 0);
  for (std::size_t k = 0; k < ncols; ++k) sol.particular[e.col_order[k]] = x[k];
  sol.status = LinearSolution::Status::solved;

  for (std::size_t i = 0; i < rows; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < ncols; ++j) s += m[i][j] * sol.particular[j];
    if (s != rhs[i]) throw DefectError("linear solve failed its residual check");
    for (const auto& v : sol.kernel) {
      Rational t = 0;
      for (std::size_t j = 0; j < ncols; ++j) t += m[i][j] * v[j];
      if (t != 0) throw DefectError("kernel vector failed its residual check");
    }
  }
  return sol;
}

std::vector<std::vector<BigInt>> integer_kernel(const IntegerMatrix& m, std::size_t ncols) {
  for (const auto& row : m)
    if (row.size() != ncols) throw InvalidArgument("ragged matrix");
  Echelon e = bareiss(m, ncols);
  std::vector<std::vector<BigInt>> out;
  for (const auto& v : kernel_from(e)) out.push_back(to_primitive(v));
  for (const auto& row : m)
    for (const auto& v : out) {
      BigInt t = 0;
      for (std::size_t j = 0; j < ncols; ++j) t += row[j] * v[j];
      if (t != 0) throw DefectError("kernel vector failed its residual check");
    }
  return out;
}

std::size_t rank_mod_prime(const IntegerMatrix& m, std::size_t ncols) {
  using u64 = std::uint64_t;
  using u128 = unsigned __int128;
  constexpr u64 p = 2305843009213693951ULL;  // 2^61 - 1
  const BigInt pz(std::to_string(p));
  std::vector<std::vector<u64>> a(m.size(), std::vector<u64>(ncols));
  BigInt t;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j) {
      mpz_fdiv_r(t.get_mpz_t(), m[i][j].get_mpz_t(), pz.get_mpz_t());
      a[i][j] = static_cast<u64>(mpz_get_ui(t.get_mpz_t()));
    }
  auto mulmod = [](u64 x, u64 y) { return static_cast<u64>((u128)x * y % p); };
  auto powmod = [&](u64 b, u64 e) {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, b);
      b = mulmod(b, b);
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[rank], a[piv]);
    u64 inv = powmod(a[rank][c], p - 2);
    for (std::size_t j = c; j < ncols; ++j) a[rank][j] = mulmod(a[rank][j], inv);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      u64 f = a[i][c];
      if (!f) continue;
      for (std::size_t j = c; j < ncols; ++j) a[i][j] = (a[i][j] + p - mulmod(f, a[rank][j])) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace w123::algebra
