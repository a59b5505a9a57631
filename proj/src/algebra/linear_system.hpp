#pragma once

#include <vector>

#include "algebra/numbers.hpp"

namespace w123::algebra {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntegerMatrix = std::vector<std::vector<BigInt>>;

struct LinearSolution {
  enum class Status { solved, inconsistent };

  Status status = Status::inconsistent;
  // One solution (free variables set to zero); empty when inconsistent.
  std::vector<Rational> particular;
  // Basis of the null space of the coefficient matrix. Computed for every
  // system, consistent or not.
  std::vector<std::vector<Rational>> kernel;

  bool consistent() const { return status == Status::solved; }
  bool unique() const { return consistent() && kernel.empty(); }
};

// Exact solve of M x = rhs. Rows are scaled to integers and reduced with
// fraction-free (Bareiss) elimination; at each step the pivot is the nonzero
// entry of the remaining block with the fewest bits. The answer is re-checked
// against the original system and a mismatch raises DefectError.
LinearSolution solve_linear_system(const RationalMatrix& m, const std::vector<Rational>& rhs);

// Null-space basis of an integer matrix, each vector primitive with its last
// nonzero entry positive. ncols is needed when m has no rows.
std::vector<std::vector<BigInt>> integer_kernel(const IntegerMatrix& m, std::size_t ncols);

// Rank of an integer matrix reduced modulo a fixed 61-bit prime. Never exceeds
// the rank over Q, so a full modular rank proves a trivial rational kernel.
std::size_t rank_mod_prime(const IntegerMatrix& m, std::size_t ncols);

}  // namespace w123::algebra
