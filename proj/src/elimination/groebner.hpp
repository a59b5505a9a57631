#pragma once

#include <cstddef>
#include <vector>

#include "algebra/polynomial.hpp"
#include "deadline.hpp"

namespace w123::elimination {

// Block elimination order: monomials are first compared on the eliminated
// variables by graded reverse lexicographic order, and ties are broken on the
// kept variables by pure lex. `eliminated` and `kept` list variable indices
// from most to least significant and together must cover every variable
// that occurs in the input.
struct BlockOrder {
  std::vector<std::size_t> eliminated;
  std::vector<std::size_t> kept;
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped = 0;   // removed by the product or chain criterion
  std::size_t zero_reductions = 0;
  std::size_t basis_size = 0;      // of the final reduced basis
};

// Reduced Groebner basis (Buchberger with Gebauer-Moeller pair pruning and
// the sugar selection strategy), each element integer-primitive with positive
// leading coefficient, sorted by ascending leading monomial.
std::vector<algebra::Polynomial> groebner_basis(const std::vector<algebra::Polynomial>& generators,
                                                const BlockOrder& order, const Deadline& deadline,
                                                GroebnerStats* stats = nullptr);

}  // namespace w123::elimination
