#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "algebra/numbers.hpp"

namespace w123::words {

using algebra::BigInt;

// Letters are positive integers; 1 is the smallest letter of the alphabet.
using Word = std::vector<int>;

// A permutation of {1, 2, 3}.
class Pattern {
 public:
  explicit Pattern(std::array<int, 3> perm);
  static Pattern p123() { return Pattern({1, 2, 3}); }
  static Pattern p132() { return Pattern({1, 3, 2}); }
  static Pattern p231() { return Pattern({2, 3, 1}); }

  const std::array<int, 3>& perm() const { return perm_; }
  std::string to_string() const;
  bool operator==(const Pattern&) const = default;

 private:
  std::array<int, 3> perm_;
};

// Letter multiplicities (a_1, ..., a_n): a_i copies of letter i.
struct MultiplicityVector {
  std::vector<unsigned> counts;

  unsigned total() const;
  // Sorted ascending with zero entries removed; the memoization key.
  MultiplicityVector canonical() const;
  // The lexicographically smallest word with these multiplicities.
  Word smallest_word() const;
  // (r, r, ..., r) with n entries.
  static MultiplicityVector uniform(unsigned r, unsigned n);
  bool operator==(const MultiplicityVector&) const = default;
};

inline constexpr std::size_t kDefaultBruteForceCap = 12;

bool is_valid_word(const Word& w);

// True iff some i < j < k carries distinct letters order-isomorphic to p.
bool contains_pattern(const Word& w, const Pattern& p);

// Exhaustive count over all distinct rearrangements of the multiset, visited
// in lexicographic-successor order. A prefix that already contains p is
// skipped as a block, since every completion of it contains p as well.
// Throws CapExceeded when the total length exceeds cap.
BigInt count_avoiders_bruteforce(const MultiplicityVector& a, const Pattern& p,
                                 std::size_t cap = kDefaultBruteForceCap);

// The recursive involution exchanging 123-avoiding and 132-avoiding words.
Word bijection_F(const Word& w);

// Memoized evaluation of
//   A(a_1..a_n) = sum_i A(a_1, .., a_{i-1}, a_i - 1, a_{i+1} + .. + a_n),  A() = 1,
// keyed on the canonical (sorted, zero-free) vector, which is valid because A
// is symmetric in its arguments. The memo table belongs to one instance; use
// one instance per thread.
class AvoiderCounter {
 public:
  BigInt count(const MultiplicityVector& a);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  const BigInt& eval(const std::vector<unsigned>& key);
  std::map<std::vector<unsigned>, BigInt> memo_;
};

BigInt count_avoiders_recurrence(const MultiplicityVector& a);

}  // namespace w123::words
