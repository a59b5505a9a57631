#include "words/words.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "errors.hpp"

namespace w123::words {

Pattern::Pattern(std::array<int, 3> perm) : perm_(perm) {
  std::array<int, 3> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{1, 2, 3}) throw InvalidArgument("pattern must be a permutation of 1,2,3");
}

std::string Pattern::to_string() const {
  return std::to_string(perm_[0]) + std::to_string(perm_[1]) + std::to_string(perm_[2]);
}

unsigned MultiplicityVector::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0u);
}

MultiplicityVector MultiplicityVector::canonical() const {
  MultiplicityVector out;
  for (unsigned c : counts)
    if (c) out.counts.push_back(c);
  std::sort(out.counts.begin(), out.counts.end());
  return out;
}

Word MultiplicityVector::smallest_word() const {
  Word w;
  for (std::size_t i = 0; i < counts.size(); ++i) w.insert(w.end(), counts[i], static_cast<int>(i + 1));
  return w;
}

MultiplicityVector MultiplicityVector::uniform(unsigned r, unsigned n) {
  return MultiplicityVector{std::vector<unsigned>(n, r)};
}

bool is_valid_word(const Word& w) {
  return std::all_of(w.begin(), w.end(), [](int c) { return c >= 1; });
}

namespace {

int sign(int d) { return (d > 0) - (d < 0); }

// Which side of the middle and last letters the first letter must lie on.
struct TripleShape {
  int first_vs_mid;   // sign(p0 - p1)
  int first_vs_last;  // sign(p0 - p2)
  int mid_vs_last;    // sign(p1 - p2)
};

TripleShape shape_of(const Pattern& p) {
  const auto& s = p.perm();
  return {sign(s[0] - s[1]), sign(s[0] - s[2]), sign(s[1] - s[2])};
}

// Smallest k such that w[0..k] contains p; w.size() if w avoids p.
// Letters must lie in [1, 62].
std::size_t prefix_end_small_alphabet(const Word& w, const TripleShape& t,
                                      std::vector<std::uint64_t>& left) {
  const std::size_t n = w.size();
  left.resize(n + 1);
  left[0] = 0;
  for (std::size_t j = 0; j < n; ++j) left[j + 1] = left[j] | (std::uint64_t{1} << w[j]);
  auto open_interval = [](int lo, int hi) -> std::uint64_t {
    // letters v with lo < v < hi
    if (hi - lo <= 1) return 0;
    std::uint64_t below_hi = (std::uint64_t{1} << hi) - 1;
    std::uint64_t upto_lo = (std::uint64_t{1} << (lo + 1)) - 1;
    return below_hi & ~upto_lo;
  };
  for (std::size_t k = 2; k < n; ++k) {
    const int c = w[k];
    for (std::size_t j = 1; j < k; ++j) {
      const int b = w[j];
      if (sign(b - c) != t.mid_vs_last) continue;
      int lo = 0, hi = 63;
      (t.first_vs_mid < 0 ? hi : lo) = b;
      if (t.first_vs_last < 0)
        hi = std::min(hi, c);
      else
        lo = std::max(lo, c);
      if (left[j] & open_interval(lo, hi)) return k;
    }
  }
  return n;
}

}  // namespace

bool contains_pattern(const Word& w, const Pattern& p) {
  const TripleShape t = shape_of(p);
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sign(w[i] - w[j]) != t.first_vs_mid) continue;
      for (std::size_t k = j + 1; k < n; ++k)
        if (sign(w[i] - w[k]) == t.first_vs_last && sign(w[j] - w[k]) == t.mid_vs_last) return true;
    }
  return false;
}

BigInt count_avoiders_bruteforce(const MultiplicityVector& a, const Pattern& p, std::size_t cap) {
  if (a.total() > cap)
    throw CapExceeded("brute force limited to " + std::to_string(cap) + " letters, got " +
                      std::to_string(a.total()));
  // Zero-count letters are dropped; the order of the rest is kept so the
  // count does not lean on the symmetry of A.
  MultiplicityVector c;
  for (unsigned k : a.counts)
    if (k) c.counts.push_back(k);
  if (c.counts.size() > 62) throw CapExceeded("brute force alphabet limited to 62 letters");
  Word w = c.smallest_word();
  const TripleShape t = shape_of(p);
  std::vector<std::uint64_t> scratch;
  std::uint64_t count = 0;
  for (;;) {
    std::size_t end = prefix_end_small_alphabet(w, t, scratch);
    if (end == w.size()) {
      ++count;
    } else {
      std::sort(w.begin() + static_cast<std::ptrdiff_t>(end) + 1, w.end(), std::greater<>());
    }
    if (!std::next_permutation(w.begin(), w.end())) break;
  }
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(count), 0, 0, &count);
  return out;
}

Word bijection_F(const Word& w) {
  if (w.empty()) return w;
  const int i = w.front();
  Word beheaded(w.begin() + 1, w.end());
  for (int& c : beheaded) c = std::min(c, i + 1);
  Word s;
  for (int c : w)
    if (c > i) s.push_back(c);
  std::reverse(s.begin(), s.end());
  Word v = bijection_F(beheaded);
  Word out;
  out.reserve(w.size());
  out.push_back(i);
  std::size_t next = 0;
  for (int c : v) out.push_back(c == i + 1 ? s.at(next++) : c);
  return out;
}

BigInt AvoiderCounter::count(const MultiplicityVector& a) { return eval(a.canonical().counts); }

const BigInt& AvoiderCounter::eval(const std::vector<unsigned>& key) {
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  BigInt total = 0;
  if (key.empty()) {
    total = 1;
  } else {
    const std::size_t n = key.size();
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<unsigned> next(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(i));
      next.push_back(key[i] - 1);
      next.push_back(std::accumulate(key.begin() + static_cast<std::ptrdiff_t>(i) + 1, key.end(), 0u));
      std::erase(next, 0u);
      std::sort(next.begin(), next.end());
      total += eval(next);
    }
  }
  return memo_.emplace(key, std::move(total)).first->second;
}

BigInt count_avoiders_recurrence(const MultiplicityVector& a) {
  AvoiderCounter counter;
  return counter.count(a);
}

}  // namespace w123::words
