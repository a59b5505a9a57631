#include "elimination/groebner.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <list>
#include <numeric>

#include "errors.hpp"

namespace w123::elimination {
namespace {

using algebra::BigInt;
using algebra::Polynomial;

constexpr std::size_t kMaxVars = 24;

// Exponents laid out in order position: eliminated block first, then kept.
struct Mono {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t elim_degree = 0;
  std::uint32_t degree = 0;
};

struct Term {
  Mono m;
  BigInt c;
};

struct GPoly {
  std::vector<Term> terms;  // strictly descending in the monomial order
  std::uint32_t sugar = 0;
  const Mono& lm() const { return terms.front().m; }
  const BigInt& lc() const { return terms.front().c; }
  bool zero() const { return terms.empty(); }
};

class Ring {
 public:
  Ring(const BlockOrder& order, std::size_t nvars) : n_elim_(order.eliminated.size()) {
    positions_ = order.eliminated;
    positions_.insert(positions_.end(), order.kept.begin(), order.kept.end());
    if (positions_.size() > kMaxVars) throw InvalidArgument("too many variables for the Groebner kernel");
    nvars_ = nvars;
  }

  std::size_t size() const { return positions_.size(); }

  // -1, 0, 1 as a < b, a == b, a > b.
  int compare(const Mono& a, const Mono& b) const {
    if (a.elim_degree != b.elim_degree) return a.elim_degree < b.elim_degree ? -1 : 1;
    for (std::size_t k = n_elim_; k-- > 0;)
      if (a.e[k] != b.e[k]) return a.e[k] > b.e[k] ? -1 : 1;
    for (std::size_t k = n_elim_; k < positions_.size(); ++k)
      if (a.e[k] != b.e[k]) return a.e[k] < b.e[k] ? -1 : 1;
    return 0;
  }

  void finish(Mono& m) const {
    m.elim_degree = 0;
    m.degree = 0;
    for (std::size_t k = 0; k < positions_.size(); ++k) {
      if (k < n_elim_) m.elim_degree += m.e[k];
      m.degree += m.e[k];
    }
  }

  Mono mul(const Mono& a, const Mono& b) const {
    Mono m;
    for (std::size_t k = 0; k < positions_.size(); ++k) {
      std::uint32_t s = std::uint32_t{a.e[k]} + b.e[k];
      if (s > 0xFFFFu) throw DefectError("exponent overflow in Groebner kernel");
      m.e[k] = static_cast<std::uint16_t>(s);
    }
    m.elim_degree = a.elim_degree + b.elim_degree;
    m.degree = a.degree + b.degree;
    return m;
  }

  bool divides(const Mono& a, const Mono& b) const {
    for (std::size_t k = 0; k < positions_.size(); ++k)
      if (a.e[k] > b.e[k]) return false;
    return true;
  }

  Mono quotient(const Mono& b, const Mono& a) const {
    Mono m;
    for (std::size_t k = 0; k < positions_.size(); ++k) m.e[k] = static_cast<std::uint16_t>(b.e[k] - a.e[k]);
    finish(m);
    return m;
  }

  Mono lcm(const Mono& a, const Mono& b) const {
    Mono m;
    for (std::size_t k = 0; k < positions_.size(); ++k) m.e[k] = std::max(a.e[k], b.e[k]);
    finish(m);
    return m;
  }

  bool coprime(const Mono& a, const Mono& b) const {
    for (std::size_t k = 0; k < positions_.size(); ++k)
      if (a.e[k] && b.e[k]) return false;
    return true;
  }

  bool equal(const Mono& a, const Mono& b) const { return compare(a, b) == 0; }

  GPoly from(const Polynomial& p) const {
    Polynomial q = p.primitive();
    GPoly g;
    for (const auto& [e, c] : q.terms()) {
      Mono m;
      for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        auto it = std::find(positions_.begin(), positions_.end(), v);
        if (it == positions_.end()) throw InvalidArgument("variable not covered by the block order");
        m.e[static_cast<std::size_t>(it - positions_.begin())] = static_cast<std::uint16_t>(e[v]);
      }
      finish(m);
      g.terms.push_back({m, c.get_num()});
    }
    sort(g);
    normalize(g);
    g.sugar = 0;
    for (const auto& t : g.terms) g.sugar = std::max(g.sugar, t.m.degree);
    return g;
  }

  Polynomial to(const GPoly& g, const algebra::VarsPtr& vars) const {
    Polynomial p(vars);
    for (const auto& t : g.terms) {
      algebra::Exponents e(nvars_, 0);
      for (std::size_t k = 0; k < positions_.size(); ++k) e[positions_[k]] = t.m.e[k];
      p.add_term(e, algebra::Rational(t.c));
    }
    return p;
  }

  void sort(GPoly& g) const {
    std::sort(g.terms.begin(), g.terms.end(), [&](const Term& a, const Term& b) { return compare(a.m, b.m) > 0; });
  }

  // Divide by integer content, make the leading coefficient positive.
  static void normalize(GPoly& g) {
    if (g.terms.empty()) return;
    BigInt content = 0;
    for (const auto& t : g.terms) {
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.c.get_mpz_t());
      if (content == 1) break;
    }
    if (g.terms.front().c < 0) content = -content;
    if (content != 1)
      for (auto& t : g.terms) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), content.get_mpz_t());
  }

  // a*f - b*mono*g, merged in order.
  GPoly combine(const BigInt& a, const GPoly& f, const BigInt& b, const Mono& mono, const GPoly& g) const {
    GPoly out;
    out.terms.reserve(f.terms.size() + g.terms.size());
    std::size_t i = 0, j = 0;
    BigInt c;
    while (i < f.terms.size() || j < g.terms.size()) {
      if (j == g.terms.size()) {
        out.terms.push_back({f.terms[i].m, a * f.terms[i].c});
        ++i;
        continue;
      }
      Mono gm = mul(mono, g.terms[j].m);
      int cmp = i == f.terms.size() ? -1 : compare(f.terms[i].m, gm);
      if (cmp > 0) {
        out.terms.push_back({f.terms[i].m, a * f.terms[i].c});
        ++i;
      } else if (cmp < 0) {
        out.terms.push_back({gm, -(b * g.terms[j].c)});
        ++j;
      } else {
        c = a * f.terms[i].c;
        mpz_submul(c.get_mpz_t(), b.get_mpz_t(), g.terms[j].c.get_mpz_t());
        if (c != 0) out.terms.push_back({f.terms[i].m, c});
        ++i;
        ++j;
      }
    }
    return out;
  }

 private:
  std::vector<std::size_t> positions_;
  std::size_t n_elim_;
  std::size_t nvars_ = 0;
};

struct Pair {
  std::size_t i, j;
  Mono lcm;
  std::uint32_t sugar;
};

class Buchberger {
 public:
  Buchberger(const Ring& ring, const Deadline& deadline, GroebnerStats& stats)
      : ring_(ring), deadline_(deadline), stats_(stats) {}

  std::vector<GPoly> run(std::vector<GPoly> input) {
    for (auto& f : input) {
      f = top_reduce(std::move(f));
      if (!f.zero()) insert(std::move(f));
    }
    while (!pairs_.empty()) {
      deadline_.check("Buchberger elimination");
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        return ring_.compare(a.lcm, b.lcm) < 0;
      });
      Pair p = *best;
      pairs_.erase(best);
      ++stats_.pairs_considered;
      GPoly s = spoly(p);
      s = top_reduce(std::move(s));
      if (s.zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      insert(std::move(s));
    }
    return reduce_basis();
  }

 private:
  GPoly spoly(const Pair& p) const {
    const GPoly& f = all_[p.i];
    const GPoly& g = all_[p.j];
    BigInt d = algebra::gcd(f.lc(), g.lc());
    BigInt a = algebra::exact_quotient(g.lc(), d);
    BigInt b = algebra::exact_quotient(f.lc(), d);
    Mono mf = ring_.quotient(p.lcm, f.lm());
    Mono mg = ring_.quotient(p.lcm, g.lm());
    GPoly fm;
    fm.terms.reserve(f.terms.size());
    for (const auto& t : f.terms) fm.terms.push_back({ring_.mul(mf, t.m), t.c});
    GPoly s = ring_.combine(a, fm, b, mg, g);
    s.sugar = p.sugar;
    Ring::normalize(s);
    return s;
  }

  const GPoly* find_reducer(const Mono& m) const {
    for (std::size_t k : basis_)
      if (ring_.divides(all_[k].lm(), m)) return &all_[k];
    return nullptr;
  }

  GPoly top_reduce(GPoly h) const {
    while (!h.zero()) {
      deadline_.check("Buchberger reduction");
      const GPoly* g = find_reducer(h.lm());
      if (!g) break;
      BigInt d = algebra::gcd(g->lc(), h.lc());
      BigInt a = algebra::exact_quotient(g->lc(), d);
      BigInt b = algebra::exact_quotient(h.lc(), d);
      Mono mono = ring_.quotient(h.lm(), g->lm());
      std::uint32_t sugar = std::max(h.sugar, g->sugar + mono.degree);
      h = ring_.combine(a, h, b, mono, *g);
      h.sugar = sugar;
      Ring::normalize(h);
    }
    return h;
  }

  // Gebauer-Moeller update with the new element h.
  void insert(GPoly h) {
    const std::size_t hi = all_.size();
    all_.push_back(std::move(h));
    const Mono& lh = all_[hi].lm();

    std::vector<Pair> fresh;
    for (std::size_t g : basis_) {
      Mono l = ring_.lcm(lh, all_[g].lm());
      std::uint32_t sugar = std::max(all_[hi].sugar + ring_.quotient(l, lh).degree,
                                     all_[g].sugar + ring_.quotient(l, all_[g].lm()).degree);
      fresh.push_back({g, hi, l, sugar});
    }
    // Criterion M: drop (g, h) when another new pair's lcm properly divides its lcm.
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a)
      for (std::size_t b = 0; b < fresh.size(); ++b)
        if (a != b && ring_.divides(fresh[b].lcm, fresh[a].lcm) && !ring_.equal(fresh[b].lcm, fresh[a].lcm)) {
          keep[a] = false;
          break;
        }
    // Criterion F plus the product criterion: among survivors sharing an lcm
    // keep one, and drop the whole group if any member has coprime leading
    // monomials.
    std::vector<Pair> kept;
    std::vector<bool> grouped(fresh.size(), false);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a] || grouped[a]) continue;
      bool any_coprime = false;
      for (std::size_t b = a; b < fresh.size(); ++b) {
        if (!keep[b] || grouped[b] || !ring_.equal(fresh[a].lcm, fresh[b].lcm)) continue;
        grouped[b] = true;
        if (ring_.coprime(all_[fresh[b].i].lm(), lh)) any_coprime = true;
      }
      if (!any_coprime) kept.push_back(fresh[a]);
    }
    stats_.pairs_skipped += fresh.size() - kept.size();
    // Chain criterion on old pairs.
    std::vector<Pair> old;
    for (const Pair& p : pairs_) {
      if (ring_.divides(lh, p.lcm) &&
          !ring_.equal(ring_.lcm(all_[p.i].lm(), lh), p.lcm) &&
          !ring_.equal(ring_.lcm(all_[p.j].lm(), lh), p.lcm)) {
        ++stats_.pairs_skipped;
        continue;
      }
      old.push_back(p);
    }
    old.insert(old.end(), kept.begin(), kept.end());
    pairs_ = std::move(old);

    std::vector<std::size_t> next;
    for (std::size_t g : basis_)
      if (!ring_.divides(lh, all_[g].lm())) next.push_back(g);
    next.push_back(hi);
    basis_ = std::move(next);
  }

  std::vector<GPoly> reduce_basis() {
    // Minimal basis: basis_ already has no leading monomial divisible by
    // another's, except for equal leading monomials from different inserts.
    std::vector<std::size_t> minimal;
    for (std::size_t a : basis_) {
      bool redundant = false;
      for (std::size_t b : basis_) {
        if (a == b) continue;
        if (ring_.divides(all_[b].lm(), all_[a].lm()) &&
            (!ring_.equal(all_[b].lm(), all_[a].lm()) || b < a)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(a);
    }
    std::vector<GPoly> out;
    for (std::size_t a : minimal) {
      std::vector<std::size_t> others;
      for (std::size_t b : minimal)
        if (b != a) others.push_back(b);
      out.push_back(reduce_tail(all_[a], others));
    }
    std::sort(out.begin(), out.end(), [&](const GPoly& a, const GPoly& b) { return ring_.compare(a.lm(), b.lm()) < 0; });
    stats_.basis_size = out.size();
    return out;
  }

  // Reduces every non-leading term of f; the leading term is irreducible in
  // a minimal basis. Terms already moved to the result are rescaled with
  // each fraction-free step.
  GPoly reduce_tail(const GPoly& f, const std::vector<std::size_t>& against) const {
    GPoly done;
    done.terms.push_back(f.terms.front());
    GPoly h;
    h.terms.assign(f.terms.begin() + 1, f.terms.end());
    while (!h.zero()) {
      deadline_.check("Buchberger interreduction");
      const GPoly* g = nullptr;
      for (std::size_t k : against)
        if (ring_.divides(all_[k].lm(), h.lm())) {
          g = &all_[k];
          break;
        }
      if (!g) {
        done.terms.push_back(std::move(h.terms.front()));
        h.terms.erase(h.terms.begin());
        continue;
      }
      BigInt d = algebra::gcd(g->lc(), h.lc());
      BigInt a = algebra::exact_quotient(g->lc(), d);
      BigInt b = algebra::exact_quotient(h.lc(), d);
      Mono mono = ring_.quotient(h.lm(), g->lm());
      h = ring_.combine(a, h, b, mono, *g);
      if (a != 1)
        for (auto& t : done.terms) t.c *= a;
    }
    Ring::normalize(done);
    return done;
  }

  const Ring& ring_;
  const Deadline& deadline_;
  GroebnerStats& stats_;
  std::vector<GPoly> all_;
  std::vector<std::size_t> basis_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators, const BlockOrder& order,
                                       const Deadline& deadline, GroebnerStats* stats) {
  if (generators.empty()) return {};
  const auto& vars = generators.front().vars();
  Ring ring(order, vars->size());
  std::vector<GPoly> input;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    input.push_back(ring.from(g));
  }
  GroebnerStats local;
  Buchberger engine(ring, deadline, stats ? *stats : local);
  std::vector<GPoly> basis = engine.run(std::move(input));
  std::vector<Polynomial> out;
  for (const auto& g : basis) out.push_back(ring.to(g, vars));
  return out;
}

}  // namespace w123::elimination
