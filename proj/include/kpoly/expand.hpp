// Basis change by leading-term peeling under a total order on monomials,
// with an exact linear-solve fallback; products and alternating sums.

#ifndef KPOLY_EXPAND_HPP_
#define KPOLY_EXPAND_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kpoly/expansion.hpp"
#include "kpoly/families.hpp"
#include "kpoly/polynomial.hpp"
#include "kpoly/skylines.hpp"

namespace kpoly {

class ExpansionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MonomialKey {
  int k = 0;
  WeakComposition a;
};

namespace detail {

inline int last_positive(Term const& t) {
  for (int i = static_cast<int>(kMaxVariables); i >= 1; --i) {
    if (t.x[static_cast<std::size_t>(i - 1)] != 0) {
      return i;
    }
  }
  return 0;
}

inline int max_exponent(Term const& t) {
  return *std::max_element(t.x.begin(), t.x.end());
}

// Lexicographic comparison of 1^{a_1} 2^{a_2} ... n^{a_n}.
inline std::strong_ordering compare_strings(Term const& s, Term const& t) {
  std::size_t i = 0, j = 0;
  int ri = 0, rj = 0;
  auto advance = [](Term const& u, std::size_t& p, int& used) {
    while (p < kMaxVariables && used >= u.x[p]) {
      ++p;
      used = 0;
    }
  };
  while (true) {
    advance(s, i, ri);
    advance(t, j, rj);
    bool const se = i == kMaxVariables;
    bool const te = j == kMaxVariables;
    if (se || te) {
      return se == te ? std::strong_ordering::equal
                      : (se ? std::strong_ordering::less : std::strong_ordering::greater);
    }
    if (i != j) {
      return i < j ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    ++ri;
    ++rj;
  }
}

// Three-way comparison under the total order; greater means later (more leading).
inline std::strong_ordering compare_keys(Term const& s, Term const& t) {
  if (auto c = last_positive(s) <=> last_positive(t); c != 0) return c;
  if (auto c = max_exponent(s) <=> max_exponent(t); c != 0) return c;
  if (auto c = compare_strings(s, t); c != 0) return c;
  return s.beta <=> t.beta;
}

struct PrecLess {
  bool operator()(Term const& s, Term const& t) const {
    return compare_keys(s, t) < 0;
  }
};

inline Term to_term(MonomialKey const& m) { return make_term(m.a.vec(), m.k); }

}  // namespace detail

// m1 strictly before m2 in the order.
inline bool precedes(MonomialKey const& m1, MonomialKey const& m2) {
  if (m1.a.size() != m2.a.size()) {
    throw std::invalid_argument("monomial keys of different lengths");
  }
  return detail::compare_keys(detail::to_term(m1), detail::to_term(m2)) < 0;
}

// Leading (order-maximal) key of a nonzero polynomial.
inline MonomialKey leading_key(BetaPolynomial const& f) {
  if (f.is_zero()) {
    throw std::invalid_argument("zero polynomial has no leading term");
  }
  auto best = f.terms().begin()->first;
  for (auto const& [t, c] : f.terms()) {
    if (detail::compare_keys(t, best) > 0) {
      best = t;
    }
  }
  return {best.beta, WeakComposition(best.exponents(f.n()))};
}

struct FallbackCounter {
  std::uint64_t calls = 0;
  std::uint64_t fallbacks = 0;
};

namespace detail {

class FallbackStats {
 public:
  static FallbackStats& instance() {
    static FallbackStats s;
    return s;
  }
  void record(Family f, bool fallback) {
    std::lock_guard lock(mutex_);
    auto& c = counts_[f];
    ++c.calls;
    c.fallbacks += fallback ? 1 : 0;
  }
  std::map<Family, FallbackCounter> snapshot() const {
    std::lock_guard lock(mutex_);
    return counts_;
  }
  void reset() {
    std::lock_guard lock(mutex_);
    counts_.clear();
  }

 private:
  mutable std::mutex mutex_;
  std::map<Family, FallbackCounter> counts_;
};

}  // namespace detail

// Per-family count of expansions and of those that needed the linear solve.
inline std::map<Family, FallbackCounter> fallback_stats() {
  return detail::FallbackStats::instance().snapshot();
}
inline void reset_fallback_stats() { detail::FallbackStats::instance().reset(); }

namespace detail {

inline Expansion to_expansion(Family family, std::size_t n,
                              std::map<Term, Integer> const& coeffs) {
  Expansion e(to_string(family));
  for (auto const& [t, c] : coeffs) {
    e.add(WeakComposition(t.exponents(n)), ZBeta::monomial(c, t.beta));
  }
  return e;
}

// Peeling; nullopt when a step fails to lower the leading key.
inline std::optional<Expansion> peel(BetaPolynomial const& f, Family family) {
  std::size_t const n = f.n();
  std::map<Term, Integer, PrecLess> rest(f.terms().begin(), f.terms().end());
  std::map<Term, Integer> coeffs;
  std::size_t const cap = 100000;
  std::optional<Term> previous;
  for (std::size_t step = 0; !rest.empty(); ++step) {
    if (step == cap) {
      return std::nullopt;
    }
    auto const [lead, c] = *rest.rbegin();
    if (previous && compare_keys(lead, *previous) >= 0) {
      return std::nullopt;
    }
    previous = lead;
    WeakComposition const b(lead.exponents(n));
    auto const& g = family_poly(family, b);
    if (g.is_zero()) {
      return std::nullopt;
    }
    Term glead = g.terms().begin()->first;
    for (auto const& [t, v] : g.terms()) {
      if (compare_keys(t, glead) > 0) glead = t;
    }
    Term expect = lead;
    expect.beta = 0;
    if (!(glead == expect) || g.terms().at(glead) != 1) {
      return std::nullopt;
    }
    coeffs[lead] += c;
    Integer const scale = c;
    for (auto const& [t, v] : g.terms()) {
      Term s = t;
      s.beta = static_cast<std::uint16_t>(s.beta + lead.beta);
      auto [it, inserted] = rest.try_emplace(s, Integer(0));
      it->second -= v * scale;
      if (it->second == 0) {
        rest.erase(it);
      }
    }
  }
  return to_expansion(family, n, coeffs);
}

using Rational = boost::multiprecision::cpp_rational;
using SparseVector = std::map<Term, Rational>;

// Exact solve f = sum c_{k,b} beta^k F_b over a finite candidate set.
inline Expansion linear_solve(BetaPolynomial const& f, Family family) {
  std::size_t const n = f.n();
  int max_x = 0;
  int max_beta = 0;
  std::set<int> grades;
  std::set<std::pair<int, int>> degrees;  // (x-degree, beta-degree)
  for (auto const& [t, c] : f.terms()) {
    int d = 0;
    for (auto e : t.x) d += e;
    max_x = std::max(max_x, d);
    max_beta = std::max(max_beta, static_cast<int>(t.beta));
    grades.insert(d - t.beta);
    degrees.insert({d, t.beta});
  }
  bool const homogeneous = is_cohomological(family);
  std::vector<Term> unknowns;
  for (int w = 0; w <= max_x; ++w) {
    for (auto const& b : compositions_of(w, n)) {
      for (int k = 0; k <= max_beta; ++k) {
        bool const keep = homogeneous ? degrees.count({w, k}) > 0
                                      : grades.count(w - k) > 0;
        if (keep) {
          unknowns.push_back(make_term(b.vec(), k));
        }
      }
    }
  }
  // Incremental reduced basis: pivot term -> (vector, combination).
  struct Pivot {
    SparseVector vec;
    std::map<std::size_t, Rational> combo;
  };
  std::map<Term, Pivot> pivots;
  auto reduce = [&](SparseVector& v, std::map<std::size_t, Rational>& combo) {
    while (true) {
      // Highest term of v that is a pivot.
      auto it = v.rbegin();
      for (; it != v.rend(); ++it) {
        if (pivots.count(it->first)) break;
      }
      if (it == v.rend()) return;
      Term const p = it->first;
      Rational const factor = it->second;
      auto const& piv = pivots.at(p);
      for (auto const& [t, x] : piv.vec) {
        auto& slot = v[t];
        slot -= factor * x;
        if (slot == 0) v.erase(t);
      }
      for (auto const& [j, x] : piv.combo) {
        auto& slot = combo[j];
        slot -= factor * x;
        if (slot == 0) combo.erase(j);
      }
    }
  };
  for (std::size_t j = 0; j < unknowns.size(); ++j) {
    Term const& u = unknowns[j];
    auto const& g = family_poly(family, WeakComposition(u.exponents(n)));
    SparseVector v;
    for (auto const& [t, x] : g.terms()) {
      Term s = t;
      s.beta = static_cast<std::uint16_t>(s.beta + u.beta);
      v[s] = Rational(x);
    }
    std::map<std::size_t, Rational> combo{{j, Rational(1)}};
    reduce(v, combo);
    if (v.empty()) {
      throw ExpansionError("family " + to_string(family) +
                           " is linearly dependent on the candidate span");
    }
    Term const p = v.rbegin()->first;
    Rational const lead = v.rbegin()->second;
    for (auto& [t, x] : v) x /= lead;
    for (auto& [k, x] : combo) x /= lead;
    // Keep pivots fully reduced against the new one.
    for (auto& [q, other] : pivots) {
      auto hit = other.vec.find(p);
      if (hit == other.vec.end()) continue;
      Rational const factor = hit->second;
      for (auto const& [t, x] : v) {
        auto& slot = other.vec[t];
        slot -= factor * x;
        if (slot == 0) other.vec.erase(t);
      }
      for (auto const& [k, x] : combo) {
        auto& slot = other.combo[k];
        slot -= factor * x;
        if (slot == 0) other.combo.erase(k);
      }
    }
    pivots.emplace(p, Pivot{std::move(v), std::move(combo)});
  }
  SparseVector target;
  for (auto const& [t, c] : f.terms()) target[t] = Rational(c);
  std::map<std::size_t, Rational> combo;
  reduce(target, combo);
  if (!target.empty()) {
    throw ExpansionError("polynomial not in the span of the " + to_string(family) +
                         " candidates");
  }
  std::map<Term, Integer> coeffs;
  for (auto const& [j, x] : combo) {
    // combo expresses -f; flip the sign.
    Rational const c = -x;
    if (boost::multiprecision::denominator(c) != 1) {
      throw ExpansionError("non-integral coefficient in " + to_string(family) +
                           " expansion");
    }
    coeffs[unknowns[j]] = boost::multiprecision::numerator(c);
  }
  return to_expansion(family, n, coeffs);
}

}  // namespace detail

// Sum of coeff * element over the expansion.
inline BetaPolynomial reconstruct(Expansion const& e, Family family, std::size_t n) {
  BetaPolynomial f(n);
  for (auto const& [b, c] : e.terms()) {
    f.add_scaled(family_poly(family, b), c);
  }
  return f;
}

inline Expansion expand_in_basis(BetaPolynomial const& f, Family family) {
  if (!is_polynomial_basis(family)) {
    throw std::invalid_argument(to_string(family) + " is not a polynomial basis");
  }
  auto peeled = detail::peel(f, family);
  detail::FallbackStats::instance().record(family, !peeled.has_value());
  Expansion e = peeled ? std::move(*peeled) : detail::linear_solve(f, family);
  if (!(reconstruct(e, family, f.n()) == f)) {
    throw ExpansionError("reconstruction mismatch in " + to_string(family) +
                         " expansion");
  }
  return e;
}

inline Expansion expand_in_basis(BetaPolynomial const& f, std::string const& family) {
  return expand_in_basis(f, parse_family(family));
}

inline Expansion product_expansion(Family fa, WeakComposition const& a, Family fb,
                                   WeakComposition const& b, Family target) {
  std::size_t const n = std::max(a.size(), b.size());
  auto const& pa = family_poly(fa, a.padded(n));
  auto const& pb = family_poly(fb, b.padded(n));
  return expand_in_basis(pa * pb, target);
}

inline bool is_positive(Expansion const& e) { return e.is_positive(); }

struct EulerSums {
  ZBeta sum_m;
  ZBeta sum_q;
  bool ok = false;
};

// Coefficient sums of the glide expansion of the quasiLascoux polynomial and of
// the kaon expansion of the atom; both should lie in {0, 1} at beta = -1.
inline EulerSums euler_sum_check(WeakComposition const& a) {
  EulerSums out;
  out.sum_m = quasilascoux_to_glide_expansion(a).total();
  out.sum_q = atom_to_kaon_expansion(a).total();
  auto in01 = [](ZBeta const& z) {
    Integer const v = z.evaluate(Integer(-1));
    return v == 0 || v == 1;
  };
  out.ok = in01(out.sum_m) && in01(out.sum_q);
  return out;
}

}  // namespace kpoly

#endif  // KPOLY_EXPAND_HPP_
