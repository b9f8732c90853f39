// Glides and mesonic glides of a weak composition, their generating
// functions (glide polynomials and kaons), and the glide-to-kaon expansion.

#ifndef KPOLY_GLIDES_HPP_
#define KPOLY_GLIDES_HPP_

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <unordered_set>
#include <vector>

#include "kpoly/composition.hpp"
#include "kpoly/expansion.hpp"
#include "kpoly/polynomial.hpp"

namespace kpoly {

struct GlideSet {
  WeakComposition base;
  std::vector<Komposition> members;  // sorted, distinct

  bool contains(Komposition const& b) const {
    return std::binary_search(members.begin(), members.end(), b);
  }
};

namespace detail {

// Breadth-first closure under (m.1)-(m.3) applied to pairs "0p" with p black.
// `m1_allowed(i)` says whether (m.1) may act on positions (i, i+1), 0-based.
inline std::vector<Komposition> move_closure(
    WeakComposition const& a, std::function<bool(std::size_t)> const& m1_allowed) {
  std::unordered_set<Komposition, KompositionHash> seen;
  std::deque<Komposition> queue;
  Komposition const start(a);
  seen.insert(start);
  queue.push_back(start);
  auto visit = [&](std::vector<int> e, std::vector<bool> r) {
    Komposition k(std::move(e), std::move(r));
    if (seen.insert(k).second) {
      queue.push_back(std::move(k));
    }
  };
  while (!queue.empty()) {
    Komposition const cur = std::move(queue.front());
    queue.pop_front();
    if (cur.size() < 2) {
      continue;
    }
    std::vector<int> const& e = cur.entries();
    std::vector<bool> red(cur.size());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      red[i] = cur.is_red(i);
    }
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (e[i] != 0 || e[i + 1] == 0 || red[i + 1]) {
        continue;
      }
      int const p = e[i + 1];
      if (m1_allowed(i)) {
        auto e2 = e;
        auto r2 = red;
        e2[i] = p;
        e2[i + 1] = 0;
        visit(std::move(e2), std::move(r2));
      }
      for (int q = 1; q < p; ++q) {  // (m.2)
        auto e2 = e;
        auto r2 = red;
        e2[i] = q;
        e2[i + 1] = p - q;
        visit(std::move(e2), std::move(r2));
      }
      for (int q = 1; q <= p; ++q) {  // (m.3), second entry red
        auto e2 = e;
        auto r2 = red;
        e2[i] = q;
        e2[i + 1] = p + 1 - q;
        r2[i + 1] = true;
        visit(std::move(e2), std::move(r2));
      }
    }
  }
  std::vector<Komposition> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Whether b[lo, hi) is a valid block for value v: net sum v, leftmost
// nonzero entry black.
inline bool valid_block(Komposition const& b, std::size_t lo, std::size_t hi,
                        int v) {
  int net = 0;
  bool seen_nonzero = false;
  for (std::size_t k = lo; k < hi; ++k) {
    if (b[k] == 0) {
      continue;
    }
    if (!seen_nonzero && b.is_red(k)) {
      return false;
    }
    seen_nonzero = true;
    net += b[k] - (b.is_red(k) ? 1 : 0);
  }
  return seen_nonzero && net == v;
}

inline bool zero_from(Komposition const& b, std::size_t lo) {
  for (std::size_t k = lo; k < b.size(); ++k) {
    if (b[k] != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

inline GlideSet enumerate_glides(WeakComposition const& a) {
  return {a, detail::move_closure(a, [](std::size_t) { return true; })};
}

inline GlideSet enumerate_mesonic_glides(WeakComposition const& a) {
  std::vector<bool> blocked(a.size(), false);
  for (std::size_t p : a.nonzero_positions()) {
    if (p >= 2) {
      blocked[p - 2] = true;  // pair (n_j - 1, n_j)
    }
  }
  return {a, detail::move_closure(a, [&](std::size_t i) { return !blocked[i]; })};
}

// Direct check of the block conditions: some 0 = i_0 < ... < i_l with
// i_j <= n_j, each block's net sum a_{n_j}, each block's leftmost nonzero
// entry black, and zeros after i_l.
inline bool is_glide_of(Komposition const& b, WeakComposition const& a) {
  if (b.size() != a.size()) {
    return false;
  }
  auto const pos = a.nonzero_positions();
  std::size_t const l = pos.size();
  // reach[j] = set of feasible i_j values
  std::vector<bool> reach(b.size() + 1, false);
  reach[0] = true;
  for (std::size_t j = 0; j < l; ++j) {
    std::vector<bool> next(b.size() + 1, false);
    for (std::size_t lo = 0; lo <= b.size(); ++lo) {
      if (!reach[lo]) {
        continue;
      }
      for (std::size_t hi = lo + 1; hi <= pos[j]; ++hi) {
        if (detail::valid_block(b, lo, hi, a[pos[j] - 1])) {
          next[hi] = true;
        }
      }
    }
    reach = std::move(next);
  }
  for (std::size_t i = 0; i <= b.size(); ++i) {
    if (reach[i] && detail::zero_from(b, i)) {
      return true;
    }
  }
  return false;
}

// Blocks fixed at n_{j-1}+1..n_j, with b_{n_j} nonzero.
inline bool is_mesonic_glide_of(Komposition const& b, WeakComposition const& a) {
  if (b.size() != a.size()) {
    return false;
  }
  std::size_t lo = 0;
  for (std::size_t p : a.nonzero_positions()) {
    if (b[p - 1] == 0 || !detail::valid_block(b, lo, p, a[p - 1])) {
      return false;
    }
    lo = p;
  }
  return detail::zero_from(b, lo);
}

namespace detail {

inline BetaPolynomial generating_function(std::vector<Komposition> const& bs,
                                          std::size_t n) {
  BetaPolynomial f(n);
  for (auto const& b : bs) {
    f.add_term(b.entries(), b.excess(), Integer(1));
  }
  return f;
}

}  // namespace detail

inline BetaPolynomial glide_poly(WeakComposition const& a) {
  return detail::generating_function(enumerate_glides(a).members, a.size());
}

inline BetaPolynomial kaon_poly(WeakComposition const& a) {
  return detail::generating_function(enumerate_mesonic_glides(a).members,
                                     a.size());
}

// Every b of the same length with b+ = a+ and b dominating a.
inline std::vector<WeakComposition> dominating_rearrangements(
    WeakComposition const& a) {
  auto const pos = a.nonzero_positions();
  auto const alpha = a.positive_part();
  std::size_t const n = a.size();
  std::size_t const l = pos.size();
  std::vector<WeakComposition> out;
  std::vector<int> cur(n, 0);
  // s_j <= n_j is equivalent to dominance when the positive parts agree.
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t j,
                                                          std::size_t from) {
    if (j == l) {
      out.emplace_back(cur);
      return;
    }
    for (std::size_t s = from; s <= pos[j]; ++s) {
      cur[s - 1] = alpha[j];
      rec(j + 1, s + 1);
      cur[s - 1] = 0;
    }
  };
  rec(0, 1);
  std::sort(out.begin(), out.end());
  return out;
}

inline Expansion glide_to_kaon_expansion(WeakComposition const& a) {
  Expansion e("kaon");
  for (auto const& b : dominating_rearrangements(a)) {
    e.add(b, ZBeta(1));
  }
  return e;
}

}  // namespace kpoly

#endif  // KPOLY_GLIDES_HPP_
