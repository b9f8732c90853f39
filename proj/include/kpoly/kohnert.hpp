// Kohnert diagrams, left-swap closures, nearest skylines, threads, and the
// maps psi / psi-bar from (set-valued) key fillings to atom fillings.

#ifndef KPOLY_KOHNERT_HPP_
#define KPOLY_KOHNERT_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kpoly/composition.hpp"
#include "kpoly/expansion.hpp"
#include "kpoly/skylines.hpp"

namespace kpoly {

// Boxes in the first quadrant, stored as one row bitmask per column
// (bit r set when box (r, c) is present; rows 1..31).
class BoxDiagram {
 public:
  BoxDiagram() = default;

  static BoxDiagram skyline(WeakComposition const& a) {
    if (a.size() > 31) {
      throw std::invalid_argument("too many rows");
    }
    BoxDiagram d;
    for (std::size_t r = 0; r < a.size(); ++r) {
      for (int c = 1; c <= a[r]; ++c) {
        d.add(static_cast<int>(r + 1), c);
      }
    }
    return d;
  }

  static BoxDiagram from_boxes(std::vector<Cell> const& boxes) {
    BoxDiagram d;
    for (auto const& b : boxes) {
      if (b.row < 1 || b.row > 31 || b.col < 1) {
        throw std::invalid_argument("box outside the positive quadrant");
      }
      d.add(b.row, b.col);
    }
    return d;
  }

  bool has(int r, int c) const {
    if (c < 1 || c > columns() || r < 1 || r > 31) {
      return false;
    }
    return (cols_[static_cast<std::size_t>(c - 1)] >> r) & 1u;
  }

  void add(int r, int c) {
    if (static_cast<int>(cols_.size()) < c) {
      cols_.resize(static_cast<std::size_t>(c), 0);
    }
    cols_[static_cast<std::size_t>(c - 1)] |= std::uint32_t{1} << r;
  }

  void remove(int r, int c) {
    cols_[static_cast<std::size_t>(c - 1)] &= ~(std::uint32_t{1} << r);
    trim();
  }

  int columns() const noexcept { return static_cast<int>(cols_.size()); }
  std::uint32_t column_mask(int c) const {
    return c >= 1 && c <= columns() ? cols_[static_cast<std::size_t>(c - 1)] : 0;
  }
  std::size_t size() const {
    std::size_t k = 0;
    for (auto m : cols_) {
      k += static_cast<std::size_t>(std::popcount(m));
    }
    return k;
  }
  int top_row() const {
    int t = 0;
    for (auto m : cols_) {
      t = std::max(t, m == 0 ? 0 : 31 - std::countl_zero(m));
    }
    return t;
  }

  // Boxes sorted by (row, col).
  std::vector<Cell> boxes() const {
    std::vector<Cell> out;
    for (int r = 1; r <= 31; ++r) {
      for (int c = 1; c <= columns(); ++c) {
        if (has(r, c)) {
          out.push_back({r, c});
        }
      }
    }
    return out;
  }

  // Row lengths when every row is left-justified.
  std::optional<WeakComposition> skyline_shape(std::size_t n) const {
    std::vector<int> len(n, 0);
    for (int r = 1; r <= 31; ++r) {
      int c = 0;
      while (has(r, c + 1)) {
        ++c;
      }
      for (int k = c + 2; k <= columns(); ++k) {
        if (has(r, k)) {
          return std::nullopt;
        }
      }
      if (c > 0) {
        if (static_cast<std::size_t>(r) > n) {
          return std::nullopt;
        }
        len[static_cast<std::size_t>(r - 1)] = c;
      }
    }
    return WeakComposition(std::move(len));
  }

  bool operator==(BoxDiagram const&) const = default;
  auto operator<=>(BoxDiagram const&) const = default;

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto const& b : boxes()) {
      arr.push_back({b.row, b.col});
    }
    return {{"boxes", std::move(arr)}};
  }

  // Top row first; '#' for a box, '.' for empty.
  std::string to_text() const {
    std::string out;
    for (int r = top_row(); r >= 1; --r) {
      for (int c = 1; c <= columns(); ++c) {
        out += has(r, c) ? '#' : '.';
      }
      out += '\n';
    }
    return out;
  }

 private:
  void trim() {
    while (!cols_.empty() && cols_.back() == 0) {
      cols_.pop_back();
    }
  }

  std::vector<std::uint32_t> cols_;
};

// One successor per row whose rightmost box has an empty cell below it; the
// box drops to the highest such cell.
inline std::vector<BoxDiagram> kohnert_successors(BoxDiagram const& D) {
  std::vector<BoxDiagram> out;
  for (int r = 2; r <= D.top_row(); ++r) {
    int c = 0;
    for (int k = D.columns(); k >= 1; --k) {
      if (D.has(r, k)) {
        c = k;
        break;
      }
    }
    if (c == 0) {
      continue;
    }
    for (int s = r - 1; s >= 1; --s) {
      if (!D.has(s, c)) {
        BoxDiagram E = D;
        E.remove(r, c);
        E.add(s, c);
        out.push_back(std::move(E));
        break;
      }
    }
  }
  return out;
}

namespace detail {

template <class Value>
class CompositionCache {
 public:
  std::shared_ptr<Value const> find(WeakComposition const& a) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(a);
    return it == map_.end() ? nullptr : it->second;
  }
  std::shared_ptr<Value const> insert(WeakComposition const& a, Value v) {
    std::unique_lock lock(mutex_);
    return map_.try_emplace(a, std::make_shared<Value const>(std::move(v)))
        .first->second;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<WeakComposition, std::shared_ptr<Value const>> map_;
};

}  // namespace detail

// Every diagram reachable from D(a), sorted; memoized per a.
inline std::vector<BoxDiagram> const& kohnert_closure(WeakComposition const& a) {
  static detail::CompositionCache<std::vector<BoxDiagram>> cache;
  if (auto p = cache.find(a)) {
    return *p;
  }
  std::set<BoxDiagram> seen;
  std::deque<BoxDiagram> queue;
  auto const start = BoxDiagram::skyline(a);
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    BoxDiagram const cur = std::move(queue.front());
    queue.pop_front();
    for (auto& next : kohnert_successors(cur)) {
      if (seen.insert(next).second) {
        queue.push_back(std::move(next));
      }
    }
  }
  return *cache.insert(a, std::vector<BoxDiagram>(seen.begin(), seen.end()));
}

// Closure of a under left swaps (exchange a_i <= a_j with i < j), sorted.
inline std::vector<WeakComposition> lswap_closure(WeakComposition const& a) {
  std::set<WeakComposition> seen{a};
  std::deque<WeakComposition> queue{a};
  while (!queue.empty()) {
    auto const cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        if (cur[i] < cur[j]) {
          std::vector<int> v = cur.vec();
          std::swap(v[i], v[j]);
          WeakComposition b(std::move(v));
          if (seen.insert(b).second) {
            queue.push_back(b);
          }
        }
      }
    }
  }
  return {seen.begin(), seen.end()};
}

// Members b of lswap(a) dominated by every member with the same positive part.
inline std::vector<WeakComposition> qlswap(WeakComposition const& a) {
  auto const closure = lswap_closure(a);
  std::vector<WeakComposition> out;
  for (auto const& b : closure) {
    auto const bp = b.positive_part();
    bool minimal = true;
    for (auto const& c : closure) {
      if (c.positive_part() == bp && !dominates(c, b)) {
        minimal = false;
        break;
      }
    }
    if (minimal) {
      out.push_back(b);
    }
  }
  return out;
}

struct NearestSkyline {
  BoxDiagram result;
  std::vector<BoxDiagram> steps;  // every intermediate diagram, input first
};

// Reading rows top to bottom and left to right, raise the first box with an
// empty cell to its left to the first empty cell above it; repeat.
inline NearestSkyline nearest_skyline_steps(BoxDiagram const& K) {
  NearestSkyline out{K, {K}};
  BoxDiagram& D = out.result;
  while (true) {
    bool moved = false;
    for (int r = D.top_row(); r >= 1 && !moved; --r) {
      for (int c = 2; c <= D.columns() && !moved; ++c) {
        if (D.has(r, c) && !D.has(r, c - 1)) {
          int s = r + 1;
          while (D.has(s, c)) {
            ++s;
          }
          if (s > 31) {
            throw std::length_error("nearest skyline leaves the row range");
          }
          D.remove(r, c);
          D.add(s, c);
          out.steps.push_back(D);
          moved = true;
        }
      }
    }
    if (!moved) {
      return out;
    }
  }
}

inline BoxDiagram nearest_skyline(BoxDiagram const& K) {
  return nearest_skyline_steps(K).result;
}

using Thread = std::vector<Cell>;  // one box per column 1, 2, ...

// Start at the lowest box of column 1, then take in each next column the
// highest box weakly below the previous one; remove and repeat.
inline std::vector<Thread> thread_decomposition(BoxDiagram const& K) {
  BoxDiagram rest = K;
  std::vector<Thread> out;
  while (rest.size() != 0) {
    std::uint32_t const first = rest.column_mask(1);
    if (first == 0) {
      throw std::invalid_argument("boxes remain that no thread reaches");
    }
    Thread t;
    int row = std::countr_zero(first);
    t.push_back({row, 1});
    for (int c = 2; c <= rest.columns(); ++c) {
      std::uint32_t const below = rest.column_mask(c) & ((std::uint32_t{2} << row) - 1);
      if (below == 0) {
        break;
      }
      row = 31 - std::countl_zero(below);
      t.push_back({row, c});
    }
    for (auto const& b : t) {
      rest.remove(b.row, b.col);
    }
    out.push_back(std::move(t));
  }
  return out;
}

// Entry v in column c of a key filling becomes box (v, c).
inline BoxDiagram key_to_diagram(SetValuedFilling const& T) {
  if (T.variant() != FillingVariant::key && T.variant() != FillingVariant::lascoux) {
    throw std::invalid_argument("expected a filling with basement");
  }
  BoxDiagram D;
  for (int r = 1; r <= T.rows(); ++r) {
    for (int c = 1; c <= T.row_length(r); ++c) {
      D.add(T.anchor(r, c), c);
    }
  }
  return D;
}

namespace detail {

// Atom filling with row i1 holding the values of each extracted row.
inline SetValuedFilling rows_to_atom_filling(
    std::size_t n, std::vector<std::pair<int, std::vector<int>>> const& rows) {
  std::vector<int> shape(n, 0);
  for (auto const& [r, vals] : rows) {
    if (r < 1 || static_cast<std::size_t>(r) > n) {
      throw std::logic_error("row index outside the shape");
    }
    shape[static_cast<std::size_t>(r - 1)] = static_cast<int>(vals.size());
  }
  SetValuedFilling S(WeakComposition(shape), FillingVariant::atom);
  for (auto const& [r, vals] : rows) {
    for (std::size_t k = 0; k < vals.size(); ++k) {
      S.set(r, static_cast<int>(k + 1), bit(vals[k]));
    }
  }
  return S;
}

}  // namespace detail

// Left row-filling on the column sets of a key filling.
inline SetValuedFilling psi(SetValuedFilling const& T) {
  if (T.variant() != FillingVariant::key) {
    throw std::invalid_argument("psi expects a key filling");
  }
  auto cols = T.column_sets();
  std::vector<std::pair<int, std::vector<int>>> rows;
  auto remaining = [&] {
    for (auto m : cols) {
      if (m) return true;
    }
    return false;
  };
  while (remaining()) {
    if (cols.empty() || cols[0] == 0) {
      throw std::logic_error("psi: entries remain outside the first column");
    }
    int const i1 = min_of(cols[0]);
    std::vector<int> vals{i1};
    cols[0] &= ~bit(i1);
    for (std::size_t c = 1; c < cols.size(); ++c) {
      BoxSet const ok = cols[c] & ((bit(vals.back()) << 1) - 1);
      if (ok == 0) {
        break;
      }
      int const v = anchor_of(ok);
      vals.push_back(v);
      cols[c] &= ~bit(v);
    }
    rows.emplace_back(i1, std::move(vals));
  }
  return detail::rows_to_atom_filling(T.rows() == 0 ? 0 : static_cast<std::size_t>(T.rows()),
                                      rows);
}

// Threads of K, each written into the row of its first box.
inline SetValuedFilling psi(BoxDiagram const& K, std::size_t n) {
  std::vector<std::pair<int, std::vector<int>>> rows;
  for (auto const& t : thread_decomposition(K)) {
    std::vector<int> vals;
    for (auto const& b : t) {
      vals.push_back(b.row);
    }
    rows.emplace_back(t.front().row, std::move(vals));
  }
  return detail::rows_to_atom_filling(n, rows);
}

// Drop free entries, apply psi, and put each free entry back in its column
// with the least anchor that keeps rows weakly decreasing.
inline SetValuedFilling psi_bar(SetValuedFilling const& Tbar) {
  if (Tbar.variant() != FillingVariant::lascoux) {
    throw std::invalid_argument("psi_bar expects a lascoux filling");
  }
  SetValuedFilling key = Tbar.anchors_only();
  {
    // Same anchors, re-tagged as a key filling.
    SetValuedFilling k(Tbar.index(), FillingVariant::key);
    for (int r = 1; r <= key.rows(); ++r) {
      for (int c = 1; c <= key.row_length(r); ++c) {
        k.set(r, c, key.get(r, c));
      }
    }
    key = std::move(k);
  }
  SetValuedFilling S = psi(key);
  SetValuedFilling const bare = S;
  for (int r = 1; r <= Tbar.rows(); ++r) {
    for (int c = 1; c <= Tbar.row_length(r); ++c) {
      BoxSet const s = Tbar.get(r, c);
      for (int v : set_values(s & ~bit(anchor_of(s)))) {
        int best_row = 0;
        int best = 1 << 20;
        for (int x = 1; x <= bare.rows(); ++x) {
          if (!bare.in_shape(x, c)) {
            continue;
          }
          int const ax = bare.anchor(x, c);
          bool const right_ok = !bare.in_shape(x, c + 1) || bare.anchor(x, c + 1) <= v;
          if (ax > v && right_ok && ax < best) {
            best = ax;
            best_row = x;
          }
        }
        if (best_row == 0) {
          throw std::logic_error("psi_bar: free entry has no admissible box");
        }
        S.set(best_row, c, S.get(best_row, c) | bit(v));
      }
    }
  }
  return S;
}

// Lascoux polynomial into atoms: unit coefficient on each member of lswap(a).
inline Expansion lascoux_to_atom_expansion(WeakComposition const& a) {
  Expansion e("lascoux-atom");
  for (auto const& b : lswap_closure(a)) {
    e.add(b, ZBeta(1));
  }
  return e;
}

// Lascoux polynomial into quasiLascoux: unit coefficient on each of Qlswap(a).
inline Expansion lascoux_to_quasilascoux_expansion(WeakComposition const& a) {
  Expansion e("quasi-lascoux");
  for (auto const& b : qlswap(a)) {
    e.add(b, ZBeta(1));
  }
  return e;
}

}  // namespace kpoly

#endif  // KPOLY_KOHNERT_HPP_
