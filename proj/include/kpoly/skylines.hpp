// Set-valued skyline fillings in four variants, their generating functions,
// the two highest-filling conditions, destandardization with colored weights,
// and fiber reconstruction.
//
// Rows are 1-based with row 1 lowest. Real columns are 1-based; column 0 is
// the basement in the key and lascoux variants. A box holds a set of values
// encoded as a bitmask (bit v set when v is present); values are at most 31.

#ifndef KPOLY_SKYLINES_HPP_
#define KPOLY_SKYLINES_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "kpoly/composition.hpp"
#include "kpoly/expansion.hpp"
#include "kpoly/glides.hpp"
#include "kpoly/polynomial.hpp"

namespace kpoly {

using BoxSet = std::uint32_t;

inline int anchor_of(BoxSet s) {
  return s == 0 ? 0 : 31 - std::countl_zero(s);
}
inline int min_of(BoxSet s) { return s == 0 ? 0 : std::countr_zero(s); }
inline BoxSet bit(int v) { return BoxSet{1} << v; }

// Values in decreasing order.
inline std::vector<int> set_values(BoxSet s) {
  std::vector<int> out;
  for (int v = 31; v >= 1; --v) {
    if (s & bit(v)) {
      out.push_back(v);
    }
  }
  return out;
}

enum class FillingVariant { atom, quasi, key, lascoux };

inline std::string to_string(FillingVariant v) {
  switch (v) {
    case FillingVariant::atom: return "atom";
    case FillingVariant::quasi: return "quasi";
    case FillingVariant::key: return "key";
    case FillingVariant::lascoux: return "lascoux";
  }
  return "?";
}

inline FillingVariant parse_variant(std::string const& s) {
  if (s == "atom") return FillingVariant::atom;
  if (s == "quasi") return FillingVariant::quasi;
  if (s == "key") return FillingVariant::key;
  if (s == "lascoux") return FillingVariant::lascoux;
  throw std::invalid_argument("unknown filling variant '" + s + "'");
}

inline bool has_basement(FillingVariant v) {
  return v == FillingVariant::key || v == FillingVariant::lascoux;
}

struct Cell {
  int row;  // 1-based
  int col;  // 1-based; 0 is the basement
  auto operator<=>(Cell const&) const = default;
};

class SetValuedFilling {
 public:
  SetValuedFilling() = default;

  // Empty filling of the variant's shape for index a.
  SetValuedFilling(WeakComposition index, FillingVariant variant)
      : variant_(variant), index_(std::move(index)) {
    if (index_.size() > 31) {
      throw std::invalid_argument("too many rows");
    }
    shape_ = has_basement(variant_) ? index_.reversed() : index_;
    rows_.resize(shape_.size());
    for (std::size_t r = 0; r < shape_.size(); ++r) {
      rows_[r].assign(static_cast<std::size_t>(shape_[r]), 0);
    }
    if (has_basement(variant_)) {
      int const n = static_cast<int>(shape_.size());
      for (int i = 1; i <= n; ++i) {
        basement_.push_back(n - i + 1);
      }
    }
  }

  FillingVariant variant() const noexcept { return variant_; }
  WeakComposition const& index() const noexcept { return index_; }
  // Drawn row lengths (the reversed index for basement variants).
  WeakComposition const& shape() const noexcept { return shape_; }
  std::vector<int> const& basement() const noexcept { return basement_; }
  bool reversed() const noexcept { return has_basement(variant_); }
  int rows() const noexcept { return static_cast<int>(shape_.size()); }
  int row_length(int r) const { return shape_[static_cast<std::size_t>(r - 1)]; }

  bool in_shape(int r, int c) const {
    if (r < 1 || r > rows()) {
      return false;
    }
    if (c == 0) {
      return !basement_.empty();
    }
    return c >= 1 && c <= row_length(r);
  }

  BoxSet get(int r, int c) const {
    if (c == 0) {
      return bit(basement_.at(static_cast<std::size_t>(r - 1)));
    }
    return rows_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
  }
  void set(int r, int c, BoxSet s) {
    rows_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = s;
  }
  int anchor(int r, int c) const { return anchor_of(get(r, c)); }

  std::vector<std::vector<BoxSet>> const& cells() const noexcept { return rows_; }

  int max_columns() const { return shape_.max_part(); }

  // Weight over the index length; basement entries excluded.
  WeakComposition weight() const {
    std::vector<int> w(shape_.size(), 0);
    for (auto const& row : rows_) {
      for (BoxSet s : row) {
        for (int v : set_values(s)) {
          if (static_cast<std::size_t>(v) > w.size()) {
            throw std::logic_error("filling entry exceeds the row count");
          }
          ++w[static_cast<std::size_t>(v - 1)];
        }
      }
    }
    return WeakComposition(std::move(w));
  }

  int entry_count() const {
    int k = 0;
    for (auto const& row : rows_) {
      for (BoxSet s : row) {
        k += std::popcount(s);
      }
    }
    return k;
  }
  int box_count() const { return shape_.weight(); }
  int excess() const { return entry_count() - box_count(); }

  // Union of entries per real column.
  std::vector<BoxSet> column_sets() const {
    std::vector<BoxSet> out(static_cast<std::size_t>(max_columns()), 0);
    for (auto const& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        out[c] |= row[c];
      }
    }
    return out;
  }

  // Same boxes with free entries removed.
  SetValuedFilling anchors_only() const {
    SetValuedFilling out = *this;
    for (auto& row : out.rows_) {
      for (BoxSet& s : row) {
        s = s == 0 ? 0 : bit(anchor_of(s));
      }
    }
    return out;
  }

  bool operator==(SetValuedFilling const& o) const {
    return variant_ == o.variant_ && index_ == o.index_ && rows_ == o.rows_;
  }
  bool operator<(SetValuedFilling const& o) const {
    return std::tie(index_, rows_) < std::tie(o.index_, o.rows_);
  }

  nlohmann::json to_json() const {
    nlohmann::json boxes = nlohmann::json::array();
    for (int r = 1; r <= rows(); ++r) {
      for (int c = 1; c <= row_length(r); ++c) {
        boxes.push_back({{"row", r}, {"col", c}, {"set", set_values(get(r, c))}});
      }
    }
    nlohmann::json j = {{"shape", shape_.vec()}, {"reversed", reversed()}};
    j["basement"] = basement_.empty() ? nlohmann::json(nullptr)
                                      : nlohmann::json(basement_);
    j["boxes"] = std::move(boxes);
    return j;
  }

  // Top row first; basement shown before '|', free entries after the anchor.
  std::string to_text() const {
    std::string out;
    for (int r = rows(); r >= 1; --r) {
      out += "r" + std::to_string(r) + ": ";
      if (!basement_.empty()) {
        out += std::to_string(basement_[static_cast<std::size_t>(r - 1)]) + " | ";
      }
      for (int c = 1; c <= row_length(r); ++c) {
        if (c > 1) {
          out += ' ';
        }
        for (int v : set_values(get(r, c))) {
          out += std::to_string(v) + (v >= 10 ? "." : "");
        }
      }
      out += '\n';
    }
    return out;
  }

 private:
  FillingVariant variant_ = FillingVariant::atom;
  WeakComposition index_;
  WeakComposition shape_;
  std::vector<int> basement_;
  std::vector<std::vector<BoxSet>> rows_;
};

// ---------------------------------------------------------------------------
// Triples

enum class TripleKind { inversionA, inversionB, coinversion, not_a_triple };

inline std::string to_string(TripleKind k) {
  switch (k) {
    case TripleKind::inversionA: return "inversionA";
    case TripleKind::inversionB: return "inversionB";
    case TripleKind::coinversion: return "coinversion";
    case TripleKind::not_a_triple: return "not-a-triple";
  }
  return "?";
}

// Triples are read on anchors. A triple with alpha > beta breaks row
// monotonicity and is reported as a coinversion (it is not an inversion).
inline bool is_inversion(int alpha, int beta, int gamma) {
  return (gamma < alpha && alpha <= beta) || (alpha <= beta && beta < gamma);
}

// beta and alpha adjacent in one row (beta left), gamma the third box.
inline TripleKind classify_triple(SetValuedFilling const& F, Cell beta,
                                  Cell alpha, Cell gamma) {
  if (!F.in_shape(beta.row, beta.col) || !F.in_shape(alpha.row, alpha.col) ||
      !F.in_shape(gamma.row, gamma.col) || beta.row != alpha.row ||
      alpha.col != beta.col + 1) {
    return TripleKind::not_a_triple;
  }
  int const r = alpha.row;
  TripleKind type;
  if (gamma.col == alpha.col && gamma.row > r &&
      F.row_length(r) >= F.row_length(gamma.row)) {
    type = TripleKind::inversionA;
  } else if (gamma.col == beta.col && gamma.row < r &&
             F.row_length(r) > F.row_length(gamma.row)) {
    type = TripleKind::inversionB;
  } else {
    return TripleKind::not_a_triple;
  }
  int const a = F.anchor(alpha.row, alpha.col);
  int const b = F.anchor(beta.row, beta.col);
  int const g = F.anchor(gamma.row, gamma.col);
  return is_inversion(a, b, g) ? type : TripleKind::coinversion;
}

// ---------------------------------------------------------------------------
// Validity straight from the defining conditions. Used as a check and by the
// naive oracle in tests; enumeration below does not go through it.

inline bool entry_bounds_hold(SetValuedFilling const& F) {
  for (int r = 1; r <= F.rows(); ++r) {
    int const bound = F.basement().empty()
                          ? r
                          : F.basement()[static_cast<std::size_t>(r - 1)];
    for (int c = 1; c <= F.row_length(r); ++c) {
      if (F.anchor(r, c) > bound) {
        return false;
      }
    }
  }
  return true;
}

inline bool is_valid_filling(SetValuedFilling const& F) {
  int const n = F.rows();
  int const first = F.basement().empty() ? 1 : 0;
  int const cols = F.max_columns();
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= F.row_length(r); ++c) {
      if (F.get(r, c) == 0 || (F.get(r, c) & 1u)) {
        return false;
      }
    }
  }
  // (S.1) over real columns
  for (int c = 1; c <= cols; ++c) {
    BoxSet seen = 0;
    for (int r = 1; r <= n; ++r) {
      if (F.in_shape(r, c)) {
        if (seen & F.get(r, c)) {
          return false;
        }
        seen |= F.get(r, c);
      }
    }
  }
  // (S.2), basement included
  for (int r = 1; r <= n; ++r) {
    for (int c = first + 1; c <= F.row_length(r); ++c) {
      if (min_of(F.get(r, c - 1)) < F.anchor(r, c)) {
        return false;
      }
    }
  }
  // (S.3)
  for (int r = 1; r <= n; ++r) {
    for (int c = first + 1; c <= F.row_length(r); ++c) {
      for (int s = 1; s <= n; ++s) {
        if (s == r) {
          continue;
        }
        Cell const beta{r, c - 1};
        Cell const alpha{r, c};
        for (Cell gamma : {Cell{s, c}, Cell{s, c - 1}}) {
          auto const k = classify_triple(F, beta, alpha, gamma);
          if (k == TripleKind::coinversion) {
            return false;
          }
        }
      }
    }
  }
  // (S.4)
  for (int c = 1; c <= cols; ++c) {
    for (int r = 1; r <= n; ++r) {
      if (!F.in_shape(r, c)) {
        continue;
      }
      BoxSet const s = F.get(r, c);
      for (int v : set_values(s & ~bit(anchor_of(s)))) {
        int best_row = 0;
        int best_anchor = 1 << 20;
        for (int x = 1; x <= n; ++x) {
          if (!F.in_shape(x, c)) {
            continue;
          }
          int const ax = F.anchor(x, c);
          bool const right_ok =
              !F.in_shape(x, c + 1) || F.anchor(x, c + 1) <= v;
          if (ax > v && right_ok && ax < best_anchor) {
            best_anchor = ax;
            best_row = x;
          }
        }
        if (best_row != r) {
          return false;
        }
      }
    }
  }
  // (S.5) / (S.5') / basement bound
  switch (F.variant()) {
    case FillingVariant::atom:
      for (int r = 1; r <= n; ++r) {
        if (F.row_length(r) > 0 && F.anchor(r, 1) != r) {
          return false;
        }
      }
      break;
    case FillingVariant::quasi: {
      int last = 0;
      for (int r = 1; r <= n; ++r) {
        if (F.row_length(r) > 0) {
          int const v = F.anchor(r, 1);
          if (v > r || v <= last) {
            return false;
          }
          last = v;
        }
      }
      break;
    }
    case FillingVariant::key:
      if (F.excess() != 0) {
        return false;
      }
      break;
    case FillingVariant::lascoux:
      break;
  }
  return entry_bounds_hold(F);
}

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

// Depth-first assignment of anchors in column-major order, bottom row first
// within a column, checking (S.1)-(S.3) and the first-column rule as soon as
// all boxes of a condition are placed.
class AnchorEnumerator {
 public:
  AnchorEnumerator(WeakComposition const& a, FillingVariant variant)
      : proto_(a, variant), variant_(variant) {
    n_ = proto_.rows();
    for (int c = 1; c <= proto_.max_columns(); ++c) {
      for (int r = 1; r <= n_; ++r) {
        if (proto_.row_length(r) >= c) {
          order_.push_back({r, c});
        }
      }
    }
  }

  void run(std::function<void(SetValuedFilling const&)> const& fn) {
    fn_ = &fn;
    work_ = proto_;
    col_used_.assign(static_cast<std::size_t>(proto_.max_columns() + 1), 0);
    step(0);
  }

 private:
  int anc(int r, int c) const { return work_.anchor(r, c); }

  bool triples_ok(int r, int c) const {
    bool const left_exists = c >= 2 || work_.in_shape(r, 0);
    int const len_r = work_.row_length(r);
    // New box as gamma of Type A: beta=(r',c-1), alpha=(r',c), r' < r.
    for (int rp = 1; rp < r; ++rp) {
      if (work_.row_length(rp) < len_r) {
        continue;
      }
      if (c >= 2 || work_.in_shape(rp, 0)) {
        if (!is_inversion(anc(rp, c), anc(rp, c - 1), anc(r, c))) {
          return false;
        }
      }
    }
    // New box as alpha of Type B: beta=(r,c-1), gamma=(s,c-1), s < r.
    if (left_exists) {
      for (int s = 1; s < r; ++s) {
        if (work_.row_length(s) >= len_r) {
          continue;
        }
        if (!work_.in_shape(s, c - 1)) {
          continue;
        }
        if (!is_inversion(anc(r, c), anc(r, c - 1), anc(s, c - 1))) {
          return false;
        }
      }
    }
    return true;
  }

  void step(std::size_t k) {
    if (k == order_.size()) {
      (*fn_)(work_);
      return;
    }
    auto const [r, c] = order_[k];
    int lo = 1;
    int hi;
    if (c == 1) {
      switch (variant_) {
        case FillingVariant::atom:
          lo = hi = r;
          break;
        case FillingVariant::quasi:
          hi = r;
          for (int s = r - 1; s >= 1; --s) {
            if (work_.row_length(s) > 0) {
              lo = anc(s, 1) + 1;
              break;
            }
          }
          break;
        default:
          hi = work_.basement()[static_cast<std::size_t>(r - 1)];
          break;
      }
    } else {
      hi = anc(r, c - 1);
    }
    BoxSet& used = col_used_[static_cast<std::size_t>(c)];
    for (int v = hi; v >= lo; --v) {
      if (used & bit(v)) {
        continue;
      }
      work_.set(r, c, bit(v));
      if (triples_ok(r, c)) {
        used |= bit(v);
        step(k + 1);
        used &= ~bit(v);
      }
    }
    work_.set(r, c, 0);
  }

  SetValuedFilling proto_;
  SetValuedFilling work_;
  FillingVariant variant_;
  int n_ = 0;
  std::vector<Cell> order_;
  std::vector<BoxSet> col_used_;
  std::function<void(SetValuedFilling const&)> const* fn_ = nullptr;
};

}  // namespace detail

struct FreeSlot {
  int value;
  int row;
  int col;
};

// Free values that may be added to an anchor filling, one slot per (column,
// value); each value goes to the box of least anchor exceeding it whose right
// neighbour's anchor is at most the value. Slots are independent.
inline std::vector<FreeSlot> addable_free_entries(SetValuedFilling const& F) {
  std::vector<FreeSlot> out;
  if (F.variant() == FillingVariant::key) {
    return out;
  }
  for (int c = 1; c <= F.max_columns(); ++c) {
    int top = 0;
    for (int r = 1; r <= F.rows(); ++r) {
      if (F.in_shape(r, c)) {
        top = std::max(top, F.anchor(r, c));
      }
    }
    for (int v = 1; v < top; ++v) {
      int best_row = 0;
      int best = 1 << 20;
      bool present = false;
      for (int r = 1; r <= F.rows(); ++r) {
        if (!F.in_shape(r, c)) {
          continue;
        }
        if (F.get(r, c) & bit(v)) {
          present = true;
          break;
        }
        int const ax = F.anchor(r, c);
        bool const right_ok = !F.in_shape(r, c + 1) || F.anchor(r, c + 1) <= v;
        if (ax > v && right_ok && ax < best) {
          best = ax;
          best_row = r;
        }
      }
      if (!present && best_row != 0) {
        out.push_back({v, best_row, c});
      }
    }
  }
  return out;
}

// Anchor-only fillings (every variant; for key these are all fillings).
inline void for_each_anchor_filling(
    WeakComposition const& a, FillingVariant variant,
    std::function<void(SetValuedFilling const&)> const& fn) {
  detail::AnchorEnumerator(a, variant).run(fn);
}

inline void for_each_filling(WeakComposition const& a, FillingVariant variant,
                             std::function<void(SetValuedFilling const&)> const& fn) {
  for_each_anchor_filling(a, variant, [&](SetValuedFilling const& base) {
    auto const slots = addable_free_entries(base);
    if (slots.size() >= 40) {
      throw std::length_error("too many free slots to enumerate");
    }
    SetValuedFilling F = base;
    std::uint64_t const total = std::uint64_t{1} << slots.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      F = base;
      for (std::size_t k = 0; k < slots.size(); ++k) {
        if (mask >> k & 1u) {
          auto const& s = slots[k];
          F.set(s.row, s.col, F.get(s.row, s.col) | bit(s.value));
        }
      }
      fn(F);
    }
  });
}

inline std::vector<SetValuedFilling> enumerate_fillings(WeakComposition const& a,
                                                        FillingVariant variant) {
  std::vector<SetValuedFilling> out;
  for_each_filling(a, variant,
                   [&](SetValuedFilling const& F) { out.push_back(F); });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t count_fillings(WeakComposition const& a,
                                  FillingVariant variant) {
  std::size_t k = 0;
  for_each_anchor_filling(a, variant, [&](SetValuedFilling const& F) {
    k += std::size_t{1} << addable_free_entries(F).size();
  });
  return k;
}

// Sum of beta^ex(F) x^wt(F). Per anchor filling the free slots contribute
// prod_v (1 + beta x_v)^{m_v}, expanded by binomial coefficients.
inline BetaPolynomial filling_generating_function(WeakComposition const& a,
                                                  FillingVariant variant) {
  std::size_t const n = a.size();
  struct TermHash {
    std::size_t operator()(Term const& t) const noexcept {
      std::size_t h = t.beta;
      for (auto e : t.x) {
        h = h * 131u + e;
      }
      return h;
    }
  };
  std::unordered_map<Term, std::int64_t, TermHash> acc;
  std::vector<std::vector<std::int64_t>> binom(33, std::vector<std::int64_t>(33, 0));
  for (int i = 0; i <= 32; ++i) {
    binom[i][0] = 1;
    for (int j = 1; j <= i; ++j) {
      binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
    }
  }
  for_each_anchor_filling(a, variant, [&](SetValuedFilling const& F) {
    Term base;
    for (auto const& row : F.cells()) {
      for (BoxSet s : row) {
        ++base.x[static_cast<std::size_t>(anchor_of(s) - 1)];
      }
    }
    std::vector<int> mult(n + 1, 0);
    for (auto const& slot : addable_free_entries(F)) {
      ++mult[static_cast<std::size_t>(slot.value)];
    }
    std::vector<int> vals;
    for (std::size_t v = 1; v <= n; ++v) {
      if (mult[v] > 0) {
        vals.push_back(static_cast<int>(v));
      }
    }
    // Odometer over e_v in [0, m_v].
    std::vector<int> e(vals.size(), 0);
    while (true) {
      Term t = base;
      std::int64_t coef = 1;
      for (std::size_t k = 0; k < vals.size(); ++k) {
        t.x[static_cast<std::size_t>(vals[k] - 1)] =
            static_cast<std::uint8_t>(t.x[static_cast<std::size_t>(vals[k] - 1)] + e[k]);
        t.beta = static_cast<std::uint16_t>(t.beta + e[k]);
        coef *= binom[mult[static_cast<std::size_t>(vals[k])]][e[k]];
      }
      acc[t] += coef;
      std::size_t k = 0;
      while (k < vals.size() && e[k] == mult[static_cast<std::size_t>(vals[k])]) {
        e[k] = 0;
        ++k;
      }
      if (k == vals.size()) {
        break;
      }
      ++e[k];
    }
  });
  BetaPolynomial f(n);
  for (auto const& [t, c] : acc) {
    f.add_term(t, Integer(c));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Highest fillings and destandardization

enum class HighestMode { meson, quasi_yamanouchi };

inline std::string to_string(HighestMode m) {
  return m == HighestMode::meson ? "meson" : "quasiYamanouchi";
}

inline FillingVariant variant_for(HighestMode m) {
  return m == HighestMode::meson ? FillingVariant::atom : FillingVariant::quasi;
}

namespace detail {

inline void require_mode_variant(SetValuedFilling const& T, HighestMode mode) {
  if (T.variant() != variant_for(mode)) {
    throw std::invalid_argument("filling variant " + to_string(T.variant()) +
                                " does not match " + to_string(mode) + " mode");
  }
}

inline BoxSet all_values(SetValuedFilling const& T) {
  BoxSet s = 0;
  for (auto const& row : T.cells()) {
    for (BoxSet b : row) {
      s |= b;
    }
  }
  return s;
}

// Whether value i (present in T) satisfies the highest condition: its leftmost
// occurrence is a first-column anchor in row i, or a witness value sits in a
// different box weakly to the right.
inline bool value_is_highest(SetValuedFilling const& T, int i, int witness) {
  int lrow = 0;
  int lcol = 1 << 20;
  for (int r = 1; r <= T.rows(); ++r) {
    for (int c = 1; c <= T.row_length(r) && c < lcol; ++c) {
      if (T.get(r, c) & bit(i)) {
        lrow = r;
        lcol = c;
        break;
      }
    }
  }
  if (lcol == 1 && T.anchor(lrow, 1) == i && lrow == i) {
    return true;
  }
  if (witness <= 0 || witness > 31) {
    return false;
  }
  for (int r = 1; r <= T.rows(); ++r) {
    for (int c = lcol; c <= T.row_length(r); ++c) {
      if ((T.get(r, c) & bit(witness)) && !(r == lrow && c == lcol)) {
        return true;
      }
    }
  }
  return false;
}

inline int witness_for(BoxSet present, int i, HighestMode mode) {
  if (mode == HighestMode::quasi_yamanouchi) {
    return i + 1;
  }
  BoxSet const above = present & ~((bit(i) << 1) - 1);
  return above == 0 ? 0 : std::countr_zero(above);
}

// Values of T failing the highest condition, ascending.
inline std::vector<int> failing_values(SetValuedFilling const& T,
                                       HighestMode mode) {
  BoxSet const present = all_values(T);
  std::vector<int> out;
  for (int i = 1; i <= 31; ++i) {
    if ((present & bit(i)) &&
        !value_is_highest(T, i, witness_for(present, i, mode))) {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace detail

inline bool is_highest(SetValuedFilling const& T, HighestMode mode) {
  detail::require_mode_variant(T, mode);
  return detail::failing_values(T, mode).empty();
}

struct Destandardization {
  SetValuedFilling S;
  Komposition kwt;
};

// `choose` picks which failing value to replace next (index into the
// ascending list); the default takes the least.
inline Destandardization destandardize(
    SetValuedFilling const& T, HighestMode mode,
    std::function<std::size_t(std::vector<int> const&)> const& choose = {}) {
  detail::require_mode_variant(T, mode);
  std::vector<int> const w = T.weight().vec();
  std::vector<bool> red(w.size(), false);
  SetValuedFilling cur = T;
  int const cap = cur.rows();
  for (int guard = 0; guard < 64 * (cap + 1); ++guard) {
    auto const failing = detail::failing_values(cur, mode);
    if (failing.empty()) {
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] == 0) {
          red[k] = false;
        }
      }
      return {cur, Komposition(w, red)};
    }
    int const i = failing[choose ? choose(failing) : 0];
    if (i + 1 > cap) {
      throw std::logic_error("destandardization left the value range");
    }
    for (int r = 1; r <= cur.rows(); ++r) {
      for (int c = 1; c <= cur.row_length(r); ++c) {
        BoxSet s = cur.get(r, c);
        if (!(s & bit(i))) {
          continue;
        }
        s &= ~bit(i);
        if (s & bit(i + 1)) {
          red[static_cast<std::size_t>(i)] = true;  // entry i+1, 0-based i
        }
        s |= bit(i + 1);
        cur.set(r, c, s);
      }
    }
  }
  throw std::logic_error("destandardization did not terminate");
}

namespace detail {

// Blocks of b against the nonzero positions of w: fixed at the positions in
// meson mode; greedy in glide mode (shortest prefix reaching the block value,
// then any trailing red entries, which carry net zero).
inline std::vector<std::pair<std::size_t, std::size_t>> glide_blocks(
    Komposition const& b, WeakComposition const& w, HighestMode mode) {
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  auto const pos = w.nonzero_positions();
  std::size_t lo = 0;
  for (std::size_t j = 0; j < pos.size(); ++j) {
    int const v = w[pos[j] - 1];
    std::size_t hi;
    if (mode == HighestMode::meson) {
      hi = pos[j];
    } else {
      int net = 0;
      hi = lo;
      while (hi < b.size() && net < v) {
        net += b[hi] - (b.is_red(hi) ? 1 : 0);
        ++hi;
      }
      while (hi < b.size() && (b[hi] == 0 || b.is_red(hi))) {
        bool any_red_ahead = false;
        for (std::size_t k = hi; k < b.size() && (b[k] == 0 || b.is_red(k)); ++k) {
          any_red_ahead = any_red_ahead || b.is_red(k);
        }
        if (!any_red_ahead) {
          break;
        }
        ++hi;
      }
    }
    blocks.emplace_back(lo, hi);
    lo = hi;
  }
  return blocks;
}

}  // namespace detail

// The unique T with destandardize(T) = (S, b).
inline SetValuedFilling fiber_reconstruct(SetValuedFilling const& S,
                                          Komposition const& b, HighestMode mode) {
  detail::require_mode_variant(S, mode);
  WeakComposition const w = S.weight();
  bool const ok = mode == HighestMode::meson ? is_mesonic_glide_of(b, w)
                                             : is_glide_of(b, w);
  if (!ok) {
    throw std::invalid_argument(
        "komposition " + b.to_string() + " is not a " +
        (mode == HighestMode::meson ? "mesonic glide" : "glide") + " of " +
        w.to_string());
  }
  SetValuedFilling T = S;
  auto const pos = w.nonzero_positions();
  auto const blocks = detail::glide_blocks(b, w, mode);
  for (std::size_t j = 0; j < pos.size(); ++j) {
    int const nj = static_cast<int>(pos[j]);
    struct Letter {
      int value;
      bool red;
    };
    std::vector<Letter> str;
    for (std::size_t k = blocks[j].first; k < blocks[j].second; ++k) {
      int const val = static_cast<int>(k + 1);
      int const bk = b[k];
      if (bk == 0) {
        continue;
      }
      if (b.is_red(k)) {
        str.push_back({val, true});
        for (int t = 1; t < bk; ++t) {
          str.push_back({val, false});
        }
      } else {
        for (int t = 0; t < bk; ++t) {
          str.push_back({val, false});
        }
      }
    }
    // Boxes of S holding n_j, right to left (at most one per column).
    std::vector<Cell> boxes;
    for (int c = S.max_columns(); c >= 1; --c) {
      for (int r = 1; r <= S.rows(); ++r) {
        if (S.in_shape(r, c) && (S.get(r, c) & bit(nj))) {
          boxes.push_back({r, c});
        }
      }
    }
    for (auto const& cell : boxes) {
      T.set(cell.row, cell.col, T.get(cell.row, cell.col) & ~bit(nj));
    }
    std::size_t box = 0;
    bool started = false;
    for (auto const& letter : str) {
      if (!letter.red) {
        if (started) {
          ++box;
        }
        started = true;
      } else if (!started) {
        throw std::invalid_argument("block starts with a red entry");
      }
      if (box >= boxes.size()) {
        throw std::invalid_argument("too many letters for the boxes holding " +
                                    std::to_string(nj));
      }
      Cell const& cell = boxes[box];
      T.set(cell.row, cell.col, T.get(cell.row, cell.col) | bit(letter.value));
    }
    if (started ? box + 1 != boxes.size() : !boxes.empty()) {
      throw std::invalid_argument("letter count does not match the boxes holding " +
                                  std::to_string(nj));
    }
  }
  return T;
}

// ---------------------------------------------------------------------------
// Filling-based expansions

inline std::vector<SetValuedFilling> highest_fillings(WeakComposition const& a,
                                                      HighestMode mode) {
  std::vector<SetValuedFilling> out;
  for_each_filling(a, variant_for(mode), [&](SetValuedFilling const& F) {
    if (detail::failing_values(F, mode).empty()) {
      out.push_back(F);
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline Expansion highest_expansion(WeakComposition const& a, HighestMode mode,
                                   std::string basis) {
  Expansion e(std::move(basis));
  for_each_filling(a, variant_for(mode), [&](SetValuedFilling const& F) {
    if (failing_values(F, mode).empty()) {
      e.add(F.weight(), ZBeta::monomial(1, static_cast<std::size_t>(F.excess())));
    }
  });
  return e;
}

}  // namespace detail

// Lascoux atom into kaons: one term beta^ex(T) P_wt(T) per meson-highest T.
inline Expansion atom_to_kaon_expansion(WeakComposition const& a) {
  return detail::highest_expansion(a, HighestMode::meson, "kaon");
}

// quasiLascoux into glides: one term per quasiYamanouchi filling.
inline Expansion quasilascoux_to_glide_expansion(WeakComposition const& a) {
  return detail::highest_expansion(a, HighestMode::quasi_yamanouchi, "glide");
}

}  // namespace kpoly

#endif  // KPOLY_SKYLINES_HPP_
