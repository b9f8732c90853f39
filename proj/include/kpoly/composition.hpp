// Weak compositions, colored kompositions, permutations, and the orders
// (dominance, strong Bruhat) that every polynomial family is indexed by.

#ifndef KPOLY_COMPOSITION_HPP_
#define KPOLY_COMPOSITION_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kpoly {

// Thrown for malformed composition text; `position` is the 1-based token index.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::string const& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A finite sequence of nonnegative integers. The length is part of the
// value: (1,0) and (1) are different compositions.
class WeakComposition {
 public:
  WeakComposition() = default;

  explicit WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
      if (p < 0) {
        throw std::invalid_argument("composition entries must be nonnegative");
      }
    }
  }

  WeakComposition(std::initializer_list<int> parts)
      : WeakComposition(std::vector<int>(parts)) {}

  static WeakComposition zeros(std::size_t n) {
    return WeakComposition(std::vector<int>(n, 0));
  }

  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  std::span<int const> parts() const noexcept { return parts_; }
  std::vector<int> const& vec() const noexcept { return parts_; }

  int weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  // 1-based position of the last nonzero entry; 0 for an all-zero sequence.
  std::size_t last_nonzero() const noexcept {
    for (std::size_t i = parts_.size(); i > 0; --i) {
      if (parts_[i - 1] != 0) {
        return i;
      }
    }
    return 0;
  }

  int max_part() const noexcept {
    return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end());
  }

  std::size_t zero_count() const noexcept {
    return static_cast<std::size_t>(
        std::count(parts_.begin(), parts_.end(), 0));
  }

  // 1-based positions of the nonzero entries.
  std::vector<std::size_t> nonzero_positions() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] != 0) {
        out.push_back(i + 1);
      }
    }
    return out;
  }

  WeakComposition positive_part() const {
    std::vector<int> out;
    std::copy_if(parts_.begin(), parts_.end(), std::back_inserter(out),
                 [](int p) { return p != 0; });
    return WeakComposition(std::move(out));
  }

  WeakComposition reversed() const {
    return WeakComposition(std::vector<int>(parts_.rbegin(), parts_.rend()));
  }

  // Extends by trailing zeros; never truncates.
  WeakComposition padded(std::size_t n) const {
    if (n <= parts_.size()) {
      return *this;
    }
    std::vector<int> out = parts_;
    out.resize(n, 0);
    return WeakComposition(std::move(out));
  }

  // 0^m x a
  WeakComposition with_leading_zeros(std::size_t m) const {
    std::vector<int> out(m, 0);
    out.insert(out.end(), parts_.begin(), parts_.end());
    return WeakComposition(std::move(out));
  }

  bool is_partition() const noexcept {
    return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>());
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  auto operator<=>(WeakComposition const&) const = default;
  bool operator==(WeakComposition const&) const = default;

 private:
  std::vector<int> parts_;
};

struct CompositionHash {
  std::size_t operator()(WeakComposition const& a) const noexcept {
    std::size_t h = a.size();
    for (int p : a.parts()) {
      h = h * 1000003u ^ static_cast<std::size_t>(p);
    }
    return h;
  }
};

// b >= a in dominance order: every prefix sum of b is at least that of a.
inline bool dominates(WeakComposition const& b, WeakComposition const& a) {
  if (b.size() != a.size()) {
    throw std::invalid_argument("dominates: length mismatch");
  }
  long sb = 0;
  long sa = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sb += b[i];
    sa += a[i];
    if (sb < sa) {
      return false;
    }
  }
  return true;
}

// A weak composition whose positive entries are colored black or red. Red
// entries are counted by the excess.
class Komposition {
 public:
  Komposition() = default;

  explicit Komposition(WeakComposition const& a)
      : entries_(a.vec()), red_(a.size(), false) {}

  Komposition(std::vector<int> entries, std::vector<bool> red)
      : entries_(std::move(entries)), red_(std::move(red)) {
    if (entries_.size() != red_.size()) {
      throw std::invalid_argument("komposition: one color per entry");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i] < 0) {
        throw std::invalid_argument("komposition entries must be nonnegative");
      }
      if (entries_[i] == 0 && red_[i]) {
        throw std::invalid_argument("komposition: zero entries carry no color");
      }
    }
  }

  std::size_t size() const noexcept { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  bool is_red(std::size_t i) const { return red_[i]; }
  std::vector<int> const& entries() const noexcept { return entries_; }

  int excess() const {
    return static_cast<int>(std::count(red_.begin(), red_.end(), true));
  }

  WeakComposition underlying() const { return WeakComposition(entries_); }

  bool all_black() const { return excess() == 0; }

  // "1,2r,0,2"
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += std::to_string(entries_[i]);
      if (red_[i]) {
        out += 'r';
      }
    }
    return out;
  }

  auto operator<=>(Komposition const&) const = default;
  bool operator==(Komposition const&) const = default;

 private:
  std::vector<int> entries_;
  std::vector<bool> red_;
};

struct KompositionHash {
  std::size_t operator()(Komposition const& b) const noexcept {
    std::size_t h = b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      h = h * 1000003u ^ static_cast<std::size_t>(b[i] * 2 + (b.is_red(i) ? 1 : 0));
    }
    return h;
  }
};

// One-line notation of a bijection on {1..n}.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    std::vector<bool> seen(w_.size() + 1, false);
    for (int v : w_) {
      if (v < 1 || static_cast<std::size_t>(v) > w_.size() || seen[v]) {
        throw std::invalid_argument("permutation: not a bijection on 1..n");
      }
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  std::size_t size() const noexcept { return w_.size(); }
  // 1-based evaluation w(i).
  int operator()(std::size_t i) const { return w_[i - 1]; }
  std::vector<int> const& one_line() const noexcept { return w_; }

  std::size_t length() const noexcept {
    std::size_t inv = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) {
      for (std::size_t j = i + 1; j < w_.size(); ++j) {
        inv += w_[i] > w_[j] ? 1 : 0;
      }
    }
    return inv;
  }

  std::string to_string() const {
    std::string out;
    bool const wide = w_.size() > 9;
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (wide && i != 0) {
        out += ',';
      }
      out += std::to_string(w_[i]);
    }
    return out;
  }

  auto operator<=>(Permutation const&) const = default;
  bool operator==(Permutation const&) const = default;

 private:
  std::vector<int> w_;
};

struct SortedComposition {
  WeakComposition sorted;  // weakly decreasing rearrangement
  Permutation w;           // minimal-length permutation carrying a to sorted
};

// w(a)(i) is the slot that entry a_i occupies in sort(a) under a stable
// descending sort, which is the minimal-length choice.
inline SortedComposition sort_and_w(WeakComposition const& a) {
  std::vector<std::size_t> order(a.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a[i] > a[j]; });
  std::vector<int> sorted(a.size());
  std::vector<int> w(a.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    sorted[k] = a[order[k]];
    w[order[k]] = static_cast<int>(k + 1);
  }
  return {WeakComposition(std::move(sorted)), Permutation(std::move(w))};
}

// Strong Bruhat order via the rank-matrix criterion:
// u <= v iff #{p <= i : u(p) >= j} <= #{p <= i : v(p) >= j} for all i, j.
inline bool bruhat_leq(Permutation const& u, Permutation const& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("bruhat_leq: size mismatch");
  }
  std::size_t const n = u.size();
  std::vector<int> ru(n + 2, 0);
  std::vector<int> rv(n + 2, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    // ru[j] = #{p <= i : u(p) >= j}
    for (int j = u(i); j >= 1; --j) {
      ++ru[j];
    }
    for (int j = v(i); j >= 1; --j) {
      ++rv[j];
    }
    for (std::size_t j = 1; j <= n; ++j) {
      if (ru[j] > rv[j]) {
        return false;
      }
    }
  }
  return true;
}

namespace detail {

inline std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto const pos = text.find(',', start);
    out.push_back(text.substr(start, pos == std::string_view::npos
                                         ? std::string_view::npos
                                         : pos - start));
    if (pos == std::string_view::npos) {
      break;
    }
    start = pos + 1;
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

inline int parse_entry(std::string_view tok, std::size_t position) {
  if (tok.empty()) {
    throw ParseError("empty entry at position " + std::to_string(position),
                     position);
  }
  long value = 0;
  for (char ch : tok) {
    if (ch < '0' || ch > '9') {
      throw ParseError("malformed entry '" + std::string(tok) +
                           "' at position " + std::to_string(position),
                       position);
    }
    value = value * 10 + (ch - '0');
    if (value > 255) {
      throw ParseError("entry too large at position " + std::to_string(position),
                       position);
    }
  }
  return static_cast<int>(value);
}

}  // namespace detail

// "0,2,0,1"
inline WeakComposition parse_composition(std::string_view text) {
  text = detail::trim(text);
  if (text.empty()) {
    throw ParseError("empty composition", 0);
  }
  std::vector<int> parts;
  auto const toks = detail::split_commas(text);
  for (std::size_t i = 0; i < toks.size(); ++i) {
    parts.push_back(detail::parse_entry(detail::trim(toks[i]), i + 1));
  }
  return WeakComposition(std::move(parts));
}

// "1,2r,0,2,0,1,1r"; an 'r' suffix marks a red entry.
inline Komposition parse_komposition(std::string_view text) {
  text = detail::trim(text);
  if (text.empty()) {
    throw ParseError("empty komposition", 0);
  }
  std::vector<int> entries;
  std::vector<bool> red;
  auto const toks = detail::split_commas(text);
  for (std::size_t i = 0; i < toks.size(); ++i) {
    auto tok = detail::trim(toks[i]);
    bool is_red = false;
    if (!tok.empty() && (tok.back() == 'r' || tok.back() == 'R')) {
      is_red = true;
      tok.remove_suffix(1);
    }
    int const v = detail::parse_entry(tok, i + 1);
    if (is_red && v == 0) {
      throw ParseError("zero entry cannot be red at position " +
                           std::to_string(i + 1),
                       i + 1);
    }
    entries.push_back(v);
    red.push_back(is_red);
  }
  return Komposition(std::move(entries), std::move(red));
}

// Every weak composition of length n and weight exactly w, in lex order.
inline std::vector<WeakComposition> compositions_of(int w, std::size_t n) {
  std::vector<WeakComposition> out;
  if (n == 0) {
    if (w == 0) {
      out.emplace_back();
    }
    return out;
  }
  std::vector<int> cur(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      cur[i] = left;
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, w);
  return out;
}

}  // namespace kpoly

#endif  // KPOLY_COMPOSITION_HPP_
