#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "kpoly/families.hpp"
#include "kpoly/glides.hpp"

using namespace kpoly;

namespace {

struct T {
  std::string x;  // digits, one per variable
  int beta;
  int c;
};

BetaPolynomial poly_of(std::vector<T> const& terms) {
  BetaPolynomial p(terms.front().x.size());
  for (auto const& t : terms) {
    std::vector<int> x;
    for (char ch : t.x) x.push_back(ch - '0');
    p.add_term(x, t.beta, Integer(t.c));
  }
  return p;
}

int net(Komposition const& b, std::size_t lo, std::size_t hi) {
  int s = 0;
  for (std::size_t k = lo; k < hi; ++k) s += b[k] - (b.is_red(k) ? 1 : 0);
  return s;
}

bool leftmost_black(Komposition const& b, std::size_t lo, std::size_t hi) {
  for (std::size_t k = lo; k < hi; ++k) {
    if (b[k] != 0) return !b.is_red(k);
  }
  return true;
}

bool zero_after(Komposition const& b, std::size_t lo) {
  for (std::size_t k = lo; k < b.size(); ++k) {
    if (b[k] != 0) return false;
  }
  return true;
}

// Block conditions tried over every increasing i-sequence.
bool glide_by_definition(Komposition const& b, WeakComposition const& a) {
  auto const pos = a.nonzero_positions();
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t j, std::size_t prev) {
    if (j == pos.size()) return zero_after(b, prev);
    for (std::size_t i = prev + 1; i <= pos[j]; ++i) {
      if (net(b, prev, i) == a[pos[j] - 1] && leftmost_black(b, prev, i) && rec(j + 1, i)) {
        return true;
      }
    }
    return false;
  };
  return rec(0, 0);
}

bool mesonic_by_definition(Komposition const& b, WeakComposition const& a) {
  std::size_t prev = 0;
  for (std::size_t p : a.nonzero_positions()) {
    if (net(b, prev, p) != a[p - 1] || !leftmost_black(b, prev, p) || b[p - 1] == 0) {
      return false;
    }
    prev = p;
  }
  return zero_after(b, prev);
}

// Every colored sequence of length n with entry sum at most `cap`.
std::vector<Komposition> all_kompositions(std::size_t n, int cap) {
  std::vector<Komposition> out;
  std::vector<int> e(n, 0);
  std::vector<bool> r(n, false);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k == n) {
      out.emplace_back(e, r);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[k] = v;
      r[k] = false;
      rec(k + 1, left - v);
      if (v > 0) {
        r[k] = true;
        rec(k + 1, left - v);
        r[k] = false;
      }
    }
    e[k] = 0;
  };
  rec(0, cap);
  return out;
}

}  // namespace

TEST_CASE("glides agree with the block definition", "[glides]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int w = 0; w <= 3; ++w) {
      auto const candidates = all_kompositions(n, w + static_cast<int>(n));
      for (auto const& a : compositions_of(w, n)) {
        std::vector<Komposition> glides;
        std::vector<Komposition> mesonic;
        for (auto const& b : candidates) {
          if (glide_by_definition(b, a)) glides.push_back(b);
          if (mesonic_by_definition(b, a)) mesonic.push_back(b);
        }
        std::sort(glides.begin(), glides.end());
        std::sort(mesonic.begin(), mesonic.end());
        INFO("a = " << a.to_string());
        CHECK(enumerate_glides(a).members == glides);
        CHECK(enumerate_mesonic_glides(a).members == mesonic);
        for (auto const& b : candidates) {
          CHECK(is_glide_of(b, a) == glide_by_definition(b, a));
          CHECK(is_mesonic_glide_of(b, a) == mesonic_by_definition(b, a));
        }
      }
    }
  }
}

TEST_CASE("example glides of (0,2,0,0,2,0,1)", "[glides]") {
  WeakComposition const a{0, 2, 0, 0, 2, 0, 1};
  auto const g = enumerate_glides(a);
  CHECK(g.contains(parse_komposition("1,2r,0,2,0,1,1r")));
  CHECK(g.contains(parse_komposition("2,1,2r,1r,1r,1,0")));
  for (auto const& b : g.members) CHECK(glide_by_definition(b, a));
}

TEST_CASE("mesonic and non-mesonic glides of (0,3,0,2)", "[glides]") {
  WeakComposition const a{0, 3, 0, 2};
  auto const b = parse_komposition("2,1,1,2r");
  auto const b2 = parse_komposition("3,1,0,2r");
  CHECK(enumerate_mesonic_glides(a).contains(b));
  CHECK(enumerate_glides(a).contains(b2));
  CHECK_FALSE(enumerate_mesonic_glides(a).contains(b2));
  CHECK_FALSE(is_mesonic_glide_of(b2, a));
}

TEST_CASE("small glide sets", "[glides]") {
  WeakComposition const a{0, 1};
  auto const mes = enumerate_mesonic_glides(a).members;
  CHECK(mes == std::vector<Komposition>{parse_komposition("0,1"), parse_komposition("1,1r")});
  CHECK(enumerate_glides(a).members.size() == 3);
  CHECK(glide_poly(a) == poly_of({{"01", 0, 1}, {"10", 0, 1}, {"11", 1, 1}}));
  CHECK(glide_poly(WeakComposition{2, 0, 0}) == poly_of({{"200", 0, 1}}));
}

TEST_CASE("glide polynomial of (0,2,0,1)", "[glides][golden]") {
  auto const expected = poly_of({
      {"0201", 0, 1}, {"1101", 0, 1}, {"0210", 0, 1}, {"1110", 0, 1}, {"2001", 0, 1},
      {"2010", 0, 1}, {"2100", 0, 1}, {"0211", 1, 1}, {"1111", 1, 1}, {"1201", 1, 1},
      {"1210", 1, 1}, {"2011", 1, 1}, {"2101", 1, 2}, {"2110", 1, 2}, {"1211", 2, 1},
      {"2111", 2, 2},
  });
  CHECK(glide_poly(WeakComposition{0, 2, 0, 1}) == expected);
}

TEST_CASE("kaon of (0,3,0,2)", "[glides][golden]") {
  auto const expected = poly_of({
      {"0302", 0, 1}, {"0311", 0, 1}, {"1202", 0, 1}, {"1211", 0, 1}, {"2102", 0, 1},
      {"2111", 0, 1}, {"0312", 1, 1}, {"0321", 1, 1}, {"1212", 1, 1}, {"1221", 1, 1},
      {"1302", 1, 1}, {"1311", 1, 1}, {"2112", 1, 1}, {"2121", 1, 1}, {"2202", 1, 1},
      {"2211", 1, 1}, {"3102", 1, 1}, {"3111", 1, 1}, {"1312", 2, 1}, {"1321", 2, 1},
      {"2212", 2, 1}, {"2221", 2, 1}, {"3112", 2, 1}, {"3121", 2, 1},
  });
  auto const k = kaon_poly(WeakComposition{0, 3, 0, 2});
  CHECK(k.size() == 24);
  CHECK(k == expected);
}

TEST_CASE("kaon of (0,0,2) has coefficient 2 on b*x^(1,1,1)", "[glides][golden]") {
  auto const k = kaon_poly(WeakComposition{0, 0, 2});
  CHECK(k.coefficient({1, 1, 1}, 1) == 2);
  auto const mes = enumerate_mesonic_glides(WeakComposition{0, 0, 2});
  CHECK(mes.contains(parse_komposition("1,1r,1")));
  CHECK(mes.contains(parse_komposition("1,1,1r")));
}

TEST_CASE("glide to kaon refinement", "[glides]") {
  auto const e = glide_to_kaon_expansion(WeakComposition{0, 2, 0, 1});
  std::vector<WeakComposition> idx;
  for (auto const& [b, c] : e.terms()) {
    idx.push_back(b);
    CHECK(c == ZBeta(1));
  }
  CHECK(idx == std::vector<WeakComposition>{{0, 2, 0, 1}, {0, 2, 1, 0}, {2, 0, 0, 1},
                                            {2, 0, 1, 0}, {2, 1, 0, 0}});
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int w = 0; w <= 6; ++w) {
      for (auto const& a : compositions_of(w, n)) {
        BetaPolynomial sum(n);
        std::vector<WeakComposition> brute;
        for (auto const& b : compositions_of(w, n)) {
          if (b.positive_part() == a.positive_part() && dominates(b, a)) brute.push_back(b);
        }
        auto const gk = glide_to_kaon_expansion(a);
        for (auto const& [b, c] : gk.terms()) {
          sum.add_scaled(kaon_poly(b), c);
        }
        CHECK(dominating_rearrangements(a) == brute);
        CHECK(sum == glide_poly(a));
      }
    }
  }
}

TEST_CASE("structural properties of glide sets", "[glides]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int w = 0; w <= 5; ++w) {
      for (auto const& a : compositions_of(w, n)) {
        auto const g = enumerate_glides(a);
        auto const m = enumerate_mesonic_glides(a);
        for (auto const& b : m.members) CHECK(g.contains(b));
        CHECK(glide_poly(a).coefficient(a.vec(), 0) == 1);
        CHECK(kaon_poly(a).coefficient(a.vec(), 0) == 1);
        std::vector<Komposition> black;
        for (auto const& b : g.members) {
          if (b.all_black()) black.push_back(b);
        }
        CHECK(glide_poly(a).specialize_beta(0) == detail::generating_function(black, n));
        CHECK(family_poly(Family::slide, a) == glide_poly(a).specialize_beta(0));
        CHECK(family_poly(Family::particle, a) == kaon_poly(a).specialize_beta(0));
      }
    }
  }
}
