// Sparse polynomials in x_1..x_n and beta with arbitrary-precision integer
// coefficients. Terms are kept in canonical order (beta degree ascending,
// then exponent vector lexicographically ascending).

#ifndef KPOLY_POLYNOMIAL_HPP_
#define KPOLY_POLYNOMIAL_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kpoly/composition.hpp"
#include "kpoly/zbeta.hpp"

namespace kpoly {

inline constexpr std::size_t kMaxVariables = 16;

struct Term {
  std::uint16_t beta = 0;
  std::array<std::uint8_t, kMaxVariables> x{};

  // Declaration order makes this the canonical order.
  auto operator<=>(Term const&) const = default;
  bool operator==(Term const&) const = default;

  std::vector<int> exponents(std::size_t n) const {
    return std::vector<int>(x.begin(), x.begin() + static_cast<long>(n));
  }
};

inline Term make_term(std::vector<int> const& x, int beta) {
  if (x.size() > kMaxVariables) {
    throw std::invalid_argument("too many variables");
  }
  if (beta < 0 || beta > 65535) {
    throw std::invalid_argument("beta degree out of range");
  }
  Term t;
  t.beta = static_cast<std::uint16_t>(beta);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 || x[i] > 255) {
      throw std::invalid_argument("exponent out of range");
    }
    t.x[i] = static_cast<std::uint8_t>(x[i]);
  }
  return t;
}

class BetaPolynomial {
 public:
  using TermMap = std::map<Term, Integer>;

  BetaPolynomial() = default;
  explicit BetaPolynomial(std::size_t n) : n_(n) {
    if (n > kMaxVariables) {
      throw std::invalid_argument("too many variables");
    }
  }

  static BetaPolynomial constant(std::size_t n, Integer c) {
    BetaPolynomial p(n);
    p.add_term(Term{}, c);
    return p;
  }

  static BetaPolynomial monomial(WeakComposition const& x, int beta = 0,
                                 Integer c = 1) {
    BetaPolynomial p(x.size());
    p.add_term(make_term(x.vec(), beta), c);
    return p;
  }

  std::size_t n() const noexcept { return n_; }
  TermMap const& terms() const& noexcept { return terms_; }
  TermMap const& terms() const&& = delete;
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(Term const& t, Integer const& c) {
    if (c == 0) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) {
        terms_.erase(it);
      }
    }
  }

  void add_term(std::vector<int> const& x, int beta, Integer const& c) {
    check_n(x.size());
    add_term(make_term(x, beta), c);
  }

  Integer coefficient(std::vector<int> const& x, int beta) const {
    check_n(x.size());
    auto it = terms_.find(make_term(x, beta));
    return it == terms_.end() ? Integer(0) : it->second;
  }

  // this += c * beta^k * other
  void add_scaled(BetaPolynomial const& other, Integer const& c, int k = 0) {
    check_n(other.n_);
    if (c == 0) {
      return;
    }
    for (auto const& [t, v] : other.terms_) {
      Term s = t;
      s.beta = static_cast<std::uint16_t>(s.beta + k);
      add_term(s, v * c);
    }
  }

  void add_scaled(BetaPolynomial const& other, ZBeta const& c) {
    auto const& cs = c.coefficients();
    for (std::size_t k = 0; k < cs.size(); ++k) {
      add_scaled(other, cs[k], static_cast<int>(k));
    }
  }

  BetaPolynomial& operator+=(BetaPolynomial const& o) {
    add_scaled(o, Integer(1));
    return *this;
  }
  BetaPolynomial& operator-=(BetaPolynomial const& o) {
    add_scaled(o, Integer(-1));
    return *this;
  }
  friend BetaPolynomial operator+(BetaPolynomial a, BetaPolynomial const& b) {
    return a += b;
  }
  friend BetaPolynomial operator-(BetaPolynomial a, BetaPolynomial const& b) {
    return a -= b;
  }

  friend BetaPolynomial operator*(BetaPolynomial const& f,
                                  BetaPolynomial const& g) {
    f.check_n(g.n_);
    BetaPolynomial out(f.n_);
    for (auto const& [s, c] : f.terms_) {
      for (auto const& [t, d] : g.terms_) {
        Term u;
        u.beta = static_cast<std::uint16_t>(s.beta + t.beta);
        for (std::size_t i = 0; i < f.n_; ++i) {
          unsigned const e = unsigned{s.x[i]} + t.x[i];
          if (e > 255) {
            throw std::overflow_error("exponent overflow in product");
          }
          u.x[i] = static_cast<std::uint8_t>(e);
        }
        out.add_term(u, c * d);
      }
    }
    return out;
  }

  bool operator==(BetaPolynomial const& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }

  // beta := t
  BetaPolynomial specialize_beta(Integer const& t) const {
    BetaPolynomial out(n_);
    for (auto const& [term, c] : terms_) {
      Term s = term;
      s.beta = 0;
      Integer scale = 1;
      for (int k = 0; k < term.beta; ++k) {
        scale *= t;
      }
      out.add_term(s, c * scale);
    }
    return out;
  }

  // Sets x_{m+1}, ..., x_n to zero and drops them.
  BetaPolynomial restrict_to(std::size_t m) const {
    if (m > n_) {
      throw std::invalid_argument("restrict_to: more variables than present");
    }
    BetaPolynomial out(m);
    for (auto const& [t, c] : terms_) {
      bool killed = false;
      for (std::size_t i = m; i < n_; ++i) {
        killed = killed || t.x[i] != 0;
      }
      if (!killed) {
        out.add_term(t, c);
      }
    }
    return out;
  }

  // Exchanges x_i and x_j (0-based).
  BetaPolynomial swap_variables(std::size_t i, std::size_t j) const {
    BetaPolynomial out(n_);
    for (auto const& [t, c] : terms_) {
      Term s = t;
      std::swap(s.x[i], s.x[j]);
      out.add_term(s, c);
    }
    return out;
  }

  // Terms with a given exponent vector grouped by beta degree.
  std::map<std::vector<int>, ZBeta> by_monomial() const {
    std::map<std::vector<int>, ZBeta> out;
    for (auto const& [t, c] : terms_) {
      out[t.exponents(n_)].add(t.beta, c);
    }
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (auto const& [t, c] : terms_) {
      terms.push_back({{"x", t.exponents(n_)}, {"beta", t.beta},
                       {"c", integer_to_json(c)}});
    }
    return {{"n", n_}, {"terms", std::move(terms)}};
  }

  static BetaPolynomial from_json(nlohmann::json const& j) {
    BetaPolynomial p(j.at("n").get<std::size_t>());
    for (auto const& t : j.at("terms")) {
      p.add_term(t.at("x").get<std::vector<int>>(), t.at("beta").get<int>(),
                 integer_from_json(t.at("c")));
    }
    return p;
  }

  // "x^(1,0,2) + 2*b*x^(1,1,1)", canonical order; "0" when empty.
  std::string to_text() const {
    if (terms_.empty()) {
      return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (auto const& [t, c] : terms_) {
      Integer mag = c < 0 ? Integer(-c) : c;
      if (first) {
        out << (c < 0 ? "-" : "");
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      first = false;
      std::vector<std::string> factors;
      if (mag != 1) {
        factors.push_back(mag.str());
      }
      if (t.beta == 1) {
        factors.emplace_back("b");
      } else if (t.beta > 1) {
        factors.push_back("b^" + std::to_string(t.beta));
      }
      WeakComposition const x(t.exponents(n_));
      if (x.weight() != 0) {
        factors.push_back("x^(" + x.to_string() + ")");
      }
      if (factors.empty()) {
        factors.emplace_back("1");
      }
      for (std::size_t k = 0; k < factors.size(); ++k) {
        out << (k ? "*" : "") << factors[k];
      }
    }
    return out.str();
  }

 private:
  void check_n(std::size_t m) const {
    if (m != n_) {
      throw std::invalid_argument("variable-count mismatch: " +
                                  std::to_string(n_) + " vs " +
                                  std::to_string(m));
    }
  }

  std::size_t n_ = 0;
  TermMap terms_;
};

}  // namespace kpoly

#endif  // KPOLY_POLYNOMIAL_HPP_
