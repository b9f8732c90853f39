// Arbitrary-precision integers and dense polynomials in beta over them.

#ifndef KPOLY_ZBETA_HPP_
#define KPOLY_ZBETA_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace kpoly {

using Integer = boost::multiprecision::cpp_int;

// Integers that fit in int64 serialize as JSON numbers, larger ones as strings.
inline nlohmann::json integer_to_json(Integer const& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

inline Integer integer_from_json(nlohmann::json const& j) {
  if (j.is_string()) {
    return Integer(j.get<std::string>());
  }
  if (j.is_number_integer()) {
    return Integer(j.get<std::int64_t>());
  }
  throw std::invalid_argument("expected an integer");
}

// c_0 + c_1 beta + ... with no trailing zero coefficients.
class ZBeta {
 public:
  ZBeta() = default;
  ZBeta(Integer c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) {
      coeffs_.push_back(std::move(c));
    }
  }
  ZBeta(int c) : ZBeta(Integer(c)) {}  // NOLINT(google-explicit-constructor)

  explicit ZBeta(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }

  static ZBeta monomial(Integer c, std::size_t k) {
    std::vector<Integer> v(k + 1);
    v[k] = std::move(c);
    return ZBeta(std::move(v));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for zero.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::vector<Integer> const& coefficients() const noexcept { return coeffs_; }

  Integer coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Integer(0);
  }

  void add(std::size_t k, Integer const& c) {
    if (coeffs_.size() <= k) {
      coeffs_.resize(k + 1);
    }
    coeffs_[k] += c;
    normalize();
  }

  ZBeta& operator+=(ZBeta const& o) {
    if (coeffs_.size() < o.coeffs_.size()) {
      coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
      coeffs_[k] += o.coeffs_[k];
    }
    normalize();
    return *this;
  }

  ZBeta& operator-=(ZBeta const& o) {
    if (coeffs_.size() < o.coeffs_.size()) {
      coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
      coeffs_[k] -= o.coeffs_[k];
    }
    normalize();
    return *this;
  }

  friend ZBeta operator+(ZBeta a, ZBeta const& b) { return a += b; }
  friend ZBeta operator-(ZBeta a, ZBeta const& b) { return a -= b; }

  friend ZBeta operator*(ZBeta const& a, ZBeta const& b) {
    if (a.is_zero() || b.is_zero()) {
      return {};
    }
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return ZBeta(std::move(out));
  }

  Integer evaluate(Integer const& t) const {
    Integer acc = 0;
    for (std::size_t k = coeffs_.size(); k > 0; --k) {
      acc = acc * t + coeffs_[k - 1];
    }
    return acc;
  }

  bool is_nonnegative() const {
    for (auto const& c : coeffs_) {
      if (c < 0) {
        return false;
      }
    }
    return true;
  }

  bool operator==(ZBeta const&) const = default;

  // "16b^3+75b^2+94b+36", highest degree first.
  std::string to_string() const {
    if (coeffs_.empty()) {
      return "0";
    }
    std::string out;
    for (std::size_t k = coeffs_.size(); k > 0; --k) {
      Integer const& c = coeffs_[k - 1];
      if (c == 0) {
        continue;
      }
      std::size_t const d = k - 1;
      Integer mag = c < 0 ? Integer(-c) : c;
      if (out.empty()) {
        if (c < 0) {
          out += '-';
        }
      } else {
        out += c < 0 ? "-" : "+";
      }
      if (mag != 1 || d == 0) {
        out += mag.str();
      }
      if (d >= 1) {
        out += 'b';
      }
      if (d >= 2) {
        out += '^' + std::to_string(d);
      }
    }
    return out;
  }

  // Coefficient list in increasing degree.
  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto const& c : coeffs_) {
      arr.push_back(integer_to_json(c));
    }
    return arr;
  }

  static ZBeta from_json(nlohmann::json const& j) {
    std::vector<Integer> v;
    for (auto const& e : j) {
      v.push_back(integer_from_json(e));
    }
    return ZBeta(std::move(v));
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
      coeffs_.pop_back();
    }
  }

  std::vector<Integer> coeffs_;
};

}  // namespace kpoly

#endif  // KPOLY_ZBETA_HPP_
