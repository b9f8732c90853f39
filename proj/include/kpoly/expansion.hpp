// Finite linear combinations of basis elements indexed by weak compositions,
// with coefficients in Z[beta].

#ifndef KPOLY_EXPANSION_HPP_
#define KPOLY_EXPANSION_HPP_

#include <map>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "kpoly/composition.hpp"
#include "kpoly/zbeta.hpp"

namespace kpoly {

class Expansion {
 public:
  Expansion() = default;
  explicit Expansion(std::string basis) : basis_(std::move(basis)) {}

  std::string const& basis() const noexcept { return basis_; }
  void set_basis(std::string basis) { basis_ = std::move(basis); }
  std::map<WeakComposition, ZBeta> const& terms() const& noexcept {
    return terms_;
  }
  // Iterating the terms of a temporary would dangle.
  std::map<WeakComposition, ZBeta> const& terms() const&& = delete;
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  void add(WeakComposition const& a, ZBeta const& c) {
    if (!terms_.empty() && terms_.begin()->first.size() != a.size()) {
      throw std::invalid_argument("expansion indices must share one length");
    }
    auto& slot = terms_[a];
    slot += c;
    if (slot.is_zero()) {
      terms_.erase(a);
    }
  }

  ZBeta coefficient(WeakComposition const& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? ZBeta() : it->second;
  }

  bool is_positive() const {
    for (auto const& [a, c] : terms_) {
      if (!c.is_nonnegative()) {
        return false;
      }
    }
    return true;
  }

  // Sum of all coefficients.
  ZBeta total() const {
    ZBeta s;
    for (auto const& [a, c] : terms_) {
      s += c;
    }
    return s;
  }

  // Same terms regardless of basis tag.
  bool same_terms(Expansion const& o) const { return terms_ == o.terms_; }

  nlohmann::json to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (auto const& [a, c] : terms_) {
      terms.push_back({{"index", a.vec()}, {"coeff", c.to_json()}});
    }
    return {{"basis", basis_}, {"terms", std::move(terms)}};
  }

  // "A(1,0,2) + b*A(2,0,2)"
  std::string to_text() const {
    if (terms_.empty()) {
      return "0";
    }
    std::string out;
    for (auto const& [a, c] : terms_) {
      if (!out.empty()) {
        out += " + ";
      }
      std::string const cs = c.to_string();
      if (cs != "1") {
        out += (c.coefficients().size() > 1 ? "(" + cs + ")" : cs) + "*";
      }
      out += basis_ + "(" + a.to_string() + ")";
    }
    return out;
  }

 private:
  std::string basis_;
  std::map<WeakComposition, ZBeta> terms_;
};

}  // namespace kpoly

#endif  // KPOLY_EXPANSION_HPP_
