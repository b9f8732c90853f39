// Named polynomial families and a shared, thread-safe cache of their
// monomial expansions.

#ifndef KPOLY_FAMILIES_HPP_
#define KPOLY_FAMILIES_HPP_

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "kpoly/composition.hpp"
#include "kpoly/glides.hpp"
#include "kpoly/polynomial.hpp"
#include "kpoly/skylines.hpp"

namespace kpoly {

enum class Family {
  glide,
  slide,
  kaon,
  particle,
  lascoux_atom,
  demazure_atom,
  quasi_lascoux,
  quasikey,
  lascoux,
  demazure_character,
  quasi_grothendieck,
  quasi_schur,
  symmetric_grothendieck,
  schur,
};

inline std::vector<std::pair<Family, std::string>> const& family_names() {
  static std::vector<std::pair<Family, std::string>> const names = {
      {Family::glide, "glide"},
      {Family::slide, "slide"},
      {Family::kaon, "kaon"},
      {Family::particle, "particle"},
      {Family::lascoux_atom, "lascoux-atom"},
      {Family::demazure_atom, "demazure-atom"},
      {Family::quasi_lascoux, "quasi-lascoux"},
      {Family::quasikey, "quasikey"},
      {Family::lascoux, "lascoux"},
      {Family::demazure_character, "demazure-character"},
      {Family::quasi_grothendieck, "quasi-grothendieck"},
      {Family::quasi_schur, "quasi-schur"},
      {Family::symmetric_grothendieck, "symmetric-grothendieck"},
      {Family::schur, "schur"},
  };
  return names;
}

inline std::string to_string(Family f) {
  for (auto const& [g, name] : family_names()) {
    if (g == f) {
      return name;
    }
  }
  return "?";
}

inline Family parse_family(std::string const& s) {
  for (auto const& [g, name] : family_names()) {
    if (name == s) {
      return g;
    }
  }
  throw std::invalid_argument("unknown family '" + s + "'");
}

// The beta-deformed family a cohomological family specializes from.
inline Family k_theoretic(Family f) {
  switch (f) {
    case Family::slide: return Family::glide;
    case Family::particle: return Family::kaon;
    case Family::demazure_atom: return Family::lascoux_atom;
    case Family::quasikey: return Family::quasi_lascoux;
    case Family::demazure_character: return Family::lascoux;
    case Family::quasi_schur: return Family::quasi_grothendieck;
    case Family::schur: return Family::symmetric_grothendieck;
    default: return f;
  }
}

inline bool is_cohomological(Family f) { return k_theoretic(f) != f; }

// Families indexed by every weak composition of a given length, hence usable
// as expansion targets.
inline bool is_polynomial_basis(Family f) {
  switch (k_theoretic(f)) {
    case Family::glide:
    case Family::kaon:
    case Family::lascoux_atom:
    case Family::quasi_lascoux:
    case Family::lascoux:
      return true;
    default:
      return false;
  }
}

namespace detail {

class FamilyCache {
 public:
  using Ptr = std::shared_ptr<BetaPolynomial const>;

  static FamilyCache& instance() {
    static FamilyCache cache;
    return cache;
  }

  Ptr find(Family f, WeakComposition const& a) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find({f, a});
    return it == map_.end() ? nullptr : it->second;
  }

  Ptr insert(Family f, WeakComposition const& a, BetaPolynomial p) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] =
        map_.try_emplace({f, a}, std::make_shared<BetaPolynomial const>(std::move(p)));
    return it->second;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<Family, WeakComposition>, Ptr> map_;
};

}  // namespace detail

inline BetaPolynomial const& family_poly(Family f, WeakComposition const& a);

// Sum of atoms over b >= a with b+ = a+.
inline BetaPolynomial quasi_lascoux_via_atoms(WeakComposition const& a) {
  BetaPolynomial f(a.size());
  for (auto const& b : dominating_rearrangements(a)) {
    f += family_poly(Family::lascoux_atom, b);
  }
  return f;
}

// Sum of atoms over weak compositions of length n with positive part alpha.
inline BetaPolynomial quasi_grothendieck_poly(WeakComposition const& alpha,
                                              std::size_t n) {
  auto const strong = alpha.positive_part();
  if (strong.size() > n) {
    throw std::invalid_argument("composition " + strong.to_string() +
                                " has more parts than " + std::to_string(n) +
                                " variables");
  }
  WeakComposition const bottom = strong.with_leading_zeros(n - strong.size());
  BetaPolynomial f(n);
  for (auto const& b : dominating_rearrangements(bottom)) {
    f += family_poly(Family::lascoux_atom, b);
  }
  return f;
}

// Sum of atoms over rearrangements of lambda of length n.
inline BetaPolynomial symmetric_grothendieck_poly(WeakComposition const& lambda,
                                                  std::size_t n) {
  auto const strong = lambda.positive_part();
  if (!strong.is_partition()) {
    throw std::invalid_argument("index " + lambda.to_string() +
                                " is not a partition");
  }
  if (strong.size() > n) {
    throw std::invalid_argument("partition has more parts than variables");
  }
  std::vector<int> parts = strong.padded(n).vec();
  std::sort(parts.begin(), parts.end());
  BetaPolynomial f(n);
  do {
    f += family_poly(Family::lascoux_atom, WeakComposition(parts));
  } while (std::next_permutation(parts.begin(), parts.end()));
  return f;
}

namespace detail {

inline BetaPolynomial compute_family(Family f, WeakComposition const& a) {
  if (is_cohomological(f)) {
    return family_poly(k_theoretic(f), a).specialize_beta(0);
  }
  switch (f) {
    case Family::glide: return glide_poly(a);
    case Family::kaon: return kaon_poly(a);
    case Family::lascoux_atom:
      return filling_generating_function(a, FillingVariant::atom);
    case Family::quasi_lascoux:
      return filling_generating_function(a, FillingVariant::quasi);
    case Family::lascoux:
      return filling_generating_function(a, FillingVariant::lascoux);
    case Family::quasi_grothendieck:
      return quasi_grothendieck_poly(a, a.size());
    case Family::symmetric_grothendieck:
      if (!a.is_partition()) {
        throw std::invalid_argument("index " + a.to_string() +
                                    " is not a partition");
      }
      return symmetric_grothendieck_poly(a, a.size());
    default:
      throw std::logic_error("unhandled family");
  }
}

}  // namespace detail

// Monomial expansion of a family member; quasi-grothendieck and
// symmetric-grothendieck read a length-n index as (a+, n).
inline BetaPolynomial const& family_poly(Family f, WeakComposition const& a) {
  auto& cache = detail::FamilyCache::instance();
  if (auto p = cache.find(f, a)) {
    return *p;
  }
  return *cache.insert(f, a, detail::compute_family(f, a));
}

inline BetaPolynomial const& family_poly(std::string const& name,
                                         WeakComposition const& a) {
  return family_poly(parse_family(name), a);
}

// Restriction of Q_{0^m x a} to x_1..x_m against the quasiGrothendieck
// polynomial of a+ in m variables.
inline bool stable_limit_check(WeakComposition const& a, std::size_t m) {
  if (a.positive_part().size() > m) {
    // Both sides vanish: every atom term needs more than m variables.
    return family_poly(Family::quasi_lascoux, a.with_leading_zeros(m))
        .restrict_to(m)
        .is_zero();
  }
  auto const lhs =
      family_poly(Family::quasi_lascoux, a.with_leading_zeros(m)).restrict_to(m);
  return lhs == quasi_grothendieck_poly(a.positive_part(), m);
}

}  // namespace kpoly

#endif  // KPOLY_FAMILIES_HPP_
