// Identity suite: every theorem-level identity and audit, checked exactly at
// each composition of a bounded grid, with pass/fail counts per identity.

#ifndef KPOLY_VERIFY_HPP_
#define KPOLY_VERIFY_HPP_

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "kpoly/expand.hpp"
#include "kpoly/kohnert.hpp"
#include "kpoly/scan.hpp"

namespace kpoly {

// Cohomological counterpart of a beta-deformed family.
inline Family classical(Family f) {
  for (auto const& [g, name] : family_names()) {
    if (is_cohomological(g) && k_theoretic(g) == f) {
      return g;
    }
  }
  return f;
}

namespace checks {

// family(a) = sum of coeff * basis(b), and the same at beta = 0 with the
// classical families.
inline bool expansion_identity(Family lhs, WeakComposition const& a,
                               Expansion const& e, Family basis) {
  return family_poly(lhs, a) == reconstruct(e, basis, a.size());
}

inline bool expansion_identity_beta0(Family lhs, WeakComposition const& a,
                                     Expansion const& e, Family basis) {
  BetaPolynomial rhs(a.size());
  for (auto const& [b, c] : e.terms()) {
    rhs.add_scaled(family_poly(classical(basis), b), c.coefficient(0));
  }
  return family_poly(classical(lhs), a) == rhs;
}

// Every filling of a destandardizes to a highest filling and a glide of its
// weight, and reconstructs exactly; fibers over the highest fillings account
// for every filling.
inline bool destandardization_fibers(WeakComposition const& a, HighestMode mode) {
  auto const all = enumerate_fillings(a, variant_for(mode));
  std::set<std::pair<SetValuedFilling, Komposition>> images;
  for (auto const& T : all) {
    auto const d = destandardize(T, mode);
    if (!is_highest(d.S, mode)) return false;
    if (d.kwt.underlying() != T.weight()) return false;
    if (d.S.excess() + d.kwt.excess() != T.excess()) return false;
    if (!(fiber_reconstruct(d.S, d.kwt, mode) == T)) return false;
    images.insert({d.S, d.kwt});
  }
  if (images.size() != all.size()) return false;
  std::size_t fibered = 0;
  for (auto const& S : highest_fillings(a, mode)) {
    auto const w = S.weight();
    auto const glides = mode == HighestMode::meson ? enumerate_mesonic_glides(w)
                                                   : enumerate_glides(w);
    for (auto const& b : glides.members) {
      auto const T = fiber_reconstruct(S, b, mode);
      if (!is_valid_filling(T)) return false;
      auto const d = destandardize(T, mode);
      if (!(d.S == S) || !(d.kwt == b)) return false;
      ++fibered;
    }
  }
  return fibered == all.size();
}

inline bool psi_bijection(WeakComposition const& a) {
  auto const ls = lswap_closure(a);
  std::size_t want = 0;
  for (auto const& b : ls) want += count_fillings(b, FillingVariant::atom);
  std::set<SetValuedFilling> image;
  auto const keys = enumerate_fillings(a, FillingVariant::key);
  std::size_t key_want = 0;
  for (auto const& b : ls) {
    for_each_anchor_filling(b, FillingVariant::atom,
                            [&](SetValuedFilling const&) { ++key_want; });
  }
  for (auto const& T : keys) {
    auto const S = psi(T);
    if (!is_valid_filling(S) || S.column_sets() != T.column_sets() ||
        !std::binary_search(ls.begin(), ls.end(), S.index())) {
      return false;
    }
    if (!(psi(key_to_diagram(T), a.size()) == S)) return false;
    image.insert(S);
  }
  if (image.size() != keys.size() || keys.size() != key_want) return false;
  image.clear();
  std::size_t count = 0;
  for (auto const& T : enumerate_fillings(a, FillingVariant::lascoux)) {
    auto const S = psi_bar(T);
    if (!is_valid_filling(S) || S.column_sets() != T.column_sets() ||
        !std::binary_search(ls.begin(), ls.end(), S.index())) {
      return false;
    }
    image.insert(S);
    ++count;
  }
  return image.size() == count && count == want;
}

inline std::vector<WeakComposition> rearrangements(WeakComposition const& a) {
  std::vector<int> v = a.vec();
  std::sort(v.begin(), v.end());
  std::vector<WeakComposition> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline bool lemma_bruhat(WeakComposition const& a) {
  auto const wa = sort_and_w(a).w;
  std::vector<WeakComposition> via;
  for (auto const& b : rearrangements(a)) {
    if (bruhat_leq(sort_and_w(b).w, wa)) via.push_back(b);
  }
  return via == lswap_closure(a);
}

inline bool lemma_kohnert_skylines(WeakComposition const& a) {
  std::set<WeakComposition> shapes;
  for (auto const& D : kohnert_closure(a)) {
    if (auto s = D.skyline_shape(a.size())) shapes.insert(*s);
  }
  return std::vector<WeakComposition>(shapes.begin(), shapes.end()) ==
         lswap_closure(a);
}

inline bool kohnert_diagrams_are_key_fillings(WeakComposition const& a) {
  std::set<BoxDiagram> diagrams;
  auto const keys = enumerate_fillings(a, FillingVariant::key);
  for (auto const& T : keys) diagrams.insert(key_to_diagram(T));
  auto const& closure = kohnert_closure(a);
  return diagrams.size() == keys.size() &&
         std::equal(diagrams.begin(), diagrams.end(), closure.begin(), closure.end());
}

inline std::vector<int> column_counts(BoxDiagram const& D) {
  std::vector<int> out;
  for (int c = 1; c <= D.columns(); ++c) out.push_back(std::popcount(D.column_mask(c)));
  return out;
}

inline bool kohnert_moves_preserve_columns(WeakComposition const& a) {
  for (auto const& D : kohnert_closure(a)) {
    for (auto const& E : kohnert_successors(D)) {
      if (column_counts(E) != column_counts(D)) return false;
    }
  }
  return true;
}

inline bool lemma_nearest_reachable(WeakComposition const& a) {
  auto const& closure = kohnert_closure(a);
  for (auto const& K : closure) {
    auto const up = nearest_skyline(K);
    if (!up.skyline_shape(a.size())) return false;
    if (!std::binary_search(closure.begin(), closure.end(), up)) return false;
  }
  return true;
}

inline bool lemma_psi_shape(WeakComposition const& a) {
  for (auto const& K : kohnert_closure(a)) {
    if (psi(K, a.size()).index() != *nearest_skyline(K).skyline_shape(a.size())) {
      return false;
    }
  }
  return true;
}

inline std::set<std::vector<std::pair<int, int>>> thread_sets(BoxDiagram const& K) {
  std::set<std::vector<std::pair<int, int>>> out;
  for (auto const& t : thread_decomposition(K)) {
    std::vector<std::pair<int, int>> v;
    for (auto const& b : t) v.emplace_back(b.row, b.col);
    out.insert(v);
  }
  return out;
}

// Threads keep their boxes up to vertical position and their first box while
// boxes are raised; each thread spans columns 1..k with weakly falling rows.
inline bool lemma_threading(WeakComposition const& a) {
  for (auto const& K : kohnert_closure(a)) {
    auto const steps = nearest_skyline_steps(K).steps;
    auto const base = thread_decomposition(K);
    for (auto const& t : base) {
      for (std::size_t k = 0; k < t.size(); ++k) {
        if (t[k].col != static_cast<int>(k + 1)) return false;
        if (k > 0 && t[k].row > t[k - 1].row) return false;
      }
    }
    for (std::size_t s = 1; s < steps.size(); ++s) {
      auto const prev = thread_decomposition(steps[s - 1]);
      auto const next = thread_decomposition(steps[s]);
      if (prev.size() != next.size()) return false;
      // The raised box is the only one that moved.
      std::vector<Cell> moved_from, moved_to;
      for (auto const& b : steps[s - 1].boxes())
        if (!steps[s].has(b.row, b.col)) moved_from.push_back(b);
      for (auto const& b : steps[s].boxes())
        if (!steps[s - 1].has(b.row, b.col)) moved_to.push_back(b);
      if (moved_from.size() != 1 || moved_to.size() != 1) return false;
      auto relabel = [&](Cell c) {
        return c.row == moved_from[0].row && c.col == moved_from[0].col ? moved_to[0] : c;
      };
      std::set<std::vector<std::pair<int, int>>> mapped;
      for (auto const& t : prev) {
        std::vector<std::pair<int, int>> v;
        for (auto const& b : t) {
          auto const c = relabel(b);
          v.emplace_back(c.row, c.col);
        }
        mapped.insert(v);
      }
      if (mapped != thread_sets(steps[s])) return false;
      for (std::size_t k = 0; k < prev.size(); ++k) {
        if (prev[k].front().row != next[k].front().row) return false;
      }
    }
  }
  return true;
}

inline bool leading_term_quasi_lascoux(WeakComposition const& a) {
  auto const m = leading_key(family_poly(Family::quasi_lascoux, a));
  return m.k == 0 && m.a == a &&
         family_poly(Family::quasi_lascoux, a).coefficient(a.vec(), 0) == 1;
}

inline bool is_quasisymmetric(BetaPolynomial const& f) {
  std::size_t const n = f.n();
  for (auto const& [t, c] : f.terms()) {
    WeakComposition const x(t.exponents(n));
    auto const strong = x.positive_part();
    if (strong.size() > n) return false;
    for (auto const& y : dominating_rearrangements(strong.with_leading_zeros(n - strong.size()))) {
      if (f.coefficient(y.vec(), t.beta) != c) return false;
    }
  }
  return true;
}

inline bool is_symmetric(BetaPolynomial const& f) {
  for (std::size_t i = 0; i + 1 < f.n(); ++i) {
    if (!(f.swap_variables(i, i + 1) == f)) return false;
  }
  return true;
}

inline bool engine_matches(BetaPolynomial const& f, Family basis, Expansion const& e) {
  return expand_in_basis(f, basis).same_terms(e);
}

}  // namespace checks

struct IdentityCheck {
  std::string name;
  std::function<bool(WeakComposition const&)> run;
};

inline std::vector<IdentityCheck> identity_checks() {
  using namespace checks;
  std::vector<IdentityCheck> v;
  auto add = [&](std::string name, std::function<bool(WeakComposition const&)> fn) {
    v.push_back({std::move(name), std::move(fn)});
  };
  struct Formula {
    std::string name;
    Family lhs;
    Family basis;
    Expansion (*expansion)(WeakComposition const&);
  };
  std::vector<Formula> const formulas = {
      {"glide-to-kaon", Family::glide, Family::kaon, &glide_to_kaon_expansion},
      {"atom-to-kaon", Family::lascoux_atom, Family::kaon, &atom_to_kaon_expansion},
      {"quasilascoux-to-glide", Family::quasi_lascoux, Family::glide,
       &quasilascoux_to_glide_expansion},
      {"lascoux-to-atom", Family::lascoux, Family::lascoux_atom,
       &lascoux_to_atom_expansion},
      {"lascoux-to-quasilascoux", Family::lascoux, Family::quasi_lascoux,
       &lascoux_to_quasilascoux_expansion},
  };
  for (auto const& f : formulas) {
    add(f.name, [f](WeakComposition const& a) {
      auto const e = f.expansion(a);
      return e.is_positive() && expansion_identity(f.lhs, a, e, f.basis);
    });
    add(f.name + "@beta0", [f](WeakComposition const& a) {
      return expansion_identity_beta0(f.lhs, a, f.expansion(a), f.basis);
    });
    add(f.name + "@engine", [f](WeakComposition const& a) {
      return engine_matches(family_poly(f.lhs, a), f.basis, f.expansion(a));
    });
  }
  add("quasilascoux-fillings-vs-atoms", [](WeakComposition const& a) {
    return family_poly(Family::quasi_lascoux, a) == quasi_lascoux_via_atoms(a);
  });
  add("quasilascoux-fillings-vs-atoms@beta0", [](WeakComposition const& a) {
    return family_poly(Family::quasikey, a) ==
           quasi_lascoux_via_atoms(a).specialize_beta(0);
  });
  add("quasilascoux-leading-term", &leading_term_quasi_lascoux);
  add("destandardization-meson", [](WeakComposition const& a) {
    return destandardization_fibers(a, HighestMode::meson);
  });
  add("destandardization-quasi", [](WeakComposition const& a) {
    return destandardization_fibers(a, HighestMode::quasi_yamanouchi);
  });
  add("psi-bijections", &psi_bijection);
  add("lswap-vs-bruhat", &lemma_bruhat);
  add("lswap-vs-kohnert-skylines", &lemma_kohnert_skylines);
  add("kohnert-diagrams-vs-key-fillings", &kohnert_diagrams_are_key_fillings);
  add("kohnert-moves-preserve-columns", &kohnert_moves_preserve_columns);
  add("nearest-skyline-reachable", &lemma_nearest_reachable);
  add("psi-shape-is-nearest-skyline", &lemma_psi_shape);
  add("threading-preserved", &lemma_threading);
  add("stable-limit", [](WeakComposition const& a) {
    for (std::size_t m = 1; m <= 3; ++m) {
      if (!stable_limit_check(a, m)) return false;
    }
    return true;
  });
  add("quasi-grothendieck-quasisymmetric", [](WeakComposition const& a) {
    return is_quasisymmetric(family_poly(Family::quasi_grothendieck, a));
  });
  add("symmetric-grothendieck-symmetric", [](WeakComposition const& a) {
    std::vector<int> v = a.vec();
    std::sort(v.rbegin(), v.rend());
    return is_symmetric(family_poly(Family::symmetric_grothendieck, WeakComposition(v)));
  });
  return v;
}

struct IdentityResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // offending indices, first few
};

struct VerifyReport {
  std::size_t grid_size = 0;
  std::vector<IdentityResult> results;

  bool ok() const {
    return std::all_of(results.begin(), results.end(),
                       [](IdentityResult const& r) { return r.failed == 0; });
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto const& r : results) {
      arr.push_back({{"identity", r.name},
                     {"passed", r.passed},
                     {"failed", r.failed},
                     {"failures", r.failures}});
    }
    return {{"grid_size", grid_size}, {"ok", ok()}, {"identities", std::move(arr)}};
  }
};

// Runs every check (or those whose name contains `filter`) on the grid of
// compositions with length <= max_len and weight <= max_weight.
inline VerifyReport verify_identities(int max_weight, std::size_t max_len, unsigned jobs,
                                      std::string const& filter = "") {
  auto const grid = composition_grid({max_weight, max_len, max_len});
  std::vector<IdentityCheck> checks;
  for (auto& c : identity_checks()) {
    if (filter.empty() || c.name.find(filter) != std::string::npos) {
      checks.push_back(std::move(c));
    }
  }
  // 0 = fail, 1 = pass, 2 = threw.
  std::vector<std::vector<char>> outcome(grid.size(), std::vector<char>(checks.size(), 0));
  std::vector<std::vector<std::string>> errors(grid.size(),
                                               std::vector<std::string>(checks.size()));
  parallel_for(grid.size(), jobs, [&](std::size_t i) {
    for (std::size_t k = 0; k < checks.size(); ++k) {
      try {
        outcome[i][k] = checks[k].run(grid[i]) ? 1 : 0;
      } catch (std::exception const& ex) {
        outcome[i][k] = 2;
        errors[i][k] = ex.what();
      }
    }
  });
  VerifyReport report;
  report.grid_size = grid.size();
  for (std::size_t k = 0; k < checks.size(); ++k) {
    IdentityResult r{checks[k].name, 0, 0, {}};
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (outcome[i][k] == 1) {
        ++r.passed;
      } else {
        ++r.failed;
        if (r.failures.size() < 5) {
          r.failures.push_back(grid[i].to_string() +
                               (errors[i][k].empty() ? "" : " (" + errors[i][k] + ")"));
        }
      }
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace kpoly

#endif  // KPOLY_VERIFY_HPP_
