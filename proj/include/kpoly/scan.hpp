// Bounded conjecture scans over grids of weak compositions, run on a pool of
// worker threads and reported as JSON lines.

#ifndef KPOLY_SCAN_HPP_
#define KPOLY_SCAN_HPP_

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "kpoly/expand.hpp"

namespace kpoly {

enum class ConjectureKind { euler, kaon_product, lascoux_product };

inline std::string to_string(ConjectureKind k) {
  switch (k) {
    case ConjectureKind::euler: return "euler";
    case ConjectureKind::kaon_product: return "kaon-product";
    case ConjectureKind::lascoux_product: return "lascoux-product";
  }
  return "?";
}

inline ConjectureKind parse_conjecture(std::string const& s) {
  for (auto k : {ConjectureKind::euler, ConjectureKind::kaon_product,
                 ConjectureKind::lascoux_product}) {
    if (to_string(k) == s) {
      return k;
    }
  }
  throw std::invalid_argument("unknown conjecture '" + s + "'");
}

struct GridBounds {
  int max_weight = 4;
  std::size_t max_len = 3;
  std::size_t max_zeros = 3;
};

// Weak compositions of length 1..max_len, weight <= max_weight and at most
// max_zeros zero entries; ordered by length, then weight, then lex.
inline std::vector<WeakComposition> composition_grid(GridBounds const& g) {
  std::vector<WeakComposition> out;
  for (std::size_t n = 1; n <= g.max_len; ++n) {
    for (int w = 0; w <= g.max_weight; ++w) {
      for (auto const& a : compositions_of(w, n)) {
        if (a.zero_count() <= g.max_zeros) {
          out.push_back(a);
        }
      }
    }
  }
  return out;
}

struct ScanRecord {
  ConjectureKind kind;
  WeakComposition a;
  std::optional<WeakComposition> b;
  bool ok = false;
  nlohmann::json detail;

  nlohmann::json to_json() const {
    return {{"kind", to_string(kind)},
            {"a", a.vec()},
            {"b", b ? nlohmann::json(b->vec()) : nlohmann::json(nullptr)},
            {"ok", ok},
            {"detail", detail}};
  }
};

struct ScanReport {
  std::vector<ScanRecord> records;  // grid order
  std::size_t failures = 0;
  std::size_t errors = 0;  // invariant violations inside a check

  void write_jsonl(std::ostream& out) const {
    for (auto const& r : records) {
      out << r.to_json().dump() << '\n';
    }
  }
};

// Worker count: explicit value, else KPOLY_JOBS, else hardware concurrency.
inline unsigned resolve_jobs(std::optional<unsigned> jobs) {
  if (jobs && *jobs > 0) {
    return *jobs;
  }
  if (char const* env = std::getenv("KPOLY_JOBS")) {
    try {
      int const v = std::stoi(env);
      if (v > 0) {
        return static_cast<unsigned>(v);
      }
    } catch (std::exception const&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs fn(i) for i in [0, count) on `jobs` threads.
inline void parallel_for(std::size_t count, unsigned jobs,
                         std::function<void(std::size_t)> const& fn) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      std::size_t const i = next.fetch_add(1);
      if (i >= count) {
        return;
      }
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  unsigned const n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto& t : pool) {
    t.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

namespace detail {

inline ScanRecord check_euler(WeakComposition const& a) {
  ScanRecord r{ConjectureKind::euler, a, std::nullopt, false, {}};
  auto const s = euler_sum_check(a);
  r.ok = s.ok;
  r.detail = {{"sumM", s.sum_m.to_json()},
              {"sumQ", s.sum_q.to_json()},
              {"sumM_at_minus1", integer_to_json(s.sum_m.evaluate(Integer(-1)))},
              {"sumQ_at_minus1", integer_to_json(s.sum_q.evaluate(Integer(-1)))}};
  return r;
}

inline ScanRecord check_product(ConjectureKind kind, WeakComposition const& a,
                                WeakComposition const& b) {
  ScanRecord r{kind, a, b, false, {}};
  Expansion e = kind == ConjectureKind::kaon_product
                    ? product_expansion(Family::kaon, a, Family::glide, b, Family::kaon)
                    : product_expansion(Family::lascoux, a, Family::lascoux, b,
                                        Family::lascoux_atom);
  r.ok = e.is_positive();
  r.detail = {{"terms", e.size()}};
  if (!r.ok) {
    r.detail["expansion"] = e.to_json();
  }
  return r;
}

}  // namespace detail

// Euler scans visit each grid point; product scans visit ordered pairs.
inline ScanReport conjecture_scan(ConjectureKind kind, GridBounds const& bounds,
                                  unsigned jobs) {
  auto const grid = composition_grid(bounds);
  std::vector<std::pair<std::size_t, std::size_t>> points;
  if (kind == ConjectureKind::euler) {
    for (std::size_t i = 0; i < grid.size(); ++i) points.emplace_back(i, 0);
  } else {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      for (std::size_t j = 0; j < grid.size(); ++j) points.emplace_back(i, j);
    }
  }
  ScanReport report;
  report.records.resize(points.size());
  std::atomic<std::size_t> errors{0};
  parallel_for(points.size(), jobs, [&](std::size_t k) {
    auto const& a = grid[points[k].first];
    auto const& b = grid[points[k].second];
    try {
      report.records[k] = kind == ConjectureKind::euler
                              ? detail::check_euler(a)
                              : detail::check_product(kind, a, b);
    } catch (std::exception const& ex) {
      ++errors;
      std::optional<WeakComposition> bb;
      if (kind != ConjectureKind::euler) bb = b;
      report.records[k] = ScanRecord{kind, a, bb, false, {{"error", ex.what()}}};
    }
  });
  report.errors = errors;
  for (auto const& r : report.records) {
    report.failures += r.ok ? 0 : 1;
  }
  report.failures -= report.errors;
  return report;
}

}  // namespace kpoly

#endif  // KPOLY_SCAN_HPP_
