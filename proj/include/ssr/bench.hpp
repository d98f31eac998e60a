// Copyright 2026 The SSR Toolkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SSR_BENCH_HPP
#define SSR_BENCH_HPP

// Seeded instance generator and the benchmark sweep behind `ssr bench`.
//
// Instances are two-set instances of n pairs with weights drawn uniformly
// from [1, W]. The draw uses a 64-bit Mersenne Twister with rejection
// sampling, so a seed gives the same instances on every platform.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ssr/core.hpp"
#include "ssr/fptas.hpp"
#include "ssr/oracle.hpp"

namespace ssr {

/// Uniform integer in [1, bound] from a 64-bit generator, without modulo bias.
inline std::uint64_t uniform_draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return 1 + x % bound;
}

/// Seed for the (n, trial) cell of a sweep; shared across epsilons so every
/// epsilon sees the same instance.
inline std::uint64_t cell_seed(std::uint64_t seed, std::uint64_t n, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(trial)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

inline std::vector<std::int64_t> random_integer_weights(std::mt19937_64& rng, std::size_t count,
                                                        std::int64_t max_weight) {
  if (max_weight < 1) throw InputError("maximum weight must be at least 1");
  std::vector<std::int64_t> w(count);
  for (auto& x : w) x = static_cast<std::int64_t>(uniform_draw(rng, static_cast<std::uint64_t>(max_weight)));
  return w;
}

inline TwoSetInstance random_two_set(std::mt19937_64& rng, std::size_t n, std::int64_t max_weight) {
  const auto w = random_integer_weights(rng, 2 * n, max_weight);
  return TwoSetInstance(std::vector<Rational>(w.begin(), w.end()));
}

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::vector<Rational> epsilons;
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  std::int64_t max_weight = 50;
  std::size_t oracle_max_n = 10;  // oracle runs only up to this many pairs
  bool timing = true;             // wall_time_ms is 0 when false
  unsigned threads = 1;
};

struct BenchRow {
  std::size_t n = 0;
  Rational epsilon;
  std::size_t trial = 0;
  std::optional<RatioValue> optimum;
  RatioValue value = RatioValue::infinite();
  std::uint64_t cell_ops = 0;
  double wall_time_ms = 0;

  /// value / optimum; absent without an oracle value or when infeasible.
  std::optional<Rational> ratio_to_optimum() const {
    if (!optimum || optimum->is_infinite() || value.is_infinite() || optimum->is_zero()) return std::nullopt;
    return value.value() / optimum->value();
  }
  bool within_bound() const {
    if (!optimum) return true;
    if (optimum->is_infinite()) return value.is_infinite();
    return !value.is_infinite() && value.value() <= (1 + epsilon) * optimum->value();
  }
};

inline std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (config.sizes.empty() || config.epsilons.empty()) throw InputError("bench needs at least one size and epsilon");
  for (const Rational& e : config.epsilons) check_epsilon(e);
  std::vector<BenchRow> rows;
  for (std::size_t n : config.sizes) {
    if (n < 1) throw InputError("sizes must be positive");
    for (std::size_t t = 0; t < config.trials; ++t) {
      std::mt19937_64 rng(cell_seed(config.seed, n, t));
      const TwoSetInstance inst = random_two_set(rng, n, config.max_weight);
      std::optional<RatioValue> optimum;
      if (n <= config.oracle_max_n) optimum = brute_force_two_set(inst, {.max_pairs = config.oracle_max_n}).optimum;
      for (const Rational& eps : config.epsilons) {
        BenchRow row;
        row.n = n;
        row.epsilon = eps;
        row.trial = t;
        row.optimum = optimum;
        const auto start = std::chrono::steady_clock::now();
        const ApproxResult res = fptas_solve(inst, eps, solve_anchored, {.threads = config.threads});
        const auto stop = std::chrono::steady_clock::now();
        row.value = res.value;
        row.cell_ops = res.cell_ops;
        if (config.timing) row.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

inline void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows) {
  out << "n,epsilon,trial,optimum,fptas_value,ratio_to_optimum,within_bound,dp_cell_ops,wall_time_ms\n";
  for (const BenchRow& r : rows) {
    out << r.n << ',' << to_string(r.epsilon) << ',' << r.trial << ',' << (r.optimum ? r.optimum->str() : "")
        << ',' << r.value.str() << ',';
    if (auto q = r.ratio_to_optimum()) out << to_double(*q);
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", r.wall_time_ms);
    out << ',' << (r.within_bound() ? "true" : "false") << ',' << r.cell_ops << ',' << ms << '\n';
  }
}

/// Least-squares slope of log(y) against log(x).
inline double loglog_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw InputError("slope fit needs at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] <= 0 || ys[i] <= 0) throw InputError("slope fit needs positive values");
    const double lx = std::log(xs[i]), ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = k * sxx - sx * sx;
  if (denom == 0) throw InputError("slope fit needs distinct x values");
  return (k * sxy - sx * sy) / denom;
}

}  // namespace ssr

#endif  // SSR_BENCH_HPP
