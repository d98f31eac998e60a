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

#ifndef SSR_FPTAS_HPP
#define SSR_FPTAS_HPP

// Approximation scheme driven by an exact semi-restricted solver.
//
// For every pivot m the weights are rescaled with step
//     delta = eps * a_m / (3 N)          (N = number of weights)
// and floored, a'_i = floor(a_i / delta), which puts a'_m = floor(3N / eps)
// and keeps the exact solver's table polynomial in N and 1/eps. The solver's
// pair is then re-evaluated on the original weights, and the best pair over
// all pivots is within a factor (1 + eps) of the optimum.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "ssr/core.hpp"
#include "ssr/reductions.hpp"
#include "ssr/semi_restricted.hpp"

namespace ssr {

inline void check_epsilon(const Rational& epsilon) {
  if (epsilon <= 0 || epsilon >= 1) {
    throw InputError("epsilon must lie strictly between 0 and 1, got " + to_string(epsilon));
  }
}

struct ScaleContext {
  Index pivot = 1;
  Rational epsilon;
  Rational delta;
  std::vector<std::int64_t> scaled;

  std::size_t count() const { return scaled.size(); }
};

inline ScaleContext scale_instance(std::span<const Rational> weights, Index m, const Rational& epsilon) {
  check_epsilon(epsilon);
  if (weights.empty()) throw InputError("empty instance");
  if (m < 1 || m > weights.size()) {
    throw InputError("pivot index " + std::to_string(m) + " out of range 1.." + std::to_string(weights.size()));
  }
  for (const Rational& w : weights) {
    if (w <= 0) throw InputError("weights must be strictly positive, got " + to_string(w));
  }
  ScaleContext ctx;
  ctx.pivot = m;
  ctx.epsilon = epsilon;
  ctx.delta = epsilon * weights[m - 1] / (3 * static_cast<long long>(weights.size()));
  ctx.scaled.reserve(weights.size());
  for (const Rational& w : weights) ctx.scaled.push_back(to_int64(floor(w / ctx.delta)));
  return ctx;
}

/// Exact solver for the semi-restricted problem on integer weights.
using ExactSolver = std::function<SolverOutcome(const IntegerInstance&)>;

/// What one pivot produced.
struct PivotRecord {
  Index pivot = 1;
  Rational delta;
  IndexSet s1;
  IndexSet s2;
  RatioValue scaled_value = RatioValue::infinite();    // on the floored weights
  RatioValue original_value = RatioValue::infinite();  // same sets, original weights
  std::uint64_t cell_ops = 0;

  friend bool operator==(const PivotRecord&, const PivotRecord&) = default;
};

struct ApproxResult {
  SolutionPair solution;
  RatioValue value = RatioValue::infinite();
  Rational epsilon;
  Rational bound;  // 1 + epsilon
  std::optional<Index> pivot_used;
  std::vector<PivotRecord> pivots;
  std::uint64_t cell_ops = 0;

  bool feasible() const { return pivot_used.has_value(); }
};

struct FptasOptions {
  /// Worker threads for pivot evaluation; the result does not depend on it.
  unsigned threads = 1;
};

inline PivotRecord evaluate_pivot(const TwoSetInstance& inst, Index m, const Rational& epsilon,
                                  const ExactSolver& exact) {
  const ScaleContext ctx = scale_instance(inst.weights(), m, epsilon);
  SolverOutcome outcome = exact(IntegerInstance{ctx.scaled, m});
  PivotRecord rec;
  rec.pivot = m;
  rec.delta = ctx.delta;
  rec.cell_ops = outcome.cell_ops;
  rec.scaled_value = outcome.solution.value();
  if (!outcome.solution.empty()) {
    rec.original_value = inst.max_ratio(outcome.solution);
    rec.s1 = std::move(outcome.solution.s1);
    rec.s2 = std::move(outcome.solution.s2);
  }
  return rec;
}

/// Runs every pivot in ascending order and keeps the first strictly best pair
/// on the original weights. Infeasible iff no pivot yields a pair.
inline ApproxResult fptas_solve(const TwoSetInstance& inst, const Rational& epsilon,
                                const ExactSolver& exact = solve_anchored, const FptasOptions& options = {}) {
  check_epsilon(epsilon);
  if (inst.size() == 0) throw InputError("empty instance");
  const std::size_t count = inst.size();

  ApproxResult result;
  result.epsilon = epsilon;
  result.bound = 1 + epsilon;
  result.pivots.resize(count);

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(count)));
  if (threads == 1) {
    for (Index m = 1; m <= count; ++m) result.pivots[m - 1] = evaluate_pivot(inst, m, epsilon, exact);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          try {
            for (std::size_t k = next++; k < count; k = next++) {
              result.pivots[k] = evaluate_pivot(inst, k + 1, epsilon, exact);
            }
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  for (const PivotRecord& rec : result.pivots) {
    result.cell_ops += rec.cell_ops;
    if (rec.s1.empty()) continue;
    if (!result.pivot_used || rec.original_value < result.value) {
      result.pivot_used = rec.pivot;
      result.value = rec.original_value;
      result.solution = inst.solution(rec.s1, rec.s2);
    }
  }
  return result;
}

struct DecodedApprox {
  DecodedSolution solution;
  ApproxResult raw;
};

/// Plain SSR through the 2-Set encoding.
inline DecodedApprox solve_ssr(const std::vector<Rational>& weights, const Rational& epsilon,
                               const FptasOptions& options = {}) {
  const TwoSetInstance encoded = encode_ssr(SsrInstance{weights});
  DecodedApprox out;
  out.raw = fptas_solve(encoded, epsilon, solve_anchored, options);
  out.solution = decode(out.raw.solution, SourceProblem::Ssr, encoded);
  return out;
}

/// Inequalities relating a pivot's scaled weights to the original ones. Each
/// function evaluates one inequality exactly; tests and the acceptance suite
/// assert them on solver output.
namespace audit {

struct SumBounds {
  bool sandwich = false;     // sum(a) - N*delta <= delta * sum(a') <= sum(a)
  bool granularity = false;  // N*delta <= (eps/3) * sum(a)
};

inline SumBounds sum_bounds(const ScaleContext& ctx, std::span<const Rational> weights, const IndexSet& set) {
  Rational original = 0, scaled = 0;
  for (Index i : set) {
    original += weights[i - 1];
    scaled += ctx.scaled[i - 1];
  }
  const Rational slack = static_cast<long long>(ctx.count()) * ctx.delta;
  SumBounds b;
  b.sandwich = original - slack <= ctx.delta * scaled && ctx.delta * scaled <= original;
  b.granularity = slack <= ctx.epsilon / 3 * original;
  return b;
}

/// MR on original weights exceeds MR on scaled weights by at most eps/3.
inline bool ratio_shift_holds(const ScaleContext& ctx, std::span<const Rational> weights, const IndexSet& s1,
                              const IndexSet& s2) {
  const RatioValue original = max_ratio(s1, s2, weights);
  const RatioValue scaled = max_ratio(s1, s2, std::span<const std::int64_t>(ctx.scaled));
  if (scaled.is_infinite()) return true;
  if (original.is_infinite()) return false;
  return original.value() <= scaled.value() + ctx.epsilon / 3;
}

/// MR on scaled weights is at most (1 + eps/2) times MR on original weights.
inline bool scaled_inflation_holds(const ScaleContext& ctx, std::span<const Rational> weights, const IndexSet& s1,
                                   const IndexSet& s2) {
  const RatioValue original = max_ratio(s1, s2, weights);
  const RatioValue scaled = max_ratio(s1, s2, std::span<const std::int64_t>(ctx.scaled));
  if (original.is_infinite()) return true;
  if (scaled.is_infinite()) return false;
  return scaled.value() <= (1 + ctx.epsilon / 2) * original.value();
}

}  // namespace audit

}  // namespace ssr

#endif  // SSR_FPTAS_HPP
