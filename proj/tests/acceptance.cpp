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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. All instance batteries are seeded.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ssr/ssr.hpp"
#include "test_support.hpp"

namespace ssr {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(std::string why) {
    pass = false;
    if (failures.size() < 5) failures.push_back(std::move(why));
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string weights_str(const std::vector<std::int64_t>& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + "]";
}

// Battery shared by criteria 2, 3 and 7.
struct BatteryItem {
  std::vector<std::int64_t> weights;
  TwoSetInstance inst;
  OracleResult optimum;
};

const std::vector<BatteryItem>& fptas_battery() {
  static const std::vector<BatteryItem> items = [] {
    std::vector<BatteryItem> out;
    std::mt19937_64 rng(2002);
    for (int k = 0; k < 210; ++k) {
      const std::size_t n = 1 + k % 7;
      auto w = testing::random_weights(rng, 2 * n, 40);
      TwoSetInstance inst = testing::to_rational(w);
      OracleResult opt = brute_force_two_set(inst);
      out.push_back({std::move(w), std::move(inst), std::move(opt)});
    }
    return out;
  }();
  return items;
}

const Rational kEpsilons[] = {Rational(1, 10), Rational(3, 10), Rational(1, 2), Rational(9, 10)};

// 1. Exact solver equals the semi-restricted oracle for every pivot.
Outcome exact_solver_correctness() {
  Outcome out;
  const auto start = Clock::now();
  std::mt19937_64 rng(1001);
  int instances = 0, pivots = 0;
  for (int k = 0; k < 600; ++k) {
    const std::size_t n = 2 + k % 6;
    const auto w = testing::random_weights(rng, 2 * n, 30);
    const TwoSetInstance inst = testing::to_rational(w);
    ++instances;
    for (Index m = 1; m <= 2 * n; ++m) {
      ++pivots;
      const IntegerInstance ii{w, m};
      const SolverOutcome got = solve_semi_restricted(ii);
      const OracleResult want = brute_force_semi_restricted(inst, m);
      const RatioValue value = got.solution.value();
      if (value != want.optimum) {
        out.fail(weights_str(w) + " m=" + std::to_string(m) + ": solver " + value.str() + ", oracle " +
                 want.optimum.str());
      } else if (!got.solution.empty() &&
                 (!check_feasible_semi_restricted(got.solution, ii) ||
                  max_ratio(got.solution.s1, got.solution.s2, w) != value)) {
        out.fail(weights_str(w) + " m=" + std::to_string(m) + ": returned pair is not a valid witness");
      }
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 60) out.fail("took " + std::to_string(secs) + " s");
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d instances, %d pivots, %.2f s", instances, pivots, secs);
  out.detail = buf;
  return out;
}

// 2. FPTAS value within (1 + eps) of the optimum.
Outcome fptas_guarantee() {
  Outcome out;
  int runs = 0;
  Rational worst = 1;
  for (const BatteryItem& item : fptas_battery()) {
    for (const Rational& eps : kEpsilons) {
      ++runs;
      const ApproxResult res = fptas_solve(item.inst, eps);
      const std::string tag = weights_str(item.weights) + " eps=" + to_string(eps);
      if (res.feasible() != item.optimum.feasible()) {
        out.fail(tag + ": feasibility differs from the oracle");
        continue;
      }
      if (!res.feasible()) continue;
      if (!check_feasible_two_set(res.solution, item.inst.n()) || item.inst.max_ratio(res.solution) != res.value) {
        out.fail(tag + ": returned pair does not match its value");
        continue;
      }
      const Rational v = res.value.value(), opt = item.optimum.optimum.value();
      if (v < 1 || v < opt) out.fail(tag + ": value " + to_string(v) + " below the optimum");
      if (v > (1 + eps) * opt) out.fail(tag + ": value " + to_string(v) + " exceeds (1+eps) * " + to_string(opt));
      worst = std::max(worst, Rational(v / opt));
    }
  }
  out.detail = std::to_string(fptas_battery().size()) + " instances x 4 epsilons = " + std::to_string(runs) +
               " runs, worst value/optimum " + std::to_string(to_double(worst));
  return out;
}

// Pivot whose weight is the smaller of the two set maxima of a pair, taken
// from the set realizing it.
Index light_pivot(const SolutionPair& p, const std::vector<std::int64_t>& w) {
  const std::int64_t m1 = testing::max_of(p.s1, w), m2 = testing::max_of(p.s2, w);
  const IndexSet& light = m1 <= m2 ? p.s1 : p.s2;
  for (Index i : light) {
    if (w[i - 1] == std::min(m1, m2)) return i;
  }
  return 0;
}

// 3. Scaling inequalities on every pivot of every run in the battery.
Outcome scaling_lemmas() {
  Outcome out;
  long checks = 0;
  for (const BatteryItem& item : fptas_battery()) {
    const auto weights = item.inst.weights();
    for (const Rational& eps : kEpsilons) {
      const ApproxResult res = fptas_solve(item.inst, eps);
      const std::string tag = weights_str(item.weights) + " eps=" + to_string(eps);
      for (const PivotRecord& rec : res.pivots) {
        const ScaleContext ctx = scale_instance(weights, rec.pivot, eps);
        const std::string at = tag + " m=" + std::to_string(rec.pivot);
        for (Index i = 1; i <= weights.size(); ++i) {
          const Rational scaled = ctx.delta * ctx.scaled[i - 1];
          ++checks;
          if (!(weights[i - 1] - ctx.delta <= scaled && scaled <= weights[i - 1])) {
            out.fail(at + ": element bound fails at i=" + std::to_string(i));
          }
        }
        if (rec.s1.empty()) continue;
        for (const IndexSet* s : {&rec.s1, &rec.s2}) {
          const audit::SumBounds b = audit::sum_bounds(ctx, weights, *s);
          checks += 2;
          if (!b.sandwich) out.fail(at + ": sum sandwich fails");
          if (!b.granularity) out.fail(at + ": N*delta exceeds (eps/3) * set sum");
        }
        ++checks;
        if (!audit::ratio_shift_holds(ctx, weights, rec.s1, rec.s2)) out.fail(at + ": MR(A) > MR(A') + eps/3");
      }
      if (!item.optimum.feasible()) continue;
      // At the pivot realizing the optimum's min-of-maxes.
      const SolutionPair& best = *item.optimum.best;
      const Index n0 = light_pivot(best, item.weights);
      const ScaleContext ctx = scale_instance(weights, n0, eps);
      const std::span<const std::int64_t> scaled(ctx.scaled);
      const RatioValue opt_scaled = max_ratio(best.s1, best.s2, scaled);
      const PivotRecord& rec = res.pivots[n0 - 1];
      checks += 3;
      if (!audit::scaled_inflation_holds(ctx, weights, best.s1, best.s2)) {
        out.fail(tag + ": optimal pair's scaled MR exceeds (1+eps/2) times its MR");
      }
      if (rec.s1.empty()) {
        out.fail(tag + ": pivot " + std::to_string(n0) + " returned no pair");
      } else if (rec.scaled_value > opt_scaled || rec.scaled_value < RatioValue::finite(1)) {
        out.fail(tag + ": scaled optimum " + rec.scaled_value.str() + " outside [1, " + opt_scaled.str() + "]");
      }
    }
  }
  out.detail = std::to_string(checks) + " inequality checks";
  return out;
}

// 4. Case 2 table structure: window, index discipline, exact contents and
// reachability of every windowed semi-restricted solution.
Outcome dp_structure() {
  Outcome out;
  std::mt19937_64 rng(4004);
  long cells = 0, solutions = 0;
  int tables = 0;
  for (int k = 0; k < 240; ++k) {
    const std::size_t n = 1 + k % 6;
    const auto w = testing::random_weights(rng, 2 * n, 20);
    for (Index m = 1; m <= 2 * n; ++m) {
      const IntegerInstance inst{w, m};
      const Prepared prep = prepare(inst);
      const Case2Result res = solve_case2_table(inst, prep.sides, prep.candidates);
      const DpTable& t = res.table;
      ++tables;
      const std::string tag = weights_str(w) + " m=" + std::to_string(m);
      const std::int64_t q = prep.candidates.q;
      const std::int64_t am = w[m - 1];
      const std::size_t p = prep.sides.p, pp = prep.sides.p_prime;
      const Index pivot_base = m - p;
      if (t.min_d() != -2 * q || t.max_d() != q) out.fail(tag + ": window is not [-2Q, Q]");

      for (std::size_t i = 0; i <= n; ++i) {
        for (std::int64_t d = t.min_d(); d <= t.max_d(); ++d) {
          for (int l = 0; l < 2; ++l) {
            if (!t.occupied(i, d, l)) continue;
            ++cells;
            const auto [s1, s2] = t.reconstruct(i, d, l);
            if (std::find(s1.begin(), s1.end(), m) == s1.end()) out.fail(tag + ": pivot missing from S1");
            // Walk the pair in index order, checking sides and the window.
            std::int64_t diff = am, x = am;
            int flag = 0;
            for (Index j = 1; j <= i; ++j) {
              const bool in1 = j + p != m && std::find(s1.begin(), s1.end(), j + p) != s1.end();
              const bool in2 = std::find(s2.begin(), s2.end(), j + pp) != s2.end();
              if (in1 && in2) out.fail(tag + ": pair " + std::to_string(j) + " used twice");
              if (in1) {
                if (!prep.candidates.min_contains(j)) out.fail(tag + ": S1 element outside the light candidates");
                diff += w[j + p - 1];
                x += w[j + p - 1];
              }
              if (in2) {
                if (j == pivot_base) out.fail(tag + ": S2 uses the pivot's pair");
                diff -= w[j + pp - 1];
                x += w[j + pp - 1];
                if (prep.candidates.max_contains(j)) flag = 1;
              }
              if (diff < -2 * q || diff > q) out.fail(tag + ": prefix difference leaves the window");
            }
            const auto beyond = [&](Index e, std::size_t base) { return e <= base || e > base + i; };
            if (std::any_of(s1.begin(), s1.end(), [&](Index e) { return e != m && beyond(e, p); }) ||
                std::any_of(s2.begin(), s2.end(), [&](Index e) { return beyond(e, pp); })) {
              out.fail(tag + ": cell holds indices beyond its row or on the wrong side");
            }
            if (diff != d || flag != l) out.fail(tag + ": cell coordinates disagree with its sets");
            if (i == n && t.final_sum(d, l) != x) out.fail(tag + ": stored total differs from the sets' total");
          }
        }
      }

      // Exact contents and reachability against the independent enumeration.
      const testing::ReferenceRow ref = testing::reference_final_row(w, m);
      for (const auto& e : ref.entries) {
        const bool heavy_ok = testing::max_of(e.s2, w) >= am && e.l == 1;
        if (!heavy_ok) continue;
        ++solutions;
        const auto x = t.final_sum(e.d, 1);
        if (!x || *x < e.x) out.fail(tag + ": windowed solution not covered at d=" + std::to_string(e.d));
      }
      for (std::int64_t d = t.min_d(); d <= t.max_d(); ++d) {
        for (int l = 0; l < 2; ++l) {
          const auto it = ref.best_x.find({d, l});
          const std::optional<std::int64_t> want =
              it == ref.best_x.end() ? std::nullopt : std::optional<std::int64_t>(it->second);
          if (t.final_sum(d, l) != want) out.fail(tag + ": final row differs from enumeration at d=" + std::to_string(d));
        }
      }
    }
  }
  out.detail = std::to_string(tables) + " tables, " + std::to_string(cells) + " cells reconstructed, " +
               std::to_string(solutions) + " windowed solutions located";
  return out;
}

// 5. Encoded brute force equals direct source brute force.
Outcome reduction_equivalence() {
  Outcome out;
  std::mt19937_64 rng(5005);
  const Rational factors[] = {1, Rational(3, 2), 2};
  int ssr_count = 0, factor_count = 0;
  for (int k = 0; k < 240; ++k) {
    const std::size_t n = 1 + k % 8;
    const auto w = testing::random_weights(rng, n, 30);
    const std::vector<Rational> weights(w.begin(), w.end());

    const TwoSetInstance s = encode_ssr({weights});
    const RatioValue direct = brute_force_ssr(weights).optimum;
    const OracleResult enc = brute_force_two_set(s);
    ++ssr_count;
    if (direct != enc.optimum) out.fail("ssr " + weights_str(w) + ": " + direct.str() + " vs " + enc.optimum.str());
    if (enc.best && decode(*enc.best, SourceProblem::Ssr, s).objective != direct) {
      out.fail("ssr " + weights_str(w) + ": decoded objective differs");
    }

    const Rational& r = factors[k % 3];
    const TwoSetInstance f = encode_factor_r({weights, r});
    const RatioValue fdirect = brute_force_factor_r(weights, r).optimum;
    const OracleResult fenc = brute_force_two_set(f);
    ++factor_count;
    if (fdirect != fenc.optimum) {
      out.fail("factor-r r=" + to_string(r) + " " + weights_str(w) + ": " + fdirect.str() + " vs " + fenc.optimum.str());
    }
    if (fenc.best) {
      const DecodedSolution d = decode(*fenc.best, SourceProblem::FactorR, f);
      Rational plain1 = 0, plain2 = 0;
      for (Index i : d.s1) plain1 += weights[i - 1];
      for (Index i : d.s2) plain2 += weights[i - 1];
      const Rational a = r * plain1;
      if (d.objective != fdirect || d.sum1 != a || d.sum2 != plain2 ||
          RatioValue::finite(a > plain2 ? a / plain2 : plain2 / a) != fdirect) {
        out.fail("factor-r " + weights_str(w) + ": decoded solution does not reproduce the optimum");
      }
    }
  }
  out.detail = std::to_string(ssr_count) + " SSR + " + std::to_string(factor_count) + " factor-r instances";
  return out;
}

// 6. Growth of counted DP work, and wall time at n = 40.
Outcome runtime_shape() {
  Outcome out;
  std::ostringstream detail;

  // Exact solver at a fixed pivot weight. Other weights are distinct and
  // avoid the pivot's value so each run is one anchored solve.
  {
    const std::int64_t am = 1000;
    std::vector<double> xs, ys;
    std::mt19937_64 rng(6006);
    for (std::size_t n : {8, 16, 32, 64, 128}) {
      double total = 0;
      const int trials = 3;
      for (int t = 0; t < trials; ++t) {
        std::vector<std::int64_t> pool;
        for (std::int64_t v = 1; v <= 2 * am; ++v) {
          if (v != am) pool.push_back(v);
        }
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<std::int64_t> w(pool.begin(), pool.begin() + 2 * n);
        w[0] = am;
        total += static_cast<double>(solve_semi_restricted(IntegerInstance{w, 1}).cell_ops);
      }
      xs.push_back(static_cast<double>(n));
      ys.push_back(total / trials);
    }
    const double slope = loglog_slope(xs, ys);
    char buf[96];
    std::snprintf(buf, sizeof buf, "exact slope %.2f (a_m=1000, n=8..128)", slope);
    detail << buf;
    if (slope < 1.5 || slope > 2.5) out.fail(std::string("exact solver ") + buf);
  }

  // FPTAS at fixed epsilon on weights with a wide range.
  {
    std::vector<double> xs, ys;
    const Rational eps(1, 2);
    for (std::size_t n : {4, 8, 16, 24, 32}) {
      double total = 0;
      const int trials = 2;
      for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(cell_seed(6007, n, static_cast<std::uint64_t>(t)));
        total += static_cast<double>(fptas_solve(random_two_set(rng, n, 1'000'000), eps).cell_ops);
      }
      xs.push_back(static_cast<double>(n));
      ys.push_back(total / trials);
    }
    const double slope = loglog_slope(xs, ys);
    char buf[96];
    std::snprintf(buf, sizeof buf, "fptas slope %.2f (eps=1/2, n=4..32)", slope);
    detail << ", " << buf;
    if (slope < 3 || slope > 5) out.fail(std::string("fptas ") + buf);
  }

  {
    std::mt19937_64 rng(cell_seed(6008, 40, 0));
    const TwoSetInstance inst = random_two_set(rng, 40, 1'000'000);
    const auto start = Clock::now();
    const ApproxResult res = fptas_solve(inst, Rational(1, 4));
    const double secs = seconds_since(start);
    char buf[96];
    std::snprintf(buf, sizeof buf, "n=40 eps=1/4 in %.2f s (%llu cell ops)", secs,
                  static_cast<unsigned long long>(res.cell_ops));
    detail << ", " << buf;
    if (secs >= 10) out.fail(buf);
    if (!res.feasible()) out.fail("n=40 instance reported infeasible");
  }
  out.detail = detail.str();
  return out;
}

// 7. Solution files are byte-identical across runs and thread settings.
Outcome determinism() {
  Outcome out;
  int files = 0;
  for (const BatteryItem& item : fptas_battery()) {
    InstanceFile file;
    file.problem = SourceProblem::TwoSet;
    for (Index i = 1; i <= item.inst.n(); ++i) {
      file.pairs.emplace_back(item.inst.weight(i), item.inst.weight(i + item.inst.n()));
    }
    for (const Rational& eps : kEpsilons) {
      auto render = [&](unsigned threads) {
        const TwoSetInstance enc = file.encode();
        const ApproxResult res = fptas_solve(enc, eps, solve_anchored, {.threads = threads});
        SolutionOptions opts;
        opts.trace = true;
        return dump(solution_to_json(file, Mode::Fptas, decode(res.solution, file.problem, enc), &res, opts));
      };
      const std::string a = render(1), b = render(1), c = render(4);
      ++files;
      if (a != b) out.fail(weights_str(item.weights) + ": two sequential runs differ");
      if (a != c) out.fail(weights_str(item.weights) + ": threaded run differs");
    }
  }
  out.detail = std::to_string(files) + " solution files, each rendered 3 times (threads 1, 1, 4)";
  return out;
}

}  // namespace
}  // namespace ssr

int main() {
  using ssr::Outcome;
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"exact semi-restricted solver matches oracle", ssr::exact_solver_correctness},
      {"FPTAS within (1+eps) of the optimum", ssr::fptas_guarantee},
      {"scaling inequalities", ssr::scaling_lemmas},
      {"DP table structure", ssr::dp_structure},
      {"reduction equivalence", ssr::reduction_equivalence},
      {"runtime shape", ssr::runtime_shape},
      {"deterministic solution files", ssr::determinism},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = ssr::Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %d: %s (%s) [%.1f s]\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(),
                ssr::seconds_since(start));
    for (const std::string& f : o.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
