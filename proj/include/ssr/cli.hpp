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

#ifndef SSR_CLI_HPP
#define SSR_CLI_HPP

// Subcommand bodies for the `ssr` tool, kept out of main() so tests can call
// them directly. Each returns the process exit code:
//   0  success (solution found, check passed)
//   1  input or usage error, size cap exceeded, failed check
//   2  instance is infeasible

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <ostream>
#include <string>

#include "ssr/bench.hpp"
#include "ssr/fptas.hpp"
#include "ssr/io.hpp"
#include "ssr/oracle.hpp"
#include "ssr/reductions.hpp"

namespace ssr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInfeasible = 2;

struct SolveArgs {
  std::string input;
  std::string epsilon = "0.1";
  std::optional<std::string> output;
  bool trace = false;
  bool timing = false;
  unsigned threads = 1;
};

struct OracleArgs {
  std::string input;
  std::optional<Index> m;  // flat index into the encoded instance
  std::size_t max_n = 14;
  std::optional<std::string> output;
};

struct BenchArgs {
  BenchConfig config;
  std::optional<std::string> csv;
};

struct CheckArgs {
  std::string instance;
  std::string solution;
};

namespace detail {

inline void emit(const std::string& text, const std::optional<std::string>& path, std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream f(*path, std::ios::binary);
  if (!f || !(f << text) || !f.flush()) throw InputError("cannot write " + *path);
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace detail

inline int run_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const Rational eps = parse_rational(args.epsilon);
    check_epsilon(eps);
    const InstanceFile inst = load_instance(args.input);
    const TwoSetInstance encoded = inst.encode();

    const auto start = std::chrono::steady_clock::now();
    const ApproxResult res = fptas_solve(encoded, eps, solve_anchored, {.threads = args.threads});
    const auto stop = std::chrono::steady_clock::now();

    SolutionOptions opts;
    opts.trace = args.trace;
    if (args.timing) opts.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    const DecodedSolution sol = decode(res.solution, inst.problem, encoded);
    detail::emit(dump(solution_to_json(inst, Mode::Fptas, sol, &res, opts)), args.output, out);
    return sol.empty() ? kExitInfeasible : kExitOk;
  });
}

inline int run_oracle(const OracleArgs& args, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const InstanceFile inst = load_instance(args.input);
    const TwoSetInstance encoded = inst.encode();
    const OracleOptions opts{.max_pairs = args.max_n};
    const OracleResult res =
        args.m ? brute_force_semi_restricted(encoded, *args.m, opts) : brute_force_two_set(encoded, opts);
    const DecodedSolution sol =
        res.best ? decode(*res.best, inst.problem, encoded) : DecodedSolution{};
    detail::emit(dump(solution_to_json(inst, Mode::Oracle, sol, nullptr)), args.output, out);
    return sol.empty() ? kExitInfeasible : kExitOk;
  });
}

inline int run_bench_command(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const std::vector<BenchRow> rows = run_bench(args.config);
    std::ostringstream csv;
    write_bench_csv(csv, rows);
    detail::emit(csv.str(), args.csv, out);
    for (const BenchRow& r : rows) {
      if (!r.within_bound()) {
        err << "error: n=" << r.n << " trial=" << r.trial << " epsilon=" << to_string(r.epsilon)
            << " exceeds the (1+epsilon) bound\n";
        return kExitError;
      }
    }
    return kExitOk;
  });
}

inline int run_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const InstanceFile inst = load_instance(args.instance);
    const CheckReport report = check_solution(inst, parse_json_text(read_file(args.solution), args.solution));
    if (report.valid) {
      out << "ok\n";
      return kExitOk;
    }
    for (const std::string& p : report.problems) err << "mismatch: " << p << '\n';
    return kExitError;
  });
}

}  // namespace ssr::cli

#endif  // SSR_CLI_HPP
