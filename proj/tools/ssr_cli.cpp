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

// ssr: command-line front end.
//
//   ssr solve  INSTANCE [--epsilon E] [--output PATH] [--trace] [--timing] [--threads K]
//   ssr oracle INSTANCE [--m INDEX] [--max-n N] [--output PATH]
//   ssr bench  --sizes 4,6,8 [--epsilons 0.5,0.25] [--trials T] [--seed S] [--max-weight W] [--csv PATH]
//   ssr check  INSTANCE SOLUTION

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ssr/cli.hpp"

int main(int argc, char** argv) {
  using namespace ssr::cli;

  CLI::App app{"Subset-sum ratio solver: FPTAS, exact oracle, benchmark and checker"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Approximate an instance within a factor 1 + epsilon");
  solve_cmd->add_option("instance", solve.input, "Instance JSON file")->required();
  solve_cmd->add_option("-e,--epsilon", solve.epsilon, "Accuracy in (0, 1); decimal or p/q")->capture_default_str();
  solve_cmd->add_option("-o,--output", solve.output, "Write the solution here instead of stdout");
  solve_cmd->add_flag("--trace", solve.trace, "Include the per-pivot log");
  solve_cmd->add_flag("--timing", solve.timing, "Record wall time in stats (output is then not reproducible)");
  solve_cmd->add_option("-j,--threads", solve.threads, "Threads for pivot evaluation")->check(CLI::PositiveNumber);

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum by exhaustive search (small instances)");
  oracle_cmd->add_option("instance", oracle.input, "Instance JSON file")->required();
  oracle_cmd->add_option("--m", oracle.m, "Restrict to solutions whose lighter maximum equals weight m (1..2n)");
  oracle_cmd->add_option("--max-n", oracle.max_n, "Refuse instances with more pairs")->capture_default_str();
  oracle_cmd->add_option("-o,--output", oracle.output, "Write the solution here instead of stdout");

  BenchArgs bench;
  std::vector<std::size_t> sizes;
  std::vector<std::string> epsilons{"0.5"};
  bool no_timing = false;
  auto* bench_cmd = app.add_subcommand("bench", "Run the FPTAS on seeded random two-set instances, emit CSV");
  bench_cmd->add_option("--sizes", sizes, "Numbers of pairs")->delimiter(',')->required();
  bench_cmd->add_option("--epsilons", epsilons, "Accuracies")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--trials", bench.config.trials, "Instances per size")->capture_default_str();
  bench_cmd->add_option("--seed", bench.config.seed, "Generator seed")->capture_default_str();
  bench_cmd->add_option("--max-weight", bench.config.max_weight, "Weights are uniform in [1, W]")
      ->capture_default_str();
  bench_cmd->add_option("--oracle-max-n", bench.config.oracle_max_n, "Compare with the oracle up to this n")
      ->capture_default_str();
  bench_cmd->add_option("-j,--threads", bench.config.threads, "Threads for pivot evaluation")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--no-timing", no_timing, "Write 0 for wall_time_ms so output is reproducible");
  bench_cmd->add_option("--csv", bench.csv, "Write CSV here instead of stdout");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Validate a solution file against its instance");
  check_cmd->add_option("instance", check.instance, "Instance JSON file")->required();
  check_cmd->add_option("solution", check.solution, "Solution JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  if (*solve_cmd) return run_solve(solve, std::cout, std::cerr);
  if (*oracle_cmd) return run_oracle(oracle, std::cout, std::cerr);
  if (*check_cmd) return run_check(check, std::cout, std::cerr);

  bench.config.sizes = sizes;
  bench.config.timing = !no_timing;
  try {
    for (const std::string& e : epsilons) bench.config.epsilons.push_back(ssr::parse_rational(e));
  } catch (const ssr::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return run_bench_command(bench, std::cout, std::cerr);
}
