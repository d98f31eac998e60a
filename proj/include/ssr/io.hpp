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

#ifndef SSR_IO_HPP
#define SSR_IO_HPP

// Instance and solution files. Both are JSON objects carrying "format": 1.
// Weights may be written as strings ("3", "2/7", "0.25") or JSON numbers;
// either way they are read as exact rationals. Indices are 1-based.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ssr/core.hpp"
#include "ssr/fptas.hpp"
#include "ssr/oracle.hpp"
#include "ssr/reductions.hpp"

namespace ssr {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

struct InstanceFile {
  SourceProblem problem = SourceProblem::TwoSet;
  std::vector<Rational> weights;                       // ssr, factor-r
  std::vector<std::pair<Rational, Rational>> pairs;    // two-set
  Rational r = 1;                                      // factor-r

  /// Number of base indices: pairs for two-set, weights otherwise.
  std::size_t base_count() const {
    return problem == SourceProblem::TwoSet ? pairs.size() : weights.size();
  }

  TwoSetInstance encode() const {
    switch (problem) {
      case SourceProblem::TwoSet:
        return TwoSetInstance::from_pairs(pairs);
      case SourceProblem::Ssr:
        return encode_ssr({weights});
      case SourceProblem::FactorR:
        return encode_factor_r({weights, r});
    }
    throw std::logic_error("unknown problem kind");
  }
};

namespace detail {

inline Rational json_rational(const Json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Rational(BigInt(v.get<std::uint64_t>())) : Rational(v.get<std::int64_t>());
  }
  // Floating literals go through their shortest round-trip text so that 0.1
  // means 1/10 rather than the nearest double.
  if (v.is_number_float()) return parse_rational(v.dump());
  throw InputError(where + ": expected a number or a rational string");
}

inline Rational positive_weight(const Json& v, const std::string& where) {
  Rational w = json_rational(v, where);
  if (w <= 0) throw InputError(where + ": weights must be strictly positive, got " + to_string(w));
  return w;
}

inline void check_format(const Json& j) {
  if (!j.contains("format")) return;
  const Json& f = j["format"];
  if (!f.is_number_integer() || f.get<std::int64_t>() != kFormatVersion) {
    throw InputError("unsupported format version " + f.dump() + " (expected 1)");
  }
}

}  // namespace detail

inline SourceProblem parse_problem(const std::string& name) {
  if (name == "two-set") return SourceProblem::TwoSet;
  if (name == "ssr") return SourceProblem::Ssr;
  if (name == "factor-r") return SourceProblem::FactorR;
  throw InputError("unknown problem \"" + name + "\" (expected ssr, two-set or factor-r)");
}

inline InstanceFile parse_instance(const Json& j) {
  if (!j.is_object()) throw InputError("instance must be a JSON object");
  detail::check_format(j);
  if (!j.contains("problem") || !j["problem"].is_string()) throw InputError("missing \"problem\" field");
  InstanceFile inst;
  inst.problem = parse_problem(j["problem"].get<std::string>());

  const bool has_weights = j.contains("weights");
  const bool has_pairs = j.contains("pairs");
  if (inst.problem == SourceProblem::TwoSet) {
    if (has_weights || !has_pairs) throw InputError("two-set instances need \"pairs\" and no \"weights\"");
    const Json& pairs = j["pairs"];
    if (!pairs.is_array() || pairs.empty()) throw InputError("\"pairs\" must be a nonempty array");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const std::string where = "pairs[" + std::to_string(i) + "]";
      if (!pairs[i].is_array() || pairs[i].size() != 2) throw InputError(where + ": expected [a, b]");
      inst.pairs.emplace_back(detail::positive_weight(pairs[i][0], where), detail::positive_weight(pairs[i][1], where));
    }
    if (j.contains("r")) throw InputError("\"r\" is only valid for factor-r instances");
    return inst;
  }

  if (has_pairs || !has_weights) {
    throw InputError(to_string(inst.problem) + " instances need \"weights\" and no \"pairs\"");
  }
  const Json& weights = j["weights"];
  if (!weights.is_array() || weights.empty()) throw InputError("\"weights\" must be a nonempty array");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    inst.weights.push_back(detail::positive_weight(weights[i], "weights[" + std::to_string(i) + "]"));
  }
  if (inst.problem == SourceProblem::FactorR) {
    if (!j.contains("r")) throw InputError("factor-r instances need \"r\"");
    inst.r = detail::json_rational(j["r"], "r");
    if (inst.r < 1) throw InputError("r must be at least 1, got " + to_string(inst.r));
  } else if (j.contains("r")) {
    throw InputError("\"r\" is only valid for factor-r instances");
  }
  return inst;
}

inline Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(what + " is not valid JSON: " + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline InstanceFile load_instance(const std::string& path) {
  return parse_instance(parse_json_text(read_file(path), path));
}

inline Json instance_to_json(const InstanceFile& inst) {
  Json j;
  j["format"] = kFormatVersion;
  j["problem"] = to_string(inst.problem);
  if (inst.problem == SourceProblem::TwoSet) {
    Json pairs = Json::array();
    for (const auto& [a, b] : inst.pairs) pairs.push_back(Json::array({to_string(a), to_string(b)}));
    j["pairs"] = std::move(pairs);
  } else {
    Json weights = Json::array();
    for (const Rational& w : inst.weights) weights.push_back(to_string(w));
    j["weights"] = std::move(weights);
    if (inst.problem == SourceProblem::FactorR) j["r"] = to_string(inst.r);
  }
  return j;
}

enum class Mode { Fptas, Oracle };

struct SolutionOptions {
  bool trace = false;
  std::optional<double> wall_time_ms;  // written only when set
};

namespace detail {

inline std::pair<const char*, const char*> side_labels(SourceProblem p) {
  switch (p) {
    case SourceProblem::TwoSet:
      return {"a", "b"};
    case SourceProblem::FactorR:
      return {"multiplied", "plain"};
    case SourceProblem::Ssr:
      break;
  }
  return {nullptr, nullptr};
}

inline Json index_array(const IndexSet& s) {
  Json a = Json::array();
  for (Index i : s) a.push_back(i);
  return a;
}

inline Json ratio_json(const RatioValue& v) { return v.is_infinite() ? Json(nullptr) : Json(v.str()); }

}  // namespace detail

/// Solution record shared by both modes. `approx` is set in fptas mode.
inline Json solution_to_json(const InstanceFile& inst, Mode mode, const DecodedSolution& sol,
                             const ApproxResult* approx, const SolutionOptions& options = {}) {
  const bool feasible = !sol.empty();
  Json j;
  j["format"] = kFormatVersion;
  j["mode"] = mode == Mode::Fptas ? "fptas" : "oracle";
  j["problem"] = to_string(inst.problem);
  j["status"] = !feasible ? "infeasible" : mode == Mode::Oracle ? "optimal" : "approximate";
  j["s1"] = detail::index_array(sol.s1);
  j["s2"] = detail::index_array(sol.s2);
  if (auto [l1, l2] = detail::side_labels(inst.problem); l1) {
    j["s1_side"] = l1;
    j["s2_side"] = l2;
  }
  j["sum1"] = feasible ? Json(to_string(sol.sum1)) : Json(nullptr);
  j["sum2"] = feasible ? Json(to_string(sol.sum2)) : Json(nullptr);
  j["ratio"] = detail::ratio_json(sol.objective);
  j["ratio_decimal"] = feasible ? Json(to_double(sol.objective.value())) : Json(nullptr);
  if (approx) {
    j["epsilon"] = to_string(approx->epsilon);
    j["bound"] = to_string(approx->bound);
    j["pivot_used"] = approx->pivot_used ? Json(*approx->pivot_used) : Json(nullptr);
  }
  Json stats;
  stats["pivots_evaluated"] = approx ? approx->pivots.size() : 0;
  stats["dp_cell_ops"] = approx ? approx->cell_ops : 0;
  if (options.wall_time_ms) stats["wall_time_ms"] = *options.wall_time_ms;
  j["stats"] = std::move(stats);
  if (approx && options.trace) {
    Json log = Json::array();
    for (const PivotRecord& rec : approx->pivots) {
      Json e;
      e["m"] = rec.pivot;
      e["delta"] = to_string(rec.delta);
      e["scaled_value"] = detail::ratio_json(rec.scaled_value);
      e["original_value"] = detail::ratio_json(rec.original_value);
      e["dp_cell_ops"] = rec.cell_ops;
      log.push_back(std::move(e));
    }
    j["per_pivot_log"] = std::move(log);
  }
  return j;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

/// Result of validating a solution file against its instance.
struct CheckReport {
  bool valid = false;
  std::vector<std::string> problems;
};

/// Rebuilds the encoded pair from the file's base-index sets, recomputes the
/// sums and the ratio exactly, and compares them with the stated values.
inline CheckReport check_solution(const InstanceFile& inst, const Json& sol) {
  CheckReport report;
  auto fail = [&](std::string msg) { report.problems.push_back(std::move(msg)); };
  if (!sol.is_object()) throw InputError("solution must be a JSON object");
  detail::check_format(sol);
  for (const char* key : {"status", "s1", "s2"}) {
    if (!sol.contains(key)) throw InputError(std::string("solution is missing \"") + key + "\"");
  }
  if (sol.contains("problem") && sol["problem"] != to_string(inst.problem)) {
    fail("solution is for problem " + sol["problem"].dump() + " but the instance is " + to_string(inst.problem));
  }

  auto read_set = [&](const char* key) {
    IndexSet s;
    const Json& a = sol[key];
    if (!a.is_array()) throw InputError(std::string("\"") + key + "\" must be an array");
    for (const Json& v : a) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 1 ||
          static_cast<std::size_t>(v.get<std::int64_t>()) > inst.base_count()) {
        throw InputError(std::string("\"") + key + "\" holds an index outside 1.." + std::to_string(inst.base_count()));
      }
      s.push_back(static_cast<Index>(v.get<std::int64_t>()));
    }
    return make_index_set(std::move(s));
  };
  const IndexSet s1 = read_set("s1");
  const IndexSet s2 = read_set("s2");
  const std::string status = sol["status"].is_string() ? sol["status"].get<std::string>() : "";

  if (status == "infeasible") {
    if (!s1.empty() || !s2.empty()) fail("infeasible solution lists nonempty sets");
    if (sol.contains("ratio") && !sol["ratio"].is_null()) fail("infeasible solution states a ratio");
    report.valid = report.problems.empty();
    return report;
  }
  if (status != "optimal" && status != "approximate") fail("unknown status \"" + status + "\"");

  // s1 of a factor-r solution is the multiplied set, which lives on the
  // second side of the encoding.
  const TwoSetInstance encoded = inst.encode();
  const std::size_t n = encoded.n();
  const bool flip = inst.problem == SourceProblem::FactorR;
  IndexSet e1, e2;
  for (Index i : s1) e1.push_back(flip ? i + n : i);
  for (Index i : s2) e2.push_back(flip ? i : i + n);
  const SolutionPair pair = encoded.solution(e1, e2);
  if (!check_feasible_two_set(pair, n)) {
    fail("sets are empty or share a base index");
    return report;
  }
  const RatioValue value = encoded.max_ratio(pair);
  auto expect = [&](const char* key, const std::string& actual) {
    if (!sol.contains(key)) return;
    if (!sol[key].is_string() || sol[key].get<std::string>() != actual) {
      fail(std::string("stated ") + key + " " + sol[key].dump() + " differs from recomputed \"" + actual + "\"");
    }
  };
  expect("sum1", to_string(pair.sum1));
  expect("sum2", to_string(pair.sum2));
  if (!sol.contains("ratio")) fail("feasible solution has no \"ratio\"");
  expect("ratio", value.str());
  if (sol.contains("epsilon") && sol.contains("bound")) {
    const Rational eps = detail::json_rational(sol["epsilon"], "epsilon");
    expect("bound", to_string(1 + eps));
  }
  report.valid = report.problems.empty();
  return report;
}

}  // namespace ssr

#endif  // SSR_IO_HPP
