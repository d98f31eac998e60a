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

#ifndef SSR_REDUCTIONS_HPP
#define SSR_REDUCTIONS_HPP

// Plain SSR and Factor-r SSR as 2-Set SSR instances. SSR over a_1..a_n becomes
// the pairs (a_i, a_i); Factor-r becomes (a_i, r * a_i). The mod-n conflict
// rule of 2-Set SSR is exactly the disjointness of the source problem, so
// feasible solutions and objective values carry over one-to-one.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssr/core.hpp"

namespace ssr {

enum class SourceProblem { TwoSet, Ssr, FactorR };

inline std::string to_string(SourceProblem p) {
  switch (p) {
    case SourceProblem::TwoSet: return "two-set";
    case SourceProblem::Ssr: return "ssr";
    case SourceProblem::FactorR: return "factor-r";
  }
  return {};
}

struct SsrInstance {
  std::vector<Rational> weights;
};

struct FactorRInstance {
  std::vector<Rational> weights;
  Rational r = 1;
};

namespace detail {

inline void check_source_weights(const std::vector<Rational>& weights) {
  if (weights.empty()) throw InputError("instance has no weights");
  for (const Rational& w : weights) {
    if (w <= 0) throw InputError("weights must be strictly positive, got " + to_string(w));
  }
}

}  // namespace detail

inline TwoSetInstance encode_ssr(const SsrInstance& inst) {
  detail::check_source_weights(inst.weights);
  std::vector<Rational> flat = inst.weights;
  flat.insert(flat.end(), inst.weights.begin(), inst.weights.end());
  return TwoSetInstance(std::move(flat));
}

inline TwoSetInstance encode_factor_r(const FactorRInstance& inst) {
  detail::check_source_weights(inst.weights);
  if (inst.r < 1) throw InputError("factor r must be at least 1, got " + to_string(inst.r));
  std::vector<Rational> flat = inst.weights;
  for (const Rational& w : inst.weights) flat.push_back(inst.r * w);
  return TwoSetInstance(std::move(flat));
}

/// A solution in base indices 1..n of the source problem.
///
/// For Factor-r, s1 is always the set whose sum is multiplied by r (it comes
/// from the second side of the encoding) and sum1 already includes the factor.
/// For SSR and 2-Set, s1 draws first-side weights and s2 second-side weights.
struct DecodedSolution {
  IndexSet s1;
  IndexSet s2;
  Rational sum1 = 0;
  Rational sum2 = 0;
  RatioValue objective = RatioValue::infinite();
  bool s1_multiplied = false;

  bool empty() const { return s1.empty() && s2.empty(); }
};

inline DecodedSolution decode(const SolutionPair& sol, SourceProblem source, const TwoSetInstance& encoded) {
  const std::size_t n = encoded.n();
  DecodedSolution out;
  if (!check_feasible_two_set(sol, n)) return out;

  const bool s1_first = sol.s1.front() <= n;
  const IndexSet& first = s1_first ? sol.s1 : sol.s2;
  const IndexSet& second = s1_first ? sol.s2 : sol.s1;

  IndexSet first_base, second_base;
  Rational first_sum = 0, second_sum = 0;
  for (Index i : first) {
    first_base.push_back(i);
    first_sum += encoded.weight(i);
  }
  for (Index i : second) {
    second_base.push_back(i - n);
    second_sum += encoded.weight(i);
  }
  for (Index i : first_base) {
    if (std::binary_search(second_base.begin(), second_base.end(), i)) {
      throw std::logic_error("decoded sets overlap; the encoded solution violates the pair rule");
    }
  }

  if (source == SourceProblem::FactorR) {
    out.s1 = std::move(second_base);
    out.s2 = std::move(first_base);
    out.sum1 = second_sum;
    out.sum2 = first_sum;
    out.s1_multiplied = true;
  } else {
    out.s1 = std::move(first_base);
    out.s2 = std::move(second_base);
    out.sum1 = first_sum;
    out.sum2 = second_sum;
  }
  out.objective = RatioValue::finite(out.sum1 > out.sum2 ? out.sum1 / out.sum2 : out.sum2 / out.sum1);
  return out;
}

}  // namespace ssr

#endif  // SSR_REDUCTIONS_HPP
