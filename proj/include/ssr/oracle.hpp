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

#ifndef SSR_ORACLE_HPP
#define SSR_ORACLE_HPP

// Exhaustive solvers. Each pair index is assigned to one of {unused, first
// set, second set}, so the mod-n conflict rule holds by construction and the
// search visits 3^n assignments.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "ssr/core.hpp"

namespace ssr {

struct OracleResult {
  std::optional<SolutionPair> best;
  RatioValue optimum = RatioValue::infinite();

  bool feasible() const { return best.has_value(); }
};

struct OracleOptions {
  std::size_t max_pairs = 14;
};

namespace detail {

template <class Int>
auto wide_mul(const Int& x, const Int& y) {
  if constexpr (std::is_same_v<Int, std::int64_t>) {
    return static_cast<__int128>(x) * static_cast<__int128>(y);
  } else {
    return BigInt(x * y);
  }
}

// Ties on the ratio go to the smaller |s1|+|s2|, then to the lexicographically
// smaller (s1, s2).
inline bool tie_break_less(const IndexSet& s1, const IndexSet& s2, const IndexSet& t1, const IndexSet& t2) {
  if (s1.size() + s2.size() != t1.size() + t2.size()) return s1.size() + s2.size() < t1.size() + t2.size();
  if (s1 != t1) return std::lexicographical_compare(s1.begin(), s1.end(), t1.begin(), t1.end());
  return std::lexicographical_compare(s2.begin(), s2.end(), t2.begin(), t2.end());
}

template <class Int>
class PairEnumerator {
 public:
  PairEnumerator(std::vector<Int> first, std::vector<Int> second, std::optional<Int> pivot_value)
      : first_(std::move(first)), second_(std::move(second)), pivot_value_(std::move(pivot_value)),
        choice_(first_.size(), 0) {}

  /// Runs the search; returns (s1 over 1..n, s2 over n+1..2n) or nothing.
  std::optional<std::pair<IndexSet, IndexSet>> run() {
    visit(0, Int(0), Int(0), std::nullopt, std::nullopt);
    if (!found_) return std::nullopt;
    return std::make_pair(best1_, best2_);
  }

 private:
  void visit(std::size_t i, const Int& sum1, const Int& sum2, const std::optional<Int>& max1,
             const std::optional<Int>& max2) {
    const std::size_t n = first_.size();
    if (i == n) {
      leaf(sum1, sum2, max1, max2);
      return;
    }
    choice_[i] = 0;
    visit(i + 1, sum1, sum2, max1, max2);
    choice_[i] = 1;
    visit(i + 1, sum1 + first_[i], sum2, max1 ? std::max(*max1, first_[i]) : first_[i], max2);
    choice_[i] = 2;
    visit(i + 1, sum1, sum2 + second_[i], max1, max2 ? std::max(*max2, second_[i]) : second_[i]);
    choice_[i] = 0;
  }

  void leaf(const Int& sum1, const Int& sum2, const std::optional<Int>& max1, const std::optional<Int>& max2) {
    if (!max1 || !max2) return;
    if (pivot_value_ && std::min(*max1, *max2) != *pivot_value_) return;
    if (sum1 == 0 || sum2 == 0) return;
    const Int& hi = sum1 > sum2 ? sum1 : sum2;
    const Int& lo = sum1 > sum2 ? sum2 : sum1;
    if (found_) {
      const auto lhs = wide_mul(hi, best_lo_);
      const auto rhs = wide_mul(best_hi_, lo);
      if (lhs > rhs) return;
      if (lhs == rhs) {
        auto [s1, s2] = current_sets();
        if (!tie_break_less(s1, s2, best1_, best2_)) return;
        store(hi, lo, std::move(s1), std::move(s2));
        return;
      }
    }
    auto [s1, s2] = current_sets();
    store(hi, lo, std::move(s1), std::move(s2));
  }

  std::pair<IndexSet, IndexSet> current_sets() const {
    const std::size_t n = first_.size();
    IndexSet s1, s2;
    for (std::size_t i = 0; i < n; ++i) {
      if (choice_[i] == 1) s1.push_back(i + 1);
      if (choice_[i] == 2) s2.push_back(n + i + 1);
    }
    return {std::move(s1), std::move(s2)};
  }

  void store(const Int& hi, const Int& lo, IndexSet s1, IndexSet s2) {
    found_ = true;
    best_hi_ = hi;
    best_lo_ = lo;
    best1_ = std::move(s1);
    best2_ = std::move(s2);
  }

  std::vector<Int> first_;
  std::vector<Int> second_;
  std::optional<Int> pivot_value_;
  std::vector<std::uint8_t> choice_;
  bool found_ = false;
  Int best_hi_ = 0;
  Int best_lo_ = 0;
  IndexSet best1_;
  IndexSet best2_;
};

// Rescales rational weights to integers by the lcm of their denominators,
// which leaves every ratio unchanged, and runs the search in int64 when the
// total fits, in big integers otherwise.
inline std::optional<std::pair<IndexSet, IndexSet>> enumerate_pairs(std::span<const Rational> weights,
                                                                    std::optional<Index> pivot) {
  const std::size_t n = weights.size() / 2;
  BigInt scale = 1;
  for (const Rational& w : weights) {
    scale = boost::multiprecision::lcm(scale, BigInt(boost::multiprecision::denominator(w)));
  }
  std::vector<BigInt> ints(weights.size());
  BigInt total = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    ints[i] = boost::multiprecision::numerator(weights[i]) * (scale / boost::multiprecision::denominator(weights[i]));
    total += ints[i];
  }
  if (total < (BigInt(1) << 62)) {
    std::vector<std::int64_t> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = ints[i].convert_to<std::int64_t>();
      b[i] = ints[n + i].convert_to<std::int64_t>();
    }
    std::optional<std::int64_t> pv;
    if (pivot) pv = ints[*pivot - 1].convert_to<std::int64_t>();
    return PairEnumerator<std::int64_t>(std::move(a), std::move(b), pv).run();
  }
  std::vector<BigInt> a(ints.begin(), ints.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<BigInt> b(ints.begin() + static_cast<std::ptrdiff_t>(n), ints.end());
  std::optional<BigInt> pv;
  if (pivot) pv = ints[*pivot - 1];
  return PairEnumerator<BigInt>(std::move(a), std::move(b), pv).run();
}

inline void check_oracle_size(std::size_t n, const OracleOptions& options) {
  if (n > options.max_pairs) {
    throw SizeError("instance has " + std::to_string(n) + " pairs; the exhaustive oracle is capped at " +
                    std::to_string(options.max_pairs));
  }
}

}  // namespace detail

/// Optimal 2-Set SSR solution by exhaustive search; +inf when infeasible.
inline OracleResult brute_force_two_set(const TwoSetInstance& inst, const OracleOptions& options = {}) {
  detail::check_oracle_size(inst.n(), options);
  OracleResult result;
  if (auto found = detail::enumerate_pairs(inst.weights(), std::nullopt)) {
    result.best = inst.solution(std::move(found->first), std::move(found->second));
    result.optimum = inst.max_ratio(*result.best);
  }
  return result;
}

/// Optimal semi-restricted solution for pivot m (value-based min-of-maxes rule).
inline OracleResult brute_force_semi_restricted(const TwoSetInstance& inst, Index m,
                                                const OracleOptions& options = {}) {
  detail::check_oracle_size(inst.n(), options);
  if (m < 1 || m > inst.size()) {
    throw InputError("pivot index " + std::to_string(m) + " out of range 1.." + std::to_string(inst.size()));
  }
  OracleResult result;
  if (auto found = detail::enumerate_pairs(inst.weights(), m)) {
    result.best = inst.solution(std::move(found->first), std::move(found->second));
    result.optimum = inst.max_ratio(*result.best);
  }
  return result;
}

namespace detail {

// Direct enumeration of a source problem over base indices, objective
// max(f*s1, s2) / min(f*s1, s2). Independent of the two-set machinery.
inline OracleResult brute_force_scaled_pair(std::span<const Rational> weights, const Rational& factor,
                                            const OracleOptions& options) {
  const std::size_t n = weights.size();
  if (n == 0) throw InputError("empty instance");
  check_oracle_size(n, options);
  for (const Rational& w : weights) {
    if (w <= 0) throw InputError("weights must be strictly positive");
  }
  std::vector<int> digit(n, 0);
  OracleResult result;
  IndexSet best1, best2;
  for (;;) {
    IndexSet s1, s2;
    Rational sum1 = 0, sum2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (digit[i] == 1) {
        s1.push_back(i + 1);
        sum1 += weights[i];
      } else if (digit[i] == 2) {
        s2.push_back(i + 1);
        sum2 += weights[i];
      }
    }
    if (!s1.empty() && !s2.empty()) {
      const Rational left = factor * sum1;
      const RatioValue value = RatioValue::finite(left > sum2 ? left / sum2 : sum2 / left);
      if (value < result.optimum ||
          (value == result.optimum && tie_break_less(s1, s2, best1, best2))) {
        result.optimum = value;
        best1 = s1;
        best2 = s2;
        result.best = SolutionPair{s1, s2, sum1, sum2};
      }
    }
    std::size_t pos = 0;
    while (pos < n && digit[pos] == 2) digit[pos++] = 0;
    if (pos == n) break;
    ++digit[pos];
  }
  return result;
}

}  // namespace detail

/// Plain SSR by direct enumeration: two disjoint nonempty subsets of the weights.
inline OracleResult brute_force_ssr(std::span<const Rational> weights, const OracleOptions& options = {}) {
  return detail::brute_force_scaled_pair(weights, Rational(1), options);
}

/// Factor-r SSR by direct enumeration; s1 of the result is the set multiplied by r.
inline OracleResult brute_force_factor_r(std::span<const Rational> weights, const Rational& r,
                                         const OracleOptions& options = {}) {
  if (r < 1) throw InputError("factor r must be at least 1");
  return detail::brute_force_scaled_pair(weights, r, options);
}

}  // namespace ssr

#endif  // SSR_ORACLE_HPP
