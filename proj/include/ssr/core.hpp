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

#ifndef SSR_CORE_HPP
#define SSR_CORE_HPP

// Data model shared by every solver: instances, solution pairs, and the two
// ratio objectives. Indices are 1-based everywhere in the public surface.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ssr/rational.hpp"

namespace ssr {

/// 1-based element index.
using Index = std::size_t;

/// Sorted, duplicate-free list of 1-based indices.
using IndexSet = std::vector<Index>;

inline IndexSet make_index_set(std::vector<Index> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return indices;
}

/// Extended nonnegative rational: 0, a positive rational, or +infinity.
class RatioValue {
 public:
  enum class Kind { Zero, Finite, Infinite };

  RatioValue() = default;

  static RatioValue zero() { return RatioValue(); }
  static RatioValue infinite() {
    RatioValue r;
    r.kind_ = Kind::Infinite;
    return r;
  }
  static RatioValue finite(Rational value) {
    if (value < 0) throw InputError("ratio values are nonnegative");
    RatioValue r;
    if (value != 0) {
      r.kind_ = Kind::Finite;
      r.value_ = std::move(value);
    }
    return r;
  }

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::Zero; }
  bool is_finite() const { return kind_ != Kind::Infinite; }
  bool is_infinite() const { return kind_ == Kind::Infinite; }

  /// Numeric value; zero for Kind::Zero. Throws on infinity.
  Rational value() const {
    if (kind_ == Kind::Infinite) throw std::domain_error("infinite ratio has no rational value");
    return kind_ == Kind::Zero ? Rational(0) : value_;
  }

  std::string str() const {
    switch (kind_) {
      case Kind::Zero: return "0";
      case Kind::Finite: return to_string(value_);
      case Kind::Infinite: return "inf";
    }
    return {};
  }

  friend std::ostream& operator<<(std::ostream& os, const RatioValue& v) { return os << v.str(); }

  friend bool operator==(const RatioValue& a, const RatioValue& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
  }

  friend std::strong_ordering operator<=>(const RatioValue& a, const RatioValue& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    if (a.kind_ != Kind::Finite || a.value_ == b.value_) return std::strong_ordering::equal;
    return a.value_ < b.value_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  Kind kind_ = Kind::Zero;
  Rational value_;
};

namespace detail {

template <class W>
Rational checked_sum(const IndexSet& set, std::span<const W> weights) {
  Rational total = 0;
  for (Index i : set) {
    if (i < 1 || i > weights.size()) {
      throw InputError("index " + std::to_string(i) + " out of range 1.." +
                       std::to_string(weights.size()));
    }
    total += Rational(weights[i - 1]);
  }
  return total;
}

}  // namespace detail

/// R(s1, s2): 0 if only s1 is empty, sum(s1)/sum(s2) if s2 is nonempty, +inf otherwise.
/// A nonempty s2 of zero total weight is treated as +inf.
template <class W>
RatioValue ratio(const IndexSet& s1, const IndexSet& s2, std::span<const W> weights) {
  const Rational sum1 = detail::checked_sum(s1, weights);
  const Rational sum2 = detail::checked_sum(s2, weights);
  if (s1.empty() && !s2.empty()) return RatioValue::zero();
  if (s2.empty() || sum2 == 0) return RatioValue::infinite();
  return RatioValue::finite(sum1 / sum2);
}

template <class W>
RatioValue ratio(const IndexSet& s1, const IndexSet& s2, const std::vector<W>& weights) {
  return ratio(s1, s2, std::span<const W>(weights));
}

/// MR(S_1..S_k): the largest R(S_i, S_j) over ordered pairs i != j.
template <class W>
RatioValue max_ratio(std::span<const IndexSet> sets, std::span<const W> weights) {
  if (sets.size() < 2) throw InputError("max_ratio needs at least two sets");
  RatioValue best = RatioValue::zero();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i == j) continue;
      best = std::max(best, ratio(sets[i], sets[j], weights));
    }
  }
  return best;
}

template <class W>
RatioValue max_ratio(const IndexSet& s1, const IndexSet& s2, std::span<const W> weights) {
  const IndexSet sets[] = {s1, s2};
  return max_ratio(std::span<const IndexSet>(sets), weights);
}

template <class W>
RatioValue max_ratio(const IndexSet& s1, const IndexSet& s2, const std::vector<W>& weights) {
  return max_ratio(s1, s2, std::span<const W>(weights));
}

/// Two disjoint index sets with their weight sums cached.
struct SolutionPair {
  IndexSet s1;
  IndexSet s2;
  Rational sum1 = 0;
  Rational sum2 = 0;

  /// Builds a pair and fills in the sums from `weights`.
  template <class W>
  static SolutionPair make(IndexSet s1, IndexSet s2, std::span<const W> weights) {
    SolutionPair p;
    p.s1 = make_index_set(std::move(s1));
    p.s2 = make_index_set(std::move(s2));
    p.sum1 = detail::checked_sum(p.s1, weights);
    p.sum2 = detail::checked_sum(p.s2, weights);
    return p;
  }

  template <class W>
  static SolutionPair make(IndexSet s1, IndexSet s2, const std::vector<W>& weights) {
    return make(std::move(s1), std::move(s2), std::span<const W>(weights));
  }

  /// The "no solution" pair (empty, empty).
  bool empty() const { return s1.empty() && s2.empty(); }

  /// Objective value from the cached sums.
  RatioValue value() const {
    if (s1.empty() && s2.empty()) return RatioValue::infinite();
    if (s1.empty() || s2.empty() || sum1 == 0 || sum2 == 0) return RatioValue::infinite();
    return RatioValue::finite(sum1 > sum2 ? sum1 / sum2 : sum2 / sum1);
  }

  SolutionPair swapped() const { return {s2, s1, sum2, sum1}; }

  friend bool operator==(const SolutionPair&, const SolutionPair&) = default;
};

/// n pairs (a_i, b_i) stored flat: weights[0..n) are a_1..a_n, weights[n..2n) are b_1..b_n.
class TwoSetInstance {
 public:
  TwoSetInstance() = default;

  explicit TwoSetInstance(std::vector<Rational> flat_weights) : weights_(std::move(flat_weights)) {
    if (weights_.empty() || weights_.size() % 2 != 0) {
      throw InputError("a two-set instance needs an even, nonzero number of weights");
    }
    for (const Rational& w : weights_) {
      if (w <= 0) throw InputError("weights must be strictly positive, got " + to_string(w));
    }
  }

  static TwoSetInstance from_pairs(std::span<const std::pair<Rational, Rational>> pairs) {
    std::vector<Rational> flat(2 * pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      flat[i] = pairs[i].first;
      flat[pairs.size() + i] = pairs[i].second;
    }
    return TwoSetInstance(std::move(flat));
  }

  static TwoSetInstance from_pairs(const std::vector<std::pair<Rational, Rational>>& pairs) {
    return from_pairs(std::span<const std::pair<Rational, Rational>>(pairs));
  }

  std::size_t n() const { return weights_.size() / 2; }
  std::size_t size() const { return weights_.size(); }
  const Rational& weight(Index i) const { return weights_.at(i - 1); }
  std::span<const Rational> weights() const { return weights_; }

  SolutionPair solution(IndexSet s1, IndexSet s2) const {
    return SolutionPair::make(std::move(s1), std::move(s2), weights());
  }

  RatioValue max_ratio(const SolutionPair& sol) const {
    return ssr::max_ratio(sol.s1, sol.s2, weights());
  }

 private:
  std::vector<Rational> weights_;
};

/// Integer-weighted two-set instance with a designated pivot m in 1..2n.
/// Zero weights are admitted for non-pivot elements so floored, rescaled
/// instances can be fed to the exact solvers directly.
struct IntegerInstance {
  std::vector<std::int64_t> weights;
  Index m = 1;

  std::size_t n() const { return weights.size() / 2; }
  std::int64_t weight(Index i) const { return weights[i - 1]; }
  std::int64_t pivot_weight() const { return weights[m - 1]; }

  void validate() const {
    if (weights.empty() || weights.size() % 2 != 0) {
      throw InputError("an integer instance needs an even, nonzero number of weights");
    }
    if (m < 1 || m > weights.size()) {
      throw InputError("pivot index " + std::to_string(m) + " out of range 1.." +
                       std::to_string(weights.size()));
    }
    for (std::int64_t w : weights) {
      if (w < 0) throw InputError("weights must be nonnegative integers");
    }
    if (pivot_weight() <= 0) throw InputError("the pivot weight must be positive");
  }
};

/// Base index (1..n) of a flat index (1..2n).
inline Index base_index(Index i, std::size_t n) { return i > n ? i - n : i; }

namespace detail {

inline bool within(const IndexSet& set, Index lo, Index hi) {
  return std::all_of(set.begin(), set.end(), [&](Index i) { return i >= lo && i <= hi; });
}

}  // namespace detail

/// 2-Set feasibility: both sets nonempty, on opposite sides, and no pair
/// contributes to both. Either orientation of (s1, s2) is accepted.
inline bool check_feasible_two_set(const SolutionPair& sol, std::size_t n) {
  if (sol.s1.empty() || sol.s2.empty() || n == 0) return false;
  const bool s1_first = detail::within(sol.s1, 1, n) && detail::within(sol.s2, n + 1, 2 * n);
  const bool s1_second = detail::within(sol.s1, n + 1, 2 * n) && detail::within(sol.s2, 1, n);
  if (!s1_first && !s1_second) return false;
  for (Index i : sol.s1) {
    for (Index j : sol.s2) {
      if (i % n == j % n) return false;
    }
  }
  return true;
}

/// Semi-restricted feasibility: 2-Set feasible and the smaller of the two
/// set maxima equals the pivot's weight (compared by value).
template <class W>
bool check_feasible_semi_restricted(const SolutionPair& sol, std::span<const W> weights, Index m) {
  const std::size_t n = weights.size() / 2;
  if (m < 1 || m > weights.size()) return false;
  if (!check_feasible_two_set(sol, n)) return false;
  auto max_of = [&](const IndexSet& set) {
    W best = weights[set.front() - 1];
    for (Index i : set) best = std::max(best, weights[i - 1]);
    return best;
  };
  return std::min(max_of(sol.s1), max_of(sol.s2)) == weights[m - 1];
}

inline bool check_feasible_semi_restricted(const SolutionPair& sol, const TwoSetInstance& inst, Index m) {
  return check_feasible_semi_restricted(sol, inst.weights(), m);
}

inline bool check_feasible_semi_restricted(const SolutionPair& sol, const IntegerInstance& inst) {
  return check_feasible_semi_restricted(sol, std::span<const std::int64_t>(inst.weights), inst.m);
}

}  // namespace ssr

#endif  // SSR_CORE_HPP
