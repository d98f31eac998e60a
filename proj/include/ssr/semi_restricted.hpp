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

#ifndef SSR_SEMI_RESTRICTED_HPP
#define SSR_SEMI_RESTRICTED_HPP

// Exact pseudo-polynomial solver for Semi-Restricted 2-Set SSR on integer
// weights.
//
// solve_anchored() answers the pivot-anchored question: the pivot element m
// itself belongs to the light set S1, every element of S1 weighs at most a_m,
// and S2 (on the other side) holds some element weighing at least a_m. It
// splits into two cases:
//
//   Case 1  the heavy set is a single element heavier than Q, where Q is a_m
//           plus every admissible light-side weight; a linear scan.
//   Case 2  a table T[i, d, l] over the first i pairs, the sum difference
//           d = sum(S1) - sum(S2) in [-2Q, Q], and a flag l recording whether
//           S2 already holds a heavy candidate. Each cell keeps the pair with
//           the largest total sum, which for a fixed d has the best ratio.
//
// solve_semi_restricted() answers the value-based question (the smaller of
// the two set maxima equals a_m) by running the anchored solver from every
// element whose weight equals a_m.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssr/core.hpp"

namespace ssr {

/// Index offsets of the light side (p) and heavy side (p_prime); {p, p'} = {0, n}.
struct SidePair {
  std::size_t p = 0;
  std::size_t p_prime = 0;

  friend bool operator==(const SidePair&, const SidePair&) = default;
};

/// Base-index candidates for the light set (s_min) and for the heavy set's
/// mandatory element (s_max), plus the light-side capacity q.
struct CandidateSets {
  IndexSet s_min;
  IndexSet s_max;
  std::int64_t q = 0;
  std::vector<char> in_min;  // by base index, size n + 1
  std::vector<char> in_max;

  bool min_contains(Index i) const { return in_min[i] != 0; }
  bool max_contains(Index i) const { return in_max[i] != 0; }
};

struct Prepared {
  SidePair sides;
  CandidateSets candidates;
};

/// A set pair with its total weight, as compared by ltst().
struct WeightedPair {
  IndexSet s1;
  IndexSet s2;
  std::int64_t x = 0;

  bool is_empty() const { return s1.empty() && s2.empty() && x == 0; }
  friend bool operator==(const WeightedPair&, const WeightedPair&) = default;
};

/// Larger-total-sum selection: the challenger wins only against the empty
/// tuple or with a strictly larger total.
inline const WeightedPair& ltst(const WeightedPair& incumbent, const WeightedPair& challenger) {
  return incumbent.is_empty() || challenger.x > incumbent.x ? challenger : incumbent;
}

/// Candidate sets for pivot m. The pivot's own pair is excluded from both
/// s_min and s_max so that S2 can never clash with m.
inline Prepared prepare(const IntegerInstance& inst) {
  inst.validate();
  const std::size_t n = inst.n();
  const Index m = inst.m;
  Prepared out;
  out.sides = m <= n ? SidePair{0, n} : SidePair{n, 0};
  const auto [p, pp] = out.sides;
  const Index pivot_base = m - p;
  const std::int64_t am = inst.pivot_weight();

  CandidateSets& c = out.candidates;
  c.in_min.assign(n + 1, 0);
  c.in_max.assign(n + 1, 0);
  __int128 q = am;
  for (Index i = 1; i <= n; ++i) {
    if (i == pivot_base) continue;
    if (inst.weight(i + p) <= am) {
      c.s_min.push_back(i);
      c.in_min[i] = 1;
      q += inst.weight(i + p);
    }
    if (inst.weight(i + pp) >= am) {
      c.s_max.push_back(i);
      c.in_max[i] = 1;
    }
  }
  if (q > (static_cast<__int128>(1) << 60)) throw SizeError("light-side capacity Q overflows");
  c.q = static_cast<std::int64_t>(q);
  return out;
}

/// Best solution whose heavy set is a single element heavier than q: that
/// element against every admissible light-side element. Empty if none.
inline SolutionPair solve_case1(const IntegerInstance& inst, const SidePair& sides, const CandidateSets& cand) {
  const auto [p, pp] = sides;
  const Index pivot_base = inst.m - p;
  std::optional<Index> chosen;
  std::int64_t best_num = 0, best_den = 1;
  for (Index i : cand.s_max) {
    const std::int64_t heavy = inst.weight(i + pp);
    if (heavy <= cand.q) continue;
    const std::int64_t a = cand.min_contains(i) ? inst.weight(i + p) : 0;
    const std::int64_t light = cand.q - a;
    // heavy / light < best_num / best_den
    if (!chosen || static_cast<__int128>(heavy) * best_den < static_cast<__int128>(best_num) * light) {
      chosen = i;
      best_num = heavy;
      best_den = light;
    }
  }
  if (!chosen) return {};
  IndexSet light;
  for (Index j = 1; j <= inst.n(); ++j) {
    if ((cand.min_contains(j) || j == pivot_base) && j != *chosen) light.push_back(j + p);
  }
  return SolutionPair::make(std::move(light), IndexSet{*chosen + pp}, inst.weights);
}

/// Case 2 table. Cells store only the last decision and the parent's flag;
/// set pairs are rebuilt on demand by walking decisions back to row 0. Total
/// sums are kept for the final row.
class DpTable {
 public:
  enum class Decision : std::uint8_t { Empty = 0, Origin = 1, Carry = 2, TakeFirst = 3, TakeSecond = 4 };

  static constexpr std::uint64_t kMaxCells = std::uint64_t{1} << 32;

  DpTable() = default;

  DpTable(const IntegerInstance& inst, const SidePair& sides, std::int64_t q)
      : n_(inst.n()), q_(q), m_(inst.m), sides_(sides) {
    const std::uint64_t width = 3 * static_cast<std::uint64_t>(q) + 1;
    const std::uint64_t cells = (n_ + 1) * 2 * width;
    if (q > static_cast<std::int64_t>(kMaxCells) || cells > kMaxCells) {
      throw SizeError("dynamic-programming table of " + std::to_string(cells) + " cells exceeds the limit");
    }
    width_ = static_cast<std::size_t>(width);
    first_.resize(n_ + 1);
    second_.resize(n_ + 1);
    for (Index i = 1; i <= n_; ++i) {
      first_[i] = inst.weight(i + sides.p);
      second_[i] = inst.weight(i + sides.p_prime);
    }
    cells_.assign(static_cast<std::size_t>(cells), 0);
    final_x_.assign(2 * width_, -1);
  }

  std::size_t n() const { return n_; }
  std::int64_t q() const { return q_; }
  std::int64_t min_d() const { return -2 * q_; }
  std::int64_t max_d() const { return q_; }
  const SidePair& sides() const { return sides_; }
  std::uint64_t cell_ops() const { return cell_ops_; }

  bool in_window(std::int64_t d) const { return d >= min_d() && d <= max_d(); }

  Decision decision(std::size_t i, std::int64_t d, int l) const {
    return static_cast<Decision>(cells_[offset(i, d, l)] & 0x7);
  }
  int parent_l(std::size_t i, std::int64_t d, int l) const { return (cells_[offset(i, d, l)] >> 3) & 1; }
  bool occupied(std::size_t i, std::int64_t d, int l) const {
    return in_window(d) && decision(i, d, l) != Decision::Empty;
  }

  /// Total sum stored at T[n, d, l], if occupied.
  std::optional<std::int64_t> final_sum(std::int64_t d, int l) const {
    if (!in_window(d)) return std::nullopt;
    const std::int64_t x = final_x_[static_cast<std::size_t>(l) * width_ + column(d)];
    if (x < 0) return std::nullopt;
    return x;
  }

  /// Sets stored at T[i, d, l], rebuilt from the decisions. Empty pair if the cell is empty.
  std::pair<IndexSet, IndexSet> reconstruct(std::size_t i, std::int64_t d, int l) const {
    if (!occupied(i, d, l)) return {};
    IndexSet s1, s2;
    for (std::size_t row = i; row > 0; --row) {
      const std::uint8_t cell = cells_[offset(row, d, l)];
      const int from_l = (cell >> 3) & 1;
      switch (static_cast<Decision>(cell & 0x7)) {
        case Decision::Carry: break;
        case Decision::TakeFirst:
          s1.push_back(row + sides_.p);
          d -= first_[row];
          break;
        case Decision::TakeSecond:
          s2.push_back(row + sides_.p_prime);
          d += second_[row];
          break;
        default: throw std::logic_error("broken back-pointer chain in the DP table");
      }
      l = from_l;
    }
    if (decision(0, d, l) != Decision::Origin) throw std::logic_error("back-pointers do not reach the origin");
    s1.push_back(m_);
    return {make_index_set(std::move(s1)), make_index_set(std::move(s2))};
  }

 private:
  friend struct Case2Filler;

  std::size_t column(std::int64_t d) const { return static_cast<std::size_t>(d + 2 * q_); }
  std::size_t offset(std::size_t i, std::int64_t d, int l) const {
    return (i * 2 + static_cast<std::size_t>(l)) * width_ + column(d);
  }

  std::size_t n_ = 0;
  std::int64_t q_ = 0;
  Index m_ = 0;
  SidePair sides_;
  std::size_t width_ = 0;
  std::vector<std::int64_t> first_;
  std::vector<std::int64_t> second_;
  std::vector<std::uint8_t> cells_;
  std::vector<std::int64_t> final_x_;
  std::uint64_t cell_ops_ = 0;
};

struct Case2Result {
  SolutionPair solution;
  DpTable table;
};

struct Case2Filler {
  static void fill(DpTable& t, const IntegerInstance& inst, const CandidateSets& cand) {
    const std::size_t width = t.width_;
    const std::size_t n = t.n_;
    const Index pivot_base = inst.m - t.sides_.p;
    std::vector<std::int64_t> prev(2 * width, -1), cur(2 * width, -1);

    const std::int64_t am = inst.pivot_weight();
    prev[t.column(am)] = am;
    t.cells_[t.offset(0, am, 0)] = static_cast<std::uint8_t>(DpTable::Decision::Origin);

    for (std::size_t i = 1; i <= n; ++i) {
      std::fill(cur.begin(), cur.end(), -1);
      std::uint8_t* row = t.cells_.data() + i * 2 * width;
      const std::int64_t w1 = t.first_[i];
      const std::int64_t w2 = t.second_[i];
      const bool take_first = cand.min_contains(i);
      const bool take_second = i != pivot_base;
      const bool heavy = cand.max_contains(i);

      auto put = [&](int l, std::size_t col, std::int64_t x, DpTable::Decision what, int from_l) {
        std::int64_t& slot = cur[static_cast<std::size_t>(l) * width + col];
        if (slot < 0 || x > slot) {
          slot = x;
          row[static_cast<std::size_t>(l) * width + col] =
              static_cast<std::uint8_t>(static_cast<std::uint8_t>(what) | (from_l << 3));
        }
      };

      for (std::size_t col = 0; col < width; ++col) {
        for (int l = 0; l < 2; ++l) {
          const std::int64_t x = prev[static_cast<std::size_t>(l) * width + col];
          if (x < 0) continue;
          put(l, col, x, DpTable::Decision::Carry, l);
          if (take_first) {
            const std::size_t to = col + static_cast<std::size_t>(w1);
            if (to < width) put(l, to, x + w1, DpTable::Decision::TakeFirst, l);
          }
          if (take_second && static_cast<std::int64_t>(col) >= w2) {
            put(heavy ? 1 : l, col - static_cast<std::size_t>(w2), x + w2, DpTable::Decision::TakeSecond, l);
          }
        }
      }
      t.cell_ops_ += 2 * width;
      std::swap(prev, cur);
    }
    t.final_x_ = std::move(prev);
  }
};

/// Fills the table and returns the best pair among the T[n, d, 1] cells (first
/// minimum in increasing d), together with the table.
inline Case2Result solve_case2_table(const IntegerInstance& inst, const SidePair& sides, const CandidateSets& cand) {
  Case2Result out{{}, DpTable(inst, sides, cand.q)};
  DpTable& t = out.table;
  Case2Filler::fill(t, inst, cand);

  std::optional<std::int64_t> best_d;
  std::int64_t best_hi = 0, best_lo = 1;
  for (std::int64_t d = t.min_d(); d <= t.max_d(); ++d) {
    const auto x = t.final_sum(d, 1);
    if (!x) continue;
    const std::int64_t sum1 = (*x + d) / 2;
    const std::int64_t sum2 = (*x - d) / 2;
    const std::int64_t hi = std::max(sum1, sum2);
    const std::int64_t lo = std::min(sum1, sum2);
    if (lo <= 0) continue;
    if (!best_d || static_cast<__int128>(hi) * best_lo < static_cast<__int128>(best_hi) * lo) {
      best_d = d;
      best_hi = hi;
      best_lo = lo;
    }
  }
  if (best_d) {
    auto [s1, s2] = t.reconstruct(t.n(), *best_d, 1);
    out.solution = SolutionPair::make(std::move(s1), std::move(s2), inst.weights);
  }
  return out;
}

inline SolutionPair solve_case2(const IntegerInstance& inst, const SidePair& sides, const CandidateSets& cand) {
  return solve_case2_table(inst, sides, cand).solution;
}

struct SolverOutcome {
  SolutionPair solution;
  std::uint64_t cell_ops = 0;
};

/// Optimal pair among those containing the pivot m in the light set (see the
/// file comment). Empty pair when no such solution exists.
inline SolverOutcome solve_anchored(const IntegerInstance& inst) {
  const Prepared prep = prepare(inst);
  SolverOutcome out;
  if (prep.candidates.s_max.empty()) return out;
  SolutionPair case1 = solve_case1(inst, prep.sides, prep.candidates);
  Case2Result case2 = solve_case2_table(inst, prep.sides, prep.candidates);
  out.cell_ops = case2.table.cell_ops();
  out.solution = case1.value() < case2.solution.value() ? std::move(case1) : std::move(case2.solution);
  return out;
}

/// Optimal pair whose smaller set maximum equals a_m by value. Runs the
/// anchored solver from every element of weight a_m in index order and keeps
/// the first strictly best result.
inline SolverOutcome solve_semi_restricted(const IntegerInstance& inst) {
  inst.validate();
  SolverOutcome best;
  const std::int64_t am = inst.pivot_weight();
  IntegerInstance anchored = inst;
  for (Index k = 1; k <= inst.weights.size(); ++k) {
    if (inst.weight(k) != am) continue;
    anchored.m = k;
    SolverOutcome r = solve_anchored(anchored);
    best.cell_ops += r.cell_ops;
    if (r.solution.value() < best.solution.value()) best.solution = std::move(r.solution);
  }
  return best;
}

}  // namespace ssr

#endif  // SSR_SEMI_RESTRICTED_HPP
