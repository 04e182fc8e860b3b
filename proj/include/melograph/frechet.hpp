// frechet.hpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Discrete Frechet distance between point sequences and its minimum over
// integer transpositions of the second melody. The dynamic program compares
// exact integer squared distances; the square root is taken once at the end.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "melograph/melody.hpp"
#include "melograph/rational.hpp"

namespace melograph {

/// Monotone pairing of two point sequences, 1-based. Starts at (1,1), ends at
/// (n,m), and each step advances either index by at most one (never neither).
struct Coupling {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

inline bool is_valid_coupling(const Coupling& c, std::size_t n, std::size_t m) {
  const auto& ps = c.pairs;
  if (ps.empty()) return false;
  if (ps.front() != std::pair<std::size_t, std::size_t>{1, 1}) return false;
  if (ps.back() != std::pair<std::size_t, std::size_t>{n, m}) return false;
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
    std::size_t da = ps[i + 1].first - ps[i].first;
    std::size_t db = ps[i + 1].second - ps[i].second;
    if (ps[i + 1].first < ps[i].first || ps[i + 1].second < ps[i].second) return false;
    if (da > 1 || db > 1 || (da == 0 && db == 0)) return false;
  }
  return true;
}

/// Max squared link length of a coupling over the given sequences.
inline long long coupling_cost_squared(std::span<const Point> p, std::span<const Point> q,
                                       const Coupling& c) {
  if (!is_valid_coupling(c, p.size(), q.size())) {
    throw std::invalid_argument("coupling does not traverse both sequences");
  }
  long long worst = 0;
  for (const auto& [a, b] : c.pairs) {
    worst = std::max(worst, sq_dist(p[a - 1], q[b - 1]));
  }
  return worst;
}

struct DfdResult {
  long long squared_distance = 0;
  double distance = 0.0;
  Coupling coupling;
};

namespace detail {

inline std::vector<long long> dfd_table(std::span<const Point> p, std::span<const Point> q) {
  const std::size_t n = p.size(), m = q.size();
  std::vector<long long> dp(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      long long d = sq_dist(p[i], q[j]);
      long long reach;
      if (i == 0 && j == 0) {
        reach = 0;
      } else if (i == 0) {
        reach = dp[j - 1];
      } else if (j == 0) {
        reach = dp[(i - 1) * m];
      } else {
        reach = std::min({dp[(i - 1) * m + (j - 1)], dp[(i - 1) * m + j], dp[i * m + (j - 1)]});
      }
      dp[i * m + j] = std::max(d, reach);
    }
  }
  return dp;
}

}  // namespace detail

/// Squared discrete Frechet distance, without coupling recovery.
inline long long dfd_squared(std::span<const Point> p, std::span<const Point> q) {
  if (p.empty() || q.empty()) throw std::invalid_argument("dfd: empty point sequence");
  return detail::dfd_table(p, q).back();
}

/// Discrete Frechet distance with one optimal coupling. The coupling is
/// recovered by backtracking; on ties the walk prefers the diagonal
/// predecessor, then advancing the first sequence, then the second.
inline DfdResult dfd(std::span<const Point> p, std::span<const Point> q) {
  if (p.empty() || q.empty()) throw std::invalid_argument("dfd: empty point sequence");
  const std::size_t n = p.size(), m = q.size();
  std::vector<long long> dp = detail::dfd_table(p, q);

  DfdResult result;
  result.squared_distance = dp[n * m - 1];
  result.distance = std::sqrt(static_cast<double>(result.squared_distance));

  std::size_t i = n - 1, j = m - 1;
  auto& pairs = result.coupling.pairs;
  pairs.emplace_back(i + 1, j + 1);
  while (i > 0 || j > 0) {
    std::size_t bi = i, bj = j;
    long long best = -1;
    if (i > 0 && j > 0) {
      bi = i - 1;
      bj = j - 1;
      best = dp[bi * m + bj];
    }
    if (i > 0 && (best < 0 || dp[(i - 1) * m + j] < best)) {
      bi = i - 1;
      bj = j;
      best = dp[bi * m + bj];
    }
    if (j > 0 && (best < 0 || dp[i * m + (j - 1)] < best)) {
      bi = i;
      bj = j - 1;
    }
    i = bi;
    j = bj;
    pairs.emplace_back(i + 1, j + 1);
  }
  std::reverse(pairs.begin(), pairs.end());
  return result;
}

inline DfdResult dfd_melody(const Melody& a, const Melody& b) {
  MGraph ga = m_graph(a);
  MGraph gb = m_graph(b);
  return dfd(ga.points, gb.points);
}

/// Exact difference of the pitch means, the heuristic center for the
/// transposition search.
inline Rational mean_difference_hint(const Melody& a, const Melody& b) {
  if (a.size() == 0 || b.size() == 0) throw std::invalid_argument("mean: empty melody");
  long long sa = 0, sb = 0;
  for (int p : a.pitches) sa += p;
  for (int p : b.pitches) sb += p;
  return Rational(sa, static_cast<long long>(a.size())) -
         Rational(sb, static_cast<long long>(b.size()));
}

struct TranspositionWindow {
  int lo = 0;
  int hi = 0;
};

/// Window centered on the rounded mean difference, one octave of slack on
/// each side by default. Every optimum in the bundled corpora lies well
/// inside.
inline TranspositionWindow default_window(const Melody& a, const Melody& b, int radius = 12) {
  int center = static_cast<int>(mean_difference_hint(a, b).round_nearest());
  return {center - radius, center + radius};
}

struct TransposedEntry {
  int t = 0;
  long long squared_distance = 0;
  double distance = 0.0;
};

struct TdfdResult {
  int t_star = 0;
  long long squared_distance = 0;
  double distance = 0.0;
  TranspositionWindow window;
  std::vector<TransposedEntry> per_t;
};

/// Minimum discrete Frechet distance over integer transpositions of b within
/// the window (default: mean-difference window). Smallest t wins ties.
inline TdfdResult tdfd(const Melody& a, const Melody& b,
                       std::optional<TranspositionWindow> window = std::nullopt) {
  MGraph ga = m_graph(a);
  MGraph gb = m_graph(b);
  TranspositionWindow w = window ? *window : default_window(a, b);
  if (w.lo > w.hi) throw std::invalid_argument("tdfd: empty transposition window");

  TdfdResult result;
  result.window = w;
  result.per_t.reserve(static_cast<std::size_t>(w.hi - w.lo + 1));
  std::vector<Point> shifted(gb.points.size());
  bool first = true;
  for (int t = w.lo; t <= w.hi; ++t) {
    for (std::size_t k = 0; k < gb.points.size(); ++k) {
      shifted[k] = {gb.points[k].x + t, gb.points[k].y + t};
    }
    long long sq = dfd_squared(ga.points, shifted);
    result.per_t.push_back({t, sq, std::sqrt(static_cast<double>(sq))});
    if (first || sq < result.squared_distance) {
      first = false;
      result.squared_distance = sq;
      result.t_star = t;
    }
  }
  result.distance = std::sqrt(static_cast<double>(result.squared_distance));
  return result;
}

}  // namespace melograph
