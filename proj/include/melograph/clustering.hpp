// clustering.hpp
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
// All-pairs transposed-Frechet distance matrix and group-average (UPGMA)
// agglomerative clustering with a full merge trace. The distance is used
// as-is even though minimizing over transpositions may break the triangle
// inequality; group averaging does not require metricity.

#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "melograph/frechet.hpp"
#include "melograph/melody.hpp"

namespace melograph {

struct WindowPolicy {
  std::optional<TranspositionWindow> fixed;  // overrides the mean-difference heuristic
  int radius = 12;
};

struct DistanceMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> d;
  std::vector<std::vector<long long>> squared;
  std::vector<std::vector<int>> t_star;

  std::size_t size() const { return labels.size(); }
};

/// Pairwise transposed-Frechet distances. Every ordered pair is evaluated
/// independently; with the default policy the windows of (i,j) and (j,i)
/// mirror each other, so the matrix comes out exactly symmetric.
inline DistanceMatrix distance_matrix(std::span<const Melody> ms,
                                      const WindowPolicy& policy = {}) {
  if (ms.size() < 2) throw std::invalid_argument("distance matrix: need at least two melodies");
  const std::size_t n = ms.size();
  DistanceMatrix dm;
  dm.labels.reserve(n);
  for (const Melody& m : ms) dm.labels.push_back(m.name);
  dm.d.assign(n, std::vector<double>(n, 0.0));
  dm.squared.assign(n, std::vector<long long>(n, 0));
  dm.t_star.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      try {
        auto window = policy.fixed ? policy.fixed
                                   : std::optional<TranspositionWindow>(
                                         default_window(ms[i], ms[j], policy.radius));
        TdfdResult r = tdfd(ms[i], ms[j], window);
        dm.d[i][j] = r.distance;
        dm.squared[i][j] = r.squared_distance;
        dm.t_star[i][j] = r.t_star;
      } catch (const std::exception& e) {
        throw std::domain_error("distance matrix: pair (" + dm.labels[i] + ", " + dm.labels[j] +
                                "): " + e.what());
      }
    }
  }
  return dm;
}

/// All unordered index pairs attaining the minimum off-diagonal distance,
/// in lexicographic order.
inline std::vector<std::pair<std::size_t, std::size_t>> nearest_pairs(const DistanceMatrix& dm) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  double best = 0.0;
  bool first = true;
  for (std::size_t i = 0; i < dm.size(); ++i) {
    for (std::size_t j = i + 1; j < dm.size(); ++j) {
      if (first || dm.d[i][j] < best) {
        best = dm.d[i][j];
        out.clear();
        out.emplace_back(i, j);
        first = false;
      } else if (dm.d[i][j] == best) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

/// One agglomeration step: the two clusters merged (leaf indices, ascending;
/// `left` holds the smaller leading index) and their group-average distance.
struct Merge {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  double distance = 0.0;
};

struct MergeTree {
  std::vector<std::string> labels;
  std::vector<Merge> merges;
};

/// Group-average agglomerative clustering. Linkage between clusters is the
/// arithmetic mean of all cross-pair leaf distances, recomputed from the
/// input matrix at every step. Ties on the minimum linkage are broken by the
/// lexicographically smallest pair of leading leaf indices.
inline MergeTree upgma(const DistanceMatrix& dm) {
  const std::size_t n = dm.size();
  MergeTree tree;
  tree.labels = dm.labels;
  if (n < 2) return tree;

  std::vector<std::vector<std::size_t>> clusters(n);
  for (std::size_t i = 0; i < n; ++i) clusters[i] = {i};

  auto linkage = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    double sum = 0.0;
    for (std::size_t x : a) {
      for (std::size_t y : b) sum += dm.d[x][y];
    }
    return sum / (static_cast<double>(a.size()) * static_cast<double>(b.size()));
  };

  while (clusters.size() > 1) {
    std::size_t bi = 0, bj = 1;
    double best = linkage(clusters[0], clusters[1]);
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      for (std::size_t j = i + 1; j < clusters.size(); ++j) {
        if (i == 0 && j == 1) continue;
        double d = linkage(clusters[i], clusters[j]);
        // Clusters stay sorted by leading leaf index, so scan order is
        // already the lexicographic tie-break order.
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    Merge merge;
    merge.left = clusters[bi];
    merge.right = clusters[bj];
    merge.distance = best;
    tree.merges.push_back(merge);

    std::vector<std::size_t> joined;
    joined.reserve(merge.left.size() + merge.right.size());
    std::merge(merge.left.begin(), merge.left.end(), merge.right.begin(), merge.right.end(),
               std::back_inserter(joined));
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bj));
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bi));
    auto pos = std::lower_bound(clusters.begin(), clusters.end(), joined,
                                [](const auto& a, const auto& b) { return a.front() < b.front(); });
    clusters.insert(pos, std::move(joined));
  }
  return tree;
}

}  // namespace melograph
