// enumeration.hpp
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

#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "melograph/melody.hpp"
#include "melograph/slope.hpp"

namespace melograph {

/// All melodies that start with a fixed pitch and use each remaining pitch
/// exactly once, generated in lexicographic order of the tail.
struct PermutationFamily {
  int first_pitch = 0;
  std::vector<int> remaining;
  std::vector<Melody> melodies;
};

inline PermutationFamily family(int first, std::vector<int> rest) {
  if (rest.empty()) throw std::invalid_argument("family: empty pitch set");
  std::sort(rest.begin(), rest.end());
  if (std::adjacent_find(rest.begin(), rest.end()) != rest.end()) {
    throw std::invalid_argument("family: duplicate pitch in set");
  }
  if (std::binary_search(rest.begin(), rest.end(), first)) {
    throw std::invalid_argument("family: first pitch overlaps the set");
  }
  PermutationFamily f;
  f.first_pitch = first;
  f.remaining = rest;
  std::vector<int> tail = rest;
  do {
    Melody m;
    m.pitches.reserve(tail.size() + 1);
    m.pitches.push_back(first);
    m.pitches.insert(m.pitches.end(), tail.begin(), tail.end());
    f.melodies.push_back(std::move(m));
  } while (std::next_permutation(tail.begin(), tail.end()));
  return f;
}

struct SlopeCensus {
  long long positive = 0;
  long long negative = 0;
  long long zero = 0;
};

/// Exact sign counts over the family. Distinct pitches guarantee the fit is
/// never degenerate, so every melody is classified.
inline SlopeCensus census(const PermutationFamily& f) {
  SlopeCensus out;
  for (const Melody& m : f.melodies) {
    switch (slope_sign(m)) {
      case SlopeSign::positive: ++out.positive; break;
      case SlopeSign::negative: ++out.negative; break;
      case SlopeSign::zero: ++out.zero; break;
    }
  }
  return out;
}

struct RankedMelody {
  int rank = 0;  // competition ranking; equal slopes share a rank
  Melody melody;
  Rational slope;
};

struct SlopeRanking {
  std::vector<RankedMelody> top;     // descending slope
  std::vector<RankedMelody> bottom;  // ascending slope
};

/// Top-k and bottom-k melodies by exact slope. Ties share a rank and every
/// melody with rank <= k is included, so a tied boundary can return more than
/// k rows. Within equal slopes the generation order is kept.
inline SlopeRanking rank_by_slope(const PermutationFamily& f, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > f.melodies.size()) {
    throw std::invalid_argument("rank: k out of range");
  }
  std::vector<std::pair<Rational, std::size_t>> slopes;
  slopes.reserve(f.melodies.size());
  for (std::size_t i = 0; i < f.melodies.size(); ++i) {
    slopes.emplace_back(slope_of_melody(f.melodies[i]), i);
  }

  auto collect = [&](bool descending) {
    std::vector<std::pair<Rational, std::size_t>> order = slopes;
    std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
      return descending ? b.first < a.first : a.first < b.first;
    });
    std::vector<RankedMelody> out;
    int rank = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i == 0 || order[i].first != order[i - 1].first) rank = static_cast<int>(i) + 1;
      if (rank > k) break;
      out.push_back({rank, f.melodies[order[i].second], order[i].first});
    }
    return out;
  };

  SlopeRanking r;
  r.top = collect(true);
  r.bottom = collect(false);
  return r;
}

}  // namespace melograph
