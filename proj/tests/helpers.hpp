// helpers.hpp
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
// Shared test utilities: seeded generators for random melodies.

#pragma once

#include <random>
#include <unordered_set>

#include "melograph/melody.hpp"

namespace melograph::testing {

inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eed2026u);
  return gen;
}

inline Melody random_melody(std::mt19937& gen, int min_len, int max_len, int lo, int hi) {
  std::uniform_int_distribution<int> len_dist(min_len, max_len);
  std::uniform_int_distribution<int> pitch_dist(lo, hi);
  Melody m;
  int len = len_dist(gen);
  m.pitches.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) m.pitches.push_back(pitch_dist(gen));
  return m;
}

/// Random melody with pairwise-distinct pitches.
inline Melody random_distinct_melody(std::mt19937& gen, int len, int lo, int hi) {
  std::uniform_int_distribution<int> pitch_dist(lo, hi);
  Melody m;
  std::unordered_set<int> used;
  while (static_cast<int>(m.pitches.size()) < len) {
    int p = pitch_dist(gen);
    if (used.insert(p).second) m.pitches.push_back(p);
  }
  return m;
}

}  // namespace melograph::testing
