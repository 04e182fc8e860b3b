// melody.hpp
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

#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "melograph/geometry.hpp"

namespace melograph {

/// A melody is a finite sequence of integer pitches, one unit per semitone,
/// with middle C (C4) at 0. Pitches below C4 are negative. The name is an
/// opaque label used for tables and cluster output.
struct Melody {
  std::vector<int> pitches;
  std::string name;

  std::size_t size() const { return pitches.size(); }
  friend bool operator==(const Melody& a, const Melody& b) { return a.pitches == b.pitches; }
};

/// The M-graph of a melody: one vertex per consecutive pitch pair, with the
/// implied edge chain p1 -> p2 -> ... -> pn.
struct MGraph {
  std::vector<Point> points;
};

inline MGraph m_graph(const Melody& m) {
  if (m.size() < 2) throw std::invalid_argument("melody too short");
  MGraph g;
  g.points.reserve(m.size() - 1);
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    g.points.push_back({m.pitches[i], m.pitches[i + 1]});
  }
  return g;
}

inline Melody transpose(const Melody& m, int t) {
  Melody out;
  out.pitches.reserve(m.size());
  for (int p : m.pitches) out.pitches.push_back(p + t);
  out.name = m.name;
  if (!m.name.empty() && t != 0) {
    out.name += (t > 0 ? "+" : "") + std::to_string(t);
  }
  return out;
}

inline Melody invert(const Melody& m) {
  Melody out;
  out.pitches.reserve(m.size());
  for (int p : m.pitches) out.pitches.push_back(-p);
  out.name = m.name;
  return out;
}

inline Melody retrograde(const Melody& m) {
  Melody out;
  out.pitches.assign(m.pitches.rbegin(), m.pitches.rend());
  out.name = m.name;
  return out;
}

inline Melody concat(const Melody& a, const Melody& b) {
  Melody out;
  out.pitches.reserve(a.size() + b.size());
  out.pitches.insert(out.pitches.end(), a.pitches.begin(), a.pitches.end());
  out.pitches.insert(out.pitches.end(), b.pitches.begin(), b.pitches.end());
  if (a.name.empty()) {
    out.name = b.name;
  } else if (b.name.empty()) {
    out.name = a.name;
  } else {
    out.name = a.name + "+" + b.name;
  }
  return out;
}

inline bool has_repeated_pitch(const Melody& m) {
  std::unordered_set<int> seen;
  for (int p : m.pitches) {
    if (!seen.insert(p).second) return true;
  }
  return false;
}

}  // namespace melograph
