// geometry.hpp
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

#include <ostream>

#include "melograph/rational.hpp"

namespace melograph {

/// Integer lattice point.
struct Point {
  long long x = 0;
  long long y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << '(' << p.x << ", " << p.y << ')';
  }
};

inline long long sq_dist(const Point& a, const Point& b) {
  long long dx = a.x - b.x;
  long long dy = a.y - b.y;
  return dx * dx + dy * dy;
}

/// Point with exact rational coordinates.
struct RatPoint {
  Rational x;
  Rational y;

  friend bool operator==(const RatPoint&, const RatPoint&) = default;
  friend std::ostream& operator<<(std::ostream& os, const RatPoint& p) {
    return os << '(' << p.x << ", " << p.y << ')';
  }
};

inline RatPoint to_rational(const Point& p) { return {Rational(p.x), Rational(p.y)}; }

}  // namespace melograph
