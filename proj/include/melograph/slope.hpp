// slope.hpp
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
// Exact least-squares slope of M-graphs. All arithmetic is integer/rational;
// floating point appears only when callers render values for display.

#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "melograph/melody.hpp"
#include "melograph/rational.hpp"

namespace melograph {

enum class SlopeSign { negative, zero, positive };

/// Least-squares slope of a point sequence,
/// (N*sum(xy) - sum(x)*sum(y)) / (N*sum(x^2) - sum(x)^2), fully reduced.
/// Throws std::domain_error when all x coordinates coincide.
inline Rational slope_of_points(std::span<const Point> pts) {
  if (pts.size() < 2) throw std::invalid_argument("slope: need at least two points");
  using detail::int128;
  int128 sx = 0, sy = 0, sxy = 0, sxx = 0;
  for (const Point& p : pts) {
    sx += p.x;
    sy += p.y;
    sxy += static_cast<int128>(p.x) * p.y;
    sxx += static_cast<int128>(p.x) * p.x;
  }
  const int128 n = static_cast<int128>(pts.size());
  int128 num = n * sxy - sx * sy;
  int128 den = n * sxx - sx * sx;
  if (den == 0) throw std::domain_error("degenerate: vertical fit");
  return Rational::from128(num, den);
}

/// Same fit over exact rational coordinates.
inline Rational slope_of_points(std::span<const RatPoint> pts) {
  if (pts.size() < 2) throw std::invalid_argument("slope: need at least two points");
  Rational sx, sy, sxy, sxx;
  for (const RatPoint& p : pts) {
    sx += p.x;
    sy += p.y;
    sxy += p.x * p.y;
    sxx += p.x * p.x;
  }
  const Rational n(static_cast<long long>(pts.size()));
  Rational num = n * sxy - sx * sy;
  Rational den = n * sxx - sx * sx;
  if (den.sign() == 0) throw std::domain_error("degenerate: vertical fit");
  return num / den;
}

inline Rational slope_of_melody(const Melody& m) {
  if (m.size() < 3) throw std::invalid_argument("melody too short");
  MGraph g = m_graph(m);
  return slope_of_points(std::span<const Point>(g.points));
}

namespace detail {

inline void slope_sums(const Melody& m, int128& num, int128& den) {
  if (m.size() < 3) throw std::invalid_argument("melody too short");
  int128 sx = 0, sy = 0, sxy = 0, sxx = 0;
  const std::size_t n = m.size() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    int128 x = m.pitches[i];
    int128 y = m.pitches[i + 1];
    sx += x;
    sy += y;
    sxy += x * y;
    sxx += x * x;
  }
  num = static_cast<int128>(n) * sxy - sx * sy;
  den = static_cast<int128>(n) * sxx - sx * sx;
}

inline long long narrow(int128 v, const char* what) {
  if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max()) {
    throw std::overflow_error(what);
  }
  return static_cast<long long>(v);
}

}  // namespace detail

/// Unreduced integer numerator of the slope formula for a melody.
inline long long slope_numerator(const Melody& m) {
  detail::int128 num, den;
  detail::slope_sums(m, num, den);
  return detail::narrow(num, "slope numerator does not fit 64 bits");
}

/// Unreduced integer denominator of the slope formula for a melody.
/// Always nonnegative; zero exactly when the fit is degenerate.
inline long long slope_denominator(const Melody& m) {
  detail::int128 num, den;
  detail::slope_sums(m, num, den);
  return detail::narrow(den, "slope denominator does not fit 64 bits");
}

/// Slopes of consecutive pitch-difference pairs: entry k is
/// (x_{k+2} - x_{k+1}) / (x_{k+1} - x_k), i.e. the slope of the length-3
/// submelody starting at k. Entries whose divisor difference is zero are
/// flagged undefined instead of raising.
struct LocalSlopeSequence {
  std::vector<Rational> values;
  std::vector<bool> defined;
};

inline LocalSlopeSequence local_slopes(const Melody& m) {
  if (m.size() < 3) throw std::invalid_argument("melody too short");
  LocalSlopeSequence seq;
  const std::size_t count = m.size() - 2;
  seq.values.reserve(count);
  seq.defined.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    long long yk = m.pitches[k + 1] - m.pitches[k];
    long long yk1 = m.pitches[k + 2] - m.pitches[k + 1];
    if (yk == 0) {
      seq.values.emplace_back(0);
      seq.defined.push_back(false);
    } else {
      seq.values.emplace_back(yk1, yk);
      seq.defined.push_back(true);
    }
  }
  return seq;
}

/// Rebuilds a melody shape from local slopes (first difference normalized to
/// 1, which the overall ratio does not depend on) and returns its slope.
/// Equals slope_of_melody of any source melody whose adjacent differences are
/// all nonzero.
inline Rational slope_from_locals(const LocalSlopeSequence& s) {
  for (bool ok : s.defined) {
    if (!ok) throw std::domain_error("local slope undefined");
  }
  const std::size_t n = s.values.size() + 1;  // number of differences
  std::vector<Rational> diff(n);
  diff[0] = Rational(1);
  for (std::size_t k = 0; k + 1 < n; ++k) diff[k + 1] = s.values[k] * diff[k];
  std::vector<Rational> pitch(n + 1);
  pitch[0] = Rational(0);
  for (std::size_t i = 0; i < n; ++i) pitch[i + 1] = pitch[i] + diff[i];
  std::vector<RatPoint> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = {pitch[i], pitch[i + 1]};
  return slope_of_points(std::span<const RatPoint>(pts));
}

/// Exact sign of the melody slope; no floating-point thresholds involved.
inline SlopeSign slope_sign(const Melody& m) {
  int s = slope_of_melody(m).sign();
  return s > 0 ? SlopeSign::positive : (s < 0 ? SlopeSign::negative : SlopeSign::zero);
}

}  // namespace melograph
