// symmetry.hpp
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
// Reflective symmetry of M-graphs. A melody is reflectively symmetric when a
// line maps vertex p_i onto p_{n+1-i} for every i. detect_symmetry() decides
// this arithmetically for repetition-free melodies; geometric_oracle()
// decides it by direct construction (perpendicular bisectors) and exists so
// the two routes can cross-check each other.

#pragma once

#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>

#include "melograph/melody.hpp"
#include "melograph/rational.hpp"

namespace melograph {

/// A line in the plane: either y = slope*x + intercept, or the vertical line
/// x = offset. Exactly one form is populated.
class Line {
 public:
  static Line sloped(Rational slope, Rational intercept) {
    Line l;
    l.vertical_ = false;
    l.a_ = slope;
    l.b_ = intercept;
    return l;
  }
  static Line vertical(Rational x_offset) {
    Line l;
    l.vertical_ = true;
    l.b_ = x_offset;
    return l;
  }

  bool is_vertical() const { return vertical_; }
  const Rational& slope() const {
    if (vertical_) throw std::logic_error("line: vertical lines have no slope form");
    return a_;
  }
  const Rational& intercept() const {
    if (vertical_) throw std::logic_error("line: vertical lines have no intercept");
    return b_;
  }
  const Rational& x_offset() const {
    if (!vertical_) throw std::logic_error("line: not a vertical line");
    return b_;
  }

  friend bool operator==(const Line&, const Line&) = default;

 private:
  bool vertical_ = false;
  Rational a_;
  Rational b_;
};

/// Renders "y = -x + 11", "y = 1/5x + 2/5", "x = 3", matching the axis
/// notation used in reports and DOT comments.
inline std::string line_equation(const Line& l) {
  std::ostringstream os;
  if (l.is_vertical()) {
    os << "x = " << l.x_offset();
    return os.str();
  }
  const Rational& a = l.slope();
  const Rational& b = l.intercept();
  os << "y = ";
  if (a.sign() == 0) {
    os << b;
    return os.str();
  }
  if (a == Rational(1)) {
    os << "x";
  } else if (a == Rational(-1)) {
    os << "-x";
  } else {
    os << a << "x";
  }
  if (b.sign() > 0) {
    os << " + " << b;
  } else if (b.sign() < 0) {
    os << " - " << -b;
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Line& l) {
  return os << line_equation(l);
}

/// Image of p under reflection across l, exact.
inline RatPoint reflect_point(const Line& l, const RatPoint& p) {
  if (l.is_vertical()) {
    return {Rational(2) * l.x_offset() - p.x, p.y};
  }
  const Rational& a = l.slope();
  const Rational& b = l.intercept();
  Rational one(1);
  Rational d = one + a * a;
  Rational rx = ((one - a * a) * p.x + Rational(2) * a * p.y - Rational(2) * a * b) / d;
  Rational ry = (Rational(2) * a * p.x - (one - a * a) * p.y + Rational(2) * b) / d;
  return {rx, ry};
}

inline bool line_contains(const Line& l, const RatPoint& p) {
  if (l.is_vertical()) return p.x == l.x_offset();
  return p.y == l.slope() * p.x + l.intercept();
}

/// Perpendicular bisector of the segment pq; requires p != q.
inline Line perpendicular_bisector(const RatPoint& p, const RatPoint& q) {
  if (p == q) throw std::logic_error("perpendicular bisector of a degenerate segment");
  // Locus |X - p|^2 = |X - q|^2, i.e. 2(q-p).X = |q|^2 - |p|^2.
  Rational A = Rational(2) * (q.x - p.x);
  Rational B = Rational(2) * (q.y - p.y);
  Rational C = (q.x * q.x + q.y * q.y) - (p.x * p.x + p.y * p.y);
  if (B.sign() == 0) return Line::vertical(C / A);
  return Line::sloped(-A / B, C / B);
}

inline Line line_through(const RatPoint& p, const RatPoint& q) {
  if (p == q) throw std::logic_error("line through two coincident points");
  if (p.x == q.x) return Line::vertical(p.x);
  Rational a = (q.y - p.y) / (q.x - p.x);
  return Line::sloped(a, p.y - a * p.x);
}

enum class SymmetryCase { even_general, even4_case_i, even4_case_ii, odd };

inline const char* to_string(SymmetryCase c) {
  switch (c) {
    case SymmetryCase::even_general: return "even";
    case SymmetryCase::even4_case_i: return "length-4 case I";
    case SymmetryCase::even4_case_ii: return "length-4 case II";
    case SymmetryCase::odd: return "odd";
  }
  return "?";
}

struct SymmetryReport {
  bool symmetric = false;
  std::optional<Line> axis;
  std::optional<SymmetryCase> case_tag;
};

/// Searches directly for a line mapping p_i to p_{n+1-i} for all i. Every
/// mirrored pair of distinct points forces the line to be its perpendicular
/// bisector, so one such pair pins the only candidate; the candidate is then
/// verified against every pair. Returns the line, or nothing if no line works.
inline std::optional<Line> geometric_oracle(const MGraph& g) {
  const auto& pts = g.points;
  const std::size_t n = pts.size();
  if (n < 2) throw std::invalid_argument("geometric oracle: need at least two points");

  std::optional<Line> candidate;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = pts[i];
    const Point& b = pts[n - 1 - i];
    if (!(a == b)) {
      candidate = perpendicular_bisector(to_rational(a), to_rational(b));
      break;
    }
  }
  if (!candidate) {
    // Palindromic vertex sequence: every point must be fixed, so the axis has
    // to pass through all of them.
    std::size_t j = 1;
    while (j < n && pts[j] == pts[0]) ++j;
    if (j == n) return Line::vertical(Rational(pts[0].x));  // single location; any line through it
    candidate = line_through(to_rational(pts[0]), to_rational(pts[j]));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(reflect_point(*candidate, to_rational(pts[i])) == to_rational(pts[n - 1 - i]))) {
      return std::nullopt;
    }
  }
  return candidate;
}

// Index convention for the arithmetic criteria below. A melody of even length
// 2n stored 0-based as v[0..2n-1] is addressed as
//   (x_{-n}, ..., x_{-1}, x_1, ..., x_n)
// with x_{-i} = v[n-i] and x_{+i} = v[n-1+i] for i = 1..n. A melody of odd
// length 2n+1 has the center x_0 = v[n] and x_{+-i} = v[n +- i].
// test/test_symmetry.cpp pins this mapping against the length-4 formulas.

/// Decides reflective symmetry of a repetition-free melody and reports the
/// axis. Length 4 uses the two-case criterion (case II axes can have
/// fractional slope); length >= 6 even uses the constant-pair-sum criterion
/// with axis y = -x + (x_{-1} + x_1); odd length >= 5 requires the pair sums
/// to equal twice the center pitch.
inline SymmetryReport detect_symmetry(const Melody& m) {
  if (has_repeated_pitch(m)) throw std::domain_error("repetition unsupported");
  const auto& v = m.pitches;
  const std::size_t len = v.size();
  if (len < 4) throw std::invalid_argument("detect_symmetry: melody too short");

  SymmetryReport report;
  if (len % 2 == 0) {
    const std::size_t n = len / 2;
    auto xm = [&](std::size_t i) { return static_cast<long long>(v[n - i]); };      // x_{-i}
    auto xp = [&](std::size_t i) { return static_cast<long long>(v[n - 1 + i]); };  // x_{+i}
    if (n == 2) {
      if (xp(2) == -xm(2) + xm(1) + xp(1)) {
        report.symmetric = true;
        report.case_tag = SymmetryCase::even4_case_i;
        report.axis = Line::sloped(Rational(-1), Rational(xm(1) + xp(1)));
      } else if (xp(2) == xm(2) - xm(1) + xp(1)) {
        report.symmetric = true;
        report.case_tag = SymmetryCase::even4_case_ii;
        long long den = xm(2) - 2 * xm(1) + xp(1);
        if (den == 0) {
          // Cannot happen for repetition-free input (it would force
          // x_2 = x_{-1}); kept as a fallback for robustness.
          report.axis = geometric_oracle(m_graph(m));
          report.symmetric = report.axis.has_value();
          if (!report.symmetric) report.case_tag.reset();
        } else {
          report.axis = Line::sloped(Rational(xm(2) - xp(1), den),
                                     Rational(-(xm(1) - xp(1)) * (xm(2) + xp(1)), den));
        }
      }
    } else {
      const long long sum = xm(1) + xp(1);
      bool constant = true;
      for (std::size_t i = 2; i <= n; ++i) {
        if (xm(i) + xp(i) != sum) {
          constant = false;
          break;
        }
      }
      if (constant) {
        report.symmetric = true;
        report.case_tag = SymmetryCase::even_general;
        report.axis = Line::sloped(Rational(-1), Rational(sum));
      }
    }
  } else {
    const std::size_t n = (len - 1) / 2;  // >= 2 because len >= 5
    const long long center = v[n];
    bool ok = true;
    for (std::size_t i = 1; i <= n; ++i) {
      if (static_cast<long long>(v[n - i]) + v[n + i] != 2 * center) {
        ok = false;
        break;
      }
    }
    if (ok) {
      report.symmetric = true;
      report.case_tag = SymmetryCase::odd;
      report.axis = Line::sloped(Rational(-1), Rational(2 * center));
    }
  }
  return report;
}

/// For a length-4 melody in case II, the first three M-graph vertices form an
/// isosceles right angle at the middle vertex. Checks that property exactly.
inline bool isosceles_right_check(const Melody& m) {
  if (m.size() != 4) throw std::invalid_argument("isosceles check: melody must have length 4");
  const auto& v = m.pitches;
  long long xm2 = v[0], xm1 = v[1], xp1 = v[2], xp2 = v[3];
  if (xp2 != xm2 - xm1 + xp1) {
    throw std::invalid_argument("isosceles check: case II condition does not hold");
  }
  MGraph g = m_graph(m);
  Point u{g.points[1].x - g.points[0].x, g.points[1].y - g.points[0].y};
  Point w{g.points[2].x - g.points[1].x, g.points[2].y - g.points[1].y};
  long long dot = u.x * w.x + u.y * w.y;
  long long nu = u.x * u.x + u.y * u.y;
  long long nw = w.x * w.x + w.y * w.y;
  return dot == 0 && nu == nw;
}

}  // namespace melograph
