// test_slope.cpp
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

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "melograph/format.hpp"
#include "melograph/slope.hpp"

using namespace melograph;

namespace {

// Independent oracle: evaluates the two regression sums literally, without
// going through the library's accumulation path.
std::pair<long long, long long> literal_sums(const std::vector<int>& pitches) {
  long long n = static_cast<long long>(pitches.size()) - 1;
  long long sx = 0, sy = 0, sxy = 0, sxx = 0;
  for (long long i = 0; i < n; ++i) {
    long long x = pitches[static_cast<std::size_t>(i)];
    long long y = pitches[static_cast<std::size_t>(i) + 1];
    sx += x;
    sy += y;
    sxy += x * y;
    sxx += x * x;
  }
  return {n * sxy - sx * sy, n * sxx - sx * sx};
}

}  // namespace

TEST_CASE("slope of point sets matches the closed-form fit") {
  std::vector<Point> p = {{0, 0}, {1, 0}, {2, 1}};
  REQUIRE(slope_of_points(std::span<const Point>(p)) == Rational(1, 2));

  std::vector<Point> p2 = {{0, 0}, {1, 0}, {3, 2}};
  REQUIRE(slope_of_points(std::span<const Point>(p2)) == Rational(5, 7));

  std::vector<Point> collinear = {{0, 1}, {1, 2}, {2, 3}};
  REQUIRE(slope_of_points(std::span<const Point>(collinear)) == Rational(1));
}

TEST_CASE("equal segment slopes do not force equal whole slopes") {
  // Both sets step flat then up at slope 1, yet fit differently: the segment
  // decomposition only determines the whole slope for M-graph vertex chains.
  std::vector<Point> p = {{0, 0}, {1, 0}, {2, 1}};
  std::vector<Point> q = {{0, 0}, {1, 0}, {3, 2}};
  auto seg = [](const Point& a, const Point& b) {
    return Rational(b.y - a.y, b.x - a.x);
  };
  REQUIRE(seg(p[0], p[1]) == seg(q[0], q[1]));
  REQUIRE(seg(p[1], p[2]) == seg(q[1], q[2]));
  REQUIRE(slope_of_points(std::span<const Point>(p)) !=
          slope_of_points(std::span<const Point>(q)));
}

TEST_CASE("a fit with all x coordinates equal is rejected") {
  std::vector<Point> vertical = {{3, 0}, {3, 5}};
  REQUIRE_THROWS_WITH(slope_of_points(std::span<const Point>(vertical)),
                      "degenerate: vertical fit");
  // (5,5,7) yields points (5,5), (5,7) sharing x = 5.
  REQUIRE_THROWS_AS(slope_of_melody(Melody{{5, 5, 7}, ""}), std::domain_error);
  REQUIRE_THROWS_AS(slope_of_melody(Melody{{0, 2}, ""}), std::invalid_argument);
}

TEST_CASE("melody slope goldens") {
  REQUIRE(slope_of_melody(Melody{{0, 2, 5, 4}, ""}) == Rational(13, 38));
  REQUIRE(slope_of_melody(Melody{{0, 2, 4, 5}, ""}) == Rational(3, 4));
  REQUIRE(slope_of_melody(Melody{{0, 5, 2, 4}, ""}) == Rational(-23, 38));

  Melody rachmaninov{{8, 5, 6, 8, 1, -2, 0, 1, -4}, ""};
  REQUIRE(fixed_decimal(slope_of_melody(rachmaninov), 3) == "0.668");
}

TEST_CASE("unreduced numerator and denominator match the literal sums") {
  Melody jupiter{{0, 2, 5, 4}, ""};
  auto [num, den] = literal_sums(jupiter.pitches);
  REQUIRE(num == 13);
  REQUIRE(den == 38);
  REQUIRE(slope_numerator(jupiter) == num);
  REQUIRE(slope_denominator(jupiter) == den);

  auto& gen = testing::rng();
  for (int trial = 0; trial < 500; ++trial) {
    Melody m = testing::random_melody(gen, 3, 12, -24, 24);
    auto [n2, d2] = literal_sums(m.pitches);
    REQUIRE(slope_numerator(m) == n2);
    REQUIRE(slope_denominator(m) == d2);
  }
}

TEST_CASE("numerator is invariant under retrograde") {
  auto& gen = testing::rng();
  for (int trial = 0; trial < 1000; ++trial) {
    Melody m = testing::random_melody(gen, 3, 12, -12, 24);
    REQUIRE(slope_numerator(retrograde(m)) == slope_numerator(m));
  }
}

TEST_CASE("denominator shift under retrograde factors as the endpoints demand") {
  // D(reversed) - D = (x_last - x_first) * ((n+1)(x_last + x_first) - 2*sum).
  auto factored = [](const Melody& m) {
    long long first = m.pitches.front();
    long long last = m.pitches.back();
    long long sum = 0;
    for (int p : m.pitches) sum += p;
    long long count = static_cast<long long>(m.size());
    return (last - first) * (count * (last + first) - 2 * sum);
  };

  Melody jupiter{{0, 2, 5, 4}, ""};
  REQUIRE(slope_denominator(retrograde(jupiter)) - slope_denominator(jupiter) == -24);
  REQUIRE(factored(jupiter) == -24);

  auto& gen = testing::rng();
  for (int trial = 0; trial < 1000; ++trial) {
    Melody m = testing::random_melody(gen, 3, 12, -12, 24);
    REQUIRE(slope_denominator(retrograde(m)) - slope_denominator(m) == factored(m));
  }
}

TEST_CASE("local slopes are ratios of consecutive differences") {
  LocalSlopeSequence s = local_slopes(Melody{{0, 2, 5, 4}, ""});
  REQUIRE(s.values == std::vector<Rational>{Rational(3, 2), Rational(-1, 3)});
  REQUIRE(s.defined == std::vector<bool>{true, true});

  LocalSlopeSequence flat = local_slopes(Melody{{0, 1, 1, 2}, ""});
  REQUIRE(flat.values.size() == 2);
  REQUIRE(flat.values[0] == Rational(0));
  REQUIRE(flat.defined == std::vector<bool>{true, false});

  LocalSlopeSequence line = local_slopes(Melody{{0, 1, 2, 3}, ""});
  REQUIRE(line.values == std::vector<Rational>{Rational(1), Rational(1)});
}

TEST_CASE("slope reconstructs exactly from local slopes") {
  Melody jupiter{{0, 2, 5, 4}, ""};
  LocalSlopeSequence s = local_slopes(jupiter);
  REQUIRE(slope_from_locals(s) == Rational(13, 38));
  REQUIRE(slope_from_locals(s) == slope_of_melody(jupiter));

  // Closed form for length 4: (s1^2 + 2 s1 + s1 s2 + 2 s1^2 s2) / (2 (1 + s1 + s1^2)).
  Rational s1(3, 2), s2(-1, 3);
  Rational closed = (s1 * s1 + Rational(2) * s1 + s1 * s2 + Rational(2) * s1 * s1 * s2) /
                    (Rational(2) * (Rational(1) + s1 + s1 * s1));
  REQUIRE(closed == Rational(13, 38));

  LocalSlopeSequence ones{{Rational(1), Rational(1), Rational(1)}, {true, true, true}};
  REQUIRE(slope_from_locals(ones) == Rational(1));

  LocalSlopeSequence broken{{Rational(0), Rational(0)}, {true, false}};
  REQUIRE_THROWS_WITH(slope_from_locals(broken), "local slope undefined");
}

TEST_CASE("a leading zero local slope still reconstructs a defined fit") {
  // Differences become (1, 0, 0, ...): the pitch walk is (0, 1, 1, 1).
  LocalSlopeSequence s{{Rational(0), Rational(5)}, {true, true}};
  std::vector<RatPoint> pts = {{Rational(0), Rational(1)},
                               {Rational(1), Rational(1)},
                               {Rational(1), Rational(1)}};
  REQUIRE(slope_from_locals(s) == slope_of_points(std::span<const RatPoint>(pts)));
}

TEST_CASE("reconstruction agrees with the direct slope when all steps move") {
  auto& gen = testing::rng();
  int tested = 0;
  while (tested < 500) {
    Melody m = testing::random_melody(gen, 3, 10, -12, 12);
    LocalSlopeSequence s = local_slopes(m);
    bool all_defined = true;
    for (bool ok : s.defined) all_defined &= ok;
    if (!all_defined) continue;
    REQUIRE(slope_from_locals(s) == slope_of_melody(m));
    ++tested;
  }
}

TEST_CASE("slope sign is exact") {
  REQUIRE(slope_sign(Melody{{0, 2, 4, 5}, ""}) == SlopeSign::positive);
  REQUIRE(slope_sign(Melody{{0, 4, 2, 5}, ""}) == SlopeSign::negative);
  REQUIRE_THROWS_AS(slope_sign(Melody{{5, 5, 7}, ""}), std::domain_error);
}

TEST_CASE("slope is invariant under transposition and inversion") {
  auto& gen = testing::rng();
  std::uniform_int_distribution<int> shift(-24, 24);
  for (int trial = 0; trial < 1000; ++trial) {
    Melody m = testing::random_melody(gen, 3, 12, -12, 24);
    int t = shift(gen);
    // Both regression sums are translation-invariant and degree-two
    // homogeneous, so compare them directly; this also covers degenerate fits.
    REQUIRE(slope_numerator(transpose(m, t)) == slope_numerator(m));
    REQUIRE(slope_denominator(transpose(m, t)) == slope_denominator(m));
    REQUIRE(slope_numerator(invert(m)) == slope_numerator(m));
    REQUIRE(slope_denominator(invert(m)) == slope_denominator(m));
    REQUIRE(slope_numerator(transpose(invert(m), t)) == slope_numerator(m));
    REQUIRE(slope_denominator(transpose(invert(m), t)) == slope_denominator(m));
  }
}

TEST_CASE("the Paganini theme and its inverted transposition share slope -4/3") {
  Melody paganini{{9, 12, 11, 9, 16}, ""};
  Melody rachmaninov{{8, 5, 6, 8, 1}, ""};
  REQUIRE(transpose(invert(paganini), 17) == rachmaninov);
  REQUIRE(slope_of_melody(paganini) == Rational(-4, 3));
  REQUIRE(slope_of_melody(rachmaninov) == Rational(-4, 3));
  REQUIRE(fixed_decimal(slope_of_melody(paganini), 3) == "-1.333");
  REQUIRE(fixed_decimal(slope_of_melody(Melody{{-2, 0, 1, -4}, ""}), 3) == "-1.071");
}

TEST_CASE("retrograde keeps the denominator iff the endpoint condition holds") {
  auto endpoint_condition = [](const Melody& m) {
    long long first = m.pitches.front();
    long long last = m.pitches.back();
    long long sum = 0;
    for (int p : m.pitches) sum += p;
    return first == last || static_cast<long long>(m.size()) * (first + last) == 2 * sum;
  };

  auto& gen = testing::rng();
  int both_sides[2] = {0, 0};
  for (int trial = 0; trial < 2000; ++trial) {
    Melody m = testing::random_melody(gen, 3, 12, -12, 24);
    bool equal = slope_denominator(retrograde(m)) == slope_denominator(m);
    REQUIRE(equal == endpoint_condition(m));
    ++both_sides[equal ? 1 : 0];
  }
  REQUIRE(both_sides[0] > 0);
  REQUIRE(both_sides[1] > 0);

  // Deterministic witnesses for each disjunct.
  Melody closed{{3, 7, 1, 3}, ""};  // starts and ends on the same pitch
  REQUIRE(slope_denominator(retrograde(closed)) == slope_denominator(closed));
  Melody balanced{{0, 2, 2, 4}, ""};  // (n+1)(first+last) == 2*sum with distinct endpoints
  REQUIRE(endpoint_condition(balanced));
  REQUIRE(balanced.pitches.front() != balanced.pitches.back());
  REQUIRE(slope_denominator(retrograde(balanced)) == slope_denominator(balanced));
}

TEST_CASE("melodies that open and close on one note keep their slope reversed") {
  auto& gen = testing::rng();
  int tested = 0;
  while (tested < 300) {
    Melody m = testing::random_melody(gen, 3, 12, -12, 24);
    m.pitches.back() = m.pitches.front();
    long long d = slope_denominator(m);
    if (d == 0) continue;
    REQUIRE(slope_of_melody(retrograde(m)) == slope_of_melody(m));
    ++tested;
  }
}

TEST_CASE("display rounding is half away from zero at fixed precision") {
  REQUIRE(fixed_decimal(Rational(13, 38), 3) == "0.342");
  REQUIRE(fixed_decimal(Rational(-23, 38), 3) == "-0.605");
  REQUIRE(fixed_decimal(Rational(72, 73), 5) == "0.98630");
  REQUIRE(fixed_decimal(Rational(3, 4), 3) == "0.750");
  REQUIRE(fixed_decimal(Rational(1, 2000), 3) == "0.001");
  REQUIRE(fixed_decimal(Rational(-1, 2000), 3) == "-0.001");
  REQUIRE(fixed_decimal(Rational(-1, 20000), 3) == "0.000");
  REQUIRE(fixed_decimal(Rational(7), 0) == "7");
}
