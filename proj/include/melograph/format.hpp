// format.hpp
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
// Fixed-point rendering for tables and CSV output. Rationals are rounded in
// exact integer arithmetic, half away from zero, so displayed values are
// byte-stable and independent of floating point.

#pragma once

#include <cstdio>
#include <string>
#include <string_view>

#include "melograph/melody.hpp"
#include "melograph/note_names.hpp"
#include "melograph/rational.hpp"

namespace melograph {

inline std::string fixed_decimal(const Rational& r, int places) {
  using detail::int128;
  int128 scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  int128 num = detail::abs128(r.num());
  int128 den = r.den();
  int128 q = num * scale / den;
  if (2 * (num * scale % den) >= den) ++q;
  std::string out;
  if (r.num() < 0 && q != 0) out += '-';
  out += detail::to_string128(q / scale);
  if (places > 0) {
    std::string frac = detail::to_string128(q % scale);
    out += '.';
    out.append(static_cast<std::size_t>(places) - frac.size(), '0');
    out += frac;
  }
  return out;
}

inline std::string fixed_decimal(double v, int places) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", places, v);
  std::string out = buf;
  if (out.find_first_of("123456789") == std::string::npos && out[0] == '-') {
    out.erase(0, 1);  // never print "-0.000"
  }
  return out;
}

/// Quotes a CSV field when it contains a comma, quote, or newline.
inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

/// "(0,2,5,4)"
inline std::string pitch_tuple(const Melody& m) {
  std::string out = "(";
  for (std::size_t i = 0; i < m.pitches.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(m.pitches[i]);
  }
  out += ')';
  return out;
}

/// "(C,D,F,E)" from pitch classes, octave-less.
inline std::string note_tuple(const Melody& m) {
  std::string out = "(";
  for (std::size_t i = 0; i < m.pitches.size(); ++i) {
    if (i > 0) out += ',';
    out += pitch_class_name(m.pitches[i]);
  }
  out += ')';
  return out;
}

/// Competition-rank label: 1 -> "1st", 2 -> "2nd", 3 -> "3rd", 11 -> "11th".
inline std::string ordinal(int rank) {
  int mod100 = rank % 100;
  int mod10 = rank % 10;
  const char* suffix = "th";
  if (mod100 < 11 || mod100 > 13) {
    if (mod10 == 1) suffix = "st";
    else if (mod10 == 2) suffix = "nd";
    else if (mod10 == 3) suffix = "rd";
  }
  return std::to_string(rank) + suffix;
}

}  // namespace melograph
