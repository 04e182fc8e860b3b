// note_names.hpp
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
// Scientific pitch notation <-> semitone numbers with C4 = 0. Input accepts
// '#' for sharps and 'b' or the flat sign for flats; rendering prefers sharps
// so the round trip is unambiguous.

#pragma once

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>

namespace melograph {

class NoteParseError : public std::invalid_argument {
 public:
  NoteParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses e.g. "C4" -> 0, "C#4" -> 1, "Bb3" -> -2, "A4" -> 9.
inline int parse_note(std::string_view s) {
  if (s.empty()) throw NoteParseError("empty note name", 0);
  int offset;
  switch (s[0]) {
    case 'C': offset = 0; break;
    case 'D': offset = 2; break;
    case 'E': offset = 4; break;
    case 'F': offset = 5; break;
    case 'G': offset = 7; break;
    case 'A': offset = 9; break;
    case 'B': offset = 11; break;
    default: throw NoteParseError("expected note letter A-G", 0);
  }
  std::size_t i = 1;
  int accidental = 0;
  if (i < s.size()) {
    if (s[i] == '#') {
      accidental = 1;
      ++i;
    } else if (s[i] == 'b') {
      accidental = -1;
      ++i;
    } else if (s.substr(i).starts_with("♭")) {  // flat sign
      accidental = -1;
      i += std::string_view("♭").size();
    }
  }
  if (i >= s.size()) throw NoteParseError("missing octave number", i);
  int octave = 0;
  auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), octave);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw NoteParseError("malformed octave number", i);
  }
  return 12 * (octave - 4) + offset + accidental;
}

namespace detail {
inline constexpr const char* kSharpNames[12] = {"C",  "C#", "D",  "D#", "E",  "F",
                                                "F#", "G",  "G#", "A",  "A#", "B"};
}

/// Renders with sharps, e.g. 0 -> "C4", 1 -> "C#4", -2 -> "A#3".
inline std::string render_note(int pitch) {
  int oct = pitch >= 0 ? pitch / 12 : -((-pitch + 11) / 12);
  int pc = pitch - 12 * oct;
  return std::string(detail::kSharpNames[pc]) + std::to_string(oct + 4);
}

/// Octave-less pitch-class name, used in table rendering.
inline std::string pitch_class_name(int pitch) {
  int pc = ((pitch % 12) + 12) % 12;
  return detail::kSharpNames[pc];
}

}  // namespace melograph
