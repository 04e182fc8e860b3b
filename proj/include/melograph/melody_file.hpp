// melody_file.hpp
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
// Line-delimited melody files: one JSON object per line with an optional
// "name" and exactly one of "pitches" (integers) or "note_names" (strings).
// See docs/format.md for the full grammar.

#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "melograph/melody.hpp"
#include "melograph/note_names.hpp"

namespace melograph {

struct FileDiagnostic {
  std::size_t line = 0;
  std::string message;
};

class MelodyFileError : public std::runtime_error {
 public:
  MelodyFileError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct MelodyFileResult {
  std::vector<Melody> melodies;
  std::vector<FileDiagnostic> diagnostics;
};

inline MelodyFileResult parse_melody_stream(std::istream& in, bool fail_fast = false) {
  MelodyFileResult result;
  std::string line;
  std::size_t lineno = 0;
  auto report = [&](const std::string& message) {
    if (fail_fast) throw MelodyFileError(lineno, message);
    result.diagnostics.push_back({lineno, message});
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object()) {
      report("not a JSON object");
      continue;
    }
    Melody m;
    if (record.contains("name")) {
      if (!record["name"].is_string()) {
        report("\"name\" must be a string");
        continue;
      }
      m.name = record["name"].get<std::string>();
    }
    bool has_pitches = record.contains("pitches");
    bool has_notes = record.contains("note_names");
    if (has_pitches == has_notes) {
      report("record needs exactly one of \"pitches\" or \"note_names\"");
      continue;
    }
    bool ok = true;
    if (has_pitches) {
      if (!record["pitches"].is_array()) {
        report("\"pitches\" must be an array of integers");
        continue;
      }
      for (const auto& item : record["pitches"]) {
        if (!item.is_number_integer()) {
          report("\"pitches\" must be an array of integers");
          ok = false;
          break;
        }
        m.pitches.push_back(item.get<int>());
      }
    } else {
      if (!record["note_names"].is_array()) {
        report("\"note_names\" must be an array of strings");
        continue;
      }
      for (const auto& item : record["note_names"]) {
        if (!item.is_string()) {
          report("\"note_names\" must be an array of strings");
          ok = false;
          break;
        }
        try {
          m.pitches.push_back(parse_note(item.get<std::string>()));
        } catch (const NoteParseError& e) {
          report("note \"" + item.get<std::string>() + "\": " + e.what());
          ok = false;
          break;
        }
      }
    }
    if (ok) result.melodies.push_back(std::move(m));
  }
  return result;
}

inline MelodyFileResult parse_melody_file(const std::filesystem::path& path,
                                          bool fail_fast = false) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open melody file: " + path.string());
  return parse_melody_stream(in, fail_fast);
}

/// Lookup by name; nullptr when absent.
inline const Melody* find_melody(std::span<const Melody> ms, std::string_view name) {
  for (const Melody& m : ms) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

}  // namespace melograph
