// tables.hpp
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
// Regenerates the reference result tables (slope listings and rankings, sign
// censuses, transposed-distance tables, anthem slopes) as byte-stable CSV.
// Inputs come from the bundled corpus in data/.

#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "melograph/clustering.hpp"
#include "melograph/enumeration.hpp"
#include "melograph/format.hpp"
#include "melograph/frechet.hpp"
#include "melograph/melody_file.hpp"
#include "melograph/slope.hpp"

namespace melograph::tables {

struct TableFile {
  std::string name;
  std::string content;
};

namespace detail {

inline const Melody& require_melody(std::span<const Melody> ms, std::string_view name,
                                    const std::string& source) {
  const Melody* m = find_melody(ms, name);
  if (!m) {
    throw std::runtime_error("melody \"" + std::string(name) + "\" not found in " + source);
  }
  return *m;
}

inline std::string slope_listing(const PermutationFamily& f, int places) {
  std::string out = "melody,note names,slope\n";
  for (const Melody& m : f.melodies) {
    out += csv_field(pitch_tuple(m)) + ',' + csv_field(note_tuple(m)) + ',' +
           fixed_decimal(slope_of_melody(m), places) + '\n';
  }
  return out;
}

inline std::string ranking_listing(const std::vector<RankedMelody>& rows, bool bottom,
                                   int places) {
  std::string out = "ranking,melody,note names,slope\n";
  for (const RankedMelody& r : rows) {
    out += (bottom ? "-" : "") + ordinal(r.rank) + ',' + csv_field(pitch_tuple(r.melody)) + ',' +
           csv_field(note_tuple(r.melody)) + ',' + fixed_decimal(r.slope, places) + '\n';
  }
  return out;
}

inline std::string per_t_listing(const TdfdResult& r) {
  std::string out = "t,distance\n";
  for (const TransposedEntry& e : r.per_t) {
    out += std::to_string(e.t) + ',' + fixed_decimal(e.distance, 3) + '\n';
  }
  return out;
}

inline std::string census_label(int first, const std::vector<int>& rest) {
  std::string out = "{" + pitch_class_name(first);
  for (int p : rest) out += "," + pitch_class_name(p);
  out += "}";
  return out;
}

}  // namespace detail

/// Builds every regenerable table. `data_dir` must hold the bundled
/// anthems.jsonl and examples.jsonl corpora.
inline std::vector<TableFile> generate(const std::filesystem::path& data_dir) {
  std::vector<TableFile> files;

  // Four-tone slopes and the five/six-tone rankings.
  PermutationFamily m4 = family(0, {2, 4, 5});
  files.push_back({"table1.csv", detail::slope_listing(m4, 3)});

  PermutationFamily m5 = family(0, {2, 4, 5, 7});
  SlopeRanking r5 = rank_by_slope(m5, 3);
  files.push_back({"table2.csv", detail::ranking_listing(r5.top, false, 3)});
  files.push_back({"table3.csv", detail::ranking_listing(r5.bottom, true, 3)});

  PermutationFamily m6 = family(0, {2, 4, 5, 7, 9});
  SlopeRanking r6 = rank_by_slope(m6, 3);
  files.push_back({"table4.csv", detail::ranking_listing(r6.top, false, 5)});
  files.push_back({"table5.csv", detail::ranking_listing(r6.bottom, true, 5)});

  // Sign census per constituent set.
  {
    std::string out = "constituent,positive,negative,zero\n";
    const std::vector<std::vector<int>> sets = {{2, 4, 5, 7}, {2, 4, 5, 7, 9}, {2, 4, 5, 7, 9, 11}};
    for (const auto& rest : sets) {
      PermutationFamily f = family(0, rest);
      SlopeCensus c = census(f);
      out += csv_field(detail::census_label(0, rest)) + ',' + std::to_string(c.positive) + ',' +
             std::to_string(c.negative) + ',' + std::to_string(c.zero) + '\n';
    }
    files.push_back({"table6.csv", out});
  }

  auto examples = parse_melody_file(data_dir / "examples.jsonl", /*fail_fast=*/true).melodies;
  const Melody& run_c = detail::require_melody(examples, "C major run", "examples.jsonl");
  const Melody& turn_d = detail::require_melody(examples, "D major turn", "examples.jsonl");
  const Melody& arpeggio_c = detail::require_melody(examples, "C major arpeggio", "examples.jsonl");
  const Melody& cde = detail::require_melody(examples, "C D E", "examples.jsonl");

  files.push_back(
      {"table9.csv", detail::per_t_listing(tdfd(run_c, turn_d, TranspositionWindow{-5, 1}))});
  files.push_back(
      {"table10.csv", detail::per_t_listing(tdfd(run_c, arpeggio_c, TranspositionWindow{-5, 1}))});

  // Transposed distances from (0,2,4) to each of its permutations.
  {
    std::string out = "a,b,t,distance\n";
    std::vector<int> perm = cde.pitches;
    std::sort(perm.begin(), perm.end());
    do {
      Melody b{perm, ""};
      TdfdResult r = tdfd(cde, b);
      out += csv_field(pitch_tuple(cde)) + ',' + csv_field(pitch_tuple(b)) + ',' +
             std::to_string(r.t_star) + ',' + fixed_decimal(r.distance, 3) + '\n';
    } while (std::next_permutation(perm.begin(), perm.end()));
    files.push_back({"table11.csv", out});
  }

  auto anthems = parse_melody_file(data_dir / "anthems.jsonl", /*fail_fast=*/true).melodies;
  if (anthems.size() < 10) {
    throw std::runtime_error("anthems.jsonl: expected at least the ten national anthems");
  }
  {
    std::string out = "no.,name of country,national anthem,slope\n";
    for (std::size_t i = 0; i < 10; ++i) {
      out += std::to_string(i + 1) + ',' + csv_field(anthems[i].name) + ',' +
             csv_field(pitch_tuple(anthems[i])) + ',' +
             fixed_decimal(slope_of_melody(anthems[i]), 3) + '\n';
    }
    files.push_back({"table12.csv", out});
  }
  {
    const Melody& austria = detail::require_melody(anthems, "Austria", "anthems.jsonl");
    const Melody& hungary = detail::require_melody(anthems, "Hungary", "anthems.jsonl");
    files.push_back(
        {"table13.csv", detail::per_t_listing(tdfd(austria, hungary, TranspositionWindow{4, 10}))});
  }
  return files;
}

inline void write(const std::vector<TableFile>& files, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  for (const TableFile& f : files) {
    std::ofstream out(out_dir / f.name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (out_dir / f.name).string());
    out << f.content;
  }
}

}  // namespace melograph::tables
