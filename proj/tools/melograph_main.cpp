// melograph_main.cpp
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
// Command-line front end. Exit codes: 0 success, 2 usage error, 3 data error.

#include <charconv>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "melograph/melograph.hpp"

namespace {

using namespace melograph;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Data problem that was already reported line by line.
struct ReportedDataError : std::runtime_error {
  ReportedDataError() : std::runtime_error("") {}
};

int parse_int(std::string_view s, const std::string& what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError("malformed " + what + ": \"" + std::string(s) + "\"");
  }
  return value;
}

TranspositionWindow parse_window(const std::string& spec) {
  std::size_t sep = spec.find("..", 1);  // skip a leading minus sign
  if (sep == std::string::npos) {
    throw UsageError("malformed window \"" + spec + "\": expected LO..HI");
  }
  TranspositionWindow w;
  w.lo = parse_int(spec.substr(0, sep), "window bound");
  w.hi = parse_int(spec.substr(sep + 2), "window bound");
  if (w.lo > w.hi) throw UsageError("malformed window \"" + spec + "\": LO exceeds HI");
  return w;
}

std::vector<int> parse_pitch_set(const std::string& spec) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string::npos) comma = spec.size();
    out.push_back(parse_int(std::string_view(spec).substr(pos, comma - pos), "pitch set"));
    pos = comma + 1;
    if (comma == spec.size()) break;
  }
  return out;
}

WindowPolicy parse_window_policy(const std::string& spec) {
  WindowPolicy policy;
  if (spec.empty() || spec == "mean") return policy;
  if (spec.rfind("radius=", 0) == 0) {
    policy.radius = parse_int(spec.substr(7), "radius");
    return policy;
  }
  if (spec.rfind("fixed=", 0) == 0) {
    policy.fixed = parse_window(spec.substr(6));
    return policy;
  }
  throw UsageError("unknown window policy \"" + spec + "\" (use mean, radius=N, or fixed=LO..HI)");
}

std::vector<Melody> load_melodies(const std::string& path) {
  MelodyFileResult r = parse_melody_file(path);
  if (!r.diagnostics.empty()) {
    for (const FileDiagnostic& d : r.diagnostics) {
      std::cerr << path << ": line " << d.line << ": " << d.message << "\n";
    }
    throw ReportedDataError();
  }
  return r.melodies;
}

std::string display_name(const Melody& m, std::size_t index) {
  return m.name.empty() ? "#" + std::to_string(index + 1) : m.name;
}

const Melody& melody_by_name(const std::vector<Melody>& ms, const std::string& name) {
  const Melody* m = find_melody(ms, name);
  if (!m) throw UsageError("unknown melody name: " + name);
  return *m;
}

const char* sign_word(SlopeSign s) {
  switch (s) {
    case SlopeSign::positive: return "positive";
    case SlopeSign::negative: return "negative";
    case SlopeSign::zero: return "zero";
  }
  return "?";
}

int cmd_slope(const std::string& file) {
  auto melodies = load_melodies(file);
  bool failed = false;
  for (std::size_t i = 0; i < melodies.size(); ++i) {
    const std::string label = display_name(melodies[i], i);
    try {
      Rational s = slope_of_melody(melodies[i]);
      std::cout << label << ": slope " << s << " = " << fixed_decimal(s, 3) << " ("
                << sign_word(slope_sign(melodies[i])) << ")\n";
    } catch (const std::exception& e) {
      std::cerr << label << ": error: " << e.what() << "\n";
      failed = true;
    }
  }
  return failed ? 3 : 0;
}

int cmd_graph(const std::string& file, bool dot, bool axis) {
  auto melodies = load_melodies(file);
  bool failed = false;
  for (std::size_t i = 0; i < melodies.size(); ++i) {
    const std::string label = display_name(melodies[i], i);
    try {
      if (dot) {
        std::cout << to_dot(melodies[i], axis);
      } else {
        MGraph g = m_graph(melodies[i]);
        std::cout << label << ":";
        for (const Point& p : g.points) std::cout << " (" << p.x << ',' << p.y << ')';
        std::cout << "\n";
      }
    } catch (const std::exception& e) {
      std::cerr << label << ": error: " << e.what() << "\n";
      failed = true;
    }
  }
  return failed ? 3 : 0;
}

int cmd_symmetry(const std::string& file) {
  auto melodies = load_melodies(file);
  bool failed = false;
  for (std::size_t i = 0; i < melodies.size(); ++i) {
    const std::string label = display_name(melodies[i], i);
    try {
      SymmetryReport r = detect_symmetry(melodies[i]);
      if (r.symmetric) {
        std::cout << label << ": symmetric, axis " << line_equation(*r.axis) << " ["
                  << to_string(*r.case_tag) << "]\n";
      } else {
        std::cout << label << ": not symmetric\n";
      }
    } catch (const std::exception& e) {
      std::cerr << label << ": error: " << e.what() << "\n";
      failed = true;
    }
  }
  return failed ? 3 : 0;
}

int cmd_dfd(const std::string& file, const std::string& a, const std::string& b) {
  auto melodies = load_melodies(file);
  DfdResult r = dfd_melody(melody_by_name(melodies, a), melody_by_name(melodies, b));
  std::cout << "distance = " << fixed_decimal(r.distance, 3) << " (squared "
            << r.squared_distance << ")\n";
  std::cout << "coupling:";
  for (const auto& [i, j] : r.coupling.pairs) std::cout << " (" << i << ',' << j << ')';
  std::cout << "\n";
  return 0;
}

int cmd_tdfd(const std::string& file, const std::string& a, const std::string& b,
             const std::string& window_spec) {
  auto melodies = load_melodies(file);
  std::optional<TranspositionWindow> window;
  if (!window_spec.empty()) window = parse_window(window_spec);
  TdfdResult r = tdfd(melody_by_name(melodies, a), melody_by_name(melodies, b), window);
  std::cout << "window: t in [" << r.window.lo << ", " << r.window.hi << "]\n";
  std::cout << "t,distance\n";
  for (const TransposedEntry& e : r.per_t) {
    std::cout << e.t << ',' << fixed_decimal(e.distance, 3) << "\n";
  }
  std::cout << "minimum: " << fixed_decimal(r.distance, 3) << " at t = " << r.t_star << "\n";
  return 0;
}

int cmd_cluster(const std::string& file, const std::string& policy_spec) {
  auto melodies = load_melodies(file);
  WindowPolicy policy = parse_window_policy(policy_spec);
  DistanceMatrix dm = distance_matrix(melodies, policy);

  std::cout << "label";
  for (const std::string& l : dm.labels) std::cout << ',' << csv_field(l);
  std::cout << "\n";
  for (std::size_t i = 0; i < dm.size(); ++i) {
    std::cout << csv_field(dm.labels[i]);
    for (std::size_t j = 0; j < dm.size(); ++j) std::cout << ',' << fixed_decimal(dm.d[i][j], 3);
    std::cout << "\n";
  }
  std::cout << "\n";

  MergeTree tree = upgma(dm);
  auto member_list = [&](const std::vector<std::size_t>& members) {
    std::string out = "{";
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (k > 0) out += ", ";
      out += dm.labels[members[k]];
    }
    return out + "}";
  };
  for (std::size_t k = 0; k < tree.merges.size(); ++k) {
    const Merge& m = tree.merges[k];
    std::cout << "merge " << (k + 1) << ": " << member_list(m.left) << " + "
              << member_list(m.right) << " -> " << fixed_decimal(m.distance, 3) << "\n";
  }
  return 0;
}

int cmd_enumerate(int first, const std::string& set_spec, int top) {
  PermutationFamily f = family(first, parse_pitch_set(set_spec));
  int k = std::min<int>(top, static_cast<int>(f.melodies.size()));
  SlopeRanking r = rank_by_slope(f, k);
  std::cout << "ranking,melody,note names,slope\n";
  for (const RankedMelody& e : r.top) {
    std::cout << ordinal(e.rank) << ',' << csv_field(pitch_tuple(e.melody)) << ','
              << csv_field(note_tuple(e.melody)) << ',' << fixed_decimal(e.slope, 3) << "\n";
  }
  for (const RankedMelody& e : r.bottom) {
    std::cout << '-' << ordinal(e.rank) << ',' << csv_field(pitch_tuple(e.melody)) << ','
              << csv_field(note_tuple(e.melody)) << ',' << fixed_decimal(e.slope, 3) << "\n";
  }
  SlopeCensus c = census(f);
  std::cout << "census: positive " << c.positive << ", negative " << c.negative << ", zero "
            << c.zero << "\n";
  return 0;
}

int cmd_tables(const std::string& data_dir, const std::string& out_dir) {
  auto files = tables::generate(data_dir);
  tables::write(files, out_dir);
  for (const auto& f : files) std::cout << "wrote " << out_dir << '/' << f.name << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"M-graph melody analysis: exact slopes, reflective symmetry, transposed "
               "discrete Frechet distances, and group-average clustering"};
  app.require_subcommand(1);

  std::string file, name_a, name_b, window_spec, policy_spec, set_spec;
  std::string data_dir = "data", out_dir = "tables";
  bool dot = false, axis = false;
  int first = 0, top = 3;

  CLI::App* slope = app.add_subcommand("slope", "Slope of each melody in a file");
  slope->add_option("file", file, "melody file")->required();

  CLI::App* graph = app.add_subcommand("graph", "M-graph vertices, optionally as DOT");
  graph->add_option("file", file, "melody file")->required();
  graph->add_flag("--dot", dot, "emit Graphviz DOT");
  graph->add_flag("--axis", axis, "annotate the symmetry axis (with --dot)");

  CLI::App* symmetry = app.add_subcommand("symmetry", "Reflective-symmetry report per melody");
  symmetry->add_option("file", file, "melody file")->required();

  CLI::App* dfd_cmd = app.add_subcommand("dfd", "Discrete Frechet distance between two melodies");
  dfd_cmd->add_option("file", file, "melody file")->required();
  dfd_cmd->add_option("nameA", name_a, "first melody name")->required();
  dfd_cmd->add_option("nameB", name_b, "second melody name")->required();

  CLI::App* tdfd_cmd =
      app.add_subcommand("tdfd", "Transposed discrete Frechet distance between two melodies");
  tdfd_cmd->add_option("file", file, "melody file")->required();
  tdfd_cmd->add_option("nameA", name_a, "first melody name")->required();
  tdfd_cmd->add_option("nameB", name_b, "second melody name")->required();
  tdfd_cmd->add_option("--window", window_spec, "transposition window LO..HI");

  CLI::App* cluster = app.add_subcommand("cluster", "Distance matrix and group-average merges");
  cluster->add_option("file", file, "melody file")->required();
  cluster->add_option("--window-policy", policy_spec, "mean, radius=N, or fixed=LO..HI");

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "Slope ranking and census of a permutation family");
  enumerate->add_option("--first", first, "fixed first pitch")->required();
  enumerate->add_option("--set", set_spec, "comma-separated remaining pitches")->required();
  enumerate->add_option("--top", top, "rows in each ranking direction");

  CLI::App* tables_cmd = app.add_subcommand("tables", "Regenerate the reference tables");
  tables_cmd->add_option("--data", data_dir, "bundled corpus directory");
  tables_cmd->add_option("--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(slope)) return cmd_slope(file);
    if (app.got_subcommand(graph)) return cmd_graph(file, dot, axis);
    if (app.got_subcommand(symmetry)) return cmd_symmetry(file);
    if (app.got_subcommand(dfd_cmd)) return cmd_dfd(file, name_a, name_b);
    if (app.got_subcommand(tdfd_cmd)) return cmd_tdfd(file, name_a, name_b, window_spec);
    if (app.got_subcommand(cluster)) return cmd_cluster(file, policy_spec);
    if (app.got_subcommand(enumerate)) return cmd_enumerate(first, set_spec, top);
    if (app.got_subcommand(tables_cmd)) return cmd_tables(data_dir, out_dir);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ReportedDataError&) {
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
