// dot.hpp
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

#include <sstream>
#include <string>

#include "melograph/melody.hpp"
#include "melograph/symmetry.hpp"

namespace melograph {

namespace detail {
inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}
}  // namespace detail

/// M-graph as a Graphviz digraph. Vertex positions carry the lattice
/// coordinates so neato-style layout reproduces the geometry. With
/// `with_axis`, a dashed-line comment records the reflective axis when the
/// melody has one.
inline std::string to_dot(const Melody& m, bool with_axis = false) {
  MGraph g = m_graph(m);
  std::ostringstream os;
  os << "digraph " << detail::dot_quote(m.name.empty() ? "melody" : m.name) << " {\n";
  os << "  node [shape=circle, width=0.15, fixedsize=true, fontsize=8];\n";
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    const Point& p = g.points[i];
    os << "  p" << (i + 1) << " [pos=\"" << p.x << ',' << p.y << "!\", xlabel=\"(" << p.x << ", "
       << p.y << ")\"];\n";
  }
  for (std::size_t i = 0; i + 1 < g.points.size(); ++i) {
    os << "  p" << (i + 1) << " -> p" << (i + 2) << ";\n";
  }
  if (with_axis) {
    try {
      SymmetryReport report = detect_symmetry(m);
      if (report.symmetric && report.axis) {
        os << "  // axis of symmetry (dashed): " << line_equation(*report.axis) << "\n";
      } else {
        os << "  // no axis of symmetry\n";
      }
    } catch (const std::exception& e) {
      os << "  // axis of symmetry unavailable: " << e.what() << "\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace melograph
