#include "chronoplan/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace chronoplan {

std::string render_grid(const EvolvingGraph& g, const std::vector<Travel>& travels) {
  std::ostringstream out;
  const int n = g.node_count();
  out << "t\\node";
  for (int u = 0; u < n; ++u) out << " x" << u;
  out << "\n";
  if (g.temporal_edge_count() == 0 && travels.empty()) return out.str();

  int max_time = g.lifetime();
  for (const Travel& tr : travels) {
    for (const Step& s : tr.steps()) max_time = std::max(max_time, s.time);
  }

  for (int t = 0; t <= max_time; ++t) {
    StaticGraph snap = g.snapshot(t);
    out << "t=" << t;
    for (int pad = static_cast<int>(std::to_string(t).size()); pad < 4; ++pad) out << ' ';
    for (int u = 0; u < n; ++u) {
      char mark = '.';
      for (const auto& [a, b] : snap.edges) {
        if (a == u || b == u) mark = 'o';
      }
      int hits = 0;
      char label = ' ';
      for (std::size_t k = 0; k < travels.size(); ++k) {
        for (const Step& s : travels[k].steps()) {
          if (s.node == u && s.time == t) {
            if (hits == 0) label = static_cast<char>('A' + (k % 26));
            ++hits;
            break;
          }
        }
      }
      if (hits > 1) mark = '+';
      else if (hits == 1) mark = label;
      // column width follows the "x<u>" header
      out << ' ' << mark;
      for (std::size_t pad = 1; pad < 1 + std::to_string(u).size(); ++pad) out << ' ';
    }
    out << " |";
    bool first = true;
    for (const auto& [a, b] : snap.edges) {
      out << (first ? " " : ", ") << a << "-" << b;
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

std::string render_dot(const EvolvingGraph& g, const std::vector<Travel>& travels) {
  std::ostringstream out;
  const int n = g.node_count();
  int max_time = g.lifetime();
  for (const Travel& tr : travels) {
    for (const Step& s : tr.steps()) max_time = std::max(max_time, s.time);
  }
  static const char* kColors[] = {"red", "blue", "green", "orange", "purple", "brown"};
  out << "digraph chronoplan {\n";
  out << "  rankdir=TB;\n  node [shape=circle, fontsize=10];\n";
  for (int t = 0; t <= max_time; ++t) {
    out << "  { rank=same;";
    for (int u = 0; u < n; ++u) out << " \"x" << u << "@" << t << "\";";
    out << " }\n";
  }
  for (int t = 0; t <= max_time; ++t) {
    StaticGraph snap = g.snapshot(t);
    for (const auto& [a, b] : snap.edges) {
      out << "  \"x" << a << "@" << t << "\" -> \"x" << b << "@" << t
          << "\" [dir=none, color=gray];\n";
    }
  }
  for (std::size_t k = 0; k < travels.size(); ++k) {
    const auto& steps = travels[k].steps();
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
      out << "  \"x" << steps[i].node << "@" << steps[i].time << "\" -> \"x" << steps[i + 1].node
          << "@" << steps[i + 1].time << "\" [color=" << kColors[k % 6]
          << ", penwidth=1.5];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace chronoplan
