#include "ginf/dot.hpp"

#include <array>
#include <sstream>
#include <vector>

namespace ginf {

namespace {

std::string quoted(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out + "\"";
}

constexpr std::array<const char *, 8> kPalette = {"lightblue", "salmon",  "palegreen", "gold",
                                                  "plum",      "orange",  "cyan",      "pink"};

} // namespace

std::string render_dot(const LabeledGraph &graph, const std::string &name) {
  std::ostringstream os;
  os << "graph " << quoted(name) << " {\n";
  for (const auto &v : graph.vertices())
    os << "  " << quoted(v) << ";\n";
  for (const auto &e : graph.edges())
    os << "  " << quoted(graph.name(e.u)) << " -- " << quoted(graph.name(e.v))
       << " [label=\"" << e.label << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string render_dot(const BallGraph &ball, const std::string &name,
                       std::optional<std::size_t> color_radius) {
  std::vector<int> comp;
  if (color_radius)
    comp = components_beyond(ball, *color_radius);
  std::ostringstream os;
  os << "graph " << quoted(name) << " {\n";
  for (std::size_t i = 0; i < ball.size(); ++i) {
    os << "  n" << i << " [label=\"d=" << ball.distance[i] << "\"";
    if (ball.frontier[i])
      os << ", shape=box";
    if (!comp.empty() && comp[i] >= 0)
      os << ", style=filled, fillcolor=" << kPalette[static_cast<std::size_t>(comp[i]) % kPalette.size()];
    os << "];\n";
  }
  for (std::size_t i = 0; i < ball.size(); ++i)
    for (std::size_t g = 0; g < ball.neighbors[i].size(); ++g) {
      auto j = ball.neighbors[i][g];
      if (j == kOutsideBall || j <= i)
        continue;
      os << "  n" << i << " -- n" << j << " [label=" << quoted(ball.generators[g].name) << "];\n";
    }
  os << "}\n";
  return os.str();
}

} // namespace ginf
