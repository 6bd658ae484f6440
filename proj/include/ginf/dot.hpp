#ifndef GINF_DOT_HPP
#define GINF_DOT_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "ginf/cayley.hpp"
#include "ginf/labeled_graph.hpp"

namespace ginf {

/// Undirected DOT graph; nodes in vertex order, edges in (u, v) order, each
/// edge carrying its label.
std::string render_dot(const LabeledGraph &graph, const std::string &name = "diagram");

/// Cayley ball in DOT. Nodes are annotated with their distance to the
/// identity; each edge is emitted once, labeled by the generator leading
/// from the lower-indexed endpoint. With `color_radius` set, elements beyond
/// that radius are filled by their component of {d > r} (palette cycles).
std::string render_dot(const BallGraph &ball, const std::string &name = "ball",
                       std::optional<std::size_t> color_radius = std::nullopt);

} // namespace ginf

#endif // GINF_DOT_HPP
