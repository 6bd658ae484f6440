#ifndef GINF_LABELED_GRAPH_HPP
#define GINF_LABELED_GRAPH_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ginf {

/// Sorted list of vertex indices.
using VertexSet = std::vector<std::size_t>;

/// Finite simple graph whose edges carry an integer label m >= 2.
///
/// Presentation-diagram convention: an edge labeled m records the relation
/// of length m between its endpoints; a missing edge means "no relation"
/// (m = infinity). Vertex order is the declaration order and doubles as the
/// generator order wherever a group is built from the graph.
class LabeledGraph {
public:
  struct Edge {
    std::size_t u;
    std::size_t v;
    int label;

    friend bool operator==(const Edge &, const Edge &) = default;
  };

  LabeledGraph() = default;
  explicit LabeledGraph(std::vector<std::string> vertices);

  void add_edge(std::size_t u, std::size_t v, int label);
  void add_edge(const std::string &u, const std::string &v, int label);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }

  const std::vector<std::string> &vertices() const { return names_; }
  const std::string &name(std::size_t v) const { return names_.at(v); }

  std::optional<std::size_t> index_of(const std::string &name) const;
  /// Throws UnknownVertex.
  std::size_t require_index(const std::string &name) const;

  /// Label of the edge {u, v}, or 0 when absent.
  int label(std::size_t u, std::size_t v) const { return labels_[u * size() + v]; }
  bool adjacent(std::size_t u, std::size_t v) const { return label(u, v) != 0; }

  /// Edges with u < v, ordered by (u, v).
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;
  std::vector<std::size_t> neighbors(std::size_t v) const;

  friend bool operator==(const LabeledGraph &, const LabeledGraph &) = default;

private:
  std::vector<std::string> names_;
  std::vector<int> labels_;
};

LabeledGraph induced_subgraph(const LabeledGraph &g, const VertexSet &vs);
/// Name-based variant; throws UnknownVertex.
LabeledGraph induced_subgraph(const LabeledGraph &g,
                              const std::vector<std::string> &names);

struct LinkAndStar {
  LabeledGraph link;
  LabeledGraph star;
};

LinkAndStar link_and_star(const LabeledGraph &g, std::size_t v);
LinkAndStar link_and_star(const LabeledGraph &g, const std::string &v);

/// Connected components of g restricted to the vertices not in `removed`,
/// each sorted, listed by smallest member.
std::vector<VertexSet> connected_components(const LabeledGraph &g,
                                            const VertexSet &removed = {});
bool is_connected(const LabeledGraph &g);
bool is_clique(const LabeledGraph &g, const VertexSet &vs);
bool is_complete(const LabeledGraph &g);

/// Upper bound on |V| for the exhaustive separator search.
inline constexpr std::size_t kMaxSeparatorVertices = 24;

using VertexSetPredicate = std::function<bool(const VertexSet &)>;

/// Every clique K (the empty set included) with admissible(K) such that
/// removing K leaves at least two components. Sorted by size, then
/// lexicographically by vertex index. Throws DiagramTooLarge above
/// kMaxSeparatorVertices.
std::vector<VertexSet> enumerate_clique_separators(const LabeledGraph &g,
                                                   const VertexSetPredicate &admissible);

std::vector<std::string> vertex_names(const LabeledGraph &g, const VertexSet &vs);

} // namespace ginf

#endif // GINF_LABELED_GRAPH_HPP
