#ifndef GINF_GRAPH_PRODUCT_HPP
#define GINF_GRAPH_PRODUCT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ginf/atoms.hpp"
#include "ginf/bigint.hpp"
#include "ginf/labeled_graph.hpp"

namespace ginf {

enum class Tri { Yes, No, Unknown };
std::string to_string(Tri t);

/// What is known about one vertex group.
struct VertexProfile {
  std::optional<bool> finite;
  std::optional<BigInt> order; // set only for finite groups of known order
  std::optional<EndCount> ends;
  Tri semistable = Tri::Unknown;
  Tri finitely_presented = Tri::Unknown;

  static VertexProfile finite_group(BigInt order);
  static VertexProfile infinite_group(EndCount ends, Tri semistable = Tri::Unknown,
                                      Tri finitely_presented = Tri::Unknown);

  friend bool operator==(const VertexProfile &, const VertexProfile &) = default;
};

/// Graph product on `graph` (edge labels are ignored) with a profile for
/// every vertex, indexed like the graph's vertices.
struct GraphProductSpec {
  LabeledGraph graph;
  std::vector<VertexProfile> profiles;

  /// Builds a spec from a name-keyed profile map; every vertex needs an entry.
  static GraphProductSpec from_map(LabeledGraph graph,
                                   const std::map<std::string, VertexProfile> &profiles);
};

struct GraphProductEnds {
  enum class Witness {
    CompleteFinite,  // complete graph, every vertex group finite
    CompleteOneMultiEnded, // one multi-ended vertex group, the rest finite
    VisualSplitting, // splitting over a finite complete subgraph
    JoinWithDihedral, // finite dominating clique joined with Z2 * Z2
    NoSplitting
  };

  EndCount ends = EndCount::One;
  Witness witness = Witness::NoSplitting;
  std::optional<std::size_t> vertex;  // CompleteOneMultiEnded
  VertexSet gamma1;                   // splitting side / dominating clique
  VertexSet gamma2;                   // other side / the Z2 * Z2 pair
  VertexSet intersection;             // VisualSplitting separator
};

std::string to_string(GraphProductEnds::Witness w);

/// Number of ends of the graph product. Throws UnknownProfile when a vertex
/// lacks finiteness or end information, DiagramTooLarge past the separator cap.
GraphProductEnds graph_product_ends(const GraphProductSpec &spec);

struct GraphProductSemistability {
  enum class Verdict { Semistable, NotSemistable, Unknown };
  Verdict verdict = Verdict::Unknown;
  /// Vertex whose group and link defeat semistability (or might).
  std::optional<std::size_t> vertex;
  std::string reason;
};

std::string to_string(GraphProductSemistability::Verdict v);

/// Throws DisconnectedGraph.
GraphProductSemistability graph_product_semistable(const GraphProductSpec &spec);

} // namespace ginf

#endif // GINF_GRAPH_PRODUCT_HPP
