#ifndef GINF_SIMPLICIAL_HPP
#define GINF_SIMPLICIAL_HPP

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ginf/bigint.hpp"
#include "ginf/graph_product.hpp"
#include "ginf/labeled_graph.hpp"

namespace ginf {

/// Two-dimensional simplicial complex. Edges and triangles are stored as
/// sorted vertex-index tuples, sorted lexicographically.
class SimplicialComplex2 {
public:
  using Edge = std::pair<std::size_t, std::size_t>;
  using Triangle = std::array<std::size_t, 3>;

  SimplicialComplex2() = default;
  /// Throws InvalidStructure on duplicates, out-of-range indices, or a
  /// triangle whose edges are missing.
  SimplicialComplex2(std::vector<std::string> vertices, std::vector<Edge> edges,
                     std::vector<Triangle> triangles);

  const std::vector<std::string> &vertices() const { return vertices_; }
  const std::vector<Edge> &edges() const { return edges_; }
  const std::vector<Triangle> &triangles() const { return triangles_; }

  /// 1-skeleton as a graph with every edge labeled 2.
  LabeledGraph one_skeleton() const;

  friend bool operator==(const SimplicialComplex2 &, const SimplicialComplex2 &) = default;

private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<Triangle> triangles_;
};

/// Flag completion of a graph: every 3-clique becomes a triangle.
SimplicialComplex2 flag_complex(const LabeledGraph &g);

/// True iff every 3-clique of the 1-skeleton is a triangle.
bool is_flag(const SimplicialComplex2 &l);

/// Vertices whose removal disconnects the 1-skeleton.
std::vector<std::size_t> cut_vertices(const SimplicialComplex2 &l);

/// Integral first homology Z^rank + torsion.
struct Homology1 {
  std::size_t rank = 0;
  std::vector<BigInt> torsion; // invariant factors > 1
  bool trivial() const { return rank == 0 && torsion.empty(); }
  std::string to_string() const;
};

Homology1 first_homology(const SimplicialComplex2 &l);

inline constexpr std::size_t kDefaultTietzeBudget = 10000;

struct SimpleConnectivityResult {
  Tri answer = Tri::Unknown;
  std::string reason;
  std::optional<std::size_t> cut_vertex;
  std::optional<Homology1> h1;
  std::size_t tietze_steps = 0;
};

/// Whether the right-angled Artin group on the flag complex `l` is simply
/// connected at infinity. Throws NotFlag, ExcludedComplex.
SimpleConnectivityResult raag_simply_connected_at_infinity(
    const SimplicialComplex2 &l, std::size_t tietze_budget = kDefaultTietzeBudget);

} // namespace ginf

#endif // GINF_SIMPLICIAL_HPP
