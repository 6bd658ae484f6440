#ifndef GINF_COXETER_HPP
#define GINF_COXETER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ginf/atoms.hpp"
#include "ginf/bigint.hpp"
#include "ginf/labeled_graph.hpp"

namespace ginf {

/// Coxeter system (W, S) given by a presentation diagram. Generators are
/// the diagram vertices in their stored order.
class CoxeterSystem {
public:
  explicit CoxeterSystem(LabeledGraph diagram) : diagram_(std::move(diagram)) {}

  const LabeledGraph &diagram() const { return diagram_; }
  std::size_t rank() const { return diagram_.size(); }

  /// Order of st: 1 on the diagonal, the edge label when present, and 0 for
  /// a missing edge (infinite order).
  int m(std::size_t s, std::size_t t) const {
    return s == t ? 1 : diagram_.label(s, t);
  }

private:
  LabeledGraph diagram_;
};

/// Classical Coxeter-Dynkin convention: label-2 pairs carry no edge, labels
/// >= 3 are kept, and unrelated pairs get an explicit infinite edge.
struct DynkinDiagram {
  /// Label value standing for m = infinity.
  static constexpr int kInfinity = 0;

  struct Edge {
    std::size_t u;
    std::size_t v;
    int label;
    friend bool operator==(const Edge &, const Edge &) = default;
  };

  std::vector<std::string> vertices;
  std::vector<Edge> edges; // u < v, sorted

  friend bool operator==(const DynkinDiagram &, const DynkinDiagram &) = default;
};

DynkinDiagram to_dynkin(const LabeledGraph &presentation);
LabeledGraph from_dynkin(const DynkinDiagram &dynkin);

enum class CoxeterFamily { A, B, D, E, F, H, I2, Indefinite };

struct FamilyTag {
  CoxeterFamily family = CoxeterFamily::Indefinite;
  int rank = 0;  // number of generators in the component
  int label = 0; // m for I2(m)

  bool finite() const { return family != CoxeterFamily::Indefinite; }
  /// "A3", "I2(5)", "affine/indefinite", ...
  std::string to_string() const;
  /// Group order for finite families.
  std::optional<BigInt> order() const;

  friend bool operator==(const FamilyTag &, const FamilyTag &) = default;
};

struct FiniteTypeReport {
  struct Component {
    VertexSet vertices;
    FamilyTag tag;
  };

  bool is_finite = false;
  std::vector<Component> components;

  /// Product of the component orders when finite.
  std::optional<BigInt> order() const;
};

/// Catalog recognition of finite Coxeter groups; exact, no floating point.
FiniteTypeReport is_finite_type(const CoxeterSystem &sys);
bool is_finite_type(const LabeledGraph &diagram);

struct CoxeterEnds {
  EndCount ends = EndCount::Zero;
  /// Admissible clique separator witnessing more than one end.
  std::optional<VertexSet> separator;
  /// Two-ended decomposition: finite core plus two unrelated vertices
  /// joined to every core vertex by label-2 edges.
  struct TwoEnded {
    VertexSet core;
    std::size_t x;
    std::size_t y;
  };
  std::optional<TwoEnded> two_ended;
};

/// Number of ends of a Coxeter group from its presentation diagram.
/// Throws DiagramTooLarge beyond kMaxSeparatorVertices vertices.
CoxeterEnds coxeter_ends(const CoxeterSystem &sys);

struct ArtinEnds {
  /// True iff the one-endedness criterion applies (connected, >= 2 vertices).
  bool one_ended = false;
  EndCount ends = EndCount::One;
};

/// Throws EmptyDiagram.
ArtinEnds artin_one_ended(const LabeledGraph &diagram);

} // namespace ginf

#endif // GINF_COXETER_HPP
