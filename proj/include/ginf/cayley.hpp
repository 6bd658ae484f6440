#ifndef GINF_CAYLEY_HPP
#define GINF_CAYLEY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ginf/atoms.hpp"
#include "ginf/oracle.hpp"

namespace ginf {

inline constexpr std::size_t kDefaultElementCap = 2'000'000;
inline constexpr std::uint32_t kOutsideBall = UINT32_MAX;

/// Ball of radius R about the identity in the Cayley graph. Elements are
/// stored in breadth-first discovery order with generators tried in order.
struct BallGraph {
  std::size_t radius = 0;
  std::vector<OracleGenerator> generators;
  std::vector<ElementKey> elements;
  std::vector<std::uint32_t> distance;
  /// neighbors[i][g]: index of elements[i] * g, or kOutsideBall.
  std::vector<std::vector<std::uint32_t>> neighbors;
  /// BFS tree: parent index and the generator leading from it (root: self).
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> parent_generator;
  /// Elements with a Cayley-graph neighbor outside the ball.
  std::vector<char> frontier;

  std::size_t size() const { return elements.size(); }
  /// No element has a neighbor outside the ball: the group is finite.
  bool exhausted() const;
  /// Number of elements at each distance 0..R.
  std::vector<std::size_t> sphere_sizes() const;
  /// Deterministic text form, one element per line.
  std::string serialize() const;
};

/// Throws OracleBudgetExceeded, MemoryCapExceeded.
BallGraph build_ball(const GroupOracle &oracle, std::size_t radius,
                     std::size_t element_cap = kDefaultElementCap);

/// Checks the distance invariants; returns a description of the first
/// violation, or nullopt.
std::optional<std::string> check_ball_invariants(const BallGraph &ball);

struct EndEstimate {
  enum class Verdict { Stabilized, GrowingToInfinity, Inconclusive };

  std::size_t radius = 0;
  std::size_t r_min = 0;
  std::size_t r_max = 0;
  /// (r, number of components of the ball minus the open r-ball {d < r}
  /// that meet the frontier)
  std::vector<std::pair<std::size_t, std::size_t>> per_radius;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<EndCount> stabilized; // set for Stabilized
  std::string note;
};

std::string to_string(EndEstimate::Verdict v);

/// Outer-touching component counts for r in [r_min, r_max].
/// Throws WindowTooSmall unless r_min <= r_max <= R - 2.
EndEstimate estimate_ends(const BallGraph &ball, std::size_t r_min, std::size_t r_max);

/// Component labels of {d > r}; -1 for elements with d <= r.
std::vector<int> components_beyond(const BallGraph &ball, std::size_t r);

/// Up to k words (generator indices) along the BFS tree from the identity to
/// the least-keyed frontier element at distance R of each component of the
/// ball minus the identity.
std::vector<std::vector<std::size_t>> sample_geodesic_segments(const BallGraph &ball,
                                                               std::size_t k);

} // namespace ginf

#endif // GINF_CAYLEY_HPP
