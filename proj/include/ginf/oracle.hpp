#ifndef GINF_ORACLE_HPP
#define GINF_ORACLE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ginf/coxeter.hpp"
#include "ginf/labeled_graph.hpp"

namespace ginf {

/// Canonical encoding of a group element; equal keys iff equal elements.
using ElementKey = std::vector<std::int32_t>;

struct OracleGenerator {
  std::string name;
  bool involution = false;
};

/// Word-problem oracle over a symmetric generating set. Generators that are
/// not involutions come with their inverse as a separate entry.
class GroupOracle {
public:
  virtual ~GroupOracle() = default;

  virtual std::string description() const = 0;
  virtual const std::vector<OracleGenerator> &generators() const = 0;
  virtual ElementKey identity() const = 0;
  /// Key of (element * generator). Throws OracleBudgetExceeded.
  virtual ElementKey multiply(const ElementKey &element, std::size_t generator) const = 0;

  /// Key of the element spelled by a word in generator indices.
  ElementKey normalize(const std::vector<std::size_t> &word) const;
};

using OraclePtr = std::shared_ptr<const GroupOracle>;

/// Z^n with generators e1, E1, e2, E2, ...
OraclePtr free_abelian_oracle(std::size_t rank);
/// Free group of the given rank, keys are freely reduced words.
OraclePtr free_oracle(std::size_t rank);
/// Finite group from a right-multiplication table: table[element][generator]
/// gives the product; element 0 is the identity.
OraclePtr finite_table_oracle(std::string description, std::vector<OracleGenerator> gens,
                              std::vector<std::vector<std::size_t>> table);
/// Z/m through a finite table (one involution when m = 2).
OraclePtr cyclic_oracle(std::size_t m);
/// Dihedral group of order 2m generated by two reflections.
OraclePtr dihedral_oracle(std::size_t m);
/// Coxeter group through the braid-move normal form.
OraclePtr coxeter_oracle(const CoxeterSystem &sys, std::size_t orbit_budget = 200000);
/// Graph product of cyclic groups; `orders[v]` is the order of the vertex
/// group (0 for Z). Keys are lexicographically least syllable sequences.
OraclePtr cyclic_graph_product_oracle(const LabeledGraph &graph, std::vector<std::size_t> orders);

enum class CompositionKind { DirectProduct, FreeProduct };

/// Direct products use concatenated factor keys; free products use
/// alternating-syllable normal forms. Throws InvalidStructure on no parts.
OraclePtr compose_oracles(CompositionKind kind, std::vector<OraclePtr> parts);

} // namespace ginf

#endif // GINF_ORACLE_HPP
