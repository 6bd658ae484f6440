#ifndef GINF_GROUP_REGISTRY_HPP
#define GINF_GROUP_REGISTRY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ginf/atoms.hpp"
#include "ginf/labeled_graph.hpp"

namespace ginf {

/// Declarative group constructors. Fields named after a role hold the
/// registry name of another group.
namespace expr {

struct Known {
  std::string name;
  friend bool operator==(const Known &, const Known &) = default;
};

struct Finite {
  std::uint64_t order = 1;
  friend bool operator==(const Finite &, const Finite &) = default;
};

struct FreeAbelian {
  std::uint32_t rank = 0;
  friend bool operator==(const FreeAbelian &, const FreeAbelian &) = default;
};

struct Free {
  std::uint32_t rank = 0;
  friend bool operator==(const Free &, const Free &) = default;
};

struct Coxeter {
  LabeledGraph diagram;
  friend bool operator==(const Coxeter &, const Coxeter &) = default;
};

struct Artin {
  LabeledGraph diagram;
  friend bool operator==(const Artin &, const Artin &) = default;
};

/// Edge labels of `graph` are irrelevant (stored as 2). `vertex_groups[i]`
/// names the group sitting on vertex i.
struct GraphProduct {
  LabeledGraph graph;
  std::vector<std::string> vertex_groups;
  friend bool operator==(const GraphProduct &, const GraphProduct &) = default;
};

/// A *_C B. `c_index_finite_in_both` asserts that C is a proper subgroup of
/// finite index in both factors; `reduced` asserts C differs from A and B.
struct Amalgam {
  std::string a, b, c;
  bool edge_finite = false;
  bool c_index_finite_in_both = false;
  bool reduced = false;
  friend bool operator==(const Amalgam &, const Amalgam &) = default;
};

/// HNN extension of `base` along the associated subgroup `assoc`.
struct Hnn {
  std::string base, assoc;
  bool ascending = false;
  bool finite_index_image = false;
  friend bool operator==(const Hnn &, const Hnn &) = default;
};

/// 1 -> kernel -> G -> quotient -> 1
struct Extension {
  std::string kernel, quotient;
  friend bool operator==(const Extension &, const Extension &) = default;
};

struct DirectProduct {
  std::vector<std::string> parts;
  friend bool operator==(const DirectProduct &, const DirectProduct &) = default;
};

/// The group `ambient` together with a commensurated subgroup `subgroup`.
/// The pair names the ambient group; facts are shared between the two.
struct CommensuratedPair {
  std::string ambient, subgroup;
  bool infinite_index = false;
  bool normal = false;
  bool subnormal = false;
  bool subcommensurated = false;
  friend bool operator==(const CommensuratedPair &, const CommensuratedPair &) = default;
};

} // namespace expr

using GroupExpr =
    std::variant<expr::Known, expr::Finite, expr::FreeAbelian, expr::Free,
                 expr::Coxeter, expr::Artin, expr::GraphProduct, expr::Amalgam,
                 expr::Hnn, expr::Extension, expr::DirectProduct,
                 expr::CommensuratedPair>;

std::string_view constructor_name(const GroupExpr &e);
/// Registry names referenced by e, in field order.
std::vector<std::string> references(const GroupExpr &e);

enum class AssertionSource { User, Database };

struct AttributeAssertion {
  std::string target;
  Atom atom;
  Polarity polarity = Polarity::Holds;
  AssertionSource source = AssertionSource::User;

  friend bool operator==(const AttributeAssertion &, const AttributeAssertion &) = default;
};

class GroupRegistry {
public:
  struct Entry {
    GroupExpr expr;
    std::vector<AttributeAssertion> assertions;
    friend bool operator==(const Entry &, const Entry &) = default;
  };

  /// Throws DuplicateName.
  void add(const std::string &name, GroupExpr expr);
  /// Throws DanglingReference when the target is undeclared.
  void add_assertion(AttributeAssertion a);

  bool contains(const std::string &name) const { return entries_.count(name) != 0; }
  const Entry &at(const std::string &name) const;
  const GroupExpr &expr(const std::string &name) const { return at(name).expr; }
  const std::map<std::string, Entry> &entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// Checks that every reference resolves and the reference graph is
  /// acyclic. Throws DanglingReference or InvalidStructure.
  void validate() const;

  /// Names ordered so that every group follows the groups it references;
  /// ties are broken by name.
  std::vector<std::string> dependency_order() const;

  friend bool operator==(const GroupRegistry &, const GroupRegistry &) = default;

private:
  std::map<std::string, Entry> entries_;
};

/// Parses the group-description text format. Throws SyntaxError,
/// DanglingReference, InvalidEdgeLabel, DuplicateName, UnknownVertex or
/// InvalidStructure.
///
/// References of the form Z, Z<m> and F<n> that are not declared resolve to
/// implicit free_abelian(1), finite(m) and free(n) entries.
GroupRegistry parse_document(std::string_view text);

/// Canonical text rendering; parse_document(serialize_document(r)) == r.
std::string serialize_document(const GroupRegistry &r);

} // namespace ginf

#endif // GINF_GROUP_REGISTRY_HPP
