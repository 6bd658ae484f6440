#ifndef GINF_INFERENCE_HPP
#define GINF_INFERENCE_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ginf/atoms.hpp"
#include "ginf/graph_product.hpp"
#include "ginf/group_registry.hpp"

namespace ginf {

inline constexpr std::string_view kRuleTableVersion = "1";

struct Citation {
  std::string tag;
  std::string quote;
  friend bool operator==(const Citation &, const Citation &) = default;
};

/// A polarized atom about one registry group.
struct FactRef {
  std::string group;
  Atom atom;
  Polarity polarity = Polarity::Holds;
  friend bool operator==(const FactRef &, const FactRef &) = default;
};

std::string to_string(const FactRef &f);

/// Which group a premise talks about: the target itself or one of the
/// references of its constructor. EachPart and AnyPart quantify over the
/// factors of a direct product or the vertex groups of a graph product.
enum class Role {
  Self,
  A,
  B,
  C,
  Base,
  Assoc,
  Kernel,
  Quotient,
  Ambient,
  Subgroup,
  First,
  Second,
  EachPart,
  AnyPart,
};

std::string_view to_string(Role r);

struct Premise {
  Role role = Role::Self;
  Atom atom;
  Polarity polarity = Polarity::Holds;
};

struct Conclusion {
  Atom atom;
  Polarity polarity = Polarity::Holds;
};

/// Read access to the facts established so far.
class FactView {
public:
  virtual ~FactView() = default;
  virtual std::optional<Polarity> lookup(const std::string &group, const Atom &atom) const = 0;
  bool holds(const std::string &group, const Atom &atom) const {
    return lookup(group, atom) == Polarity::Holds;
  }
  bool fails(const std::string &group, const Atom &atom) const {
    return lookup(group, atom) == Polarity::Fails;
  }
};

/// One application of a rule: the facts it consumed and the facts it yields.
struct Firing {
  std::vector<FactRef> premises;
  std::vector<FactRef> conclusions;
};

using Matcher = std::function<std::vector<Firing>(const GroupRegistry &, const FactView &,
                                                  const std::string &group)>;

struct Rule {
  std::string name;
  /// Constructor the target must be built with; empty matches every group.
  std::string constructor;
  /// Constructor flags that must be set.
  std::vector<std::string> flags;
  std::vector<Premise> premises;
  std::vector<Conclusion> conclusions;
  /// Absent only for plumbing rules (vocabulary bookkeeping, closure
  /// properties of constructors).
  std::optional<Citation> citation;
  /// Human-readable shape, e.g. "amalgam[edge_finite]: A:FG, B:FG => ...".
  std::string pattern;
  Matcher match;

  bool plumbing() const { return !citation.has_value(); }
};

/// Deterministic rule table; each non-plumbing rule cites a theorem tag and
/// a verbatim quote.
const std::vector<Rule> &builtin_rules();
const Rule *find_rule(std::string_view name);

/// Vertex profiles of a graph-product group read off established facts,
/// together with every fact consulted. `spec` is empty when `group` is not a
/// graph product, or when `need_orders` is set and a finite vertex group is
/// trivial or of unknown order (the ends decider cannot use such vertices).
struct GraphProductProfiles {
  std::optional<GraphProductSpec> spec;
  std::vector<FactRef> used;
};

GraphProductProfiles graph_product_profiles(const GroupRegistry &registry, const FactView &facts,
                                            const std::string &group, bool need_orders);

/// Seed facts for groups declared as known(<catalog name>).
struct KnownFact {
  std::string catalog;
  Atom atom;
  Polarity polarity = Polarity::Holds;
  Citation citation;
};

const std::vector<KnownFact> &known_groups_db();
/// Facts for one catalog name; empty (not an error) for unknown names.
std::vector<KnownFact> known_facts(std::string_view catalog);

/// Facts that follow from a group's constructor alone (e.g. free(2) is
/// infinite-ended, a Coxeter group's ends from its diagram).
struct StructuralFact {
  Atom atom;
  Polarity polarity = Polarity::Holds;
  std::string description;
  std::optional<Citation> citation;
};

/// Defining graph when `group` is a right-angled Artin group: an Artin
/// diagram with every label 2, or a graph product of infinite cyclic groups.
std::optional<LabeledGraph> raag_graph(const GroupRegistry &registry, const std::string &group);

std::vector<StructuralFact> structural_facts(const GroupRegistry &registry,
                                             const std::string &group);

struct Certificate {
  enum class Kind { UserAssertion, Database, Structural, Rule };

  FactRef fact;
  Kind kind = Kind::UserAssertion;
  std::string rule;       // Kind::Rule only
  std::string applied_to; // Kind::Rule: group the rule was matched on
  std::optional<Citation> citation;
  std::string provenance; // leaves: where the fact came from
  /// Premise certificates, indices into InferenceResult::certificates; every
  /// child index is smaller than the parent's.
  std::vector<std::size_t> children;

  bool leaf() const { return kind != Kind::Rule; }
};

std::string_view to_string(Certificate::Kind k);

struct InferenceResult {
  struct Entry {
    Polarity polarity;
    std::size_t certificate;
  };

  std::map<std::pair<std::string, Atom>, Entry> facts;
  std::vector<Certificate> certificates;
  /// Remarks that are not facts, e.g. open conjectures touched by a result.
  std::vector<std::string> annotations;

  std::optional<Polarity> lookup(const std::string &group, const Atom &atom) const;
  /// Throws FactNotDerived.
  std::size_t certificate_index(const std::string &group, const Atom &atom) const;
  std::vector<FactRef> fact_list() const;
};

/// FactView over a finished inference.
class ResultFacts : public FactView {
public:
  explicit ResultFacts(const InferenceResult &r) : result_(r) {}
  std::optional<Polarity> lookup(const std::string &group, const Atom &atom) const override {
    return result_.lookup(group, atom);
  }

private:
  const InferenceResult &result_;
};

/// Least fixpoint of the rule table over database, structural, registry and
/// extra facts. Throws ContradictionDetected when both polarities of an atom
/// are established.
InferenceResult infer(const GroupRegistry &registry,
                      const std::vector<AttributeAssertion> &extra_facts = {});

/// Plain-text derivation tree for (group, atom). Throws FactNotDerived.
std::string explain(const InferenceResult &result, const std::string &group, const Atom &atom);
std::string render_certificate(const InferenceResult &result, std::size_t index);

/// Re-executes every certificate bottom-up against the registry and the rule
/// table. Returns nullopt when the replay reproduces exactly the fact set of
/// `result`, otherwise a description of the first discrepancy.
std::optional<std::string> replay(const GroupRegistry &registry,
                                  const std::vector<AttributeAssertion> &extra_facts,
                                  const InferenceResult &result);

} // namespace ginf

#endif // GINF_INFERENCE_HPP
