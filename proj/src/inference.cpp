#include "ginf/inference.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ginf/coxeter.hpp"
#include "ginf/error.hpp"
#include "ginf/simplicial.hpp"

namespace ginf {

std::string_view to_string(Certificate::Kind k) {
  switch (k) {
  case Certificate::Kind::UserAssertion: return "user";
  case Certificate::Kind::Database: return "database";
  case Certificate::Kind::Structural: return "structure";
  case Certificate::Kind::Rule: return "rule";
  }
  return "?";
}

// ---- structural facts -------------------------------------------------------

namespace {

const Citation kStall{"Stall", R"(splits as a non-trivial amalgamated product $A\ast_CB$)"};
const Citation kCoxE{
    "CoxE",
    R"(contains a complete separating subgraph, the vertices of which generate a finite subgroup of $W$)"};
const Citation kCox2E{"Cox2E",
                      R"(each of which is connected to each vertex of $\Lambda_0$ by edges labeled 2)"};
const Citation kArtinE{"ArtinE",
                       R"(connected Artin diagram with at least 2 vertices, then $G$ is 1-ended)"};
const Citation kArtinOneRelator{"ArtinE", R"(The group $A_{ij}$ is a 1-relator group)"};
const Citation kNSSsplit{
    "NSSsplit",
    R"(Suppose $G$ is a finitely presented group that does not have semistable fundamental group at $\infty$, then $G$ splits non-trivially.)"};

const Citation kRaagSS{
    "BrM01 Theorem A",
    R"(Right angled Artin groups are homotopically and homologicially semistable at infinity in all dimensions.)"};
const Citation kRaagSC{
    "BrM01 Corollary 5.2",
    R"(is simply connected at infinity if and only if $L$ is simply connected and contains no cut vertex)"};

bool infinite_cyclic(const GroupExpr &e) {
  if (auto *fa = std::get_if<expr::FreeAbelian>(&e))
    return fa->rank == 1;
  if (auto *f = std::get_if<expr::Free>(&e))
    return f->rank == 1;
  return false;
}

struct StructuralBuilder {
  std::vector<StructuralFact> out;
  void add(AtomKind k, std::string desc, Polarity p = Polarity::Holds,
           std::optional<Citation> c = std::nullopt) {
    out.push_back({Atom::of(k), p, std::move(desc), std::move(c)});
  }
  void ends(EndCount e, std::string desc, std::optional<Citation> c = std::nullopt) {
    out.push_back({Atom::ends_atom(e), Polarity::Holds, std::move(desc), std::move(c)});
  }
  void cyclic_infinite(const std::string &desc) {
    add(AtomKind::Infinite, desc);
    add(AtomKind::FG, desc);
    add(AtomKind::FP, desc);
    add(AtomKind::Solvable, desc);
    add(AtomKind::VirtuallyMetanilpotent, desc);
    ends(EndCount::Two, desc + " is infinite cyclic");
  }
};

} // namespace

std::optional<LabeledGraph> raag_graph(const GroupRegistry &registry, const std::string &group) {
  const GroupExpr &e = registry.expr(group);
  if (auto *a = std::get_if<expr::Artin>(&e)) {
    for (const auto &edge : a->diagram.edges())
      if (edge.label != 2)
        return std::nullopt;
    return a->diagram;
  }
  if (auto *gp = std::get_if<expr::GraphProduct>(&e)) {
    for (const auto &v : gp->vertex_groups)
      if (!infinite_cyclic(registry.expr(v)))
        return std::nullopt;
    return gp->graph;
  }
  return std::nullopt;
}

std::vector<StructuralFact> structural_facts(const GroupRegistry &registry,
                                             const std::string &group) {
  const GroupExpr &e = registry.expr(group);
  StructuralBuilder b;
  if (auto raag = raag_graph(registry, group); raag && !raag->empty()) {
    b.add(AtomKind::Semistable, "right-angled Artin group", Polarity::Holds, kRaagSS);
    try {
      auto sc = raag_simply_connected_at_infinity(flag_complex(*raag));
      if (sc.answer != Tri::Unknown)
        b.add(AtomKind::SCInf, "right-angled Artin group on a flag complex: " + sc.reason,
              sc.answer == Tri::Yes ? Polarity::Holds : Polarity::Fails, kRaagSC);
    } catch (const InputError &) {
      // 0- and 1-simplices fall outside the criterion
    }
  }
  if (auto *f = std::get_if<expr::Finite>(&e)) {
    b.add(AtomKind::Finite, "finite(" + std::to_string(f->order) + ")");
  } else if (auto *fa = std::get_if<expr::FreeAbelian>(&e)) {
    const std::string d = "free_abelian(" + std::to_string(fa->rank) + ")";
    if (fa->rank == 0) {
      b.add(AtomKind::Finite, d + " is trivial");
    } else if (fa->rank == 1) {
      b.cyclic_infinite(d);
    } else {
      b.add(AtomKind::Infinite, d);
      b.add(AtomKind::FG, d);
      b.add(AtomKind::FP, d);
      b.add(AtomKind::Solvable, d);
      b.add(AtomKind::VirtuallyMetanilpotent, d + " is abelian");
      b.add(AtomKind::HasZxZQuotient, d + " maps onto Z x Z");
    }
  } else if (auto *fr = std::get_if<expr::Free>(&e)) {
    const std::string d = "free(" + std::to_string(fr->rank) + ")";
    if (fr->rank == 0) {
      b.add(AtomKind::Finite, d + " is trivial");
    } else if (fr->rank == 1) {
      b.cyclic_infinite(d);
    } else {
      b.add(AtomKind::Infinite, d);
      b.add(AtomKind::FG, d);
      b.add(AtomKind::FP, d);
      b.add(AtomKind::WordHyperbolic, d);
      b.ends(EndCount::Infinite, d + " splits as a free product of infinite groups", kStall);
    }
  } else if (auto *cx = std::get_if<expr::Coxeter>(&e)) {
    const std::string d = "coxeter diagram on " + std::to_string(cx->diagram.size()) + " vertices";
    b.add(AtomKind::FG, d);
    b.add(AtomKind::FP, d);
    CoxeterSystem sys(cx->diagram);
    if (cx->diagram.empty() || is_finite_type(cx->diagram)) {
      b.add(AtomKind::Finite, d + " is of finite type");
    } else {
      b.add(AtomKind::Infinite, d + " is not of finite type");
      try {
        auto ce = coxeter_ends(sys);
        switch (ce.ends) {
        case EndCount::Zero:
          break;
        case EndCount::One:
          b.ends(EndCount::One, d + " has no separating clique generating a finite group", kCoxE);
          break;
        case EndCount::Two:
          b.ends(EndCount::Two, d + " is a finite core joined by label-2 edges to two unrelated "
                                    "vertices",
                 kCox2E);
          break;
        case EndCount::Infinite:
          b.ends(EndCount::Infinite,
                 d + " has a separating clique generating a finite group and is not 2-ended",
                 kCoxE);
          break;
        }
      } catch (const DiagramTooLarge &) {
        // ends left undetermined
      }
    }
  } else if (auto *ar = std::get_if<expr::Artin>(&e)) {
    const std::string d = "artin diagram on " + std::to_string(ar->diagram.size()) + " vertices";
    if (ar->diagram.empty()) {
      b.add(AtomKind::Finite, d + " is trivial");
    } else {
      b.add(AtomKind::Infinite, d);
      b.add(AtomKind::FG, d);
      b.add(AtomKind::FP, d);
      auto ae = artin_one_ended(ar->diagram);
      if (ae.one_ended)
        b.ends(EndCount::One, d + " is connected", kArtinE);
      else if (ae.ends == EndCount::Two)
        b.ends(EndCount::Two, d + " is infinite cyclic");
      else
        b.ends(EndCount::Infinite, d + " is a free product of infinite groups", kStall);
      if (ar->diagram.size() == 2 && ar->diagram.edge_count() == 1)
        b.add(AtomKind::OneRelator, d + " with one edge", Polarity::Holds, kArtinOneRelator);
    }
  } else if (std::holds_alternative<expr::Hnn>(e)) {
    b.add(AtomKind::Infinite, "hnn extensions contain the infinite cyclic stable letter");
  }
  return b.out;
}

// ---- results ----------------------------------------------------------------

std::optional<Polarity> InferenceResult::lookup(const std::string &group,
                                                const Atom &atom) const {
  auto it = facts.find({group, atom});
  if (it == facts.end())
    return std::nullopt;
  return it->second.polarity;
}

std::size_t InferenceResult::certificate_index(const std::string &group, const Atom &atom) const {
  auto it = facts.find({group, atom});
  if (it == facts.end())
    throw FactNotDerived(to_string(atom) + "(" + group + ")");
  return it->second.certificate;
}

std::vector<FactRef> InferenceResult::fact_list() const {
  std::vector<FactRef> out;
  for (const auto &[key, entry] : facts)
    out.push_back({key.first, key.second, entry.polarity});
  return out;
}

namespace {

void render(const InferenceResult &r, std::size_t index, std::size_t depth, std::ostream &os) {
  const Certificate &c = r.certificates.at(index);
  os << std::string(depth * 2, ' ') << to_string(c.fact);
  if (c.kind == Certificate::Kind::Rule)
    os << "  by " << c.rule;
  else
    os << "  [" << to_string(c.kind) << ": " << c.provenance << "]";
  if (c.citation)
    os << "  " << c.citation->tag << ": \"" << c.citation->quote << "\"";
  os << "\n";
  for (auto child : c.children)
    render(r, child, depth + 1, os);
}

class Store : public FactView {
public:
  InferenceResult result;

  std::optional<Polarity> lookup(const std::string &group, const Atom &atom) const override {
    return result.lookup(group, atom);
  }

  /// Returns false when the fact is already known with this polarity.
  bool add(Certificate cert) {
    const auto key = std::make_pair(cert.fact.group, cert.fact.atom);
    auto it = result.facts.find(key);
    if (it != result.facts.end()) {
      if (it->second.polarity == cert.fact.polarity)
        return false;
      const std::size_t existing = it->second.certificate;
      result.certificates.push_back(std::move(cert));
      const std::size_t fresh = result.certificates.size() - 1;
      const bool fresh_holds = result.certificates[fresh].fact.polarity == Polarity::Holds;
      const std::size_t h = fresh_holds ? fresh : existing;
      const std::size_t f = fresh_holds ? existing : fresh;
      throw ContradictionDetected(to_string(key.second) + "(" + key.first + ")",
                                  render_certificate(result, h), render_certificate(result, f));
    }
    result.certificates.push_back(std::move(cert));
    result.facts.emplace(key,
                         InferenceResult::Entry{result.certificates.back().fact.polarity,
                                                result.certificates.size() - 1});
    return true;
  }

  std::size_t index_of(const FactRef &f) const {
    return result.facts.at({f.group, f.atom}).certificate;
  }
};

Certificate leaf(FactRef fact, Certificate::Kind kind, std::string provenance,
                 std::optional<Citation> citation = std::nullopt) {
  Certificate c;
  c.fact = std::move(fact);
  c.kind = kind;
  c.provenance = std::move(provenance);
  c.citation = std::move(citation);
  return c;
}

Certificate assertion_leaf(const AttributeAssertion &a) {
  const bool db = a.source == AssertionSource::Database;
  return leaf({a.target, a.atom, a.polarity},
              db ? Certificate::Kind::Database : Certificate::Kind::UserAssertion,
              db ? "database assertion on " + a.target : "assert " + a.target);
}

bool is_splitting(const GroupExpr &e) {
  return std::holds_alternative<expr::Amalgam>(e) || std::holds_alternative<expr::Hnn>(e) ||
         std::holds_alternative<expr::GraphProduct>(e) ||
         std::holds_alternative<expr::DirectProduct>(e);
}

} // namespace

std::string render_certificate(const InferenceResult &result, std::size_t index) {
  std::ostringstream os;
  render(result, index, 0, os);
  return os.str();
}

std::string explain(const InferenceResult &result, const std::string &group, const Atom &atom) {
  return render_certificate(result, result.certificate_index(group, atom));
}

InferenceResult infer(const GroupRegistry &registry,
                      const std::vector<AttributeAssertion> &extra_facts) {
  registry.validate();
  for (const auto &a : extra_facts)
    if (!registry.contains(a.target))
      throw DanglingReference(a.target);

  const auto order = registry.dependency_order();
  Store store;

  for (const auto &g : order) {
    if (auto *k = std::get_if<expr::Known>(&registry.expr(g)))
      for (const auto &f : known_facts(k->name))
        store.add(leaf({g, f.atom, f.polarity}, Certificate::Kind::Database,
                       "known(" + k->name + ")", f.citation));
    for (const auto &s : structural_facts(registry, g))
      store.add(leaf({g, s.atom, s.polarity}, Certificate::Kind::Structural, s.description,
                     s.citation));
  }
  for (const auto &g : order)
    for (const auto &a : registry.at(g).assertions)
      store.add(assertion_leaf(a));
  for (const auto &a : extra_facts)
    store.add(assertion_leaf(a));

  const auto &rules = builtin_rules();
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto &g : order) {
      for (const auto &rule : rules) {
        for (const auto &firing : rule.match(registry, store, g)) {
          std::vector<std::size_t> children;
          for (const auto &p : firing.premises)
            children.push_back(store.index_of(p));
          for (const auto &concl : firing.conclusions) {
            Certificate c;
            c.fact = concl;
            c.kind = Certificate::Kind::Rule;
            c.rule = rule.name;
            c.applied_to = g;
            c.citation = rule.citation;
            c.children = children;
            changed = store.add(std::move(c)) || changed;
          }
        }
      }
    }
  }

  for (const auto &g : order) {
    if (store.lookup(g, Atom::of(AtomKind::Semistable)) != Polarity::Fails ||
        store.lookup(g, Atom::of(AtomKind::FP)) == Polarity::Fails ||
        is_splitting(registry.expr(g)))
      continue;
    store.result.annotations.push_back(
        "conjecture " + kNSSsplit.tag + " (not a rule): " + g +
        " is not semistable and is described without a splitting; \"" + kNSSsplit.quote + "\"");
  }
  return std::move(store.result);
}

// ---- replay -----------------------------------------------------------------

namespace {

class ReplayView : public FactView {
public:
  std::map<std::pair<std::string, Atom>, Polarity> facts;
  std::optional<Polarity> lookup(const std::string &group, const Atom &atom) const override {
    auto it = facts.find({group, atom});
    if (it == facts.end())
      return std::nullopt;
    return it->second;
  }
};

bool same_facts(std::vector<FactRef> a, std::vector<FactRef> b) {
  auto less = [](const FactRef &x, const FactRef &y) {
    return std::tie(x.group, x.atom, x.polarity) < std::tie(y.group, y.atom, y.polarity);
  };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

std::optional<std::string> replay_leaf(const GroupRegistry &registry,
                                       const std::vector<AttributeAssertion> &extra,
                                       const Certificate &c) {
  const FactRef &f = c.fact;
  auto matches = [&](const AttributeAssertion &a) {
    return a.target == f.group && a.atom == f.atom && a.polarity == f.polarity;
  };
  switch (c.kind) {
  case Certificate::Kind::UserAssertion:
  case Certificate::Kind::Database: {
    const auto &as = registry.at(f.group).assertions;
    if (std::any_of(as.begin(), as.end(), matches) ||
        std::any_of(extra.begin(), extra.end(), matches))
      return std::nullopt;
    if (auto *k = std::get_if<expr::Known>(&registry.expr(f.group)))
      for (const auto &kf : known_facts(k->name))
        if (kf.atom == f.atom && kf.polarity == f.polarity)
          return std::nullopt;
    return "no assertion or database entry for " + to_string(f);
  }
  case Certificate::Kind::Structural:
    for (const auto &s : structural_facts(registry, f.group))
      if (s.atom == f.atom && s.polarity == f.polarity)
        return std::nullopt;
    return "constructor of " + f.group + " does not yield " + to_string(f);
  case Certificate::Kind::Rule:
    break;
  }
  return "not a leaf";
}

} // namespace

std::optional<std::string> replay(const GroupRegistry &registry,
                                  const std::vector<AttributeAssertion> &extra_facts,
                                  const InferenceResult &result) {
  ReplayView view;
  for (std::size_t i = 0; i < result.certificates.size(); ++i) {
    const Certificate &c = result.certificates[i];
    const std::string where = "certificate " + std::to_string(i) + " (" + to_string(c.fact) + ")";
    if (!registry.contains(c.fact.group))
      return where + ": unknown group";
    std::vector<FactRef> premises;
    for (auto child : c.children) {
      if (child >= i)
        return where + ": child " + std::to_string(child) + " is not earlier";
      const FactRef &pf = result.certificates[child].fact;
      if (view.lookup(pf.group, pf.atom) != pf.polarity)
        return where + ": premise " + to_string(pf) + " was not re-established";
      premises.push_back(pf);
    }
    if (c.leaf()) {
      if (!c.children.empty())
        return where + ": leaf with children";
      if (auto err = replay_leaf(registry, extra_facts, c))
        return where + ": " + *err;
    } else {
      const Rule *rule = find_rule(c.rule);
      if (!rule)
        return where + ": unknown rule " + c.rule;
      if (!registry.contains(c.applied_to))
        return where + ": rule applied to unknown group " + c.applied_to;
      bool ok = false;
      for (const auto &firing : rule->match(registry, view, c.applied_to)) {
        if (!same_facts(firing.premises, premises))
          continue;
        if (std::find(firing.conclusions.begin(), firing.conclusions.end(), c.fact) !=
            firing.conclusions.end()) {
          ok = true;
          break;
        }
      }
      if (!ok)
        return where + ": rule " + c.rule + " does not fire on the recorded premises";
    }
    auto key = std::make_pair(c.fact.group, c.fact.atom);
    if (auto prev = view.facts.find(key); prev != view.facts.end())
      return where + ": fact established twice";
    view.facts.emplace(key, c.fact.polarity);
  }
  if (view.facts.size() != result.facts.size())
    return std::string("replay produced a different number of facts");
  for (const auto &[key, entry] : result.facts)
    if (view.lookup(key.first, key.second) != entry.polarity)
      return "fact " + to_string(key.second) + "(" + key.first + ") not reproduced";
  return std::nullopt;
}

} // namespace ginf
