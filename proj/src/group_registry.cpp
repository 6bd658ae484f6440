#include "ginf/group_registry.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ginf/error.hpp"

namespace ginf {

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

std::string_view constructor_name(const GroupExpr &e) {
  return std::visit(
      overloaded{
          [](const expr::Known &) { return "known"; },
          [](const expr::Finite &) { return "finite"; },
          [](const expr::FreeAbelian &) { return "free_abelian"; },
          [](const expr::Free &) { return "free"; },
          [](const expr::Coxeter &) { return "coxeter"; },
          [](const expr::Artin &) { return "artin"; },
          [](const expr::GraphProduct &) { return "graph_product"; },
          [](const expr::Amalgam &) { return "amalgam"; },
          [](const expr::Hnn &) { return "hnn"; },
          [](const expr::Extension &) { return "extension"; },
          [](const expr::DirectProduct &) { return "direct_product"; },
          [](const expr::CommensuratedPair &) { return "commensurated"; },
      },
      e);
}

std::vector<std::string> references(const GroupExpr &e) {
  return std::visit(
      overloaded{
          [](const expr::GraphProduct &g) { return g.vertex_groups; },
          [](const expr::Amalgam &a) { return std::vector<std::string>{a.a, a.b, a.c}; },
          [](const expr::Hnn &h) { return std::vector<std::string>{h.base, h.assoc}; },
          [](const expr::Extension &x) {
            return std::vector<std::string>{x.kernel, x.quotient};
          },
          [](const expr::DirectProduct &d) { return d.parts; },
          [](const expr::CommensuratedPair &p) {
            return std::vector<std::string>{p.ambient, p.subgroup};
          },
          [](const auto &) { return std::vector<std::string>{}; },
      },
      e);
}

void GroupRegistry::add(const std::string &name, GroupExpr expr) {
  if (!entries_.emplace(name, Entry{std::move(expr), {}}).second)
    throw DuplicateName(name);
}

void GroupRegistry::add_assertion(AttributeAssertion a) {
  auto it = entries_.find(a.target);
  if (it == entries_.end())
    throw DanglingReference(a.target);
  it->second.assertions.push_back(std::move(a));
}

const GroupRegistry::Entry &GroupRegistry::at(const std::string &name) const {
  auto it = entries_.find(name);
  if (it == entries_.end())
    throw DanglingReference(name);
  return it->second;
}

void GroupRegistry::validate() const {
  for (const auto &[name, entry] : entries_)
    for (const auto &ref : references(entry.expr))
      if (!contains(ref))
        throw DanglingReference(ref);
  (void)dependency_order();
}

std::vector<std::string> GroupRegistry::dependency_order() const {
  // Kahn's algorithm with a name-ordered ready set.
  std::map<std::string, std::size_t> pending;
  std::map<std::string, std::vector<std::string>> users;
  for (const auto &[name, entry] : entries_) {
    std::set<std::string> refs;
    for (const auto &r : references(entry.expr))
      refs.insert(r);
    pending[name] = refs.size();
    for (const auto &r : refs)
      users[r].push_back(name);
  }
  std::set<std::string> ready;
  for (const auto &[name, n] : pending)
    if (n == 0)
      ready.insert(name);
  std::vector<std::string> order;
  while (!ready.empty()) {
    std::string next = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(next);
    for (const auto &u : users[next])
      if (--pending[u] == 0)
        ready.insert(u);
  }
  if (order.size() != entries_.size())
    throw InvalidStructure("group references form a cycle");
  return order;
}

namespace {

void write_diagram(std::ostream &os, const LabeledGraph &g, bool labeled,
                   const std::vector<std::string> *vertex_groups) {
  os << "{ verts";
  for (std::size_t i = 0; i < g.size(); ++i) {
    os << ' ' << g.name(i);
    if (vertex_groups)
      os << ':' << (*vertex_groups)[i];
  }
  os << ';';
  for (const auto &e : g.edges()) {
    os << " edge " << g.name(e.u) << ' ' << g.name(e.v);
    if (labeled)
      os << ' ' << e.label;
    os << ';';
  }
  os << " }";
}

void write_refs(std::ostream &os, std::initializer_list<std::string_view> refs) {
  os << '(';
  bool first = true;
  for (auto r : refs) {
    if (!first)
      os << ", ";
    os << r;
    first = false;
  }
  os << ')';
}

} // namespace

std::string serialize_document(const GroupRegistry &r) {
  std::ostringstream os;
  for (const auto &name : r.dependency_order()) {
    const auto &entry = r.at(name);
    os << "group " << name << " = " << constructor_name(entry.expr);
    std::visit(
        overloaded{
            [&](const expr::Known &k) { os << '(' << k.name << ')'; },
            [&](const expr::Finite &f) { os << '(' << f.order << ')'; },
            [&](const expr::FreeAbelian &f) { os << '(' << f.rank << ')'; },
            [&](const expr::Free &f) { os << '(' << f.rank << ')'; },
            [&](const expr::Coxeter &c) {
              os << ' ';
              write_diagram(os, c.diagram, true, nullptr);
            },
            [&](const expr::Artin &a) {
              os << ' ';
              write_diagram(os, a.diagram, true, nullptr);
            },
            [&](const expr::GraphProduct &g) {
              os << ' ';
              write_diagram(os, g.graph, false, &g.vertex_groups);
            },
            [&](const expr::Amalgam &a) {
              write_refs(os, {a.a, a.b, a.c});
              if (a.edge_finite) os << " [edge_finite]";
              if (a.c_index_finite_in_both) os << " [c_index_finite_in_both]";
              if (a.reduced) os << " [reduced]";
            },
            [&](const expr::Hnn &h) {
              write_refs(os, {h.base, h.assoc});
              if (h.ascending) os << " [ascending]";
              if (h.finite_index_image) os << " [finite_index_image]";
            },
            [&](const expr::Extension &x) { write_refs(os, {x.kernel, x.quotient}); },
            [&](const expr::DirectProduct &d) {
              os << '(';
              for (std::size_t i = 0; i < d.parts.size(); ++i)
                os << (i ? ", " : "") << d.parts[i];
              os << ')';
            },
            [&](const expr::CommensuratedPair &p) {
              write_refs(os, {p.ambient, p.subgroup});
              if (p.infinite_index) os << " [infinite_index]";
              if (p.normal) os << " [normal]";
              if (p.subnormal) os << " [subnormal]";
              if (p.subcommensurated) os << " [subcommensurated]";
            },
        },
        entry.expr);
    os << '\n';
  }
  for (const auto &[name, entry] : r.entries())
    for (const auto &a : entry.assertions)
      os << "assert " << name << " : "
         << (a.polarity == Polarity::Fails ? "not " : "") << to_string(a.atom) << '\n';
  return os.str();
}

} // namespace ginf
