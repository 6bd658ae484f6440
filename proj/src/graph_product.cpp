#include "ginf/graph_product.hpp"

#include <algorithm>

#include "ginf/error.hpp"

namespace ginf {

std::string to_string(Tri t) {
  switch (t) {
  case Tri::Yes: return "yes";
  case Tri::No: return "no";
  case Tri::Unknown: return "unknown";
  }
  return "?";
}

VertexProfile VertexProfile::finite_group(BigInt order) {
  VertexProfile p;
  p.finite = true;
  p.order = std::move(order);
  p.ends = EndCount::Zero;
  p.semistable = Tri::Yes;
  p.finitely_presented = Tri::Yes;
  return p;
}

VertexProfile VertexProfile::infinite_group(EndCount ends, Tri semistable,
                                            Tri finitely_presented) {
  if (ends == EndCount::Zero)
    throw InvalidStructure("an infinite group cannot have zero ends");
  VertexProfile p;
  p.finite = false;
  p.ends = ends;
  p.semistable = semistable;
  p.finitely_presented = finitely_presented;
  return p;
}

GraphProductSpec GraphProductSpec::from_map(LabeledGraph graph,
                                            const std::map<std::string, VertexProfile> &profiles) {
  GraphProductSpec spec;
  for (const auto &v : graph.vertices()) {
    auto it = profiles.find(v);
    if (it == profiles.end())
      throw UnknownProfile(v);
    spec.profiles.push_back(it->second);
  }
  spec.graph = std::move(graph);
  return spec;
}

std::string to_string(GraphProductEnds::Witness w) {
  switch (w) {
  case GraphProductEnds::Witness::CompleteFinite: return "complete graph of finite groups";
  case GraphProductEnds::Witness::CompleteOneMultiEnded:
    return "complete graph, one multi-ended vertex group, others finite";
  case GraphProductEnds::Witness::VisualSplitting: return "visual splitting over a finite group";
  case GraphProductEnds::Witness::JoinWithDihedral:
    return "finite dominating clique joined with Z2 * Z2";
  case GraphProductEnds::Witness::NoSplitting: return "no visual splitting over a finite group";
  }
  return "?";
}

std::string to_string(GraphProductSemistability::Verdict v) {
  switch (v) {
  case GraphProductSemistability::Verdict::Semistable: return "Semistable";
  case GraphProductSemistability::Verdict::NotSemistable: return "NotSemistable";
  case GraphProductSemistability::Verdict::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

bool multi_ended(EndCount e) { return e == EndCount::Two || e == EndCount::Infinite; }

} // namespace

GraphProductEnds graph_product_ends(const GraphProductSpec &spec) {
  const LabeledGraph &g = spec.graph;
  const std::size_t n = g.size();
  if (spec.profiles.size() != n)
    throw InvalidStructure("graph product needs one profile per vertex");
  for (std::size_t v = 0; v < n; ++v)
    if (!spec.profiles[v].finite || !spec.profiles[v].ends)
      throw UnknownProfile(g.name(v));
  if (n > kMaxSeparatorVertices)
    throw DiagramTooLarge(n, kMaxSeparatorVertices);

  auto finite = [&](std::size_t v) { return *spec.profiles[v].finite; };
  auto all_finite = [&](const VertexSet &vs) { return std::all_of(vs.begin(), vs.end(), finite); };
  VertexSet all(n);
  for (std::size_t v = 0; v < n; ++v)
    all[v] = v;

  GraphProductEnds out;
  const bool complete = is_complete(g);
  if (complete) {
    std::vector<std::size_t> infinite;
    for (std::size_t v = 0; v < n; ++v)
      if (!finite(v))
        infinite.push_back(v);
    if (infinite.empty()) {
      out.ends = EndCount::Zero;
      out.witness = GraphProductEnds::Witness::CompleteFinite;
      out.gamma1 = all;
      return out;
    }
    // A direct product of G_v with a finite group has the ends of G_v.
    if (infinite.size() == 1 && multi_ended(*spec.profiles[infinite[0]].ends)) {
      out.ends = *spec.profiles[infinite[0]].ends;
      out.witness = GraphProductEnds::Witness::CompleteOneMultiEnded;
      out.vertex = infinite[0];
      return out;
    }
    // Two or more infinite factors, or one one-ended factor: one end.
    out.ends = EndCount::One;
    return out;
  }

  auto separators = enumerate_clique_separators(g, all_finite);
  if (separators.empty()) {
    out.ends = EndCount::One;
    return out;
  }

  // Two ends: the dominating vertices form a finite clique and the rest is
  // a non-adjacent pair of order-2 vertex groups.
  VertexSet dominating, rest;
  for (std::size_t v = 0; v < n; ++v) {
    bool dom = true;
    for (std::size_t w = 0; w < n && dom; ++w)
      dom = w == v || g.adjacent(v, w);
    (dom ? dominating : rest).push_back(v);
  }
  auto order_two = [&](std::size_t v) {
    return spec.profiles[v].order && *spec.profiles[v].order == 2;
  };
  if (all_finite(dominating) && rest.size() == 2 && !g.adjacent(rest[0], rest[1]) &&
      order_two(rest[0]) && order_two(rest[1])) {
    out.ends = EndCount::Two;
    out.witness = GraphProductEnds::Witness::JoinWithDihedral;
    out.gamma1 = dominating;
    out.gamma2 = rest;
    return out;
  }

  const VertexSet &k = separators.front();
  auto comps = connected_components(g, k);
  out.ends = EndCount::Infinite;
  out.witness = GraphProductEnds::Witness::VisualSplitting;
  out.intersection = k;
  out.gamma1 = k;
  out.gamma1.insert(out.gamma1.end(), comps[0].begin(), comps[0].end());
  out.gamma2 = k;
  for (std::size_t c = 1; c < comps.size(); ++c)
    out.gamma2.insert(out.gamma2.end(), comps[c].begin(), comps[c].end());
  std::sort(out.gamma1.begin(), out.gamma1.end());
  std::sort(out.gamma2.begin(), out.gamma2.end());
  return out;
}

GraphProductSemistability graph_product_semistable(const GraphProductSpec &spec) {
  const LabeledGraph &g = spec.graph;
  const std::size_t n = g.size();
  if (spec.profiles.size() != n)
    throw InvalidStructure("graph product needs one profile per vertex");
  if (!is_connected(g))
    throw DisconnectedGraph();

  GraphProductSemistability out;
  for (std::size_t v = 0; v < n; ++v)
    if (spec.profiles[v].finitely_presented != Tri::Yes) {
      out.verdict = GraphProductSemistability::Verdict::Unknown;
      out.vertex = v;
      out.reason = "vertex group '" + g.name(v) + "' is not known to be finitely presented";
      return out;
    }

  // Condition (2) per vertex: link complete with every link group finite.
  auto link_condition = [&](std::size_t v) {
    auto nbrs = g.neighbors(v);
    Tri t = is_clique(g, nbrs) ? Tri::Yes : Tri::No;
    if (t == Tri::No)
      return t;
    for (auto w : nbrs) {
      const auto &f = spec.profiles[w].finite;
      if (!f)
        t = Tri::Unknown;
      else if (!*f)
        return Tri::No;
    }
    return t;
  };

  std::optional<std::size_t> possible;
  for (std::size_t v = 0; v < n; ++v) {
    Tri c1 = spec.profiles[v].semistable == Tri::No    ? Tri::Yes
             : spec.profiles[v].semistable == Tri::Yes ? Tri::No
                                                        : Tri::Unknown;
    if (c1 == Tri::No)
      continue;
    Tri c2 = link_condition(v);
    if (c2 == Tri::No)
      continue;
    if (c1 == Tri::Yes && c2 == Tri::Yes) {
      out.verdict = GraphProductSemistability::Verdict::NotSemistable;
      out.vertex = v;
      out.reason = "vertex group '" + g.name(v) +
                   "' is not semistable and its link is a complete graph of finite groups";
      return out;
    }
    if (!possible)
      possible = v;
  }
  if (possible) {
    out.verdict = GraphProductSemistability::Verdict::Unknown;
    out.vertex = possible;
    out.reason = "vertex '" + g.name(*possible) + "' may satisfy both conditions";
    return out;
  }
  out.verdict = GraphProductSemistability::Verdict::Semistable;
  out.reason = "no vertex has a non-semistable group with a finite complete link";
  return out;
}

} // namespace ginf
