#include "ginf/labeled_graph.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

#include "ginf/error.hpp"

namespace ginf {

LabeledGraph::LabeledGraph(std::vector<std::string> vertices)
    : names_(std::move(vertices)), labels_(names_.size() * names_.size(), 0) {
  std::unordered_set<std::string> seen;
  for (const auto &n : names_) {
    if (!seen.insert(n).second)
      throw DuplicateName(n);
  }
}

void LabeledGraph::add_edge(std::size_t u, std::size_t v, int label) {
  if (u >= size() || v >= size())
    throw InvalidStructure("edge endpoint out of range");
  if (u == v)
    throw InvalidStructure("self-loop at '" + names_[u] + "'");
  if (label < 2)
    throw InvalidEdgeLabel(label);
  if (adjacent(u, v))
    throw InvalidStructure("duplicate edge " + names_[u] + " " + names_[v]);
  labels_[u * size() + v] = label;
  labels_[v * size() + u] = label;
}

void LabeledGraph::add_edge(const std::string &u, const std::string &v, int label) {
  add_edge(require_index(u), require_index(v), label);
}

std::optional<std::size_t> LabeledGraph::index_of(const std::string &name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t LabeledGraph::require_index(const std::string &name) const {
  auto i = index_of(name);
  if (!i)
    throw UnknownVertex(name);
  return *i;
}

std::vector<LabeledGraph::Edge> LabeledGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < size(); ++u)
    for (std::size_t v = u + 1; v < size(); ++v)
      if (adjacent(u, v))
        out.push_back({u, v, label(u, v)});
  return out;
}

std::size_t LabeledGraph::edge_count() const {
  std::size_t n = 0;
  for (std::size_t u = 0; u < size(); ++u)
    for (std::size_t v = u + 1; v < size(); ++v)
      n += adjacent(u, v) ? 1 : 0;
  return n;
}

std::vector<std::size_t> LabeledGraph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < size(); ++u)
    if (adjacent(u, v))
      out.push_back(u);
  return out;
}

LabeledGraph induced_subgraph(const LabeledGraph &g, const VertexSet &vs) {
  VertexSet sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<std::string> names;
  for (auto v : sorted) {
    if (v >= g.size())
      throw UnknownVertex("#" + std::to_string(v));
    names.push_back(g.name(v));
  }
  LabeledGraph out(std::move(names));
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (int m = g.label(sorted[i], sorted[j]))
        out.add_edge(i, j, m);
  return out;
}

LabeledGraph induced_subgraph(const LabeledGraph &g,
                              const std::vector<std::string> &names) {
  VertexSet vs;
  for (const auto &n : names)
    vs.push_back(g.require_index(n));
  return induced_subgraph(g, vs);
}

LinkAndStar link_and_star(const LabeledGraph &g, std::size_t v) {
  if (v >= g.size())
    throw UnknownVertex("#" + std::to_string(v));
  VertexSet nbrs = g.neighbors(v);
  VertexSet star = nbrs;
  star.push_back(v);
  return {induced_subgraph(g, nbrs), induced_subgraph(g, star)};
}

LinkAndStar link_and_star(const LabeledGraph &g, const std::string &v) {
  return link_and_star(g, g.require_index(v));
}

std::vector<VertexSet> connected_components(const LabeledGraph &g,
                                            const VertexSet &removed) {
  std::vector<char> gone(g.size(), 0);
  for (auto v : removed)
    gone.at(v) = 1;
  std::vector<char> seen(g.size(), 0);
  std::vector<VertexSet> comps;
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (gone[s] || seen[s])
      continue;
    VertexSet comp;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (std::size_t w = 0; w < g.size(); ++w) {
        if (!gone[w] && !seen[w] && g.adjacent(u, w)) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const LabeledGraph &g) {
  return connected_components(g).size() <= 1;
}

bool is_clique(const LabeledGraph &g, const VertexSet &vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j]))
        return false;
  return true;
}

bool is_complete(const LabeledGraph &g) {
  VertexSet all(g.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = i;
  return is_clique(g, all);
}

namespace {

// Number of components of g - removed, computed on bitmasks.
int component_count(const std::vector<std::uint32_t> &adj, std::uint32_t alive) {
  int count = 0;
  while (alive) {
    std::uint32_t frontier = alive & (~alive + 1);
    std::uint32_t comp = frontier;
    while (frontier) {
      int v = __builtin_ctz(frontier);
      frontier &= frontier - 1;
      std::uint32_t fresh = adj[v] & alive & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    alive &= ~comp;
    ++count;
  }
  return count;
}

VertexSet mask_to_set(std::uint32_t mask) {
  VertexSet out;
  while (mask) {
    out.push_back(static_cast<std::size_t>(__builtin_ctz(mask)));
    mask &= mask - 1;
  }
  return out;
}

} // namespace

std::vector<VertexSet> enumerate_clique_separators(const LabeledGraph &g,
                                                   const VertexSetPredicate &admissible) {
  const std::size_t n = g.size();
  if (n > kMaxSeparatorVertices)
    throw DiagramTooLarge(n, kMaxSeparatorVertices);

  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (g.adjacent(u, v))
        adj[u] |= std::uint32_t{1} << v;
  const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);

  // Grow cliques by adding vertices larger than the current maximum, so each
  // clique is visited exactly once.
  std::vector<VertexSet> found;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> stack{{0u, all}};
  while (!stack.empty()) {
    auto [clique, candidates] = stack.back();
    stack.pop_back();
    if (component_count(adj, all & ~clique) >= 2) {
      VertexSet k = mask_to_set(clique);
      if (admissible(k))
        found.push_back(std::move(k));
    }
    for (std::uint32_t rest = candidates; rest; rest &= rest - 1) {
      int v = __builtin_ctz(rest);
      std::uint32_t higher = candidates & ~((std::uint32_t{2} << v) - 1);
      stack.push_back({clique | (std::uint32_t{1} << v), higher & adj[v]});
    }
  }
  std::sort(found.begin(), found.end(), [](const VertexSet &a, const VertexSet &b) {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  });
  return found;
}

std::vector<std::string> vertex_names(const LabeledGraph &g, const VertexSet &vs) {
  std::vector<std::string> out;
  for (auto v : vs)
    out.push_back(g.name(v));
  return out;
}

} // namespace ginf
