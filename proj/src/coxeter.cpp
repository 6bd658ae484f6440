#include "ginf/coxeter.hpp"

#include <algorithm>
#include <map>

#include "ginf/error.hpp"

namespace ginf {

DynkinDiagram to_dynkin(const LabeledGraph &presentation) {
  DynkinDiagram d;
  d.vertices = presentation.vertices();
  for (std::size_t u = 0; u < presentation.size(); ++u) {
    for (std::size_t v = u + 1; v < presentation.size(); ++v) {
      int m = presentation.label(u, v);
      if (m == 0)
        d.edges.push_back({u, v, DynkinDiagram::kInfinity});
      else if (m >= 3)
        d.edges.push_back({u, v, m});
    }
  }
  return d;
}

LabeledGraph from_dynkin(const DynkinDiagram &dynkin) {
  const std::size_t n = dynkin.vertices.size();
  std::vector<int> label(n * n, 2);
  for (const auto &e : dynkin.edges) {
    if (e.u >= n || e.v >= n || e.u == e.v)
      throw InvalidStructure("bad Dynkin edge");
    if (e.label != DynkinDiagram::kInfinity && e.label < 3)
      throw InvalidEdgeLabel(e.label);
    label[e.u * n + e.v] = label[e.v * n + e.u] = e.label;
  }
  LabeledGraph g(dynkin.vertices);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (int m = label[u * n + v]; m != DynkinDiagram::kInfinity)
        g.add_edge(u, v, m);
  return g;
}

std::string FamilyTag::to_string() const {
  switch (family) {
  case CoxeterFamily::A: return "A" + std::to_string(rank);
  case CoxeterFamily::B: return "B" + std::to_string(rank);
  case CoxeterFamily::D: return "D" + std::to_string(rank);
  case CoxeterFamily::E: return "E" + std::to_string(rank);
  case CoxeterFamily::F: return "F4";
  case CoxeterFamily::H: return "H" + std::to_string(rank);
  case CoxeterFamily::I2: return "I2(" + std::to_string(label) + ")";
  case CoxeterFamily::Indefinite: return "affine/indefinite";
  }
  return "?";
}

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i)
    f *= i;
  return f;
}

} // namespace

std::optional<BigInt> FamilyTag::order() const {
  switch (family) {
  case CoxeterFamily::A: return factorial(rank + 1);
  case CoxeterFamily::B: return (BigInt(1) << rank) * factorial(rank);
  case CoxeterFamily::D: return (BigInt(1) << (rank - 1)) * factorial(rank);
  case CoxeterFamily::E:
    if (rank == 6) return BigInt(51840);
    if (rank == 7) return BigInt(2903040);
    return BigInt(696729600);
  case CoxeterFamily::F: return BigInt(1152);
  case CoxeterFamily::H: return rank == 3 ? BigInt(120) : BigInt(14400);
  case CoxeterFamily::I2: return BigInt(2 * label);
  case CoxeterFamily::Indefinite: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<BigInt> FiniteTypeReport::order() const {
  if (!is_finite)
    return std::nullopt;
  BigInt total = 1;
  for (const auto &c : components)
    total *= *c.tag.order();
  return total;
}

namespace {

constexpr FamilyTag kIndefinite{CoxeterFamily::Indefinite, 0, 0};

// Classifies one connected component of the Dynkin diagram. `label(i, j)`
// uses local indices: -1 for no edge, kInfinity for an infinite edge.
FamilyTag classify_component(std::size_t n,
                             const std::vector<std::vector<int>> &label) {
  const int rank = static_cast<int>(n);
  FamilyTag indefinite = kIndefinite;
  indefinite.rank = rank;
  if (n == 1)
    return {CoxeterFamily::A, 1, 0};

  std::size_t edge_count = 0;
  std::vector<int> degree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (label[i][j] < 0)
        continue;
      if (label[i][j] == DynkinDiagram::kInfinity)
        return indefinite;
      ++degree[i];
      if (i < j)
        ++edge_count;
    }
  }
  if (edge_count != n - 1)
    return indefinite; // contains a cycle

  if (n == 2) {
    int m = label[0][1];
    if (m == 3) return {CoxeterFamily::A, 2, 0};
    if (m == 4) return {CoxeterFamily::B, 2, 0};
    return {CoxeterFamily::I2, 2, m};
  }

  std::vector<std::size_t> branch;
  for (std::size_t i = 0; i < n; ++i) {
    if (degree[i] > 3)
      return indefinite;
    if (degree[i] == 3)
      branch.push_back(i);
  }
  if (branch.size() > 1)
    return indefinite;

  if (branch.size() == 1) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (label[i][j] > 3)
          return indefinite;
    // Arm lengths from the branch vertex.
    std::vector<int> arms;
    std::size_t c = branch[0];
    for (std::size_t start = 0; start < n; ++start) {
      if (label[c][start] < 0)
        continue;
      int len = 1;
      std::size_t prev = c, cur = start;
      for (;;) {
        std::size_t nxt = n;
        for (std::size_t k = 0; k < n; ++k)
          if (k != prev && label[cur][k] >= 0)
            nxt = k;
        if (nxt == n)
          break;
        prev = cur;
        cur = nxt;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1)
      return {CoxeterFamily::D, rank, 0};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
      return {CoxeterFamily::E, rank, 0};
    return indefinite;
  }

  // Path: walk from an endpoint and read the label sequence.
  std::size_t start = 0;
  while (degree[start] != 1)
    ++start;
  std::vector<int> seq;
  std::size_t prev = n, cur = start;
  for (;;) {
    std::size_t nxt = n;
    for (std::size_t k = 0; k < n; ++k)
      if (k != prev && label[cur][k] >= 0)
        nxt = k;
    if (nxt == n)
      break;
    seq.push_back(label[cur][nxt]);
    prev = cur;
    cur = nxt;
  }
  std::vector<std::size_t> heavy;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i] > 3)
      heavy.push_back(i);
  if (heavy.empty())
    return {CoxeterFamily::A, rank, 0};
  if (heavy.size() > 1)
    return indefinite;
  const std::size_t j = heavy[0];
  const bool at_end = j == 0 || j + 1 == seq.size();
  const int m = seq[j];
  if (m == 4 && at_end)
    return {CoxeterFamily::B, rank, 0};
  if (m == 4 && n == 4 && j == 1)
    return {CoxeterFamily::F, 4, 0};
  if (m == 5 && at_end && (n == 3 || n == 4))
    return {CoxeterFamily::H, rank, 0};
  return indefinite;
}

} // namespace

FiniteTypeReport is_finite_type(const CoxeterSystem &sys) {
  const auto &g = sys.diagram();
  const std::size_t n = g.size();
  // Dynkin adjacency: -1 none, kInfinity for m = infinity, else m >= 3.
  auto dyn = [&](std::size_t u, std::size_t v) {
    int m = g.label(u, v);
    if (m == 0) return DynkinDiagram::kInfinity;
    return m >= 3 ? m : -1;
  };

  FiniteTypeReport report;
  report.is_finite = true;
  std::vector<char> seen(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s])
      continue;
    VertexSet comp;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (std::size_t v = 0; v < n; ++v)
        if (v != u && !seen[v] && dyn(u, v) != -1) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    std::vector<std::vector<int>> local(comp.size(), std::vector<int>(comp.size(), -1));
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = 0; j < comp.size(); ++j)
        if (i != j)
          local[i][j] = dyn(comp[i], comp[j]);
    FamilyTag tag = classify_component(comp.size(), local);
    report.is_finite = report.is_finite && tag.finite();
    report.components.push_back({std::move(comp), tag});
  }
  return report;
}

bool is_finite_type(const LabeledGraph &diagram) {
  return is_finite_type(CoxeterSystem(diagram)).is_finite;
}

CoxeterEnds coxeter_ends(const CoxeterSystem &sys) {
  const auto &g = sys.diagram();
  if (g.size() > kMaxSeparatorVertices)
    throw DiagramTooLarge(g.size(), kMaxSeparatorVertices);

  CoxeterEnds out;
  if (is_finite_type(sys).is_finite) {
    out.ends = EndCount::Zero;
    return out;
  }

  auto admissible = [&](const VertexSet &k) {
    return is_finite_type(induced_subgraph(g, k));
  };
  auto separators = enumerate_clique_separators(g, admissible);
  if (separators.empty()) {
    out.ends = EndCount::One;
    return out;
  }

  // Two ends: a finite core whose complement is two unrelated vertices,
  // each joined to the whole core by label-2 edges. All candidate cores
  // have n - 2 vertices, so the first pair in index order gives the
  // lexicographically least core.
  const std::size_t n = g.size();
  for (std::size_t x = 0; x < n && !out.two_ended; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (g.adjacent(x, y))
        continue;
      VertexSet core;
      bool ok = true;
      for (std::size_t v = 0; v < n && ok; ++v) {
        if (v == x || v == y)
          continue;
        ok = g.label(v, x) == 2 && g.label(v, y) == 2;
        core.push_back(v);
      }
      if (!ok || !admissible(core))
        continue;
      out.two_ended = CoxeterEnds::TwoEnded{core, x, y};
      break;
    }
  }
  if (out.two_ended) {
    out.ends = EndCount::Two;
    out.separator = out.two_ended->core;
  } else {
    out.ends = EndCount::Infinite;
    out.separator = separators.front();
  }
  return out;
}

ArtinEnds artin_one_ended(const LabeledGraph &diagram) {
  if (diagram.empty())
    throw EmptyDiagram();
  if (diagram.size() == 1)
    return {false, EndCount::Two};
  if (!is_connected(diagram))
    return {false, EndCount::Infinite};
  return {true, EndCount::One};
}

} // namespace ginf
