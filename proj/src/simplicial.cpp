#include "ginf/simplicial.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "ginf/error.hpp"
#include "ginf/integer_matrix.hpp"

namespace ginf {

SimplicialComplex2::SimplicialComplex2(std::vector<std::string> vertices,
                                       std::vector<Edge> edges,
                                       std::vector<Triangle> triangles)
    : vertices_(std::move(vertices)), edges_(std::move(edges)),
      triangles_(std::move(triangles)) {
  const std::size_t n = vertices_.size();
  std::set<std::string> names(vertices_.begin(), vertices_.end());
  if (names.size() != n)
    throw InvalidStructure("complex has repeated vertex names");
  for (auto &[u, v] : edges_) {
    if (u >= n || v >= n || u == v)
      throw InvalidStructure("bad edge in complex");
    if (u > v)
      std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw InvalidStructure("complex has a repeated edge");
  for (auto &t : triangles_) {
    std::sort(t.begin(), t.end());
    if (t[2] >= n || t[0] == t[1] || t[1] == t[2])
      throw InvalidStructure("bad triangle in complex");
    for (Edge e : {Edge{t[0], t[1]}, Edge{t[0], t[2]}, Edge{t[1], t[2]}})
      if (!std::binary_search(edges_.begin(), edges_.end(), e))
        throw InvalidStructure("triangle {" + vertices_[t[0]] + ", " + vertices_[t[1]] + ", " +
                               vertices_[t[2]] + "} is missing an edge");
  }
  std::sort(triangles_.begin(), triangles_.end());
  if (std::adjacent_find(triangles_.begin(), triangles_.end()) != triangles_.end())
    throw InvalidStructure("complex has a repeated triangle");
}

LabeledGraph SimplicialComplex2::one_skeleton() const {
  LabeledGraph g(vertices_);
  for (auto [u, v] : edges_)
    g.add_edge(u, v, 2);
  return g;
}

SimplicialComplex2 flag_complex(const LabeledGraph &g) {
  std::vector<SimplicialComplex2::Edge> edges;
  std::vector<SimplicialComplex2::Triangle> tris;
  const std::size_t n = g.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b))
        continue;
      edges.push_back({a, b});
      for (std::size_t c = b + 1; c < n; ++c)
        if (g.adjacent(a, c) && g.adjacent(b, c))
          tris.push_back({a, b, c});
    }
  return SimplicialComplex2(g.vertices(), std::move(edges), std::move(tris));
}

bool is_flag(const SimplicialComplex2 &l) {
  return flag_complex(l.one_skeleton()).triangles() == l.triangles();
}

std::vector<std::size_t> cut_vertices(const SimplicialComplex2 &l) {
  LabeledGraph g = l.one_skeleton();
  const std::size_t base = connected_components(g, {}).size();
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (connected_components(g, {v}).size() > base)
      out.push_back(v);
  return out;
}

std::string Homology1::to_string() const {
  std::ostringstream os;
  if (trivial())
    return "0";
  bool first = true;
  if (rank) {
    os << "Z";
    if (rank > 1)
      os << "^" << rank;
    first = false;
  }
  for (const auto &d : torsion) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  return os.str();
}

Homology1 first_homology(const SimplicialComplex2 &l) {
  const auto &es = l.edges();
  const auto &ts = l.triangles();
  IntMatrix d1(l.vertices().size(), es.size());
  for (std::size_t j = 0; j < es.size(); ++j) {
    d1(es[j].first, j) -= 1;
    d1(es[j].second, j) += 1;
  }
  auto edge_index = [&](std::size_t u, std::size_t v) {
    return static_cast<std::size_t>(
        std::lower_bound(es.begin(), es.end(), SimplicialComplex2::Edge{u, v}) - es.begin());
  };
  IntMatrix d2(es.size(), ts.size());
  for (std::size_t j = 0; j < ts.size(); ++j) {
    const auto &t = ts[j];
    d2(edge_index(t[1], t[2]), j) += 1;
    d2(edge_index(t[0], t[2]), j) -= 1;
    d2(edge_index(t[0], t[1]), j) += 1;
  }
  Homology1 h;
  auto inv = smith_invariants(d2);
  h.rank = es.size() - rank(d1) - inv.size();
  for (const auto &d : inv)
    if (d > 1)
      h.torsion.push_back(d);
  return h;
}

namespace {

// Letters are +-(g + 1) for generator g.
using Word = std::vector<int>;

Word reduce(const Word &w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  std::size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && out[lo] == -out[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(out.begin() + static_cast<std::ptrdiff_t>(lo),
              out.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word inverse(const Word &w) {
  Word out(w.rbegin(), w.rend());
  for (int &x : out)
    x = -x;
  return out;
}

constexpr std::size_t kMaxTotalLetters = 200000;

// Eliminates generators that occur exactly once in some relator until none
// remain or no such relator exists. Returns true iff every generator is
// eliminated (the group is trivial).
bool tietze_trivializes(std::size_t gens, std::vector<Word> rels, std::size_t budget,
                        std::size_t &steps) {
  std::size_t remaining = gens;
  for (auto &r : rels)
    r = reduce(r);
  while (remaining > 0) {
    rels.erase(std::remove_if(rels.begin(), rels.end(), [](const Word &r) { return r.empty(); }),
               rels.end());
    // Pick the shortest relator with a generator occurring exactly once.
    std::size_t best_rel = rels.size();
    int best_gen = 0;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      if (best_rel < rels.size() && rels[i].size() >= rels[best_rel].size())
        continue;
      std::map<int, int> count;
      for (int x : rels[i])
        ++count[std::abs(x)];
      for (auto [g, c] : count)
        if (c == 1) {
          best_rel = i;
          best_gen = g;
          break;
        }
    }
    if (best_rel == rels.size())
      return false;

    Word r = rels[best_rel];
    auto pos = static_cast<std::size_t>(
        std::find_if(r.begin(), r.end(), [&](int x) { return std::abs(x) == best_gen; }) -
        r.begin());
    std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos), r.end());
    Word rest(r.begin() + 1, r.end());
    // g^e * rest = 1, so g = rest^{-1} when e = +1 and g = rest when e = -1.
    Word image = r[0] > 0 ? inverse(rest) : rest;
    Word image_inv = inverse(image);

    rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(best_rel));
    std::size_t total = 0;
    for (auto &w : rels) {
      if (std::none_of(w.begin(), w.end(), [&](int x) { return std::abs(x) == best_gen; }))
        continue;
      Word nw;
      for (int x : w) {
        if (x == best_gen)
          nw.insert(nw.end(), image.begin(), image.end());
        else if (x == -best_gen)
          nw.insert(nw.end(), image_inv.begin(), image_inv.end());
        else
          nw.push_back(x);
      }
      w = reduce(nw);
      total += w.size();
      if (++steps > budget || total > kMaxTotalLetters)
        return false;
    }
    --remaining;
    if (++steps > budget)
      return false;
  }
  return true;
}

} // namespace

SimpleConnectivityResult raag_simply_connected_at_infinity(const SimplicialComplex2 &l,
                                                           std::size_t tietze_budget) {
  if (!is_flag(l))
    throw NotFlag();
  const std::size_t n = l.vertices().size();
  if (n == 0 || n == 1 || (n == 2 && l.edges().size() == 1))
    throw ExcludedComplex();

  SimpleConnectivityResult out;
  LabeledGraph g = l.one_skeleton();
  if (!is_connected(g)) {
    out.answer = Tri::No;
    out.reason = "complex is disconnected";
    return out;
  }
  if (auto cuts = cut_vertices(l); !cuts.empty()) {
    out.answer = Tri::No;
    out.cut_vertex = cuts.front();
    out.reason = "cut vertex '" + l.vertices()[cuts.front()] + "'";
    return out;
  }
  out.h1 = first_homology(l);
  if (!out.h1->trivial()) {
    out.answer = Tri::No;
    out.reason = "H1 = " + out.h1->to_string();
    return out;
  }

  // Edge-path presentation of pi_1: generators are the edges outside a BFS
  // spanning tree, one relator per triangle.
  const auto &es = l.edges();
  std::vector<char> in_tree(es.size(), 0);
  std::vector<char> seen(n, 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < es.size(); ++j) {
      auto [a, b] = es[j];
      std::size_t w = a == u ? b : b == u ? a : n;
      if (w == n || seen[w])
        continue;
      seen[w] = 1;
      in_tree[j] = 1;
      queue.push_back(w);
    }
  }
  std::vector<int> gen_of(es.size(), 0);
  std::size_t gens = 0;
  for (std::size_t j = 0; j < es.size(); ++j)
    if (!in_tree[j])
      gen_of[j] = static_cast<int>(++gens);
  auto letter = [&](std::size_t u, std::size_t v) {
    auto key = SimplicialComplex2::Edge{std::min(u, v), std::max(u, v)};
    auto j = static_cast<std::size_t>(std::lower_bound(es.begin(), es.end(), key) - es.begin());
    return u < v ? gen_of[j] : -gen_of[j];
  };
  std::vector<Word> rels;
  for (const auto &t : l.triangles()) {
    Word w;
    for (int x : {letter(t[0], t[1]), letter(t[1], t[2]), letter(t[2], t[0])})
      if (x != 0)
        w.push_back(x);
    rels.push_back(w);
  }

  if (tietze_trivializes(gens, rels, tietze_budget, out.tietze_steps)) {
    out.answer = Tri::Yes;
    out.reason = "no cut vertex and the fundamental group presentation trivializes";
  } else {
    out.answer = Tri::Unknown;
    out.reason = "H1 vanishes but the Tietze search did not trivialize the fundamental group";
  }
  return out;
}

} // namespace ginf
