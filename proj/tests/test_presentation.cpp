#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "ginf/error.hpp"
#include "ginf/group_registry.hpp"
#include "ginf/labeled_graph.hpp"
#include "test_support.hpp"

using namespace ginf;
using namespace ginf::testing;

namespace {

// Independent oracle: scan every vertex subset, keep the cliques whose
// removal leaves >= 2 components (components found by repeated DFS).
std::vector<VertexSet> brute_force_separators(const LabeledGraph &g,
                                              const VertexSetPredicate &admissible) {
  const std::size_t n = g.size();
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexSet k;
    for (std::size_t v = 0; v < n; ++v)
      if (mask & (1u << v))
        k.push_back(v);
    bool clique = true;
    for (auto a : k)
      for (auto b : k)
        if (a != b && !g.adjacent(a, b))
          clique = false;
    if (!clique || !admissible(k))
      continue;
    std::vector<int> comp(n, -1);
    int count = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if ((mask >> s) & 1u || comp[s] >= 0)
        continue;
      std::vector<std::size_t> todo{s};
      comp[s] = count;
      while (!todo.empty()) {
        auto u = todo.back();
        todo.pop_back();
        for (std::size_t w = 0; w < n; ++w)
          if (!((mask >> w) & 1u) && comp[w] < 0 && g.adjacent(u, w)) {
            comp[w] = count;
            todo.push_back(w);
          }
      }
      ++count;
    }
    if (count >= 2)
      out.push_back(k);
  }
  std::sort(out.begin(), out.end(), [](const VertexSet &a, const VertexSet &b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

const VertexSetPredicate kAlways = [](const VertexSet &) { return true; };

} // namespace

TEST_SUITE_BEGIN("presentation-model");

TEST_CASE("labeled graph invariants") {
  LabeledGraph g(names(3));
  CHECK_THROWS_AS(g.add_edge(0, 0, 3), InvalidStructure);
  CHECK_THROWS_AS(g.add_edge(0, 1, 1), InvalidEdgeLabel);
  g.add_edge(0, 1, 3);
  CHECK_THROWS_AS(g.add_edge(1, 0, 3), InvalidStructure);
  CHECK_THROWS_AS(LabeledGraph({"a", "a"}), DuplicateName);
  CHECK_THROWS_AS(g.require_index("zz"), UnknownVertex);
}

TEST_CASE("induced_subgraph") {
  SUBCASE("triangle restricted to a pair keeps the label") {
    auto t = complete(3, 3);
    auto s = induced_subgraph(t, VertexSet{0, 1});
    CHECK(s.size() == 2);
    CHECK(s.label(0, 1) == 3);
  }
  SUBCASE("empty vertex set") {
    CHECK(induced_subgraph(cycle(4), VertexSet{}).empty());
  }
  SUBCASE("opposite vertices of a 4-cycle") {
    auto s = induced_subgraph(cycle(4), VertexSet{1, 3});
    CHECK(s.size() == 2);
    CHECK(s.edge_count() == 0);
  }
  SUBCASE("unknown vertex") {
    CHECK_THROWS_AS(induced_subgraph(cycle(4), std::vector<std::string>{"nope"}),
                    UnknownVertex);
  }
  SUBCASE("idempotent") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      auto g = random_graph(rng, 7, 0.5, 5);
      VertexSet vs;
      for (std::size_t v = 0; v < g.size(); ++v)
        if (rng() % 2)
          vs.push_back(v);
      auto once = induced_subgraph(g, vertex_names(g, vs));
      auto twice = induced_subgraph(once, vertex_names(g, vs));
      CHECK(once == twice);
    }
  }
}

TEST_CASE("link_and_star") {
  SUBCASE("centre of a 3-star") {
    LabeledGraph g({"c", "x", "y", "z"});
    g.add_edge("c", "x", 2);
    g.add_edge("c", "y", 2);
    g.add_edge("c", "z", 2);
    auto ls = link_and_star(g, "c");
    CHECK(ls.link.size() == 3);
    CHECK(ls.link.edge_count() == 0);
  }
  SUBCASE("vertex of a 4-cycle") {
    auto ls = link_and_star(cycle(4), std::size_t{0});
    CHECK(ls.link.size() == 2);
    CHECK(ls.link.edge_count() == 0);
    CHECK(ls.star.size() == 3);
    CHECK(ls.star.edge_count() == 2);
    CHECK(is_connected(ls.star));
  }
  SUBCASE("isolated vertex") {
    auto ls = link_and_star(edgeless(2), std::size_t{1});
    CHECK(ls.link.empty());
    CHECK(ls.star.size() == 1);
  }
  SUBCASE("link equals star minus the vertex") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      auto g = random_graph(rng, 6, 0.5, 4);
      for (std::size_t v = 0; v < g.size(); ++v) {
        auto ls = link_and_star(g, v);
        auto names = ls.star.vertices();
        names.erase(std::find(names.begin(), names.end(), g.name(v)));
        CHECK(ls.link == induced_subgraph(ls.star, names));
      }
    }
  }
  CHECK_THROWS_AS(link_and_star(cycle(4), "q"), UnknownVertex);
}

TEST_CASE("enumerate_clique_separators") {
  SUBCASE("4-cycle has none") {
    CHECK(enumerate_clique_separators(cycle(4), kAlways).empty());
    CHECK(brute_force_separators(cycle(4), kAlways).empty());
  }
  SUBCASE("path a-b-c") {
    auto seps = enumerate_clique_separators(path(3), kAlways);
    REQUIRE(seps.size() == 1);
    CHECK(seps[0] == VertexSet{1});
  }
  SUBCASE("two isolated vertices give the empty separator") {
    auto seps = enumerate_clique_separators(edgeless(2), kAlways);
    REQUIRE(seps.size() == 1);
    CHECK(seps[0].empty());
  }
  SUBCASE("admissibility filter") {
    auto seps = enumerate_clique_separators(
        path(3), [](const VertexSet &k) { return k != VertexSet{1}; });
    CHECK(seps.empty());
  }
  SUBCASE("too large") {
    CHECK_THROWS_AS(enumerate_clique_separators(edgeless(25), kAlways), DiagramTooLarge);
  }
  SUBCASE("agrees with brute force up to 12 vertices") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
      std::size_t n = 1 + trial % 12;
      double p = 0.15 + 0.7 * ((trial * 37) % 100) / 100.0;
      auto g = random_graph(rng, n, p, 3);
      // Admissibility that is not monotone: exclude sets containing vertex 0
      // of odd size, to exercise the filter.
      VertexSetPredicate adm = [](const VertexSet &k) {
        return !(k.size() % 2 == 1 && !k.empty() && k[0] == 0);
      };
      CHECK(enumerate_clique_separators(g, kAlways) == brute_force_separators(g, kAlways));
      CHECK(enumerate_clique_separators(g, adm) == brute_force_separators(g, adm));
    }
  }
}

TEST_CASE("parse_document") {
  SUBCASE("minimal coxeter declaration") {
    auto r = parse_document("group Dinf = coxeter { verts a b; }\n");
    REQUIRE(r.size() == 1);
    const auto &c = std::get<expr::Coxeter>(r.expr("Dinf"));
    CHECK(c.diagram.size() == 2);
    CHECK(c.diagram.edge_count() == 0);
  }
  SUBCASE("edge label 1 is rejected") {
    CHECK_THROWS_AS(parse_document("group W = coxeter { verts a b; edge a b 1; }"),
                    InvalidEdgeLabel);
  }
  SUBCASE("dangling amalgam factor") {
    CHECK_THROWS_AS(parse_document("group A = free(2)\ngroup B = free(2)\n"
                                   "group G = amalgam(A, B, C)\n"),
                    DanglingReference);
  }
  SUBCASE("duplicate group name") {
    CHECK_THROWS_AS(parse_document("group A = free(1)\ngroup A = free(2)\n"), DuplicateName);
  }
  SUBCASE("syntax errors carry positions") {
    try {
      parse_document("group A = free(1)\n  group = free(2)\n");
      FAIL("expected a syntax error");
    } catch (const SyntaxError &e) {
      CHECK(e.line() == 2);
      CHECK(e.col() == 9);
    }
    CHECK_THROWS_AS(parse_document("group A = frob(1)"), SyntaxError);
    CHECK_THROWS_AS(parse_document("assert A : Bogus\ngroup A = free(1)"), SyntaxError);
    CHECK_THROWS_AS(parse_document("group A = amalgam(X, Y, Z) [weird]"), SyntaxError);
  }
  SUBCASE("unknown vertex in an edge") {
    CHECK_THROWS_AS(parse_document("group W = coxeter { verts a b; edge a c 3; }"),
                    UnknownVertex);
  }
  SUBCASE("cyclic references") {
    CHECK_THROWS_AS(parse_document("group A = extension(B, Z)\ngroup B = extension(A, Z)\n"),
                    InvalidStructure);
  }
  SUBCASE("assertions and implicit builtins") {
    auto r = parse_document(R"(
      # hexagon graph product
      group H = graph_product { verts a:Z2 b:F2 c:Z2 d:F2 e:Z2 f:F2;
                                edge a b; edge b c; edge c d; edge d e; edge e f; edge f a; }
      assert H : Ends(One)
      assert H : not SCInf
    )");
    CHECK(r.contains("Z2"));
    CHECK(r.contains("F2"));
    CHECK(std::get<expr::Finite>(r.expr("Z2")).order == 2);
    CHECK(std::get<expr::Free>(r.expr("F2")).rank == 2);
    const auto &as = r.at("H").assertions;
    REQUIRE(as.size() == 2);
    CHECK(as[0].atom == Atom::ends_atom(EndCount::One));
    CHECK(as[1].polarity == Polarity::Fails);
  }
  SUBCASE("assertion on an undeclared group") {
    CHECK_THROWS_AS(parse_document("assert Q : Semistable"), DanglingReference);
  }
}

TEST_CASE("serialize round-trips") {
  const char *doc = R"(
    group W = coxeter { verts a b c; edge a b 3; edge b c 5; }
    group A = artin { verts s t; edge s t 3; }
    group G = graph_product { verts x:Z y:Z3 z:W; edge x y; }
    group L = amalgam(F9, F9, F81) [c_index_finite_in_both]
    group Q = amalgam(A, W, Z2) [edge_finite] [reduced]
    group H = hnn(F2, Z) [ascending] [finite_index_image]
    group E = extension(Z, F2)
    group P = direct_product(Z, Z, F3)
    group BS = commensurated(K, Z) [infinite_index] [normal]
    group K = known(thompson_F)
    group T = free_abelian(3)
    assert K : SCInf
    assert L : not Ends(Two)
  )";
  auto r = parse_document(doc);
  auto text = serialize_document(r);
  auto again = parse_document(text);
  CHECK(again == r);
  CHECK(serialize_document(again) == text);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    GroupRegistry reg;
    reg.add("W", expr::Coxeter{random_graph(rng, 1 + trial % 7, 0.5, 6)});
    reg.add("A", expr::Artin{random_graph(rng, 1 + trial % 5, 0.4, 4)});
    reg.add_assertion({"W", all_atoms()[rng() % all_atoms().size()],
                       rng() % 2 ? Polarity::Holds : Polarity::Fails,
                       AssertionSource::User});
    CHECK(parse_document(serialize_document(reg)) == reg);
  }
}

TEST_SUITE_END();
