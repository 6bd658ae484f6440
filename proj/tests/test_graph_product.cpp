#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include <Eigen/Dense>

#include "ginf/coxeter.hpp"
#include "ginf/error.hpp"
#include "ginf/graph_product.hpp"
#include "ginf/simplicial.hpp"
#include "test_support.hpp"

using namespace ginf;
using namespace ginf::testing;

namespace {

const VertexProfile kZ2 = VertexProfile::finite_group(2);
const VertexProfile kZ3 = VertexProfile::finite_group(3);
const VertexProfile kZ = VertexProfile::infinite_group(EndCount::Two, Tri::Yes, Tri::Yes);
const VertexProfile kF2 = VertexProfile::infinite_group(EndCount::Infinite, Tri::Yes, Tri::Yes);

GraphProductSpec uniform(const LabeledGraph &g, const VertexProfile &p) {
  return {g, std::vector<VertexProfile>(g.size(), p)};
}

GraphProductSpec hexagon() {
  auto g = cycle(6);
  std::vector<VertexProfile> ps;
  for (std::size_t i = 0; i < 6; ++i)
    ps.push_back(i % 2 ? kF2 : kZ2);
  return {g, ps};
}

// Rational first Betti number from floating-point ranks of the boundary maps.
std::size_t betti1(const SimplicialComplex2 &l) {
  const auto &es = l.edges();
  const auto &ts = l.triangles();
  Eigen::MatrixXd d1 = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(l.vertices().size()),
                                             static_cast<Eigen::Index>(es.size()));
  for (std::size_t j = 0; j < es.size(); ++j) {
    d1(static_cast<Eigen::Index>(es[j].first), static_cast<Eigen::Index>(j)) = -1;
    d1(static_cast<Eigen::Index>(es[j].second), static_cast<Eigen::Index>(j)) = 1;
  }
  Eigen::MatrixXd d2 = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(es.size()),
                                             static_cast<Eigen::Index>(ts.size()));
  auto idx = [&](std::size_t u, std::size_t v) {
    return static_cast<Eigen::Index>(std::find(es.begin(), es.end(), std::make_pair(u, v)) -
                                     es.begin());
  };
  for (std::size_t j = 0; j < ts.size(); ++j) {
    auto c = static_cast<Eigen::Index>(j);
    d2(idx(ts[j][1], ts[j][2]), c) += 1;
    d2(idx(ts[j][0], ts[j][2]), c) -= 1;
    d2(idx(ts[j][0], ts[j][1]), c) += 1;
  }
  auto r = [](const Eigen::MatrixXd &m) {
    if (m.size() == 0)
      return Eigen::Index{0};
    return Eigen::FullPivLU<Eigen::MatrixXd>(m).rank();
  };
  return es.size() - static_cast<std::size_t>(r(d1)) - static_cast<std::size_t>(r(d2));
}

LabeledGraph octahedron() {
  // Complement of a perfect matching on 6 vertices.
  LabeledGraph g(names(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if (j != i + 3)
        g.add_edge(i, j, 2);
  return g;
}

} // namespace

TEST_SUITE_BEGIN("graph-product-engine");

TEST_CASE("graph_product_ends") {
  SUBCASE("hexagon with alternating Z2 and Z*Z is one-ended") {
    auto e = graph_product_ends(hexagon());
    CHECK(e.ends == EndCount::One);
    CHECK(e.witness == GraphProductEnds::Witness::NoSplitting);
  }
  SUBCASE("two isolated Z2 vertices") {
    auto e = graph_product_ends(uniform(edgeless(2), kZ2));
    CHECK(e.ends == EndCount::Two);
    CHECK(e.witness == GraphProductEnds::Witness::JoinWithDihedral);
    CHECK(e.gamma2 == VertexSet{0, 1});
  }
  SUBCASE("complete K2 with Z3 and F2") {
    auto e = graph_product_ends({complete(2), {kZ3, kF2}});
    CHECK(e.ends == EndCount::Infinite);
    CHECK(e.witness == GraphProductEnds::Witness::CompleteOneMultiEnded);
    CHECK(e.vertex == 1);
  }
  SUBCASE("complete K2 with Z2 and Z2") {
    CHECK(graph_product_ends(uniform(complete(2), kZ2)).ends == EndCount::Zero);
  }
  SUBCASE("complete graph with one Z and finite groups is two-ended") {
    auto e = graph_product_ends({complete(3), {kZ2, kZ, kZ3}});
    CHECK(e.ends == EndCount::Two);
  }
  SUBCASE("complete graph with two infinite groups is one-ended") {
    CHECK(graph_product_ends({complete(3), {kZ, kZ, kZ3}}).ends == EndCount::One);
  }
  SUBCASE("isolated Z2 and Z3 split with infinitely many ends") {
    auto e = graph_product_ends({edgeless(2), {kZ2, kZ3}});
    CHECK(e.ends == EndCount::Infinite);
    CHECK(e.witness == GraphProductEnds::Witness::VisualSplitting);
    CHECK(e.intersection.empty());
  }
  SUBCASE("separator with an infinite group does not count") {
    // a - b - c path where b is Z: the only clique separator is {b}.
    CHECK(graph_product_ends({path(3), {kZ2, kZ, kZ2}}).ends == EndCount::One);
    CHECK(graph_product_ends({path(3), {kZ, kZ2, kZ}}).ends == EndCount::Infinite);
  }
  SUBCASE("missing profile information") {
    GraphProductSpec s = uniform(edgeless(2), kZ2);
    s.profiles[1].ends.reset();
    CHECK_THROWS_AS(graph_product_ends(s), UnknownProfile);
    CHECK_THROWS_AS(GraphProductSpec::from_map(edgeless(2), {{"v0", kZ2}}), UnknownProfile);
  }
  SUBCASE("zero ends exactly for complete graphs of finite groups") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
      auto g = random_graph(rng, 1 + trial % 6, 0.7);
      std::vector<VertexProfile> ps;
      bool all_finite = true;
      for (std::size_t v = 0; v < g.size(); ++v) {
        int r = static_cast<int>(rng() % 4);
        ps.push_back(r == 0 ? kZ : r == 1 ? kF2 : r == 2 ? kZ2 : kZ3);
        all_finite = all_finite && r >= 2;
      }
      auto e = graph_product_ends({g, ps});
      CHECK((e.ends == EndCount::Zero) == (is_complete(g) && all_finite));
    }
  }
  SUBCASE("right-angled Coxeter groups agree with the Coxeter decider") {
    std::mt19937 rng(32);
    for (int trial = 0; trial < 500; ++trial) {
      auto g = random_graph(rng, 1 + trial % 8, 0.2 + 0.1 * (trial % 7));
      INFO(trial);
      CHECK(graph_product_ends(uniform(g, kZ2)).ends == coxeter_ends(CoxeterSystem(g)).ends);
    }
  }
}

TEST_CASE("graph_product_semistable") {
  using V = GraphProductSemistability::Verdict;
  const VertexProfile bad = VertexProfile::infinite_group(EndCount::One, Tri::No, Tri::Yes);

  SUBCASE("hexagon") {
    CHECK(graph_product_semistable(hexagon()).verdict == V::Semistable);
  }
  SUBCASE("non-semistable vertex with a finite complete link") {
    // star: v joined to a and b, a - b adjacent, both finite.
    auto r = graph_product_semistable({complete(3), {bad, kZ2, kZ3}});
    CHECK(r.verdict == V::NotSemistable);
    CHECK(r.vertex == 0);
  }
  SUBCASE("link containing an infinite group") {
    CHECK(graph_product_semistable({complete(3), {bad, kZ2, kZ}}).verdict == V::Semistable);
  }
  SUBCASE("link that is not complete") {
    CHECK(graph_product_semistable({path(3), {kZ2, bad, kZ2}}).verdict == V::Semistable);
    CHECK(graph_product_semistable({path(3), {bad, kZ2, kZ2}}).verdict == V::NotSemistable);
  }
  SUBCASE("unknowns") {
    VertexProfile maybe = bad;
    maybe.semistable = Tri::Unknown;
    CHECK(graph_product_semistable({path(2), {maybe, kZ2}}).verdict == V::Unknown);
    VertexProfile not_fp = kZ;
    not_fp.finitely_presented = Tri::Unknown;
    CHECK(graph_product_semistable({path(2), {not_fp, kZ2}}).verdict == V::Unknown);
  }
  SUBCASE("disconnected graph") {
    CHECK_THROWS_AS(graph_product_semistable(uniform(edgeless(2), kZ2)), DisconnectedGraph);
  }
  SUBCASE("refining unknown information never flips a definite verdict") {
    std::mt19937 rng(33);
    for (int trial = 0; trial < 400; ++trial) {
      auto g = random_graph(rng, 2 + trial % 5, 0.6);
      if (!is_connected(g))
        continue;
      std::vector<VertexProfile> full, partial;
      for (std::size_t v = 0; v < g.size(); ++v) {
        VertexProfile p = rng() % 2 ? VertexProfile::finite_group(2)
                                    : VertexProfile::infinite_group(
                                          EndCount::One, rng() % 2 ? Tri::Yes : Tri::No,
                                          rng() % 4 ? Tri::Yes : Tri::No);
        full.push_back(p);
        if (rng() % 3 == 0) {
          p.semistable = Tri::Unknown;
          if (rng() % 2)
            p.finite.reset();
          if (rng() % 4 == 0)
            p.finitely_presented = Tri::Unknown;
        }
        partial.push_back(p);
      }
      auto coarse = graph_product_semistable({g, partial}).verdict;
      auto fine = graph_product_semistable({g, full}).verdict;
      if (coarse != V::Unknown)
        CHECK(coarse == fine);
    }
  }
}

TEST_CASE("simplicial complexes") {
  SUBCASE("is_flag") {
    CHECK(is_flag(flag_complex(cycle(4))));
    SimplicialComplex2 hollow({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}, {});
    CHECK_FALSE(is_flag(hollow));
    CHECK(is_flag(flag_complex(complete(3))));
  }
  SUBCASE("structure validation") {
    CHECK_THROWS_AS(SimplicialComplex2({"a", "b", "c"}, {{0, 1}}, {{0, 1, 2}}),
                    InvalidStructure);
    CHECK_THROWS_AS(SimplicialComplex2({"a", "b"}, {{0, 1}, {1, 0}}, {}), InvalidStructure);
  }
  SUBCASE("first homology") {
    CHECK(first_homology(flag_complex(cycle(4))).rank == 1);
    CHECK(first_homology(flag_complex(complete(3))).trivial());
    CHECK(first_homology(flag_complex(octahedron())).trivial());
    CHECK(first_homology(flag_complex(edgeless(3))).rank == 0);
    std::mt19937 rng(34);
    for (int trial = 0; trial < 200; ++trial) {
      auto l = flag_complex(random_graph(rng, 2 + trial % 8, 0.5));
      auto h = first_homology(l);
      CHECK(h.rank == betti1(l));
    }
  }
}

TEST_CASE("raag_simply_connected_at_infinity") {
  SUBCASE("2-simplex") {
    auto r = raag_simply_connected_at_infinity(flag_complex(complete(3)));
    CHECK(r.answer == Tri::Yes);
  }
  SUBCASE("path with two edges") {
    auto r = raag_simply_connected_at_infinity(flag_complex(path(3)));
    CHECK(r.answer == Tri::No);
    CHECK(r.cut_vertex == 1);
  }
  SUBCASE("4-cycle") {
    auto r = raag_simply_connected_at_infinity(flag_complex(cycle(4)));
    CHECK(r.answer == Tri::No);
    REQUIRE(r.h1);
    CHECK(r.h1->to_string() == "Z");
  }
  SUBCASE("octahedral sphere") {
    CHECK(raag_simply_connected_at_infinity(flag_complex(octahedron())).answer == Tri::Yes);
  }
  SUBCASE("a triangulated disc") {
    // Hexagon coned off to a centre.
    LabeledGraph g = cycle(6);
    LabeledGraph d(names(7));
    for (auto e : g.edges())
      d.add_edge(e.u, e.v, 2);
    for (std::size_t i = 0; i < 6; ++i)
      d.add_edge(i, 6, 2);
    CHECK(raag_simply_connected_at_infinity(flag_complex(d)).answer == Tri::Yes);
  }
  SUBCASE("disconnected") {
    CHECK(raag_simply_connected_at_infinity(flag_complex(edgeless(3))).answer == Tri::No);
  }
  SUBCASE("errors") {
    SimplicialComplex2 hollow({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}, {});
    CHECK_THROWS_AS(raag_simply_connected_at_infinity(hollow), NotFlag);
    CHECK_THROWS_AS(raag_simply_connected_at_infinity(flag_complex(edgeless(1))),
                    ExcludedComplex);
    CHECK_THROWS_AS(raag_simply_connected_at_infinity(flag_complex(complete(2))),
                    ExcludedComplex);
    CHECK_THROWS_AS(raag_simply_connected_at_infinity(SimplicialComplex2{}), ExcludedComplex);
  }
  SUBCASE("a tiny budget gives Unknown, never a wrong answer") {
    auto r = raag_simply_connected_at_infinity(flag_complex(octahedron()), 1);
    CHECK(r.answer == Tri::Unknown);
  }
  SUBCASE("cut vertex implies a one-ended RAAG") {
    std::mt19937 rng(35);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
      auto g = random_graph(rng, 3 + trial % 6, 0.45);
      if (!is_connected(g))
        continue;
      auto r = raag_simply_connected_at_infinity(flag_complex(g));
      if (r.cut_vertex) {
        ++checked;
        CHECK(graph_product_ends(uniform(g, kZ)).ends == EndCount::One);
      }
    }
    CHECK(checked > 20);
  }
  SUBCASE("yes answers have trivial H1 and no cut vertex") {
    std::mt19937 rng(36);
    int yes = 0;
    for (int trial = 0; trial < 300; ++trial) {
      auto l = flag_complex(random_graph(rng, 3 + trial % 7, 0.7));
      auto r = raag_simply_connected_at_infinity(l);
      if (r.answer == Tri::Yes) {
        ++yes;
        CHECK(first_homology(l).trivial());
        CHECK(cut_vertices(l).empty());
      }
    }
    CHECK(yes > 20);
  }
}

TEST_SUITE_END();
