#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>

#include "coxeter_oracle.hpp"
#include "ginf/cayley.hpp"
#include "ginf/coxeter.hpp"
#include "ginf/error.hpp"
#include "ginf/graph_product.hpp"
#include "test_support.hpp"

using namespace ginf;
using namespace ginf::testing;

namespace {

std::vector<std::size_t> counts(const EndEstimate &e) {
  std::vector<std::size_t> out;
  for (auto [r, c] : e.per_radius)
    out.push_back(c);
  return out;
}

/// Inverse of each generator, found by search over the generating set.
std::vector<std::size_t> inverse_table(const GroupOracle &o) {
  const auto n = o.generators().size();
  std::vector<std::size_t> inv(n, n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (o.normalize({g, h}) == o.identity()) {
        inv[g] = h;
        break;
      }
  return inv;
}

std::vector<std::size_t> random_word(std::mt19937 &rng, std::size_t ngen, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), gen(0, ngen - 1);
  std::vector<std::size_t> w(len(rng));
  for (auto &x : w)
    x = gen(rng);
  return w;
}

void check_congruence(const GroupOracle &o, std::size_t pairs, std::uint32_t seed) {
  std::mt19937 rng(seed);
  const auto ngen = o.generators().size();
  auto inv = inverse_table(o);
  for (std::size_t g = 0; g < ngen; ++g) {
    REQUIRE(inv[g] < ngen);
    CHECK(o.generators()[g].involution == (inv[g] == g));
  }
  for (std::size_t i = 0; i < pairs; ++i) {
    auto u = random_word(rng, ngen, 12);
    auto v = random_word(rng, ngen, 12);
    auto uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    ElementKey k = o.normalize(u);
    for (auto g : v)
      k = o.multiply(k, g);
    CHECK(k == o.normalize(uv));

    auto uinv = u;
    std::reverse(uinv.begin(), uinv.end());
    for (auto &g : uinv)
      g = inv[g];
    auto cancel = u;
    cancel.insert(cancel.end(), uinv.begin(), uinv.end());
    CHECK(o.normalize(cancel) == o.identity());
    // u v v^-1 == u
    auto vinv = v;
    std::reverse(vinv.begin(), vinv.end());
    for (auto &g : vinv)
      g = inv[g];
    auto back = uv;
    back.insert(back.end(), vinv.begin(), vinv.end());
    CHECK(o.normalize(back) == o.normalize(u));
  }
}

/// Component counts for r = 0 .. R-1 never decrease.
bool counts_monotone(const BallGraph &ball) {
  if (ball.radius < 2)
    return true;
  auto e = estimate_ends(ball, 0, ball.radius - 2);
  auto c = counts(e);
  return std::is_sorted(c.begin(), c.end());
}

LabeledGraph coxeter_diagram(std::size_t n, const std::vector<int> &labels) {
  return from_labels(n, labels);
}

/// Sphere sizes of the radius-R ball in the geometric representation.
std::vector<std::size_t> matrix_spheres(const LabeledGraph &g, std::size_t radius) {
  const auto n = static_cast<Eigen::Index>(g.size());
  auto refl = reflection_matrices(g);
  std::set<MatrixKey> seen;
  std::vector<Eigen::MatrixXd> frontier{Eigen::MatrixXd::Identity(n, n)};
  seen.insert(matrix_key(frontier[0]));
  std::vector<std::size_t> spheres{1};
  for (std::size_t r = 1; r <= radius; ++r) {
    std::vector<Eigen::MatrixXd> next;
    for (const auto &m : frontier)
      for (const auto &s : refl) {
        Eigen::MatrixXd p = m * s;
        if (seen.insert(matrix_key(p)).second)
          next.push_back(p);
      }
    spheres.push_back(next.size());
    frontier = std::move(next);
  }
  return spheres;
}

} // namespace

TEST_CASE("build_ball examples") {
  SUBCASE("Z at radius 3") {
    auto b = build_ball(*free_abelian_oracle(1), 3);
    CHECK(b.size() == 7);
    auto d = b.distance;
    std::sort(d.begin(), d.end());
    CHECK(d == std::vector<std::uint32_t>{0, 1, 1, 2, 2, 3, 3});
  }
  SUBCASE("F2 at radius 2") {
    auto b = build_ball(*free_oracle(2), 2);
    CHECK(b.size() == 17);
    CHECK(b.sphere_sizes() == std::vector<std::size_t>{1, 4, 12});
  }
  SUBCASE("I2(3) is exhausted") {
    auto b = build_ball(*coxeter_oracle(CoxeterSystem(path(2, 3))), 10);
    CHECK(b.size() == 6);
    CHECK(b.exhausted());
    CHECK(b.sphere_sizes() == std::vector<std::size_t>{1, 2, 2, 1, 0, 0, 0, 0, 0, 0, 0});
  }
  SUBCASE("radius 0") {
    auto b = build_ball(*free_oracle(2), 0);
    CHECK(b.size() == 1);
    CHECK(b.frontier[0] == 1);
  }
  SUBCASE("direct product of two copies of Z") {
    auto z = free_abelian_oracle(1);
    auto b = build_ball(*compose_oracles(CompositionKind::DirectProduct, {z, z}), 2);
    CHECK(b.size() == 13);
  }
  SUBCASE("element cap") {
    CHECK_THROWS_AS(build_ball(*free_oracle(2), 6, 100), MemoryCapExceeded);
    CHECK_NOTHROW(build_ball(*free_oracle(2), 2, 17));
  }
}

TEST_CASE("F2 sphere sizes") {
  auto b = build_ball(*free_oracle(2), 6);
  auto s = b.sphere_sizes();
  for (std::size_t r = 1; r <= 6; ++r) {
    std::size_t expect = 4;
    for (std::size_t i = 1; i < r; ++i)
      expect *= 3;
    CHECK(s[r] == expect);
  }
}

TEST_CASE("estimate_ends examples") {
  SUBCASE("Z") {
    auto e = estimate_ends(build_ball(*free_abelian_oracle(1), 12), 2, 8);
    CHECK(counts(e) == std::vector<std::size_t>(7, 2));
    CHECK(e.verdict == EndEstimate::Verdict::Stabilized);
    CHECK(e.stabilized == EndCount::Two);
  }
  SUBCASE("Z^2") {
    auto e = estimate_ends(build_ball(*free_abelian_oracle(2), 10), 2, 6);
    CHECK(counts(e) == std::vector<std::size_t>(5, 1));
    CHECK(e.stabilized == EndCount::One);
  }
  SUBCASE("F2") {
    auto e = estimate_ends(build_ball(*free_oracle(2), 8), 1, 5);
    CHECK(counts(e) == std::vector<std::size_t>{4, 12, 36, 108, 324});
    CHECK(e.verdict == EndEstimate::Verdict::GrowingToInfinity);
    CHECK_FALSE(e.stabilized.has_value());
  }
  SUBCASE("free product of two Z2") {
    auto z2 = cyclic_oracle(2);
    auto e = estimate_ends(build_ball(*compose_oracles(CompositionKind::FreeProduct, {z2, z2}), 10),
                           2, 8);
    CHECK(e.stabilized == EndCount::Two);
  }
  SUBCASE("free product of three Z2") {
    auto z2 = cyclic_oracle(2);
    auto e = estimate_ends(
        build_ball(*compose_oracles(CompositionKind::FreeProduct, {z2, z2, z2}), 10), 2, 8);
    CHECK(e.verdict == EndEstimate::Verdict::GrowingToInfinity);
  }
  SUBCASE("finite group exhausted") {
    auto e = estimate_ends(build_ball(*dihedral_oracle(5), 10), 0, 8);
    CHECK(counts(e) == std::vector<std::size_t>(9, 0));
    CHECK(e.stabilized == EndCount::Zero);
  }
  SUBCASE("finite group closing beyond the radius") {
    // D4 has longest element of length 12.
    LabeledGraph d4(names(4));
    d4.add_edge(0, 1, 3);
    d4.add_edge(0, 2, 3);
    d4.add_edge(0, 3, 3);
    d4.add_edge(1, 2, 2);
    d4.add_edge(1, 3, 2);
    d4.add_edge(2, 3, 2);
    auto b = build_ball(*coxeter_oracle(CoxeterSystem(d4)), 10);
    CHECK_FALSE(b.exhausted());
    auto e = estimate_ends(b, 2, 8);
    CHECK(e.verdict == EndEstimate::Verdict::Inconclusive);
  }
  SUBCASE("window validation") {
    auto b = build_ball(*free_abelian_oracle(1), 6);
    CHECK_THROWS_AS(estimate_ends(b, 2, 5), WindowTooSmall);
    CHECK_THROWS_AS(estimate_ends(b, 3, 2), WindowTooSmall);
    CHECK_NOTHROW(estimate_ends(b, 4, 4));
  }
}

TEST_CASE("sample_geodesic_segments") {
  SUBCASE("Z") {
    auto b = build_ball(*free_abelian_oracle(1), 5);
    auto segs = sample_geodesic_segments(b, 10);
    REQUIRE(segs.size() == 2);
    CHECK(segs[0] == std::vector<std::size_t>(5, 0));
    CHECK(segs[1] == std::vector<std::size_t>(5, 1));
  }
  SUBCASE("finite group") {
    CHECK(sample_geodesic_segments(build_ball(*dihedral_oracle(4), 10), 5).empty());
  }
  SUBCASE("F2") {
    auto o = free_oracle(2);
    auto b = build_ball(*o, 4);
    auto segs = sample_geodesic_segments(b, 3);
    REQUIRE(segs.size() == 3);
    std::set<std::size_t> first_letters;
    for (const auto &w : segs) {
      CHECK(w.size() == 4);
      CHECK(o->normalize(w).size() == 4); // freely reduced
      first_letters.insert(w[0]);
    }
    CHECK(first_letters.size() == 3);
  }
  SUBCASE("segments are geodesic in the ball") {
    auto o = free_abelian_oracle(2);
    auto b = build_ball(*o, 6);
    for (const auto &w : sample_geodesic_segments(b, 10)) {
      CHECK(w.size() == 6);
      std::uint32_t u = 0;
      for (auto g : w) {
        auto next = b.neighbors[u][g];
        REQUIRE(next != kOutsideBall);
        CHECK(b.distance[next] == b.distance[u] + 1);
        u = next;
      }
    }
  }
}

TEST_CASE("oracle congruence law") {
  const std::size_t pairs = 10000;
  LabeledGraph raag = path(4);
  raag.add_edge(0, 3, 2);
  const std::vector<std::pair<std::string, OraclePtr>> oracles{
      {"Z^3", free_abelian_oracle(3)},
      {"F3", free_oracle(3)},
      {"Z/7", cyclic_oracle(7)},
      {"D6", dihedral_oracle(6)},
      {"Coxeter", coxeter_oracle(CoxeterSystem(from_labels(4, {3, 0, 2, 4, 0, 5})))},
      {"RAAG", cyclic_graph_product_oracle(raag, {0, 0, 0, 0})},
      {"mixed graph product", cyclic_graph_product_oracle(path(4), {2, 0, 3, 2})},
      {"direct", compose_oracles(CompositionKind::DirectProduct,
                                 {free_oracle(2), cyclic_oracle(3)})},
      {"free", compose_oracles(CompositionKind::FreeProduct,
                               {free_abelian_oracle(2), cyclic_oracle(2), dihedral_oracle(3)})},
  };
  std::uint32_t seed = 1;
  for (const auto &[name, o] : oracles) {
    CAPTURE(name);
    check_congruence(*o, pairs, seed++);
  }
}

TEST_CASE("graph-product oracle on small cases") {
  // Commuting vertices give Z^2; non-adjacent give F2.
  auto g = path(2);
  CHECK(build_ball(*cyclic_graph_product_oracle(g, {0, 0}), 3).size() ==
        build_ball(*free_abelian_oracle(2), 3).size());
  CHECK(build_ball(*cyclic_graph_product_oracle(edgeless(2), {0, 0}), 3).size() ==
        build_ball(*free_oracle(2), 3).size());
  // Z2 x Z3 is cyclic of order 6.
  auto b = build_ball(*cyclic_graph_product_oracle(g, {2, 3}), 10);
  CHECK(b.exhausted());
  CHECK(b.size() == 6);
  CHECK_THROWS_AS(cyclic_graph_product_oracle(g, {1, 2}), InvalidStructure);
}

TEST_CASE("Coxeter oracle agrees with the geometric representation") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = random_graph(rng, 3 + static_cast<std::size_t>(trial % 2), 0.7, 5);
    CAPTURE(describe(g));
    auto b = build_ball(*coxeter_oracle(CoxeterSystem(g)), 6);
    CHECK(b.sphere_sizes() == matrix_spheres(g, 6));
  }
}

TEST_CASE("ball invariants and determinism") {
  auto z2 = cyclic_oracle(2);
  std::vector<std::pair<std::string, OraclePtr>> oracles{
      {"Z", free_abelian_oracle(1)},
      {"Z^2", free_abelian_oracle(2)},
      {"F2", free_oracle(2)},
      {"Z2*Z2", compose_oracles(CompositionKind::FreeProduct, {z2, z2})},
      {"Z2*Z2*Z2", compose_oracles(CompositionKind::FreeProduct, {z2, z2, z2})},
  };
  for (std::size_t m = 2; m <= 8; ++m)
    oracles.emplace_back("I2(" + std::to_string(m) + ")",
                         coxeter_oracle(CoxeterSystem(path(2, static_cast<int>(m)))));
  for (const auto &[name, o] : oracles) {
    CAPTURE(name);
    for (std::size_t r = 0; r <= 7; ++r) {
      auto b = build_ball(*o, r);
      CHECK_FALSE(check_ball_invariants(b).has_value());
      CHECK(counts_monotone(b));
    }
    CHECK(build_ball(*o, 6).serialize() == build_ball(*o, 6).serialize());
  }
}

TEST_CASE("invariant checker rejects broken balls") {
  auto b = build_ball(*free_abelian_oracle(1), 3);
  auto broken = b;
  broken.distance[1] = 3;
  CHECK(check_ball_invariants(broken).has_value());
  broken = b;
  broken.neighbors[0][0] = kOutsideBall;
  CHECK(check_ball_invariants(broken).has_value());
}

TEST_CASE("estimates agree with coxeter_ends on small diagrams") {
  std::set<std::pair<std::size_t, std::vector<int>>> classes;
  classes.insert({std::size_t{0}, std::vector<int>{}});
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    std::size_t total = 1;
    for (std::size_t i = 0; i < pairs; ++i)
      total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<int> labels;
      for (std::size_t c = code, i = 0; i < pairs; ++i, c /= 3)
        labels.push_back(std::array<int, 3>{0, 2, 3}[c % 3]);
      classes.insert({n, canonical_labels(n, labels)});
    }
  }
  CHECK(classes.size() == 81);

  std::size_t compared = 0, disagreements = 0;
  for (const auto &[n, labels] : classes) {
    auto g = coxeter_diagram(n, labels);
    CAPTURE(describe(g));
    auto est = estimate_ends(build_ball(*coxeter_oracle(CoxeterSystem(g)), 10), 2, 8);
    if (est.verdict == EndEstimate::Verdict::Stabilized)
      CHECK(est.stabilized != EndCount::Infinite);
    if (est.verdict == EndEstimate::Verdict::Inconclusive)
      continue;
    const EndCount exact = n == 0 ? EndCount::Zero : coxeter_ends(CoxeterSystem(g)).ends;
    const EndCount empirical =
        est.verdict == EndEstimate::Verdict::Stabilized ? *est.stabilized : EndCount::Infinite;
    ++compared;
    if (exact != empirical)
      ++disagreements;
    CHECK(exact == empirical);
  }
  MESSAGE("compared " << compared << " of " << classes.size() << " diagrams");
  CHECK(compared >= 70);
  CHECK(disagreements == 0);
}

TEST_CASE("graph_product_ends agrees with estimates for RAAGs and RACGs") {
  std::mt19937 rng(11);
  std::size_t compared = 0, skipped = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    auto g = random_graph(rng, n, 0.6);
    const bool racg = trial % 2 == 0;
    CAPTURE(describe(g));
    CAPTURE(racg);
    std::vector<VertexProfile> profiles(
        n, racg ? VertexProfile::finite_group(2)
                : VertexProfile::infinite_group(EndCount::Two, Tri::Yes, Tri::Yes));
    auto exact = graph_product_ends(GraphProductSpec{g, profiles}).ends;
    BallGraph ball;
    try {
      ball = build_ball(*cyclic_graph_product_oracle(g, std::vector<std::size_t>(n, racg ? 2 : 0)),
                        8, 400000);
    } catch (const MemoryCapExceeded &) {
      ++skipped;
      continue;
    }
    auto est = estimate_ends(ball, 2, 6);
    if (est.verdict == EndEstimate::Verdict::Inconclusive) {
      ++skipped;
      continue;
    }
    ++compared;
    CHECK((exact == EndCount::Zero) == (est.stabilized == EndCount::Zero));
    const EndCount empirical =
        est.verdict == EndEstimate::Verdict::Stabilized ? *est.stabilized : EndCount::Infinite;
    CHECK(exact == empirical);
  }
  MESSAGE("compared " << compared << ", skipped " << skipped);
  CHECK(compared >= 40);
}
