#include <random>

#include "doctest.h"
#include "liftdiam/covering.hpp"
#include "liftdiam/experiments.hpp"
#include "oracles.hpp"

using namespace liftdiam;

namespace {

MetricGraph triangle() { return MetricGraph::from_lengths(3, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}}); }
MetricGraph figure_eight() { return MetricGraph::from_lengths(1, {{0, 0, 1.0}, {0, 0, 1.0}}); }

CoveringGraph cycle18() {
  Permutation shift{1, 2, 3, 4, 5, 0};
  return derive_cover(triangle(), {6, {identity_permutation(6), identity_permutation(6), shift}});
}

CoveringGraph figure_eight_cover() { return derive_cover(figure_eight(), {2, {{1, 0}, {0, 1}}}); }

std::vector<std::vector<int>> derived_adjacency(const MetricGraph& g) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()));
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  return adj;
}

// Base route that walks `steps` edges around the unit triangle from vertex 0.
PathRoute around_triangle(int steps) {
  PathRoute r{{0, 0.0}, {}};
  for (int k = 0; k < steps; ++k) r.segments.push_back({k % 3, 0.0, 1.0});
  return r;
}

PathRoute random_base_route(const MetricGraph& g, std::mt19937_64& rng, int steps) {
  int e0 = static_cast<int>(rng() % static_cast<unsigned>(g.edge_count()));
  double s0 = std::uniform_real_distribution<double>(0.0, g.edge(e0).length)(rng);
  PathRoute r{{e0, s0}, {}};
  // First step: run to the v end of e0, then wander along whole edges.
  r.segments.push_back({e0, s0, g.edge(e0).length});
  int v = g.edge(e0).v;
  for (int k = 0; k < steps; ++k) {
    const auto& inc = g.incident(v);
    int e = inc[rng() % inc.size()];
    const Edge& ed = g.edge(e);
    if (ed.u == v) {
      r.segments.push_back({e, 0.0, ed.length});
      v = ed.v;
    } else {
      r.segments.push_back({e, ed.length, 0.0});
      v = ed.u;
    }
  }
  return r;
}

}  // namespace

TEST_CASE("derive_cover: unit triangle with a 6-cycle shift is an 18-cycle") {
  CoveringGraph c = cycle18();
  CHECK(c.derived.vertex_count() == 18);
  CHECK(c.derived.edge_count() == 18);
  for (const auto& e : c.derived.edges()) CHECK(e.length == 1.0);
  auto adj = derived_adjacency(c.derived);
  for (const auto& row : adj) CHECK(row.size() == 2);
  auto d = oracle::bfs_all_pairs(adj);
  for (int x : d[0]) CHECK(x >= 0);
  CHECK(oracle::max_entry(d) == 9);
  CHECK(is_connected_cover(c).connected);
}

TEST_CASE("derive_cover: identity voltages give disjoint copies") {
  MetricGraph g = triangle();
  CoveringGraph c = derive_cover(g, {4, {identity_permutation(4), identity_permutation(4), identity_permutation(4)}});
  CoverConnectivity conn = is_connected_cover(c);
  CHECK_FALSE(conn.connected);
  CHECK(conn.orbits.size() == 4);
  CHECK_THROWS_AS(verify_thm1(c, 1e-9), DisconnectedCover);
  CHECK_THROWS_AS(deck_transformations(c), DisconnectedCover);
}

TEST_CASE("derive_cover: figure-eight double cover") {
  CoveringGraph c = figure_eight_cover();
  CHECK(c.derived.vertex_count() == 2);
  CHECK(c.derived.edge_count() == 4);
  int joining = 0, loops = 0;
  for (const auto& e : c.derived.edges()) (e.u == e.v ? loops : joining)++;
  CHECK(joining == 2);
  CHECK(loops == 2);
  CHECK(is_connected_cover(c).connected);
}

TEST_CASE("derive_cover validates the voltage") {
  MetricGraph g = triangle();
  CHECK_THROWS(derive_cover(g, {2, {{1, 0}, {0, 1}}}));
  CHECK_THROWS(derive_cover(g, {2, {{1, 0}, {0, 0}, {0, 1}}}));
  CHECK_THROWS(derive_cover(g, {2, {{1, 0}, {0, 1, 2}, {0, 1}}}));
}

TEST_CASE("lift_path examples") {
  CoveringGraph c = figure_eight_cover();
  PathRoute a{{0, 0.0}, {{0, 0.0, 1.0}}};
  PathRoute la = lift_path(c, a, 0);
  CHECK(c.vertex_sheet(point_vertex(c.derived, la.end())) == 1);

  PathRoute empty{{0, 0.0}, {}};
  PathRoute le = lift_path(c, empty, 1);
  CHECK(le.segments.empty());
  CHECK(c.vertex_sheet(point_vertex(c.derived, le.start)) == 1);

  PathRoute b{{1, 0.0}, {{1, 0.0, 1.0}}};
  PathRoute lb = lift_path(c, b, 0);
  CHECK(c.vertex_sheet(point_vertex(c.derived, lb.end())) == 0);
  CHECK(lb.length() == 1.0);
}

TEST_CASE("lift and project round trip") {
  for (std::uint64_t inst = 0; inst < 20; ++inst) {
    RandomCover rc = random_cover(17, inst);
    CoveringGraph c = derive_cover(rc.base, rc.voltage);
    std::mt19937_64 rng(inst);
    for (int k = 0; k < 10; ++k) {
      PathRoute r = random_base_route(rc.base, rng, 6);
      for (int s = 0; s < c.sheets; ++s) {
        PathRoute l = lift_path(c, r, s);
        validate_route(c.derived, l);
        CHECK(l.length() == r.length());
        PathRoute p = c.project(l);
        REQUIRE(p.segments.size() == r.segments.size());
        CHECK(same_location(rc.base, p.start, r.start));
        for (std::size_t i = 0; i < r.segments.size(); ++i) {
          CHECK(p.segments[i].edge == r.segments[i].edge);
          CHECK(p.segments[i].from == r.segments[i].from);
          CHECK(p.segments[i].to == r.segments[i].to);
        }
        PathRoute back = lift_path_ending_at(c, r, l.end());
        CHECK(same_location(c.derived, back.start, l.start));
      }
    }
  }
}

TEST_CASE("deck transformation examples") {
  CHECK(deck_transformations(cycle18()).size() == 6);
  MetricGraph loop = MetricGraph::from_lengths(1, {{0, 0, 1.0}});
  CHECK(deck_transformations(derive_cover(loop, {2, {{1, 0}}})).size() == 2);
  CHECK(deck_transformations(figure_eight_cover()).size() == 2);
}

TEST_CASE("deck transformations are isometries commuting with projection") {
  for (std::uint64_t inst = 0; inst < 15; ++inst) {
    RandomCover rc = random_cover(23, inst);
    CoveringGraph c = derive_cover(rc.base, rc.voltage);
    DistanceMatrix d = vertex_apsp(c.derived);
    auto deck = deck_transformations(c);
    CHECK(deck.size() >= 1);
    CHECK(deck.size() <= static_cast<std::size_t>(c.sheets));
    for (const auto& t : deck) {
      for (int x = 0; x < c.derived.vertex_count(); ++x) {
        CHECK(c.base_vertex(t.vertex_map[static_cast<std::size_t>(x)]) == c.base_vertex(x));
        for (int y = 0; y < c.derived.vertex_count(); ++y)
          CHECK(d(t.vertex_map[static_cast<std::size_t>(x)], t.vertex_map[static_cast<std::size_t>(y)]) == d(x, y));
      }
      for (int e = 0; e < c.derived.edge_count(); ++e)
        CHECK(c.base_edge(t.edge_map[static_cast<std::size_t>(e)]) == c.base_edge(e));
    }
  }
}

TEST_CASE("regular covers have n deck transformations") {
  // Cayley-type voltages: right multiplication in Z/5 is a regular cover.
  MetricGraph g = MetricGraph::from_lengths(2, {{0, 1, 1.0}, {0, 1, 2.0}, {1, 1, 0.5}});
  CoveringGraph c = derive_cover(g, {5, {identity_permutation(5), {1, 2, 3, 4, 0}, {2, 3, 4, 0, 1}}});
  CHECK(deck_transformations(c).size() == 5);
}

TEST_CASE("verify_thm1 examples") {
  Thm1Report a = verify_thm1(cycle18(), 1e-9);
  CHECK(a.sheets == 6);
  CHECK(a.base.value == doctest::Approx(1.5));
  CHECK(a.cover.value == doctest::Approx(9.0).epsilon(1e-12));
  CHECK(a.bound == doctest::Approx(9.0));
  CHECK(a.holds);

  Thm1Report t = verify_thm1(triangle(), {1, {{0}, {0}, {0}}}, 1e-9);
  CHECK(t.cover.value == doctest::Approx(t.base.value));
  CHECK(t.holds);

  Thm1Report f = verify_thm1(figure_eight_cover(), 1e-9);
  CHECK(f.base.value == doctest::Approx(1.0));
  CHECK(f.cover.value <= 2.0 + 1e-9);
  CHECK(f.holds);
}

TEST_CASE("ivanov_shorten on the 18-cycle") {
  CoveringGraph c = cycle18();
  PathRoute r = lift_path(c, around_triangle(10), 0);
  CHECK(r.length() == 10.0);
  ShorteningTrace t = ivanov_shorten(c, r);
  CHECK(t.sigma.length() < 10.0);
  CHECK(same_location(c.derived, t.sigma.start, r.start));
  CHECK(same_location(c.derived, t.sigma.end(), r.end()));
  // Oracle: never shorter than the graph distance between the endpoints.
  auto d = oracle::bfs_all_pairs(derived_adjacency(c.derived));
  int a = point_vertex(c.derived, r.start), b = point_vertex(c.derived, r.end());
  CHECK(t.sigma.length() >= d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] - 1e-9);
  CHECK(t.partition.size() == 7);
  for (double piece : t.piece_lengths) CHECK(piece > 1.5);
  for (const auto& alpha : t.replacements) CHECK(alpha.length() <= 1.5 + 1e-9);

  CHECK_THROWS_AS(ivanov_shorten(c, lift_path(c, around_triangle(9), 0)), PathNotLongEnough);
}

TEST_CASE("ivanov_shorten on the figure-eight cover") {
  CoveringGraph c = figure_eight_cover();
  PathRoute base{{0, 0.0}, {{0, 0.0, 1.0}, {0, 0.0, 1.0}, {1, 0.0, 1.0}, {1, 0.0, 1.0}}};
  PathRoute r = lift_path(c, base, 0);
  ShorteningTrace t = ivanov_shorten(c, r);
  CHECK(t.sigma.length() < 4.0);
  CHECK(same_location(c.derived, t.sigma.start, r.start));
  CHECK(same_location(c.derived, t.sigma.end(), r.end()));
  CHECK(t.sigma.length() >= point_distance(c.derived, r.start, r.end()) - 1e-9);
}

TEST_CASE("shortening iterates down to n * d") {
  for (const auto& sc : shipped_covers()) {
    CoveringGraph c = derive_cover(sc.base, sc.voltage);
    for (std::uint64_t k = 0; k < 5; ++k) {
      auto rng = keyed_rng(1, k, 0);
      PathRoute r = random_walk(c.derived, rng, 2.5 * c.sheets * continuous_diameter(sc.base).value);
      ShorteningRun run = shorten_until_bounded(c, r, 50);
      CHECK(run.strictly_decreasing);
      CHECK(run.endpoints_kept);
      CHECK(run.reached_bound);
    }
  }
}
