#include <random>

#include "doctest.h"
#include "liftdiam/complex2.hpp"
#include "liftdiam/experiments.hpp"
#include "liftdiam/universal_cover.hpp"

using namespace liftdiam;

namespace {

SimplicialComplex2 filled_triangle() { return SimplicialComplex2(3, {}, {{0, 1, 2}}); }
SimplicialComplex2 empty_triangle() { return SimplicialComplex2(3, {{0, 1}, {1, 2}, {0, 2}}, {}); }

std::shared_ptr<const CosetTable> cyclic_table(int n, int k) {
  std::vector<Word> rel{Word(static_cast<std::size_t>(n), 1)};
  for (int j = 2; j <= k; ++j) {
    Word w{-j};
    w.insert(w.end(), static_cast<std::size_t>(j), 1);
    rel.push_back(w);
  }
  return std::make_shared<const CosetTable>(todd_coxeter(make_presentation(k, rel), 1000));
}

SimplicialComplex2 nerve_on_cycle(double radius, const std::vector<EdgePoint>& samples) {
  MetricGraph g = MetricGraph::from_lengths(6, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 4, 1.0}, {4, 5, 1.0}, {5, 0, 1.0}});
  std::vector<EdgePoint> centers{{0, 0.5}, {3, 0.5}};
  auto dist = [&](const EdgePoint& a, const EdgePoint& b) { return point_distance(g, a, b); };
  return nerve2(std::span<const EdgePoint>(centers), radius, std::span<const EdgePoint>(samples), dist);
}

std::vector<EdgePoint> cycle_vertices() {
  std::vector<EdgePoint> s;
  for (int e = 0; e < 6; ++e) s.push_back({e, 0.0});
  return s;
}

}  // namespace

TEST_CASE("complex construction closes triangles downward") {
  SimplicialComplex2 k(4, {{3, 2}}, {{2, 0, 1}});
  CHECK(k.edges().size() == 4);
  CHECK(k.triangles().front() == SimplexTriangle{0, 1, 2});
  CHECK(k.edge_index(1, 0) >= 0);
  CHECK(k.edge_index(0, 3) == -1);
  CHECK(k.euler_characteristic() == 1);
  CHECK_THROWS_AS(SimplicialComplex2(3, {{0, 0}}, {}), InvalidInput);
  CHECK_THROWS_AS(SimplicialComplex2(3, {}, {{0, 1, 3}}), InvalidInput);
  CHECK_THROWS_AS(SimplicialComplex2(3, {}, {{0, 1, 1}}), InvalidInput);
}

TEST_CASE("pi1_presentation examples") {
  Pi1Presentation a = pi1_presentation(filled_triangle());
  CHECK(a.presentation.generator_count == 1);
  CHECK(a.presentation.relators.size() == 1);
  CHECK(todd_coxeter(a.presentation, 10).coset_count == 1);
  Pi1Presentation b = pi1_presentation(empty_triangle());
  CHECK(b.presentation.generator_count == 1);
  CHECK(b.presentation.relators.empty());
  Pi1Presentation c = pi1_presentation(rp2_complex());
  CHECK(rp2_complex().edges().size() == 15);
  CHECK(rp2_complex().triangles().size() == 10);
  CHECK(todd_coxeter(c.presentation, 1000).coset_count == 2);
  CHECK_THROWS_AS(pi1_presentation(SimplicialComplex2(4, {{0, 1}, {2, 3}}, {})), DisconnectedGraph);
}

TEST_CASE("pi1 generator and relator counts") {
  for (int n = 4; n <= 12; ++n)
    for (int k = 1; k <= 3 && k < n; ++k) {
      auto t = cyclic_table(n, k);
      std::vector<int> gens(static_cast<std::size_t>(k));
      for (int j = 0; j < k; ++j) gens[static_cast<std::size_t>(j)] = j;
      SimplicialComplex2 y = flag_triangles(cayley_graph(t, gens));
      Pi1Presentation p = pi1_presentation(y);
      CHECK(p.presentation.generator_count == static_cast<int>(y.edges().size()) - (y.vertex_count() - 1));
      CHECK(p.presentation.relators.size() == y.triangles().size());
      CHECK(p.tree_edges.size() == static_cast<std::size_t>(y.vertex_count() - 1));
    }
}

TEST_CASE("is_simply_connected examples") {
  CHECK(is_simply_connected(filled_triangle(), 100).status == Triviality::yes);
  TrivialityResult e = is_simply_connected(empty_triangle(), 100);
  CHECK(e.status == Triviality::no);
  TrivialityResult r = is_simply_connected(rp2_complex(), 100);
  CHECK(r.status == Triviality::no);
  CHECK(r.order == 2);
}

TEST_CASE("flag_triangles examples") {
  CHECK(flag_triangles(cayley_graph(cyclic_table(2, 1), std::vector<int>{0})).triangles().empty());
  CHECK(flag_triangles(cayley_graph(cyclic_table(5, 2), std::vector<int>{0, 1})).triangles().size() == 10);
  CHECK(flag_triangles(cayley_graph(cyclic_table(6, 1), std::vector<int>{0})).triangles().empty());
}

TEST_CASE("nerve2 examples") {
  CHECK(nerve_on_cycle(2.0, cycle_vertices()).edges().size() == 1);
  CHECK(nerve_on_cycle(1.0, cycle_vertices()).edges().empty());
  std::vector<double> table{0.0, 0.0, 0.0};
  SimplicialComplex2 k = nerve2(3, 0.1, table);
  CHECK(k.triangles().size() == 1);
  CHECK(k.edges().size() == 3);
}

TEST_CASE("nerve2 is monotone in samples and radius") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  const int centers = 7;
  std::vector<double> table;
  for (int x = 0; x < 60; ++x)
    for (int c = 0; c < centers; ++c) table.push_back(u(rng));
  auto faces = [](const SimplicialComplex2& k) {
    std::set<std::vector<int>> f;
    for (auto e : k.edges()) f.insert({e[0], e[1]});
    for (auto t : k.triangles()) f.insert({t[0], t[1], t[2]});
    return f;
  };
  auto includes = [](const std::set<std::vector<int>>& big, const std::set<std::vector<int>>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  for (double r : {0.5, 1.0, 1.5}) {
    std::vector<double> half(table.begin(), table.begin() + 30 * centers);
    auto a = faces(nerve2(centers, r, half));
    auto b = faces(nerve2(centers, r, table));
    auto c = faces(nerve2(centers, r + 0.25, table));
    CHECK(includes(b, a));
    CHECK(includes(c, b));
    CHECK(nerve2(centers, r, table, Exec::serial).triangles() == nerve2(centers, r, table, Exec::parallel).triangles());
  }
}

TEST_CASE("short_loop_generators examples") {
  MetricGraph eight = MetricGraph::from_lengths(1, {{0, 0, 1.0}, {0, 0, 1.0}});
  ShortLoops a = short_loop_generators(eight, 0, 1.0);
  REQUIRE(a.loops.size() == 2);
  for (const auto& l : a.loops) CHECK(l.length == doctest::Approx(1.0));

  MetricGraph tree = MetricGraph::from_lengths(4, {{0, 1, 1.0}, {1, 2, 2.0}, {1, 3, 0.5}});
  CHECK(short_loop_generators(tree, 0, 0.25).loops.empty());

  MetricGraph theta = MetricGraph::from_lengths(2, {{0, 1, 1.0}, {0, 1, 1.0}, {0, 1, 2.0}});
  ShortLoops t = short_loop_generators(theta, 0, 0.25);
  const double d = continuous_diameter(theta).value;
  REQUIRE(t.loops.size() == 2);
  for (const auto& l : t.loops) {
    CHECK(l.length <= 2 * t.eccentricity + 0.25 + 1e-9);
    CHECK(l.length <= 2 * d + 0.25 + 1e-9);
  }
}

TEST_CASE("short loops are closed, short and complete") {
  for (std::uint64_t inst = 0; inst < 10; ++inst) {
    MetricGraph g = random_graph(31, inst);
    const double d = continuous_diameter(g).value;
    ShortLoops s = short_loop_generators(g, 0, 0.25);
    const MetricGraph& sg = s.subdivision.graph;
    CHECK(static_cast<int>(s.loops.size()) == g.edge_count() - g.vertex_count() + 1);
    std::set<int> used;
    for (const auto& l : s.loops) {
      validate_route(sg, l.route);
      CHECK(point_vertex(sg, l.route.start) == 0);
      CHECK(point_vertex(sg, l.route.end()) == 0);
      CHECK(l.length < 2 * (d + 0.25));
      CHECK(used.insert(l.non_tree_edge).second);
      CHECK(std::find(s.tree_edges.begin(), s.tree_edges.end(), l.non_tree_edge) == s.tree_edges.end());
    }
  }
}
