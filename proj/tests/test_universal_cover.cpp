#include <cmath>

#include "doctest.h"
#include "liftdiam/universal_cover.hpp"
#include "oracles.hpp"

using namespace liftdiam;

namespace {

SimplicialComplex2 filled_triangle() { return SimplicialComplex2(3, {}, {{0, 1, 2}}); }
SimplicialComplex2 empty_triangle() { return SimplicialComplex2(3, {{0, 1}, {1, 2}, {0, 2}}, {}); }

long long expected_pe_vertices(const SimplicialComplex2& k, long long l) {
  return k.vertex_count() + static_cast<long long>(k.edges().size()) * (l - 1) +
         static_cast<long long>(k.triangles().size()) * (l - 1) * (l - 2) / 2;
}

long long expected_pe_edges(const SimplicialComplex2& k, long long l) {
  return static_cast<long long>(k.edges().size()) * l + static_cast<long long>(k.triangles().size()) * 3 * l * (l - 1) / 2;
}

}  // namespace

TEST_CASE("build_universal_cover examples") {
  CoveringComplex t = build_universal_cover(filled_triangle(), 100);
  CHECK(t.sheets == 1);
  CHECK(t.total.vertex_count() == 3);

  CHECK_THROWS_AS(build_universal_cover(empty_triangle(), 100), EnumerationOverflow);

  CoveringComplex r = build_universal_cover(rp2_complex(), 1000);
  CHECK(r.sheets == 2);
  CHECK(r.total.vertex_count() == 12);
  CHECK(r.total.edges().size() == 30);
  CHECK(r.total.triangles().size() == 20);
  CHECK(r.total.euler_characteristic() == 2);
  CHECK(r.total_simply_connected.status == Triviality::yes);
  CHECK(rp2_complex().euler_characteristic() == 1);
}

TEST_CASE("universal cover is a covering map") {
  CoveringComplex c = build_universal_cover(rp2_complex(), 1000);
  const SimplicialComplex2& b = c.base;
  const SimplicialComplex2& t = c.total;
  // Projection is a simplicial map onto the base, n-to-1 on every kind of face.
  std::vector<int> vcount(static_cast<std::size_t>(b.vertex_count()), 0);
  for (int v = 0; v < t.vertex_count(); ++v) ++vcount[static_cast<std::size_t>(c.base_vertex(v))];
  for (int n : vcount) CHECK(n == c.sheets);
  std::vector<int> ecount(b.edges().size(), 0);
  for (std::size_t e = 0; e < t.edges().size(); ++e) {
    const auto& te = t.edges()[e];
    int pe = c.edge_projection[e];
    CHECK(b.edge_index(c.base_vertex(te[0]), c.base_vertex(te[1])) == pe);
    ++ecount[static_cast<std::size_t>(pe)];
  }
  for (int n : ecount) CHECK(n == c.sheets);
  std::vector<int> fcount(b.triangles().size(), 0);
  for (std::size_t f = 0; f < t.triangles().size(); ++f) ++fcount[static_cast<std::size_t>(c.triangle_projection[f])];
  for (int n : fcount) CHECK(n == c.sheets);

  // Stars map bijectively: each lift of v sees exactly one lift of every base neighbour.
  auto badj = b.adjacency();
  auto tadj = t.adjacency();
  for (int v = 0; v < t.vertex_count(); ++v) {
    std::vector<int> down;
    for (int w : tadj[static_cast<std::size_t>(v)]) down.push_back(c.base_vertex(w));
    std::sort(down.begin(), down.end());
    std::vector<int> want = badj[static_cast<std::size_t>(c.base_vertex(v))];
    std::sort(want.begin(), want.end());
    CHECK(down == want);
  }
}

TEST_CASE("deck action is free and transitive on fibers") {
  CoveringComplex c = build_universal_cover(rp2_complex(), 1000);
  REQUIRE(c.deck.size() == static_cast<std::size_t>(c.sheets));
  for (std::size_t g = 0; g < c.deck.size(); ++g) {
    std::set<int> targets;
    for (int s = 0; s < c.sheets; ++s) {
      int image = c.deck[g][static_cast<std::size_t>(s)];
      targets.insert(image);
      if (g != 0) CHECK(image != s);
    }
    CHECK(targets.size() == static_cast<std::size_t>(c.sheets));
  }
  for (int s = 0; s < c.sheets; ++s) {
    std::set<int> orbit;
    for (const auto& d : c.deck) orbit.insert(d[static_cast<std::size_t>(s)]);
    CHECK(orbit.size() == static_cast<std::size_t>(c.sheets));
  }
  // Deck maps preserve the total complex.
  for (const auto& d : c.deck)
    for (const auto& e : c.total.edges()) {
      int a = c.lift_vertex(c.base_vertex(e[0]), d[static_cast<std::size_t>(c.sheet(e[0]))]);
      int b = c.lift_vertex(c.base_vertex(e[1]), d[static_cast<std::size_t>(c.sheet(e[1]))]);
      CHECK(c.total.edge_index(a, b) >= 0);
    }
}

TEST_CASE("pe_subdivision_graph counts") {
  PEApprox one = pe_subdivision_graph(filled_triangle(), 1);
  CHECK(one.graph.vertex_count() == 3);
  CHECK(one.graph.edge_count() == 3);
  CHECK(one.face_count == 1);

  PEApprox two = pe_subdivision_graph(filled_triangle(), 2);
  CHECK(two.graph.vertex_count() == 6);
  CHECK(two.graph.edge_count() == 9);
  CHECK(two.face_count == 4);
  for (const auto& e : two.graph.edges()) CHECK(e.length == 0.5);

  CHECK(pe_subdivision_graph(rp2_complex(), 2).graph.vertex_count() == 21);

  for (int l = 1; l <= 6; ++l)
    for (const SimplicialComplex2& k : {filled_triangle(), rp2_complex(), build_universal_cover(rp2_complex(), 1000).total}) {
      PEApprox p = pe_subdivision_graph(k, l);
      CHECK(p.graph.vertex_count() == expected_pe_vertices(k, l));
      CHECK(p.graph.edge_count() == expected_pe_edges(k, l));
      CHECK(p.face_count == static_cast<int>(k.triangles().size()) * l * l);
      CHECK(p.keys.size() == static_cast<std::size_t>(p.graph.vertex_count()));
      for (int v = 0; v < k.vertex_count(); ++v) CHECK(p.keys[static_cast<std::size_t>(v)].dim == 0);
    }
}

TEST_CASE("pe_subdivision_graph rejects bad input") {
  SimplicialComplex2 k = filled_triangle();
  k.set_edge_lengths({1.0, 2.0, 1.0});
  CHECK_THROWS_AS(pe_subdivision_graph(k, 2), InvalidInput);
  CHECK_THROWS_AS(pe_subdivision_graph(filled_triangle(), 0), InvalidInput);
}

TEST_CASE("pe subdivision distances on one triangle") {
  // Level-1 graph of a filled triangle is the unit 3-cycle.
  CHECK(continuous_diameter(pe_subdivision_graph(filled_triangle(), 1).graph).value == doctest::Approx(1.5));
  // Finer levels stay within the triangle's intrinsic metric and the staircase factor.
  for (int l = 2; l <= 6; ++l) {
    double d = continuous_diameter(pe_subdivision_graph(filled_triangle(), l).graph).value;
    CHECK(d >= 1.0 - 1e-9);
    CHECK(d <= 1.5 + 1e-9);
  }
}

TEST_CASE("lifted subdivision projects n-to-1") {
  CoveringComplex c = build_universal_cover(rp2_complex(), 1000);
  for (int l = 1; l <= 3; ++l) {
    PEApprox base = pe_subdivision_graph(c.base, l);
    PEApprox total = pe_subdivision_graph(c.total, l);
    CHECK(total.graph.vertex_count() == c.sheets * base.graph.vertex_count());
    CHECK(total.graph.edge_count() == c.sheets * base.graph.edge_count());
    CHECK(total.face_count == c.sheets * base.face_count);
  }
}

TEST_CASE("verify_thm2 examples and level stability") {
  CoveringComplex c = build_universal_cover(rp2_complex(), 1000);
  Thm2Report r6 = verify_thm2(c, 6, 1e-9);
  CHECK(r6.sheets == 2);
  CHECK(r6.holds);
  CHECK(r6.bound == doctest::Approx(4 * std::sqrt(2.0) * r6.base.value));
  CHECK(r6.ratio == doctest::Approx(r6.cover.value / r6.base.value));
  CHECK(r6.cover.value <= r6.bound);
  CHECK(r6.cover.value >= r6.base.value - 1e-9);

  std::vector<double> ratios;
  for (int l = 3; l <= 6; ++l) {
    Thm2Report r = verify_thm2(c, l, 1e-9);
    CHECK(r.holds);
    ratios.push_back(r.ratio);
  }
  double lo = *std::min_element(ratios.begin(), ratios.end());
  double hi = *std::max_element(ratios.begin(), ratios.end());
  CHECK(hi <= 1.15 * lo);

  Thm2Report trivial = verify_thm2(filled_triangle(), 3, 100, 1e-9);
  CHECK(trivial.sheets == 1);
  CHECK(trivial.cover.value == doctest::Approx(trivial.base.value));
  CHECK(trivial.holds);
}

TEST_CASE("cover diameter under refinement") {
  CoveringComplex c = build_universal_cover(rp2_complex(), 1000);
  for (int k : {1, 2, 3}) {
    double coarse = verify_thm2(c, k, 1e-9).cover.value;
    double fine = verify_thm2(c, 2 * k, 1e-9).cover.value;
    CHECK(fine <= coarse + 1e-9);
  }
}

TEST_CASE("fiber_ball_nerve on the projective plane") {
  CoveringComplex c = build_universal_cover(rp2_complex(), 1000);
  NerveReport r = fiber_ball_nerve(c, 0, 0.05, 6, 100000);
  CHECK(r.sheets == 2);
  CHECK(r.fiber.size() == 2);
  CHECK(r.nerve.vertex_count() == 2);
  CHECK(r.nerve_is_cayley);
  CHECK(r.generators_agree);
  CHECK(r.one_skeleton_connected);
  CHECK(r.nerve_simply_connected.status == Triviality::yes);
  CHECK(r.nerve_diameter <= r.lemma_bound + 1e-9);
  CHECK(r.diameter_ok);
  CHECK(r.fiber_pairs_ok);
  CHECK(r.max_fiber_distance <= r.fiber_pair_bound + 1e-9);
  CHECK(r.cover_ok);
  CHECK(r.all_ok);
  CHECK(r.radius == doctest::Approx(r.base_diameter + 0.05));
  // Fiber distance matrix is symmetric with a zero diagonal.
  for (int a = 0; a < r.sheets; ++a)
    for (int b = 0; b < r.sheets; ++b) {
      CHECK(r.fiber_distances[static_cast<std::size_t>(a * r.sheets + b)] ==
            r.fiber_distances[static_cast<std::size_t>(b * r.sheets + a)]);
      if (a == b) CHECK(r.fiber_distances[static_cast<std::size_t>(a * r.sheets + a)] == 0.0);
    }
}

TEST_CASE("fiber_ball_nerve edge cases") {
  NerveReport one = fiber_ball_nerve(build_universal_cover(filled_triangle(), 100), 0, 0.05, 3, 1000);
  CHECK(one.sheets == 1);
  CHECK(one.nerve.vertex_count() == 1);
  CHECK(one.nerve_diameter == 0);
  CHECK(one.all_ok);

  CoveringComplex c = build_universal_cover(rp2_complex(), 1000);
  CHECK_THROWS_AS(fiber_ball_nerve(c, 99, 0.05, 3, 1000), InvalidInput);
  CHECK_THROWS_AS(fiber_ball_nerve(c, 0, -1.0, 3, 1000), InvalidInput);
  // Zero slack may leave samples outside every ball.
  try {
    NerveReport z = fiber_ball_nerve(c, 0, 0.0, 2, 1000);
    CHECK(z.radius == doctest::Approx(z.base_diameter));
  } catch (const CoverNotCovering&) {
    CHECK(true);
  }
}

TEST_CASE("final inequality") {
  CHECK(final_inequality_check(1000000, Exec::serial));
  CHECK(final_inequality_check(1000000, Exec::parallel));
  for (int n = 1; n <= 1000; ++n) CHECK(2.0 + 2.0 * (std::sqrt(4.0 * n + 1.0) - 2.0) < 4.0 * std::sqrt(static_cast<double>(n)));
}
