#include <cmath>
#include <random>

#include "doctest.h"
#include "liftdiam/covering.hpp"
#include "liftdiam/experiments.hpp"
#include "liftdiam/kernels.hpp"

using namespace liftdiam;

TEST_CASE("serial and parallel apsp and diameter agree exactly") {
  for (std::uint64_t inst = 0; inst < 15; ++inst) {
    RandomCover rc = random_cover(3, inst);
    CoveringGraph c = derive_cover(rc.base, rc.voltage);
    DistanceMatrix a = kernels::serial::apsp(c.derived);
    DistanceMatrix b = kernels::omp::apsp(c.derived);
    for (int i = 0; i < c.derived.vertex_count(); ++i)
      for (int j = 0; j < c.derived.vertex_count(); ++j) REQUIRE(a(i, j) == b(i, j));
    Diameter s = kernels::serial::diameter(c.derived, a);
    Diameter p = kernels::omp::diameter(c.derived, a);
    CHECK(s.value == p.value);
    CHECK(s.first == p.first);
    CHECK(s.second == p.second);
  }
}

TEST_CASE("serial and parallel bfs eccentricities agree") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    const int n = 30 + t;
    kernels::Adjacency adj(static_cast<std::size_t>(n));
    for (int v = 1; v < n; ++v) {
      int u = static_cast<int>(rng() % static_cast<unsigned>(v));
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
    }
    CHECK(kernels::serial::bfs_eccentricities(adj) == kernels::omp::bfs_eccentricities(adj));
  }
}

TEST_CASE("serial and parallel nerve faces agree") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 4.0);
  for (int t = 0; t < 10; ++t) {
    const int centers = 8;
    std::vector<double> table;
    for (int x = 0; x < 200; ++x)
      for (int c = 0; c < centers; ++c) table.push_back(u(rng));
    auto a = kernels::serial::nerve_faces(table, centers, 1.0 + 0.1 * t);
    auto b = kernels::omp::nerve_faces(table, centers, 1.0 + 0.1 * t);
    CHECK(a.edges == b.edges);
    CHECK(a.triangles == b.triangles);
  }
}

TEST_CASE("layer-sum closed form matches the direct sum") {
  for (std::int64_t m = 0; m <= 300; ++m) {
    std::int64_t s = 0;
    for (std::int64_t i = 0; i <= m; ++i) s += std::min(i + 1, m - i + 1);
    const double rhs = std::sqrt(4.0 * static_cast<double>(s) + 1.0) - 2.0;
    CHECK(kernels::layer_sum_ok(m) == (static_cast<double>(m) <= rhs + 1e-9));
  }
}

TEST_CASE("arithmetic sweeps") {
  CHECK(kernels::serial::first_layer_sum_violation(100000) == -1);
  CHECK(kernels::omp::first_layer_sum_violation(100000) == -1);
  CHECK(kernels::serial::first_final_inequality_violation(100000) == -1);
  CHECK(kernels::omp::first_final_inequality_violation(100000) == -1);
  CHECK(kernels::final_inequality_ok(1));
  CHECK(kernels::final_inequality_ok(2));
}
