// Serial reference vs OpenMP kernels on a few representative inputs.
#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "liftdiam/covering.hpp"
#include "liftdiam/experiments.hpp"
#include "liftdiam/kernels.hpp"
#include "liftdiam/universal_cover.hpp"

using namespace liftdiam;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void compare(const char* name, int reps, const std::function<void()>& serial, const std::function<void()>& parallel) {
  double s = seconds(serial, reps);
  double p = seconds(parallel, reps);
  std::printf("%-28s serial %10.6f s   omp %10.6f s   speedup %5.2fx\n", name, s, p, s / p);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());

  CoveringGraph cover = derive_cover(random_cover(7, 3).base, random_cover(7, 3).voltage);
  const MetricGraph& g = cover.derived;
  std::printf("derived graph: %d vertices, %d edges\n", g.vertex_count(), g.edge_count());
  compare("apsp", 5, [&] { kernels::serial::apsp(g); }, [&] { kernels::omp::apsp(g); });
  DistanceMatrix d = kernels::serial::apsp(g);
  compare("continuous diameter", 5, [&] { kernels::serial::diameter(g, d); }, [&] { kernels::omp::diameter(g, d); });

  PEApprox pe = pe_subdivision_graph(build_universal_cover(rp2_complex(), 1000).total, 6);
  std::printf("subdivided sphere: %d vertices, %d edges\n", pe.graph.vertex_count(), pe.graph.edge_count());
  DistanceMatrix dp = kernels::serial::apsp(pe.graph);
  compare("apsp (sphere)", 1, [&] { kernels::serial::apsp(pe.graph); }, [&] { kernels::omp::apsp(pe.graph); });
  compare("continuous diameter (sphere)", 1, [&] { kernels::serial::diameter(pe.graph, dp); },
          [&] { kernels::omp::diameter(pe.graph, dp); });

  kernels::Adjacency adj(static_cast<std::size_t>(pe.graph.vertex_count()));
  for (const auto& e : pe.graph.edges()) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  compare("bfs eccentricities", 5, [&] { kernels::serial::bfs_eccentricities(adj); },
          [&] { kernels::omp::bfs_eccentricities(adj); });

  std::vector<double> table;
  const int centers = 40;
  for (int x = 0; x < 4000; ++x)
    for (int c = 0; c < centers; ++c) table.push_back(static_cast<double>((x * 7 + c * 13) % 101) / 10.0);
  compare("nerve faces", 5, [&] { kernels::serial::nerve_faces(table, centers, 2.5); },
          [&] { kernels::omp::nerve_faces(table, centers, 2.5); });

  compare("layer-sum sweep 1e6", 3, [] { kernels::serial::first_layer_sum_violation(1000000); },
          [] { kernels::omp::first_layer_sum_violation(1000000); });
  compare("final inequality 1e6", 3, [] { kernels::serial::first_final_inequality_violation(1000000); },
          [] { kernels::omp::first_final_inequality_violation(1000000); });
  return 0;
}
