#include <algorithm>
#include <limits>

#include <omp.h>

#include "liftdiam/kernels.hpp"

namespace liftdiam::kernels::omp {

DistanceMatrix apsp(const MetricGraph& g) {
  const int n = g.vertex_count();
  DistanceMatrix d(n, 0.0);
#pragma omp parallel for schedule(dynamic, 4)
  for (int s = 0; s < n; ++s) {
    auto row = dijkstra_row(g, s);
    for (int t = 0; t < n; ++t) d(s, t) = row[static_cast<std::size_t>(t)];
  }
  return d;
}

Diameter diameter(const MetricGraph& g, const DistanceMatrix& d) {
  const int m = g.edge_count();
  Diameter best;
  best.value = -1.0;
#pragma omp parallel
  {
    Diameter local;
    local.value = -1.0;
#pragma omp for schedule(dynamic, 8) nowait
    for (int e1 = 0; e1 < m; ++e1)
      for (int e2 = e1; e2 < m; ++e2) {
        const Edge& x = g.edge(e1);
        const Edge& y = g.edge(e2);
        double bound = x.length + y.length +
                       std::min({d(x.u, y.u), d(x.u, y.v), d(x.v, y.u), d(x.v, y.v)});
        if (bound < local.value) continue;
        Diameter c = edge_pair_max(g, d, e1, e2);
        if (better(c, local)) local = c;
      }
#pragma omp critical(liftdiam_diameter_reduce)
    if (better(local, best)) best = local;
  }
  if (best.value < 0) best.value = 0.0;
  return best;
}

std::vector<int> bfs_eccentricities(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> ecc(adj.size(), 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (int s = 0; s < n; ++s) {
    auto dist = bfs_distances(adj, s);
    int e = 0;
    for (int x : dist) e = x < 0 ? std::numeric_limits<int>::max() : std::max(e, x);
    ecc[static_cast<std::size_t>(s)] = e;
  }
  return ecc;
}

NerveFaces nerve_faces(const std::vector<double>& sample_center_dist, int centers, double radius) {
  NerveFaces out;
  if (centers == 0) return out;
  const auto samples =
      static_cast<long long>(sample_center_dist.size() / static_cast<std::size_t>(centers));
#pragma omp parallel
  {
    NerveFaces local;
#pragma omp for schedule(static) nowait
    for (long long i = 0; i < samples; ++i)
      add_ball_faces(sample_center_dist.data() + i * centers, centers, radius, local);
#pragma omp critical(liftdiam_nerve_merge)
    {
      out.edges.insert(local.edges.begin(), local.edges.end());
      out.triangles.insert(local.triangles.begin(), local.triangles.end());
    }
  }
  return out;
}

std::int64_t first_layer_sum_violation(std::int64_t m_max) {
  std::int64_t first = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for reduction(min : first) schedule(static)
  for (std::int64_t m = 0; m <= m_max; ++m)
    if (!layer_sum_ok(m)) first = std::min(first, m);
  return first == std::numeric_limits<std::int64_t>::max() ? -1 : first;
}

std::int64_t first_final_inequality_violation(std::int64_t n_max) {
  std::int64_t first = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for reduction(min : first) schedule(static)
  for (std::int64_t n = 1; n <= n_max; ++n)
    if (!final_inequality_ok(n)) first = std::min(first, n);
  return first == std::numeric_limits<std::int64_t>::max() ? -1 : first;
}

}  // namespace liftdiam::kernels::omp
