#pragma once

// Data-parallel inner loops. Every kernel has a serial reference in
// `kernels::serial` and an OpenMP version in `kernels::omp`; the two must
// return identical results (tests compare them bit for bit).

#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "liftdiam/metric_graph.hpp"

namespace liftdiam::kernels {

using Adjacency = std::vector<std::vector<int>>;

/// Faces of a nerve, vertices sorted within each face.
struct NerveFaces {
  std::set<std::array<int, 2>> edges;
  std::set<std::array<int, 3>> triangles;
};

/// Largest point_distance over the rectangle of offsets of edges e1 <= e2.
Diameter edge_pair_max(const MetricGraph& g, const DistanceMatrix& d, int e1, int e2);

/// Strict "better witness" order used to reduce edge-pair maxima.
bool better(const Diameter& a, const Diameter& b);

// first_layer_sum_violation: smallest m in [0, m_max] violating
//   m <= sqrt(4 * S(m) + 1) - 2 + 1e-9,  S(m) = sum_{i=0}^{m} min(i+1, m-i+1),
// or -1 if there is none. first_final_inequality_violation: smallest n in
// [1, n_max] violating 2 + 2(sqrt(4n+1) - 2) < 4 sqrt(n), or -1.

namespace serial {
DistanceMatrix apsp(const MetricGraph& g);
Diameter diameter(const MetricGraph& g, const DistanceMatrix& d);
std::vector<int> bfs_eccentricities(const Adjacency& adj);
NerveFaces nerve_faces(const std::vector<double>& sample_center_dist, int centers, double radius);
std::int64_t first_layer_sum_violation(std::int64_t m_max);
std::int64_t first_final_inequality_violation(std::int64_t n_max);
}  // namespace serial

namespace omp {
DistanceMatrix apsp(const MetricGraph& g);
Diameter diameter(const MetricGraph& g, const DistanceMatrix& d);
std::vector<int> bfs_eccentricities(const Adjacency& adj);
NerveFaces nerve_faces(const std::vector<double>& sample_center_dist, int centers, double radius);
std::int64_t first_layer_sum_violation(std::int64_t m_max);
std::int64_t first_final_inequality_violation(std::int64_t n_max);
}  // namespace omp

/// Helpers shared by both variants.
std::vector<double> dijkstra_row(const MetricGraph& g, int source);
std::vector<int> bfs_distances(const Adjacency& adj, int source);
bool layer_sum_ok(std::int64_t m);
bool final_inequality_ok(std::int64_t n);
void add_ball_faces(const double* row, int centers, double radius, NerveFaces& out);

}  // namespace liftdiam::kernels
