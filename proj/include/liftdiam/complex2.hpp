#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "liftdiam/groups.hpp"
#include "liftdiam/metric_graph.hpp"

namespace liftdiam {

using SimplexEdge = std::array<int, 2>;
using SimplexTriangle = std::array<int, 3>;

/// Vertices, edges and triangles of a 2-dimensional simplicial complex.
/// Faces are stored sorted (vertex-wise and lexicographically); every edge
/// of a triangle is present.
class SimplicialComplex2 {
 public:
  SimplicialComplex2() = default;
  SimplicialComplex2(int vertex_count, std::span<const SimplexEdge> extra_edges,
                     std::span<const SimplexTriangle> triangles);
  SimplicialComplex2(int vertex_count, std::initializer_list<SimplexEdge> extra_edges,
                     std::initializer_list<SimplexTriangle> triangles);

  int vertex_count() const { return vertex_count_; }
  const std::vector<SimplexEdge>& edges() const { return edges_; }
  const std::vector<SimplexTriangle>& triangles() const { return triangles_; }
  /// Index of edge {a, b}, or -1.
  int edge_index(int a, int b) const;

  /// Optional per-edge lengths (empty means unit lengths).
  const std::vector<double>& edge_lengths() const { return lengths_; }
  void set_edge_lengths(std::vector<double> lengths);

  std::vector<std::string> vertex_names;

  int euler_characteristic() const;
  bool is_connected() const;
  kernels::Adjacency adjacency() const;

 private:
  int vertex_count_ = 0;
  std::vector<SimplexEdge> edges_;
  std::vector<SimplexTriangle> triangles_;
  std::map<SimplexEdge, int> edge_lookup_;
  std::vector<double> lengths_;
};

/// Spanning-tree presentation of the fundamental group. edge_generator maps
/// each edge to its 1-based generator (edge oriented from its smaller
/// vertex), or 0 for tree edges.
struct Pi1Presentation {
  Presentation presentation;
  std::vector<int> edge_generator;
  std::vector<int> tree_edges;
  /// relator_source[k] is the triangle that produced relator k.
  std::vector<int> relator_source;
};

Pi1Presentation pi1_presentation(const SimplicialComplex2& k, int basepoint = 0);

TrivialityResult is_simply_connected(const SimplicialComplex2& k, std::size_t budget);

/// Cayley graph with every 3-clique filled in.
SimplicialComplex2 flag_triangles(const CayleyGraph& c);

/// Nerve (faces of dimension <= 2) of the open balls of radius `radius`
/// around the centers, with intersections tested on the samples.
/// sample_center_dist is row-major, one row of `centers` distances per sample.
SimplicialComplex2 nerve2(int centers, double radius, const std::vector<double>& sample_center_dist,
                          Exec exec = Exec::parallel);

template <class Point, class Dist>
SimplicialComplex2 nerve2(std::span<const Point> centers, double radius, std::span<const Point> samples,
                          Dist dist, Exec exec = Exec::parallel) {
  std::vector<double> table;
  table.reserve(centers.size() * samples.size());
  for (const Point& x : samples)
    for (const Point& c : centers) table.push_back(dist(x, c));
  return nerve2(static_cast<int>(centers.size()), radius, table, exec);
}

struct LoopWitness {
  PathRoute route;
  double length = 0.0;
  int non_tree_edge = -1;
};

struct ShortLoops {
  Subdivision subdivision;
  int basepoint = 0;
  double eccentricity = 0.0;
  std::vector<int> tree_edges;
  std::vector<LoopWitness> loops;
};

/// One loop through each edge outside a shortest-path tree of the mesh
/// subdivision; together they generate the fundamental group at p.
ShortLoops short_loop_generators(const MetricGraph& g, int p, double mesh);

}  // namespace liftdiam
