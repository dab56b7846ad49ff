#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace liftdiam {

/// Raised for malformed graphs, routes or points. The message names the
/// offending item.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DisconnectedGraph : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  std::string id;
  int u = 0;
  int v = 0;
  double length = 1.0;
};

/// A weighted multigraph regarded as a compact length space. Loops and
/// parallel edges are allowed. Connectivity is not part of the structural
/// invariant (derived covers may fall apart); use `require_connected` where
/// a connected space is needed.
class MetricGraph {
 public:
  MetricGraph() = default;
  MetricGraph(std::vector<std::string> vertex_names, std::vector<Edge> edges);

  /// Convenience for tests: vertices named "v0".."v{n-1}", edges "e0"...
  static MetricGraph from_lengths(int vertex_count,
                                  std::span<const std::tuple<int, int, double>> edges);
  static MetricGraph from_lengths(int vertex_count,
                                  std::initializer_list<std::tuple<int, int, double>> edges);

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }

  /// Incident edge indices per vertex (a loop appears twice).
  const std::vector<int>& incident(int v) const { return incidence_[static_cast<std::size_t>(v)]; }

  int edge_index(const std::string& id) const;
  int vertex_index(const std::string& name) const;

  bool is_connected() const;
  void require_connected() const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incidence_;
  std::unordered_map<std::string, int> edge_lookup_;
  std::unordered_map<std::string, int> vertex_lookup_;
};

/// A point of the length space: `offset` is measured from the edge's u end.
struct EdgePoint {
  int edge = 0;
  double offset = 0.0;

  friend bool operator==(const EdgePoint&, const EdgePoint&) = default;
};

void validate_point(const MetricGraph& g, const EdgePoint& x);

/// Vertex the point sits on, or -1 for an edge-interior point.
int point_vertex(const MetricGraph& g, const EdgePoint& x);

/// Same location in the space (vertex points compare by vertex).
bool same_location(const MetricGraph& g, const EdgePoint& x, const EdgePoint& y);

EdgePoint vertex_point(const MetricGraph& g, int v);

/// Dense symmetric distance table over the vertices.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n, double fill);

  int size() const { return n_; }
  double operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
  double& operator()(int i, int j) { return d_[static_cast<std::size_t>(i) * n_ + j]; }
  double max_entry() const;
  const std::vector<double>& data() const { return d_; }

 private:
  int n_ = 0;
  std::vector<double> d_;
};

/// Traversal of one edge from offset `from` to offset `to`. Interior segments
/// of a route are full traversals; only the first and last may be partial.
struct Segment {
  int edge = 0;
  double from = 0.0;
  double to = 0.0;

  double length() const { return from < to ? to - from : from - to; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct PathRoute {
  EdgePoint start;
  std::vector<Segment> segments;

  double length() const;
  EdgePoint end() const;
  bool empty() const { return segments.empty(); }
};

/// Throws InvalidInput unless consecutive segments meet at shared points.
void validate_route(const MetricGraph& g, const PathRoute& r);

PathRoute reverse_route(const PathRoute& r);

/// Concatenation; `b` must start where `a` ends.
PathRoute concat_routes(const MetricGraph& g, const PathRoute& a, const PathRoute& b);

/// Removes zero-length segments and immediate back-tracking.
PathRoute reduce_route(const MetricGraph& g, const PathRoute& r);

/// Location at arc length `s` along the route (clamped to [0, length]).
EdgePoint point_at(const MetricGraph& g, const PathRoute& r, double s);

/// The portion of `r` between arc lengths a <= b.
PathRoute sub_route(const MetricGraph& g, const PathRoute& r, double a, double b);

enum class Exec { serial, parallel };

DistanceMatrix vertex_apsp(const MetricGraph& g, Exec exec = Exec::parallel);

double point_distance(const MetricGraph& g, const DistanceMatrix& d, const EdgePoint& x,
                      const EdgePoint& y);
double point_distance(const MetricGraph& g, const EdgePoint& x, const EdgePoint& y);

/// A shortest route realising point_distance.
PathRoute shortest_route(const MetricGraph& g, const EdgePoint& x, const EdgePoint& y);

struct Diameter {
  double value = 0.0;
  EdgePoint first;
  EdgePoint second;
};

Diameter continuous_diameter(const MetricGraph& g, Exec exec = Exec::parallel);
Diameter continuous_diameter(const MetricGraph& g, const DistanceMatrix& d,
                             Exec exec = Exec::parallel);

struct Subdivision {
  MetricGraph graph;
  /// pieces[e] lists the sub-edges of original edge e in order from u to v.
  std::vector<std::vector<int>> pieces;

  EdgePoint map_point(const MetricGraph& original, const EdgePoint& x) const;
};

Subdivision subdivide(const MetricGraph& g, double max_piece);

/// Dijkstra from one vertex; parent_edge[v] is -1 at the root and for
/// unreachable vertices. Ties keep the first relaxation, which is
/// deterministic given the incidence order.
struct ShortestPathTree {
  std::vector<double> dist;
  std::vector<int> parent_edge;
};

ShortestPathTree dijkstra(const MetricGraph& g, int source);

}  // namespace liftdiam
