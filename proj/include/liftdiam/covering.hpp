#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "liftdiam/metric_graph.hpp"

namespace liftdiam {

using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
Permutation inverse_permutation(const Permutation& p);
bool is_permutation(const Permutation& p, int n);

/// Permutation voltages on the edges of a base graph, indexed by edge. The
/// permutation is applied when an edge is traversed from u to v.
struct Voltage {
  int sheets = 1;
  std::vector<Permutation> assignment;
};

class DisconnectedCover : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PathNotLongEnough : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Derived graph of a voltage assignment. Vertex (v, s) has index v*n + s and
/// edge (e, s) has index e*n + s; it runs from (u, s) to (v, sigma_e(s)) with
/// the base length of e.
struct CoveringGraph {
  MetricGraph base;
  int sheets = 1;
  Voltage voltage;
  MetricGraph derived;

  int base_vertex(int v) const { return v / sheets; }
  int vertex_sheet(int v) const { return v % sheets; }
  int base_edge(int e) const { return e / sheets; }
  int edge_sheet(int e) const { return e % sheets; }
  int lift_vertex(int v, int s) const { return v * sheets + s; }
  int lift_edge(int e, int s) const { return e * sheets + s; }

  EdgePoint project(const EdgePoint& x) const { return {base_edge(x.edge), x.offset}; }
  PathRoute project(const PathRoute& r) const;

  /// Fiber coordinate of a derived point: the sheet of its vertex, or of its
  /// edge when the point lies inside an edge.
  int point_sheet(const EdgePoint& x) const;
  /// Derived point above base point `x` on sheet `s` (same convention).
  EdgePoint lift_point(const EdgePoint& x, int s) const;
};

CoveringGraph derive_cover(const MetricGraph& g, const Voltage& v);

struct CoverConnectivity {
  bool connected = false;
  /// Sheets over base vertex 0 grouped by the component they lie in.
  std::vector<std::vector<int>> orbits;
};

CoverConnectivity is_connected_cover(const CoveringGraph& c);

/// The unique lift of a base route starting on sheet `start_sheet` of the
/// fiber over its start point.
PathRoute lift_path(const CoveringGraph& c, const PathRoute& base, int start_sheet);

/// Unique lift ending at the given derived point.
PathRoute lift_path_ending_at(const CoveringGraph& c, const PathRoute& base, const EdgePoint& end);

struct DeckTransformation {
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
};

std::vector<DeckTransformation> deck_transformations(const CoveringGraph& c);

struct Thm1Report {
  int sheets = 0;
  Diameter base;
  Diameter cover;
  double bound = 0.0;
  bool holds = false;
};

Thm1Report verify_thm1(const MetricGraph& g, const Voltage& v, double tol);
Thm1Report verify_thm1(const CoveringGraph& c, double tol);

struct ShorteningTrace {
  double input_length = 0.0;
  double base_diameter = 0.0;
  std::vector<double> partition;           // arc-length positions x_0 .. x_n
  std::vector<EdgePoint> partition_points; // gamma(x_k) in the cover
  std::vector<double> piece_lengths;       // l(gamma_k), k = 1..n
  std::vector<PathRoute> replacements;     // alpha_k in the base
  std::vector<EdgePoint> lift_starts;      // start of the lifted beta_k, k = 0..n (k = 0 is the route)
  std::pair<int, int> match{-1, -1};       // (0, i) or (i, j)
  PathRoute sigma;
};

/// One step of the path-surgery argument: splits an over-long route into n
/// pieces longer than the base diameter and returns a strictly shorter route
/// with the same endpoints. Throws PathNotLongEnough if the route is already
/// no longer than n * diam(base).
ShorteningTrace ivanov_shorten(const CoveringGraph& c, const PathRoute& route);
ShorteningTrace ivanov_shorten(const CoveringGraph& c, const PathRoute& route, double base_diameter);

}  // namespace liftdiam
