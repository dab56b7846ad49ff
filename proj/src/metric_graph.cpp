#include "liftdiam/metric_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "liftdiam/kernels.hpp"

namespace liftdiam {

namespace {

constexpr double kPointEps = 1e-12;

bool near(double a, double b) { return std::abs(a - b) <= kPointEps * std::max(1.0, std::abs(a)); }

}  // namespace

MetricGraph::MetricGraph(std::vector<std::string> vertex_names, std::vector<Edge> edges)
    : vertex_names_(std::move(vertex_names)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < vertex_names_.size(); ++i) {
    if (!vertex_lookup_.emplace(vertex_names_[i], static_cast<int>(i)).second)
      throw InvalidInput("duplicate vertex id '" + vertex_names_[i] + "'");
  }
  incidence_.resize(vertex_names_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (!edge_lookup_.emplace(e.id, static_cast<int>(i)).second)
      throw InvalidInput("duplicate edge id '" + e.id + "'");
    if (e.u < 0 || e.u >= vertex_count() || e.v < 0 || e.v >= vertex_count())
      throw InvalidInput("edge '" + e.id + "' references a missing vertex");
    if (!(e.length > 0.0) || !std::isfinite(e.length))
      throw InvalidInput("edge '" + e.id + "' has nonpositive length");
    incidence_[static_cast<std::size_t>(e.u)].push_back(static_cast<int>(i));
    incidence_[static_cast<std::size_t>(e.v)].push_back(static_cast<int>(i));
  }
}

MetricGraph MetricGraph::from_lengths(int vertex_count,
                                      std::span<const std::tuple<int, int, double>> edges) {
  std::vector<std::string> names;
  for (int i = 0; i < vertex_count; ++i) names.push_back("v" + std::to_string(i));
  std::vector<Edge> es;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v, len] = edges[i];
    es.push_back({"e" + std::to_string(i), u, v, len});
  }
  return MetricGraph(std::move(names), std::move(es));
}

MetricGraph MetricGraph::from_lengths(int vertex_count,
                                      std::initializer_list<std::tuple<int, int, double>> edges) {
  return from_lengths(vertex_count, std::span<const std::tuple<int, int, double>>(edges.begin(), edges.size()));
}

int MetricGraph::edge_index(const std::string& id) const {
  auto it = edge_lookup_.find(id);
  if (it == edge_lookup_.end()) throw InvalidInput("unknown edge id '" + id + "'");
  return it->second;
}

int MetricGraph::vertex_index(const std::string& name) const {
  auto it = vertex_lookup_.find(name);
  if (it == vertex_lookup_.end()) throw InvalidInput("unknown vertex id '" + name + "'");
  return it->second;
}

bool MetricGraph::is_connected() const {
  if (vertex_count() == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(vertex_count()), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : incident(v)) {
      int w = edges_[static_cast<std::size_t>(e)].u == v ? edges_[static_cast<std::size_t>(e)].v
                                                         : edges_[static_cast<std::size_t>(e)].u;
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == vertex_count();
}

void MetricGraph::require_connected() const {
  if (!is_connected()) throw DisconnectedGraph("metric graph is not connected");
}

void validate_point(const MetricGraph& g, const EdgePoint& x) {
  if (x.edge < 0 || x.edge >= g.edge_count())
    throw InvalidInput("point references edge index " + std::to_string(x.edge) + " out of range");
  const Edge& e = g.edge(x.edge);
  if (!(x.offset >= 0.0) || x.offset > e.length * (1 + kPointEps))
    throw InvalidInput("point offset " + std::to_string(x.offset) + " outside edge '" + e.id + "'");
}

int point_vertex(const MetricGraph& g, const EdgePoint& x) {
  const Edge& e = g.edge(x.edge);
  if (near(x.offset, 0.0)) return e.u;
  if (near(x.offset, e.length)) return e.v;
  return -1;
}

bool same_location(const MetricGraph& g, const EdgePoint& x, const EdgePoint& y) {
  int vx = point_vertex(g, x);
  int vy = point_vertex(g, y);
  if (vx >= 0 || vy >= 0) return vx == vy;
  return x.edge == y.edge && near(x.offset, y.offset);
}

EdgePoint vertex_point(const MetricGraph& g, int v) {
  const auto& inc = g.incident(v);
  if (inc.empty()) throw InvalidInput("vertex '" + g.vertex_names().at(static_cast<std::size_t>(v)) + "' has no edges");
  int e = inc.front();
  return {e, g.edge(e).u == v ? 0.0 : g.edge(e).length};
}

DistanceMatrix::DistanceMatrix(int n, double fill)
    : n_(n), d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {}

double DistanceMatrix::max_entry() const {
  double m = 0.0;
  for (double x : d_) m = std::max(m, x);
  return m;
}

// ---------------------------------------------------------------------------
// Routes

double PathRoute::length() const {
  double s = 0.0;
  for (const auto& seg : segments) s += seg.length();
  return s;
}

EdgePoint PathRoute::end() const {
  if (segments.empty()) return start;
  return {segments.back().edge, segments.back().to};
}

void validate_route(const MetricGraph& g, const PathRoute& r) {
  validate_point(g, r.start);
  EdgePoint at = r.start;
  for (std::size_t i = 0; i < r.segments.size(); ++i) {
    const Segment& s = r.segments[i];
    validate_point(g, {s.edge, s.from});
    validate_point(g, {s.edge, s.to});
    if (!same_location(g, at, {s.edge, s.from}))
      throw InvalidInput("route segment " + std::to_string(i) + " on edge '" + g.edge(s.edge).id +
                         "' does not start where the previous one ended");
    at = {s.edge, s.to};
  }
}

PathRoute reverse_route(const PathRoute& r) {
  PathRoute out;
  out.start = r.end();
  for (auto it = r.segments.rbegin(); it != r.segments.rend(); ++it)
    out.segments.push_back({it->edge, it->to, it->from});
  return out;
}

PathRoute concat_routes(const MetricGraph& g, const PathRoute& a, const PathRoute& b) {
  if (!same_location(g, a.end(), b.start))
    throw InvalidInput("cannot concatenate routes with mismatched endpoints");
  PathRoute out = a;
  out.segments.insert(out.segments.end(), b.segments.begin(), b.segments.end());
  return out;
}

PathRoute reduce_route(const MetricGraph& /*g*/, const PathRoute& r) {
  // Two segments on the same edge meeting at the same offset merge into one
  // monotone traversal: either a continuation through an interior point or
  // a back-track.
  std::vector<Segment> out;
  for (const Segment& s : r.segments) {
    if (s.length() == 0.0) continue;
    Segment cur = s;
    bool keep = true;
    while (!out.empty() && out.back().edge == cur.edge && near(out.back().to, cur.from)) {
      cur = Segment{cur.edge, out.back().from, cur.to};
      out.pop_back();
      if (near(cur.from, cur.to)) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(cur);
  }
  PathRoute res;
  res.start = r.start;
  res.segments = std::move(out);
  return res;
}

EdgePoint point_at(const MetricGraph& /*g*/, const PathRoute& r, double s) {
  if (s <= 0.0 || r.segments.empty()) return r.start;
  double acc = 0.0;
  for (const Segment& seg : r.segments) {
    double len = seg.length();
    if (acc + len >= s) {
      double t = s - acc;
      double off = seg.from < seg.to ? seg.from + t : seg.from - t;
      return {seg.edge, off};
    }
    acc += len;
  }
  return r.end();
}

PathRoute sub_route(const MetricGraph& g, const PathRoute& r, double a, double b) {
  PathRoute out;
  out.start = point_at(g, r, a);
  double acc = 0.0;
  for (const Segment& seg : r.segments) {
    double len = seg.length();
    double lo = std::max(a, acc);
    double hi = std::min(b, acc + len);
    if (hi > lo) {
      double dir = seg.from < seg.to ? 1.0 : -1.0;
      double from = seg.from + dir * (lo - acc);
      double to = (hi == acc + len) ? seg.to : seg.from + dir * (hi - acc);
      if (lo == acc) from = seg.from;
      out.segments.push_back({seg.edge, from, to});
    }
    acc += len;
  }
  if (!out.segments.empty()) out.start = {out.segments.front().edge, out.segments.front().from};
  return out;
}

// ---------------------------------------------------------------------------
// Distances

DistanceMatrix vertex_apsp(const MetricGraph& g, Exec exec) {
  return exec == Exec::serial ? kernels::serial::apsp(g) : kernels::omp::apsp(g);
}

double point_distance(const MetricGraph& g, const DistanceMatrix& d, const EdgePoint& x,
                      const EdgePoint& y) {
  validate_point(g, x);
  validate_point(g, y);
  const Edge& a = g.edge(x.edge);
  const Edge& b = g.edge(y.edge);
  double s = x.offset;
  double t = y.offset;
  double best = std::min({s + d(a.u, b.u) + t, s + d(a.u, b.v) + (b.length - t),
                          (a.length - s) + d(a.v, b.u) + t,
                          (a.length - s) + d(a.v, b.v) + (b.length - t)});
  if (x.edge == y.edge) best = std::min(best, std::abs(s - t));
  return best;
}

double point_distance(const MetricGraph& g, const EdgePoint& x, const EdgePoint& y) {
  return point_distance(g, vertex_apsp(g, Exec::serial), x, y);
}

ShortestPathTree dijkstra(const MetricGraph& g, int source) {
  const double inf = std::numeric_limits<double>::infinity();
  ShortestPathTree t{std::vector<double>(static_cast<std::size_t>(g.vertex_count()), inf),
                     std::vector<int>(static_cast<std::size_t>(g.vertex_count()), -1)};
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  t.dist[static_cast<std::size_t>(source)] = 0.0;
  pq.push({0.0, source});
  while (!pq.empty()) {
    auto [dv, v] = pq.top();
    pq.pop();
    if (dv > t.dist[static_cast<std::size_t>(v)]) continue;
    for (int ei : g.incident(v)) {
      const Edge& e = g.edge(ei);
      int w = e.u == v ? e.v : e.u;
      double nd = dv + e.length;
      if (nd < t.dist[static_cast<std::size_t>(w)]) {
        t.dist[static_cast<std::size_t>(w)] = nd;
        t.parent_edge[static_cast<std::size_t>(w)] = ei;
        pq.push({nd, w});
      }
    }
  }
  return t;
}

namespace {

// Full-edge route from vertex `from` to `to` along the tree rooted at `from`.
std::vector<Segment> tree_path(const MetricGraph& g, const ShortestPathTree& t, int from, int to) {
  std::vector<Segment> rev;
  int v = to;
  while (v != from) {
    int ei = t.parent_edge[static_cast<std::size_t>(v)];
    if (ei < 0) throw DisconnectedGraph("no route between vertices");
    const Edge& e = g.edge(ei);
    // Traverse towards v: parent is the other endpoint.
    if (e.v == v && (e.u != v)) {
      rev.push_back({ei, 0.0, e.length});
      v = e.u;
    } else if (e.u == v && e.v != v) {
      rev.push_back({ei, e.length, 0.0});
      v = e.v;
    } else {
      throw std::logic_error("loop edge in shortest path tree");
    }
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

}  // namespace

PathRoute shortest_route(const MetricGraph& g, const EdgePoint& x, const EdgePoint& y) {
  validate_point(g, x);
  validate_point(g, y);
  const Edge& a = g.edge(x.edge);
  const Edge& b = g.edge(y.edge);
  PathRoute best;
  best.start = x;
  double best_len = std::numeric_limits<double>::infinity();
  if (x.edge == y.edge) {
    best_len = std::abs(x.offset - y.offset);
    if (best_len > 0.0) best.segments.push_back({x.edge, x.offset, y.offset});
  }
  const int ends_a[2] = {a.u, a.v};
  const double off_a[2] = {0.0, a.length};
  const int ends_b[2] = {b.u, b.v};
  const double off_b[2] = {0.0, b.length};
  for (int i = 0; i < 2; ++i) {
    ShortestPathTree t = dijkstra(g, ends_a[i]);
    for (int j = 0; j < 2; ++j) {
      double len = std::abs(x.offset - off_a[i]) + t.dist[static_cast<std::size_t>(ends_b[j])] +
                   std::abs(off_b[j] - y.offset);
      if (len < best_len) {
        best_len = len;
        best.segments.clear();
        if (x.offset != off_a[i]) best.segments.push_back({x.edge, x.offset, off_a[i]});
        auto mid = tree_path(g, t, ends_a[i], ends_b[j]);
        best.segments.insert(best.segments.end(), mid.begin(), mid.end());
        if (off_b[j] != y.offset) best.segments.push_back({y.edge, off_b[j], y.offset});
      }
    }
  }
  return best;
}

Diameter continuous_diameter(const MetricGraph& g, Exec exec) {
  g.require_connected();
  return continuous_diameter(g, vertex_apsp(g, exec), exec);
}

Diameter continuous_diameter(const MetricGraph& g, const DistanceMatrix& d, Exec exec) {
  g.require_connected();
  return exec == Exec::serial ? kernels::serial::diameter(g, d) : kernels::omp::diameter(g, d);
}

// ---------------------------------------------------------------------------
// Subdivision

EdgePoint Subdivision::map_point(const MetricGraph& original, const EdgePoint& x) const {
  validate_point(original, x);
  const auto& ps = pieces.at(static_cast<std::size_t>(x.edge));
  const int k = static_cast<int>(ps.size());
  const double piece = original.edge(x.edge).length / k;
  int idx = std::min(k - 1, static_cast<int>(std::floor(x.offset / piece)));
  double off = std::clamp(x.offset - idx * piece, 0.0, graph.edge(ps[static_cast<std::size_t>(idx)]).length);
  return {ps[static_cast<std::size_t>(idx)], off};
}

Subdivision subdivide(const MetricGraph& g, double max_piece) {
  if (!(max_piece > 0.0)) throw InvalidInput("max_piece must be positive");
  std::vector<std::string> names = g.vertex_names();
  std::vector<Edge> edges;
  Subdivision out;
  out.pieces.resize(static_cast<std::size_t>(g.edge_count()));
  for (int ei = 0; ei < g.edge_count(); ++ei) {
    const Edge& e = g.edge(ei);
    int k = std::max(1, static_cast<int>(std::ceil(e.length / max_piece - 1e-12)));
    double len = e.length / k;
    int prev = e.u;
    for (int j = 0; j < k; ++j) {
      int next;
      if (j + 1 == k) {
        next = e.v;
      } else {
        next = static_cast<int>(names.size());
        names.push_back(e.id + "@" + std::to_string(j + 1));
      }
      std::string id = k == 1 ? e.id : e.id + "/" + std::to_string(j);
      out.pieces[static_cast<std::size_t>(ei)].push_back(static_cast<int>(edges.size()));
      edges.push_back({std::move(id), prev, next, len});
      prev = next;
    }
  }
  out.graph = MetricGraph(std::move(names), std::move(edges));
  return out;
}

}  // namespace liftdiam
