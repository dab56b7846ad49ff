#include "liftdiam/complex2.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace liftdiam {

SimplicialComplex2::SimplicialComplex2(int vertex_count, std::span<const SimplexEdge> extra_edges,
                                       std::span<const SimplexTriangle> triangles)
    : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw InvalidInput("negative vertex count");
  auto check = [&](int v) {
    if (v < 0 || v >= vertex_count) throw InvalidInput("simplex references vertex " + std::to_string(v) + " out of range");
  };
  std::set<SimplexEdge> es;
  std::set<SimplexTriangle> ts;
  for (SimplexEdge e : extra_edges) {
    check(e[0]);
    check(e[1]);
    if (e[0] == e[1]) throw InvalidInput("edge with equal endpoints " + std::to_string(e[0]));
    std::sort(e.begin(), e.end());
    es.insert(e);
  }
  for (SimplexTriangle t : triangles) {
    for (int v : t) check(v);
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) throw InvalidInput("degenerate triangle");
    ts.insert(t);
    es.insert({t[0], t[1]});
    es.insert({t[1], t[2]});
    es.insert({t[0], t[2]});
  }
  edges_.assign(es.begin(), es.end());
  triangles_.assign(ts.begin(), ts.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) edge_lookup_.emplace(edges_[i], static_cast<int>(i));
}

SimplicialComplex2::SimplicialComplex2(int vertex_count, std::initializer_list<SimplexEdge> extra_edges,
                                       std::initializer_list<SimplexTriangle> triangles)
    : SimplicialComplex2(vertex_count, std::span<const SimplexEdge>(extra_edges.begin(), extra_edges.size()),
                         std::span<const SimplexTriangle>(triangles.begin(), triangles.size())) {}

int SimplicialComplex2::edge_index(int a, int b) const {
  if (a > b) std::swap(a, b);
  auto it = edge_lookup_.find({a, b});
  return it == edge_lookup_.end() ? -1 : it->second;
}

void SimplicialComplex2::set_edge_lengths(std::vector<double> lengths) {
  if (!lengths.empty() && lengths.size() != edges_.size())
    throw InvalidInput("edge length count does not match the edge count");
  for (double l : lengths)
    if (!(l > 0.0)) throw InvalidInput("edge lengths must be positive");
  lengths_ = std::move(lengths);
}

int SimplicialComplex2::euler_characteristic() const {
  return vertex_count_ - static_cast<int>(edges_.size()) + static_cast<int>(triangles_.size());
}

kernels::Adjacency SimplicialComplex2::adjacency() const {
  kernels::Adjacency adj(static_cast<std::size_t>(vertex_count_));
  for (const auto& e : edges_) {
    adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
    adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

bool SimplicialComplex2::is_connected() const {
  if (vertex_count_ == 0) return false;
  auto d = kernels::bfs_distances(adjacency(), 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

Pi1Presentation pi1_presentation(const SimplicialComplex2& k, int basepoint) {
  if (!k.is_connected()) throw DisconnectedGraph("simplicial complex is not connected");
  if (basepoint < 0 || basepoint >= k.vertex_count()) throw InvalidInput("basepoint out of range");
  const auto adj = k.adjacency();
  Pi1Presentation out;
  out.edge_generator.assign(k.edges().size(), -1);

  std::vector<char> seen(static_cast<std::size_t>(k.vertex_count()), 0);
  std::queue<int> q;
  seen[static_cast<std::size_t>(basepoint)] = 1;
  q.push(basepoint);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      int e = k.edge_index(v, w);
      out.edge_generator[static_cast<std::size_t>(e)] = 0;
      out.tree_edges.push_back(e);
      q.push(w);
    }
  }
  std::sort(out.tree_edges.begin(), out.tree_edges.end());

  int gens = 0;
  for (auto& g : out.edge_generator)
    if (g < 0) g = ++gens;

  out.presentation.generator_count = gens;
  for (std::size_t t = 0; t < k.triangles().size(); ++t) {
    const auto& tri = k.triangles()[t];
    auto gen = [&](int a, int b) { return out.edge_generator[static_cast<std::size_t>(k.edge_index(a, b))]; };
    Word w;
    if (int g = gen(tri[0], tri[1])) w.push_back(g);
    if (int g = gen(tri[1], tri[2])) w.push_back(g);
    if (int g = gen(tri[0], tri[2])) w.push_back(-g);
    // Kept even when empty so relators stay aligned with triangles.
    out.presentation.relators.push_back(free_reduce(w));
    out.relator_source.push_back(static_cast<int>(t));
  }
  return out;
}

TrivialityResult is_simply_connected(const SimplicialComplex2& k, std::size_t budget) {
  return is_trivial(pi1_presentation(k).presentation, budget);
}

SimplicialComplex2 flag_triangles(const CayleyGraph& c) {
  const int n = c.order();
  std::vector<std::set<int>> nb(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g)
    for (int h : c.adjacency()[static_cast<std::size_t>(g)])
      if (h != g) nb[static_cast<std::size_t>(g)].insert(h);
  std::vector<SimplexEdge> edges;
  std::vector<SimplexTriangle> tris;
  for (int a = 0; a < n; ++a)
    for (int b : nb[static_cast<std::size_t>(a)]) {
      if (b <= a) continue;
      edges.push_back({a, b});
      for (int x : nb[static_cast<std::size_t>(b)])
        if (x > b && nb[static_cast<std::size_t>(a)].count(x)) tris.push_back({a, b, x});
    }
  return SimplicialComplex2(n, edges, tris);
}

SimplicialComplex2 nerve2(int centers, double radius, const std::vector<double>& sample_center_dist, Exec exec) {
  if (centers <= 0) throw InvalidInput("nerve needs at least one center");
  if (sample_center_dist.empty()) throw InvalidInput("nerve needs at least one sample");
  auto faces = exec == Exec::serial ? kernels::serial::nerve_faces(sample_center_dist, centers, radius)
                                    : kernels::omp::nerve_faces(sample_center_dist, centers, radius);
  std::vector<SimplexEdge> edges(faces.edges.begin(), faces.edges.end());
  std::vector<SimplexTriangle> tris(faces.triangles.begin(), faces.triangles.end());
  return SimplicialComplex2(centers, edges, tris);
}

namespace {

// Segments from the root of `t` down to vertex v.
std::vector<Segment> root_path(const MetricGraph& g, const ShortestPathTree& t, int v) {
  std::vector<Segment> rev;
  while (t.parent_edge[static_cast<std::size_t>(v)] >= 0) {
    int ei = t.parent_edge[static_cast<std::size_t>(v)];
    const Edge& e = g.edge(ei);
    if (e.v == v) {
      rev.push_back({ei, 0.0, e.length});
      v = e.u;
    } else {
      rev.push_back({ei, e.length, 0.0});
      v = e.v;
    }
  }
  return {rev.rbegin(), rev.rend()};
}

}  // namespace

ShortLoops short_loop_generators(const MetricGraph& g, int p, double mesh) {
  g.require_connected();
  if (p < 0 || p >= g.vertex_count()) throw InvalidInput("basepoint out of range");
  ShortLoops out{subdivide(g, mesh), p, 0.0, {}, {}};
  const MetricGraph& s = out.subdivision.graph;
  ShortestPathTree tree = dijkstra(s, p);
  std::vector<char> in_tree(static_cast<std::size_t>(s.edge_count()), 0);
  for (int v = 0; v < s.vertex_count(); ++v) {
    out.eccentricity = std::max(out.eccentricity, tree.dist[static_cast<std::size_t>(v)]);
    if (int e = tree.parent_edge[static_cast<std::size_t>(v)]; e >= 0) {
      in_tree[static_cast<std::size_t>(e)] = 1;
      out.tree_edges.push_back(e);
    }
  }
  std::sort(out.tree_edges.begin(), out.tree_edges.end());

  for (int ei = 0; ei < s.edge_count(); ++ei) {
    if (in_tree[static_cast<std::size_t>(ei)]) continue;
    const Edge& e = s.edge(ei);
    LoopWitness w;
    w.non_tree_edge = ei;
    w.route.start = vertex_point(s, p);
    auto down = root_path(s, tree, e.u);
    auto back = root_path(s, tree, e.v);
    w.route.segments = down;
    w.route.segments.push_back({ei, 0.0, e.length});
    for (auto it = back.rbegin(); it != back.rend(); ++it) w.route.segments.push_back({it->edge, it->to, it->from});
    w.length = w.route.length();
    out.loops.push_back(std::move(w));
  }
  return out;
}

}  // namespace liftdiam
