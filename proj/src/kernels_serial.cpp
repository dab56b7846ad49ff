#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "liftdiam/kernels.hpp"

namespace liftdiam::kernels {

namespace {

struct Line {
  double a, b, c;  // a*s + b*t = c
};

struct Piece {
  double cs, ct, k;  // cs*s + ct*t + k
  double at(double s, double t) const { return cs * s + ct * t + k; }
};

bool lex_less(const Diameter& x, const Diameter& y) {
  if (x.first.edge != y.first.edge) return x.first.edge < y.first.edge;
  if (x.first.offset != y.first.offset) return x.first.offset < y.first.offset;
  if (x.second.edge != y.second.edge) return x.second.edge < y.second.edge;
  return x.second.offset < y.second.offset;
}

}  // namespace

bool better(const Diameter& a, const Diameter& b) {
  if (a.value != b.value) return a.value > b.value;
  return lex_less(a, b);
}

// The distance between (e1, s) and (e2, t) is the minimum of at most five
// linear functions of (s, t). A concave piecewise-linear function attains its
// maximum over a polygon at a vertex of the arrangement of the region's sides
// and the breakpoint lines, so it is enough to evaluate at all pairwise line
// intersections that fall inside the region.
Diameter edge_pair_max(const MetricGraph& g, const DistanceMatrix& d, int e1, int e2) {
  const Edge& x = g.edge(e1);
  const Edge& y = g.edge(e2);
  const double la = x.length;
  const double lb = y.length;
  const bool same = e1 == e2;

  Piece pieces[5] = {
      {1, 1, d(x.u, y.u)},
      {1, -1, lb + d(x.u, y.v)},
      {-1, 1, la + d(x.v, y.u)},
      {-1, -1, la + lb + d(x.v, y.v)},
      {-1, 1, 0.0},  // |s - t| restricted to s <= t
  };
  const int np = same ? 5 : 4;

  Line lines[16];
  int nl = 0;
  lines[nl++] = {1, 0, 0};
  lines[nl++] = {1, 0, la};
  lines[nl++] = {0, 1, 0};
  lines[nl++] = {0, 1, lb};
  if (same) lines[nl++] = {1, -1, 0};
  for (int i = 0; i < np; ++i)
    for (int j = i + 1; j < np; ++j) {
      double a = pieces[i].cs - pieces[j].cs;
      double b = pieces[i].ct - pieces[j].ct;
      if (a == 0 && b == 0) continue;
      lines[nl++] = {a, b, pieces[j].k - pieces[i].k};
    }

  auto eval = [&](double s, double t) {
    double v = std::numeric_limits<double>::infinity();
    for (int i = 0; i < np; ++i) v = std::min(v, pieces[i].at(s, t));
    return v;
  };

  Diameter best;
  best.value = -1.0;
  const double tol = 1e-12 * std::max({1.0, la, lb});
  for (int i = 0; i < nl; ++i)
    for (int j = i + 1; j < nl; ++j) {
      const Line& p = lines[i];
      const Line& q = lines[j];
      double det = p.a * q.b - q.a * p.b;
      if (det == 0.0) continue;
      double s = (p.c * q.b - q.c * p.b) / det;
      double t = (p.a * q.c - q.a * p.c) / det;
      if (s < -tol || s > la + tol || t < -tol || t > lb + tol) continue;
      if (same && s > t + tol) continue;
      s = std::clamp(s, 0.0, la);
      t = std::clamp(t, 0.0, lb);
      if (same && s > t) s = t;
      Diameter cand{eval(s, t), {e1, s}, {e2, t}};
      if (better(cand, best)) best = cand;
    }
  return best;
}

std::vector<double> dijkstra_row(const MetricGraph& g, int source) {
  return dijkstra(g, source).dist;
}

std::vector<int> bfs_distances(const Adjacency& adj, int source) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

bool layer_sum_ok(std::int64_t m) {
  const std::int64_t sum = (m + 2) * (m + 2) / 4;
  return static_cast<double>(m) <= std::sqrt(4.0 * static_cast<double>(sum) + 1.0) - 2.0 + 1e-9;
}

bool final_inequality_ok(std::int64_t n) {
  const double x = static_cast<double>(n);
  return 2.0 + 2.0 * (std::sqrt(4.0 * x + 1.0) - 2.0) < 4.0 * std::sqrt(x);
}

void add_ball_faces(const double* row, int centers, double radius, NerveFaces& out) {
  std::vector<int> inside;
  for (int c = 0; c < centers; ++c)
    if (row[c] < radius) inside.push_back(c);
  for (std::size_t i = 0; i < inside.size(); ++i)
    for (std::size_t j = i + 1; j < inside.size(); ++j) {
      out.edges.insert({inside[i], inside[j]});
      for (std::size_t k = j + 1; k < inside.size(); ++k)
        out.triangles.insert({inside[i], inside[j], inside[k]});
    }
}

namespace serial {

DistanceMatrix apsp(const MetricGraph& g) {
  const int n = g.vertex_count();
  DistanceMatrix d(n, 0.0);
  for (int s = 0; s < n; ++s) {
    auto row = dijkstra_row(g, s);
    for (int t = 0; t < n; ++t) d(s, t) = row[static_cast<std::size_t>(t)];
  }
  return d;
}

Diameter diameter(const MetricGraph& g, const DistanceMatrix& d) {
  Diameter best;
  best.value = -1.0;
  const int m = g.edge_count();
  for (int e1 = 0; e1 < m; ++e1)
    for (int e2 = e1; e2 < m; ++e2) {
      const Edge& x = g.edge(e1);
      const Edge& y = g.edge(e2);
      double bound = x.length + y.length +
                     std::min({d(x.u, y.u), d(x.u, y.v), d(x.v, y.u), d(x.v, y.v)});
      if (bound < best.value) continue;
      Diameter c = edge_pair_max(g, d, e1, e2);
      if (better(c, best)) best = c;
    }
  if (best.value < 0) best.value = 0.0;
  return best;
}

std::vector<int> bfs_eccentricities(const Adjacency& adj) {
  std::vector<int> ecc(adj.size(), 0);
  for (std::size_t s = 0; s < adj.size(); ++s) {
    auto dist = bfs_distances(adj, static_cast<int>(s));
    int e = 0;
    for (int x : dist) e = x < 0 ? std::numeric_limits<int>::max() : std::max(e, x);
    ecc[s] = e;
  }
  return ecc;
}

NerveFaces nerve_faces(const std::vector<double>& sample_center_dist, int centers, double radius) {
  NerveFaces out;
  if (centers == 0) return out;
  const std::size_t samples = sample_center_dist.size() / static_cast<std::size_t>(centers);
  for (std::size_t i = 0; i < samples; ++i)
    add_ball_faces(sample_center_dist.data() + i * static_cast<std::size_t>(centers), centers,
                   radius, out);
  return out;
}

std::int64_t first_layer_sum_violation(std::int64_t m_max) {
  for (std::int64_t m = 0; m <= m_max; ++m)
    if (!layer_sum_ok(m)) return m;
  return -1;
}

std::int64_t first_final_inequality_violation(std::int64_t n_max) {
  for (std::int64_t n = 1; n <= n_max; ++n)
    if (!final_inequality_ok(n)) return n;
  return -1;
}

}  // namespace serial
}  // namespace liftdiam::kernels
