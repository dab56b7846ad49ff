#include "liftdiam/covering.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace liftdiam {

Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation inverse_permutation(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return q;
}

bool is_permutation(const Permutation& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int x : p) {
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

CoveringGraph derive_cover(const MetricGraph& g, const Voltage& v) {
  if (v.sheets < 1) throw InvalidInput("sheet count must be at least 1");
  if (static_cast<int>(v.assignment.size()) != g.edge_count())
    throw InvalidInput("voltage assigns " + std::to_string(v.assignment.size()) + " edges but the graph has " +
                       std::to_string(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e)
    if (!is_permutation(v.assignment[static_cast<std::size_t>(e)], v.sheets))
      throw InvalidInput("voltage on edge '" + g.edge(e).id + "' is not a permutation of " +
                         std::to_string(v.sheets) + " sheets");

  const int n = v.sheets;
  std::vector<std::string> names;
  for (int x = 0; x < g.vertex_count(); ++x)
    for (int s = 0; s < n; ++s) names.push_back(g.vertex_names()[static_cast<std::size_t>(x)] + "#" + std::to_string(s));
  std::vector<Edge> edges;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& be = g.edge(e);
    const Permutation& p = v.assignment[static_cast<std::size_t>(e)];
    for (int s = 0; s < n; ++s)
      edges.push_back({be.id + "#" + std::to_string(s), be.u * n + s, be.v * n + p[static_cast<std::size_t>(s)], be.length});
  }
  return CoveringGraph{g, n, v, MetricGraph(std::move(names), std::move(edges))};
}

PathRoute CoveringGraph::project(const PathRoute& r) const {
  PathRoute out;
  out.start = project(r.start);
  for (const Segment& s : r.segments) out.segments.push_back({base_edge(s.edge), s.from, s.to});
  return out;
}

int CoveringGraph::point_sheet(const EdgePoint& x) const {
  int v = point_vertex(derived, x);
  return v >= 0 ? vertex_sheet(v) : edge_sheet(x.edge);
}

EdgePoint CoveringGraph::lift_point(const EdgePoint& x, int s) const {
  if (s < 0 || s >= sheets) throw InvalidInput("sheet " + std::to_string(s) + " out of range");
  const Edge& e = base.edge(x.edge);
  int v = point_vertex(base, x);
  if (v >= 0 && x.offset > 0.5 * e.length) {
    const Permutation& p = voltage.assignment[static_cast<std::size_t>(x.edge)];
    int t = inverse_permutation(p)[static_cast<std::size_t>(s)];
    return {lift_edge(x.edge, t), e.length};
  }
  return {lift_edge(x.edge, s), v >= 0 ? 0.0 : x.offset};
}

CoverConnectivity is_connected_cover(const CoveringGraph& c) {
  const MetricGraph& d = c.derived;
  std::vector<int> comp(static_cast<std::size_t>(d.vertex_count()), -1);
  int ncomp = 0;
  for (int start = 0; start < d.vertex_count(); ++start) {
    if (comp[static_cast<std::size_t>(start)] >= 0) continue;
    std::vector<int> stack{start};
    comp[static_cast<std::size_t>(start)] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int ei : d.incident(v)) {
        const Edge& e = d.edge(ei);
        int w = e.u == v ? e.v : e.u;
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = ncomp;
          stack.push_back(w);
        }
      }
    }
    ++ncomp;
  }
  CoverConnectivity r;
  r.connected = ncomp == 1;
  std::vector<int> slot(static_cast<std::size_t>(ncomp), -1);
  for (int s = 0; s < c.sheets; ++s) {
    int k = comp[static_cast<std::size_t>(c.lift_vertex(0, s))];
    if (slot[static_cast<std::size_t>(k)] < 0) {
      slot[static_cast<std::size_t>(k)] = static_cast<int>(r.orbits.size());
      r.orbits.emplace_back();
    }
    r.orbits[static_cast<std::size_t>(slot[static_cast<std::size_t>(k)])].push_back(s);
  }
  return r;
}

PathRoute lift_path(const CoveringGraph& c, const PathRoute& base, int start_sheet) {
  validate_route(c.base, base);
  PathRoute out;
  out.start = c.lift_point(base.start, start_sheet);
  EdgePoint cur = out.start;
  for (const Segment& seg : base.segments) {
    const Edge& e = c.base.edge(seg.edge);
    int j;
    if (point_vertex(c.base, {seg.edge, seg.from}) >= 0) {
      int s = c.point_sheet(cur);
      if (seg.from <= 0.5 * e.length)
        j = c.lift_edge(seg.edge, s);
      else
        j = c.lift_edge(seg.edge, inverse_permutation(c.voltage.assignment[static_cast<std::size_t>(seg.edge)])[static_cast<std::size_t>(s)]);
    } else {
      j = cur.edge;
    }
    out.segments.push_back({j, seg.from, seg.to});
    cur = {j, seg.to};
  }
  return out;
}

PathRoute lift_path_ending_at(const CoveringGraph& c, const PathRoute& base, const EdgePoint& end) {
  if (!same_location(c.base, c.project(end), base.end()))
    throw InvalidInput("requested lift endpoint does not lie over the route's end");
  return reverse_route(lift_path(c, reverse_route(base), c.point_sheet(end)));
}

std::vector<DeckTransformation> deck_transformations(const CoveringGraph& c) {
  if (!is_connected_cover(c).connected) throw DisconnectedCover("deck transformations need a connected cover");
  const int n = c.sheets;
  const MetricGraph& b = c.base;
  std::vector<Permutation> inv;
  for (const auto& p : c.voltage.assignment) inv.push_back(inverse_permutation(p));

  std::vector<DeckTransformation> out;
  for (int t = 0; t < n; ++t) {
    std::vector<int> vmap(static_cast<std::size_t>(c.derived.vertex_count()), -1);
    std::vector<int> emap(static_cast<std::size_t>(c.derived.edge_count()), -1);
    bool ok = true;
    auto assign = [&ok](std::vector<int>& map, int from, int to, std::queue<int>* q) {
      int& slot = map[static_cast<std::size_t>(from)];
      if (slot < 0) {
        slot = to;
        if (q) q->push(from);
      } else if (slot != to) {
        ok = false;
      }
    };
    std::queue<int> q;
    assign(vmap, c.lift_vertex(0, 0), c.lift_vertex(0, t), &q);
    while (ok && !q.empty()) {
      int x = q.front();
      q.pop();
      int w = c.base_vertex(x);
      int s = c.vertex_sheet(x);
      int s2 = c.vertex_sheet(vmap[static_cast<std::size_t>(x)]);
      for (int ei : b.incident(w)) {
        const Edge& e = b.edge(ei);
        const Permutation& p = c.voltage.assignment[static_cast<std::size_t>(ei)];
        const Permutation& pi = inv[static_cast<std::size_t>(ei)];
        if (e.u == w) {
          assign(vmap, c.lift_vertex(e.v, p[static_cast<std::size_t>(s)]), c.lift_vertex(e.v, p[static_cast<std::size_t>(s2)]), &q);
          assign(emap, c.lift_edge(ei, s), c.lift_edge(ei, s2), nullptr);
        }
        if (e.v == w) {
          assign(vmap, c.lift_vertex(e.u, pi[static_cast<std::size_t>(s)]), c.lift_vertex(e.u, pi[static_cast<std::size_t>(s2)]), &q);
          assign(emap, c.lift_edge(ei, pi[static_cast<std::size_t>(s)]), c.lift_edge(ei, pi[static_cast<std::size_t>(s2)]), nullptr);
        }
      }
    }
    if (!ok) continue;
    std::vector<int> vs = vmap, es = emap;
    std::sort(vs.begin(), vs.end());
    std::sort(es.begin(), es.end());
    bool bijective = vs == identity_permutation(static_cast<int>(vs.size())) &&
                     es == identity_permutation(static_cast<int>(es.size()));
    if (!bijective) continue;
    for (int ei = 0; ei < c.derived.edge_count() && ok; ++ei) {
      const Edge& e = c.derived.edge(ei);
      const Edge& f = c.derived.edge(emap[static_cast<std::size_t>(ei)]);
      ok = f.u == vmap[static_cast<std::size_t>(e.u)] && f.v == vmap[static_cast<std::size_t>(e.v)];
    }
    if (ok) out.push_back({std::move(vmap), std::move(emap)});
  }
  return out;
}

Thm1Report verify_thm1(const CoveringGraph& c, double tol) {
  if (!is_connected_cover(c).connected) throw DisconnectedCover("derived cover is not connected");
  Thm1Report r;
  r.sheets = c.sheets;
  r.base = continuous_diameter(c.base);
  r.cover = continuous_diameter(c.derived);
  r.bound = c.sheets * r.base.value;
  r.holds = r.cover.value <= r.bound + tol;
  return r;
}

Thm1Report verify_thm1(const MetricGraph& g, const Voltage& v, double tol) {
  return verify_thm1(derive_cover(g, v), tol);
}

ShorteningTrace ivanov_shorten(const CoveringGraph& c, const PathRoute& route) {
  return ivanov_shorten(c, route, continuous_diameter(c.base).value);
}

ShorteningTrace ivanov_shorten(const CoveringGraph& c, const PathRoute& route, double d) {
  validate_route(c.derived, route);
  const int n = c.sheets;
  const double total = route.length();
  if (!(total > n * d * (1 + 1e-12) + 1e-12))
    throw PathNotLongEnough("route length " + std::to_string(total) + " does not exceed n*d = " +
                            std::to_string(n * d));

  ShorteningTrace tr;
  tr.input_length = total;
  tr.base_diameter = d;
  for (int k = 0; k <= n; ++k) {
    double x = k == n ? total : total * k / n;
    tr.partition.push_back(x);
    tr.partition_points.push_back(k == 0 ? route.start : k == n ? route.end() : point_at(c.derived, route, x));
  }

  std::vector<PathRoute> projected;  // rho(gamma_k)
  for (int k = 1; k <= n; ++k) {
    PathRoute piece = sub_route(c.derived, route, tr.partition[static_cast<std::size_t>(k - 1)], tr.partition[static_cast<std::size_t>(k)]);
    tr.piece_lengths.push_back(piece.length());
    projected.push_back(c.project(piece));
    PathRoute alpha = shortest_route(c.base, c.project(tr.partition_points[static_cast<std::size_t>(k - 1)]),
                                     c.project(tr.partition_points[static_cast<std::size_t>(k)]));
    tr.replacements.push_back(std::move(alpha));
  }

  // Base route built from alpha_1..alpha_j for pieces i < k <= j and the
  // projected pieces elsewhere.
  auto splice = [&](int i, int j) {
    PathRoute r;
    r.start = c.project(route.start);
    for (int k = 1; k <= n; ++k) {
      const PathRoute& part = (k > i && k <= j) ? tr.replacements[static_cast<std::size_t>(k - 1)] : projected[static_cast<std::size_t>(k - 1)];
      PathRoute head = r;
      r = concat_routes(c.base, head, part);
    }
    return r;
  };

  const EdgePoint q = route.end();
  std::vector<PathRoute> lifts;
  for (int i = 0; i <= n; ++i) {
    lifts.push_back(lift_path_ending_at(c, splice(0, i), q));
    tr.lift_starts.push_back(lifts.back().start);
  }

  PathRoute sigma;
  for (int j = 1; j <= n && tr.match.first < 0; ++j)
    if (same_location(c.derived, tr.lift_starts[static_cast<std::size_t>(j)], route.start)) {
      tr.match = {0, j};
      sigma = lifts[static_cast<std::size_t>(j)];
    }
  for (int i = 1; i <= n && tr.match.first < 0; ++i)
    for (int j = i + 1; j <= n && tr.match.first < 0; ++j)
      if (same_location(c.derived, tr.lift_starts[static_cast<std::size_t>(i)], tr.lift_starts[static_cast<std::size_t>(j)])) {
        tr.match = {i, j};
        sigma = lift_path_ending_at(c, splice(i, j), q);
      }
  if (tr.match.first < 0) throw std::logic_error("pigeonhole step found no coinciding lifts");
  if (!same_location(c.derived, sigma.start, route.start))
    throw std::logic_error("spliced route does not start at the input's start");

  tr.sigma = reduce_route(c.derived, sigma);
  tr.sigma.start = route.start;
  if (!(tr.sigma.length() < total)) throw std::logic_error("surgery did not shorten the route");
  return tr;
}

}  // namespace liftdiam
