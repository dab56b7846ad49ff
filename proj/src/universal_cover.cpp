#include "liftdiam/universal_cover.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "liftdiam/kernels.hpp"
#include "liftdiam/separator.hpp"

namespace liftdiam {

SimplicialComplex2 rp2_complex() {
  return SimplicialComplex2(6, {},
                            {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
                             {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}});
}

CoveringComplex build_universal_cover(const SimplicialComplex2& k, std::size_t budget) {
  CoveringComplex c;
  c.base = k;
  c.pi1 = pi1_presentation(k, 0);
  c.group = std::make_shared<const CosetTable>(todd_coxeter(c.pi1.presentation, budget));
  const int n = c.group->coset_count;
  c.sheets = n;

  for (std::size_t e = 0; e < k.edges().size(); ++e) {
    int g = c.pi1.edge_generator[e];
    c.edge_permutation.push_back(g == 0 ? identity_permutation(n) : c.group->action[static_cast<std::size_t>(g - 1)]);
  }
  auto perm = [&](int a, int b) -> const Permutation& {
    return c.edge_permutation[static_cast<std::size_t>(k.edge_index(a, b))];
  };

  std::vector<SimplexEdge> edges;
  for (std::size_t e = 0; e < k.edges().size(); ++e) {
    auto [a, b] = k.edges()[e];
    for (int s = 0; s < n; ++s)
      edges.push_back({c.lift_vertex(a, s), c.lift_vertex(b, c.edge_permutation[e][static_cast<std::size_t>(s)])});
  }
  std::vector<SimplexTriangle> tris;
  for (const auto& t : k.triangles()) {
    for (int s = 0; s < n; ++s) {
      int sb = perm(t[0], t[1])[static_cast<std::size_t>(s)];
      int sc = perm(t[1], t[2])[static_cast<std::size_t>(sb)];
      if (perm(t[0], t[2])[static_cast<std::size_t>(s)] != sc)
        throw std::logic_error("triangle boundary does not close up in the cover");
      tris.push_back({c.lift_vertex(t[0], s), c.lift_vertex(t[1], sb), c.lift_vertex(t[2], sc)});
    }
  }
  c.total = SimplicialComplex2(k.vertex_count() * n, edges, tris);
  for (const auto& e : c.total.edges())
    c.edge_projection.push_back(k.edge_index(c.base_vertex(e[0]), c.base_vertex(e[1])));
  std::map<SimplexTriangle, int> tri_index;
  for (std::size_t t = 0; t < k.triangles().size(); ++t) tri_index.emplace(k.triangles()[t], static_cast<int>(t));
  for (const auto& t : c.total.triangles())
    c.triangle_projection.push_back(tri_index.at({c.base_vertex(t[0]), c.base_vertex(t[1]), c.base_vertex(t[2])}));

  CayleyGraph words(c.group, {});
  for (int g = 0; g < n; ++g) {
    Permutation p(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) p[static_cast<std::size_t>(s)] = words.multiply(g, s);
    c.deck.push_back(std::move(p));
  }
  c.total_simply_connected = is_simply_connected(c.total, budget);
  return c;
}

PEApprox pe_subdivision_graph(const SimplicialComplex2& k, int level) {
  if (level < 1) throw InvalidInput("subdivision level must be positive");
  for (double l : k.edge_lengths())
    if (l != 1.0) throw InvalidInput("subdivision graphs need unit edge lengths");

  PEApprox out;
  out.level = level;
  out.face_count = level * level * static_cast<int>(k.triangles().size());
  std::map<LatticeKey, int> id;
  auto add = [&](LatticeKey key) {
    int v = static_cast<int>(out.keys.size());
    id.emplace(key, v);
    out.keys.push_back(key);
  };
  for (int v = 0; v < k.vertex_count(); ++v) add({0, v, 0, 0});
  for (std::size_t e = 0; e < k.edges().size(); ++e)
    for (int t = 1; t < level; ++t) add({1, static_cast<int>(e), t, 0});
  for (std::size_t f = 0; f < k.triangles().size(); ++f)
    for (int wb = 1; wb < level; ++wb)
      for (int wc = 1; wb + wc < level; ++wc) add({2, static_cast<int>(f), wb, wc});

  auto on_edge = [&](int a, int b, int steps_from_a) {
    if (steps_from_a == 0) return a;
    if (steps_from_a == level) return b;
    return id.at({1, k.edge_index(a, b), steps_from_a, 0});
  };
  auto locate = [&](std::size_t f, int wa, int wb, int wc) {
    const auto& t = k.triangles()[f];
    if (wb == 0 && wc == 0) return t[0];
    if (wa == 0 && wc == 0) return t[1];
    if (wa == 0 && wb == 0) return t[2];
    if (wc == 0) return on_edge(t[0], t[1], wb);
    if (wb == 0) return on_edge(t[0], t[2], wc);
    if (wa == 0) return on_edge(t[1], t[2], wc);
    return id.at({2, static_cast<int>(f), wb, wc});
  };

  std::set<std::pair<int, int>> pairs;
  auto link = [&](int x, int y) { pairs.insert({std::min(x, y), std::max(x, y)}); };
  for (const auto& e : k.edges())
    for (int t = 0; t < level; ++t) link(on_edge(e[0], e[1], t), on_edge(e[0], e[1], t + 1));
  for (std::size_t f = 0; f < k.triangles().size(); ++f)
    for (int wa = 0; wa <= level; ++wa)
      for (int wb = 0; wa + wb <= level; ++wb) {
        int wc = level - wa - wb;
        int here = locate(f, wa, wb, wc);
        if (wa > 0) {
          link(here, locate(f, wa - 1, wb + 1, wc));
          link(here, locate(f, wa - 1, wb, wc + 1));
        }
        if (wb > 0) link(here, locate(f, wa, wb - 1, wc + 1));
      }

  std::vector<std::string> names;
  for (const auto& key : out.keys) {
    if (key.dim == 0 && static_cast<std::size_t>(key.simplex) < k.vertex_names.size())
      names.push_back(k.vertex_names[static_cast<std::size_t>(key.simplex)]);
    else
      names.push_back("p" + std::to_string(key.dim) + ":" + std::to_string(key.simplex) + ":" +
                      std::to_string(key.i) + ":" + std::to_string(key.j));
  }
  std::vector<Edge> edges;
  const double len = 1.0 / level;
  for (auto [x, y] : pairs) edges.push_back({"s" + std::to_string(edges.size()), x, y, len});
  out.graph = MetricGraph(std::move(names), std::move(edges));
  return out;
}

Thm2Report verify_thm2(const CoveringComplex& c, int level, double tol) {
  Thm2Report r;
  r.sheets = c.sheets;
  r.level = level;
  PEApprox base = pe_subdivision_graph(c.base, level);
  PEApprox total = pe_subdivision_graph(c.total, level);
  r.base = continuous_diameter(base.graph);
  r.cover = continuous_diameter(total.graph);
  r.bound = 4.0 * std::sqrt(static_cast<double>(c.sheets)) * r.base.value;
  r.ratio = r.cover.value / r.base.value;
  r.corrected_ratio = r.ratio * 2.0 / std::sqrt(3.0);
  r.holds = r.cover.value < r.bound + tol;
  return r;
}

Thm2Report verify_thm2(const SimplicialComplex2& k, int level, std::size_t budget, double tol) {
  return verify_thm2(build_universal_cover(k, budget), level, tol);
}

NerveReport fiber_ball_nerve(const CoveringComplex& c, int p, double epsilon, int level, std::size_t budget) {
  if (p < 0 || p >= c.base.vertex_count()) throw InvalidInput("basepoint out of range");
  if (!(epsilon >= 0.0)) throw InvalidInput("epsilon must be nonnegative");
  const int n = c.sheets;
  NerveReport r;
  r.sheets = n;
  r.basepoint = p;
  r.level = level;
  r.epsilon = epsilon;
  r.mesh_exceeds_epsilon = epsilon < 1.0 / level;

  PEApprox base = pe_subdivision_graph(c.base, level);
  PEApprox total = pe_subdivision_graph(c.total, level);
  r.base_diameter = continuous_diameter(base.graph).value;
  const double d = r.base_diameter;
  r.radius = d + epsilon;

  std::vector<std::vector<double>> from_fiber;
  for (int s = 0; s < n; ++s) {
    r.fiber.push_back(c.lift_vertex(p, s));
    from_fiber.push_back(dijkstra(total.graph, r.fiber.back()).dist);
  }
  const int samples = total.graph.vertex_count();
  std::vector<double> table(static_cast<std::size_t>(samples) * static_cast<std::size_t>(n));
  for (int x = 0; x < samples; ++x) {
    double nearest = std::numeric_limits<double>::infinity();
    for (int s = 0; s < n; ++s) {
      double dx = from_fiber[static_cast<std::size_t>(s)][static_cast<std::size_t>(x)];
      table[static_cast<std::size_t>(x) * n + s] = dx;
      nearest = std::min(nearest, dx);
    }
    if (!(nearest < r.radius))
      throw CoverNotCovering("sample " + total.graph.vertex_names()[static_cast<std::size_t>(x)] +
                             " is at distance " + std::to_string(nearest) + " >= d + epsilon = " +
                             std::to_string(r.radius) + " from the fiber");
  }
  r.nerve = nerve2(n, r.radius, table);

  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      r.fiber_distances.push_back(from_fiber[static_cast<std::size_t>(s)][static_cast<std::size_t>(r.fiber[static_cast<std::size_t>(t)])]);

  // Sheet g is the image of sheet 0 under the deck transformation of g.
  for (int g = 1; g < n; ++g) {
    if (r.fiber_distances[static_cast<std::size_t>(g)] < 2.0 * r.radius) r.distance_generators.push_back(g);
    if (r.nerve.edge_index(0, g) >= 0) r.nerve_generators.push_back(g);
  }
  r.generators_agree = r.distance_generators == r.nerve_generators;

  CayleyGraph cay(c.group, r.nerve_generators);
  std::set<SimplexEdge> cayley_edges;
  for (int g = 0; g < n; ++g)
    for (int h : cay.adjacency()[static_cast<std::size_t>(g)]) cayley_edges.insert({std::min(g, h), std::max(g, h)});
  std::set<SimplexEdge> nerve_edges(r.nerve.edges().begin(), r.nerve.edges().end());
  r.nerve_is_cayley = cayley_edges == nerve_edges;

  r.one_skeleton_connected = r.nerve.is_connected();
  if (r.one_skeleton_connected) {
    r.nerve_simply_connected = is_simply_connected(r.nerve, budget);
    auto ecc = kernels::omp::bfs_eccentricities(r.nerve.adjacency());
    r.nerve_diameter = *std::max_element(ecc.begin(), ecc.end());
  }
  r.lemma_bound = lemma3_bound(n);
  r.diameter_ok = r.one_skeleton_connected && r.nerve_diameter <= std::floor(r.lemma_bound + 1e-9);

  r.fiber_pair_bound = r.lemma_bound * 2.0 * r.radius;
  r.max_fiber_distance = *std::max_element(r.fiber_distances.begin(), r.fiber_distances.end());
  r.fiber_pairs_ok = r.max_fiber_distance < r.fiber_pair_bound;

  r.cover_diameter = continuous_diameter(total.graph).value;
  r.cover_bound = 2.0 * d + r.fiber_pair_bound;
  r.theorem_bound = 4.0 * std::sqrt(static_cast<double>(n)) * d;
  r.cover_ok = r.cover_diameter < r.cover_bound && r.cover_bound < r.theorem_bound;

  r.all_ok = r.nerve_is_cayley && r.generators_agree && r.one_skeleton_connected &&
             r.nerve_simply_connected.status == Triviality::yes && r.diameter_ok && r.fiber_pairs_ok &&
             r.cover_ok;
  return r;
}

bool final_inequality_check(long long n_max, Exec exec) {
  auto first = exec == Exec::serial ? kernels::serial::first_final_inequality_violation(n_max)
                                    : kernels::omp::first_final_inequality_violation(n_max);
  return first < 0;
}

}  // namespace liftdiam
