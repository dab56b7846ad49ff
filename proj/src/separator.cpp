#include "liftdiam/separator.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <stdexcept>

#include "liftdiam/complex2.hpp"
#include "liftdiam/kernels.hpp"

namespace liftdiam {

SphereDecomposition sphere_decomposition(const CayleyGraph& c) {
  WordMetricDiameter w = word_metric_diameter(c);
  const auto& adj = c.adjacency();
  SphereDecomposition d;
  d.layer_of = w.distance;
  d.layers.assign(static_cast<std::size_t>(w.diameter) + 1, {});
  for (int g = 0; g < c.order(); ++g) d.layers[static_cast<std::size_t>(w.distance[static_cast<std::size_t>(g)])].push_back(g);

  std::vector<int> path{w.farthest};
  while (path.back() != c.identity()) {
    int g = path.back();
    int best = -1;
    for (int h : adj[static_cast<std::size_t>(g)])
      if (w.distance[static_cast<std::size_t>(h)] + 1 == w.distance[static_cast<std::size_t>(g)] && (best < 0 || h < best)) best = h;
    path.push_back(best);
  }
  d.geodesic.assign(path.rbegin(), path.rend());

  for (std::size_t i = 0; i < d.geodesic.size(); ++i) {
    const int layer = static_cast<int>(i);
    std::vector<int> comp{d.geodesic[i]};
    std::set<int> seen{d.geodesic[i]};
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (int h : adj[static_cast<std::size_t>(comp[k])])
        if (w.distance[static_cast<std::size_t>(h)] == layer && seen.insert(h).second) comp.push_back(h);
    std::sort(comp.begin(), comp.end());
    d.components.push_back(std::move(comp));
  }
  return d;
}

bool check_separation(const CayleyGraph& c, const SphereDecomposition& d, int i) {
  if (i <= 0 || i >= d.diameter())
    throw std::out_of_range("separation index " + std::to_string(i) + " is not interior to [0, " +
                            std::to_string(d.diameter()) + "]");
  std::vector<char> blocked(static_cast<std::size_t>(c.order()), 0);
  for (int g : d.components[static_cast<std::size_t>(i)]) blocked[static_cast<std::size_t>(g)] = 1;
  std::vector<char> seen(static_cast<std::size_t>(c.order()), 0);
  std::queue<int> q;
  seen[static_cast<std::size_t>(c.identity())] = 1;
  q.push(c.identity());
  while (!q.empty()) {
    int g = q.front();
    q.pop();
    if (g == d.farthest()) return false;
    for (int h : c.adjacency()[static_cast<std::size_t>(g)]) {
      if (blocked[static_cast<std::size_t>(h)] || seen[static_cast<std::size_t>(h)]) continue;
      seen[static_cast<std::size_t>(h)] = 1;
      q.push(h);
    }
  }
  return true;
}

SizeBoundReport check_size_bounds(const SphereDecomposition& d) {
  SizeBoundReport r;
  const int m = d.diameter();
  r.all_sizes_ok = true;
  for (int i = 0; i <= m; ++i) {
    SizeBoundRow row;
    row.index = i;
    row.size = static_cast<int>(d.components[static_cast<std::size_t>(i)].size());
    row.required = std::min(i + 1, m - i + 1);
    row.ok = row.size >= row.required;
    r.all_sizes_ok = r.all_sizes_ok && row.ok;
    r.component_total += row.size;
    r.rows.push_back(row);
  }
  for (const auto& layer : d.layers) r.group_order += static_cast<int>(layer.size());
  std::set<int> all;
  for (const auto& t : d.components) all.insert(t.begin(), t.end());
  r.disjoint = static_cast<int>(all.size()) == r.component_total;
  r.sum_ok = r.component_total <= r.group_order;
  return r;
}

std::vector<int> translated_copy(const CayleyGraph& c, int a, const std::vector<int>& s) {
  std::vector<int> image;
  for (int x : s) image.push_back(c.multiply(a, x));
  // Left multiplication commutes with right multiplication, so every
  // labelled edge x -> x*g inside s must map to a*x -> a*x*g.
  std::set<int> inside(s.begin(), s.end());
  std::set<int> inside_image(image.begin(), image.end());
  if (inside_image.size() != inside.size()) throw std::logic_error("left translation is not injective");
  for (std::size_t k = 0; k < c.right_mult().size(); ++k) {
    const auto& row = c.right_mult()[k];
    for (std::size_t idx = 0; idx < s.size(); ++idx) {
      int x = s[idx];
      int y = row[static_cast<std::size_t>(x)];
      bool edge_in = inside.count(y) > 0;
      int ay = row[static_cast<std::size_t>(image[idx])];
      bool edge_out = inside_image.count(ay) > 0;
      if (edge_in != edge_out || (edge_in && ay != c.multiply(a, y)))
        throw std::logic_error("left translation does not preserve the induced subgraph");
    }
  }
  std::sort(image.begin(), image.end());
  return image;
}

double lemma3_bound(int n) {
  if (n < 1) throw std::invalid_argument("group order must be positive");
  return std::sqrt(4.0 * n + 1.0) - 2.0;
}

bool layer_sum_inequality_check(long long m_max, Exec exec) {
  auto first = exec == Exec::serial ? kernels::serial::first_layer_sum_violation(m_max)
                                    : kernels::omp::first_layer_sum_violation(m_max);
  return first < 0;
}

std::string to_string(Lemma3Verdict v) {
  switch (v) {
    case Lemma3Verdict::holds:
      return "holds";
    case Lemma3Verdict::violation:
      return "violation";
    case Lemma3Verdict::hypothesis_failed:
      return "hypothesis_failed";
    case Lemma3Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

Lemma3Report verify_lemma3(const Presentation& p, const std::vector<int>& gens, std::size_t budget) {
  auto table = std::make_shared<const CosetTable>(todd_coxeter(p, budget));
  CayleyGraph c = cayley_graph(table, gens);
  SimplicialComplex2 y = flag_triangles(c);

  Lemma3Report r;
  r.order = c.order();
  r.generators = gens;
  r.triangles = static_cast<int>(y.triangles().size());
  r.simply_connected = is_simply_connected(y, budget);
  SphereDecomposition d = sphere_decomposition(c);
  r.diameter = d.diameter();
  r.bound = lemma3_bound(r.order);

  const bool within = r.diameter <= std::floor(r.bound + 1e-9);
  switch (r.simply_connected.status) {
    case Triviality::yes:
      r.verdict = within ? Lemma3Verdict::holds : Lemma3Verdict::violation;
      break;
    case Triviality::no:
      r.verdict = Lemma3Verdict::hypothesis_failed;
      break;
    case Triviality::unknown:
      r.verdict = Lemma3Verdict::inconclusive;
      break;
  }

  r.sizes = check_size_bounds(d);
  for (int i = 1; i < r.diameter; ++i)
    if (!check_separation(c, d, i)) r.separation_failures.push_back(i);
  r.structure_ok = r.separation_failures.empty() && r.sizes.all_sizes_ok && r.sizes.disjoint && r.sizes.sum_ok;
  return r;
}

}  // namespace liftdiam
