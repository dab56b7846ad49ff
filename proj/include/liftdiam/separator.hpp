#pragma once

#include <string>
#include <vector>

#include "liftdiam/groups.hpp"
#include "liftdiam/metric_graph.hpp"

namespace liftdiam {

/// Word-metric spheres around the identity and, along a geodesic to a
/// farthest element h, the component T_i of g_i inside sphere S_i.
struct SphereDecomposition {
  std::vector<int> geodesic;                 // g_0 = e, ..., g_m = h
  std::vector<std::vector<int>> layers;      // S_i, sorted
  std::vector<std::vector<int>> components;  // T_i, sorted
  std::vector<int> layer_of;                 // word length of each element

  int diameter() const { return static_cast<int>(geodesic.size()) - 1; }
  int farthest() const { return geodesic.back(); }
};

/// Farthest element is the smallest index at maximal distance; each g_i's
/// predecessor is its smallest-index neighbour one layer down.
SphereDecomposition sphere_decomposition(const CayleyGraph& c);

/// Whether deleting T_i leaves the identity and h in different components.
/// Requires 0 < i < m.
bool check_separation(const CayleyGraph& c, const SphereDecomposition& d, int i);

struct SizeBoundRow {
  int index = 0;
  int size = 0;
  int required = 0;  // min(i+1, m-i+1)
  bool ok = false;
};

struct SizeBoundReport {
  std::vector<SizeBoundRow> rows;
  bool all_sizes_ok = false;
  bool disjoint = false;
  int component_total = 0;
  int group_order = 0;
  bool sum_ok = false;
};

SizeBoundReport check_size_bounds(const SphereDecomposition& d);

/// Left translate a * s. Throws std::logic_error if the translate does not
/// induce a label-preserving isomorphic subgraph.
std::vector<int> translated_copy(const CayleyGraph& c, int a, const std::vector<int>& s);

/// sqrt(4n + 1) - 2.
double lemma3_bound(int n);

/// m <= sqrt(4 sum_i min(i+1, m-i+1) + 1) - 2 for every 0 <= m <= m_max:
/// the layer sizes forced on a diameter-m group fit inside the bound.
bool layer_sum_inequality_check(long long m_max, Exec exec = Exec::parallel);

enum class Lemma3Verdict { holds, violation, hypothesis_failed, inconclusive };
std::string to_string(Lemma3Verdict v);

struct Lemma3Report {
  int order = 0;
  std::vector<int> generators;
  TrivialityResult simply_connected;
  int diameter = 0;
  double bound = 0.0;
  Lemma3Verdict verdict = Lemma3Verdict::inconclusive;
  int triangles = 0;

  // Separator structure; filled for every instance, meaningful as a check
  // of the argument only when the complex is simply connected.
  SizeBoundReport sizes;
  std::vector<int> separation_failures;  // interior indices where T_i does not separate
  bool structure_ok = false;             // all three structural checks pass
};

Lemma3Report verify_lemma3(const Presentation& p, const std::vector<int>& gens, std::size_t budget);

}  // namespace liftdiam
