#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "liftdiam/complex2.hpp"
#include "liftdiam/covering.hpp"
#include "liftdiam/groups.hpp"

namespace liftdiam {

class CoverNotCovering : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Universal cover of a 2-complex with finite fundamental group, realised by
/// the regular representation: sheets are group elements and crossing a
/// generator edge multiplies on the right. Total vertex (v, s) has index
/// v*n + s.
struct CoveringComplex {
  SimplicialComplex2 base;
  SimplicialComplex2 total;
  int sheets = 1;
  std::shared_ptr<const CosetTable> group;
  Pi1Presentation pi1;
  std::vector<Permutation> edge_permutation;  // per base edge, oriented low -> high
  std::vector<int> edge_projection;           // per total edge
  std::vector<int> triangle_projection;       // per total triangle
  /// deck[g][s] = g * s: the deck transformation of g acting on every fiber.
  std::vector<Permutation> deck;
  TrivialityResult total_simply_connected;

  int base_vertex(int v) const { return v / sheets; }
  int sheet(int v) const { return v % sheets; }
  int lift_vertex(int v, int s) const { return v * sheets + s; }
};

CoveringComplex build_universal_cover(const SimplicialComplex2& k, std::size_t budget);

/// Key of a subdivision vertex, in barycentric terms of the simplex that
/// carries it in its interior.
struct LatticeKey {
  int dim = 0;     // 0: original vertex, 1: edge interior, 2: triangle interior
  int simplex = 0; // vertex / edge / triangle index
  int i = 0;       // edge: steps from the lower vertex; triangle: weights
  int j = 0;       // of the second and third vertices
  friend auto operator<=>(const LatticeKey&, const LatticeKey&) = default;
};

/// Edgewise subdivision of a unit equilateral complex into level^2 smaller
/// triangles per face, as a metric graph with edges of length 1/level.
struct PEApprox {
  int level = 1;
  MetricGraph graph;
  std::vector<LatticeKey> keys;  // per graph vertex; original vertices first
  int face_count = 0;
};

PEApprox pe_subdivision_graph(const SimplicialComplex2& k, int level);

struct Thm2Report {
  int sheets = 0;
  int level = 0;
  Diameter base;
  Diameter cover;
  double bound = 0.0;  // 4 sqrt(n) d_base
  double ratio = 0.0;
  double corrected_ratio = 0.0;  // ratio * 2/sqrt(3), worst case for the staircase metric
  bool holds = false;
};

Thm2Report verify_thm2(const CoveringComplex& c, int level, double tol);
Thm2Report verify_thm2(const SimplicialComplex2& k, int level, std::size_t budget, double tol);

struct NerveReport {
  int sheets = 0;
  int basepoint = 0;
  int level = 0;
  double epsilon = 0.0;
  double base_diameter = 0.0;
  double radius = 0.0;  // d + epsilon
  bool mesh_exceeds_epsilon = false;
  std::vector<int> fiber;  // total PE graph vertices over the basepoint, by sheet
  std::vector<double> fiber_distances;  // row-major n x n
  SimplicialComplex2 nerve;

  std::vector<int> distance_generators;  // K: deck elements moving p_e less than 2(d+eps)
  std::vector<int> nerve_generators;     // deck elements adjacent to p_e in the nerve
  bool nerve_is_cayley = false;          // N^1 == Cayley(deck group, nerve generators)
  bool generators_agree = false;         // nerve generators == K
  bool one_skeleton_connected = false;
  TrivialityResult nerve_simply_connected;
  int nerve_diameter = 0;
  double lemma_bound = 0.0;
  bool diameter_ok = false;
  double fiber_pair_bound = 0.0;  // (sqrt(4n+1) - 2) * 2(d + eps)
  double max_fiber_distance = 0.0;
  bool fiber_pairs_ok = false;
  double cover_diameter = 0.0;
  double cover_bound = 0.0;  // 2d + fiber_pair_bound
  double theorem_bound = 0.0;
  bool cover_ok = false;
  bool all_ok = false;
};

/// Nerve of the balls of radius d + epsilon around the fiber over base
/// vertex p, sampled at the level-`level` subdivision vertices of the total
/// space, and the chain of estimates leading to the universal-cover bound.
NerveReport fiber_ball_nerve(const CoveringComplex& c, int p, double epsilon, int level, std::size_t budget);

/// 2 + 2(sqrt(4n+1) - 2) < 4 sqrt(n) for every 1 <= n <= n_max.
bool final_inequality_check(long long n_max, Exec exec = Exec::parallel);

/// Minimal 6-vertex triangulation of the real projective plane.
SimplicialComplex2 rp2_complex();

}  // namespace liftdiam
