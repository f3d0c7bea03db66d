#pragma once

#include <optional>
#include <vector>

#include "torva/fan.hpp"

namespace torva {

// A weighted point configuration: exponent vectors m_0..m_N with a height
// a(i) in the value group or infinity (nullopt).  Repeated exponents are
// legal; only the lowest lift of a repeated exponent can reach the lower
// hull, the rest never participate.  The flag records that duplicates were
// present in the input.
struct WeightedConfig {
  int n = 0;
  std::vector<IntVec> weights;
  std::vector<std::optional<Scalar>> heights;
  bool duplicate_weights = false;

  std::vector<int> finite_indices() const;
};

WeightedConfig make_weighted_config(int n, std::vector<IntVec> weights,
                                    std::vector<std::optional<Scalar>> heights,
                                    const ValueGroup& gamma);

// Convex hull of the exponents with finite height.
HPolyhedron weight_polytope(const WeightedConfig& cfg);

// A face of the subdivided weight polytope, carrying the indices whose
// lifted points span the corresponding lower-hull face.
struct SubdivisionFace {
  std::vector<int> active;
  HPolyhedron body;
  int dim = 0;
};

// All faces of the regular subdivision induced by the heights (projected
// lower hull of the lifted configuration), sorted by dimension then key.
std::vector<SubdivisionFace> regular_subdivision(const WeightedConfig& cfg);

// A linearity domain of g(w) = min_i { a(i) + <m_i, w> } with its active
// index set.
struct DualCell {
  std::vector<int> active;
  HPolyhedron body;
  int dim = 0;
};

// All cells of the min-plus dual complex (linearity domains of g and their
// faces), sorted by dimension then key.
std::vector<DualCell> dual_complex(const WeightedConfig& cfg);

// Mutually inverse inclusion-reversing correspondence between subdivision
// faces and dual cells; both throw DomainError on a non-face input.
DualCell face_to_cone(const WeightedConfig& cfg, const SubdivisionFace& q);
SubdivisionFace cone_to_face(const WeightedConfig& cfg, const DualCell& cell);

// Fan spanned by the dual complex in N_R x R+: one maximal cone per
// full-dimensional linearity domain.  Throws DomainError when a cell spans
// a line (configuration with a lower-dimensional weight polytope).
GammaFan generated_fan(const WeightedConfig& cfg, const ToricContext& ctx);

// Per-vertex fan of the subdivided weight polytope built directly from the
// inequalities <m_j - m_i, w> + (a(j) - a(i)) t >= 0.
GammaFan normalization_fan(const WeightedConfig& cfg, const ToricContext& ctx);

struct OrbitCensus {
  std::vector<HPolyhedron> generic_faces;     // faces of the weight polytope
  std::vector<SubdivisionFace> special_faces; // faces of the subdivision
  int components = 0;                         // maximal cells of the subdivision
};

OrbitCensus orbit_census(const WeightedConfig& cfg);

}  // namespace torva
