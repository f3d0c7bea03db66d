#pragma once

#include <string>
#include <vector>

#include "torva/fan.hpp"
#include "torva/semigroup.hpp"

namespace torva {

// A monomially generated invariant ideal on an affine chart: every
// generator must lie in the weight algebra of the chart cone.
struct InvariantIdeal {
  GammaCone chart;
  SemigroupGens gens;
};

InvariantIdeal make_invariant_ideal(GammaCone chart, SemigroupGens gens);

// The affine forms (w,t) -> <u_k, w> + gamma_k * t whose minimum is the
// order function of the ideal on the chart.
std::vector<MonomialDatum> order_function(const InvariantIdeal& ideal);

// Subdivision of the chart into the linearity domains of the order
// function, with the active generator indices per maximal cone.
struct BlowupSubdivision {
  GammaFan fan;
  std::vector<std::vector<int>> active_sets;  // aligned with fan.maximal_cones()
};

BlowupSubdivision blowup_subdivision(const InvariantIdeal& ideal);

// The order function is affine-linear on every cone of the subfan
// (equivalently, every subfan cone survives the subdivision intact).
// Throws DomainError when delta is not a subfan of the chart's face fan.
bool is_u_admissible(const InvariantIdeal& ideal, const std::vector<GammaCone>& delta);

// Generators of the product ideal: all pairwise sums.
InvariantIdeal product_ideal(const InvariantIdeal& a, const InvariantIdeal& b);

// Coarsest fan refining both inputs: pairwise intersections of maximal
// cones on the common support.
GammaFan common_refinement(const GammaFan& a, const GammaFan& b);

// A finite chain of successive refinements of the face fan of a chart,
// each level induced by one ideal transported by restriction.
struct Tower {
  GammaFan base;
  std::vector<std::pair<std::string, GammaFan>> levels;
};

Tower build_tower(const GammaCone& chart, const std::vector<InvariantIdeal>& ideals, int depth);

}  // namespace torva
