#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "torva/gamma.hpp"

namespace torva {

// A monomial datum (u, gamma): exponent u in the character lattice and the
// valuation gamma of its coefficient.
struct MonomialDatum {
  IntVec u;
  Scalar gamma;

  bool operator==(const MonomialDatum& o) const { return u == o.u && gamma == o.gamma; }
  bool operator<(const MonomialDatum& o) const;
  std::string to_string() const;
};

struct SemigroupGens {
  int n = 0;
  std::vector<MonomialDatum> elems;  // sorted, duplicate-free
};

// Validates every valuation against the group, sorts and deduplicates.
SemigroupGens make_semigroup_gens(int n, std::vector<MonomialDatum> elems,
                                  const ValueGroup& gamma);

// Minimal generating set of C cap Z^d for a pointed rational cone C:
// candidates from the zonotope of the primitive ray generators, reduced to
// the irreducible elements.  Throws DomainError for non-pointed or
// irrational input.
std::vector<IntVec> hilbert_basis(const HCone& cone);

// Generating set of C cap Z^d for a rational cone with lineality: a lattice
// basis of the lineality (both signs) plus canonical lifts of the Hilbert
// basis of the pointed image cone.
std::vector<IntVec> cone_semigroup_generators(const HCone& cone);

// Generators of the weight algebra of an admissible finite-type cone:
// per vertex w of the level-1 slice, the semigroup generators u of the dual
// of the local cone paired with gamma = -<u, w>.
SemigroupGens algebra_generators(const GammaCone& cone, const ToricContext& ctx);

// (u, gamma) pairs nonnegative against every generator of the cone.
bool in_weight_algebra(const GammaCone& cone, const MonomialDatum& d);

// d lies in cone(S) and its valuation lies in the group.
bool saturation_membership(const SemigroupGens& s, const MonomialDatum& d,
                           const ValueGroup& gamma);

// Membership of d in the monomial semigroup of the algebra generated by S
// over the valuation ring: sums of generators plus a residue (0, gamma)
// with gamma >= 0 (the valuation of a coefficient).  Exact when cone(S) is
// pointed; when it has lineality the search depth is capped at depth_cap.
bool semigroup_member(const SemigroupGens& s, const MonomialDatum& d, long depth_cap = -1);

// Bounded saturation check: every element of cone(S) cap (M x Gamma) that
// is expressible with generator coefficient sums <= bound (denominators up
// to bound) must lie in the semigroup generated by S.  Returns the first
// counterexample as a witness.
std::pair<bool, std::optional<MonomialDatum>> is_saturated_bounded(const SemigroupGens& s,
                                                                   int bound,
                                                                   const ValueGroup& gamma);

}  // namespace torva
