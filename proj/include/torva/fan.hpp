#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torva/gamma.hpp"

namespace torva {

struct FanCheck {
  bool ok = true;
  std::string message;
  std::vector<std::pair<int, int>> bad_pairs;  // indices into maximal_cones()
};

// A fan of pointed cones in N_R x R+, stored through its maximal cones
// (deduplicated, none contained in another, sorted canonically).  Faces are
// derived on demand in a deterministic order.
class GammaFan {
 public:
  static GammaFan from_cones(int n, std::vector<GammaCone> cones);

  int rank() const { return n_; }
  const std::vector<GammaCone>& maximal_cones() const { return max_; }

  std::vector<GammaCone> all_cones() const;

  bool contains_point(const ScalarVec& wt) const;
  bool has_cone(const GammaCone& c) const;  // membership in the face closure

  std::string canonical_key() const;
  bool equals(const GammaFan& other) const { return canonical_key() == other.canonical_key(); }

  const FanCheck& validation() const;  // cached validate_fan result

 private:
  GammaFan(int n, std::vector<GammaCone> cones);
  struct Cache;
  int n_;
  std::vector<GammaCone> max_;
  std::shared_ptr<Cache> cache_;
};

// Pairwise fan axiom on the maximal cones plus admissibility of every cone.
FanCheck validate_fan(const GammaFan& fan);

// Support equals {t >= 0}: every maximal cone full-dimensional, interior
// facets shared by exactly two maximal cones, dual graph connected.
// Throws DomainError when the fan is invalid.
bool is_complete(const GammaFan& fan);

// Complete refinement of the fan by the central arrangement of all its
// essential inequality hyperplanes restricted to t >= 0.
GammaFan refine_to_complete(const GammaFan& fan);

// Complete fan containing every cone of the input as a cone.  Tries, in
// order: the identity, a star extension over the boundary of a convex
// full-dimensional support, and an arrangement-based fill whose exterior
// cells are greedily merged.  Offsets of newly computed inequalities are
// validated against gamma.  Every result is re-validated; throws
// ExtensionFailure with the conflicting pairs if no candidate certifies.
GammaFan complete_extension(const GammaFan& fan, const ValueGroup& gamma);

// Convexity of the support, decided exactly cell-by-cell; also returns the
// hull cone of all rays when convex.
std::pair<bool, HCone> support_is_convex(const GammaFan& fan);

}  // namespace torva
