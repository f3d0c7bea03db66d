#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torva/cone.hpp"
#include "torva/value_group.hpp"

namespace torva {

// Session data shared by everything built from one input: scalar mode,
// value group, lattice rank and the valuation kind.
struct ToricContext {
  int rank = 0;
  long disc = 0;  // 0 for plain rational mode
  ValueGroup gamma = ValueGroup::whole_field();
  bool discrete = false;
};

// One inequality <m, w> + c*t >= 0 with m in the character lattice and c in
// the value group.
struct GammaIneq {
  IntVec m;
  Scalar c;
};

// A cone in N_R x R+ cut out by GammaIneqs; the inequality t >= 0 is
// implicit and always present.  Offsets are validated against the value
// group on checked construction; cones derived from faces, intersections
// and subdivisions inherit their inequality lists, so membership in the
// group is preserved without rescaling.
class GammaCone {
 public:
  // Validates every offset against gamma (throws GammaViolation).
  static GammaCone checked(int n, std::vector<GammaIneq> ineqs, const ValueGroup& gamma);
  // For derived cones whose inequalities are inherited from checked ones.
  static GammaCone inherited(int n, std::vector<GammaIneq> ineqs, bool t_zero = false);

  int rank() const { return n_; }
  const std::vector<GammaIneq>& inequalities() const { return ineqs_; }
  bool forced_t_zero() const { return t_zero_; }

  // The cone as an HCone in ambient dimension n+1 (last coordinate t).
  const HCone& as_cone() const;

  // Level-r polyhedron {w : (w,r) in cone}; r must be >= 0.
  HPolyhedron slice(const Scalar& r) const;

  // Pointedness; on failure the certificate is a nonzero lineality vector.
  std::pair<bool, std::optional<ScalarVec>> admissible() const;

  std::vector<GammaCone> faces() const;
  GammaCone intersect(const GammaCone& other) const;

  bool contains(const ScalarVec& wt) const { return as_cone().contains(wt); }
  bool contains_cone(const GammaCone& o) const { return as_cone().contains_cone(o.as_cone()); }
  bool equals(const GammaCone& o) const { return as_cone().equals(o.as_cone()); }
  int dim() const { return as_cone().dim(); }
  const std::string& canonical_key() const { return as_cone().canonical_key(); }

  // True iff the cone lies inside the boundary hyperplane t = 0.
  bool in_t_boundary() const;

 private:
  GammaCone(int n, std::vector<GammaIneq> ineqs, bool t_zero);
  struct Cache;
  int n_;
  std::vector<GammaIneq> ineqs_;
  bool t_zero_;
  std::shared_ptr<Cache> cache_;
};

bool is_face_of(const GammaCone& face, const GammaCone& cone);

// Vertices of the level-1 polyhedron with all coordinates in the value
// group; returns the offending vertices otherwise.  In discrete valuation
// mode the check is vacuous.
std::pair<bool, std::vector<ScalarVec>> finite_type_check(const GammaCone& cone,
                                                          const ToricContext& ctx);

// The raw coordinate check, independent of the valuation mode.
std::pair<bool, std::vector<ScalarVec>> vertices_in_gamma(const GammaCone& cone,
                                                          const ValueGroup& gamma);

// Cone spanned by P - w at a vertex w of P (tight inequalities translated
// to the origin).  Throws DomainError when w is not a vertex.
HCone local_cone(const HPolyhedron& p, const ScalarVec& w);

// One irreducible component of the special fiber: the vertex of the level-1
// polyhedron and the character lattice of the torus acting on it, given by
// a basis (rank < n means infinite index).
struct CensusEntry {
  ScalarVec vertex;
  std::vector<IntVec> lattice_basis;
  bool full_rank;
};

std::vector<CensusEntry> special_fiber_census(const GammaCone& cone, const ToricContext& ctx);

bool reducedness_flag(const GammaCone& cone, const ToricContext& ctx);

}  // namespace torva
