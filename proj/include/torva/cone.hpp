#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "torva/scalar.hpp"

namespace torva {

// V-representation of a polyhedral cone: extreme rays (canonically scaled,
// sorted) plus a canonical basis of the lineality space.
struct VRep {
  std::vector<ScalarVec> rays;
  std::vector<ScalarVec> lineality;
};

// Scales a ray by a positive factor into canonical form: primitive integer
// coordinates when all entries are rational, otherwise leading entry of
// absolute value one.
void canonicalize_ray(ScalarVec& v);

// Canonical (reduced row echelon, primitive, leading-positive) basis of the
// span of the given vectors.
std::vector<ScalarVec> canonical_subspace_basis(std::vector<ScalarVec> vecs, int dim);

int field_rank(const std::vector<ScalarVec>& vecs, int dim);

// Exact double description: extreme rays and lineality of
// {x : <a,x> >= 0 for all a in ineqs}.
VRep dd_convert(int dim, const std::vector<ScalarVec>& ineqs);

// A polyhedral cone given by homogeneous inequalities <a,x> >= 0.
// Immutable; derived data (generators, facets, keys) is cached behind a
// shared pointer so copies stay cheap.
class HCone {
 public:
  HCone(int dim, std::vector<ScalarVec> ineqs);

  static HCone from_generators(int dim, const std::vector<ScalarVec>& rays,
                               const std::vector<ScalarVec>& lineality = {});
  static HCone full_space(int dim) { return HCone(dim, {}); }

  int ambient_dim() const { return dim_; }
  const std::vector<ScalarVec>& inequalities() const { return ineqs_; }

  const VRep& generators() const;
  int dim() const;
  int lineality_dim() const;
  bool is_pointed() const { return lineality_dim() == 0; }

  // Indices of inequalities that are tight on the whole cone.
  const std::vector<int>& equality_indices() const;
  // Indices of an irredundant facet-defining subset (one per facet).
  const std::vector<int>& facet_indices() const;

  bool contains(const ScalarVec& x) const;
  bool contains_cone(const HCone& other) const;
  bool equals(const HCone& other) const;

  HCone intersect(const HCone& other) const;
  HCone dual() const;

  ScalarVec relint_point() const;

  // Smallest face containing p; throws DomainError if p is outside.
  HCone face_at(const ScalarVec& p) const;

  // Canonical string key for the solution set (from the V-side data).
  const std::string& canonical_key() const;

 private:
  struct Cache;
  int dim_;
  std::vector<ScalarVec> ineqs_;
  std::shared_ptr<Cache> cache_;
};

bool is_face_of(const HCone& face, const HCone& cone);

// All faces, deterministic order (by dimension, then canonical key).
std::vector<HCone> faces_of(const HCone& cone);

// A polyhedron {x : <a,x> + c >= 0}; the V-side is computed through the
// homogenization cone in one extra dimension.
class HPolyhedron {
 public:
  struct Ineq {
    ScalarVec normal;
    Scalar offset;
  };

  HPolyhedron() : HPolyhedron(0, {}) {}  // the single point of R^0
  HPolyhedron(int dim, std::vector<Ineq> ineqs);

  static HPolyhedron from_generators(int dim, const std::vector<ScalarVec>& vertices,
                                     const std::vector<ScalarVec>& rays = {},
                                     const std::vector<ScalarVec>& lineality = {});

  int ambient_dim() const { return dim_; }
  const std::vector<Ineq>& inequalities() const { return ineqs_; }
  const HCone& homogenization() const;  // in dim+1, last coordinate is the level

  bool is_empty() const;
  int dim() const;  // -1 for the empty polyhedron

  std::vector<ScalarVec> vertices() const;
  std::vector<ScalarVec> rays() const;
  std::vector<ScalarVec> lineality() const;
  HCone recession_cone() const;

  bool contains(const ScalarVec& x) const;
  ScalarVec relint_point() const;

  bool equals(const HPolyhedron& other) const;
  const std::string& canonical_key() const;

 private:
  struct Cache;
  int dim_;
  std::vector<Ineq> ineqs_;
  std::shared_ptr<Cache> cache_;
};

// All nonempty faces, deterministic order; includes the polyhedron itself.
std::vector<HPolyhedron> faces_of(const HPolyhedron& p);

HPolyhedron polytope_hull(int dim, const std::vector<ScalarVec>& points);

}  // namespace torva
