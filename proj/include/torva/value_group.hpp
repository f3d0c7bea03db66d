#pragma once

#include <vector>

#include "torva/intlin.hpp"
#include "torva/scalar.hpp"

namespace torva {

// A finitely generated subgroup of the reals inside the session scalar
// field, or the whole field viewed as a group.  Membership is decided by
// integer linear algebra on the (rational, radical) coordinates.
class ValueGroup {
 public:
  static ValueGroup whole_field(long disc = 0);
  // session_disc widens the ambient field when the generators are all
  // rational but the session works in Q(sqrt(D)).
  static ValueGroup with_generators(std::vector<Scalar> gens, long session_disc = 0);

  bool is_whole_field() const { return whole_field_; }
  const std::vector<Scalar>& generators() const { return gens_; }
  long disc() const { return disc_; }

  // True iff x lies in the subgroup; throws ModeMismatch when x carries a
  // different discriminant than the group.
  bool contains(const Scalar& x) const;

  // True iff the group is generated by a single positive rational, the
  // shape a discrete rank-one value group takes here.
  bool is_discrete_cyclic() const;

  std::string describe() const;

 private:
  ValueGroup() = default;
  bool whole_field_ = true;
  long disc_ = 0;
  std::vector<Scalar> gens_;
};

}  // namespace torva
