#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "torva/errors.hpp"

namespace torva {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact element of Q or of a fixed real quadratic extension Q(sqrt(D)),
// stored as rat + rad*sqrt(D) with D a square-free integer >= 2.
// disc() == 0 means the radical part is zero.  Values with different
// nonzero discriminants never mix; combining them throws ModeMismatch.
// All comparisons are exact (sign decided by case analysis and squared
// comparison, never by floating point).
class Scalar {
 public:
  Scalar() : rat_(0), rad_(0), disc_(0) {}
  Scalar(long v) : rat_(v), rad_(0), disc_(0) {}  // NOLINT: implicit by design
  Scalar(const Rational& v) : rat_(v), rad_(0), disc_(0) {}
  Scalar(const BigInt& v) : rat_(v), rad_(0), disc_(0) {}
  Scalar(Rational rat, Rational rad, long disc);

  // The element sqrt(D).
  static Scalar sqrt_of(long disc);

  const Rational& rational_part() const { return rat_; }
  const Rational& radical_part() const { return rad_; }
  long disc() const { return disc_; }

  bool is_zero() const { return rat_ == 0 && rad_ == 0; }
  bool is_rational() const { return rad_ == 0; }
  int sign() const;

  Scalar operator-() const { return Scalar(-rat_, -rad_, disc_); }
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws DomainError on zero divisor
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar abs() const { return sign() >= 0 ? *this : -*this; }

  bool operator==(const Scalar& o) const { return (*this - o).is_zero(); }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const Scalar& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const Scalar& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const Scalar& o) const { return (*this - o).sign() >= 0; }

  // Canonical literal: "p/q", or "p/q+r/s*sqrt(D)" / "p/q-r/s*sqrt(D)".
  std::string to_string() const;

  // Accepts the canonical forms plus bare-integer shorthand "p".
  static Scalar parse(const std::string& text);

 private:
  static long merge_disc(long a, long b);

  Rational rat_;
  Rational rad_;
  long disc_;
};

using ScalarVec = std::vector<Scalar>;
using IntVec = std::vector<BigInt>;

Scalar dot(const ScalarVec& a, const ScalarVec& b);
Scalar dot(const IntVec& a, const ScalarVec& b);
BigInt dot(const IntVec& a, const IntVec& b);

ScalarVec to_scalars(const IntVec& v);
std::string vec_to_string(const ScalarVec& v);
std::string vec_to_string(const IntVec& v);

}  // namespace torva
