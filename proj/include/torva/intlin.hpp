#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "torva/scalar.hpp"

namespace torva {

// Dense integer matrix with exact big-integer entries.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, 0) {}

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
  const BigInt& at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

  IntVec row(int r) const;
  IntVec col(int c) const;
  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  int rows_, cols_;
  std::vector<BigInt> data_;
};

struct HnfResult {
  IntMatrix h;  // row Hermite normal form
  IntMatrix u;  // unimodular, h = u * a
};

struct SnfResult {
  IntMatrix s;  // diagonal, d_i | d_{i+1}, entries >= 0
  IntMatrix u;  // unimodular
  IntMatrix v;  // unimodular, s = u * a * v
};

// Row-style Hermite normal form: pivots positive, entries above a pivot
// reduced into [0, pivot), zero rows at the bottom.
HnfResult hnf(const IntMatrix& a);

SnfResult snf(const IntMatrix& a);

// Some integer solution of a*x = b, or nullopt if none exists.
std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b);

// Basis of the integer kernel {x : a*x = 0}.
std::vector<IntVec> integer_kernel(const IntMatrix& a);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

// Divides v by the gcd of its entries (no-op for the zero vector).
void make_primitive(IntVec& v);

}  // namespace torva
