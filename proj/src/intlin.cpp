#include "torva/intlin.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace torva {

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

void make_primitive(IntVec& v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw InternalError("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntVec IntMatrix::row(int r) const {
  IntVec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(r, j);
  return v;
}

IntVec IntMatrix::col(int c) const {
  IntVec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw InternalError("matrix product shape mismatch");
  IntMatrix m(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < o.cols_; ++j) m.at(i, j) += at(i, k) * o.at(k, j);
    }
  return m;
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void add_row_multiple(IntMatrix& m, int dst, int src, const BigInt& f) {
  if (f == 0) return;
  for (int j = 0; j < m.cols(); ++j) m.at(dst, j) += f * m.at(src, j);
}

void negate_row(IntMatrix& m, int r) {
  for (int j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

void swap_cols(IntMatrix& m, int a, int b) {
  for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void add_col_multiple(IntMatrix& m, int dst, int src, const BigInt& f) {
  if (f == 0) return;
  for (int i = 0; i < m.rows(); ++i) m.at(i, dst) += f * m.at(i, src);
}

void negate_col(IntMatrix& m, int c) {
  for (int i = 0; i < m.rows(); ++i) m.at(i, c) = -m.at(i, c);
}

}  // namespace

HnfResult hnf(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  int pivot_row = 0;
  for (int col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    // Euclid on the column below pivot_row until one nonzero entry remains.
    for (;;) {
      int best = -1;
      for (int i = pivot_row; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        if (best < 0 || boost::multiprecision::abs(h.at(i, col)) <
                            boost::multiprecision::abs(h.at(best, col)))
          best = i;
      }
      if (best < 0) break;
      if (best != pivot_row) {
        swap_rows(h, pivot_row, best);
        swap_rows(u, pivot_row, best);
      }
      bool cleared = true;
      for (int i = pivot_row + 1; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        const BigInt q = h.at(i, col) / h.at(pivot_row, col);
        add_row_multiple(h, i, pivot_row, -q);
        add_row_multiple(u, i, pivot_row, -q);
        if (h.at(i, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h.at(pivot_row, col) == 0) continue;
    if (h.at(pivot_row, col) < 0) {
      negate_row(h, pivot_row);
      negate_row(u, pivot_row);
    }
    // Reduce the entries above the pivot into [0, pivot).
    for (int i = 0; i < pivot_row; ++i) {
      const BigInt p = h.at(pivot_row, col);
      BigInt q = h.at(i, col) / p;
      if (h.at(i, col) - q * p < 0) q -= 1;
      add_row_multiple(h, i, pivot_row, -q);
      add_row_multiple(u, i, pivot_row, -q);
    }
    ++pivot_row;
  }
  return {h, u};
}

SnfResult snf(const IntMatrix& a) {
  IntMatrix s = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const int n = std::min(a.rows(), a.cols());

  for (int k = 0; k < n; ++k) {
    for (;;) {
      // Move the entry of least absolute value in the trailing block to (k,k).
      int bi = -1, bj = -1;
      for (int i = k; i < s.rows(); ++i)
        for (int j = k; j < s.cols(); ++j) {
          if (s.at(i, j) == 0) continue;
          if (bi < 0 || boost::multiprecision::abs(s.at(i, j)) <
                            boost::multiprecision::abs(s.at(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi < 0) break;  // trailing block is zero
      if (bi != k) {
        swap_rows(s, k, bi);
        swap_rows(u, k, bi);
      }
      if (bj != k) {
        swap_cols(s, k, bj);
        swap_cols(v, k, bj);
      }
      bool clean = true;
      for (int i = k + 1; i < s.rows(); ++i) {
        if (s.at(i, k) == 0) continue;
        const BigInt q = s.at(i, k) / s.at(k, k);
        add_row_multiple(s, i, k, -q);
        add_row_multiple(u, i, k, -q);
        if (s.at(i, k) != 0) clean = false;
      }
      for (int j = k + 1; j < s.cols(); ++j) {
        if (s.at(k, j) == 0) continue;
        const BigInt q = s.at(k, j) / s.at(k, k);
        add_col_multiple(s, j, k, -q);
        add_col_multiple(v, j, k, -q);
        if (s.at(k, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the remaining block by the pivot.
      bool divides_all = true;
      for (int i = k + 1; i < s.rows() && divides_all; ++i)
        for (int j = k + 1; j < s.cols(); ++j)
          if (s.at(i, j) % s.at(k, k) != 0) {
            add_row_multiple(s, k, i, 1);
            add_row_multiple(u, k, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (s.at(k, k) < 0) {
      negate_row(s, k);
      negate_row(u, k);
    }
  }
  for (int k = 0; k < n; ++k)
    if (s.at(k, k) < 0) {
      negate_col(s, k);
      negate_col(v, k);
    }
  return {s, u, v};
}

std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw InternalError("solve_integer shape");
  const SnfResult f = snf(a);
  // s = u a v, so a x = b  <=>  s y = u b with x = v y.
  IntVec c(a.rows(), 0);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.rows(); ++j) c[i] += f.u.at(i, j) * b[j];
  }
  IntVec y(a.cols(), 0);
  const int n = std::min(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    const BigInt d = i < n ? f.s.at(i, i) : BigInt(0);
    if (d == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % d != 0) return std::nullopt;
      y[i] = c[i] / d;
    }
  }
  IntVec x(a.cols(), 0);
  for (int i = 0; i < a.cols(); ++i)
    for (int j = 0; j < a.cols(); ++j) x[i] += f.v.at(i, j) * y[j];
  return x;
}

std::vector<IntVec> integer_kernel(const IntMatrix& a) {
  const SnfResult f = snf(a);
  std::vector<IntVec> basis;
  const int n = std::min(a.rows(), a.cols());
  for (int j = 0; j < a.cols(); ++j) {
    const bool zero_diag = j >= n || f.s.at(j, j) == 0;
    if (!zero_diag) continue;
    basis.push_back(f.v.col(j));
  }
  return basis;
}

}  // namespace torva
