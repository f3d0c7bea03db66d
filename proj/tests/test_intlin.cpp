#include <doctest.h>

#include <random>

#include "torva/intlin.hpp"

using namespace torva;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int r, int c, int mag) {
  std::uniform_int_distribution<long> d(-mag, mag);
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = d(rng);
  return m;
}

BigInt determinant(const IntMatrix& m) {
  const int n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  BigInt det = 0;
  for (int j = 0; j < n; ++j) {
    IntMatrix sub(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        sub.at(r - 1, cc++) = m.at(r, c);
      }
    }
    const BigInt term = m.at(0, j) * determinant(sub);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

bool is_unimodular(const IntMatrix& u) {
  const BigInt d = determinant(u);
  return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("hnf of the identity is the identity") {
  const IntMatrix id = IntMatrix::identity(2);
  const HnfResult r = hnf(id);
  CHECK(r.h == id);
  CHECK(r.u == id);
}

TEST_CASE("snf of diag(2,3) is diag(1,6)") {
  IntMatrix a(2, 2);
  a.at(0, 0) = 2;
  a.at(1, 1) = 3;
  const SnfResult f = snf(a);
  CHECK(f.s.at(0, 0) == 1);
  CHECK(f.s.at(1, 1) == 6);
  CHECK(f.u * a * f.v == f.s);
}

TEST_CASE("solve_integer detects parity obstructions") {
  IntMatrix a(1, 1);
  a.at(0, 0) = 2;
  CHECK_FALSE(solve_integer(a, {BigInt(3)}).has_value());
  const auto x = solve_integer(a, {BigInt(6)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 3);
}

TEST_CASE("random factorizations verify exactly") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int r = 1 + int(rng() % 3), c = 1 + int(rng() % 3);
    const IntMatrix a = random_matrix(rng, r, c, 6);
    const HnfResult h = hnf(a);
    CHECK(h.u * a == h.h);
    CHECK(is_unimodular(h.u));
    const SnfResult s = snf(a);
    CHECK(s.u * a * s.v == s.s);
    CHECK(is_unimodular(s.u));
    CHECK(is_unimodular(s.v));
    for (int k = 0; k + 1 < std::min(r, c); ++k) {
      if (s.s.at(k + 1, k + 1) == 0) continue;
      CHECK(s.s.at(k + 1, k + 1) % s.s.at(k, k) == 0);
    }
  }
}

TEST_CASE("kernel vectors really annihilate") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const int r = 1 + int(rng() % 2), c = 2 + int(rng() % 3);
    const IntMatrix a = random_matrix(rng, r, c, 5);
    for (const auto& k : integer_kernel(a)) {
      for (int i = 0; i < r; ++i) {
        BigInt acc = 0;
        for (int j = 0; j < c; ++j) acc += a.at(i, j) * k[size_t(j)];
        CHECK(acc == 0);
      }
    }
  }
}

TEST_CASE("random systems solve or are certified unsolvable by scaling") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    const int r = 1 + int(rng() % 2), c = 1 + int(rng() % 3);
    const IntMatrix a = random_matrix(rng, r, c, 4);
    IntVec want(size_t(c), BigInt(0));
    for (auto& v : want) v = d(rng);
    IntVec b(size_t(r), 0);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) b[size_t(i)] += a.at(i, j) * want[size_t(j)];
    const auto x = solve_integer(a, b);
    REQUIRE(x.has_value());
    for (int i = 0; i < r; ++i) {
      BigInt acc = 0;
      for (int j = 0; j < c; ++j) acc += a.at(i, j) * (*x)[size_t(j)];
      CHECK(acc == b[size_t(i)]);
    }
  }
}
