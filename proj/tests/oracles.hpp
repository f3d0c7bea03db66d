#pragma once

// Independent test oracles: deliberately simple algorithms that do not
// share code paths with the library implementations they check.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "torva/fan.hpp"
#include "torva/scalar.hpp"

namespace torva::oracle {

// Extreme rays of a pointed cone in the plane by boundary-direction
// enumeration: each facet line contributes its two directions; those inside
// the cone are exactly the extreme rays.
inline std::vector<ScalarVec> rays_2d(const std::vector<ScalarVec>& ineqs) {
  std::vector<ScalarVec> out;
  auto member = [&ineqs](const ScalarVec& d) {
    for (const auto& a : ineqs)
      if ((a[0] * d[0] + a[1] * d[1]).sign() < 0) return false;
    return true;
  };
  for (const auto& a : ineqs) {
    for (int s = -1; s <= 1; s += 2) {
      ScalarVec d{-a[1] * Scalar(s), a[0] * Scalar(s)};
      if (d[0].is_zero() && d[1].is_zero()) continue;
      if (!member(d)) continue;
      canonicalize_ray(d);
      if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
    }
  }
  std::sort(out.begin(), out.end(), [](const ScalarVec& x, const ScalarVec& y) {
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i] < y[i]) return true;
      if (y[i] < x[i]) return false;
    }
    return false;
  });
  return out;
}

// Vertices of a plane polyhedron by pairwise tight-constraint solving.
inline std::vector<ScalarVec> vertices_2d(const std::vector<HPolyhedron::Ineq>& ineqs) {
  std::vector<ScalarVec> out;
  auto feasible = [&ineqs](const ScalarVec& x) {
    for (const auto& q : ineqs)
      if ((q.normal[0] * x[0] + q.normal[1] * x[1] + q.offset).sign() < 0) return false;
    return true;
  };
  for (size_t i = 0; i < ineqs.size(); ++i)
    for (size_t j = i + 1; j < ineqs.size(); ++j) {
      const Scalar det =
          ineqs[i].normal[0] * ineqs[j].normal[1] - ineqs[i].normal[1] * ineqs[j].normal[0];
      if (det.is_zero()) continue;
      const Scalar bx = -ineqs[i].offset, by = -ineqs[j].offset;
      ScalarVec x{(bx * ineqs[j].normal[1] - ineqs[i].normal[1] * by) / det,
                  (ineqs[i].normal[0] * by - bx * ineqs[j].normal[0]) / det};
      if (!feasible(x)) continue;
      if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
  std::sort(out.begin(), out.end(), [](const ScalarVec& a, const ScalarVec& b) {
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] < b[i]) return true;
      if (b[i] < a[i]) return false;
    }
    return false;
  });
  return out;
}

// Deterministic rational sample points in {t >= 0}: a mix of pseudo-random
// box points and ray-derived midpoints of the fan under test.
inline std::vector<ScalarVec> coverage_samples(const GammaFan& fan, size_t count,
                                               unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-60, 60);
  std::uniform_int_distribution<long> den(1, 7);
  std::uniform_int_distribution<long> tnum(0, 60);
  const int n = fan.rank();
  std::vector<ScalarVec> samples;
  std::vector<ScalarVec> rays;
  for (const auto& c : fan.maximal_cones()) {
    const auto& g = c.as_cone().generators();
    rays.insert(rays.end(), g.rays.begin(), g.rays.end());
  }
  // Structured points: sums and differences of pairs of fan rays, nudged.
  for (size_t i = 0; i < rays.size() && samples.size() < count / 2; ++i)
    for (size_t j = 0; j < rays.size() && samples.size() < count / 2; ++j) {
      ScalarVec p(size_t(n) + 1, Scalar(0));
      for (int k = 0; k <= n; ++k)
        p[size_t(k)] = rays[i][size_t(k)] + rays[j][size_t(k)] * Scalar{Rational(1, 3)};
      if (p[size_t(n)].sign() < 0) p[size_t(n)] = -p[size_t(n)];
      samples.push_back(std::move(p));
    }
  while (samples.size() < count) {
    ScalarVec p(size_t(n) + 1);
    for (int k = 0; k < n; ++k) p[size_t(k)] = Scalar{Rational(num(rng), den(rng))};
    p[size_t(n)] = Scalar{Rational(tnum(rng), den(rng))};
    samples.push_back(std::move(p));
  }
  return samples;
}

inline bool covers_all(const GammaFan& fan, const std::vector<ScalarVec>& samples) {
  for (const auto& p : samples)
    if (!fan.contains_point(p)) return false;
  return true;
}

// Bounded brute-force irreducible elements of C cap Z^d with |coords| <= bound.
// The decomposition search is exact: pieces are enumerated in the polytope
// (x - C) cap C via its own coordinate box.
inline std::vector<IntVec> irreducible_elements(const HCone& cone, long bound) {
  const int d = cone.ambient_dim();
  auto member = [&cone](const IntVec& x) {
    for (const auto& a : cone.inequalities()) {
      Scalar acc;
      for (int i = 0; i < static_cast<int>(x.size()); ++i) acc += a[size_t(i)] * Scalar(x[size_t(i)]);
      if (acc.sign() < 0) return false;
    }
    return true;
  };
  std::vector<IntVec> members;
  IntVec x(size_t(d), -bound);
  for (;;) {
    bool zero = true;
    for (const auto& c : x)
      if (c != 0) zero = false;
    if (!zero && member(x)) members.push_back(x);
    int i = 0;
    while (i < d) {
      ++x[size_t(i)];
      if (x[size_t(i)] <= bound) break;
      x[size_t(i)] = -bound;
      ++i;
    }
    if (i == d) break;
  }
  std::vector<IntVec> irreducible;
  for (const auto& m : members) {
    bool reducible = false;
    // Fast pass: decompositions with both pieces inside the enumeration box.
    for (const auto& y : members) {
      if (y == m) continue;
      IntVec rest(size_t(d), BigInt(0));
      for (int i = 0; i < d; ++i) rest[size_t(i)] = m[size_t(i)] - y[size_t(i)];
      bool zero = true;
      for (const auto& v : rest)
        if (v != 0) zero = false;
      if (!zero && member(rest)) {
        reducible = true;
        break;
      }
    }
    if (reducible) {
      continue;
    }
    // Pieces live in (m - C) cap C; bound their coordinates through the
    // vertices of that polytope.
    std::vector<HPolyhedron::Ineq> ineqs;
    for (const auto& a : cone.inequalities()) {
      ineqs.push_back({a, Scalar(0)});
      ScalarVec neg(a.size());
      Scalar off;
      for (int i = 0; i < d; ++i) {
        neg[size_t(i)] = -a[size_t(i)];
        off += a[size_t(i)] * Scalar(m[size_t(i)]);
      }
      ineqs.push_back({std::move(neg), off});
    }
    const HPolyhedron pieces(d, std::move(ineqs));
    IntVec lo(size_t(d), 0), hi(size_t(d), 0);
    for (const auto& v : pieces.vertices())
      for (int i = 0; i < d; ++i) {
        const Rational r = v[size_t(i)].rational_part();
        const BigInt fl = boost::multiprecision::numerator(r) /
                          boost::multiprecision::denominator(r);
        if (fl - 1 < lo[size_t(i)]) lo[size_t(i)] = fl - 1;
        if (fl + 1 > hi[size_t(i)]) hi[size_t(i)] = fl + 1;
      }
    IntVec y = lo;
    for (;;) {
      bool zero = true, same = true;
      for (int i = 0; i < d; ++i) {
        if (y[size_t(i)] != 0) zero = false;
        if (y[size_t(i)] != m[size_t(i)]) same = false;
      }
      if (!zero && !same && member(y)) {
        IntVec rest(size_t(d), BigInt(0));
        for (int i = 0; i < d; ++i) rest[size_t(i)] = m[size_t(i)] - y[size_t(i)];
        if (member(rest)) {
          reducible = true;
          break;
        }
      }
      int i = 0;
      while (i < d) {
        ++y[size_t(i)];
        if (y[size_t(i)] <= hi[size_t(i)]) break;
        y[size_t(i)] = lo[size_t(i)];
        ++i;
      }
      if (i == d) break;
    }
    if (!reducible) irreducible.push_back(m);
  }
  std::sort(irreducible.begin(), irreducible.end());
  return irreducible;
}

}  // namespace torva::oracle
