#include "torva/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "torva/errors.hpp"
#include "torva/intlin.hpp"

namespace torva {

bool MonomialDatum::operator<(const MonomialDatum& o) const {
  if (u != o.u) return std::lexicographical_compare(u.begin(), u.end(), o.u.begin(), o.u.end());
  return gamma < o.gamma;
}

std::string MonomialDatum::to_string() const {
  return vec_to_string(u) + " | " + gamma.to_string();
}

SemigroupGens make_semigroup_gens(int n, std::vector<MonomialDatum> elems,
                                  const ValueGroup& gamma) {
  for (const auto& d : elems) {
    if (static_cast<int>(d.u.size()) != n) throw DomainError("generator exponent rank mismatch");
    if (!gamma.contains(d.gamma))
      throw GammaViolation("valuation " + d.gamma.to_string() + " is not in the value group");
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return SemigroupGens{n, std::move(elems)};
}

namespace {

std::vector<IntVec> integer_rays(const HCone& cone) {
  std::vector<IntVec> out;
  for (const auto& r : cone.generators().rays) {
    IntVec v(r.size());
    for (size_t i = 0; i < r.size(); ++i) {
      if (!r[i].is_rational() ||
          boost::multiprecision::denominator(r[i].rational_part()) != 1)
        throw DomainError("cone is not rational");
      v[i] = boost::multiprecision::numerator(r[i].rational_part());
    }
    out.push_back(std::move(v));
  }
  return out;
}

IntVec positive_functional(const HCone& cone) {
  // A relative-interior point of the dual cone is strictly positive on the
  // cone minus the origin when the cone is pointed.
  const ScalarVec p = cone.dual().relint_point();
  BigInt den(1);
  for (const auto& x : p) {
    if (!x.is_rational()) throw DomainError("cone is not rational");
    den = lcm(den, boost::multiprecision::denominator(x.rational_part()));
  }
  IntVec phi(p.size());
  for (size_t i = 0; i < p.size(); ++i)
    phi[i] = boost::multiprecision::numerator(p[i].rational_part() * Rational(den));
  return phi;
}

bool in_cone(const HCone& cone, const IntVec& x) {
  for (const auto& a : cone.inequalities()) {
    Scalar v;
    for (size_t i = 0; i < x.size(); ++i) v += a[i] * Scalar(x[i]);
    if (v.sign() < 0) return false;
  }
  return true;
}

struct RepSearch {
  const HCone& cone;
  const std::vector<IntVec>& basis;
  const IntVec& phi;
  std::map<IntVec, bool> memo;

  bool representable(const IntVec& x) {
    bool zero = true;
    for (const auto& c : x)
      if (c != 0) {
        zero = false;
        break;
      }
    if (zero) return true;
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& h : basis) {
      if (dot(phi, h) > dot(phi, x)) continue;
      IntVec y(x.size());
      for (size_t i = 0; i < x.size(); ++i) y[i] = x[i] - h[i];
      if (!in_cone(cone, y)) continue;
      if (representable(y)) {
        ok = true;
        break;
      }
    }
    memo[x] = ok;
    return ok;
  }
};

}  // namespace

std::vector<IntVec> hilbert_basis(const HCone& cone) {
  if (cone.lineality_dim() != 0)
    throw DomainError("Hilbert basis requires a pointed cone (minimal generators not unique)");
  const int d = cone.ambient_dim();
  const std::vector<IntVec> rays = integer_rays(cone);
  if (rays.empty()) return {};

  // Every irreducible element lies in the zonotope of the primitive ray
  // generators; enumerate its integer bounding box.
  IntVec lo(d, 0), hi(d, 0);
  for (const auto& r : rays)
    for (int i = 0; i < d; ++i) {
      if (r[size_t(i)] < 0) lo[size_t(i)] += r[size_t(i)];
      if (r[size_t(i)] > 0) hi[size_t(i)] += r[size_t(i)];
    }
  BigInt volume = 1;
  for (int i = 0; i < d; ++i) volume *= hi[size_t(i)] - lo[size_t(i)] + 1;
  if (volume > 4000000) throw DomainError("cone too large for Hilbert basis enumeration");

  const IntVec phi = positive_functional(cone);
  std::vector<IntVec> candidates;
  IntVec x = lo;
  for (;;) {
    bool zero = true;
    for (const auto& c : x)
      if (c != 0) {
        zero = false;
        break;
      }
    if (!zero && in_cone(cone, x)) candidates.push_back(x);
    int i = 0;
    while (i < d) {
      ++x[size_t(i)];
      if (x[size_t(i)] <= hi[size_t(i)]) break;
      x[size_t(i)] = lo[size_t(i)];
      ++i;
    }
    if (i == d) break;
  }
  std::sort(candidates.begin(), candidates.end(), [&phi](const IntVec& a, const IntVec& b) {
    const BigInt fa = dot(phi, a), fb = dot(phi, b);
    if (fa != fb) return fa < fb;
    return a < b;
  });

  std::vector<IntVec> basis;
  RepSearch search{cone, basis, phi, {}};
  for (const auto& c : candidates) {
    if (search.representable(c)) continue;
    basis.push_back(c);
    search.memo.clear();
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::vector<IntVec> cone_semigroup_generators(const HCone& cone) {
  if (cone.lineality_dim() == 0) return hilbert_basis(cone);
  const int d = cone.ambient_dim();

  // Saturated lattice basis of lineality cap Z^d from the integer kernel of
  // the inequality normals.
  IntMatrix normals(static_cast<int>(cone.inequalities().size()), d);
  for (size_t r = 0; r < cone.inequalities().size(); ++r) {
    const auto& a = cone.inequalities()[r];
    BigInt den(1);
    for (const auto& x : a) {
      if (!x.is_rational()) throw DomainError("cone is not rational");
      den = lcm(den, boost::multiprecision::denominator(x.rational_part()));
    }
    for (int i = 0; i < d; ++i)
      normals.at(static_cast<int>(r), i) =
          boost::multiprecision::numerator(a[size_t(i)].rational_part() * Rational(den));
  }
  std::vector<IntVec> kernel = integer_kernel(normals);
  const int l = static_cast<int>(kernel.size());
  if (l != cone.lineality_dim()) throw InternalError("lineality lattice rank mismatch");

  // Unimodular change of coordinates sending the lineality lattice onto the
  // first l coordinates; the quotient lives in the last d-l.
  IntMatrix kmat(d, l);
  for (int j = 0; j < l; ++j)
    for (int i = 0; i < d; ++i) kmat.at(i, j) = kernel[size_t(j)][size_t(i)];
  const SnfResult f = snf(kmat);
  for (int j = 0; j < l; ++j)
    if (f.s.at(j, j) != 1) throw InternalError("lineality lattice is not saturated");

  const auto project = [&](const IntVec& x) {
    IntVec y(size_t(d - l));
    for (int i = l; i < d; ++i) {
      BigInt acc = 0;
      for (int j = 0; j < d; ++j) acc += f.u.at(i, j) * x[size_t(j)];
      y[size_t(i - l)] = acc;
    }
    return y;
  };

  std::vector<IntVec> out;
  const HnfResult kh = hnf(IntMatrix::from_rows(kernel));
  std::vector<IntVec> lattice_rows;
  for (int i = 0; i < kh.h.rows(); ++i) {
    IntVec row = kh.h.row(i);
    bool zero = true;
    for (const auto& v : row)
      if (v != 0) zero = false;
    if (zero) continue;
    lattice_rows.push_back(row);
    IntVec neg(row.size());
    for (size_t k = 0; k < row.size(); ++k) neg[k] = -row[k];
    out.push_back(row);
    out.push_back(std::move(neg));
  }

  if (d - l > 0) {
    std::vector<ScalarVec> image_rays;
    for (const auto& r : integer_rays(cone)) image_rays.push_back(to_scalars(project(r)));
    const HCone image = HCone::from_generators(d - l, image_rays);
    for (const auto& hbar : hilbert_basis(image)) {
      // Lift (0,...,0,hbar) back through the unimodular map.
      IntVec y(size_t(d), 0);
      for (int i = l; i < d; ++i) y[size_t(i)] = hbar[size_t(i - l)];
      auto x = solve_integer(f.u, y);
      if (!x) throw InternalError("unimodular lift failed");
      // Canonical residue modulo the lineality lattice.
      for (const auto& row : lattice_rows) {
        int pivot = 0;
        while (pivot < d && row[size_t(pivot)] == 0) ++pivot;
        if (pivot == d) continue;
        BigInt q = (*x)[size_t(pivot)] / row[size_t(pivot)];
        if ((*x)[size_t(pivot)] - q * row[size_t(pivot)] < 0) q -= 1;
        for (int i = 0; i < d; ++i) (*x)[size_t(i)] -= q * row[size_t(i)];
      }
      out.push_back(*x);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SemigroupGens algebra_generators(const GammaCone& cone, const ToricContext& ctx) {
  const auto adm = cone.admissible();
  if (!adm.first) throw AdmissibilityError("algebra generators require a pointed cone");
  const auto ft = finite_type_check(cone, ctx);
  if (!ft.first)
    throw DomainError("not of finite type: vertex " + vec_to_string(ft.second.front()) +
                      " has a coordinate outside the value group");
  const HPolyhedron level1 = cone.slice(Scalar(1));
  if (level1.is_empty()) throw DomainError("level-1 slice is empty");

  std::vector<MonomialDatum> elems;
  for (const auto& w : level1.vertices()) {
    const HCone lc = local_cone(level1, w);
    for (const auto& u : cone_semigroup_generators(lc.dual())) {
      const Scalar g = -dot(u, w);
      if (!ctx.gamma.contains(g))
        throw DomainError("valuation " + g.to_string() + " at vertex " + vec_to_string(w) +
                          " escapes the value group");
      elems.push_back({u, g});
    }
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return SemigroupGens{cone.rank(), std::move(elems)};
}

bool in_weight_algebra(const GammaCone& cone, const MonomialDatum& d) {
  ScalarVec row = to_scalars(d.u);
  row.push_back(d.gamma);
  const VRep& g = cone.as_cone().generators();
  for (const auto& r : g.rays)
    if (dot(row, r).sign() < 0) return false;
  for (const auto& l : g.lineality)
    if (!dot(row, l).is_zero()) return false;
  return true;
}

namespace {

HCone cone_of_gens(const SemigroupGens& s) {
  std::vector<ScalarVec> rays;
  for (const auto& d : s.elems) {
    ScalarVec row = to_scalars(d.u);
    row.push_back(d.gamma);
    rays.push_back(std::move(row));
  }
  return HCone::from_generators(s.n + 1, rays);
}

}  // namespace

bool saturation_membership(const SemigroupGens& s, const MonomialDatum& d,
                           const ValueGroup& gamma) {
  if (!gamma.contains(d.gamma)) return false;
  ScalarVec x = to_scalars(d.u);
  x.push_back(d.gamma);
  return cone_of_gens(s).contains(x);
}

namespace {

struct MemberSearch {
  const SemigroupGens& s;
  const HCone& cone;
  bool use_memo;
  std::map<std::string, bool> memo;

  bool run(const ScalarVec& x, long depth) {
    // The generators describe monomials of an algebra over the valuation
    // ring, so a residue (0, gamma) with gamma >= 0 is always a member:
    // it is the valuation of a unit-exponent coefficient.
    bool member = x.back().sign() >= 0;
    for (size_t i = 0; i + 1 < x.size() && member; ++i)
      if (!x[i].is_zero()) member = false;
    if (member) return true;
    if (depth == 0) return false;
    std::string key;
    if (use_memo) {
      key = vec_to_string(x);
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
    }
    bool ok = false;
    for (const auto& g : s.elems) {
      ScalarVec y = x;
      for (size_t i = 0; i + 1 < y.size(); ++i) y[i] = y[i] - Scalar(g.u[i]);
      y.back() = y.back() - g.gamma;
      if (!cone.contains(y)) continue;
      if (run(y, depth - 1)) {
        ok = true;
        break;
      }
    }
    if (use_memo) memo[key] = ok;
    return ok;
  }
};

}  // namespace

bool semigroup_member(const SemigroupGens& s, const MonomialDatum& d, long depth_cap) {
  bool trivial = d.gamma.sign() >= 0;
  for (const auto& c : d.u)
    if (c != 0) trivial = false;
  if (trivial) return true;
  if (s.elems.empty()) return false;
  const HCone cone = cone_of_gens(s);
  const bool pointed = cone.lineality_dim() == 0;
  if (depth_cap < 0 && !pointed)
    throw DomainError("membership search needs a depth cap when cone(S) has lineality");
  ScalarVec x = to_scalars(d.u);
  x.push_back(d.gamma);
  if (!cone.contains(x)) return false;
  // With a pointed cone the in-cone prune makes the search finite and the
  // memo sound; under a depth cap results at different depths differ, so
  // the memo is disabled.
  MemberSearch search{s, cone, depth_cap < 0, {}};
  return search.run(x, depth_cap);
}

std::pair<bool, std::optional<MonomialDatum>> is_saturated_bounded(const SemigroupGens& s,
                                                                   int bound,
                                                                   const ValueGroup& gamma) {
  if (bound <= 0) throw DomainError("saturation bound must be positive");
  if (s.elems.empty()) return {true, std::nullopt};
  const size_t k = s.elems.size();
  const HCone cone = cone_of_gens(s);
  const long cap = cone.lineality_dim() == 0 ? -1 : 4L * bound * static_cast<long>(k);

  std::map<std::string, bool> seen;
  std::vector<long> p(k, 0);
  std::optional<MonomialDatum> witness;

  auto evaluate = [&](int q) -> bool {
    long total = 0;
    for (long v : p) total += v;
    if (total == 0) return true;
    ScalarVec acc(size_t(s.n) + 1, Scalar(0));
    for (size_t i = 0; i < k; ++i) {
      if (p[i] == 0) continue;
      const Scalar f{Rational(p[i], q)};
      for (int j = 0; j < s.n; ++j) acc[size_t(j)] += Scalar(s.elems[i].u[size_t(j)]) * f;
      acc[size_t(s.n)] += s.elems[i].gamma * f;
    }
    IntVec u(size_t(s.n));
    for (int j = 0; j < s.n; ++j) {
      if (!acc[size_t(j)].is_rational()) return true;
      const Rational r = acc[size_t(j)].rational_part();
      if (boost::multiprecision::denominator(r) != 1) return true;  // not a lattice point
      u[size_t(j)] = boost::multiprecision::numerator(r);
    }
    if (!gamma.contains(acc[size_t(s.n)])) return true;
    MonomialDatum cand{std::move(u), acc[size_t(s.n)]};
    const std::string key = cand.to_string();
    if (!seen.emplace(key, true).second) return true;
    if (semigroup_member(s, cand, cap)) return true;
    witness = std::move(cand);
    return false;
  };

  std::function<bool(size_t, long, int)> enumerate = [&](size_t i, long budget, int q) -> bool {
    if (i == k) return evaluate(q);
    for (long v = 0; v <= budget; ++v) {
      p[i] = v;
      if (!enumerate(i + 1, budget - v, q)) return false;
    }
    p[i] = 0;
    return true;
  };

  for (int q = 1; q <= bound; ++q)
    if (!enumerate(0, static_cast<long>(bound) * q, q)) return {false, witness};
  return {true, std::nullopt};
}

}  // namespace torva
