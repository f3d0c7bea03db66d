#include "torva/gamma.hpp"

#include <algorithm>
#include <map>

#include "torva/errors.hpp"
#include "torva/intlin.hpp"

namespace torva {

struct GammaCone::Cache {
  std::optional<HCone> repr;
};

GammaCone::GammaCone(int n, std::vector<GammaIneq> ineqs, bool t_zero)
    : n_(n), ineqs_(std::move(ineqs)), t_zero_(t_zero), cache_(std::make_shared<Cache>()) {
  for (const auto& q : ineqs_)
    if (static_cast<int>(q.m.size()) != n_) throw InternalError("GammaIneq dimension mismatch");
}

GammaCone GammaCone::checked(int n, std::vector<GammaIneq> ineqs, const ValueGroup& gamma) {
  for (const auto& q : ineqs)
    if (!gamma.contains(q.c))
      throw GammaViolation("offset " + q.c.to_string() + " is not in the value group");
  return GammaCone(n, std::move(ineqs), false);
}

GammaCone GammaCone::inherited(int n, std::vector<GammaIneq> ineqs, bool t_zero) {
  return GammaCone(n, std::move(ineqs), t_zero);
}

const HCone& GammaCone::as_cone() const {
  if (!cache_->repr) {
    std::vector<ScalarVec> rows;
    for (const auto& q : ineqs_) {
      ScalarVec row = to_scalars(q.m);
      row.push_back(q.c);
      rows.push_back(std::move(row));
    }
    ScalarVec t(n_ + 1, Scalar(0));
    t[n_] = Scalar(1);
    rows.push_back(t);
    if (t_zero_) {
      ScalarVec neg(n_ + 1, Scalar(0));
      neg[n_] = Scalar(-1);
      rows.push_back(std::move(neg));
    }
    cache_->repr = HCone(n_ + 1, std::move(rows));
  }
  return *cache_->repr;
}

HPolyhedron GammaCone::slice(const Scalar& r) const {
  if (r.sign() < 0) throw DomainError("slice level must be nonnegative");
  std::vector<HPolyhedron::Ineq> ineqs;
  for (const auto& q : ineqs_) ineqs.push_back({to_scalars(q.m), q.c * r});
  if (t_zero_ && r.sign() > 0) {
    // The cone lies in {t = 0}; positive levels are empty.
    ineqs.push_back({ScalarVec(n_, Scalar(0)), Scalar(-1)});
  }
  return HPolyhedron(n_, std::move(ineqs));
}

std::pair<bool, std::optional<ScalarVec>> GammaCone::admissible() const {
  const VRep& g = as_cone().generators();
  if (g.lineality.empty()) return {true, std::nullopt};
  return {false, g.lineality.front()};
}

std::vector<GammaCone> GammaCone::faces() const {
  std::map<std::string, GammaCone> seen;
  std::vector<GammaCone> queue{*this};
  seen.emplace(canonical_key(), *this);
  while (!queue.empty()) {
    GammaCone f = queue.back();
    queue.pop_back();
    // Children: flip one root inequality to an equality, or cut by t = 0.
    for (size_t i = 0; i <= ineqs_.size(); ++i) {
      auto child_ineqs = f.inequalities();
      bool child_t_zero = f.forced_t_zero();
      if (i < ineqs_.size()) {
        IntVec m(ineqs_[i].m.size());
        for (size_t j = 0; j < m.size(); ++j) m[j] = -ineqs_[i].m[j];
        child_ineqs.push_back({std::move(m), -ineqs_[i].c});
      } else {
        child_t_zero = true;
      }
      GammaCone child = inherited(n_, std::move(child_ineqs), child_t_zero);
      const std::string key = child.canonical_key();
      if (seen.count(key)) continue;
      seen.emplace(key, child);
      queue.push_back(child);
    }
  }
  std::vector<GammaCone> out;
  for (auto& [k, c] : seen) out.push_back(c);
  std::sort(out.begin(), out.end(), [](const GammaCone& a, const GammaCone& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.canonical_key() < b.canonical_key();
  });
  return out;
}

GammaCone GammaCone::intersect(const GammaCone& other) const {
  if (n_ != other.n_) throw DomainError("intersect: lattice rank mismatch");
  auto ineqs = ineqs_;
  ineqs.insert(ineqs.end(), other.ineqs_.begin(), other.ineqs_.end());
  return inherited(n_, std::move(ineqs), t_zero_ || other.t_zero_);
}

bool GammaCone::in_t_boundary() const {
  const VRep& g = as_cone().generators();
  for (const auto& r : g.rays)
    if (!r[n_].is_zero()) return false;
  for (const auto& l : g.lineality)
    if (!l[n_].is_zero()) return false;
  return true;
}

bool is_face_of(const GammaCone& face, const GammaCone& cone) {
  return is_face_of(face.as_cone(), cone.as_cone());
}

std::pair<bool, std::vector<ScalarVec>> vertices_in_gamma(const GammaCone& cone,
                                                          const ValueGroup& gamma) {
  std::vector<ScalarVec> offenders;
  const HPolyhedron level1 = cone.slice(Scalar(1));
  if (level1.is_empty()) return {true, {}};
  for (const auto& v : level1.vertices()) {
    bool ok = true;
    for (const auto& coord : v)
      if (!gamma.contains(coord)) {
        ok = false;
        break;
      }
    if (!ok) offenders.push_back(v);
  }
  return {offenders.empty(), offenders};
}

std::pair<bool, std::vector<ScalarVec>> finite_type_check(const GammaCone& cone,
                                                          const ToricContext& ctx) {
  if (ctx.discrete) return {true, {}};
  return vertices_in_gamma(cone, ctx.gamma);
}

HCone local_cone(const HPolyhedron& p, const ScalarVec& w) {
  const auto vs = p.vertices();
  if (std::find(vs.begin(), vs.end(), w) == vs.end())
    throw DomainError("local cone requested at a non-vertex point");
  std::vector<ScalarVec> rows;
  for (const auto& q : p.inequalities())
    if ((dot(q.normal, w) + q.offset).is_zero()) rows.push_back(q.normal);
  return HCone(p.ambient_dim(), std::move(rows));
}

namespace {

// Lattice {m : <m, w> in Gamma} as a basis, via the integer kernel of the
// combined condition <m, w> - sum n_j g_j = 0 written over {1, sqrt(D)}.
std::vector<IntVec> component_lattice(const ScalarVec& w, const ValueGroup& gamma) {
  const int n = static_cast<int>(w.size());
  if (gamma.is_whole_field()) {
    std::vector<IntVec> basis;
    for (int i = 0; i < n; ++i) {
      IntVec e(n, 0);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  const auto& gens = gamma.generators();
  BigInt den(1);
  auto absorb = [&den](const Scalar& s) {
    den = lcm(den, boost::multiprecision::denominator(s.rational_part()));
    den = lcm(den, boost::multiprecision::denominator(s.radical_part()));
  };
  for (const auto& x : w) absorb(x);
  for (const auto& g : gens) absorb(g);
  auto scaled = [&den](const Rational& r) {
    return boost::multiprecision::numerator(r * Rational(den));
  };
  bool radical = gamma.disc() != 0;
  for (const auto& x : w)
    if (x.disc() != 0) radical = true;
  const int rows = radical ? 2 : 1;
  const int cols = n + static_cast<int>(gens.size());
  IntMatrix a(rows, cols);
  for (int j = 0; j < n; ++j) {
    a.at(0, j) = scaled(w[j].rational_part());
    if (radical) a.at(1, j) = scaled(w[j].radical_part());
  }
  for (size_t j = 0; j < gens.size(); ++j) {
    a.at(0, n + static_cast<int>(j)) = -scaled(gens[j].rational_part());
    if (radical) a.at(1, n + static_cast<int>(j)) = -scaled(gens[j].radical_part());
  }
  std::vector<IntVec> projected;
  for (const auto& k : integer_kernel(a)) projected.emplace_back(k.begin(), k.begin() + n);
  if (projected.empty()) return {};
  const HnfResult h = hnf(IntMatrix::from_rows(projected));
  std::vector<IntVec> basis;
  for (int i = 0; i < h.h.rows(); ++i) {
    IntVec row = h.h.row(i);
    bool zero = true;
    for (const auto& x : row)
      if (x != 0) {
        zero = false;
        break;
      }
    if (!zero) basis.push_back(std::move(row));
  }
  return basis;
}

}  // namespace

std::vector<CensusEntry> special_fiber_census(const GammaCone& cone, const ToricContext& ctx) {
  const auto adm = cone.admissible();
  if (!adm.first) throw AdmissibilityError("census requires a pointed cone");
  const auto ft = finite_type_check(cone, ctx);
  if (!ft.first)
    throw DomainError("census requires finite type; offending vertex " +
                      vec_to_string(ft.second.front()));
  const HPolyhedron level1 = cone.slice(Scalar(1));
  std::vector<CensusEntry> out;
  if (level1.is_empty()) return out;
  for (const auto& v : level1.vertices()) {
    CensusEntry e;
    e.vertex = v;
    e.lattice_basis = component_lattice(v, ctx.gamma);
    e.full_rank = static_cast<int>(e.lattice_basis.size()) == cone.rank();
    out.push_back(std::move(e));
  }
  return out;
}

bool reducedness_flag(const GammaCone& cone, const ToricContext& ctx) {
  if (!ctx.discrete) return true;
  return vertices_in_gamma(cone, ctx.gamma).first;
}

}  // namespace torva
