#include "torva/cone.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "torva/errors.hpp"
#include "torva/intlin.hpp"

namespace torva {

namespace {

bool all_zero(const ScalarVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

bool scalar_vec_less(const ScalarVec& a, const ScalarVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

ScalarVec scaled(const ScalarVec& v, const Scalar& f) {
  ScalarVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * f;
  return out;
}

ScalarVec axpy(const ScalarVec& x, const Scalar& f, const ScalarVec& y) {
  // x + f*y
  ScalarVec out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] + f * y[i];
  return out;
}

ScalarVec negated(const ScalarVec& v) {
  ScalarVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

}  // namespace

void canonicalize_ray(ScalarVec& v) {
  bool rational = true;
  for (const auto& x : v)
    if (!x.is_rational()) {
      rational = false;
      break;
    }
  if (rational) {
    BigInt den(1), num(0);
    for (const auto& x : v) den = lcm(den, boost::multiprecision::denominator(x.rational_part()));
    for (auto& x : v) x = x * Scalar(Rational(den));
    for (const auto& x : v) num = gcd(num, boost::multiprecision::numerator(x.rational_part()));
    if (num > 1) {
      const Scalar g{Rational(num)};
      for (auto& x : v) x = x / g;
    }
  } else {
    for (const auto& x : v) {
      if (x.is_zero()) continue;
      const Scalar s = x.abs();
      for (auto& y : v) y = y / s;
      break;
    }
  }
}

std::vector<ScalarVec> canonical_subspace_basis(std::vector<ScalarVec> vecs, int dim) {
  std::vector<ScalarVec> rows;
  for (auto& v : vecs)
    if (!all_zero(v)) rows.push_back(std::move(v));
  // Reduced row echelon form over the scalar field.
  size_t pivot_row = 0;
  for (int col = 0; col < dim && pivot_row < rows.size(); ++col) {
    size_t found = pivot_row;
    while (found < rows.size() && rows[found][col].is_zero()) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[pivot_row], rows[found]);
    const Scalar p = rows[pivot_row][col];
    for (auto& x : rows[pivot_row]) x = x / p;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == pivot_row || rows[i][col].is_zero()) continue;
      const Scalar f = rows[i][col];
      rows[i] = axpy(rows[i], -f, rows[pivot_row]);
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  for (auto& r : rows) canonicalize_ray(r);  // pivot stays positive
  return rows;
}

int field_rank(const std::vector<ScalarVec>& vecs, int dim) {
  return static_cast<int>(canonical_subspace_basis(vecs, dim).size());
}

namespace {

// One double-description insertion step state.
struct DDState {
  std::vector<ScalarVec> lineality;
  std::vector<ScalarVec> rays;
  std::vector<ScalarVec> processed;
};

void dedupe_sorted(std::vector<ScalarVec>& v) {
  std::sort(v.begin(), v.end(), scalar_vec_less);
  v.erase(std::unique(v.begin(), v.end(),
                      [](const ScalarVec& a, const ScalarVec& b) { return a == b; }),
          v.end());
}

// Keeps only rays that generate an edge of the current cone: the tight
// inequalities at an extreme ray have rank dim - lin - 1, and the ray is
// not inside the lineality space.
void filter_extreme(DDState& st, int dim) {
  const int lin = static_cast<int>(st.lineality.size());
  std::vector<ScalarVec> kept;
  for (const auto& r : st.rays) {
    std::vector<ScalarVec> tight;
    for (const auto& a : st.processed)
      if (dot(a, r).is_zero()) tight.push_back(a);
    if (field_rank(tight, dim) != dim - lin - 1) continue;
    auto lin_plus = st.lineality;
    lin_plus.push_back(r);
    if (field_rank(lin_plus, dim) != lin + 1) continue;
    kept.push_back(r);
  }
  dedupe_sorted(kept);
  st.rays = std::move(kept);
}

void dd_insert(DDState& st, const ScalarVec& a, int dim) {
  // If the constraint is active on the lineality space, split one lineality
  // direction off as a ray and project everything onto the hyperplane of a.
  int pivot = -1;
  for (size_t i = 0; i < st.lineality.size(); ++i)
    if (!dot(a, st.lineality[i]).is_zero()) {
      pivot = static_cast<int>(i);
      break;
    }
  if (pivot >= 0) {
    ScalarVec v = st.lineality[size_t(pivot)];
    Scalar av = dot(a, v);
    if (av.sign() < 0) {
      v = negated(v);
      av = -av;
    }
    std::vector<ScalarVec> new_lin;
    for (size_t i = 0; i < st.lineality.size(); ++i) {
      if (static_cast<int>(i) == pivot) continue;
      const Scalar f = dot(a, st.lineality[i]) / av;
      new_lin.push_back(axpy(st.lineality[i], -f, v));
    }
    for (auto& r : st.rays) {
      const Scalar f = dot(a, r) / av;
      r = axpy(r, -f, v);
      canonicalize_ray(r);
    }
    canonicalize_ray(v);
    st.rays.push_back(v);
    st.lineality = std::move(new_lin);
    st.processed.push_back(a);
    return;
  }

  std::vector<Scalar> value(st.rays.size());
  std::vector<size_t> plus, zero, minus;
  for (size_t i = 0; i < st.rays.size(); ++i) {
    value[i] = dot(a, st.rays[i]);
    const int s = value[i].sign();
    if (s > 0)
      plus.push_back(i);
    else if (s < 0)
      minus.push_back(i);
    else
      zero.push_back(i);
  }
  if (minus.empty()) {
    st.processed.push_back(a);
    return;
  }

  // Tight sets against the already-processed constraints, for the
  // combinatorial adjacency test.
  std::vector<std::vector<bool>> tight(st.rays.size(),
                                       std::vector<bool>(st.processed.size(), false));
  for (size_t i = 0; i < st.rays.size(); ++i)
    for (size_t k = 0; k < st.processed.size(); ++k)
      tight[i][k] = dot(st.processed[k], st.rays[i]).is_zero();

  auto adjacent = [&](size_t p, size_t m) {
    for (size_t r = 0; r < st.rays.size(); ++r) {
      if (r == p || r == m) continue;
      bool dominates = true;
      for (size_t k = 0; k < st.processed.size(); ++k)
        if (tight[p][k] && tight[m][k] && !tight[r][k]) {
          dominates = false;
          break;
        }
      if (dominates) return false;
    }
    return true;
  };

  std::vector<ScalarVec> next;
  for (size_t i : plus) next.push_back(st.rays[i]);
  for (size_t i : zero) next.push_back(st.rays[i]);
  for (size_t p : plus)
    for (size_t m : minus) {
      if (!adjacent(p, m)) continue;
      // value[p] * rays[m] - value[m] * rays[p]; both coefficients positive.
      ScalarVec w = axpy(scaled(st.rays[m], value[p]), -value[m], st.rays[p]);
      if (all_zero(w)) continue;
      canonicalize_ray(w);
      next.push_back(std::move(w));
    }
  st.rays = std::move(next);
  st.processed.push_back(a);
  dedupe_sorted(st.rays);
}

}  // namespace

VRep dd_convert(int dim, const std::vector<ScalarVec>& ineqs) {
  DDState st;
  for (int i = 0; i < dim; ++i) {
    ScalarVec e(dim, Scalar(0));
    e[i] = Scalar(1);
    st.lineality.push_back(std::move(e));
  }
  for (const auto& a : ineqs) {
    if (static_cast<int>(a.size()) != dim) throw InternalError("inequality dimension mismatch");
    if (all_zero(a)) continue;
    dd_insert(st, a, dim);
  }
  // The insertion steps keep the pair minimal; one final extremality filter
  // guards the canonical output.
  filter_extreme(st, dim);
  VRep out;
  out.lineality = canonical_subspace_basis(st.lineality, dim);
  out.rays = st.rays;
  for (auto& r : out.rays) canonicalize_ray(r);
  dedupe_sorted(out.rays);
  return out;
}

struct HCone::Cache {
  std::optional<VRep> gens;
  std::optional<int> dim;
  std::optional<std::vector<int>> eq_idx;
  std::optional<std::vector<int>> facet_idx;
  std::optional<std::string> key;
};

HCone::HCone(int dim, std::vector<ScalarVec> ineqs)
    : dim_(dim), ineqs_(std::move(ineqs)), cache_(std::make_shared<Cache>()) {
  for (const auto& a : ineqs_)
    if (static_cast<int>(a.size()) != dim_) throw InternalError("HCone inequality dimension");
}

HCone HCone::from_generators(int dim, const std::vector<ScalarVec>& rays,
                             const std::vector<ScalarVec>& lineality) {
  std::vector<ScalarVec> dual_ineqs;
  for (const auto& r : rays) dual_ineqs.push_back(r);
  for (const auto& l : lineality) {
    dual_ineqs.push_back(l);
    dual_ineqs.push_back(negated(l));
  }
  const VRep d = dd_convert(dim, dual_ineqs);
  std::vector<ScalarVec> ineqs;
  for (const auto& r : d.rays) ineqs.push_back(r);
  for (const auto& l : d.lineality) {
    ineqs.push_back(l);
    ineqs.push_back(negated(l));
  }
  return HCone(dim, std::move(ineqs));
}

const VRep& HCone::generators() const {
  if (!cache_->gens) cache_->gens = dd_convert(dim_, ineqs_);
  return *cache_->gens;
}

int HCone::dim() const {
  if (!cache_->dim) {
    const VRep& g = generators();
    std::vector<ScalarVec> all = g.lineality;
    for (const auto& r : g.rays) all.push_back(r);
    cache_->dim = field_rank(all, dim_);
  }
  return *cache_->dim;
}

int HCone::lineality_dim() const { return static_cast<int>(generators().lineality.size()); }

const std::vector<int>& HCone::equality_indices() const {
  if (!cache_->eq_idx) {
    const VRep& g = generators();
    std::vector<int> eq;
    for (size_t i = 0; i < ineqs_.size(); ++i) {
      bool tight = true;
      for (const auto& r : g.rays)
        if (!dot(ineqs_[i], r).is_zero()) {
          tight = false;
          break;
        }
      if (tight)
        for (const auto& l : g.lineality)
          if (!dot(ineqs_[i], l).is_zero()) {
            tight = false;
            break;
          }
      if (tight) eq.push_back(static_cast<int>(i));
    }
    cache_->eq_idx = std::move(eq);
  }
  return *cache_->eq_idx;
}

const std::vector<int>& HCone::facet_indices() const {
  if (!cache_->facet_idx) {
    const auto& eq = equality_indices();
    std::set<int> eq_set(eq.begin(), eq.end());
    std::vector<int> facets;
    std::set<std::string> seen;
    const int d = dim();
    for (size_t i = 0; i < ineqs_.size(); ++i) {
      if (eq_set.count(static_cast<int>(i)) || all_zero(ineqs_[i])) continue;
      auto cut = ineqs_;
      cut.push_back(negated(ineqs_[i]));
      HCone face(dim_, std::move(cut));
      if (face.dim() != d - 1) continue;
      if (seen.insert(face.canonical_key()).second) facets.push_back(static_cast<int>(i));
    }
    cache_->facet_idx = std::move(facets);
  }
  return *cache_->facet_idx;
}

bool HCone::contains(const ScalarVec& x) const {
  for (const auto& a : ineqs_)
    if (dot(a, x).sign() < 0) return false;
  return true;
}

bool HCone::contains_cone(const HCone& other) const {
  const VRep& g = other.generators();
  for (const auto& r : g.rays)
    if (!contains(r)) return false;
  for (const auto& l : g.lineality)
    if (!contains(l) || !contains(negated(l))) return false;
  return true;
}

bool HCone::equals(const HCone& other) const {
  return dim_ == other.dim_ && canonical_key() == other.canonical_key();
}

HCone HCone::intersect(const HCone& other) const {
  if (dim_ != other.dim_) throw DomainError("intersect: ambient dimension mismatch");
  auto ineqs = ineqs_;
  ineqs.insert(ineqs.end(), other.ineqs_.begin(), other.ineqs_.end());
  return HCone(dim_, std::move(ineqs));
}

HCone HCone::dual() const {
  const VRep& g = generators();
  std::vector<ScalarVec> ineqs;
  for (const auto& r : g.rays) ineqs.push_back(r);
  for (const auto& l : g.lineality) {
    ineqs.push_back(l);
    ineqs.push_back(negated(l));
  }
  return HCone(dim_, std::move(ineqs));
}

ScalarVec HCone::relint_point() const {
  const VRep& g = generators();
  ScalarVec p(dim_, Scalar(0));
  for (const auto& r : g.rays) p = axpy(p, Scalar(1), r);
  return p;
}

HCone HCone::face_at(const ScalarVec& p) const {
  if (!contains(p)) throw DomainError("face_at: point is outside the cone");
  auto ineqs = ineqs_;
  for (const auto& a : ineqs_)
    if (dot(a, p).is_zero()) ineqs.push_back(negated(a));
  return HCone(dim_, std::move(ineqs));
}

const std::string& HCone::canonical_key() const {
  if (!cache_->key) {
    const VRep& g = generators();
    std::string key = "R";
    for (const auto& r : g.rays) key += vec_to_string(r);
    key += "|L";
    for (const auto& l : g.lineality) key += vec_to_string(l);
    cache_->key = std::move(key);
  }
  return *cache_->key;
}

bool is_face_of(const HCone& face, const HCone& cone) {
  if (face.ambient_dim() != cone.ambient_dim()) return false;
  if (!cone.contains_cone(face)) return false;
  const ScalarVec p = face.relint_point();
  return cone.face_at(p).equals(face);
}

std::vector<HCone> faces_of(const HCone& cone) {
  std::map<std::string, HCone> seen;
  std::vector<HCone> queue{cone};
  seen.emplace(cone.canonical_key(), cone);
  while (!queue.empty()) {
    HCone f = queue.back();
    queue.pop_back();
    for (size_t i = 0; i < cone.inequalities().size(); ++i) {
      const ScalarVec& a = cone.inequalities()[i];
      ScalarVec neg(a.size());
      for (size_t j = 0; j < a.size(); ++j) neg[j] = -a[j];
      auto ineqs = f.inequalities();
      ineqs.push_back(neg);
      HCone child(cone.ambient_dim(), std::move(ineqs));
      const std::string key = child.canonical_key();
      if (seen.count(key)) continue;
      seen.emplace(key, child);
      queue.push_back(child);
    }
  }
  std::vector<HCone> out;
  out.reserve(seen.size());
  for (auto& [k, c] : seen) out.push_back(c);
  std::sort(out.begin(), out.end(), [](const HCone& a, const HCone& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.canonical_key() < b.canonical_key();
  });
  return out;
}

// ---------------------------------------------------------------------------

struct HPolyhedron::Cache {
  std::optional<HCone> homog;
  std::optional<std::string> key;
};

HPolyhedron::HPolyhedron(int dim, std::vector<Ineq> ineqs)
    : dim_(dim), ineqs_(std::move(ineqs)), cache_(std::make_shared<Cache>()) {
  for (const auto& q : ineqs_)
    if (static_cast<int>(q.normal.size()) != dim_)
      throw InternalError("HPolyhedron inequality dimension");
}

const HCone& HPolyhedron::homogenization() const {
  if (!cache_->homog) {
    std::vector<ScalarVec> rows;
    for (const auto& q : ineqs_) {
      ScalarVec row = q.normal;
      row.push_back(q.offset);
      rows.push_back(std::move(row));
    }
    ScalarVec level(dim_ + 1, Scalar(0));
    level[dim_] = Scalar(1);
    rows.push_back(std::move(level));
    cache_->homog = HCone(dim_ + 1, std::move(rows));
  }
  return *cache_->homog;
}

HPolyhedron HPolyhedron::from_generators(int dim, const std::vector<ScalarVec>& vertices,
                                         const std::vector<ScalarVec>& rays,
                                         const std::vector<ScalarVec>& lineality) {
  if (vertices.empty()) throw DomainError("polyhedron generators need at least one vertex");
  std::vector<ScalarVec> crays;
  for (const auto& v : vertices) {
    ScalarVec w = v;
    w.push_back(Scalar(1));
    crays.push_back(std::move(w));
  }
  for (const auto& r : rays) {
    ScalarVec w = r;
    w.push_back(Scalar(0));
    crays.push_back(std::move(w));
  }
  std::vector<ScalarVec> clin;
  for (const auto& l : lineality) {
    ScalarVec w = l;
    w.push_back(Scalar(0));
    clin.push_back(std::move(w));
  }
  const HCone c = HCone::from_generators(dim + 1, crays, clin);
  std::vector<Ineq> ineqs;
  for (const auto& row : c.inequalities()) {
    ScalarVec normal(row.begin(), row.end() - 1);
    ineqs.push_back({std::move(normal), row.back()});
  }
  return HPolyhedron(dim, std::move(ineqs));
}

bool HPolyhedron::is_empty() const {
  for (const auto& r : homogenization().generators().rays)
    if (r[dim_].sign() > 0) return false;
  return true;
}

int HPolyhedron::dim() const {
  if (is_empty()) return -1;
  return homogenization().dim() - 1;
}

std::vector<ScalarVec> HPolyhedron::vertices() const {
  std::vector<ScalarVec> out;
  for (const auto& r : homogenization().generators().rays) {
    if (r[dim_].sign() <= 0) continue;
    ScalarVec v(dim_);
    for (int i = 0; i < dim_; ++i) v[i] = r[i] / r[dim_];
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), scalar_vec_less);
  return out;
}

std::vector<ScalarVec> HPolyhedron::rays() const {
  std::vector<ScalarVec> out;
  for (const auto& r : homogenization().generators().rays) {
    if (!r[dim_].is_zero()) continue;
    ScalarVec v(r.begin(), r.end() - 1);
    canonicalize_ray(v);
    out.push_back(std::move(v));
  }
  dedupe_sorted(out);
  return out;
}

std::vector<ScalarVec> HPolyhedron::lineality() const {
  std::vector<ScalarVec> out;
  for (const auto& l : homogenization().generators().lineality)
    out.emplace_back(l.begin(), l.end() - 1);
  return canonical_subspace_basis(std::move(out), dim_);
}

HCone HPolyhedron::recession_cone() const {
  if (is_empty()) throw DomainError("recession cone of an empty polyhedron");
  std::vector<ScalarVec> rows;
  for (const auto& q : ineqs_) rows.push_back(q.normal);
  return HCone(dim_, std::move(rows));
}

bool HPolyhedron::contains(const ScalarVec& x) const {
  for (const auto& q : ineqs_)
    if ((dot(q.normal, x) + q.offset).sign() < 0) return false;
  return true;
}

ScalarVec HPolyhedron::relint_point() const {
  if (is_empty()) throw DomainError("relative interior of an empty polyhedron");
  const auto vs = vertices();
  ScalarVec p(dim_, Scalar(0));
  for (const auto& v : vs) p = axpy(p, Scalar(1), v);
  if (!vs.empty()) {
    const Scalar k(static_cast<long>(vs.size()));
    for (auto& x : p) x = x / k;
  }
  for (const auto& r : rays()) p = axpy(p, Scalar(1), r);
  return p;
}

bool HPolyhedron::equals(const HPolyhedron& other) const {
  return dim_ == other.dim_ && canonical_key() == other.canonical_key();
}

const std::string& HPolyhedron::canonical_key() const {
  if (!cache_->key) {
    std::string key = "V";
    for (const auto& v : vertices()) key += vec_to_string(v);
    key += "|R";
    for (const auto& r : rays()) key += vec_to_string(r);
    key += "|L";
    for (const auto& l : lineality()) key += vec_to_string(l);
    cache_->key = std::move(key);
  }
  return *cache_->key;
}

std::vector<HPolyhedron> faces_of(const HPolyhedron& p) {
  if (p.is_empty()) return {};
  std::map<std::string, HPolyhedron> seen;
  std::vector<HPolyhedron> queue{p};
  seen.emplace(p.canonical_key(), p);
  while (!queue.empty()) {
    HPolyhedron f = queue.back();
    queue.pop_back();
    for (const auto& q : p.inequalities()) {
      auto ineqs = f.inequalities();
      ineqs.push_back({negated(q.normal), -q.offset});
      HPolyhedron child(p.ambient_dim(), std::move(ineqs));
      if (child.is_empty()) continue;
      const std::string key = child.canonical_key();
      if (seen.count(key)) continue;
      seen.emplace(key, child);
      queue.push_back(child);
    }
  }
  std::vector<HPolyhedron> out;
  for (auto& [k, f] : seen) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const HPolyhedron& a, const HPolyhedron& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.canonical_key() < b.canonical_key();
  });
  return out;
}

HPolyhedron polytope_hull(int dim, const std::vector<ScalarVec>& points) {
  return HPolyhedron::from_generators(dim, points);
}

}  // namespace torva
