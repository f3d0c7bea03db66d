#include "torva/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "torva/errors.hpp"
#include "torva/intlin.hpp"

namespace torva {

namespace {

ScalarVec negated(const ScalarVec& v) {
  ScalarVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

GammaIneq negated(const GammaIneq& q) {
  IntVec m(q.m.size());
  for (size_t i = 0; i < q.m.size(); ++i) m[i] = -q.m[i];
  return {std::move(m), -q.c};
}

ScalarVec ineq_row(const GammaIneq& q) {
  ScalarVec row = to_scalars(q.m);
  row.push_back(q.c);
  return row;
}

// Canonical key identifying the hyperplane of a row up to sign and scale.
std::string hyperplane_key(ScalarVec row) {
  for (auto& x : row)
    if (!x.is_zero()) {
      if (x.sign() < 0)
        for (auto& y : row) y = -y;
      break;
    }
  canonicalize_ray(row);
  return vec_to_string(row);
}

// Facets of a cone, via single-inequality flips of its stored list.
std::vector<GammaCone> gamma_facets(const GammaCone& c) {
  std::map<std::string, GammaCone> out;
  const int d = c.dim();
  for (size_t i = 0; i <= c.inequalities().size(); ++i) {
    auto ineqs = c.inequalities();
    bool t_zero = c.forced_t_zero();
    if (i < c.inequalities().size())
      ineqs.push_back(negated(c.inequalities()[i]));
    else if (!t_zero)
      t_zero = true;
    else
      continue;
    GammaCone child = GammaCone::inherited(c.rank(), std::move(ineqs), t_zero);
    if (child.dim() != d - 1) continue;
    out.emplace(child.canonical_key(), child);
  }
  std::vector<GammaCone> v;
  for (auto& [k, f] : out) v.push_back(f);
  return v;
}

}  // namespace

struct GammaFan::Cache {
  std::optional<std::vector<GammaCone>> closure;
  std::optional<std::string> key;
  std::optional<FanCheck> check;
};

GammaFan::GammaFan(int n, std::vector<GammaCone> cones)
    : n_(n), max_(std::move(cones)), cache_(std::make_shared<Cache>()) {}

GammaFan GammaFan::from_cones(int n, std::vector<GammaCone> cones) {
  if (cones.empty()) throw DomainError("fan has no cones");
  for (const auto& c : cones)
    if (c.rank() != n) throw DomainError("fan cones have mixed lattice ranks");
  std::map<std::string, GammaCone> unique;
  for (auto& c : cones) unique.emplace(c.canonical_key(), c);
  std::vector<GammaCone> kept;
  for (auto& [key, c] : unique) {
    bool absorbed = false;
    for (auto& [key2, c2] : unique) {
      if (key == key2) continue;
      if (c2.contains_cone(c)) {
        absorbed = true;
        break;
      }
    }
    if (!absorbed) kept.push_back(c);
  }
  std::sort(kept.begin(), kept.end(),
            [](const GammaCone& a, const GammaCone& b) { return a.canonical_key() < b.canonical_key(); });
  return GammaFan(n, std::move(kept));
}

std::vector<GammaCone> GammaFan::all_cones() const {
  if (!cache_->closure) {
    std::map<std::string, GammaCone> seen;
    for (const auto& c : max_)
      for (const auto& f : c.faces()) seen.emplace(f.canonical_key(), f);
    std::vector<GammaCone> out;
    for (auto& [k, c] : seen) out.push_back(c);
    std::sort(out.begin(), out.end(), [](const GammaCone& a, const GammaCone& b) {
      if (a.dim() != b.dim()) return a.dim() < b.dim();
      return a.canonical_key() < b.canonical_key();
    });
    cache_->closure = std::move(out);
  }
  return *cache_->closure;
}

bool GammaFan::contains_point(const ScalarVec& wt) const {
  for (const auto& c : max_)
    if (c.contains(wt)) return true;
  return false;
}

bool GammaFan::has_cone(const GammaCone& c) const {
  for (const auto& f : all_cones())
    if (f.canonical_key() == c.canonical_key()) return true;
  return false;
}

std::string GammaFan::canonical_key() const {
  if (!cache_->key) {
    std::string key;
    for (const auto& c : max_) key += c.canonical_key() + ";";
    cache_->key = std::move(key);
  }
  return *cache_->key;
}

const FanCheck& GammaFan::validation() const {
  if (!cache_->check) cache_->check = validate_fan(*this);
  return *cache_->check;
}

FanCheck validate_fan(const GammaFan& fan) {
  FanCheck out;
  const auto& cones = fan.maximal_cones();
  for (size_t i = 0; i < cones.size(); ++i) {
    const auto adm = cones[i].admissible();
    if (!adm.first) {
      out.ok = false;
      out.message = "cone " + std::to_string(i) + " contains the line through " +
                    vec_to_string(*adm.second);
      return out;
    }
  }
  for (size_t i = 0; i < cones.size(); ++i)
    for (size_t j = i + 1; j < cones.size(); ++j) {
      const GammaCone meet = cones[i].intersect(cones[j]);
      if (is_face_of(meet, cones[i]) && is_face_of(meet, cones[j])) continue;
      out.ok = false;
      out.bad_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
      if (out.message.empty())
        out.message = "cones " + std::to_string(i) + " and " + std::to_string(j) +
                      " do not meet in a common face";
    }
  return out;
}

bool is_complete(const GammaFan& fan) {
  const FanCheck& check = fan.validation();
  if (!check.ok) throw DomainError("is_complete requires a valid fan: " + check.message);
  const int full = fan.rank() + 1;
  const auto& cones = fan.maximal_cones();
  for (const auto& c : cones)
    if (c.dim() != full) return false;

  // Interior facets must be shared by exactly two maximal cones and the
  // facet-adjacency graph must be connected.
  std::map<std::string, std::vector<size_t>> owners;
  for (size_t i = 0; i < cones.size(); ++i)
    for (const auto& f : gamma_facets(cones[i])) {
      if (f.in_t_boundary()) continue;
      owners[f.canonical_key()].push_back(i);
    }
  std::vector<size_t> parent(cones.size());
  std::iota(parent.begin(), parent.end(), size_t(0));
  auto find = [&parent](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [key, own] : owners) {
    if (own.size() != 2) return false;
    parent[find(own[0])] = find(own[1]);
  }
  for (size_t i = 0; i < cones.size(); ++i)
    if (find(i) != find(0)) return false;
  return true;
}

namespace {

// Essential inequality representatives (facet-defining or implicit
// equalities) of every maximal cone, deduplicated per hyperplane.
std::vector<GammaIneq> essential_hyperplanes(const GammaFan& fan) {
  std::map<std::string, GammaIneq> reps;
  for (const auto& cone : fan.maximal_cones()) {
    const HCone& hc = cone.as_cone();
    std::set<int> wanted(hc.facet_indices().begin(), hc.facet_indices().end());
    for (int i : hc.equality_indices()) wanted.insert(i);
    for (int i : wanted) {
      if (i >= static_cast<int>(cone.inequalities().size())) continue;  // implicit t rows
      const GammaIneq& q = cone.inequalities()[size_t(i)];
      bool zero_m = true;
      for (const auto& x : q.m)
        if (x != 0) {
          zero_m = false;
          break;
        }
      if (zero_m) continue;  // pure-t rows never split the open halfspace
      reps.emplace(hyperplane_key(ineq_row(q)), q);
    }
  }
  std::vector<GammaIneq> out;
  for (auto& [k, q] : reps) out.push_back(q);
  return out;
}

std::vector<GammaCone> arrangement_cells(int n, const std::vector<GammaIneq>& hyperplanes) {
  std::vector<std::vector<GammaIneq>> cells{{}};
  for (const auto& h : hyperplanes) {
    std::vector<std::vector<GammaIneq>> next;
    for (const auto& cell : cells) {
      for (int side = 0; side < 2; ++side) {
        auto cand = cell;
        cand.push_back(side == 0 ? h : negated(h));
        GammaCone c = GammaCone::inherited(n, cand);
        if (c.dim() == n + 1) next.push_back(std::move(cand));
      }
    }
    cells = std::move(next);
  }
  std::vector<GammaCone> out;
  for (auto& cell : cells) out.push_back(GammaCone::inherited(n, std::move(cell)));
  return out;
}

}  // namespace

GammaFan refine_to_complete(const GammaFan& fan) {
  const FanCheck& check = fan.validation();
  if (!check.ok) throw DomainError("refine_to_complete requires a valid fan: " + check.message);
  auto cells = arrangement_cells(fan.rank(), essential_hyperplanes(fan));
  return GammaFan::from_cones(fan.rank(), std::move(cells));
}

std::pair<bool, HCone> support_is_convex(const GammaFan& fan) {
  const int n = fan.rank();
  std::vector<ScalarVec> rays;
  for (const auto& c : fan.maximal_cones()) {
    const VRep& g = c.as_cone().generators();
    rays.insert(rays.end(), g.rays.begin(), g.rays.end());
  }
  HCone hull = HCone::from_generators(n + 1, rays);
  if (fan.maximal_cones().size() == 1) return {true, hull};

  // Split {t >= 0} by every hyperplane of the fan and of the hull; the
  // support is convex iff every full-dimensional cell of the hull is
  // covered by some fan cone (checked at an exact relative-interior point).
  std::map<std::string, ScalarVec> hyps;
  for (const auto& q : essential_hyperplanes(fan)) {
    ScalarVec row = ineq_row(q);
    hyps.emplace(hyperplane_key(row), row);
  }
  for (const auto& row : hull.inequalities()) {
    bool pure_t = true;
    for (size_t i = 0; i + 1 < row.size(); ++i)
      if (!row[i].is_zero()) {
        pure_t = false;
        break;
      }
    if (pure_t) continue;
    hyps.emplace(hyperplane_key(row), row);
  }
  ScalarVec t_row(n + 1, Scalar(0));
  t_row[n] = Scalar(1);
  std::vector<HCone> cells{HCone(n + 1, {t_row})};
  for (const auto& [key, row] : hyps) {
    std::vector<HCone> next;
    for (const auto& cell : cells)
      for (int side = 0; side < 2; ++side) {
        auto ineqs = cell.inequalities();
        ineqs.push_back(side == 0 ? row : negated(row));
        HCone cand(n + 1, std::move(ineqs));
        if (cand.dim() == n + 1) next.push_back(std::move(cand));
      }
    cells = std::move(next);
  }
  for (const auto& cell : cells) {
    const ScalarVec p = cell.relint_point();
    if (hull.contains(p) && !fan.contains_point(p)) return {false, hull};
  }
  return {true, hull};
}

namespace {

enum class RowKind { kSkip, kForceTZero, kIneq };

struct ConvertedRow {
  RowKind kind;
  GammaIneq ineq;
};

// Turns an H-representation row over the scalar field into a lattice
// inequality (m, c).  Fails when the m-part is irrational; pure-t rows
// become either a no-op or a t=0 restriction.
std::optional<ConvertedRow> row_to_gamma(const ScalarVec& row) {
  const int n = static_cast<int>(row.size()) - 1;
  bool zero_m = true;
  for (int i = 0; i < n; ++i) {
    if (!row[size_t(i)].is_rational()) return std::nullopt;
    if (!row[size_t(i)].is_zero()) zero_m = false;
  }
  if (zero_m) {
    if (row[size_t(n)].sign() >= 0) return ConvertedRow{RowKind::kSkip, {}};
    return ConvertedRow{RowKind::kForceTZero, {}};
  }
  BigInt den(1);
  for (int i = 0; i < n; ++i)
    den = lcm(den, boost::multiprecision::denominator(row[size_t(i)].rational_part()));
  IntVec m(n);
  for (int i = 0; i < n; ++i)
    m[size_t(i)] =
        boost::multiprecision::numerator(row[size_t(i)].rational_part() * Rational(den));
  BigInt g = 0;
  for (const auto& x : m) g = gcd(g, x);
  if (g > 1)
    for (auto& x : m) x /= g;
  const Scalar scale = Scalar(Rational(den)) / Scalar(Rational(g));
  return ConvertedRow{RowKind::kIneq, {std::move(m), row[size_t(n)] * scale}};
}

// Builds a GammaCone from an HCone's inequality rows; nullopt when some
// facet normal is irrational or an offset escapes the value group.
std::optional<GammaCone> cone_from_rows(int n, const HCone& hc, const ValueGroup& gamma) {
  std::vector<GammaIneq> ineqs;
  bool t_zero = false;
  for (const auto& row : hc.inequalities()) {
    auto conv = row_to_gamma(row);
    if (!conv) return std::nullopt;
    switch (conv->kind) {
      case RowKind::kSkip:
        break;
      case RowKind::kForceTZero:
        t_zero = true;
        break;
      case RowKind::kIneq:
        if (!gamma.contains(conv->ineq.c)) return std::nullopt;
        ineqs.push_back(std::move(conv->ineq));
        break;
    }
  }
  return GammaCone::inherited(n, std::move(ineqs), t_zero);
}

bool certified(const GammaFan& input, const GammaFan& candidate) {
  if (!candidate.validation().ok) return false;
  if (!is_complete(candidate)) return false;
  for (const auto& c : input.maximal_cones())
    if (!candidate.has_cone(c)) return false;
  return true;
}

std::optional<GammaFan> star_extension(const GammaFan& fan, const HCone& hull,
                                       const ValueGroup& gamma) {
  const int n = fan.rank();
  ScalarVec p = hull.relint_point();
  ScalarVec q = negated(p);

  // Boundary subcomplex: fan faces lying in a proper face of the hull.
  std::vector<ScalarVec> hull_facets;
  for (int i : hull.facet_indices()) hull_facets.push_back(hull.inequalities()[size_t(i)]);
  std::vector<GammaCone> new_cones;
  for (const auto& tau : fan.all_cones()) {
    const VRep& g = tau.as_cone().generators();
    bool on_boundary = false;
    for (const auto& f : hull_facets) {
      bool tight = true;
      for (const auto& r : g.rays)
        if (!dot(f, r).is_zero()) {
          tight = false;
          break;
        }
      if (tight) {
        on_boundary = true;
        break;
      }
    }
    if (!on_boundary) continue;
    std::vector<ScalarVec> gens = g.rays;
    gens.push_back(q);
    const HCone shadow = HCone::from_generators(n + 1, gens);
    auto converted = cone_from_rows(n, shadow, gamma);
    if (!converted) return std::nullopt;
    if (!converted->admissible().first) return std::nullopt;
    new_cones.push_back(std::move(*converted));
  }
  auto cones = fan.maximal_cones();
  cones.insert(cones.end(), new_cones.begin(), new_cones.end());
  GammaFan candidate = GammaFan::from_cones(n, std::move(cones));
  if (!certified(fan, candidate)) return std::nullopt;
  return candidate;
}

// True iff u equals a u b as sets, where h separates the two cones.
bool union_is_exact(const HCone& u, const GammaCone& a, const GammaCone& b,
                    const ScalarVec& h) {
  for (int side = 0; side < 2; ++side) {
    auto ineqs = u.inequalities();
    ineqs.push_back(side == 0 ? h : negated(h));
    const HCone part(u.ambient_dim(), std::move(ineqs));
    const GammaCone& target = side == 0 ? a : b;
    if (!target.as_cone().contains_cone(part)) return false;
  }
  return true;
}

void greedy_merge_exterior(int n, std::vector<GammaCone>& cones, const std::vector<bool>& fixed_in,
                           const ValueGroup& gamma) {
  std::vector<bool> fixed = fixed_in;
  bool merged = true;
  while (merged) {
    merged = false;
    for (size_t i = 0; i < cones.size() && !merged; ++i) {
      if (fixed[i]) continue;
      for (size_t j = i + 1; j < cones.size() && !merged; ++j) {
        if (fixed[j]) continue;
        const GammaCone meet = cones[i].intersect(cones[j]);
        if (meet.dim() != n) continue;
        if (!is_face_of(meet, cones[i]) || !is_face_of(meet, cones[j])) continue;
        // Orient a separating hyperplane with cones[i] on the >= 0 side.
        ScalarVec h;
        for (const auto& q : cones[i].inequalities()) {
          ScalarVec row = ineq_row(q);
          bool tight = true;
          for (const auto& r : meet.as_cone().generators().rays)
            if (!dot(row, r).is_zero()) {
              tight = false;
              break;
            }
          if (!tight) continue;
          bool other_side = true;
          for (const auto& r : cones[j].as_cone().generators().rays)
            if (dot(row, r).sign() > 0) {
              other_side = false;
              break;
            }
          if (other_side) {
            h = row;
            break;
          }
        }
        if (h.empty()) continue;
        std::vector<ScalarVec> gens = cones[i].as_cone().generators().rays;
        const auto& gj = cones[j].as_cone().generators().rays;
        gens.insert(gens.end(), gj.begin(), gj.end());
        const HCone u = HCone::from_generators(n + 1, gens);
        auto conv = cone_from_rows(n, u, gamma);
        if (!conv || !conv->admissible().first) continue;
        if (!union_is_exact(u, cones[i], cones[j], h)) continue;
        bool axiom_ok = true;
        for (size_t k = 0; k < cones.size() && axiom_ok; ++k) {
          if (k == i || k == j) continue;
          const GammaCone meet_k = conv->intersect(cones[k]);
          axiom_ok = is_face_of(meet_k, *conv) && is_face_of(meet_k, cones[k]);
        }
        if (!axiom_ok) continue;
        cones[i] = *conv;
        cones.erase(cones.begin() + static_cast<long>(j));
        fixed.erase(fixed.begin() + static_cast<long>(j));
        merged = true;
      }
    }
  }
}

}  // namespace

GammaFan complete_extension(const GammaFan& fan, const ValueGroup& gamma) {
  const FanCheck& check = fan.validation();
  if (!check.ok) throw DomainError("complete_extension requires a valid fan: " + check.message);
  if (is_complete(fan)) return fan;
  const int n = fan.rank();

  const auto [convex, hull] = support_is_convex(fan);
  if (convex && hull.dim() == n + 1) {
    auto star = star_extension(fan, hull, gamma);
    if (star) return *star;
  }

  const GammaFan refined = refine_to_complete(fan);
  std::vector<GammaCone> cones = fan.maximal_cones();
  std::vector<bool> fixed(cones.size(), true);
  for (const auto& cell : refined.maximal_cones()) {
    const ScalarVec p = cell.as_cone().relint_point();
    if (fan.contains_point(p)) continue;
    cones.push_back(cell);
    fixed.push_back(false);
  }
  greedy_merge_exterior(n, cones, fixed, gamma);
  GammaFan candidate = GammaFan::from_cones(n, std::move(cones));
  if (certified(fan, candidate)) return candidate;

  std::vector<std::string> conflicts;
  const FanCheck cand_check = validate_fan(candidate);
  for (const auto& [i, j] : cand_check.bad_pairs)
    conflicts.push_back("cones " + std::to_string(i) + " and " + std::to_string(j));
  if (conflicts.empty()) conflicts.push_back("completion certificate failed");
  throw ExtensionFailure("could not certify a complete extension", std::move(conflicts));
}

}  // namespace torva
