#include "torva/projective.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "torva/errors.hpp"

namespace torva {

std::vector<int> WeightedConfig::finite_indices() const {
  std::vector<int> out;
  for (size_t i = 0; i < heights.size(); ++i)
    if (heights[i]) out.push_back(static_cast<int>(i));
  return out;
}

WeightedConfig make_weighted_config(int n, std::vector<IntVec> weights,
                                    std::vector<std::optional<Scalar>> heights,
                                    const ValueGroup& gamma) {
  if (weights.empty() || weights.size() != heights.size())
    throw DomainError("configuration needs matching weight and height lists");
  WeightedConfig cfg;
  cfg.n = n;
  cfg.weights = std::move(weights);
  cfg.heights = std::move(heights);
  bool finite = false;
  for (size_t i = 0; i < cfg.weights.size(); ++i) {
    if (static_cast<int>(cfg.weights[i].size()) != n)
      throw DomainError("weight vector rank mismatch");
    if (cfg.heights[i]) {
      finite = true;
      if (!gamma.contains(*cfg.heights[i]))
        throw GammaViolation("height " + cfg.heights[i]->to_string() +
                             " is not in the value group");
    }
  }
  if (!finite) throw DomainError("configuration needs at least one finite height");
  for (size_t i = 0; i < cfg.weights.size() && !cfg.duplicate_weights; ++i)
    for (size_t j = i + 1; j < cfg.weights.size(); ++j)
      if (cfg.weights[i] == cfg.weights[j]) {
        cfg.duplicate_weights = true;
        break;
      }
  return cfg;
}

HPolyhedron weight_polytope(const WeightedConfig& cfg) {
  std::vector<ScalarVec> pts;
  for (int i : cfg.finite_indices()) pts.push_back(to_scalars(cfg.weights[size_t(i)]));
  return polytope_hull(cfg.n, pts);
}

std::vector<SubdivisionFace> regular_subdivision(const WeightedConfig& cfg) {
  const auto finite = cfg.finite_indices();
  std::vector<ScalarVec> lifted;
  for (int i : finite) {
    ScalarVec p = to_scalars(cfg.weights[size_t(i)]);
    p.push_back(*cfg.heights[size_t(i)]);
    lifted.push_back(std::move(p));
  }
  ScalarVec up(size_t(cfg.n) + 1, Scalar(0));
  up[size_t(cfg.n)] = Scalar(1);
  const HPolyhedron hull = HPolyhedron::from_generators(cfg.n + 1, lifted, {up});

  // Bounded faces of the lifted hull are exactly the lower-hull faces.
  std::map<std::vector<int>, SubdivisionFace> out;
  for (const auto& face : faces_of(hull)) {
    if (!face.rays().empty() || !face.lineality().empty()) continue;
    std::vector<int> active;
    std::vector<ScalarVec> pts;
    for (size_t k = 0; k < lifted.size(); ++k)
      if (face.contains(lifted[k])) {
        active.push_back(finite[k]);
        pts.push_back(to_scalars(cfg.weights[size_t(finite[k])]));
      }
    if (active.empty()) continue;
    SubdivisionFace f;
    f.active = std::move(active);
    f.body = polytope_hull(cfg.n, pts);
    f.dim = f.body.dim();
    out.emplace(f.active, std::move(f));
  }
  std::vector<SubdivisionFace> faces;
  for (auto& [k, f] : out) faces.push_back(std::move(f));
  std::sort(faces.begin(), faces.end(), [](const SubdivisionFace& a, const SubdivisionFace& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.body.canonical_key() < b.body.canonical_key();
  });
  return faces;
}

namespace {

// H-description of {w : f_i <= f_j for all finite j} for base index i.
std::vector<HPolyhedron::Ineq> min_domain_ineqs(const WeightedConfig& cfg, int i) {
  std::vector<HPolyhedron::Ineq> ineqs;
  for (int j : cfg.finite_indices()) {
    if (j == i) continue;
    ScalarVec normal(size_t(cfg.n));
    for (int k = 0; k < cfg.n; ++k)
      normal[size_t(k)] = Scalar(BigInt(cfg.weights[size_t(j)][size_t(k)] - cfg.weights[size_t(i)][size_t(k)]));
    ineqs.push_back({std::move(normal), *cfg.heights[size_t(j)] - *cfg.heights[size_t(i)]});
  }
  return ineqs;
}

bool poly_contains_poly(const HPolyhedron& outer, const HPolyhedron& inner) {
  for (const auto& v : inner.vertices())
    if (!outer.contains(v)) return false;
  const HCone rec = outer.recession_cone();
  for (const auto& r : inner.rays())
    if (!rec.contains(r)) return false;
  for (const auto& l : inner.lineality()) {
    ScalarVec neg(l.size());
    for (size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
    if (!rec.contains(l) || !rec.contains(neg)) return false;
  }
  return true;
}

std::vector<int> active_at(const WeightedConfig& cfg, const ScalarVec& w) {
  std::optional<Scalar> best;
  std::vector<int> active;
  for (int i : cfg.finite_indices()) {
    const Scalar v = *cfg.heights[size_t(i)] + dot(cfg.weights[size_t(i)], w);
    if (!best || v < *best) {
      best = v;
      active.clear();
      active.push_back(i);
    } else if (v == *best) {
      active.push_back(i);
    }
  }
  return active;
}

// Inclusion-maximal linearity domains with their base indices.
std::vector<std::pair<int, HPolyhedron>> maximal_domains(const WeightedConfig& cfg) {
  std::vector<std::pair<int, HPolyhedron>> cells;
  std::set<std::string> seen;
  for (int i : cfg.finite_indices()) {
    HPolyhedron cell(cfg.n, min_domain_ineqs(cfg, i));
    if (cell.is_empty()) continue;
    if (!seen.insert(cell.canonical_key()).second) continue;
    cells.emplace_back(i, std::move(cell));
  }
  std::vector<std::pair<int, HPolyhedron>> kept;
  for (size_t a = 0; a < cells.size(); ++a) {
    bool absorbed = false;
    for (size_t b = 0; b < cells.size() && !absorbed; ++b)
      if (a != b && poly_contains_poly(cells[b].second, cells[a].second)) absorbed = true;
    if (!absorbed) kept.push_back(cells[a]);
  }
  return kept;
}

}  // namespace

std::vector<DualCell> dual_complex(const WeightedConfig& cfg) {
  std::map<std::string, DualCell> out;
  for (const auto& [i, cell] : maximal_domains(cfg)) {
    for (const auto& face : faces_of(cell)) {
      const std::string key = face.canonical_key();
      if (out.count(key)) continue;
      DualCell c;
      c.active = active_at(cfg, face.relint_point());
      c.body = face;
      c.dim = face.dim();
      out.emplace(key, std::move(c));
    }
  }
  std::vector<DualCell> cells;
  for (auto& [k, c] : out) cells.push_back(std::move(c));
  std::sort(cells.begin(), cells.end(), [](const DualCell& a, const DualCell& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.body.canonical_key() < b.body.canonical_key();
  });
  return cells;
}

DualCell face_to_cone(const WeightedConfig& cfg, const SubdivisionFace& q) {
  if (q.active.empty()) throw DomainError("not a face of the regular subdivision");
  for (int i : q.active)
    if (i < 0 || i >= static_cast<int>(cfg.weights.size()) || !cfg.heights[size_t(i)])
      throw DomainError("not a face of the regular subdivision");
  const int i0 = q.active.front();
  auto ineqs = min_domain_ineqs(cfg, i0);
  for (int i : q.active) {
    if (i == i0) continue;
    ScalarVec normal(size_t(cfg.n));
    for (int k = 0; k < cfg.n; ++k)
      normal[size_t(k)] = Scalar(BigInt(cfg.weights[size_t(i0)][size_t(k)] - cfg.weights[size_t(i)][size_t(k)]));
    ineqs.push_back({std::move(normal), *cfg.heights[size_t(i0)] - *cfg.heights[size_t(i)]});
  }
  DualCell c;
  c.body = HPolyhedron(cfg.n, std::move(ineqs));
  if (c.body.is_empty()) throw DomainError("not a face of the regular subdivision");
  // A genuine face carries exactly the indices active on its dual cell.
  std::vector<int> sorted = q.active;
  std::sort(sorted.begin(), sorted.end());
  c.active = active_at(cfg, c.body.relint_point());
  if (c.active != sorted) throw DomainError("not a face of the regular subdivision");
  c.dim = c.body.dim();
  return c;
}

SubdivisionFace cone_to_face(const WeightedConfig& cfg, const DualCell& cell) {
  if (cell.body.is_empty()) throw DomainError("not a cell of the dual complex");
  const auto active = active_at(cfg, cell.body.relint_point());
  // Rebuild the dual of the candidate active set; a genuine cell matches it.
  SubdivisionFace q;
  q.active = active;
  const DualCell check = face_to_cone(cfg, q);
  if (!check.body.equals(cell.body)) throw DomainError("not a cell of the dual complex");
  std::vector<ScalarVec> pts;
  for (int i : active) pts.push_back(to_scalars(cfg.weights[size_t(i)]));
  q.body = polytope_hull(cfg.n, pts);
  q.dim = q.body.dim();
  return q;
}

namespace {

GammaCone domain_cone(const WeightedConfig& cfg, int i) {
  std::vector<GammaIneq> ineqs;
  for (int j : cfg.finite_indices()) {
    if (j == i) continue;
    IntVec m(size_t(cfg.n));
    for (int k = 0; k < cfg.n; ++k)
      m[size_t(k)] = cfg.weights[size_t(j)][size_t(k)] - cfg.weights[size_t(i)][size_t(k)];
    ineqs.push_back({std::move(m), *cfg.heights[size_t(j)] - *cfg.heights[size_t(i)]});
  }
  return GammaCone::inherited(cfg.n, std::move(ineqs));
}

}  // namespace

GammaFan generated_fan(const WeightedConfig& cfg, const ToricContext& ctx) {
  (void)ctx;
  std::vector<GammaCone> cones;
  for (const auto& [i, cell] : maximal_domains(cfg)) {
    GammaCone c = domain_cone(cfg, i);
    const auto adm = c.admissible();
    if (!adm.first)
      throw DomainError("linearity domain spans a line through " + vec_to_string(*adm.second) +
                        "; weight polytope is not full-dimensional");
    cones.push_back(std::move(c));
  }
  return GammaFan::from_cones(cfg.n, std::move(cones));
}

GammaFan normalization_fan(const WeightedConfig& cfg, const ToricContext& ctx) {
  (void)ctx;
  std::vector<GammaCone> cones;
  for (const auto& f : regular_subdivision(cfg)) {
    if (f.dim != 0) continue;
    GammaCone c = domain_cone(cfg, f.active.front());
    const auto adm = c.admissible();
    if (!adm.first)
      throw DomainError("vertex cone spans a line through " + vec_to_string(*adm.second) +
                        "; weight polytope is not full-dimensional");
    cones.push_back(std::move(c));
  }
  if (cones.empty()) throw DomainError("subdivision has no vertices");
  return GammaFan::from_cones(cfg.n, std::move(cones));
}

OrbitCensus orbit_census(const WeightedConfig& cfg) {
  OrbitCensus census;
  census.generic_faces = faces_of(weight_polytope(cfg));
  census.special_faces = regular_subdivision(cfg);
  int top = 0;
  for (const auto& f : census.special_faces) top = std::max(top, f.dim);
  for (const auto& f : census.special_faces)
    if (f.dim == top) ++census.components;
  return census;
}

}  // namespace torva
