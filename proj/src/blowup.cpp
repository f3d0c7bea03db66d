#include "torva/blowup.hpp"

#include <algorithm>
#include <map>

#include "torva/errors.hpp"

namespace torva {

InvariantIdeal make_invariant_ideal(GammaCone chart, SemigroupGens gens) {
  if (gens.elems.empty()) throw DomainError("ideal needs at least one generator");
  if (gens.n != chart.rank()) throw DomainError("ideal generators have the wrong rank");
  for (const auto& d : gens.elems)
    if (!in_weight_algebra(chart, d))
      throw DomainError("generator " + d.to_string() + " is outside the weight algebra");
  return InvariantIdeal{std::move(chart), std::move(gens)};
}

std::vector<MonomialDatum> order_function(const InvariantIdeal& ideal) {
  return ideal.gens.elems;
}

namespace {

GammaIneq difference_ineq(const MonomialDatum& other, const MonomialDatum& base) {
  IntVec m(base.u.size());
  for (size_t i = 0; i < m.size(); ++i) m[i] = other.u[i] - base.u[i];
  return {std::move(m), other.gamma - base.gamma};
}

}  // namespace

BlowupSubdivision blowup_subdivision(const InvariantIdeal& ideal) {
  const auto& gens = ideal.gens.elems;
  const int n = ideal.chart.rank();
  const int d = ideal.chart.dim();
  std::map<std::string, std::pair<GammaCone, std::vector<int>>> cells;
  for (size_t k = 0; k < gens.size(); ++k) {
    auto ineqs = ideal.chart.inequalities();
    for (size_t j = 0; j < gens.size(); ++j) {
      if (j == k) continue;
      ineqs.push_back(difference_ineq(gens[j], gens[k]));
    }
    GammaCone cell = GammaCone::inherited(n, std::move(ineqs), ideal.chart.forced_t_zero());
    if (cell.dim() != d) continue;
    const std::string key = cell.canonical_key();
    if (cells.count(key)) continue;
    // Active set at a relative-interior point of the cell.
    const ScalarVec p = cell.as_cone().relint_point();
    std::vector<int> active;
    std::optional<Scalar> best;
    for (size_t j = 0; j < gens.size(); ++j) {
      Scalar v = dot(gens[j].u, ScalarVec(p.begin(), p.end() - 1)) + gens[j].gamma * p.back();
      if (!best || v < *best) {
        best = v;
        active.clear();
        active.push_back(static_cast<int>(j));
      } else if (v == *best) {
        active.push_back(static_cast<int>(j));
      }
    }
    cells.emplace(key, std::make_pair(std::move(cell), std::move(active)));
  }
  std::vector<GammaCone> cones;
  std::vector<std::vector<int>> actives;
  for (auto& [key, cell] : cells) {
    cones.push_back(std::move(cell.first));
    actives.push_back(std::move(cell.second));
  }
  BlowupSubdivision out{GammaFan::from_cones(n, std::move(cones)), {}};
  // from_cones sorts by canonical key, the map iteration order; keep aligned.
  out.active_sets = std::move(actives);
  if (out.fan.maximal_cones().size() != out.active_sets.size())
    throw InternalError("blowup cells collapsed unexpectedly");
  return out;
}

bool is_u_admissible(const InvariantIdeal& ideal, const std::vector<GammaCone>& delta) {
  for (const auto& tau : delta)
    if (!is_face_of(tau, ideal.chart))
      throw DomainError("subfan cone is not a face of the chart");
  for (const auto& tau : delta) {
    const VRep& g = tau.as_cone().generators();
    bool linear = false;
    for (const auto& base : ideal.gens.elems) {
      bool dominates = true;
      for (const auto& other : ideal.gens.elems) {
        const GammaIneq diff = difference_ineq(other, base);
        ScalarVec row = to_scalars(diff.m);
        row.push_back(diff.c);
        for (const auto& r : g.rays)
          if (dot(row, r).sign() < 0) {
            dominates = false;
            break;
          }
        if (!dominates) break;
      }
      if (dominates) {
        linear = true;
        break;
      }
    }
    if (!linear) return false;
  }
  return true;
}

InvariantIdeal product_ideal(const InvariantIdeal& a, const InvariantIdeal& b) {
  if (!a.chart.equals(b.chart)) throw DomainError("product of ideals on different charts");
  std::vector<MonomialDatum> elems;
  for (const auto& x : a.gens.elems)
    for (const auto& y : b.gens.elems) {
      IntVec u(x.u.size());
      for (size_t i = 0; i < u.size(); ++i) u[i] = x.u[i] + y.u[i];
      elems.push_back({std::move(u), x.gamma + y.gamma});
    }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return InvariantIdeal{a.chart, SemigroupGens{a.gens.n, std::move(elems)}};
}

GammaFan common_refinement(const GammaFan& a, const GammaFan& b) {
  if (a.rank() != b.rank()) throw DomainError("common refinement needs matching ranks");
  std::vector<GammaCone> cones;
  for (const auto& ca : a.maximal_cones())
    for (const auto& cb : b.maximal_cones()) cones.push_back(ca.intersect(cb));
  return GammaFan::from_cones(a.rank(), std::move(cones));
}

Tower build_tower(const GammaCone& chart, const std::vector<InvariantIdeal>& ideals, int depth) {
  if (depth < 0) throw DomainError("tower depth must be nonnegative");
  Tower tower{GammaFan::from_cones(chart.rank(), {chart}), {}};
  GammaFan current = tower.base;
  const int steps = std::min<int>(depth, static_cast<int>(ideals.size()));
  for (int k = 0; k < steps; ++k) {
    const BlowupSubdivision sub = blowup_subdivision(ideals[size_t(k)]);
    GammaFan next = common_refinement(current, sub.fan);
    for (const auto& c : next.maximal_cones()) {
      bool nested = false;
      for (const auto& prev : current.maximal_cones())
        if (prev.contains_cone(c)) {
          nested = true;
          break;
        }
      if (!nested) throw InternalError("tower level does not refine the previous one");
    }
    std::string desc = "ideal<";
    for (size_t i = 0; i < ideals[size_t(k)].gens.elems.size(); ++i) {
      if (i) desc += ", ";
      desc += ideals[size_t(k)].gens.elems[i].to_string();
    }
    desc += ">";
    tower.levels.emplace_back(std::move(desc), next);
    current = next;
  }
  return tower;
}

}  // namespace torva
