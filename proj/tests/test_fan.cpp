#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "torva/fan.hpp"

using namespace torva;

namespace {

GammaCone gc(int n, std::vector<std::pair<std::vector<long>, const char*>> rows) {
  std::vector<GammaIneq> ineqs;
  for (auto& [m, c] : rows) {
    IntVec v;
    for (long x : m) v.emplace_back(x);
    ineqs.push_back({std::move(v), Scalar::parse(c)});
  }
  return GammaCone::inherited(n, std::move(ineqs));
}

// The four maximal cones of the complete rank-1 fan with break lines w = t,
// w = 0 and w = -t.
std::vector<GammaCone> complete_rank1() {
  return {
      gc(1, {{{1}, "-1"}}),              // 0 <= t <= w
      gc(1, {{{1}, "0"}, {{-1}, "1"}}),  // 0 <= w <= t
      gc(1, {{{-1}, "0"}, {{1}, "1"}}),  // -t <= w <= 0
      gc(1, {{{-1}, "-1"}}),             // w <= -t
  };
}

GammaCone triangle_cone() {
  return gc(2, {{{1, 0}, "0"}, {{0, 1}, "0"}, {{-1, -1}, "3/2"}});
}

}  // namespace

TEST_CASE("a cone with its faces is a fan") {
  const GammaFan fan = GammaFan::from_cones(2, triangle_cone().faces());
  CHECK(fan.maximal_cones().size() == 1);  // faces absorbed into the cone
  CHECK(fan.validation().ok);
  CHECK(fan.all_cones().size() == 8);
}

TEST_CASE("overlapping cones violate the fan axiom") {
  // cone{(1,0),(1,2)} and cone{(1,1),(0,1)} in the (w,t) halfplane overlap
  // in the wedge cone{(1,1),(1,2)}.
  const GammaCone a = gc(1, {{{2}, "-1"}});              // 0 <= t <= 2w
  const GammaCone b = gc(1, {{{1}, "0"}, {{-1}, "1"}});  // 0 <= w <= t
  const GammaFan fan = GammaFan::from_cones(1, {a, b});
  const FanCheck check = validate_fan(fan);
  CHECK_FALSE(check.ok);
  REQUIRE(check.bad_pairs.size() == 1);
  CHECK_THROWS_AS(is_complete(fan), DomainError);
}

TEST_CASE("completeness of the rank-1 fixture") {
  const GammaFan fan = GammaFan::from_cones(1, complete_rank1());
  CHECK(fan.validation().ok);
  CHECK(is_complete(fan));
  CHECK(oracle::covers_all(fan, oracle::coverage_samples(fan, 1000, 99)));

  // Deleting any maximal cone destroys completeness.
  for (size_t drop = 0; drop < 4; ++drop) {
    auto cones = complete_rank1();
    cones.erase(cones.begin() + static_cast<long>(drop));
    const GammaFan partial = GammaFan::from_cones(1, std::move(cones));
    CHECK(partial.validation().ok);
    CHECK_FALSE(is_complete(partial));
    CHECK_FALSE(oracle::covers_all(partial, oracle::coverage_samples(partial, 1000, 99)));
  }

  const GammaFan single = GammaFan::from_cones(2, {triangle_cone()});
  CHECK_FALSE(is_complete(single));
}

TEST_CASE("arrangement refinement of a quadrant") {
  const GammaCone quad = gc(1, {{{1}, "0"}});
  const GammaFan refined = refine_to_complete(GammaFan::from_cones(1, {quad}));
  CHECK(refined.maximal_cones().size() == 2);
  CHECK(refined.validation().ok);
  CHECK(is_complete(refined));
}

TEST_CASE("arrangement refinement of the triangle cone") {
  const GammaFan fan = GammaFan::from_cones(2, {triangle_cone()});
  const GammaFan refined = refine_to_complete(fan);
  CHECK(refined.validation().ok);
  CHECK(is_complete(refined));
  // Every refinement cell lies inside or outside the input cone, and the
  // inside cells cover it.
  const GammaCone tri = triangle_cone();
  for (const auto& cell : refined.maximal_cones()) {
    const ScalarVec p = cell.as_cone().relint_point();
    if (tri.contains(p)) CHECK(tri.contains_cone(cell));
  }
  for (const auto& p : oracle::coverage_samples(fan, 400, 5)) {
    if (!tri.contains(p)) continue;
    bool covered = false;
    for (const auto& cell : refined.maximal_cones())
      if (tri.contains_cone(cell) && cell.contains(p)) covered = true;
    CHECK(covered);
  }
  // Refining a complete fan stays complete.
  const GammaFan again = refine_to_complete(refined);
  CHECK(is_complete(again));
}

TEST_CASE("support convexity") {
  CHECK(support_is_convex(GammaFan::from_cones(2, {triangle_cone()})).first);
  CHECK(support_is_convex(GammaFan::from_cones(1, complete_rank1())).first);
  // Two opposite wedges with a gap are not convex.
  const GammaFan gap =
      GammaFan::from_cones(1, {gc(1, {{{1}, "-1"}}), gc(1, {{{-1}, "-1"}})});
  CHECK_FALSE(support_is_convex(gap).first);
}

TEST_CASE("complete extension of a single cone keeps it intact") {
  const ValueGroup all = ValueGroup::whole_field();
  for (const auto& cone : {gc(1, {{{1}, "-1"}}), gc(1, {{{1}, "0"}, {{-1}, "1"}})}) {
    const GammaFan fan = GammaFan::from_cones(1, {cone});
    const GammaFan done = complete_extension(fan, all);
    CHECK(done.validation().ok);
    CHECK(is_complete(done));
    CHECK(done.has_cone(cone));
  }
}

TEST_CASE("complete extension is the identity on complete fans") {
  const GammaFan fan = GammaFan::from_cones(1, complete_rank1());
  const GammaFan done = complete_extension(fan, ValueGroup::whole_field());
  CHECK(done.equals(fan));
}

TEST_CASE("complete extension of the triangle cone in rank 2") {
  const GammaFan fan = GammaFan::from_cones(2, {triangle_cone()});
  const GammaFan done = complete_extension(fan, ValueGroup::whole_field());
  CHECK(done.validation().ok);
  CHECK(is_complete(done));
  CHECK(done.has_cone(triangle_cone()));
}

TEST_CASE("complete extension fills a non-convex gap") {
  const GammaFan fan =
      GammaFan::from_cones(1, {gc(1, {{{1}, "-1"}}), gc(1, {{{-1}, "-1"}})});
  const GammaFan done = complete_extension(fan, ValueGroup::whole_field());
  CHECK(done.validation().ok);
  CHECK(is_complete(done));
  CHECK(done.has_cone(gc(1, {{{1}, "-1"}})));
  CHECK(done.has_cone(gc(1, {{{-1}, "-1"}})));
}

TEST_CASE("complete extension keeps a lower-dimensional fan as faces") {
  // A single ray in rank 2 (the w1-axis at t = 0).
  const GammaCone ray = GammaCone::inherited(
      2,
      {{{BigInt(1), BigInt(0)}, Scalar(0)},
       {{BigInt(0), BigInt(1)}, Scalar(0)},
       {{BigInt(0), BigInt(-1)}, Scalar(0)}},
      true);
  REQUIRE(ray.dim() == 1);
  const GammaFan fan = GammaFan::from_cones(2, {ray});
  const GammaFan done = complete_extension(fan, ValueGroup::whole_field());
  CHECK(done.validation().ok);
  CHECK(is_complete(done));
  CHECK(done.has_cone(ray));
}

TEST_CASE("random convex-support extensions certify") {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<long> coord(-3, 3);
  std::uniform_int_distribution<long> off(-2, 2);
  int done_count = 0;
  while (done_count < 15) {
    // A random full-dimensional pointed cone in rank 2, split by a random
    // hyperplane into a two-cone fan with convex support.
    std::vector<GammaIneq> rows;
    for (int i = 0; i < 3; ++i)
      rows.push_back({{BigInt(coord(rng)), BigInt(coord(rng))}, Scalar(off(rng))});
    const GammaCone cone = GammaCone::inherited(2, rows);
    if (!cone.admissible().first || cone.dim() != 3) continue;
    GammaIneq split{{BigInt(coord(rng)), BigInt(coord(rng))}, Scalar(off(rng))};
    auto plus = rows, minus = rows;
    plus.push_back(split);
    minus.push_back({{-split.m[0], -split.m[1]}, -split.c});
    const GammaCone a = GammaCone::inherited(2, plus), b = GammaCone::inherited(2, minus);
    std::vector<GammaCone> cones;
    if (a.dim() == 3) cones.push_back(a);
    if (b.dim() == 3) cones.push_back(b);
    if (cones.empty()) continue;
    const GammaFan fan = GammaFan::from_cones(2, std::move(cones));
    if (!fan.validation().ok) continue;
    ++done_count;
    const GammaFan done = complete_extension(fan, ValueGroup::whole_field());
    CHECK(done.validation().ok);
    CHECK(is_complete(done));
    for (const auto& c : fan.maximal_cones()) CHECK(done.has_cone(c));
  }
}
