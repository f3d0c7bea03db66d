#include <doctest.h>

#include "torva/projective.hpp"

using namespace torva;

namespace {

IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::optional<Scalar> h(const char* lit) { return Scalar::parse(lit); }
std::optional<Scalar> inf() { return std::nullopt; }

WeightedConfig cfg1(std::vector<IntVec> w, std::vector<std::optional<Scalar>> a) {
  return make_weighted_config(1, std::move(w), std::move(a), ValueGroup::whole_field());
}

WeightedConfig cfg2(std::vector<IntVec> w, std::vector<std::optional<Scalar>> a) {
  return make_weighted_config(2, std::move(w), std::move(a), ValueGroup::whole_field());
}

ToricContext ctx(int rank) {
  ToricContext c;
  c.rank = rank;
  c.gamma = ValueGroup::whole_field();
  return c;
}

}  // namespace

TEST_CASE("weight polytopes") {
  CHECK(weight_polytope(cfg1({iv({0}), iv({1})}, {h("0"), h("0")})).dim() == 1);
  const HPolyhedron point = weight_polytope(cfg1({iv({0}), iv({1})}, {h("0"), inf()}));
  CHECK(point.dim() == 0);
  CHECK(point.vertices() == std::vector<ScalarVec>{{Scalar(0)}});
  CHECK(weight_polytope(cfg2({iv({0, 0}), iv({1, 0}), iv({0, 1})},
                             {h("0"), h("0"), h("0")}))
            .vertices()
            .size() == 3);
}

TEST_CASE("regular subdivision of three collinear points") {
  // Heights (0,1,0): the middle lift stays above the hull.
  const auto faces = regular_subdivision(cfg1({iv({0}), iv({1}), iv({2})},
                                               {h("0"), h("1"), h("0")}));
  REQUIRE(faces.size() == 3);  // two vertices and one segment
  CHECK(faces[0].dim == 0);
  CHECK(faces[1].dim == 0);
  CHECK(faces[2].dim == 1);
  CHECK(faces[2].active == std::vector<int>{0, 2});

  // Heights (1,0,1): the configuration splits at the middle point.
  const auto split = regular_subdivision(cfg1({iv({0}), iv({1}), iv({2})},
                                               {h("1"), h("0"), h("1")}));
  REQUIRE(split.size() == 5);  // three vertices and two segments
  int cells = 0;
  for (const auto& f : split)
    if (f.dim == 1) ++cells;
  CHECK(cells == 2);

  // Flat heights: the trivial subdivision.
  const auto flat = regular_subdivision(cfg1({iv({0}), iv({1}), iv({2})},
                                              {h("0"), h("0"), h("0")}));
  REQUIRE(flat.size() == 3);
  CHECK(flat[2].active == std::vector<int>{0, 1, 2});  // middle point on the hull edge
}

TEST_CASE("dual complex of the projective line data") {
  const auto cells = dual_complex(cfg1({iv({0}), iv({1})}, {h("0"), h("0")}));
  REQUIRE(cells.size() == 3);
  CHECK(cells[0].dim == 0);
  CHECK(cells[0].active == std::vector<int>{0, 1});
  CHECK(cells[1].dim == 1);
  CHECK(cells[2].dim == 1);

  // Heights (0, l): the breakpoint moves to w = -l.
  const auto shifted = dual_complex(cfg1({iv({0}), iv({1})}, {h("0"), h("3/2")}));
  REQUIRE(shifted.size() == 3);
  CHECK(shifted[0].dim == 0);
  CHECK(shifted[0].body.vertices() ==
        std::vector<ScalarVec>{{Scalar{Rational(-3, 2)}}});

  // A single finite point: one cell, the whole line.
  const auto trivial = dual_complex(cfg1({iv({0})}, {h("0")}));
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].dim == 1);
  CHECK(trivial[0].body.lineality().size() == 1);
}

TEST_CASE("face and cell correspondence is inverse and dimension reversing") {
  const std::vector<WeightedConfig> fixtures = {
      cfg1({iv({0}), iv({1})}, {h("0"), h("0")}),
      cfg1({iv({0}), iv({1}), iv({2})}, {h("1"), h("0"), h("1")}),
      cfg2({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})},
           {h("0"), h("0"), h("0"), h("1")}),
      cfg2({iv({0, 0}), iv({1, 0}), iv({0, 1})}, {h("0"), h("0"), h("0")}),
  };
  for (const auto& cfg : fixtures) {
    const auto faces = regular_subdivision(cfg);
    for (const auto& q : faces) {
      const DualCell cell = face_to_cone(cfg, q);
      CHECK(q.dim + cell.dim == cfg.n);
      const SubdivisionFace back = cone_to_face(cfg, cell);
      CHECK(back.active == q.active);
    }
    for (const auto& cell : dual_complex(cfg)) {
      const SubdivisionFace q = cone_to_face(cfg, cell);
      CHECK(q.dim + cell.dim == cfg.n);
      const DualCell back = face_to_cone(cfg, q);
      CHECK(back.body.equals(cell.body));
    }
  }
  SubdivisionFace bogus;
  bogus.active = {0, 99};
  CHECK_THROWS_AS(face_to_cone(fixtures[0], bogus), DomainError);
}

TEST_CASE("generated fan of the projective line data") {
  const WeightedConfig cfg = cfg1({iv({0}), iv({1})}, {h("0"), h("0")});
  const GammaFan fan = generated_fan(cfg, ctx(1));
  CHECK(fan.maximal_cones().size() == 2);
  CHECK(fan.validation().ok);
  CHECK(is_complete(fan));

  const WeightedConfig shifted = cfg1({iv({0}), iv({1})}, {h("0"), h("3/2")});
  const GammaFan sfan = generated_fan(shifted, ctx(1));
  CHECK(sfan.maximal_cones().size() == 2);
  CHECK(is_complete(sfan));

  // A single point has a non-pointed linearity domain.
  CHECK_THROWS_AS(generated_fan(cfg1({iv({0})}, {h("0")}), ctx(1)), DomainError);
}

TEST_CASE("normalization fan equals the generated fan") {
  const std::vector<WeightedConfig> fixtures = {
      cfg1({iv({0}), iv({1})}, {h("0"), h("0")}),
      cfg1({iv({0}), iv({1})}, {h("0"), h("3/2")}),
      cfg1({iv({0}), iv({1}), iv({2})}, {h("1"), h("0"), h("1")}),
      cfg2({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})},
           {h("0"), h("0"), h("0"), h("1")}),
      cfg2({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})},
           {h("0"), h("0"), h("0"), h("-1")}),
  };
  for (const auto& cfg : fixtures) {
    const GammaFan a = normalization_fan(cfg, ctx(cfg.n));
    const GammaFan b = generated_fan(cfg, ctx(cfg.n));
    CHECK(a.equals(b));
    CHECK(a.validation().ok);
    CHECK(is_complete(a));
  }
}

TEST_CASE("a lifted point above the hull contributes no vertex cone") {
  // The midpoint of the long edge drops off the subdivision for positive
  // heights and stays for negative ones.
  const WeightedConfig drop = cfg2({iv({0, 0}), iv({2, 0}), iv({0, 2}), iv({1, 1})},
                                   {h("0"), h("0"), h("0"), h("1")});
  CHECK(normalization_fan(drop, ctx(2)).maximal_cones().size() == 3);

  const WeightedConfig keep = cfg2({iv({0, 0}), iv({2, 0}), iv({0, 2}), iv({1, 1})},
                                   {h("0"), h("0"), h("0"), h("-1")});
  CHECK(normalization_fan(keep, ctx(2)).maximal_cones().size() == 4);
}

TEST_CASE("orbit census") {
  const OrbitCensus line = orbit_census(cfg1({iv({0}), iv({1})}, {h("0"), h("0")}));
  CHECK(line.generic_faces.size() == 3);
  CHECK(line.special_faces.size() == 3);
  CHECK(line.components == 1);

  // A positive height on one corner splits the square into two triangles.
  const OrbitCensus square = orbit_census(cfg2(
      {iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})}, {h("0"), h("0"), h("0"), h("1")}));
  CHECK(square.components == 2);
  CHECK(square.generic_faces.size() == 9);  // 4 vertices + 4 edges + square

  const OrbitCensus flat = orbit_census(cfg2(
      {iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})}, {h("0"), h("0"), h("0"), h("0")}));
  CHECK(flat.components == 1);
  CHECK(flat.special_faces.size() == 9);
}

TEST_CASE("duplicate weights are flagged and the lowest height wins") {
  const WeightedConfig cfg = cfg1({iv({0}), iv({1}), iv({1})}, {h("0"), h("2"), h("0")});
  CHECK(cfg.duplicate_weights);
  const GammaFan fan = normalization_fan(cfg, ctx(1));
  const GammaFan plain = normalization_fan(cfg1({iv({0}), iv({1})}, {h("0"), h("0")}), ctx(1));
  CHECK(fan.equals(plain));
}

TEST_CASE("configuration validation") {
  CHECK_THROWS_AS(cfg1({iv({0})}, {inf()}), DomainError);
  CHECK_THROWS_AS(make_weighted_config(1, {iv({0})}, {h("1/3")},
                                       ValueGroup::with_generators({Scalar{Rational(1, 2)}})),
                  GammaViolation);
}
