#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "torva/cone.hpp"

using namespace torva;

namespace {

ScalarVec sv(std::initializer_list<long> xs) {
  ScalarVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("positive quadrant round trip") {
  const HCone quad(2, {sv({1, 0}), sv({0, 1})});
  const VRep& g = quad.generators();
  CHECK(g.lineality.empty());
  REQUIRE(g.rays.size() == 2);
  CHECK(g.rays[0] == sv({0, 1}));
  CHECK(g.rays[1] == sv({1, 0}));
  CHECK(quad.dim() == 2);
  CHECK(quad.is_pointed());
}

TEST_CASE("halfplane slab cone") {
  // {(w,t) : w + t >= 0, t >= 0} has rays (1,0) and (-1,1).
  const HCone c(2, {sv({1, 1}), sv({0, 1})});
  const VRep& g = c.generators();
  REQUIRE(g.rays.size() == 2);
  CHECK(std::find(g.rays.begin(), g.rays.end(), sv({-1, 1})) != g.rays.end());
  CHECK(std::find(g.rays.begin(), g.rays.end(), sv({1, 0})) != g.rays.end());
}

TEST_CASE("no inequalities give the whole plane") {
  const HCone all = HCone::full_space(2);
  CHECK(all.generators().rays.empty());
  CHECK(all.lineality_dim() == 2);
  CHECK(all.dim() == 2);
}

TEST_CASE("dual cones") {
  const HCone quad(2, {sv({1, 0}), sv({0, 1})});
  CHECK(quad.dual().equals(quad));

  const HCone c = HCone::from_generators(2, {sv({-1, 0}), sv({-1, 1})});
  const HCone d = c.dual();
  const HCone expected = HCone::from_generators(2, {sv({0, 1}), sv({-1, -1})});
  CHECK(d.equals(expected));

  const HCone zero = HCone::from_generators(2, {});
  CHECK(zero.dim() == 0);
  CHECK(zero.dual().dim() == 2);
  CHECK(zero.dual().lineality_dim() == 2);
}

TEST_CASE("faces and intersections of the quadrant") {
  const HCone quad(2, {sv({1, 0}), sv({0, 1})});
  const HCone xaxis = quad.face_at(sv({1, 0}));
  CHECK(xaxis.equals(HCone::from_generators(2, {sv({1, 0})})));
  CHECK(is_face_of(xaxis, quad));

  const HCone lower(2, {sv({0, -1})});
  CHECK(quad.intersect(lower).equals(HCone::from_generators(2, {sv({1, 0})})));

  const auto faces = faces_of(quad);
  CHECK(faces.size() == 4);  // origin, two rays, the cone
  CHECK_THROWS_AS(quad.face_at(sv({-1, 0})), DomainError);
}

TEST_CASE("triangle vertices match the pairwise-solve oracle") {
  std::vector<HPolyhedron::Ineq> ineqs = {{sv({1, 0}), Scalar(0)},
                                          {sv({0, 1}), Scalar(0)},
                                          {sv({-1, -1}), Scalar(5)}};
  const HPolyhedron tri(2, ineqs);
  const auto vs = tri.vertices();
  CHECK(vs == oracle::vertices_2d(ineqs));
  REQUIRE(vs.size() == 3);
  CHECK(tri.dim() == 2);
  CHECK(tri.rays().empty());
}

TEST_CASE("random plane cones agree with the boundary-direction oracle") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> coord(-4, 4);
  int tested = 0;
  while (tested < 60) {
    std::vector<ScalarVec> ineqs;
    const int k = 1 + int(rng() % 3);
    for (int i = 0; i < k; ++i) {
      ScalarVec a = sv({coord(rng), coord(rng)});
      if (a[0].is_zero() && a[1].is_zero()) continue;
      ineqs.push_back(std::move(a));
    }
    if (ineqs.empty()) continue;
    const HCone c(2, ineqs);
    if (c.lineality_dim() != 0) continue;  // oracle is for pointed cones
    ++tested;
    CHECK(c.generators().rays == oracle::rays_2d(ineqs));
  }
}

TEST_CASE("H to V to H round trip preserves the solution set") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<long> coord(-3, 3);
  for (int dim = 2; dim <= 4; ++dim) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<ScalarVec> ineqs;
      const int k = 1 + int(rng() % (dim + 1));
      for (int i = 0; i < k; ++i) {
        ScalarVec a;
        for (int j = 0; j < dim; ++j) a.emplace_back(coord(rng));
        ineqs.push_back(std::move(a));
      }
      const HCone c(dim, ineqs);
      const VRep& g = c.generators();
      const HCone back = HCone::from_generators(dim, g.rays, g.lineality);
      CHECK(back.equals(c));
      CHECK(c.contains_cone(back));
      CHECK(back.contains_cone(c));
    }
  }
}

TEST_CASE("double dual is the identity on random cones") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> coord(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = 2 + int(rng() % 2);
    std::vector<ScalarVec> rays;
    for (int i = 0; i < 3; ++i) {
      ScalarVec r;
      for (int j = 0; j < dim; ++j) r.emplace_back(coord(rng));
      rays.push_back(std::move(r));
    }
    const HCone c = HCone::from_generators(dim, rays);
    CHECK(c.dual().dual().equals(c));
  }
}

TEST_CASE("face generated by a point contains it in the relative interior") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<long> coord(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const int dim = 2 + int(rng() % 2);
    std::vector<ScalarVec> ineqs;
    for (int i = 0; i < dim; ++i) {
      ScalarVec a;
      for (int j = 0; j < dim; ++j) a.emplace_back(coord(rng));
      ineqs.push_back(std::move(a));
    }
    const HCone c(dim, ineqs);
    for (const auto& r : c.generators().rays) {
      const HCone f = c.face_at(r);
      CHECK(is_face_of(f, c));
      CHECK(f.contains(r));
      // The point is tight exactly on the face's implicit equalities.
      CHECK(f.face_at(r).equals(f));
    }
  }
}

TEST_CASE("midpoints across distinct facets are interior") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<long> coord(-3, 3);
  int tested = 0;
  while (tested < 25) {
    const int dim = 2 + int(rng() % 2);
    std::vector<ScalarVec> rays;
    for (int i = 0; i < dim + 1; ++i) {
      ScalarVec r;
      for (int j = 0; j < dim; ++j) r.emplace_back(coord(rng));
      rays.push_back(std::move(r));
    }
    const HCone c = HCone::from_generators(dim, rays);
    if (c.dim() != dim || c.lineality_dim() != 0) continue;
    const auto& facet_idx = c.facet_indices();
    if (facet_idx.size() < 2) continue;
    ++tested;
    for (size_t a = 0; a < facet_idx.size(); ++a)
      for (size_t b = a + 1; b < facet_idx.size(); ++b) {
        auto cut = [&](size_t which) {
          auto ineqs = c.inequalities();
          ScalarVec neg = c.inequalities()[size_t(facet_idx[which])];
          for (auto& x : neg) x = -x;
          ineqs.push_back(std::move(neg));
          return HCone(dim, std::move(ineqs));
        };
        const ScalarVec pa = cut(a).relint_point();
        const ScalarVec pb = cut(b).relint_point();
        ScalarVec mid(size_t(dim), Scalar(0));
        for (int j = 0; j < dim; ++j) mid[size_t(j)] = pa[size_t(j)] + pb[size_t(j)];
        // Interior: strictly positive on every facet inequality.
        for (int idx : facet_idx)
          CHECK(dot(c.inequalities()[size_t(idx)], mid).sign() > 0);
      }
  }
}

TEST_CASE("empty and unbounded polyhedra") {
  const HPolyhedron empty(1, {{sv({1}), Scalar(0)}, {sv({-1}), Scalar(-1)}});
  CHECK(empty.is_empty());
  CHECK(empty.dim() == -1);

  const HPolyhedron halfline(1, {{sv({1}), Scalar(-1)}});
  CHECK_FALSE(halfline.is_empty());
  CHECK(halfline.vertices() == std::vector<ScalarVec>{sv({1})});
  CHECK(halfline.rays() == std::vector<ScalarVec>{sv({1})});
  CHECK(halfline.recession_cone().equals(HCone(1, {sv({1})})));
}

TEST_CASE("polytope hull of points") {
  const HPolyhedron p = polytope_hull(2, {sv({0, 0}), sv({1, 0}), sv({0, 1}), sv({2, 0})});
  const auto vs = p.vertices();
  REQUIRE(vs.size() == 3);  // (1,0) is inside the hull edge
  CHECK(std::find(vs.begin(), vs.end(), sv({2, 0})) != vs.end());
  CHECK(faces_of(p).size() == 7);  // 3 vertices + 3 edges + the polytope
}
