// Copyright 2026 The anglekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "anglekit/predicates.hpp"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "anglekit/constructions.hpp"
#include "test_support.hpp"

namespace anglekit {
namespace {

using testing::exact3;
using testing::float3;

TEST(CollinearTest, Examples) {
  EXPECT_TRUE(collinear(exact3(0, 0, 0), exact3(1, 1, 1), exact3(2, 2, 2)));
  EXPECT_FALSE(collinear(exact3(0, 0, 0), exact3(1, 0, 0), exact3(0, 1, 0)));
  EXPECT_TRUE(collinear(exact3(0, 0, 0), exact3(2, 4, 6), exact3(1, 2, 3)));
  EXPECT_TRUE(collinear(float3(0, 0, 0), float3(0.1, 0.2, 0.3), float3(0.3, 0.6, 0.9)));
}

TEST(CollinearTest, CoincidentPointsThrow) {
  EXPECT_THROW(collinear(exact3(1, 0, 0), exact3(1, 0, 0), exact3(0, 1, 0)),
               DegenerateInput);
  EXPECT_THROW(collinear(float3(1, 0, 0), float3(0, 1, 0), float3(0, 1, 0)),
               DegenerateInput);
}

TEST(ConcyclicTest, Examples) {
  EXPECT_TRUE(concyclic(exact3(1, 0, 0), exact3(0, 1, 0), exact3(-1, 0, 0),
                        exact3(0, -1, 0)));
  EXPECT_FALSE(concyclic(exact3(0, 0, 0), exact3(1, 0, 0), exact3(0, 1, 0),
                         exact3(0, 0, 1)));
  EXPECT_FALSE(concyclic(exact3(0, 0, 0), exact3(1, 0, 0), exact3(0, 1, 0),
                         exact3(2, 2, 0)));
  // same circle, tilted out of the xy-plane
  EXPECT_TRUE(concyclic(exact3(0, 0, 3), exact3(2, 2, 1), exact3(0, 0, -3),
                        exact3(-2, -2, 1)));
  EXPECT_FALSE(concyclic(exact3(0, 0, 3), exact3(2, 2, 1), exact3(0, 0, -3),
                         exact3(-2, -2, 2)));
}

TEST(ConcyclicTest, CollinearBaseThrows) {
  EXPECT_THROW(concyclic(exact3(0, 0, 0), exact3(1, 1, 1), exact3(2, 2, 2),
                         exact3(0, 1, 0)),
               DegenerateInput);
}

// Independent route: solve the 2x2 system for the in-plane circumcenter
// O = p + s a + t b with |O-p| = |O-q| = |O-r|, then test s directly.
bool concyclic_oracle(const Point& p, const Point& q, const Point& r, const Point& s) {
  const Vector a = sub(q, p), b = sub(r, p), d = sub(s, p);
  const mpq_class aa = dot(a, a).rational(), ab = dot(a, b).rational(),
                  bb = dot(b, b).rational();
  const mpq_class det = 4 * (aa * bb - ab * ab);
  const mpq_class sc = (aa * 2 * bb - bb * 2 * ab) / det;
  const mpq_class tc = (2 * aa * bb - 2 * ab * aa) / det;
  // triple product a . (b x d)
  const mpq_class ax = a.x().rational(), ay = a.y().rational(), az = a.z().rational();
  const mpq_class bx = b.x().rational(), by = b.y().rational(), bz = b.z().rational();
  const mpq_class dx = d.x().rational(), dy = d.y().rational(), dz = d.z().rational();
  const mpq_class triple =
      ax * (by * dz - bz * dy) - ay * (bx * dz - bz * dx) + az * (bx * dy - by * dx);
  if (triple != 0) return false;
  const mpq_class ox = sc * ax + tc * bx, oy = sc * ay + tc * by, oz = sc * az + tc * bz;
  const mpq_class r2 = ox * ox + oy * oy + oz * oz;
  const mpq_class ex = dx - ox, ey = dy - oy, ez = dz - oz;
  return ex * ex + ey * ey + ez * ez == r2;
}

// Rational point on the unit circle, then rotated, scaled and shifted.
std::vector<Point> random_rational_circle(std::mt19937_64& rng, int count) {
  const auto rot = testing::random_rational_rotation(rng);
  const mpq_class r = testing::random_rational(rng, 5, 3);
  const mpq_class scale = 1 + r * r;
  const std::array<mpq_class, 3> shift = {testing::random_rational(rng),
                                          testing::random_rational(rng),
                                          testing::random_rational(rng)};
  std::vector<Point> out;
  std::vector<mpq_class> used;
  while (static_cast<int>(out.size()) < count) {
    const mpq_class t = testing::random_rational(rng, 20, 7);
    if (std::find(used.begin(), used.end(), t) != used.end()) continue;
    used.push_back(t);
    const mpq_class den = 1 + t * t;
    const Point on(Scalar(mpq_class((1 - t * t) / den)), Scalar(mpq_class(2 * t / den)),
                   Scalar(0));
    out.push_back(testing::transform(on, rot, scale, shift));
  }
  return out;
}

// Four pairwise distinct random points.
std::vector<Point> random_quad(std::mt19937_64& rng) {
  std::vector<Point> quad;
  while (quad.size() < 4) {
    Point p = testing::random_exact_point(rng);
    if (std::none_of(quad.begin(), quad.end(), [&](const Point& q) { return q == p; }))
      quad.push_back(p);
  }
  return quad;
}

TEST(ConcyclicPropertyTest, AgreesWithOracleOnRandomQuadruples) {
  std::mt19937_64 rng(2024);
  int positives = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    std::vector<Point> quad;
    if (iter % 2 == 0) {
      quad = random_rational_circle(rng, 4);
      if (iter % 4 == 0) {
        // perturb the last point within the plane of the circle or off it
        quad[3] = Point(quad[3].x() + Scalar(1, 97), quad[3].y(), quad[3].z());
      }
    } else {
      quad = random_quad(rng);
    }
    if (collinear(quad[0], quad[1], quad[2])) continue;
    const bool expected = concyclic_oracle(quad[0], quad[1], quad[2], quad[3]);
    positives += expected;
    EXPECT_EQ(concyclic(quad[0], quad[1], quad[2], quad[3]), expected);
  }
  EXPECT_GT(positives, 200);
}

TEST(PredicatePropertyTest, PermutationInvariance) {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<Point> quad = iter % 2 ? random_rational_circle(rng, 4)
                                       : random_quad(rng);
    const bool base = concyclic(quad[0], quad[1], quad[2], quad[3]);
    std::array<int, 4> idx = {0, 1, 2, 3};
    do {
      EXPECT_EQ(concyclic(quad[idx[0]], quad[idx[1]], quad[idx[2]], quad[idx[3]]), base);
    } while (std::next_permutation(idx.begin(), idx.end()));

    std::array<int, 3> tri = {0, 1, 2};
    const Point line_pt(quad[0].x() * Scalar(3) - quad[1].x() * Scalar(2),
                        quad[0].y() * Scalar(3) - quad[1].y() * Scalar(2),
                        quad[0].z() * Scalar(3) - quad[1].z() * Scalar(2));
    const std::array<Point, 3> pts = {quad[0], quad[1], iter % 3 ? quad[2] : line_pt};
    const bool col = collinear(pts[0], pts[1], pts[2]);
    if (iter % 3 == 0) EXPECT_TRUE(col);
    do {
      EXPECT_EQ(collinear(pts[tri[0]], pts[tri[1]], pts[tri[2]]), col);
    } while (std::next_permutation(tri.begin(), tri.end()));
  }
}

TEST(PredicatePropertyTest, SimilarityInvarianceExact) {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    const auto rot = testing::random_rational_rotation(rng);
    mpq_class scale = testing::random_rational(rng);
    if (scale == 0) scale = 3;
    const std::array<mpq_class, 3> shift = {testing::random_rational(rng),
                                            testing::random_rational(rng),
                                            testing::random_rational(rng)};
    std::vector<Point> quad = iter % 2 ? random_rational_circle(rng, 4)
                                       : random_quad(rng);
    std::vector<Point> moved;
    for (const Point& p : quad) moved.push_back(testing::transform(p, rot, scale, shift));
    if (collinear(quad[0], quad[1], quad[2])) continue;
    EXPECT_EQ(concyclic(quad[0], quad[1], quad[2], quad[3]),
              concyclic(moved[0], moved[1], moved[2], moved[3]));
    EXPECT_EQ(collinear(quad[0], quad[1], quad[3]), collinear(moved[0], moved[1], moved[3]));
  }
}

TEST(PredicatePropertyTest, FloatAgreesWithExactOnWellSeparatedInputs) {
  std::mt19937_64 rng(8);
  auto to_float = [](const Point& p) {
    return float3(p.x().to_double(), p.y().to_double(), p.z().to_double());
  };
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<Point> quad = iter % 2 ? random_rational_circle(rng, 4)
                                       : random_quad(rng);
    if (collinear(quad[0], quad[1], quad[2])) continue;
    EXPECT_EQ(concyclic(quad[0], quad[1], quad[2], quad[3]),
              concyclic(to_float(quad[0]), to_float(quad[1]), to_float(quad[2]),
                        to_float(quad[3])));
  }
}

TEST(VerifyTest, HelixIsInGeneralPosition) {
  const ViolationReport r = verify_general_position(cyl_helix(12));
  EXPECT_TRUE(r.is_general_position);
  EXPECT_TRUE(r.collinear_triples.empty());
  EXPECT_TRUE(r.concyclic_quadruples.empty());
}

TEST(VerifyTest, UnitSquareIsOneConcyclicQuadruple) {
  const ViolationReport r = verify_general_position(testing::unit_square());
  EXPECT_FALSE(r.is_general_position);
  EXPECT_TRUE(r.collinear_triples.empty());
  ASSERT_EQ(r.concyclic_quadruples.size(), 1u);
  EXPECT_EQ(r.concyclic_quadruples[0], (std::array<std::size_t, 4>{0, 1, 2, 3}));
}

TEST(VerifyTest, ReportsZAxisTriple) {
  std::vector<Point> pts = {exact3(3, 1, 4), exact3(0, 0, 1), exact3(-2, 7, 1),
                            exact3(0, 0, -5), exact3(0, 0, 9)};
  const ViolationReport r = verify_general_position(PointConfig(pts));
  ASSERT_EQ(r.collinear_triples.size(), 1u);
  EXPECT_EQ(r.collinear_triples[0], (std::array<std::size_t, 3>{1, 3, 4}));
  EXPECT_FALSE(r.is_general_position);
}

TEST(VerifyTest, SmallConfigsAreClean) {
  EXPECT_TRUE(verify_general_position(PointConfig()).is_general_position);
  EXPECT_TRUE(verify_general_position(PointConfig({exact3(0, 0, 0), exact3(1, 0, 0)}))
                  .is_general_position);
}

TEST(VerifyTest, ThreadCountDoesNotChangeReport) {
  const PointConfig c = sunshine(4).config;
  const ViolationReport one = verify_general_position(c, {}, 1);
  const ViolationReport four = verify_general_position(c, {}, 4);
  EXPECT_EQ(one.collinear_triples, four.collinear_triples);
  EXPECT_EQ(one.concyclic_quadruples, four.concyclic_quadruples);
}

TEST(VerifyTest, GeneratorsProduceGeneralPosition) {
  for (int n : {5, 29, 77})
    EXPECT_TRUE(verify_general_position(cones_construction(n, 3).config).is_general_position)
        << n;
  for (int n : {3, 10, 25, 40})
    EXPECT_TRUE(verify_general_position(conchospiral(n, 0.1)).is_general_position) << n;
}

}  // namespace
}  // namespace anglekit
