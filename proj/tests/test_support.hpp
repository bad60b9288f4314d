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

#pragma once

// Generators shared by the property tests.

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "anglekit/geom.hpp"

namespace anglekit::testing {

using Mat3q = std::array<std::array<mpq_class, 3>, 3>;

inline mpq_class random_rational(std::mt19937_64& rng, long range = 50,
                                 unsigned long max_den = 12) {
  const long num = static_cast<long>(rng() % (2 * range + 1)) - range;
  const unsigned long den = 1 + rng() % max_den;
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

inline Point random_exact_point(std::mt19937_64& rng, int dim = 3) {
  if (dim == 2) return Point(Scalar(random_rational(rng)), Scalar(random_rational(rng)));
  return Point(Scalar(random_rational(rng)), Scalar(random_rational(rng)),
               Scalar(random_rational(rng)));
}

inline Point random_float_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  return Point(Scalar(u(rng)), Scalar(u(rng)), Scalar(u(rng)));
}

/// Rational orthogonal matrix from a random skew matrix S via the Cayley
/// transform Q = (I - S)(I + S)^{-1}.
inline Mat3q random_rational_rotation(std::mt19937_64& rng) {
  const mpq_class a = random_rational(rng, 5, 3), b = random_rational(rng, 5, 3),
                  c = random_rational(rng, 5, 3);
  const Mat3q s = {{{0, -a, b}, {a, 0, -c}, {-b, c, 0}}};
  Mat3q plus, minus;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const mpq_class id = i == j ? 1 : 0;
      plus[i][j] = id + s[i][j];
      minus[i][j] = id - s[i][j];
    }
  // inverse of plus via adjugate
  const auto& m = plus;
  Mat3q adj;
  adj[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  adj[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
  adj[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
  adj[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
  adj[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
  adj[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
  adj[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
  adj[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
  adj[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  const mpq_class det =
      m[0][0] * adj[0][0] + m[0][1] * adj[1][0] + m[0][2] * adj[2][0];
  Mat3q q;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      mpq_class sum = 0;
      for (int k = 0; k < 3; ++k) sum += minus[i][k] * adj[k][j];
      q[i][j] = sum / det;
      q[i][j].canonicalize();
    }
  return q;
}

/// p -> scale * Q p + shift, exact.
inline Point transform(const Point& p, const Mat3q& q, const mpq_class& scale,
                       const std::array<mpq_class, 3>& shift) {
  std::array<mpq_class, 3> out;
  for (int i = 0; i < 3; ++i) {
    mpq_class sum = 0;
    for (int k = 0; k < 3; ++k) sum += q[i][k] * p[static_cast<std::size_t>(k)].rational();
    out[i] = scale * sum + shift[i];
  }
  return Point(Scalar(out[0]), Scalar(out[1]), Scalar(out[2]));
}

inline Point exact3(long x, long y, long z) {
  return Point(Scalar(x), Scalar(y), Scalar(z));
}

inline Point float3(double x, double y, double z) {
  return Point(Scalar(x), Scalar(y), Scalar(z));
}

inline PointConfig exact_config(const std::vector<std::array<long, 2>>& xy) {
  std::vector<Point> pts;
  for (const auto& [x, y] : xy) pts.emplace_back(Scalar(x), Scalar(y));
  return PointConfig(std::move(pts));
}

inline PointConfig unit_square() {
  return exact_config({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

// Builds a sextuple whose second window is a similar copy of the first,
// the supplementary angle (same cos^2, opposite sign), or unrelated.
inline std::array<Point, 6> random_sextuple(std::mt19937_64& rng, int kind) {
  std::array<Point, 6> s;
  do {
    s[0] = random_exact_point(rng);
    s[1] = random_exact_point(rng);
    s[2] = random_exact_point(rng);
  } while (s[0] == s[1] || s[1] == s[2]);
  const auto rot = random_rational_rotation(rng);
  const mpq_class scale = 1 + mpq_class(static_cast<long>(rng() % 5), 3);
  const std::array<mpq_class, 3> shift = {random_rational(rng),
                                          random_rational(rng),
                                          random_rational(rng)};
  auto t = [&](const Point& p) { return transform(p, rot, scale, shift); };
  switch (kind) {
    case 0:
      s[3] = t(s[0]), s[4] = t(s[1]), s[5] = t(s[2]);
      break;
    case 1: {
      // reflect a through b: the angle becomes pi minus the original
      const Point ref(s[1].x() * Scalar(2) - s[0].x(), s[1].y() * Scalar(2) - s[0].y(),
                      s[1].z() * Scalar(2) - s[0].z());
      s[3] = t(ref), s[4] = t(s[1]), s[5] = t(s[2]);
      break;
    }
    default:
      do {
        s[3] = random_exact_point(rng);
        s[4] = random_exact_point(rng);
        s[5] = random_exact_point(rng);
      } while (s[3] == s[4] || s[4] == s[5]);
  }
  return s;
}

}  // namespace anglekit::testing
