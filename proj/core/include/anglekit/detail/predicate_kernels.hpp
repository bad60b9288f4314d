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

// Typed collinearity / concyclicity kernels. Exact mode tests for zero,
// float mode compares against a relative tolerance.

#include <cmath>
#include <type_traits>

#include "anglekit/detail/vec.hpp"

namespace anglekit::detail {

template <typename T>
inline bool near_zero(const T& value, double eps, double scale) {
  if constexpr (std::is_same_v<T, double>) {
    return std::abs(value) <= eps * scale;
  } else {
    (void)eps;
    (void)scale;
    return ::sgn(value) == 0;
  }
}

inline double to_d(double v) { return v; }
inline double to_d(const mpq_class& v) { return v.get_d(); }

/// Cross-product test; a and b are the two difference vectors from a common
/// point.
template <typename T>
bool collinear_vectors(const V3<T>& a, const V3<T>& b, double eps) {
  const V3<T> c = cross(a, b);
  if constexpr (std::is_same_v<T, double>) {
    const double scale = std::sqrt(norm_sq(a) * norm_sq(b));
    return near_zero(c[0], eps, scale) && near_zero(c[1], eps, scale) &&
           near_zero(c[2], eps, scale);
  } else {
    (void)eps;
    return is_zero(c);
  }
}

/// Circle through three non-collinear points.
template <typename T>
struct Circle {
  V3<T> origin;  // p
  V3<T> a;       // q - p
  V3<T> b;       // r - p
  V3<T> normal;  // a x b
  V3<T> center;
  T radius_sq;
};

template <typename T>
Circle<T> circle_through(const V3<T>& p, const V3<T>& q, const V3<T>& r) {
  Circle<T> c;
  c.origin = p;
  c.a = sub(q, p);
  c.b = sub(r, p);
  c.normal = cross(c.a, c.b);
  const T n2 = norm_sq(c.normal);
  // center = p + ((|a|^2 b - |b|^2 a) x (a x b)) / (2 |a x b|^2)
  const V3<T> w = sub(scale(c.b, T(norm_sq(c.a))), scale(c.a, T(norm_sq(c.b))));
  const V3<T> offset = scale(cross(w, c.normal), T(T(1) / T(2 * n2)));
  c.center = add(p, offset);
  c.radius_sq = norm_sq(offset);
  return c;
}

template <typename T>
bool on_circle(const Circle<T>& c, const V3<T>& s, double eps) {
  const V3<T> d = sub(s, c.origin);
  if constexpr (std::is_same_v<T, double>) {
    const double scale =
        std::sqrt(norm_sq(c.a) * norm_sq(c.b) * norm_sq(d));
    if (!near_zero(dot(d, c.normal), eps, scale)) return false;
    const double dist_sq = norm_sq(sub(s, c.center));
    return std::abs(dist_sq - c.radius_sq) <=
           eps * std::max(dist_sq, c.radius_sq);
  } else {
    (void)eps;
    if (::sgn(dot(d, c.normal)) != 0) return false;
    return norm_sq(sub(s, c.center)) == c.radius_sq;
  }
}

template <typename T>
bool coincident(const V3<T>& p, const V3<T>& q, double threshold) {
  if constexpr (std::is_same_v<T, double>) {
    return std::abs(p[0] - q[0]) <= threshold &&
           std::abs(p[1] - q[1]) <= threshold &&
           std::abs(p[2] - q[2]) <= threshold;
  } else {
    (void)threshold;
    return p == q;
  }
}

}  // namespace anglekit::detail
