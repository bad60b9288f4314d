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

// Typed 3-vector helpers shared by the kernels. T is double or mpq_class.

#include <array>
#include <cmath>

#include <gmpxx.h>

namespace anglekit::detail {

template <typename T>
using V3 = std::array<T, 3>;

template <typename T>
inline V3<T> sub(const V3<T>& a, const V3<T>& b) {
  return {T(a[0] - b[0]), T(a[1] - b[1]), T(a[2] - b[2])};
}

template <typename T>
inline V3<T> add(const V3<T>& a, const V3<T>& b) {
  return {T(a[0] + b[0]), T(a[1] + b[1]), T(a[2] + b[2])};
}

template <typename T>
inline V3<T> scale(const V3<T>& a, const T& s) {
  return {T(a[0] * s), T(a[1] * s), T(a[2] * s)};
}

template <typename T>
inline T dot(const V3<T>& a, const V3<T>& b) {
  return T(a[0] * b[0] + a[1] * b[1] + a[2] * b[2]);
}

template <typename T>
inline V3<T> cross(const V3<T>& a, const V3<T>& b) {
  return {T(a[1] * b[2] - a[2] * b[1]), T(a[2] * b[0] - a[0] * b[2]),
          T(a[0] * b[1] - a[1] * b[0])};
}

template <typename T>
inline T norm_sq(const V3<T>& a) {
  return dot(a, a);
}

template <typename T>
inline T det3(const V3<T>& a, const V3<T>& b, const V3<T>& c) {
  return dot(a, cross(b, c));
}

inline int sgn(double v) { return (v > 0) - (v < 0); }
inline int sgn(const mpq_class& v) { return ::sgn(v); }

inline bool is_zero(const V3<mpq_class>& v) {
  return ::sgn(v[0]) == 0 && ::sgn(v[1]) == 0 && ::sgn(v[2]) == 0;
}

inline bool is_zero(const V3<double>& v) {
  return v[0] == 0.0 && v[1] == 0.0 && v[2] == 0.0;
}

}  // namespace anglekit::detail
