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

#include "anglekit/angle_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "anglekit/detail/vec.hpp"
#include "anglekit/predicates.hpp"

namespace anglekit {

std::strong_ordering operator<=>(const ExactAngle& a, const ExactAngle& b) {
  if (a.cos_sign != b.cos_sign) return a.cos_sign <=> b.cos_sign;
  const int c = cmp(a.cos_sq, b.cos_sq);
  const int directed = a.cos_sign < 0 ? -c : c;
  return directed <=> 0;
}

std::strong_ordering operator<=>(const AngleKey& a, const AngleKey& b) {
  if (a.is_exact() != b.is_exact())
    return a.is_exact() ? std::strong_ordering::less
                        : std::strong_ordering::greater;
  if (a.is_exact()) return a.exact() <=> b.exact();
  return a.clustered() <=> b.clustered();
}

double AngleKey::cosine() const {
  if (!is_exact()) return clustered().representative_cosine;
  const ExactAngle& e = exact();
  return e.cos_sign * std::sqrt(e.cos_sq.get_d());
}

std::string AngleKey::to_string() const {
  std::ostringstream os;
  if (is_exact()) {
    os << (exact().cos_sign < 0 ? "-" : exact().cos_sign > 0 ? "+" : "0")
       << exact().cos_sq.get_str();
  } else {
    os.precision(17);
    os << "#" << clustered().class_id << ":" << clustered().representative_cosine;
  }
  return os.str();
}

namespace detail {

ExactAngle exact_key(const Vec3q& a, const Vec3q& b, const Vec3q& c) {
  const Vec3q u = sub(a, b);
  const Vec3q v = sub(c, b);
  const mpq_class nu = norm_sq(u);
  const mpq_class nv = norm_sq(v);
  if (::sgn(nu) == 0 || ::sgn(nv) == 0)
    throw DegenerateInput("angle vertex coincides with an endpoint");
  const mpq_class d = dot(u, v);
  ExactAngle key;
  key.cos_sign = ::sgn(d);
  key.cos_sq = d * d / (nu * nv);
  key.cos_sq.canonicalize();
  return key;
}

double cosine(const Vec3d& a, const Vec3d& b, const Vec3d& c) {
  const Vec3d u = sub(a, b);
  const Vec3d v = sub(c, b);
  const double nu = norm_sq(u);
  const double nv = norm_sq(v);
  if (nu == 0.0 || nv == 0.0)
    throw DegenerateInput("angle vertex coincides with an endpoint");
  return std::clamp(dot(u, v) / (std::sqrt(nu) * std::sqrt(nv)), -1.0, 1.0);
}

}  // namespace detail

namespace {

Vec3d to_vec3d(const Point& p) {
  return {p.x().to_double(), p.y().to_double(), p.z().to_double()};
}

Vec3q to_vec3q(const Point& p) {
  return {p.x().rational(), p.y().rational(), p.z().rational()};
}

}  // namespace

double angle_cosine(const Point& a, const Point& b, const Point& c) {
  if (a.mode() != b.mode() || b.mode() != c.mode())
    throw ModeMismatch("angle_cosine: mixed modes");
  return detail::cosine(to_vec3d(a), to_vec3d(b), to_vec3d(c));
}

ExactAngle angle_key_exact(const Point& a, const Point& b, const Point& c) {
  if (a.mode() != Mode::exact || b.mode() != Mode::exact ||
      c.mode() != Mode::exact)
    throw ModeMismatch(
        "angle_key_exact needs exact points; use cluster_angles for floats");
  return detail::exact_key(to_vec3q(a), to_vec3q(b), to_vec3q(c));
}

Clustering cluster_angles(const std::vector<double>& cosines, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  Clustering out;
  out.stats.eps = eps;
  out.assignment.assign(cosines.size(), 0);
  if (cosines.empty()) return out;
  for (double v : cosines) {
    if (!(v >= -1.0 && v <= 1.0))
      throw std::invalid_argument("cosine outside [-1, 1]");
  }

  std::vector<std::size_t> order(cosines.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return cosines[i] < cosines[j];
  });

  int cls = 0;
  double class_min = cosines[order[0]];
  double prev = class_min;
  auto close_class = [&](double class_max) {
    out.representatives.push_back(0.5 * (class_min + class_max));
    out.stats.max_spread_within_class =
        std::max(out.stats.max_spread_within_class, class_max - class_min);
  };
  for (std::size_t idx : order) {
    const double v = cosines[idx];
    const double gap = v - prev;
    if (gap > eps) {
      close_class(prev);
      out.stats.min_gap_between_classes =
          std::min(out.stats.min_gap_between_classes, gap);
      ++cls;
      class_min = v;
    }
    out.assignment[idx] = cls;
    prev = v;
  }
  close_class(prev);
  out.stats.num_classes = static_cast<std::size_t>(cls) + 1;
  return out;
}

namespace {

template <typename T>
T equal_poly(const detail::V3<T>& a, const detail::V3<T>& b,
             const detail::V3<T>& c, const detail::V3<T>& d,
             const detail::V3<T>& e, const detail::V3<T>& f) {
  using namespace detail;
  const V3<T> u1 = sub(a, b), v1 = sub(c, b);
  const V3<T> u2 = sub(d, e), v2 = sub(f, e);
  const T nu1 = norm_sq(u1), nv1 = norm_sq(v1);
  const T nu2 = norm_sq(u2), nv2 = norm_sq(v2);
  if (sgn(nu1) == 0 || sgn(nv1) == 0 || sgn(nu2) == 0 || sgn(nv2) == 0)
    throw DegenerateInput("angle_equal_poly: degenerate window");
  const T d1 = dot(u1, v1);
  const T d2 = dot(u2, v2);
  return T(d1 * d1 * nu2 * nv2 - d2 * d2 * nu1 * nv1);
}

}  // namespace

Scalar angle_equal_poly(const Point& a, const Point& b, const Point& c,
                        const Point& d, const Point& e, const Point& f) {
  const Mode m = a.mode();
  for (const Point* p : {&b, &c, &d, &e, &f})
    if (p->mode() != m) throw ModeMismatch("angle_equal_poly: mixed modes");
  if (m == Mode::exact)
    return Scalar(equal_poly(to_vec3q(a), to_vec3q(b), to_vec3q(c),
                             to_vec3q(d), to_vec3q(e), to_vec3q(f)));
  return Scalar(equal_poly(to_vec3d(a), to_vec3d(b), to_vec3d(c), to_vec3d(d),
                           to_vec3d(e), to_vec3d(f)));
}

}  // namespace anglekit
