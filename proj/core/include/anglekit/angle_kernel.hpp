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

#include <compare>
#include <cstddef>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "anglekit/geom.hpp"

namespace anglekit {

/// Exact identity of an angle in [0, pi]: the sign of its cosine and the
/// reduced rational cos^2. The map is injective, so equal keys mean equal
/// angles.
struct ExactAngle {
  int cos_sign = 0;
  mpq_class cos_sq;

  friend bool operator==(const ExactAngle& a, const ExactAngle& b) {
    return a.cos_sign == b.cos_sign && a.cos_sq == b.cos_sq;
  }
  /// Orders by cosine, largest (smallest angle) last.
  friend std::strong_ordering operator<=>(const ExactAngle& a,
                                          const ExactAngle& b);
};

/// A float angle class produced by cluster_angles.
struct ClusteredAngle {
  int class_id = 0;
  double representative_cosine = 0.0;

  friend bool operator==(const ClusteredAngle& a, const ClusteredAngle& b) {
    return a.class_id == b.class_id;
  }
  friend std::strong_ordering operator<=>(const ClusteredAngle& a,
                                          const ClusteredAngle& b) {
    return a.class_id <=> b.class_id;
  }
};

class AngleKey {
 public:
  AngleKey(ExactAngle a) : key_(std::move(a)) {}      // NOLINT
  AngleKey(ClusteredAngle a) : key_(a) {}             // NOLINT

  bool is_exact() const { return std::holds_alternative<ExactAngle>(key_); }
  const ExactAngle& exact() const { return std::get<ExactAngle>(key_); }
  const ClusteredAngle& clustered() const {
    return std::get<ClusteredAngle>(key_);
  }
  /// Cosine as a double, for reporting.
  double cosine() const;
  std::string to_string() const;

  friend bool operator==(const AngleKey&, const AngleKey&) = default;
  friend std::strong_ordering operator<=>(const AngleKey& a,
                                          const AngleKey& b);

 private:
  std::variant<ExactAngle, ClusteredAngle> key_;
};

struct ClusterStats {
  double eps = 0.0;
  std::size_t num_classes = 0;
  /// Smallest gap between adjacent classes; +inf with fewer than two classes.
  double min_gap_between_classes = std::numeric_limits<double>::infinity();
  /// Largest max-minus-min inside one class.
  double max_spread_within_class = 0.0;
};

struct Clustering {
  std::vector<int> assignment;  // class id per input value
  std::vector<double> representatives;  // midpoint of each class's range
  ClusterStats stats;
};

/// Cosine of the angle at b; clamped to [-1, 1]. Exact points are rounded to
/// double first. Throws DegenerateInput if b coincides with a or c.
double angle_cosine(const Point& a, const Point& b, const Point& c);

/// Exact key of the angle at b. Throws ModeMismatch for float input.
ExactAngle angle_key_exact(const Point& a, const Point& b, const Point& c);

/// Single-linkage clustering of sorted values: a new class starts wherever
/// consecutive sorted values differ by more than eps. Class ids increase
/// with the cosine, so the result does not depend on input order.
Clustering cluster_angles(const std::vector<double>& cosines, double eps);

/// ((a-b).(c-b))^2 |d-e|^2 |f-e|^2 - ((d-e).(f-e))^2 |a-b|^2 |c-b|^2.
/// Zero iff the two angles have equal cos^2; the sign of the cosines must
/// be compared separately.
Scalar angle_equal_poly(const Point& a, const Point& b, const Point& c,
                        const Point& d, const Point& e, const Point& f);

namespace detail {

ExactAngle exact_key(const Vec3q& a, const Vec3q& b, const Vec3q& c);
double cosine(const Vec3d& a, const Vec3d& b, const Vec3d& c);

}  // namespace detail

}  // namespace anglekit
