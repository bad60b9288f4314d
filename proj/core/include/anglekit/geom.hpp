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

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace anglekit {

/// Arithmetic mode of a scalar, point or configuration.
enum class Mode { exact, floating };

const char* to_string(Mode mode);

/// Thrown when exact and floating values meet in one expression, or when
/// 2D and 3D vectors are mixed. Always a caller bug.
class ModeMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A coordinate value: either an arbitrary-precision rational kept in lowest
/// terms, or a binary64 float. Arithmetic never crosses modes silently.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  Scalar(double v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class v);             // NOLINT(google-explicit-constructor)
  Scalar(int v) : Scalar(static_cast<long>(v)) {}  // NOLINT
  Scalar(long num, unsigned long den = 1);

  static Scalar exact(const std::string& text);

  Mode mode() const {
    return std::holds_alternative<mpq_class>(value_) ? Mode::exact
                                                     : Mode::floating;
  }
  bool is_exact() const { return mode() == Mode::exact; }

  /// The rational value; throws ModeMismatch in floating mode.
  const mpq_class& rational() const;
  /// The value as a double (rationals are rounded).
  double to_double() const;
  int sign() const;
  bool is_zero() const { return sign() == 0; }

  std::string to_string() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Same mode and bit-identical value.
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  std::variant<mpq_class, double> value_;
};

/// A point in R^2 or R^3. 2D points carry z = 0 so every kernel treats both
/// dimensions the same way.
class Point {
 public:
  Point() = default;
  Point(Scalar x, Scalar y);
  Point(Scalar x, Scalar y, Scalar z);

  int dim() const { return dim_; }
  Mode mode() const { return coords_[0].mode(); }
  const Scalar& x() const { return coords_[0]; }
  const Scalar& y() const { return coords_[1]; }
  const Scalar& z() const { return coords_[2]; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const Point& a, const Point& b) = default;

 private:
  std::array<Scalar, 3> coords_{};
  int dim_ = 3;
};

/// Displacements share the point representation.
using Vector = Point;

Vector sub(const Point& p, const Point& q);
Scalar dot(const Vector& u, const Vector& v);
Scalar norm_sq(const Vector& u);

/// Float-mode coordinates closer than this in every component are the same
/// point.
inline constexpr double kDistinctThreshold = 1e-12;

/// Exact equality in exact mode; every coordinate within kDistinctThreshold
/// in float mode. Throws ModeMismatch on mixed modes.
bool coincide(const Point& p, const Point& q);

using Vec3d = std::array<double, 3>;
using Vec3q = std::array<mpq_class, 3>;

/// An ordered list of pairwise distinct points sharing one dimension and one
/// mode. Immutable after construction.
class PointConfig {
 public:
  PointConfig() = default;
  /// Throws std::invalid_argument on mixed dim/mode or duplicate points.
  explicit PointConfig(std::vector<Point> points, std::string label = {});

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  int dim() const { return dim_; }
  Mode mode() const { return mode_; }
  const std::string& label() const { return label_; }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }

  /// Coordinates rounded to double; valid in both modes.
  const std::vector<Vec3d>& doubles() const { return doubles_; }
  /// Exact coordinates; throws ModeMismatch for floating configs.
  std::vector<Vec3q> rationals() const;

  /// Copy with one point removed.
  PointConfig without(std::size_t index) const;

 private:
  std::vector<Point> points_;
  std::vector<Vec3d> doubles_;
  std::string label_;
  Mode mode_ = Mode::exact;
  int dim_ = 3;
};

}  // namespace anglekit
