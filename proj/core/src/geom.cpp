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

#include "anglekit/geom.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace anglekit {

const char* to_string(Mode mode) {
  return mode == Mode::exact ? "exact" : "float";
}

namespace {

[[noreturn]] void mismatch(const char* op) {
  throw ModeMismatch(std::string("mixed exact/float operands in ") + op);
}

template <typename Op>
Scalar combine(const Scalar& a, const Scalar& b, const char* name, Op op) {
  if (a.mode() != b.mode()) mismatch(name);
  if (a.is_exact()) return Scalar(mpq_class(op(a.rational(), b.rational())));
  return Scalar(op(a.to_double(), b.to_double()));
}

}  // namespace

Scalar::Scalar(mpq_class v) : value_(std::move(v)) {
  std::get<mpq_class>(value_).canonicalize();
}

Scalar::Scalar(long num, unsigned long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  value_ = std::move(q);
}

Scalar Scalar::exact(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("not a rational literal: " + text);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + text);
  return Scalar(std::move(q));
}

const mpq_class& Scalar::rational() const {
  if (!is_exact()) throw ModeMismatch("rational() on a float scalar");
  return std::get<mpq_class>(value_);
}

double Scalar::to_double() const {
  if (is_exact()) return std::get<mpq_class>(value_).get_d();
  return std::get<double>(value_);
}

int Scalar::sign() const {
  if (is_exact()) return ::sgn(std::get<mpq_class>(value_));
  const double v = std::get<double>(value_);
  return (v > 0) - (v < 0);
}

std::string Scalar::to_string() const {
  if (is_exact()) return std::get<mpq_class>(value_).get_str();
  std::ostringstream os;
  os.precision(17);
  os << std::get<double>(value_);
  return os.str();
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a, b, "+", [](const auto& x, const auto& y) { return x + y; });
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(a, b, "-", [](const auto& x, const auto& y) { return x - y; });
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(a, b, "*", [](const auto& x, const auto& y) { return x * y; });
}
Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return combine(a, b, "/", [](const auto& x, const auto& y) { return x / y; });
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(mpq_class(-rational()));
  return Scalar(-std::get<double>(value_));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) return false;
  if (a.is_exact()) return a.rational() == b.rational();
  return a.to_double() == b.to_double();
}

Point::Point(Scalar x, Scalar y)
    : coords_{std::move(x), std::move(y), Scalar()}, dim_(2) {
  if (coords_[0].mode() != coords_[1].mode()) mismatch("Point");
  if (!coords_[0].is_exact()) coords_[2] = Scalar(0.0);
}

Point::Point(Scalar x, Scalar y, Scalar z)
    : coords_{std::move(x), std::move(y), std::move(z)}, dim_(3) {
  if (coords_[0].mode() != coords_[1].mode() ||
      coords_[0].mode() != coords_[2].mode())
    mismatch("Point");
}

namespace {

void check_compatible(const Point& p, const Point& q, const char* op) {
  if (p.mode() != q.mode()) mismatch(op);
  if (p.dim() != q.dim())
    throw ModeMismatch(std::string("mixed 2D/3D operands in ") + op);
}

}  // namespace

Vector sub(const Point& p, const Point& q) {
  check_compatible(p, q, "sub");
  if (p.dim() == 2) return Vector(p.x() - q.x(), p.y() - q.y());
  return Vector(p.x() - q.x(), p.y() - q.y(), p.z() - q.z());
}

Scalar dot(const Vector& u, const Vector& v) {
  check_compatible(u, v, "dot");
  return u.x() * v.x() + u.y() * v.y() + u.z() * v.z();
}

Scalar norm_sq(const Vector& u) { return dot(u, u); }

bool coincide(const Point& a, const Point& b) {
  if (a.mode() != b.mode()) mismatch("coincide");
  if (a.mode() == Mode::exact) return a == b;
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::abs(a[i].to_double() - b[i].to_double()) > kDistinctThreshold)
      return false;
  }
  return true;
}

PointConfig::PointConfig(std::vector<Point> points, std::string label)
    : points_(std::move(points)), label_(std::move(label)) {
  if (!points_.empty()) {
    mode_ = points_.front().mode();
    dim_ = points_.front().dim();
  }
  doubles_.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Point& p = points_[i];
    if (p.mode() != mode_ || p.dim() != dim_)
      throw std::invalid_argument("point " + std::to_string(i) +
                                  " differs in mode or dimension");
    for (std::size_t j = 0; j < i; ++j) {
      if (coincide(points_[j], p))
        throw std::invalid_argument("points " + std::to_string(j) + " and " +
                                    std::to_string(i) + " coincide");
    }
    doubles_.push_back({p.x().to_double(), p.y().to_double(),
                        p.z().to_double()});
  }
}

std::vector<Vec3q> PointConfig::rationals() const {
  if (mode_ != Mode::exact)
    throw ModeMismatch("exact coordinates requested from a float config");
  std::vector<Vec3q> out;
  out.reserve(points_.size());
  for (const Point& p : points_)
    out.push_back({p.x().rational(), p.y().rational(), p.z().rational()});
  return out;
}

PointConfig PointConfig::without(std::size_t index) const {
  std::vector<Point> rest;
  rest.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (i != index) rest.push_back(points_[i]);
  return PointConfig(std::move(rest), label_);
}

}  // namespace anglekit
