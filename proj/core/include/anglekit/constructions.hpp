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

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "anglekit/geom.hpp"
#include "anglekit/predicates.hpp"

namespace anglekit {

/// A generator could not produce a configuration meeting its contract. The
/// report lists the violations of the last attempt.
class GeneratorError : public std::runtime_error {
 public:
  GeneratorError(const std::string& what, ViolationReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const ViolationReport& report() const { return report_; }

 private:
  ViolationReport report_;
};

/// A deterministic construction failed its general-position check.
class NotInGeneralPosition : public GeneratorError {
 public:
  using GeneratorError::GeneratorError;
};

/// Azimuth re-randomization ran out of attempts.
class RetryExhausted : public GeneratorError {
 public:
  using GeneratorError::GeneratorError;
};

inline constexpr double kDefaultBeta = 0.1;
inline constexpr int kRetryBudget = 1000;

/// A generated configuration with its designated points. Generators without
/// designated points use a = 0, b = 1.
struct Construction {
  PointConfig config;
  std::size_t a = 0;
  std::size_t b = 1;
};

/// (e^{bj} cos bj, e^{bj} sin bj) for j = 1..n. Verified on construction;
/// throws NotInGeneralPosition when beta is too large.
PointConfig log_spiral(int n, double beta = kDefaultBeta);

/// (cos 2pi j/n, sin 2pi j/n, j/n) for j = 1..n.
PointConfig cyl_helix(int n);

/// (e^{bj} cos bj, e^{bj} sin bj, e^{bj}) for j = 1..n. Verified like
/// log_spiral.
PointConfig conchospiral(int n, double beta = kDefaultBeta);

/// A = (0,0,1) at index 0, B = origin at index 1, and n-2 points on the
/// cone of half-angle alpha about BA with apex B. Radii grow by 3/2 from 1;
/// azimuths are seeded and re-drawn until the set is in general position.
Construction cone_config(int n, double alpha, std::uint64_t seed = 1);

/// A = origin at index 0, B = (0,0,1) at index 1, and n-2 points P with
/// angle APB = alpha, swept around the AB axis.
Construction spindle_torus_config(int n, double alpha, std::uint64_t seed = 1);

/// Two families of s = sqrt((n-2)/3) coaxial cones from A = origin and
/// B = (0,0,1), half-angles in arithmetic progression over
/// [5pi/18, 7pi/18]; three points on each of the s^2 intersection circles.
/// Requires (n-2)/3 to be an odd perfect square.
Construction cones_construction(int n, std::uint64_t seed = 1);

/// Smallest n >= 5 of the form 3s^2 + 2 with s odd, nearest to `n`.
int nearest_cones_n(int n);
/// True iff n = 3s^2 + 2 for an odd s.
bool valid_cones_n(int n);

/// The origin (index 0) plus base^a at polar angle 2pi c/m for
/// a, c in [0, m). Not in general position by design.
Construction sunshine(int m, double base = 2.0);

/// n random rational points (coordinates k / 256) accepted one by one
/// against exact collinearity and concyclicity tests.
PointConfig random_general_position(int n, int dim, std::uint64_t seed);

struct ConstructionParams {
  int n = 0;
  double beta = kDefaultBeta;
  double alpha = std::numbers::pi / 4;
  int m = 0;  // sunshine rays; derived from n when zero
  std::uint64_t seed = 1;
  double base = 2.0;
  int dim = 2;  // random configurations only
};

/// Names accepted by generate().
const std::vector<std::string>& construction_names();

/// Builds the named construction. Throws std::invalid_argument for an
/// unknown name or parameters the construction does not accept.
Construction generate(const std::string& name, const ConstructionParams& p);

}  // namespace anglekit
