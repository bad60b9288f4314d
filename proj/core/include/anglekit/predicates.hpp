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
#include <vector>

#include "anglekit/geom.hpp"

namespace anglekit {

/// Relative tolerances for the float-mode predicates. Ignored in exact mode.
struct Tolerances {
  double linear = 1e-9;
  double circular = 1e-9;
};

/// Thrown when a predicate receives coincident points or a degenerate base.
class DegenerateInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// True iff p, q, r lie on one line. Throws DegenerateInput if two coincide.
bool collinear(const Point& p, const Point& q, const Point& r,
               const Tolerances& tol = {});

/// True iff s lies on the circle through p, q, r (which requires all four
/// to be coplanar). Throws DegenerateInput if p, q, r are collinear.
bool concyclic(const Point& p, const Point& q, const Point& r, const Point& s,
               const Tolerances& tol = {});

struct ViolationReport {
  std::vector<std::array<std::size_t, 3>> collinear_triples;
  std::vector<std::array<std::size_t, 4>> concyclic_quadruples;
  bool is_general_position = true;
};

/// Exhaustive scan for collinear triples and concyclic quadruples. Tuples
/// are listed with ascending indices, in lexicographic order. A quadruple
/// containing a collinear triple is never reported as concyclic.
ViolationReport verify_general_position(const PointConfig& config,
                                        const Tolerances& tol = {},
                                        unsigned threads = 0);

}  // namespace anglekit
