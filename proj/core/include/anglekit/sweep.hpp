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

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "anglekit/constructions.hpp"
#include "anglekit/counters.hpp"

namespace anglekit {

struct SweepRow {
  std::string construction;
  int n = 0;
  std::string quantity;
  std::string value;  // integer or reduced rational "p/q"
  double eps = kDefaultEps;
  long long elapsed_ms = 0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepOptions {
  ConstructionParams params;  // n is overwritten per row
  double eps = kDefaultEps;
  unsigned threads = 0;
  ChainPolicy chain_policy = ChainPolicy::window_distinct;
  /// When false elapsed_ms is written as 0 so output is byte-reproducible.
  bool timing = true;
  /// Receives skip warnings and cluster diagnostics; may be null.
  std::ostream* diagnostics = nullptr;
};

/// Quantity names understood by run_sweep: distinct_angles, energy, bound,
/// chains_<k>, and pinned_<kind> for every PinKind plus pinned_center_sphere.
bool is_known_quantity(std::string_view quantity);

/// Evaluates one quantity on a generated configuration; pins come from the
/// construction's designated points.
std::string evaluate_quantity(const Construction& built,
                              const std::string& quantity,
                              const SweepOptions& options);

/// One row per (n, quantity), n ascending, quantities in the given order.
/// n values the construction rejects are skipped with a warning.
std::vector<SweepRow> run_sweep(const std::string& construction,
                                std::vector<int> n_list,
                                const std::vector<std::string>& quantities,
                                const SweepOptions& options = {});

inline constexpr std::string_view kSweepHeader =
    "construction,n,quantity,value,eps,elapsed_ms";

std::string to_csv(const std::vector<SweepRow>& rows);
/// Parses CSV produced by to_csv. Throws std::invalid_argument.
std::vector<SweepRow> parse_csv(std::string_view text);

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Least-squares line through (ln x, ln y). Needs >= 3 points, all positive.
FitResult fit_loglog(const std::vector<std::pair<double, double>>& points);
/// Same on sweep rows, which must share one quantity.
FitResult fit_loglog(const std::vector<SweepRow>& rows);

}  // namespace anglekit
