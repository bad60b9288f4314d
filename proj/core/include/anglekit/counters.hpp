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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "anglekit/angle_kernel.hpp"
#include "anglekit/geom.hpp"

namespace anglekit {

inline constexpr double kDefaultEps = 1e-9;

/// N_alpha for every angle class realized by an ordered window-distinct
/// triple. total_triples = n(n-1)(n-2) after a full scan.
struct AngleHistogram {
  std::map<AngleKey, std::uint64_t> entries;
  std::uint64_t total_triples = 0;
  std::optional<ClusterStats> cluster_stats;  // float mode only

  std::size_t distinct() const { return entries.size(); }
};

/// Class id of every ordered triple (a, b, c) of a configuration. Exact mode
/// numbers the exact keys in ascending cosine order; float mode numbers the
/// clusters of one global clustering of all cosines.
class AngleTable {
 public:
  static AngleTable build(const PointConfig& config, double eps = kDefaultEps,
                          unsigned threads = 0);

  std::size_t points() const { return n_; }
  std::size_t num_classes() const { return keys_.size(); }
  /// -1 when the triple is not window-distinct.
  int id(std::size_t a, std::size_t b, std::size_t c) const {
    return ids_[(a * n_ + b) * n_ + c];
  }
  const std::vector<AngleKey>& keys() const { return keys_; }
  const std::optional<ClusterStats>& cluster_stats() const { return stats_; }

 private:
  std::size_t n_ = 0;
  std::vector<int> ids_;
  std::vector<AngleKey> keys_;
  std::optional<ClusterStats> stats_;
};

AngleHistogram angle_histogram(const PointConfig& config,
                               double eps = kDefaultEps, unsigned threads = 0);
AngleHistogram angle_histogram(const AngleTable& table);

std::size_t count_distinct_angles(const PointConfig& config,
                                  double eps = kDefaultEps,
                                  unsigned threads = 0);

enum class PinKind {
  endpoint,         // (A, X, Y)
  center,           // (X, A, Y)
  pair_all_roles,   // (A, B, Y), (B, A, Y), (A, Y, B)
  endpoint_center,  // (A, B, Y)
  endpoints,        // (A, X, B)
};

const char* to_string(PinKind kind);
/// Accepts the names printed by to_string; throws std::invalid_argument.
PinKind parse_pin_kind(const std::string& name);

struct PinSpec {
  PinKind kind = PinKind::endpoint;
  std::size_t a = 0;
  std::size_t b = 1;  // unused by endpoint and center
};

/// Distinct angles among the triples selected by `pin`. In float mode only
/// the selected cosines are clustered.
std::size_t count_pinned(const PointConfig& config, const PinSpec& pin,
                         double eps = kDefaultEps,
                         ClusterStats* stats = nullptr);

/// Counts distinct central angles between the projections of all other
/// points onto the unit sphere about point `a`.
std::size_t pinned_center_via_sphere(const PointConfig& config, std::size_t a,
                                     double eps = kDefaultEps,
                                     ClusterStats* stats = nullptr);

/// The projection used above, in absolute coordinates: a + (p-a)/|p-a| for
/// every p != a, in config order.
std::vector<Vec3d> project_to_unit_sphere(const PointConfig& config,
                                          std::size_t a);

enum class ChainPolicy {
  window_distinct,  // each consecutive triple distinct; later repeats allowed
  all_distinct,     // all k+2 points distinct
};

/// Number of distinct k-tuples of angle classes realized by (k+2)-tuples.
std::size_t count_chains(const PointConfig& config, int k,
                         double eps = kDefaultEps,
                         ChainPolicy policy = ChainPolicy::window_distinct,
                         unsigned threads = 0);
std::size_t count_chains(const AngleTable& table, int k,
                         ChainPolicy policy = ChainPolicy::window_distinct);

/// Sum of N_alpha^2.
mpz_class energy(const AngleHistogram& hist);

struct CauchySchwarzCheck {
  mpq_class bound;  // (sum N)^2 / E
  bool holds = false;
};

CauchySchwarzCheck cauchy_schwarz_check(const AngleHistogram& hist);

/// Points that appear in some realizing triple of every angle class.
std::vector<std::size_t> find_self_similar_points(const PointConfig& config,
                                                  double eps = kDefaultEps,
                                                  unsigned threads = 0);
std::vector<std::size_t> find_self_similar_points(const AngleTable& table);

}  // namespace anglekit
