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

#include "anglekit/sweep.hpp"

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "anglekit/constructions.hpp"

namespace anglekit {
namespace {

SweepOptions untimed() {
  SweepOptions o;
  o.timing = false;
  return o;
}

TEST(SweepTest, HelixRowsWithinBound) {
  const auto rows = run_sweep("helix", {30, 10, 20}, {"distinct_angles"}, untimed());
  ASSERT_EQ(rows.size(), 3u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int n = 10 * static_cast<int>(i + 1);
    EXPECT_EQ(rows[i].n, n);
    EXPECT_EQ(rows[i].quantity, "distinct_angles");
    EXPECT_LE(std::stol(rows[i].value), 3L * (n - 1) * (n - 2) / 2);
    EXPECT_EQ(rows[i].value, std::to_string(count_distinct_angles(cyl_helix(n))));
  }
}

TEST(SweepTest, ConesPinnedPair) {
  const auto rows = run_sweep("cones", {29, 77}, {"pinned_pair_all_roles"}, untimed());
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].value, "5");
  EXPECT_EQ(rows[1].value, "9");
}

TEST(SweepTest, InvalidSizesAreSkippedWithWarning) {
  std::ostringstream diag;
  SweepOptions o = untimed();
  o.diagnostics = &diag;
  const auto rows = run_sweep("cones", {29, 30}, {"pinned_pair_all_roles"}, o);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].n, 29);
  EXPECT_NE(diag.str().find("30"), std::string::npos);
}

TEST(SweepTest, EmptyListGivesHeaderOnly) {
  EXPECT_EQ(to_csv(run_sweep("helix", {}, {"distinct_angles"})),
            std::string(kSweepHeader) + "\n");
}

TEST(SweepTest, RowsFollowNThenQuantityOrder) {
  const auto rows = run_sweep("helix", {8, 6}, {"energy", "distinct_angles", "chains_2"},
                              untimed());
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0].n, 6);
  EXPECT_EQ(rows[0].quantity, "energy");
  EXPECT_EQ(rows[2].quantity, "chains_2");
  EXPECT_EQ(rows[3].n, 8);
}

TEST(SweepTest, ValuesMatchDirectCounters) {
  const std::vector<std::string> qs = {"distinct_angles", "energy", "bound", "chains_1",
                                       "chains_2", "pinned_endpoint", "pinned_center",
                                       "pinned_center_sphere", "pinned_endpoints"};
  const auto rows = run_sweep("random", {9}, qs, untimed());
  const PointConfig c = random_general_position(9, 2, 1);
  const AngleHistogram h = angle_histogram(c);
  const std::vector<std::string> direct = {
      std::to_string(h.distinct()),
      energy(h).get_str(),
      cauchy_schwarz_check(h).bound.get_str(),
      std::to_string(count_chains(c, 1)),
      std::to_string(count_chains(c, 2)),
      std::to_string(count_pinned(c, {PinKind::endpoint, 0})),
      std::to_string(count_pinned(c, {PinKind::center, 0})),
      std::to_string(pinned_center_via_sphere(c, 0)),
      std::to_string(count_pinned(c, {PinKind::endpoints, 0, 1})),
  };
  ASSERT_EQ(rows.size(), qs.size());
  for (std::size_t i = 0; i < qs.size(); ++i) EXPECT_EQ(rows[i].value, direct[i]) << qs[i];
}

TEST(SweepTest, UnknownQuantityRejected) {
  EXPECT_FALSE(is_known_quantity("chains_0"));
  EXPECT_FALSE(is_known_quantity("pinned_middle"));
  EXPECT_TRUE(is_known_quantity("chains_3"));
  EXPECT_THROW(run_sweep("helix", {5}, {"volume"}), std::invalid_argument);
}

TEST(CsvTest, DeterministicAndRoundTrips) {
  const auto run = [] {
    return to_csv(run_sweep("cone", {8, 10}, {"distinct_angles", "pinned_endpoint_center"},
                            untimed()));
  };
  const std::string first = run();
  EXPECT_EQ(first, run());
  EXPECT_EQ(first.substr(0, kSweepHeader.size()), kSweepHeader);
  EXPECT_EQ(to_csv(parse_csv(first)), first);
  EXPECT_THROW(parse_csv("bogus,header\n"), std::invalid_argument);
}

TEST(FitTest, Examples) {
  const FitResult quad = fit_loglog({{10, 100}, {20, 400}, {40, 1600}});
  EXPECT_NEAR(quad.slope, 2.0, 1e-12);
  EXPECT_NEAR(quad.r_squared, 1.0, 1e-12);
  const FitResult lin = fit_loglog({{10, 10}, {20, 20}, {40, 40}});
  EXPECT_NEAR(lin.slope, 1.0, 1e-12);
  EXPECT_NEAR(lin.intercept, 0.0, 1e-12);
}

TEST(FitTest, Errors) {
  EXPECT_THROW(fit_loglog({{10, 100}, {20, 400}}), std::invalid_argument);
  EXPECT_THROW(fit_loglog({{10, 100}, {20, 0}, {40, 1}}), std::invalid_argument);
  std::vector<SweepRow> mixed(3);
  for (int i = 0; i < 3; ++i) {
    mixed[i].n = 10 * (i + 1);
    mixed[i].value = "5";
    mixed[i].quantity = i ? "energy" : "distinct_angles";
  }
  EXPECT_THROW(fit_loglog(mixed), std::invalid_argument);
}

TEST(FitTest, HelixGrowthIsQuadratic) {
  const auto rows = run_sweep("helix", {20, 30, 40, 50, 60}, {"distinct_angles"}, untimed());
  const FitResult fit = fit_loglog(rows);
  EXPECT_GE(fit.slope, 1.7);
  EXPECT_LE(fit.slope, 2.1);
  EXPECT_GE(fit.r_squared, 0.98);
}

}  // namespace
}  // namespace anglekit
