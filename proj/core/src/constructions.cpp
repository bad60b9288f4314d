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

#include "anglekit/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>

#include "anglekit/detail/predicate_kernels.hpp"

namespace anglekit {

namespace {

constexpr double kPi = std::numbers::pi;

// Uniform double in [0, 1) from the raw 64-bit output; unlike
// std::uniform_real_distribution this is identical on every standard library.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Point point3(double x, double y, double z) { return Point(x, y, z); }

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

PointConfig verified(std::vector<Point> pts, std::string label,
                     const char* advice) {
  PointConfig config(std::move(pts), label);
  ViolationReport report = verify_general_position(config);
  if (!report.is_general_position)
    throw NotInGeneralPosition(label + " is not in general position; " + advice,
                               std::move(report));
  return config;
}

std::string fmt_label(const std::string& name, int n) {
  return name + " n=" + std::to_string(n);
}

// Places the free points with `place(i, rng)` and re-draws the points
// involved in violations until the whole set is in general position.
// Indices [0, fixed) are the designated points and never move.
Construction place_with_retries(
    std::vector<Vec3d> fixed, std::size_t free_count, std::uint64_t seed,
    const std::string& label,
    const std::function<Vec3d(std::size_t, std::mt19937_64&)>& place) {
  std::mt19937_64 rng(seed);
  std::vector<Vec3d> pts = std::move(fixed);
  const std::size_t pinned = pts.size();
  for (std::size_t i = 0; i < free_count; ++i) pts.push_back(place(i, rng));

  ViolationReport report;
  for (int attempt = 0; attempt <= kRetryBudget; ++attempt) {
    std::vector<Point> points;
    points.reserve(pts.size());
    for (const Vec3d& p : pts) points.push_back(point3(p[0], p[1], p[2]));
    PointConfig config(std::move(points), label);
    report = verify_general_position(config);
    if (report.is_general_position) return Construction{std::move(config), 0, 1};

    std::set<std::size_t> redraw;
    for (const auto& t : report.collinear_triples)
      if (t[2] >= pinned) redraw.insert(t[2]);
    for (const auto& q : report.concyclic_quadruples)
      if (q[3] >= pinned) redraw.insert(q[3]);
    for (std::size_t idx : redraw) pts[idx] = place(idx - pinned, rng);
  }
  throw RetryExhausted(label + ": general position not reached after " +
                           std::to_string(kRetryBudget) + " retries",
                       std::move(report));
}

}  // namespace

PointConfig log_spiral(int n, double beta) {
  require(n >= 3, "log_spiral needs n >= 3");
  require(beta > 0, "log_spiral needs beta > 0");
  std::vector<Point> pts;
  for (int j = 1; j <= n; ++j) {
    const double t = beta * j;
    const double r = std::exp(t);
    pts.emplace_back(Scalar(r * std::cos(t)), Scalar(r * std::sin(t)));
  }
  return verified(std::move(pts), fmt_label("log_spiral", n),
                  "choose a smaller beta");
}

PointConfig cyl_helix(int n) {
  require(n >= 3, "cyl_helix needs n >= 3");
  std::vector<Point> pts;
  for (int j = 1; j <= n; ++j) {
    const double t = 2.0 * kPi * j / n;
    pts.push_back(point3(std::cos(t), std::sin(t), static_cast<double>(j) / n));
  }
  return PointConfig(std::move(pts), fmt_label("cyl_helix", n));
}

PointConfig conchospiral(int n, double beta) {
  require(n >= 3, "conchospiral needs n >= 3");
  require(beta > 0, "conchospiral needs beta > 0");
  std::vector<Point> pts;
  for (int j = 1; j <= n; ++j) {
    const double t = beta * j;
    const double r = std::exp(t);
    pts.push_back(point3(r * std::cos(t), r * std::sin(t), r));
  }
  return verified(std::move(pts), fmt_label("conchospiral", n),
                  "choose a smaller beta");
}

Construction cone_config(int n, double alpha, std::uint64_t seed) {
  require(n >= 4, "cone_config needs n >= 4");
  require(alpha > 0 && alpha < kPi, "cone aperture must lie in (0, pi)");
  const double s = std::sin(alpha), c = std::cos(alpha);
  return place_with_retries(
      {{0, 0, 1}, {0, 0, 0}}, static_cast<std::size_t>(n - 2), seed,
      fmt_label("cone", n), [=](std::size_t i, std::mt19937_64& rng) {
        const double r = std::pow(1.5, static_cast<double>(i));
        const double phi = 2.0 * kPi * unit_uniform(rng);
        return Vec3d{r * s * std::cos(phi), r * s * std::sin(phi), r * c};
      });
}

Construction spindle_torus_config(int n, double alpha, std::uint64_t seed) {
  require(n >= 4, "spindle_torus_config needs n >= 4");
  require(alpha > 0 && alpha < kPi, "torus angle must lie in (0, pi)");
  // In a half-plane through the AB axis, the points seeing AB at angle alpha
  // form the arc psi in (alpha - pi, pi - alpha) of the circle with center
  // (cot(alpha)/2, 1/2) and radius 1/(2 sin alpha).
  const double center_rho = 0.5 * std::cos(alpha) / std::sin(alpha);
  const double radius = 0.5 / std::sin(alpha);
  const double lo = alpha - kPi, span = 2.0 * (kPi - alpha);
  // Arc positions stay fixed across retries; only azimuths are re-drawn.
  std::mt19937_64 arc_rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<double> psi(static_cast<std::size_t>(n - 2));
  for (double& v : psi) v = lo + span * (0.05 + 0.9 * unit_uniform(arc_rng));
  return place_with_retries(
      {{0, 0, 0}, {0, 0, 1}}, psi.size(), seed, fmt_label("spindle_torus", n),
      [=](std::size_t i, std::mt19937_64& rng) {
        const double rho = center_rho + radius * std::cos(psi[i]);
        const double z = 0.5 + radius * std::sin(psi[i]);
        const double phi = 2.0 * kPi * unit_uniform(rng);
        return Vec3d{rho * std::cos(phi), rho * std::sin(phi), z};
      });
}

bool valid_cones_n(int n) {
  if (n < 5 || (n - 2) % 3 != 0) return false;
  const int q = (n - 2) / 3;
  const int s = static_cast<int>(std::lround(std::sqrt(static_cast<double>(q))));
  return s * s == q && s % 2 == 1;
}

int nearest_cones_n(int n) {
  int best = 5;
  for (int s = 1; s < 1000; s += 2) {
    const int cand = 3 * s * s + 2;
    if (std::abs(cand - n) < std::abs(best - n)) best = cand;
    if (cand > n) break;
  }
  return best;
}

Construction cones_construction(int n, std::uint64_t seed) {
  if (!valid_cones_n(n))
    throw std::invalid_argument(
        "cones_construction needs (n-2)/3 to be an odd perfect square; "
        "nearest valid n is " + std::to_string(nearest_cones_n(n)));
  const int s = static_cast<int>(std::lround(std::sqrt((n - 2) / 3.0)));
  std::vector<double> apertures;
  for (int i = 0; i < s; ++i)
    apertures.push_back(s == 1 ? kPi / 3
                               : 5 * kPi / 18 + (2 * kPi / 18) * i / (s - 1));

  struct Ring {
    double z;
    double rho;
  };
  std::vector<Ring> rings;
  for (double ta : apertures)
    for (double tb : apertures) {
      const double z = std::tan(tb) / (std::tan(ta) + std::tan(tb));
      rings.push_back({z, z * std::tan(ta)});
    }
  return place_with_retries(
      {{0, 0, 0}, {0, 0, 1}}, rings.size() * 3, seed, fmt_label("cones", n),
      [rings](std::size_t i, std::mt19937_64& rng) {
        const Ring& ring = rings[i / 3];
        const double phi = 2.0 * kPi * unit_uniform(rng);
        return Vec3d{ring.rho * std::cos(phi), ring.rho * std::sin(phi), ring.z};
      });
}

Construction sunshine(int m, double base) {
  require(m >= 3, "sunshine needs m >= 3 rays");
  require(base > 1.0, "sunshine base must exceed 1");
  std::vector<Point> pts;
  pts.emplace_back(Scalar(0.0), Scalar(0.0));
  for (int c = 0; c < m; ++c) {
    const double theta = 2.0 * kPi * c / m;
    for (int a = 0; a < m; ++a) {
      const double r = std::pow(base, a);
      pts.emplace_back(Scalar(r * std::cos(theta)), Scalar(r * std::sin(theta)));
    }
  }
  return Construction{
      PointConfig(std::move(pts), "sunshine m=" + std::to_string(m)), 0, 1};
}

PointConfig random_general_position(int n, int dim, std::uint64_t seed) {
  require(n >= 3, "random_general_position needs n >= 3");
  require(dim == 2 || dim == 3, "dim must be 2 or 3");
  using detail::V3;
  std::mt19937_64 rng(seed);
  auto coord = [&rng] {
    const long k = static_cast<long>(rng() % 2049) - 1024;
    return mpq_class(k, 256);
  };

  std::vector<V3<mpq_class>> pts;
  std::vector<detail::Circle<mpq_class>> circles;
  while (pts.size() < static_cast<std::size_t>(n)) {
    V3<mpq_class> p{coord(), coord(), dim == 3 ? coord() : mpq_class(0)};
    for (auto& c : p) c.canonicalize();
    bool ok = std::find(pts.begin(), pts.end(), p) == pts.end();
    for (std::size_t i = 0; ok && i < pts.size(); ++i)
      for (std::size_t j = i + 1; ok && j < pts.size(); ++j)
        ok = !detail::collinear_vectors(detail::sub(pts[j], pts[i]),
                                        detail::sub(p, pts[i]), 0.0);
    for (std::size_t c = 0; ok && c < circles.size(); ++c)
      ok = !detail::on_circle(circles[c], p, 0.0);
    if (!ok) continue;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        circles.push_back(detail::circle_through(pts[i], pts[j], p));
    pts.push_back(std::move(p));
  }

  std::vector<Point> out;
  for (const auto& p : pts) {
    if (dim == 2)
      out.emplace_back(Scalar(p[0]), Scalar(p[1]));
    else
      out.emplace_back(Scalar(p[0]), Scalar(p[1]), Scalar(p[2]));
  }
  return PointConfig(std::move(out), "random n=" + std::to_string(n) +
                                         " dim=" + std::to_string(dim) +
                                         " seed=" + std::to_string(seed));
}

const std::vector<std::string>& construction_names() {
  static const std::vector<std::string> names = {
      "log_spiral", "helix", "conchospiral", "cone",
      "spindle_torus", "cones", "sunshine", "random"};
  return names;
}

Construction generate(const std::string& name, const ConstructionParams& p) {
  if (name == "log_spiral") return {log_spiral(p.n, p.beta), 0, 1};
  if (name == "helix" || name == "cyl_helix") return {cyl_helix(p.n), 0, 1};
  if (name == "conchospiral") return {conchospiral(p.n, p.beta), 0, 1};
  if (name == "cone") return cone_config(p.n, p.alpha, p.seed);
  if (name == "spindle_torus") return spindle_torus_config(p.n, p.alpha, p.seed);
  if (name == "cones") return cones_construction(p.n, p.seed);
  if (name == "sunshine") {
    int m = p.m;
    if (m == 0) {
      m = static_cast<int>(std::lround(std::sqrt(std::max(p.n - 1, 0))));
      require(m * m + 1 == p.n, "sunshine needs n = m^2 + 1");
    }
    return sunshine(m, p.base);
  }
  if (name == "random") return {random_general_position(p.n, p.dim, p.seed), 0, 1};
  throw std::invalid_argument("unknown construction: " + name);
}

}  // namespace anglekit
