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

#include "anglekit/counters.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

#include "anglekit/detail/parallel.hpp"
#include "anglekit/detail/vec.hpp"
#include "anglekit/predicates.hpp"

namespace anglekit {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

unsigned worker_count(unsigned threads, std::size_t n) {
  return static_cast<unsigned>(std::clamp<std::size_t>(
      detail::resolve_threads(threads), 1, std::max<std::size_t>(n, 1)));
}

}  // namespace

AngleTable AngleTable::build(const PointConfig& config, double eps,
                             unsigned threads) {
  AngleTable table;
  const std::size_t n = config.size();
  table.n_ = n;
  table.ids_.assign(n * n * n, -1);
  if (n < 3) return table;
  const unsigned workers = worker_count(threads, n);

  if (config.mode() == Mode::exact) {
    const auto pts = config.rationals();
    std::vector<ExactAngle> raw(n * n * n);
    detail::run_workers<char>(workers, [&](unsigned w, unsigned wc) {
      for (std::size_t b = w; b < n; b += wc)
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t c = 0; c < n; ++c)
            if (a != b && b != c && a != c)
              raw[(a * n + b) * n + c] = detail::exact_key(pts[a], pts[b], pts[c]);
      return char{0};
    });
    auto for_each_window = [n](auto&& fn) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c)
            if (a != b && b != c && a != c) fn((a * n + b) * n + c);
    };
    std::map<ExactAngle, int> ids;
    for_each_window([&](std::size_t t) { ids.emplace(raw[t], 0); });
    int next = 0;
    for (auto& [key, id] : ids) {
      id = next++;
      table.keys_.emplace_back(key);
    }
    for_each_window([&](std::size_t t) { table.ids_[t] = ids.at(raw[t]); });
    return table;
  }

  const auto& pts = config.doubles();
  std::vector<double> cos(n * n * n, kNaN);
  detail::run_workers<char>(workers, [&](unsigned w, unsigned wc) {
    for (std::size_t b = w; b < n; b += wc)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c)
          if (a != b && b != c && a != c)
            cos[(a * n + b) * n + c] = detail::cosine(pts[a], pts[b], pts[c]);
    return char{0};
  });
  std::vector<double> valid;
  std::vector<std::size_t> where;
  valid.reserve(n * (n - 1) * (n - 2));
  where.reserve(valid.capacity());
  for (std::size_t t = 0; t < cos.size(); ++t) {
    if (!std::isnan(cos[t])) {
      valid.push_back(cos[t]);
      where.push_back(t);
    }
  }
  Clustering cl = cluster_angles(valid, eps);
  for (std::size_t i = 0; i < valid.size(); ++i)
    table.ids_[where[i]] = cl.assignment[i];
  for (std::size_t c = 0; c < cl.representatives.size(); ++c)
    table.keys_.emplace_back(
        ClusteredAngle{static_cast<int>(c), cl.representatives[c]});
  table.stats_ = cl.stats;
  return table;
}

AngleHistogram angle_histogram(const AngleTable& table) {
  AngleHistogram hist;
  const std::size_t n = table.points();
  std::vector<std::uint64_t> counts(table.num_classes(), 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const int id = table.id(a, b, c);
        if (id >= 0) {
          ++counts[static_cast<std::size_t>(id)];
          ++hist.total_triples;
        }
      }
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] > 0) hist.entries.emplace(table.keys()[i], counts[i]);
  hist.cluster_stats = table.cluster_stats();
  return hist;
}

AngleHistogram angle_histogram(const PointConfig& config, double eps,
                               unsigned threads) {
  return angle_histogram(AngleTable::build(config, eps, threads));
}

std::size_t count_distinct_angles(const PointConfig& config, double eps,
                                  unsigned threads) {
  return angle_histogram(config, eps, threads).distinct();
}

const char* to_string(PinKind kind) {
  switch (kind) {
    case PinKind::endpoint: return "endpoint";
    case PinKind::center: return "center";
    case PinKind::pair_all_roles: return "pair_all_roles";
    case PinKind::endpoint_center: return "endpoint_center";
    case PinKind::endpoints: return "endpoints";
  }
  return "?";
}

PinKind parse_pin_kind(const std::string& name) {
  for (PinKind k : {PinKind::endpoint, PinKind::center, PinKind::pair_all_roles,
                    PinKind::endpoint_center, PinKind::endpoints})
    if (name == to_string(k)) return k;
  if (name == "pair") return PinKind::pair_all_roles;
  throw std::invalid_argument("unknown pin kind: " + name);
}

namespace {

bool uses_b(PinKind kind) {
  return kind != PinKind::endpoint && kind != PinKind::center;
}

// Ordered triples selected by a pin; each entry is (endpoint, vertex, endpoint).
std::vector<std::array<std::size_t, 3>> pinned_triples(std::size_t n,
                                                       const PinSpec& pin) {
  std::vector<std::array<std::size_t, 3>> out;
  const std::size_t a = pin.a, b = pin.b;
  switch (pin.kind) {
    case PinKind::endpoint:
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (x != a && y != a && x != y) out.push_back({a, x, y});
      break;
    case PinKind::center:
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (x != a && y != a && x != y) out.push_back({x, a, y});
      break;
    case PinKind::endpoint_center:
      for (std::size_t y = 0; y < n; ++y)
        if (y != a && y != b) out.push_back({a, b, y});
      break;
    case PinKind::endpoints:
      for (std::size_t x = 0; x < n; ++x)
        if (x != a && x != b) out.push_back({a, x, b});
      break;
    case PinKind::pair_all_roles:
      for (std::size_t y = 0; y < n; ++y)
        if (y != a && y != b) {
          out.push_back({a, b, y});
          out.push_back({b, a, y});
          out.push_back({a, y, b});
        }
      break;
  }
  return out;
}

template <typename Triples>
std::size_t count_keys(const PointConfig& config, const Triples& triples,
                       double eps, ClusterStats* stats) {
  if (config.mode() == Mode::exact) {
    const auto pts = config.rationals();
    std::set<ExactAngle> keys;
    for (const auto& [x, y, z] : triples)
      keys.insert(detail::exact_key(pts[x], pts[y], pts[z]));
    return keys.size();
  }
  const auto& pts = config.doubles();
  std::vector<double> cosines;
  cosines.reserve(triples.size());
  for (const auto& [x, y, z] : triples)
    cosines.push_back(detail::cosine(pts[x], pts[y], pts[z]));
  Clustering cl = cluster_angles(cosines, eps);
  if (stats) *stats = cl.stats;
  return cl.stats.num_classes;
}

}  // namespace

std::size_t count_pinned(const PointConfig& config, const PinSpec& pin,
                         double eps, ClusterStats* stats) {
  const std::size_t n = config.size();
  if (pin.a >= n || (uses_b(pin.kind) && pin.b >= n))
    throw std::out_of_range("pin index out of range");
  if (uses_b(pin.kind) && pin.a == pin.b)
    throw std::invalid_argument("pinned points must be distinct");
  if (n < 3) return 0;
  return count_keys(config, pinned_triples(n, pin), eps, stats);
}

std::vector<Vec3d> project_to_unit_sphere(const PointConfig& config,
                                          std::size_t a) {
  if (a >= config.size()) throw std::out_of_range("pin index out of range");
  const auto& pts = config.doubles();
  std::vector<Vec3d> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i == a) continue;
    const Vec3d d = detail::sub(pts[i], pts[a]);
    const double len = std::sqrt(detail::norm_sq(d));
    if (len == 0.0) throw DegenerateInput("point coincides with the center");
    out.push_back(detail::add(pts[a], detail::scale(d, 1.0 / len)));
  }
  return out;
}

namespace {

// Canonical integer direction of a nonzero rational vector: the primitive
// integer vector on the same ray. Two points project to the same sphere
// point iff their directions agree.
detail::V3<mpz_class> primitive_direction(const Vec3q& v) {
  mpz_class lcm = 1;
  for (const auto& c : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                                  c.get_den_mpz_t());
  detail::V3<mpz_class> out;
  mpz_class g = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = v[i].get_num() * (lcm / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g == 0) throw DegenerateInput("point coincides with the center");
  for (auto& c : out) c /= g;
  return out;
}

}  // namespace

std::size_t pinned_center_via_sphere(const PointConfig& config, std::size_t a,
                                     double eps, ClusterStats* stats) {
  const std::size_t n = config.size();
  if (a >= n) throw std::out_of_range("pin index out of range");
  if (n < 3) return 0;

  if (config.mode() == Mode::exact) {
    const auto pts = config.rationals();
    std::vector<detail::V3<mpz_class>> dirs;
    for (std::size_t i = 0; i < n; ++i)
      if (i != a) dirs.push_back(primitive_direction(detail::sub(pts[i], pts[a])));
    // Central angle between unit vectors u/|u| and v/|v|: cos = u.v/(|u||v|).
    std::set<ExactAngle> distances;
    for (std::size_t i = 0; i < dirs.size(); ++i)
      for (std::size_t j = i + 1; j < dirs.size(); ++j) {
        const mpz_class d = detail::dot(dirs[i], dirs[j]);
        ExactAngle key;
        key.cos_sign = ::sgn(d);
        key.cos_sq = mpq_class(d * d, detail::norm_sq(dirs[i]) *
                                          detail::norm_sq(dirs[j]));
        key.cos_sq.canonicalize();
        distances.insert(std::move(key));
      }
    return distances.size();
  }

  const auto& pts = config.doubles();
  std::vector<Vec3d> unit;
  for (const Vec3d& p : project_to_unit_sphere(config, a))
    unit.push_back(detail::sub(p, pts[a]));
  std::vector<double> cosines;
  for (std::size_t i = 0; i < unit.size(); ++i)
    for (std::size_t j = i + 1; j < unit.size(); ++j)
      cosines.push_back(std::clamp(detail::dot(unit[i], unit[j]), -1.0, 1.0));
  Clustering cl = cluster_angles(cosines, eps);
  if (stats) *stats = cl.stats;
  return cl.stats.num_classes;
}

std::size_t count_chains(const AngleTable& table, int k, ChainPolicy policy) {
  if (k < 1) throw std::invalid_argument("chain length k must be >= 1");
  const std::size_t n = table.points();
  if (n < 3) return 0;
  using Seq = std::vector<int>;

  if (policy == ChainPolicy::all_distinct) {
    const std::size_t len = static_cast<std::size_t>(k) + 2;
    if (len > n) return 0;
    std::set<Seq> seen;
    std::vector<std::size_t> tuple;
    std::vector<char> used(n, 0);
    Seq seq;
    auto dfs = [&](auto&& self) -> void {
      if (tuple.size() == len) {
        seen.insert(seq);
        return;
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (used[x]) continue;
        const std::size_t m = tuple.size();
        if (m >= 2) seq.push_back(table.id(tuple[m - 2], tuple[m - 1], x));
        used[x] = 1;
        tuple.push_back(x);
        self(self);
        tuple.pop_back();
        used[x] = 0;
        if (m >= 2) seq.pop_back();
      }
    };
    dfs(dfs);
    return seen.size();
  }

  // Window-distinct chains depend only on the last two points, so the
  // frontier is deduplicated per level: (last pair) -> set of angle tuples.
  std::map<std::pair<std::size_t, std::size_t>, std::set<Seq>> frontier;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table.id(a, b, c) >= 0)
          frontier[{b, c}].insert(Seq{table.id(a, b, c)});
  for (int level = 2; level <= k; ++level) {
    std::map<std::pair<std::size_t, std::size_t>, std::set<Seq>> next;
    for (const auto& [pair, seqs] : frontier) {
      const auto [b, c] = pair;
      for (std::size_t d = 0; d < n; ++d) {
        const int id = table.id(b, c, d);
        if (id < 0) continue;
        auto& dst = next[{c, d}];
        for (const Seq& s : seqs) {
          Seq ext = s;
          ext.push_back(id);
          dst.insert(std::move(ext));
        }
      }
    }
    frontier = std::move(next);
  }
  std::set<Seq> all;
  for (auto& [pair, seqs] : frontier) all.insert(seqs.begin(), seqs.end());
  return all.size();
}

std::size_t count_chains(const PointConfig& config, int k, double eps,
                         ChainPolicy policy, unsigned threads) {
  if (k < 1) throw std::invalid_argument("chain length k must be >= 1");
  return count_chains(AngleTable::build(config, eps, threads), k, policy);
}

mpz_class energy(const AngleHistogram& hist) {
  mpz_class e = 0;
  for (const auto& [key, count] : hist.entries) {
    const mpz_class c(static_cast<unsigned long>(count));
    e += c * c;
  }
  return e;
}

CauchySchwarzCheck cauchy_schwarz_check(const AngleHistogram& hist) {
  if (hist.entries.empty())
    throw std::invalid_argument("Cauchy-Schwarz check needs a nonempty histogram");
  mpz_class total = 0;
  for (const auto& [key, count] : hist.entries)
    total += static_cast<unsigned long>(count);
  CauchySchwarzCheck out;
  out.bound = mpq_class(total * total, energy(hist));
  out.bound.canonicalize();
  out.holds = mpq_class(static_cast<unsigned long>(hist.distinct())) >= out.bound;
  return out;
}

std::vector<std::size_t> find_self_similar_points(const AngleTable& table) {
  const std::size_t n = table.points();
  const std::size_t classes = table.num_classes();
  // touches[class * n + p]: p appears in some triple of the class
  std::vector<char> touches(classes * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const int id = table.id(a, b, c);
        if (id < 0) continue;
        const std::size_t row = static_cast<std::size_t>(id) * n;
        touches[row + a] = touches[row + b] = touches[row + c] = 1;
      }
  std::vector<std::size_t> out;
  if (classes == 0) return out;
  for (std::size_t p = 0; p < n; ++p) {
    bool all = true;
    for (std::size_t cls = 0; cls < classes && all; ++cls)
      all = touches[cls * n + p] != 0;
    if (all) out.push_back(p);
  }
  return out;
}

std::vector<std::size_t> find_self_similar_points(const PointConfig& config,
                                                  double eps,
                                                  unsigned threads) {
  return find_self_similar_points(AngleTable::build(config, eps, threads));
}

}  // namespace anglekit
