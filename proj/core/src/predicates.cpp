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

#include "anglekit/predicates.hpp"

#include <algorithm>
#include <string>

#include "anglekit/detail/parallel.hpp"
#include "anglekit/detail/predicate_kernels.hpp"

namespace anglekit {

namespace {

template <typename T>
detail::V3<T> coords(const Point& p);

template <>
detail::V3<double> coords<double>(const Point& p) {
  return {p.x().to_double(), p.y().to_double(), p.z().to_double()};
}

template <>
detail::V3<mpq_class> coords<mpq_class>(const Point& p) {
  return {p.x().rational(), p.y().rational(), p.z().rational()};
}

void check_same_mode(std::initializer_list<const Point*> pts) {
  const Point& first = **pts.begin();
  for (const Point* p : pts) {
    if (p->mode() != first.mode())
      throw ModeMismatch("predicate operands mix exact and float points");
  }
}

template <typename T>
bool collinear_typed(const Point& p, const Point& q, const Point& r,
                     const Tolerances& tol) {
  const auto a = coords<T>(p), b = coords<T>(q), c = coords<T>(r);
  if (detail::coincident(a, b, kDistinctThreshold) ||
      detail::coincident(a, c, kDistinctThreshold) ||
      detail::coincident(b, c, kDistinctThreshold))
    throw DegenerateInput("collinear: coincident input points");
  return detail::collinear_vectors(detail::sub(b, a), detail::sub(c, a),
                                   tol.linear);
}

template <typename T>
bool concyclic_typed(const Point& p, const Point& q, const Point& r,
                     const Point& s, const Tolerances& tol) {
  const auto a = coords<T>(p), b = coords<T>(q), c = coords<T>(r),
             d = coords<T>(s);
  if (collinear_typed<T>(p, q, r, tol))
    throw DegenerateInput("concyclic: first three points are collinear");
  if (detail::coincident(d, a, kDistinctThreshold) ||
      detail::coincident(d, b, kDistinctThreshold) ||
      detail::coincident(d, c, kDistinctThreshold))
    throw DegenerateInput("concyclic: coincident input points");
  return detail::on_circle(detail::circle_through(a, b, c), d, tol.circular);
}

template <typename T>
ViolationReport scan(const std::vector<detail::V3<T>>& pts,
                     const Tolerances& tol, unsigned threads) {
  const std::size_t n = pts.size();
  ViolationReport report;
  if (n < 3) return report;

  // flags[(i*n + j)*n + k] for i < j < k
  std::vector<char> flags(n * n * n, 0);
  struct Partial {
    std::vector<std::array<std::size_t, 3>> triples;
    std::vector<std::array<std::size_t, 4>> quads;
  };
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(
          detail::resolve_threads(threads), n));

  auto tri = detail::run_workers<Partial>(workers, [&](unsigned w, unsigned wc) {
    Partial part;
    for (std::size_t i = w; i < n; i += wc)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          if (detail::collinear_vectors(detail::sub(pts[j], pts[i]),
                                        detail::sub(pts[k], pts[i]),
                                        tol.linear)) {
            flags[(i * n + j) * n + k] = 1;
            part.triples.push_back({i, j, k});
          }
    return part;
  });
  for (auto& part : tri)
    report.collinear_triples.insert(report.collinear_triples.end(),
                                    part.triples.begin(), part.triples.end());
  std::sort(report.collinear_triples.begin(), report.collinear_triples.end());

  auto is_col = [&](std::size_t i, std::size_t j, std::size_t k) {
    return flags[(i * n + j) * n + k] != 0;
  };

  auto quad = detail::run_workers<Partial>(workers, [&](unsigned w, unsigned wc) {
    Partial part;
    for (std::size_t i = w; i < n; i += wc)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          if (is_col(i, j, k)) continue;
          const auto circle = detail::circle_through(pts[i], pts[j], pts[k]);
          for (std::size_t l = k + 1; l < n; ++l) {
            if (is_col(i, j, l) || is_col(i, k, l) || is_col(j, k, l)) continue;
            if (detail::on_circle(circle, pts[l], tol.circular))
              part.quads.push_back({i, j, k, l});
          }
        }
    return part;
  });
  for (auto& part : quad)
    report.concyclic_quadruples.insert(report.concyclic_quadruples.end(),
                                       part.quads.begin(), part.quads.end());
  std::sort(report.concyclic_quadruples.begin(),
            report.concyclic_quadruples.end());

  report.is_general_position =
      report.collinear_triples.empty() && report.concyclic_quadruples.empty();
  return report;
}

}  // namespace

bool collinear(const Point& p, const Point& q, const Point& r,
               const Tolerances& tol) {
  check_same_mode({&p, &q, &r});
  if (p.mode() == Mode::exact) return collinear_typed<mpq_class>(p, q, r, tol);
  return collinear_typed<double>(p, q, r, tol);
}

bool concyclic(const Point& p, const Point& q, const Point& r, const Point& s,
               const Tolerances& tol) {
  check_same_mode({&p, &q, &r, &s});
  if (p.mode() == Mode::exact)
    return concyclic_typed<mpq_class>(p, q, r, s, tol);
  return concyclic_typed<double>(p, q, r, s, tol);
}

ViolationReport verify_general_position(const PointConfig& config,
                                        const Tolerances& tol,
                                        unsigned threads) {
  if (config.mode() == Mode::exact)
    return scan(config.rationals(), tol, threads);
  return scan(config.doubles(), tol, threads);
}

}  // namespace anglekit
