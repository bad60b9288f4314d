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

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace anglekit::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(worker, worker_count) on `workers` threads and returns the
/// per-worker results in worker order, so reductions are deterministic.
template <typename R, typename Fn>
std::vector<R> run_workers(unsigned workers, Fn fn) {
  workers = std::max(1u, workers);
  std::vector<R> results(workers);
  if (workers == 1) {
    results[0] = fn(0u, 1u);
    return results;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] { results[w] = fn(w, workers); });
  pool.clear();
  return results;
}

}  // namespace anglekit::detail
