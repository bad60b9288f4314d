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

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace anglekit {

namespace {

constexpr std::string_view kPinnedPrefix = "pinned_";
constexpr std::string_view kChainsPrefix = "chains_";

std::optional<int> chain_length(std::string_view quantity) {
  if (!quantity.starts_with(kChainsPrefix)) return std::nullopt;
  const std::string_view digits = quantity.substr(kChainsPrefix.size());
  int k = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || k < 1)
    return std::nullopt;
  return k;
}

void report_stats(const SweepOptions& options, const std::string& what,
                  const std::optional<ClusterStats>& stats) {
  if (!options.diagnostics || !stats) return;
  *options.diagnostics << "[clusters] " << what << ": classes=" << stats->num_classes
                       << " min_gap=" << stats->min_gap_between_classes
                       << " max_spread=" << stats->max_spread_within_class
                       << " eps=" << stats->eps << '\n';
}

class TableCache {
 public:
  TableCache(const Construction& built, const SweepOptions& options)
      : built_(built), options_(options) {}
  const AngleTable& table() {
    if (!table_) {
      table_ = AngleTable::build(built_.config, options_.eps, options_.threads);
      report_stats(options_, built_.config.label(), table_->cluster_stats());
    }
    return *table_;
  }
  const AngleHistogram& histogram() {
    if (!hist_) hist_ = angle_histogram(table());
    return *hist_;
  }

 private:
  const Construction& built_;
  const SweepOptions& options_;
  std::optional<AngleTable> table_;
  std::optional<AngleHistogram> hist_;
};

std::string evaluate(const Construction& built, const std::string& quantity,
                     const SweepOptions& options, TableCache& cache) {
  if (quantity == "distinct_angles")
    return std::to_string(cache.histogram().distinct());
  if (quantity == "energy") return energy(cache.histogram()).get_str();
  if (quantity == "bound") return cauchy_schwarz_check(cache.histogram()).bound.get_str();
  if (auto k = chain_length(quantity))
    return std::to_string(count_chains(cache.table(), *k, options.chain_policy));
  if (quantity.starts_with(kPinnedPrefix)) {
    const std::string kind = quantity.substr(kPinnedPrefix.size());
    std::optional<ClusterStats> stats;
    ClusterStats raw;
    std::size_t count = 0;
    if (kind == "center_sphere") {
      count = pinned_center_via_sphere(built.config, built.a, options.eps, &raw);
    } else {
      const PinSpec pin{parse_pin_kind(kind), built.a, built.b};
      count = count_pinned(built.config, pin, options.eps, &raw);
    }
    if (built.config.mode() == Mode::floating) stats = raw;
    report_stats(options, built.config.label() + " " + quantity, stats);
    return std::to_string(count);
  }
  throw std::invalid_argument("unknown quantity: " + quantity);
}

std::string format_eps(double eps) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, eps);
  return std::string(buf, ptr);
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

bool is_known_quantity(std::string_view quantity) {
  if (quantity == "distinct_angles" || quantity == "energy" || quantity == "bound")
    return true;
  if (chain_length(quantity)) return true;
  if (quantity.starts_with(kPinnedPrefix)) {
    const std::string kind(quantity.substr(kPinnedPrefix.size()));
    if (kind == "center_sphere") return true;
    try {
      parse_pin_kind(kind);
      return true;
    } catch (const std::invalid_argument&) {
      return false;
    }
  }
  return false;
}

std::string evaluate_quantity(const Construction& built,
                              const std::string& quantity,
                              const SweepOptions& options) {
  TableCache cache(built, options);
  return evaluate(built, quantity, options, cache);
}

std::vector<SweepRow> run_sweep(const std::string& construction,
                                std::vector<int> n_list,
                                const std::vector<std::string>& quantities,
                                const SweepOptions& options) {
  for (const auto& q : quantities)
    if (!is_known_quantity(q)) throw std::invalid_argument("unknown quantity: " + q);
  std::sort(n_list.begin(), n_list.end());
  n_list.erase(std::unique(n_list.begin(), n_list.end()), n_list.end());

  std::vector<SweepRow> rows;
  for (int n : n_list) {
    ConstructionParams params = options.params;
    params.n = n;
    params.m = 0;
    std::optional<Construction> built;
    try {
      built = generate(construction, params);
    } catch (const GeneratorError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      if (options.diagnostics)
        *options.diagnostics << "warning: skipping n=" << n << ": " << e.what()
                             << '\n';
      continue;
    }
    TableCache cache(*built, options);
    for (const auto& q : quantities) {
      const auto start = std::chrono::steady_clock::now();
      std::string value = evaluate(*built, q, options, cache);
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      rows.push_back({construction, n, q, std::move(value), options.eps,
                      options.timing ? static_cast<long long>(ms) : 0});
    }
  }
  return rows;
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << kSweepHeader << '\n';
  for (const SweepRow& r : rows)
    out << r.construction << ',' << r.n << ',' << r.quantity << ',' << r.value
        << ',' << format_eps(r.eps) << ',' << r.elapsed_ms << '\n';
  return out.str();
}

std::vector<SweepRow> parse_csv(std::string_view text) {
  std::vector<SweepRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != kSweepHeader)
        throw std::invalid_argument("unexpected CSV header: " + line);
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 6)
      throw std::invalid_argument("CSV line " + std::to_string(line_no) +
                                  ": expected 6 fields");
    try {
      rows.push_back({f[0], std::stoi(f[1]), f[2], f[3], std::stod(f[4]),
                      std::stoll(f[5])});
    } catch (const std::exception&) {
      throw std::invalid_argument("CSV line " + std::to_string(line_no) +
                                  ": malformed number");
    }
  }
  return rows;
}

FitResult fit_loglog(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3)
    throw std::invalid_argument("fit_loglog needs at least 3 points");
  const double m = static_cast<double>(points.size());
  double sx = 0, sy = 0;
  std::vector<std::pair<double, double>> logs;
  for (const auto& [x, y] : points) {
    if (!(x > 0) || !(y > 0))
      throw std::invalid_argument("fit_loglog needs positive values");
    logs.emplace_back(std::log(x), std::log(y));
    sx += logs.back().first;
    sy += logs.back().second;
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& [lx, ly] : logs) {
    sxx += (lx - mx) * (lx - mx);
    sxy += (lx - mx) * (ly - my);
    syy += (ly - my) * (ly - my);
  }
  if (sxx == 0) throw std::invalid_argument("fit_loglog needs distinct x values");
  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0;
  for (const auto& [lx, ly] : logs) {
    const double r = ly - (fit.intercept + fit.slope * lx);
    ss_res += r * r;
  }
  fit.r_squared = syy == 0 ? 1.0 : std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  return fit;
}

FitResult fit_loglog(const std::vector<SweepRow>& rows) {
  std::vector<std::pair<double, double>> points;
  for (const SweepRow& r : rows) {
    if (r.quantity != rows.front().quantity)
      throw std::invalid_argument("fit_loglog rows must share one quantity");
    mpq_class v;
    if (v.set_str(r.value, 10) != 0)
      throw std::invalid_argument("non-numeric value: " + r.value);
    points.emplace_back(static_cast<double>(r.n), v.get_d());
  }
  return fit_loglog(points);
}

}  // namespace anglekit
