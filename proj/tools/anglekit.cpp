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

// anglekit: generate point configurations and count their distinct angles.
//
// Exit codes: 0 success, 1 usage error, 2 validation failure,
// 3 generator retry exhaustion.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "anglekit/config_io.hpp"
#include "anglekit/constructions.hpp"
#include "anglekit/counters.hpp"
#include "anglekit/predicates.hpp"
#include "anglekit/sweep.hpp"

namespace {

using namespace anglekit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitRetry = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string construction;
  std::vector<int> n_list;
  double beta = kDefaultBeta;
  double alpha = std::numbers::pi / 4;
  int m = 0;
  std::uint64_t seed = 1;
  int dim = 2;
  double eps = kDefaultEps;
  bool exact = false;
  int k = 1;
  std::string pin_kind = "endpoint";
  std::optional<std::size_t> a;
  std::optional<std::size_t> b;
  bool chains_all_distinct = false;
  std::string in;
  std::string out;
  unsigned threads = 0;
  std::vector<std::string> quantities{"distinct_angles"};
  bool no_timing = false;
  std::string fit_quantity;
};

ConstructionParams params_from(const Options& o, int n) {
  ConstructionParams p;
  p.n = n;
  p.beta = o.beta;
  p.alpha = o.alpha;
  p.m = o.m;
  p.seed = o.seed;
  p.dim = o.dim;
  return p;
}

Construction load(const Options& o) {
  Construction built;
  if (!o.in.empty()) {
    if (!o.construction.empty())
      throw UsageError("--in and --construction are mutually exclusive");
    built.config = read_config_file(o.in);
  } else if (!o.construction.empty()) {
    if (o.n_list.size() > 1)
      throw UsageError("this subcommand takes a single --n");
    const int n = o.n_list.empty() ? 0 : o.n_list.front();
    if (n == 0 && !(o.construction == "sunshine" && o.m > 0))
      throw UsageError("--construction needs --n");
    built = generate(o.construction, params_from(o, n));
  } else {
    throw UsageError("give --in FILE or --construction NAME");
  }
  if (o.a) built.a = *o.a;
  if (o.b) built.b = *o.b;
  if (o.exact && built.config.mode() != Mode::exact)
    throw UsageError("--exact needs rational coordinates (integers or p/q)");
  return built;
}

std::ostream& output(const Options& o, std::ofstream& file) {
  if (o.out.empty()) return std::cout;
  file.open(o.out, std::ios::binary);
  if (!file) throw UsageError("cannot write " + o.out);
  return file;
}

void print_stats(const std::optional<ClusterStats>& stats) {
  if (!stats) return;
  std::cerr << "[clusters] classes=" << stats->num_classes
            << " min_gap=" << stats->min_gap_between_classes
            << " max_spread=" << stats->max_spread_within_class
            << " eps=" << stats->eps
            << " gap/eps=" << stats->min_gap_between_classes / stats->eps << '\n';
}

std::optional<ClusterStats> float_only(const PointConfig& c, const ClusterStats& s) {
  if (c.mode() == Mode::exact) return std::nullopt;
  return s;
}

int cmd_generate(const Options& o) {
  Construction built = load(o);
  std::ofstream file;
  std::ostream& out = output(o, file);
  out << "# pins a=" << built.a << " b=" << built.b << '\n'
      << write_config(built.config);
  return kExitOk;
}

int cmd_verify(const Options& o) {
  Construction built = load(o);
  Tolerances tol;
  const ViolationReport r = verify_general_position(built.config, tol, o.threads);
  std::ofstream file;
  std::ostream& out = output(o, file);
  out << "general_position " << (r.is_general_position ? "yes" : "no") << '\n'
      << "collinear_triples " << r.collinear_triples.size() << '\n'
      << "concyclic_quadruples " << r.concyclic_quadruples.size() << '\n';
  for (const auto& t : r.collinear_triples)
    out << "collinear " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  for (const auto& q : r.concyclic_quadruples)
    out << "concyclic " << q[0] << ' ' << q[1] << ' ' << q[2] << ' ' << q[3] << '\n';
  return r.is_general_position ? kExitOk : kExitValidation;
}

int cmd_count(const Options& o) {
  Construction built = load(o);
  const AngleHistogram hist = angle_histogram(built.config, o.eps, o.threads);
  print_stats(hist.cluster_stats);
  std::cout << hist.distinct() << '\n';
  return kExitOk;
}

int cmd_pinned(const Options& o) {
  Construction built = load(o);
  ClusterStats stats;
  std::size_t count = 0;
  if (o.pin_kind == "center_sphere") {
    count = pinned_center_via_sphere(built.config, built.a, o.eps, &stats);
  } else {
    const PinSpec pin{parse_pin_kind(o.pin_kind), built.a, built.b};
    count = count_pinned(built.config, pin, o.eps, &stats);
  }
  print_stats(float_only(built.config, stats));
  std::cout << count << '\n';
  return kExitOk;
}

int cmd_chains(const Options& o) {
  Construction built = load(o);
  const AngleTable table = AngleTable::build(built.config, o.eps, o.threads);
  print_stats(table.cluster_stats());
  std::cout << count_chains(table, o.k,
                            o.chains_all_distinct ? ChainPolicy::all_distinct
                                                  : ChainPolicy::window_distinct)
            << '\n';
  return kExitOk;
}

int cmd_energy(const Options& o) {
  Construction built = load(o);
  const AngleHistogram hist = angle_histogram(built.config, o.eps, o.threads);
  print_stats(hist.cluster_stats);
  const CauchySchwarzCheck cs = cauchy_schwarz_check(hist);
  std::cout << "classes " << hist.distinct() << '\n'
            << "total_triples " << hist.total_triples << '\n'
            << "energy " << energy(hist).get_str() << '\n'
            << "bound " << cs.bound.get_str() << '\n'
            << "holds " << (cs.holds ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_selfsim(const Options& o) {
  Construction built = load(o);
  const AngleTable table = AngleTable::build(built.config, o.eps, o.threads);
  print_stats(table.cluster_stats());
  const auto points = find_self_similar_points(table);
  for (std::size_t i = 0; i < points.size(); ++i)
    std::cout << (i ? " " : "") << points[i];
  std::cout << '\n';
  return kExitOk;
}

int cmd_sweep(const Options& o) {
  if (o.construction.empty()) throw UsageError("sweep needs --construction");
  SweepOptions sweep;
  sweep.params = params_from(o, 0);
  sweep.eps = o.eps;
  sweep.threads = o.threads;
  sweep.chain_policy =
      o.chains_all_distinct ? ChainPolicy::all_distinct : ChainPolicy::window_distinct;
  sweep.timing = !o.no_timing;
  sweep.diagnostics = &std::cerr;
  for (const auto& q : o.quantities)
    if (!is_known_quantity(q)) throw UsageError("unknown quantity: " + q);
  const auto rows = run_sweep(o.construction, o.n_list, o.quantities, sweep);
  std::ofstream file;
  output(o, file) << to_csv(rows);
  return kExitOk;
}

int cmd_fit(const Options& o) {
  if (o.in.empty()) throw UsageError("fit needs --in CSV");
  std::ifstream in(o.in, std::ios::binary);
  if (!in) throw UsageError("cannot open " + o.in);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::vector<SweepRow> rows = parse_csv(buf.str());
  if (!o.fit_quantity.empty())
    std::erase_if(rows, [&](const SweepRow& r) { return r.quantity != o.fit_quantity; });
  const FitResult fit = fit_loglog(rows);
  std::printf("slope %.6f\nintercept %.6f\nr_squared %.6f\n", fit.slope,
              fit.intercept, fit.r_squared);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distinct-angle configurations: generate, verify, count"};
  app.require_subcommand(1);
  Options o;

  auto add_source = [&](CLI::App* cmd) {
    cmd->add_option("--in", o.in, "Point file");
    cmd->add_option("--construction", o.construction, "Named generator")
        ->check(CLI::IsMember([] {
          auto names = construction_names();
          names.push_back("cyl_helix");
          return names;
        }()));
    cmd->add_option("--n", o.n_list, "Number of points")->delimiter(',');
    cmd->add_option("--beta", o.beta, "Spiral growth rate");
    cmd->add_option("--alpha", o.alpha, "Cone / torus angle (radians)");
    cmd->add_option("--m", o.m, "Sunshine ray count");
    cmd->add_option("--seed", o.seed, "Generator seed");
    cmd->add_option("--dim", o.dim, "Dimension of random configurations")
        ->check(CLI::IsMember({2, 3}));
    cmd->add_option("--eps", o.eps, "Cosine clustering tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--exact", o.exact, "Require rational input and exact keys");
    cmd->add_option("--a", o.a, "Index of pinned point A");
    cmd->add_option("--b", o.b, "Index of pinned point B");
    cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
    cmd->add_option("--out", o.out, "Output file (default stdout)");
  };

  struct Entry {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const Entry entries[] = {
      {"generate", "Write a generated configuration as a point file", cmd_generate},
      {"verify", "Report collinear triples and concyclic quadruples", cmd_verify},
      {"count", "Count distinct angles", cmd_count},
      {"pinned", "Count distinct angles with pinned points", cmd_pinned},
      {"chains", "Count distinct angle k-chains", cmd_chains},
      {"energy", "Angle energy and its Cauchy-Schwarz bound", cmd_energy},
      {"selfsim", "List points of self-similarity", cmd_selfsim},
      {"sweep", "CSV of quantities over a list of n", cmd_sweep},
  };
  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> commands;
  for (const Entry& e : entries) {
    CLI::App* cmd = app.add_subcommand(e.name, e.help);
    add_source(cmd);
    commands.emplace_back(cmd, e.run);
  }
  CLI::App* pinned = app.get_subcommand("pinned");
  pinned->add_option("--pin-kind", o.pin_kind,
                     "endpoint | center | pair_all_roles | endpoint_center | "
                     "endpoints | center_sphere");
  for (const char* name : {"chains", "sweep"}) {
    app.get_subcommand(name)->add_flag("--chains-all-distinct", o.chains_all_distinct,
                                       "Chains use fully distinct tuples");
  }
  app.get_subcommand("chains")->add_option("--k", o.k, "Chain length")->check(
      CLI::PositiveNumber);
  CLI::App* sweep = app.get_subcommand("sweep");
  sweep->add_option("--quantity", o.quantities,
                    "distinct_angles | energy | bound | chains_<k> | pinned_<kind>")
      ->delimiter(',');
  sweep->add_flag("--no-timing", o.no_timing, "Write elapsed_ms as 0");

  CLI::App* fit = app.add_subcommand("fit", "Log-log least squares over a sweep CSV");
  fit->add_option("--in", o.in, "Sweep CSV")->required();
  fit->add_option("--quantity", o.fit_quantity, "Quantity to fit");
  commands.emplace_back(fit, cmd_fit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    for (const auto& [cmd, run] : commands)
      if (cmd->parsed()) return run(o);
  } catch (const RetryExhausted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRetry;
  } catch (const NotInGeneralPosition& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
