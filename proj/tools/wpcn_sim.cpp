// Command-line front end: Monte Carlo runs, budget sweeps, trace generation
// and the brute-force validation of the closed-form allocators.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wpcn/calibration.hpp"
#include "wpcn/channel.hpp"
#include "wpcn/config.hpp"
#include "wpcn/format.hpp"
#include "wpcn/oracle.hpp"
#include "wpcn/simulation.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::string trace_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> epochs;
  int threads = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "config file (key = value)");
  cmd->add_option("--trace", opts.trace_path, "channel trace CSV to load");
  cmd->add_option("--seed", opts.seed, "override rng_seed");
  cmd->add_option("--epochs", opts.epochs, "override num_epochs");
  cmd->add_option("--threads", opts.threads, "worker threads (0 = default)");
}

wpcn::NetworkConfig make_config(const CommonOpts& opts) {
  wpcn::NetworkConfig cfg;
  if (!opts.config_path.empty()) cfg = wpcn::load_config(opts.config_path);
  if (opts.seed) cfg.rng_seed = *opts.seed;
  if (opts.epochs) cfg.num_epochs = *opts.epochs;
  wpcn::require_valid(cfg);
  wpcn::set_threads(opts.threads);
  return cfg;
}

wpcn::ChannelTrace obtain_trace(const CommonOpts& opts,
                                const wpcn::NetworkConfig& cfg) {
  if (!opts.trace_path.empty()) return wpcn::load_trace(opts.trace_path, cfg);
  return wpcn::generate_trace(cfg);
}

void write_results(const std::vector<wpcn::ThroughputReport>& reports,
                   const std::string& out_path, const std::string& format) {
  auto fmt = format == "json" ? wpcn::OutputFormat::Json : wpcn::OutputFormat::Csv;
  if (out_path.empty()) {
    std::cout << wpcn::format_results(reports, fmt);
  } else {
    wpcn::emit_results(reports, out_path, fmt);
  }
}

int run_validate(const CommonOpts& opts, int grid_n) {
  auto cfg = make_config(opts);
  auto trace = obtain_trace(opts, cfg);

  const double tol = 1e-7;
  int failures = 0;

  auto report = [&](const char* name, const wpcn::OracleSummary& s) {
    bool ok = s.passes(tol);
    if (!ok) ++failures;
    std::printf("%s %s: %zu checks, max gap %s, max endpoint gap %s (tol %s), "
                "%d activation disagreements\n",
                ok ? "PASS" : "FAIL", name, s.checks.size(),
                wpcn::format_double(s.max_gap).c_str(),
                wpcn::format_double(s.max_endpoint_gap).c_str(),
                wpcn::format_double(tol).c_str(), s.activation_disagreements);
  };

  report("k-node closed form vs grid",
         wpcn::run_oracle_t1(trace, wpcn::oracle_lambda_ladder(trace, false), cfg,
                             grid_n));
  if (cfg.num_nodes == 1) {
    report("point-to-point closed form vs grid",
           wpcn::run_oracle_t2(trace, wpcn::oracle_lambda_ladder(trace, true), cfg,
                               grid_n));
  } else {
    std::printf("SKIP point-to-point closed form vs grid: config has %d nodes\n",
                cfg.num_nodes);
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Monte Carlo simulator for wirelessly powered TDMA networks: jointly "
      "optimal broadcast power and time sharing, with fixed-power baselines"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string out_path;
  std::string format = "csv";
  std::string scheme_str = "joint_t1";
  std::vector<std::string> scheme_list;
  double pavg_min = 1e-3, pavg_max = 0.0;
  int points = 20;
  int grid_n = 2000;

  auto* gen = app.add_subcommand("gen-trace", "generate a channel trace CSV");
  add_common(gen, opts);
  gen->add_option("--out", out_path, "output trace CSV")->required();

  auto* sim = app.add_subcommand("simulate", "run one scheme at one budget");
  add_common(sim, opts);
  sim->add_option("--scheme", scheme_str,
                  "joint_t1 | joint_t2 | benchmark_fixed | equal_share");
  sim->add_option("--out", out_path, "results file (default: stdout)");
  sim->add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* sweep = app.add_subcommand("sweep", "budget sweep over one shared trace");
  add_common(sweep, opts);
  sweep->add_option("--scheme", scheme_list, "schemes to run (repeatable)");
  sweep->add_option("--points", points, "number of budget points");
  sweep->add_option("--pavg-min", pavg_min, "lowest budget, watts");
  sweep->add_option("--pavg-max", pavg_max, "highest budget, watts (default P_max)");
  sweep->add_option("--out", out_path, "results file (default: stdout)");
  sweep->add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* val = app.add_subcommand(
      "validate", "compare closed-form allocations against brute-force search");
  add_common(val, opts);
  val->add_option("--grid", grid_n, "grid points per axis (>= 100)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      auto cfg = make_config(opts);
      wpcn::save_trace(wpcn::generate_trace(cfg), out_path);
      std::printf("wrote %lld epochs x %d nodes to %s\n",
                  static_cast<long long>(cfg.num_epochs), cfg.num_nodes,
                  out_path.c_str());
    } else if (sim->parsed()) {
      auto cfg = make_config(opts);
      auto trace = obtain_trace(opts, cfg);
      auto rep =
          wpcn::run_simulation(cfg, wpcn::parse_scheme(scheme_str), &trace);
      write_results({rep}, out_path, format);
    } else if (sweep->parsed()) {
      auto cfg = make_config(opts);
      auto trace = obtain_trace(opts, cfg);
      if (scheme_list.empty()) {
        scheme_list = {"joint_t1", "benchmark_fixed", "equal_share"};
      }
      std::vector<wpcn::Scheme> schemes;
      for (const auto& s : scheme_list) schemes.push_back(wpcn::parse_scheme(s));
      double hi = pavg_max > 0.0 ? pavg_max : cfg.max_power;
      auto curve = wpcn::sweep_pavg(
          cfg, wpcn::log_spaced_points(pavg_min, hi, points), schemes, &trace);
      write_results(curve.flatten(), out_path, format);
    } else if (val->parsed()) {
      return run_validate(opts, grid_n);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
