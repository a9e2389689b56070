#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wpcn/channel.hpp"
#include "wpcn/config.hpp"
#include "wpcn/exec.hpp"

namespace wpcn {

enum class Scheme { JointT1, JointT2, BenchmarkFixed, EqualShare };

std::string scheme_name(Scheme scheme);
Scheme parse_scheme(const std::string& name);

/// Aggregated result of one Monte Carlo run. Rates are reported in
/// bits/symbol (internal math is in nats; the conversion happens only here).
struct ThroughputReport {
  Scheme scheme = Scheme::JointT1;
  double p_avg = 0.0;                     // budget this run was given, watts
  std::vector<double> per_node_rate_bits;  // average rate per node
  double throughput_bits = 0.0;            // sum over nodes
  double achieved_avg_power = 0.0;         // (1/M) sum p_i tau0_i, watts
  double lambda = 0.0;                     // 0 for the fixed-power schemes
  bool constraint_active = false;
  std::int64_t active_epochs = 0;
  double wall_seconds = 0.0;  // not serialized
};

/// Fig.-style sweep artifact: one report per (budget point, scheme).
struct SweepCurve {
  std::vector<double> p_avg;  // strictly increasing
  std::vector<Scheme> schemes;
  std::vector<std::vector<ThroughputReport>> reports;  // [point][scheme]

  std::vector<ThroughputReport> flatten() const;
};

/// Generates (or reuses) a trace, calibrates the dual variable where the
/// scheme needs one, allocates every epoch and aggregates. The joint
/// point-to-point scheme requires a single-node config.
ThroughputReport run_simulation(const NetworkConfig& cfg, Scheme scheme,
                                const ChannelTrace* shared_trace = nullptr,
                                Exec exec = Exec::Parallel);

/// Runs every scheme at every budget on one shared trace (common random
/// numbers across schemes and budget points).
SweepCurve sweep_pavg(const NetworkConfig& cfg, const std::vector<double>& pavg_list,
                      const std::vector<Scheme>& schemes,
                      const ChannelTrace* shared_trace = nullptr,
                      Exec exec = Exec::Parallel);

/// n logarithmically spaced budget points spanning [lo, hi], endpoints
/// included.
std::vector<double> log_spaced_points(double lo, double hi, int n);

enum class OutputFormat { Csv, Json };

/// CSV columns: scheme,p_avg_w,throughput_bits_per_symbol,achieved_power_w,
/// lambda,active_epochs. JSON carries the same fields per entry under
/// "results". Numbers use shortest round-trip formatting, so identical runs
/// emit byte-identical files.
std::string format_results(const std::vector<ThroughputReport>& reports,
                           OutputFormat format);
void emit_results(const std::vector<ThroughputReport>& reports,
                  const std::string& path, OutputFormat format);

}  // namespace wpcn
