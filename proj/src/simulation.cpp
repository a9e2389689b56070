#include "wpcn/simulation.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "wpcn/format.hpp"
#include "wpcn/allocator_t1.hpp"
#include "wpcn/allocator_t2.hpp"
#include "wpcn/baselines.hpp"
#include "wpcn/calibration.hpp"
#include "wpcn/model.hpp"

namespace wpcn {

std::string scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::JointT1: return "joint_t1";
    case Scheme::JointT2: return "joint_t2";
    case Scheme::BenchmarkFixed: return "benchmark_fixed";
    case Scheme::EqualShare: return "equal_share";
  }
  throw std::logic_error("unknown scheme");
}

Scheme parse_scheme(const std::string& name) {
  if (name == "joint_t1") return Scheme::JointT1;
  if (name == "joint_t2") return Scheme::JointT2;
  if (name == "benchmark_fixed") return Scheme::BenchmarkFixed;
  if (name == "equal_share") return Scheme::EqualShare;
  throw std::invalid_argument("unknown scheme '" + name +
                              "' (expected joint_t1, joint_t2, benchmark_fixed "
                              "or equal_share)");
}

namespace {

constexpr double kSimplexTol = 1e-12;

// Per-epoch bookkeeping shared by the K-node schemes. Sums run in epoch
// order so the result is independent of how the allocation was parallelized.
ThroughputReport aggregate_k_node(const std::vector<EpochAllocation>& allocs,
                                  const NetworkConfig& cfg) {
  ThroughputReport rep;
  const auto m = static_cast<double>(allocs.size());
  const auto k = static_cast<size_t>(cfg.num_nodes);
  std::vector<double> rate_sums(k, 0.0);
  double energy_sum = 0.0;
  for (const auto& a : allocs) {
    if (a.active()) {
      ++rep.active_epochs;
      double share_sum = a.eh_fraction;
      for (double t : a.time_shares) share_sum += t;
      if (std::abs(share_sum - 1.0) > kSimplexTol) {
        throw std::logic_error("time shares of an active epoch sum to " +
                               format_double(share_sum));
      }
    }
    energy_sum += a.bs_power * a.eh_fraction;
    for (size_t j = 0; j < k; ++j) rate_sums[j] += a.node_rates[j];
  }
  rep.achieved_avg_power = energy_sum / m;
  rep.per_node_rate_bits.resize(k);
  rep.throughput_bits = 0.0;
  for (size_t j = 0; j < k; ++j) {
    rep.per_node_rate_bits[j] = rate_sums[j] / m / std::numbers::ln2;
    rep.throughput_bits += rep.per_node_rate_bits[j];
  }
  return rep;
}

ThroughputReport aggregate_p2p(const std::vector<P2PAllocation>& allocs) {
  ThroughputReport rep;
  const auto m = static_cast<double>(allocs.size());
  double rate_sum = 0.0;
  double energy_sum = 0.0;
  for (const auto& a : allocs) {
    if (a.active()) ++rep.active_epochs;
    energy_sum += a.bs_power * a.eh_fraction;
    rate_sum += a.rate;
  }
  rep.achieved_avg_power = energy_sum / m;
  rep.per_node_rate_bits = {rate_sum / m / std::numbers::ln2};
  rep.throughput_bits = rep.per_node_rate_bits[0];
  return rep;
}

}  // namespace

ThroughputReport run_simulation(const NetworkConfig& cfg, Scheme scheme,
                                const ChannelTrace* shared_trace, Exec exec) {
  require_valid(cfg);
  if (scheme == Scheme::JointT2 && cfg.num_nodes != 1) {
    throw std::invalid_argument(
        "joint_t2 is a point-to-point scheme; config has " +
        std::to_string(cfg.num_nodes) + " nodes");
  }
  auto t_start = std::chrono::steady_clock::now();

  ChannelTrace local;
  const ChannelTrace* trace = shared_trace;
  if (trace == nullptr) {
    local = generate_trace(cfg, exec);
    trace = &local;
  }
  if (trace->size() != cfg.num_epochs || trace->num_nodes() != cfg.num_nodes) {
    throw std::invalid_argument("trace is " + std::to_string(trace->size()) + "x" +
                                std::to_string(trace->num_nodes()) +
                                ", config wants " + std::to_string(cfg.num_epochs) +
                                "x" + std::to_string(cfg.num_nodes));
  }

  ThroughputReport rep;
  switch (scheme) {
    case Scheme::JointT1: {
      auto sol = calibrate_lambda(*trace, cfg, DualScheme::JointT1, exec);
      rep = aggregate_k_node(allocate_trace_t1(*trace, sol.lambda, cfg, exec), cfg);
      rep.lambda = sol.lambda;
      rep.constraint_active = sol.constraint_active;
      break;
    }
    case Scheme::JointT2: {
      auto sol = calibrate_lambda(*trace, cfg, DualScheme::JointT2, exec);
      rep = aggregate_p2p(allocate_trace_t2(*trace, sol.lambda, cfg, exec));
      rep.lambda = sol.lambda;
      rep.constraint_active = sol.constraint_active;
      break;
    }
    case Scheme::BenchmarkFixed:
      rep = aggregate_k_node(
          benchmark_fixed_power_trace(*trace, cfg.avg_power, cfg, exec), cfg);
      break;
    case Scheme::EqualShare:
      rep = aggregate_k_node(equal_share_trace(*trace, cfg.avg_power, cfg, exec),
                             cfg);
      break;
  }
  rep.scheme = scheme;
  rep.p_avg = cfg.avg_power;

  if (rep.achieved_avg_power > cfg.avg_power * (1.0 + cfg.lambda_tol)) {
    throw std::logic_error("achieved average power " +
                           format_double(rep.achieved_avg_power) +
                           " W exceeds the budget " + format_double(cfg.avg_power) +
                           " W beyond tolerance");
  }

  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  return rep;
}

std::vector<double> log_spaced_points(double lo, double hi, int n) {
  if (n < 2 || !(lo > 0) || !(hi > lo)) {
    throw std::invalid_argument("log_spaced_points: need n >= 2 and 0 < lo < hi");
  }
  std::vector<double> pts(static_cast<size_t>(n));
  double llo = std::log10(lo);
  double lhi = std::log10(hi);
  for (int i = 0; i < n; ++i) {
    pts[static_cast<size_t>(i)] =
        std::pow(10.0, llo + (lhi - llo) * i / (n - 1));
  }
  pts.front() = lo;
  pts.back() = hi;
  return pts;
}

SweepCurve sweep_pavg(const NetworkConfig& cfg, const std::vector<double>& pavg_list,
                      const std::vector<Scheme>& schemes,
                      const ChannelTrace* shared_trace, Exec exec) {
  require_valid(cfg);
  if (pavg_list.empty()) throw std::invalid_argument("sweep_pavg: empty budget list");
  if (schemes.empty()) throw std::invalid_argument("sweep_pavg: no schemes");
  for (size_t i = 0; i < pavg_list.size(); ++i) {
    if (!(pavg_list[i] > 0)) {
      throw std::invalid_argument("sweep_pavg: budgets must be positive");
    }
    if (i > 0 && !(pavg_list[i] > pavg_list[i - 1])) {
      throw std::invalid_argument("sweep_pavg: budgets must be strictly increasing");
    }
    if (pavg_list[i] > cfg.max_power) {
      throw std::invalid_argument("sweep_pavg: budget exceeds max_power");
    }
  }

  ChannelTrace local;
  const ChannelTrace* trace = shared_trace;
  if (trace == nullptr) {
    local = generate_trace(cfg, exec);
    trace = &local;
  }

  SweepCurve curve;
  curve.p_avg = pavg_list;
  curve.schemes = schemes;
  curve.reports.resize(pavg_list.size());
  for (size_t i = 0; i < pavg_list.size(); ++i) {
    NetworkConfig point_cfg = cfg;
    point_cfg.avg_power = pavg_list[i];
    curve.reports[i].reserve(schemes.size());
    for (Scheme s : schemes) {
      curve.reports[i].push_back(run_simulation(point_cfg, s, trace, exec));
    }
  }
  return curve;
}

std::vector<ThroughputReport> SweepCurve::flatten() const {
  std::vector<ThroughputReport> flat;
  for (const auto& point : reports) {
    flat.insert(flat.end(), point.begin(), point.end());
  }
  return flat;
}

std::string format_results(const std::vector<ThroughputReport>& reports,
                           OutputFormat format) {
  if (format == OutputFormat::Csv) {
    std::ostringstream out;
    out << "scheme,p_avg_w,throughput_bits_per_symbol,achieved_power_w,lambda,"
           "active_epochs\n";
    for (const auto& r : reports) {
      out << scheme_name(r.scheme) << ',' << format_double(r.p_avg) << ','
          << format_double(r.throughput_bits) << ',' << format_double(r.achieved_avg_power)
          << ',' << format_double(r.lambda) << ',' << r.active_epochs << '\n';
    }
    return out.str();
  }
  nlohmann::json root;
  root["results"] = nlohmann::json::array();
  for (const auto& r : reports) {
    root["results"].push_back({{"scheme", scheme_name(r.scheme)},
                               {"p_avg_w", r.p_avg},
                               {"throughput_bits_per_symbol", r.throughput_bits},
                               {"achieved_power_w", r.achieved_avg_power},
                               {"lambda", r.lambda},
                               {"active_epochs", r.active_epochs}});
  }
  return root.dump(2) + "\n";
}

void emit_results(const std::vector<ThroughputReport>& reports,
                  const std::string& path, OutputFormat format) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write results file: " + path);
  out << format_results(reports, format);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace wpcn
