#include "wpcn/allocator_t2.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "wpcn/bisect.hpp"
#include "wpcn/format.hpp"

namespace wpcn {

ActivationWindow activation_window(double lambda, double processing_cost) {
  ActivationWindow w;
  if (lambda == 0.0) {
    w.lo = 0.0;
  } else {
    // conjugate form of -h + sqrt(h^2 + lambda), h = lambda p_c / 2;
    // avoids cancellation when lambda p_c is large
    double h = 0.5 * lambda * processing_cost;
    w.lo = lambda / (h + std::sqrt(h * h + lambda));
  }
  w.hi = processing_cost > 0.0 ? 1.0 / processing_cost
                               : std::numeric_limits<double>::infinity();
  return w;
}

double transmit_power_p2p(double bs_power, double normalized_gain,
                          double eh_fraction, double processing_cost,
                          double noise_power) {
  double harvested_rate = noise_power * bs_power * normalized_gain * eh_fraction /
                          (1.0 - eh_fraction);
  double ps = harvested_rate - processing_cost;
  return ps > 0.0 ? ps : 0.0;
}

double solve_eh_duration_t2(double normalized_gain, double max_power,
                            double noise_power, double lambda,
                            double processing_cost, double root_tol) {
  const double x = normalized_gain;
  const double a = 1.0 - x * processing_cost;
  if (!(a > 0.0)) {
    throw std::invalid_argument(
        "solve_eh_duration_t2: gain at or beyond the upper window edge");
  }
  const double bq = noise_power * max_power * x * x;
  const double penalty = noise_power * lambda * max_power;
  auto h = [a, bq, penalty](double t) {
    double s = 1.0 - t;
    return std::log(a + bq * t / s) + penalty - bq / (s * a + bq * t);
  };
  double root = bisect(h, 0.0, 1.0 - 1e-12);
  double residual = h(root);
  if (!(std::abs(residual) <= root_tol)) {
    throw std::runtime_error("solve_eh_duration_t2: residual " +
                             format_double(residual) + " above tolerance");
  }
  return root;
}

P2PAllocation allocate_epoch_t2(double normalized_gain, double lambda,
                                const NetworkConfig& cfg) {
  P2PAllocation alloc;
  if (!activation_window(lambda, cfg.processing_cost).contains(normalized_gain)) {
    return alloc;
  }
  double eh = solve_eh_duration_t2(normalized_gain, cfg.max_power,
                                   cfg.noise_power, lambda, cfg.processing_cost,
                                   cfg.root_tol);
  if (eh <= 0.0) return alloc;  // exact activation tie: treat as silent
  alloc.bs_power = cfg.max_power;
  alloc.eh_fraction = eh;
  alloc.tx_power = transmit_power_p2p(alloc.bs_power, normalized_gain,
                                      alloc.eh_fraction, cfg.processing_cost,
                                      cfg.noise_power);
  alloc.rate =
      (1.0 - alloc.eh_fraction) * std::log1p(alloc.tx_power * normalized_gain);
  return alloc;
}

std::vector<P2PAllocation> allocate_trace_t2(const ChannelTrace& trace,
                                             double lambda,
                                             const NetworkConfig& cfg,
                                             Exec exec) {
  if (trace.num_nodes() != 1) {
    throw std::invalid_argument("allocate_trace_t2: needs a single-node trace, got " +
                                std::to_string(trace.num_nodes()) + " nodes");
  }
  std::vector<P2PAllocation> out(trace.epochs.size());
  for_each_epoch_checked(trace.size(), exec, [&](std::int64_t i) {
    out[static_cast<size_t>(i)] = allocate_epoch_t2(
        trace.epochs[static_cast<size_t>(i)].normalized_gains[0], lambda, cfg);
  });
  return out;
}

}  // namespace wpcn
