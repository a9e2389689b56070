#include "wpcn/allocator_t1.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "wpcn/bisect.hpp"
#include "wpcn/format.hpp"

namespace wpcn {

double power_decision_t1(double b, double lambda, double max_power) {
  return b > lambda ? max_power : 0.0;
}

double solve_eh_duration_t1(double b, double max_power, double lambda,
                            double root_tol) {
  const double u = b * max_power;
  const double penalty = lambda * max_power;
  auto g = [u, penalty](double t) {
    double s = 1.0 - t;
    return std::log1p(u * t / s) + penalty - u / (s + u * t);
  };
  // Left endpoint t = 0 evaluates exactly to P*(lambda - b); the right
  // endpoint stays short of 1 where g diverges.
  double root = bisect(g, 0.0, 1.0 - 1e-12);
  double residual = g(root);
  if (!(std::abs(residual) <= root_tol)) {
    throw std::runtime_error("solve_eh_duration_t1: residual " +
                             format_double(residual) + " above tolerance");
  }
  return root;
}

std::vector<double> time_shares_t1(const std::vector<double>& aux_coeffs, double b,
                                   double eh_fraction) {
  std::vector<double> shares(aux_coeffs.size());
  const double it_fraction = 1.0 - eh_fraction;
  for (size_t j = 0; j < aux_coeffs.size(); ++j) {
    shares[j] = it_fraction * aux_coeffs[j] / b;
  }
  return shares;
}

EpochAllocation allocate_epoch_t1(const EpochChannelState& state, double lambda,
                                  const NetworkConfig& cfg) {
  EpochAllocation alloc;
  const size_t k = state.aux_coeffs.size();
  alloc.time_shares.assign(k, 0.0);
  alloc.node_tx_powers.assign(k, 0.0);
  alloc.node_rates.assign(k, 0.0);

  const double b = state.aux_sum;
  alloc.bs_power = power_decision_t1(b, lambda, cfg.max_power);
  if (!alloc.active()) return alloc;

  alloc.eh_fraction = solve_eh_duration_t1(b, cfg.max_power, lambda, cfg.root_tol);
  alloc.time_shares = time_shares_t1(state.aux_coeffs, b, alloc.eh_fraction);
  fill_powers_and_rates(alloc, state, cfg.noise_power);
  return alloc;
}

std::vector<EpochAllocation> allocate_trace_t1(const ChannelTrace& trace,
                                               double lambda,
                                               const NetworkConfig& cfg,
                                               Exec exec) {
  std::vector<EpochAllocation> out(trace.epochs.size());
  for_each_epoch_checked(trace.size(), exec, [&](std::int64_t i) {
    out[static_cast<size_t>(i)] =
        allocate_epoch_t1(trace.epochs[static_cast<size_t>(i)], lambda, cfg);
  });
  return out;
}

}  // namespace wpcn
