#pragma once

#include <vector>

#include "wpcn/channel.hpp"
#include "wpcn/config.hpp"
#include "wpcn/exec.hpp"

namespace wpcn {

// Point-to-point variant: a single node whose circuitry burns a fixed
// processing power while transmitting. The dual variable here multiplies
// the noise-scaled budget constraint, so lambda values are not numerically
// interchangeable with the K-node allocator's; for zero processing cost the
// two match under lambda_t1 = N0 * lambda_t2.

/// Normalized-gain interval on which the broadcast power is P_max:
/// lo = -lambda p_c / 2 + sqrt((lambda p_c)^2 / 4 + lambda), hi = 1 / p_c
/// (hi is +inf when p_c = 0). Outside the epoch stays silent.
struct ActivationWindow {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const { return x > lo && x < hi; }
};

ActivationWindow activation_window(double lambda, double processing_cost);

/// Residual transmit power after the circuit draw:
/// P_S = N0 p x tau0 / (1 - tau0) - p_c, floored at 0 (a node whose harvest
/// cannot cover the circuit cost stays silent with zero rate).
double transmit_power_p2p(double bs_power, double normalized_gain,
                          double eh_fraction, double processing_cost,
                          double noise_power);

/// Root of h(t) = log(1 - x p_c + B t/(1-t)) + N0 lambda P
///              - B / ((1-t)(1 - x p_c) + B t),  B = N0 P x^2,
/// on (0, 1). Requires x strictly inside the activation window, where
/// h(0) < 0 and h -> +inf as t -> 1.
double solve_eh_duration_t2(double normalized_gain, double max_power,
                            double noise_power, double lambda,
                            double processing_cost, double root_tol);

struct P2PAllocation {
  double bs_power = 0.0;
  double eh_fraction = 0.0;
  double tx_power = 0.0;  // watts
  double rate = 0.0;      // nats/symbol

  bool active() const { return bs_power > 0.0; }
};

P2PAllocation allocate_epoch_t2(double normalized_gain, double lambda,
                                const NetworkConfig& cfg);

/// Trace kernel; requires a single-node trace.
std::vector<P2PAllocation> allocate_trace_t2(const ChannelTrace& trace,
                                             double lambda,
                                             const NetworkConfig& cfg,
                                             Exec exec = Exec::Parallel);

}  // namespace wpcn
