#pragma once

#include <vector>

#include "wpcn/channel.hpp"
#include "wpcn/config.hpp"
#include "wpcn/exec.hpp"
#include "wpcn/model.hpp"

namespace wpcn {

// Jointly optimal broadcast power and time sharing for the K-node network,
// given the dual variable lambda of the average-power constraint. The
// optimal broadcast power is bang-bang (0 or P_max), the EH duration solves
// a scalar transcendental equation and the IT shares split the remainder of
// the epoch proportionally to the auxiliary coefficients.

/// Bang-bang rule: P_max iff b > lambda, else 0 (ties deactivate).
double power_decision_t1(double b, double lambda, double max_power);

/// Root of g(t) = log(1 + b P t / (1-t)) + lambda P - b P / (1 - t + b P t)
/// on (0, 1). Requires b > lambda, which makes g(0) = P (lambda - b) < 0
/// while g -> +inf as t -> 1; the dual objective is strictly concave in t,
/// so the sign change is unique. root_tol bounds the accepted residual.
double solve_eh_duration_t1(double b, double max_power, double lambda,
                            double root_tol);

/// Proportional split of the IT phase: tau_j = (1 - tau0) * a_j / b.
std::vector<double> time_shares_t1(const std::vector<double>& aux_coeffs, double b,
                                   double eh_fraction);

/// Full per-epoch allocation; inactive epochs (b <= lambda) come back all
/// zero.
EpochAllocation allocate_epoch_t1(const EpochChannelState& state, double lambda,
                                  const NetworkConfig& cfg);

/// Per-epoch allocation over a whole trace. Epochs are independent; the
/// parallel path writes each epoch's slot in place and is bit-identical to
/// the serial reference.
std::vector<EpochAllocation> allocate_trace_t1(const ChannelTrace& trace,
                                               double lambda,
                                               const NetworkConfig& cfg,
                                               Exec exec = Exec::Parallel);

}  // namespace wpcn
