#pragma once

#include <vector>

#include "wpcn/channel.hpp"
#include "wpcn/config.hpp"
#include "wpcn/exec.hpp"
#include "wpcn/model.hpp"

namespace wpcn {

// Comparison schemes. Both broadcast a constant power every epoch, so their
// average spent power is p * mean(tau0) and stays under the budget by
// construction.

/// Constant broadcast power p = P_avg with the per-epoch throughput-optimal
/// time split: tau0 maximizes (1 - t) log(1 + b p t / (1 - t)) (the
/// unconstrained EH-duration condition with the power cap replaced by p),
/// then shares proportional to the auxiliary coefficients.
EpochAllocation benchmark_fixed_power_epoch(const EpochChannelState& state,
                                            double avg_power,
                                            const NetworkConfig& cfg);

/// Naive floor: p = P_avg and tau0 = tau_1 = ... = tau_K = 1 / (K + 1).
EpochAllocation equal_share_epoch(const EpochChannelState& state, double avg_power,
                                  const NetworkConfig& cfg);

std::vector<EpochAllocation> benchmark_fixed_power_trace(
    const ChannelTrace& trace, double avg_power, const NetworkConfig& cfg,
    Exec exec = Exec::Parallel);

std::vector<EpochAllocation> equal_share_trace(const ChannelTrace& trace,
                                               double avg_power,
                                               const NetworkConfig& cfg,
                                               Exec exec = Exec::Parallel);

}  // namespace wpcn
