#include "wpcn/baselines.hpp"

#include "wpcn/allocator_t1.hpp"

namespace wpcn {

EpochAllocation benchmark_fixed_power_epoch(const EpochChannelState& state,
                                            double avg_power,
                                            const NetworkConfig& cfg) {
  EpochAllocation alloc;
  alloc.bs_power = avg_power;
  alloc.eh_fraction =
      solve_eh_duration_t1(state.aux_sum, avg_power, 0.0, cfg.root_tol);
  alloc.time_shares = time_shares_t1(state.aux_coeffs, state.aux_sum,
                                     alloc.eh_fraction);
  fill_powers_and_rates(alloc, state, cfg.noise_power);
  return alloc;
}

EpochAllocation equal_share_epoch(const EpochChannelState& state, double avg_power,
                                  const NetworkConfig& cfg) {
  EpochAllocation alloc;
  const size_t k = state.aux_coeffs.size();
  alloc.bs_power = avg_power;
  alloc.eh_fraction = 1.0 / static_cast<double>(k + 1);
  alloc.time_shares.assign(k, alloc.eh_fraction);
  fill_powers_and_rates(alloc, state, cfg.noise_power);
  return alloc;
}

namespace {

template <typename EpochFn>
std::vector<EpochAllocation> run_trace(const ChannelTrace& trace, Exec exec,
                                       EpochFn&& fn) {
  std::vector<EpochAllocation> out(trace.epochs.size());
  for_each_epoch_checked(trace.size(), exec, [&](std::int64_t i) {
    out[static_cast<size_t>(i)] = fn(trace.epochs[static_cast<size_t>(i)]);
  });
  return out;
}

}  // namespace

std::vector<EpochAllocation> benchmark_fixed_power_trace(const ChannelTrace& trace,
                                                         double avg_power,
                                                         const NetworkConfig& cfg,
                                                         Exec exec) {
  return run_trace(trace, exec, [&](const EpochChannelState& s) {
    return benchmark_fixed_power_epoch(s, avg_power, cfg);
  });
}

std::vector<EpochAllocation> equal_share_trace(const ChannelTrace& trace,
                                               double avg_power,
                                               const NetworkConfig& cfg, Exec exec) {
  return run_trace(trace, exec, [&](const EpochChannelState& s) {
    return equal_share_epoch(s, avg_power, cfg);
  });
}

}  // namespace wpcn
