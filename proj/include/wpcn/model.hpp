#pragma once

#include <utility>
#include <vector>

namespace wpcn {

/// Per-epoch channel realization. Gains are constant within an epoch
/// (block fading). raw_gains are the physical power gains; normalized_gains
/// divide them by the noise power so the rate reads log(1 + P * x).
/// aux_coeffs a_j = N0 * x_j^2 combine the downlink harvesting gain with the
/// uplink transmission gain of node j; aux_sum b = sum_j a_j.
struct EpochChannelState {
  std::vector<double> raw_gains;
  std::vector<double> normalized_gains;
  std::vector<double> aux_coeffs;
  double aux_sum = 0.0;
};

/// a_j = N0 * x_j^2 from the normalized gains; returns (a, b = sum a).
std::pair<std::vector<double>, double> epoch_coefficients(
    const std::vector<double>& normalized_gains, double noise_power);

/// Builds the derived fields from raw gains. With distinct uplink/downlink
/// gains (non-reciprocal channels) a_j = N0 * x_j * y_j; pass the downlink
/// gains as the second argument, otherwise the channel is reciprocal.
EpochChannelState make_epoch_state(const std::vector<double>& raw_gains,
                                   double noise_power);
EpochChannelState make_epoch_state(const std::vector<double>& raw_uplink,
                                   const std::vector<double>& raw_downlink,
                                   double noise_power);

/// Relative-error check that aux_coeffs/aux_sum match a recomputation from
/// the normalized gains.
bool state_consistent(const EpochChannelState& s, double noise_power,
                      double rel_tol = 1e-12);

/// One epoch of the TDMA schedule: broadcast power, harvest fraction, the
/// K information-transmission shares and the resulting per-node transmit
/// powers (watts) and rates (nats/symbol). Inactive epochs are all zero.
struct EpochAllocation {
  double bs_power = 0.0;
  double eh_fraction = 0.0;
  std::vector<double> time_shares;
  std::vector<double> node_tx_powers;
  std::vector<double> node_rates;

  bool active() const { return bs_power > 0.0; }
  double sum_rate() const;
};

/// Node transmit power when all energy harvested during the EH phase is
/// spent over the node's own share: P_j = N0 * p * x_j * tau0 / tau_j.
double node_tx_power(double noise_power, double bs_power, double normalized_gain,
                     double eh_fraction, double time_share);

/// Rate of one node over its share: tau_j * log(1 + P_j * x_j).
double node_rate(double time_share, double tx_power, double normalized_gain);

/// Fills node_tx_powers / node_rates of an allocation from its schedule and
/// the epoch's gains.
void fill_powers_and_rates(EpochAllocation& alloc, const EpochChannelState& state,
                           double noise_power);

}  // namespace wpcn
