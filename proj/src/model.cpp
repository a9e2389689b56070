#include "wpcn/model.hpp"

#include <cmath>
#include <stdexcept>

namespace wpcn {

std::pair<std::vector<double>, double> epoch_coefficients(
    const std::vector<double>& normalized_gains, double noise_power) {
  std::vector<double> a(normalized_gains.size());
  double b = 0.0;
  for (size_t j = 0; j < normalized_gains.size(); ++j) {
    a[j] = noise_power * normalized_gains[j] * normalized_gains[j];
    b += a[j];
  }
  return {std::move(a), b};
}

EpochChannelState make_epoch_state(const std::vector<double>& raw_gains,
                                   double noise_power) {
  return make_epoch_state(raw_gains, raw_gains, noise_power);
}

EpochChannelState make_epoch_state(const std::vector<double>& raw_uplink,
                                   const std::vector<double>& raw_downlink,
                                   double noise_power) {
  if (raw_uplink.size() != raw_downlink.size()) {
    throw std::invalid_argument("uplink/downlink gain vectors differ in length");
  }
  EpochChannelState s;
  s.raw_gains = raw_uplink;
  s.normalized_gains.resize(raw_uplink.size());
  s.aux_coeffs.resize(raw_uplink.size());
  s.aux_sum = 0.0;
  for (size_t j = 0; j < raw_uplink.size(); ++j) {
    if (!(raw_uplink[j] > 0) || !(raw_downlink[j] > 0)) {
      throw std::invalid_argument("channel gains must be strictly positive");
    }
    s.normalized_gains[j] = raw_uplink[j] / noise_power;
    double y = raw_downlink[j] / noise_power;
    s.aux_coeffs[j] = noise_power * s.normalized_gains[j] * y;
    s.aux_sum += s.aux_coeffs[j];
  }
  return s;
}

bool state_consistent(const EpochChannelState& s, double noise_power,
                      double rel_tol) {
  auto [a, b] = epoch_coefficients(s.normalized_gains, noise_power);
  for (size_t j = 0; j < a.size(); ++j) {
    double ref = a[j];
    if (std::abs(s.aux_coeffs[j] - ref) > rel_tol * std::abs(ref)) return false;
  }
  return std::abs(s.aux_sum - b) <= rel_tol * std::abs(b);
}

double EpochAllocation::sum_rate() const {
  double r = 0.0;
  for (double x : node_rates) r += x;
  return r;
}

double node_tx_power(double noise_power, double bs_power, double normalized_gain,
                     double eh_fraction, double time_share) {
  return noise_power * bs_power * normalized_gain * eh_fraction / time_share;
}

double node_rate(double time_share, double tx_power, double normalized_gain) {
  return time_share * std::log1p(tx_power * normalized_gain);
}

void fill_powers_and_rates(EpochAllocation& alloc, const EpochChannelState& state,
                           double noise_power) {
  size_t k = alloc.time_shares.size();
  alloc.node_tx_powers.assign(k, 0.0);
  alloc.node_rates.assign(k, 0.0);
  if (!alloc.active()) return;
  for (size_t j = 0; j < k; ++j) {
    alloc.node_tx_powers[j] =
        node_tx_power(noise_power, alloc.bs_power, state.normalized_gains[j],
                      alloc.eh_fraction, alloc.time_shares[j]);
    alloc.node_rates[j] = node_rate(alloc.time_shares[j], alloc.node_tx_powers[j],
                                    state.normalized_gains[j]);
  }
}

}  // namespace wpcn
