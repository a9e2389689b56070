#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wpcn {

/// Static description of the network and of the solver tolerances. All
/// powers are in watts; mean_gain holds the per-node average of the
/// noise-normalized channel power gain (E[raw gain] / noise_power).
/// Immutable value type: validated once, then shared freely across threads.
struct NetworkConfig {
  int num_nodes = 1;
  double noise_power = 1e-12;
  double avg_power = 0.1;
  double max_power = 1.0;
  double processing_cost = 0.0;       // point-to-point mode only
  std::vector<double> mean_gains{1e6};  // one entry, or one per node
  std::int64_t num_epochs = 10000;
  std::uint64_t rng_seed = 1;
  double root_tol = 1e-10;    // residual bound for the EH-duration solves
  double lambda_tol = 1e-6;   // relative tolerance on delivered average power

  /// mean_gains may hold a single value shared by all nodes.
  double mean_gain(int node) const {
    return mean_gains.size() == 1 ? mean_gains[0]
                                  : mean_gains[static_cast<size_t>(node)];
  }
};

struct ConfigViolation {
  std::string field;
  std::string constraint;
};

/// Checks every invariant and reports all violations (empty means valid).
std::vector<ConfigViolation> validate_config(const NetworkConfig& cfg);

/// Throws std::invalid_argument listing every violated field.
const NetworkConfig& require_valid(const NetworkConfig& cfg);

/// Flat `key = value` text format, `#` starts a comment. Keys match the
/// field names; mean_gains takes a comma-separated list.
NetworkConfig load_config(const std::string& path);
void save_config(const NetworkConfig& cfg, const std::string& path);

NetworkConfig parse_config(const std::string& text);
std::string format_config(const NetworkConfig& cfg);

}  // namespace wpcn
