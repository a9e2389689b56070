#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wpcn/config.hpp"
#include "wpcn/exec.hpp"
#include "wpcn/model.hpp"

namespace wpcn {

/// A block-fading channel realization over num_epochs epochs. Value type,
/// read-only shareable across workers.
struct ChannelTrace {
  enum class Provenance { Generated, Loaded };

  std::vector<EpochChannelState> epochs;
  Provenance provenance = Provenance::Generated;
  std::uint64_t seed = 0;
  std::string source_path;

  std::int64_t size() const { return static_cast<std::int64_t>(epochs.size()); }
  int num_nodes() const {
    return epochs.empty() ? 0 : static_cast<int>(epochs[0].raw_gains.size());
  }
};

/// Draws cfg.num_epochs epochs of i.i.d. Rayleigh-faded gains: the raw power
/// gain of node j is exponential with mean mean_gain(j) * noise_power.
/// Each (epoch, node) draw comes from its own counter-based substream, so
/// the trace is identical under any parallel partitioning of the loop.
ChannelTrace generate_trace(const NetworkConfig& cfg, Exec exec = Exec::Parallel);

/// CSV with header `epoch,node,gain_raw`, one row per (epoch, node), raw
/// (unnormalized) gains at full round-trip precision.
void save_trace(const ChannelTrace& trace, const std::string& path);

/// Parses a trace CSV written by save_trace and rebuilds the derived fields
/// using cfg.noise_power. The epoch count must match cfg.num_epochs and the
/// node count cfg.num_nodes; gains must be strictly positive.
ChannelTrace load_trace(const std::string& path, const NetworkConfig& cfg);

}  // namespace wpcn
