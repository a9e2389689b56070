#include "wpcn/channel.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "wpcn/format.hpp"
#include "wpcn/rng.hpp"

namespace wpcn {

ChannelTrace generate_trace(const NetworkConfig& cfg, Exec exec) {
  require_valid(cfg);
  ChannelTrace trace;
  trace.provenance = ChannelTrace::Provenance::Generated;
  trace.seed = cfg.rng_seed;
  trace.epochs.resize(static_cast<size_t>(cfg.num_epochs));

  const int k = cfg.num_nodes;
  for_each_index(cfg.num_epochs, exec, [&](std::int64_t i) {
    std::vector<double> raw(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) {
      double mean = cfg.mean_gain(j) * cfg.noise_power;
      raw[static_cast<size_t>(j)] = exponential_sample(
          mix_key(cfg.rng_seed, static_cast<std::uint64_t>(i),
                  static_cast<std::uint64_t>(j)),
          mean);
    }
    trace.epochs[static_cast<size_t>(i)] = make_epoch_state(raw, cfg.noise_power);
  });
  return trace;
}

void save_trace(const ChannelTrace& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write trace file: " + path);
  out << "epoch,node,gain_raw\n";
  for (size_t i = 0; i < trace.epochs.size(); ++i) {
    const auto& raw = trace.epochs[i].raw_gains;
    for (size_t j = 0; j < raw.size(); ++j) {
      out << i << ',' << j << ',' << format_double(raw[j]) << '\n';
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

ChannelTrace load_trace(const std::string& path, const NetworkConfig& cfg) {
  require_valid(cfg);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trace file: " + path);

  std::string line;
  if (!std::getline(in, line) || line.rfind("epoch,node,gain_raw", 0) != 0) {
    throw std::runtime_error("trace file " + path +
                             ": missing 'epoch,node,gain_raw' header");
  }

  const auto m = static_cast<size_t>(cfg.num_epochs);
  const auto k = static_cast<size_t>(cfg.num_nodes);
  std::vector<std::vector<double>> raw(m, std::vector<double>(k, -1.0));

  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    size_t idx[2];
    for (int c = 0; c < 2; ++c) {
      if (!std::getline(row, cell, ',')) {
        throw std::runtime_error("trace line " + std::to_string(lineno) +
                                 ": expected 3 columns");
      }
      auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), idx[c]);
      if (ec != std::errc{} || p != cell.data() + cell.size()) {
        throw std::runtime_error("trace line " + std::to_string(lineno) + " column " +
                                 std::to_string(c + 1) + ": bad index '" + cell + "'");
      }
    }
    if (!std::getline(row, cell)) {
      throw std::runtime_error("trace line " + std::to_string(lineno) +
                               ": expected 3 columns");
    }
    double gain = 0;
    auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), gain);
    if (ec != std::errc{} || p != cell.data() + cell.size()) {
      throw std::runtime_error("trace line " + std::to_string(lineno) +
                               " column 3: bad gain '" + cell + "'");
    }
    if (idx[0] >= m || idx[1] >= k) {
      throw std::runtime_error("trace line " + std::to_string(lineno) + ": index (" +
                               std::to_string(idx[0]) + "," + std::to_string(idx[1]) +
                               ") outside " + std::to_string(m) + "x" +
                               std::to_string(k));
    }
    if (!(gain > 0)) {
      throw std::runtime_error("non-positive gain at (" + std::to_string(idx[0]) +
                               "," + std::to_string(idx[1]) + ")");
    }
    raw[idx[0]][idx[1]] = gain;
  }

  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < k; ++j) {
      if (raw[i][j] < 0) {
        throw std::runtime_error("trace file " + path + ": missing entry (" +
                                 std::to_string(i) + "," + std::to_string(j) +
                                 "); expected " + std::to_string(m) + " epochs x " +
                                 std::to_string(k) + " nodes");
      }
    }
  }

  ChannelTrace trace;
  trace.provenance = ChannelTrace::Provenance::Loaded;
  trace.source_path = path;
  trace.epochs.reserve(m);
  for (size_t i = 0; i < m; ++i) {
    trace.epochs.push_back(make_epoch_state(raw[i], cfg.noise_power));
  }
  return trace;
}

}  // namespace wpcn
