#include "wpcn/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "wpcn/format.hpp"

namespace wpcn {

std::vector<ConfigViolation> validate_config(const NetworkConfig& cfg) {
  std::vector<ConfigViolation> v;
  auto bad = [&v](const std::string& field, const std::string& constraint) {
    v.push_back({field, constraint});
  };

  if (cfg.num_nodes < 1) bad("num_nodes", "must be >= 1");
  if (!(cfg.noise_power > 0)) bad("noise_power", "must be > 0");
  if (!(cfg.avg_power > 0)) bad("avg_power", "must be > 0");
  if (!(cfg.max_power > 0)) bad("max_power", "must be > 0");
  if (cfg.avg_power > cfg.max_power) bad("avg_power", "P_avg exceeds P_max");
  if (!(cfg.processing_cost >= 0)) bad("processing_cost", "must be >= 0");
  if (cfg.num_epochs < 1) bad("num_epochs", "must be >= 1");
  if (cfg.mean_gains.empty()) {
    bad("mean_gains", "must have one entry or one per node");
  } else if (cfg.mean_gains.size() != 1 &&
             cfg.mean_gains.size() != static_cast<size_t>(cfg.num_nodes)) {
    bad("mean_gains", "must have one entry or one per node");
  }
  for (double g : cfg.mean_gains) {
    if (!(g > 0)) {
      bad("mean_gains", "every mean gain must be > 0");
      break;
    }
  }
  if (!(cfg.root_tol > 0 && cfg.root_tol < 1)) bad("root_tol", "must be in (0, 1)");
  if (!(cfg.lambda_tol > 0 && cfg.lambda_tol < 1))
    bad("lambda_tol", "must be in (0, 1)");
  return v;
}

const NetworkConfig& require_valid(const NetworkConfig& cfg) {
  auto violations = validate_config(cfg);
  if (!violations.empty()) {
    std::string msg = "invalid config:";
    for (const auto& x : violations) msg += " [" + x.field + ": " + x.constraint + "]";
    throw std::invalid_argument(msg);
  }
  return cfg;
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& s, const std::string& key) {
  double val = 0;
  auto t = trim(s);
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), val);
  if (ec != std::errc{} || p != t.data() + t.size()) {
    throw std::invalid_argument("config: cannot parse value '" + t + "' for key '" +
                                key + "'");
  }
  return val;
}

}  // namespace

NetworkConfig parse_config(const std::string& text) {
  NetworkConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected 'key = value'");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));

    if (key == "num_nodes") {
      cfg.num_nodes = static_cast<int>(parse_double(value, key));
    } else if (key == "noise_power") {
      cfg.noise_power = parse_double(value, key);
    } else if (key == "avg_power") {
      cfg.avg_power = parse_double(value, key);
    } else if (key == "max_power") {
      cfg.max_power = parse_double(value, key);
    } else if (key == "processing_cost") {
      cfg.processing_cost = parse_double(value, key);
    } else if (key == "mean_gains") {
      cfg.mean_gains.clear();
      std::istringstream vs(value);
      std::string item;
      while (std::getline(vs, item, ',')) {
        cfg.mean_gains.push_back(parse_double(item, key));
      }
      if (cfg.mean_gains.empty()) {
        throw std::invalid_argument("config: mean_gains needs at least one value");
      }
    } else if (key == "num_epochs") {
      cfg.num_epochs = static_cast<std::int64_t>(parse_double(value, key));
    } else if (key == "rng_seed") {
      std::uint64_t seed = 0;
      auto t = trim(value);
      auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), seed);
      if (ec != std::errc{} || p != t.data() + t.size()) {
        throw std::invalid_argument("config: cannot parse rng_seed '" + t + "'");
      }
      cfg.rng_seed = seed;
    } else if (key == "root_tol") {
      cfg.root_tol = parse_double(value, key);
    } else if (key == "lambda_tol") {
      cfg.lambda_tol = parse_double(value, key);
    } else {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

std::string format_config(const NetworkConfig& cfg) {
  std::ostringstream out;
  out << "num_nodes = " << cfg.num_nodes << "\n";
  out << "noise_power = " << format_double(cfg.noise_power) << "\n";
  out << "avg_power = " << format_double(cfg.avg_power) << "\n";
  out << "max_power = " << format_double(cfg.max_power) << "\n";
  out << "processing_cost = " << format_double(cfg.processing_cost) << "\n";
  out << "mean_gains = ";
  for (size_t j = 0; j < cfg.mean_gains.size(); ++j) {
    if (j) out << ", ";
    out << format_double(cfg.mean_gains[j]);
  }
  out << "\n";
  out << "num_epochs = " << cfg.num_epochs << "\n";
  out << "rng_seed = " << cfg.rng_seed << "\n";
  out << "root_tol = " << format_double(cfg.root_tol) << "\n";
  out << "lambda_tol = " << format_double(cfg.lambda_tol) << "\n";
  return out.str();
}

NetworkConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void save_config(const NetworkConfig& cfg, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write config file: " + path);
  out << format_config(cfg);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace wpcn
