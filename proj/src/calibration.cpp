#include "wpcn/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wpcn/format.hpp"

#include "wpcn/allocator_t1.hpp"
#include "wpcn/allocator_t2.hpp"

namespace wpcn {

namespace {

// BS energy spent in one epoch (p * tau0) under the given policy.
double epoch_delivered(const EpochChannelState& state, double lambda,
                       DualScheme scheme, const NetworkConfig& cfg) {
  if (scheme == DualScheme::JointT1) {
    double b = state.aux_sum;
    if (power_decision_t1(b, lambda, cfg.max_power) == 0.0) return 0.0;
    return cfg.max_power * solve_eh_duration_t1(b, cfg.max_power, lambda, cfg.root_tol);
  }
  double x = state.normalized_gains[0];
  if (!activation_window(lambda, cfg.processing_cost).contains(x)) return 0.0;
  return cfg.max_power * solve_eh_duration_t2(x, cfg.max_power, cfg.noise_power,
                                              lambda, cfg.processing_cost,
                                              cfg.root_tol);
}

// Initial bracket scale: by the bang-bang rule, lambda beyond the largest
// activation statistic silences every epoch, so the median statistic over
// P_max is a natural starting magnitude.
double lambda_scale(const ChannelTrace& trace, DualScheme scheme,
                    const NetworkConfig& cfg) {
  std::vector<double> stat(trace.epochs.size());
  for (size_t i = 0; i < trace.epochs.size(); ++i) {
    if (scheme == DualScheme::JointT1) {
      stat[i] = trace.epochs[i].aux_sum;
    } else {
      double x = trace.epochs[i].normalized_gains[0];
      stat[i] = x * x;
    }
  }
  auto mid = stat.begin() + static_cast<std::ptrdiff_t>(stat.size() / 2);
  std::nth_element(stat.begin(), mid, stat.end());
  return *mid / cfg.max_power;
}

}  // namespace

double delivered_average_power(const ChannelTrace& trace, double lambda,
                               DualScheme scheme, const NetworkConfig& cfg,
                               Exec exec) {
  std::vector<double> energy(trace.epochs.size());
  for_each_epoch_checked(trace.size(), exec, [&](std::int64_t i) {
    energy[static_cast<size_t>(i)] =
        epoch_delivered(trace.epochs[static_cast<size_t>(i)], lambda, scheme, cfg);
  });
  double sum = 0.0;
  for (double e : energy) sum += e;
  return sum / static_cast<double>(trace.size());
}

LambdaSolution calibrate_lambda(const ChannelTrace& trace, const NetworkConfig& cfg,
                                DualScheme scheme, Exec exec,
                                std::optional<double> lambda_hint) {
  require_valid(cfg);
  if (trace.epochs.empty()) throw std::invalid_argument("calibrate_lambda: empty trace");

  const double target = cfg.avg_power;
  const double band = cfg.lambda_tol * target;

  auto delivered = [&](double lam) {
    return delivered_average_power(trace, lam, scheme, cfg, exec);
  };

  double d0 = delivered(0.0);
  if (d0 <= target) {
    return {0.0, d0, 0, false};
  }

  int iterations = 0;
  double lo = 0.0, dlo = d0;
  double hi = 0.0, dhi = 0.0;

  if (lambda_hint && *lambda_hint > 0.0) {
    double d = delivered(*lambda_hint);
    ++iterations;
    if (std::abs(d - target) <= band) {
      return {*lambda_hint, d, iterations, true};
    }
    if (d > target) {
      lo = *lambda_hint;
      dlo = d;
    } else {
      hi = *lambda_hint;
      dhi = d;
    }
  }

  if (hi == 0.0) {
    hi = std::max(lambda_scale(trace, scheme, cfg), lo * 2.0);
    constexpr int kMaxDoublings = 200;
    int doublings = 0;
    for (;;) {
      dhi = delivered(hi);
      ++iterations;
      if (std::abs(dhi - target) <= band) return {hi, dhi, iterations, true};
      if (dhi < target) break;
      lo = hi;
      dlo = dhi;
      hi *= 2.0;
      if (++doublings > kMaxDoublings) {
        throw CalibrationError(
            "calibrate_lambda: bracket expansion failed after " +
                std::to_string(kMaxDoublings) + " doublings (delivered " +
                format_double(dhi) + " W never fell below the budget " +
                format_double(target) + " W)",
            lo, hi, dlo, dhi, iterations);
      }
    }
  }

  constexpr int kMaxIterations = 200;
  while (iterations < kMaxIterations) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi || (hi - lo) <= 1e-13 * hi) {
      // Bracket exhausted at floating-point resolution: delivered(lambda)
      // jumps across the budget, the tolerance band is unreachable.
      throw CalibrationError(
          "calibrate_lambda: delivered average power is discontinuous at the "
          "budget (jump from " +
              format_double(dlo) + " to " + format_double(dhi) +
              " W around lambda = " + format_double(lo) + "); |delta| = " +
              format_double(dlo - dhi) + " W exceeds the tolerance band " +
              format_double(band) + " W",
          lo, hi, dlo, dhi, iterations);
    }
    double d = delivered(mid);
    ++iterations;
    if (std::abs(d - target) <= band) {
      return {mid, d, iterations, true};
    }
    if (d > target) {
      lo = mid;
      dlo = d;
    } else {
      hi = mid;
      dhi = d;
    }
  }
  throw CalibrationError(
      "calibrate_lambda: iteration cap " + std::to_string(kMaxIterations) +
          " reached without meeting the tolerance band",
      lo, hi, dlo, dhi, iterations);
}

}  // namespace wpcn
