#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "wpcn/channel.hpp"
#include "wpcn/config.hpp"
#include "wpcn/exec.hpp"

namespace wpcn {

/// The two dual-controlled allocation policies. Each owns its own lambda
/// convention (the point-to-point constraint is noise-scaled), so calibrated
/// outputs are comparable across policies even though raw lambdas are not.
enum class DualScheme { JointT1, JointT2 };

struct LambdaSolution {
  double lambda = 0.0;
  double achieved_avg_power = 0.0;  // (1/M) sum p_i tau0_i, watts
  int iterations = 0;
  bool constraint_active = false;
};

/// Raised when bisection cannot place the delivered average power inside the
/// tolerance band: either the bracket expansion failed or the empirical
/// delivered(lambda) curve jumps across the target (an epoch activates with
/// a non-vanishing EH duration, which happens with a nonzero processing
/// cost on a finite trace).
struct CalibrationError : std::runtime_error {
  CalibrationError(const std::string& msg, double lo, double hi, double dlo,
                   double dhi, int iters)
      : std::runtime_error(msg),
        lambda_lo(lo),
        lambda_hi(hi),
        delivered_lo(dlo),
        delivered_hi(dhi),
        iterations(iters) {}
  double lambda_lo;
  double lambda_hi;
  double delivered_lo;
  double delivered_hi;
  int iterations;
};

/// Average BS power actually spent on energy broadcast at this lambda:
/// (1/M) sum_i p_i * tau0_i. Per-epoch terms are computed independently
/// (parallelizable) and reduced in epoch order.
double delivered_average_power(const ChannelTrace& trace, double lambda,
                               DualScheme scheme, const NetworkConfig& cfg,
                               Exec exec = Exec::Parallel);

/// Finds lambda such that the delivered average power meets cfg.avg_power
/// within cfg.lambda_tol (relative), by bisection on an auto-expanded
/// bracket. If the budget is slack at lambda = 0 the constraint is reported
/// inactive. lambda_hint, when given, is probed first so a previously
/// calibrated value is confirmed in one evaluation.
LambdaSolution calibrate_lambda(const ChannelTrace& trace, const NetworkConfig& cfg,
                                DualScheme scheme, Exec exec = Exec::Parallel,
                                std::optional<double> lambda_hint = std::nullopt);

}  // namespace wpcn
