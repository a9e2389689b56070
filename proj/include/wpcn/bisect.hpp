#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace wpcn {

struct NoSignChangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bracketed bisection for a continuous function with f(lo) < 0 < f(hi).
/// Runs until the interval collapses to floating-point resolution, so the
/// returned abscissa is accurate to ~1 ulp and the residual |f| is limited
/// only by the slope at the root.
template <typename Fn>
double bisect(Fn&& f, double lo, double hi, int max_iter = 200) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (!(flo < 0.0) || !(fhi > 0.0)) {
    throw NoSignChangeError("bisect: no sign change on bracket [" +
                            std::to_string(lo) + ", " + std::to_string(hi) +
                            "], f = " + std::to_string(flo) + ", " +
                            std::to_string(fhi));
  }
  for (int i = 0; i < max_iter; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval exhausted
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if (fm < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace wpcn
