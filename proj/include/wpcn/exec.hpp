#pragma once

#include <cstdint>
#include <exception>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wpcn {

/// Execution policy for the per-epoch kernels. Serial is the reference
/// implementation; Parallel runs the same loop body under OpenMP. Both
/// produce bit-identical results because every iteration writes only its
/// own slot and reductions are done afterwards in index order.
enum class Exec { Serial, Parallel };

template <typename Fn>
void for_each_index(std::int64_t n, Exec exec, Fn&& fn) {
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      fn(i);
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) {
      fn(i);
    }
  }
}

/// Same loop, but a throwing iteration is caught and rethrown after the
/// loop with its index attached. The lowest failing index wins, so the
/// reported error does not depend on thread scheduling.
template <typename Fn>
void for_each_epoch_checked(std::int64_t n, Exec exec, Fn&& fn) {
  if (exec == Exec::Serial) {
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        fn(i);
      } catch (const std::exception& e) {
        throw std::runtime_error("epoch " + std::to_string(i) + ": " + e.what());
      }
    }
    return;
  }
  std::exception_ptr error;
  std::int64_t error_index = -1;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      fn(i);
    } catch (...) {
#pragma omp critical(wpcn_epoch_error)
      {
        if (error_index < 0 || i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
  }
  if (error) {
    try {
      std::rethrow_exception(error);
    } catch (const std::exception& e) {
      throw std::runtime_error("epoch " + std::to_string(error_index) + ": " +
                               e.what());
    }
  }
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

}  // namespace wpcn
