#pragma once

#include <cstddef>
#include <exception>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "oddres/precision.hpp"

namespace oddres {

// Dispatch body(0..n-1) over a bounded worker pool. jobs == 1 is the serial
// reference path (kept for testing and as the fallback without OpenMP);
// jobs == 0 lets the runtime pick. Bodies write disjoint output slots, so
// parallel and serial runs produce identical bytes.
inline void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& body) {
#ifdef _OPENMP
  if (jobs != 1) {
    std::exception_ptr first_error = nullptr;
    int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
    {
      precision::ensure_thread();
#pragma omp for schedule(dynamic)
      for (long long i = 0; i < static_cast<long long>(n); ++i) {
        try {
          body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical
          if (!first_error) first_error = std::current_exception();
        }
      }
    }
    if (first_error) std::rethrow_exception(first_error);
    return;
  }
#else
  (void)jobs;
#endif
  precision::ensure_thread();
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace oddres
