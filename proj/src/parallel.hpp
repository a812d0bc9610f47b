#pragma once

// Thread-count plumbing shared by the OpenMP kernels.

#ifdef _OPENMP
#include <omp.h>
#endif

namespace affcurve::detail {

/// Resolves a requested thread count: 0 means "all available", anything
/// below 1 otherwise means serial.
inline int resolve_threads(int requested) {
#ifdef _OPENMP
  if (requested == 0) return omp_get_max_threads();
  return requested < 1 ? 1 : requested;
#else
  (void)requested;
  return 1;
#endif
}

}  // namespace affcurve::detail
