#pragma once

#include <cstddef>
#include <exception>

namespace ppk {

/// Worker count from an explicit request (> 0), else PPK_JOBS, else the
/// OpenMP default.
int resolve_jobs(int requested = 0);
/// Applies a worker count to subsequent parallel kernels.
void set_jobs(int jobs);
int current_jobs();

/// Runs fn(i) for i in [0, n) across OpenMP workers. The first exception
/// thrown by any iteration is rethrown on the calling thread.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  std::exception_ptr err;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(ppk_parallel_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace ppk
