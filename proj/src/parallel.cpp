#include "ppk/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

#include "ppk/errors.hpp"

namespace ppk {

int resolve_jobs(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("PPK_JOBS"); env && *env) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("PPK_JOBS must be a positive integer, got '") + env + "'");
  }
  return omp_get_max_threads();
}

void set_jobs(int jobs) { omp_set_num_threads(jobs > 0 ? jobs : 1); }

int current_jobs() { return omp_get_max_threads(); }

}  // namespace ppk
