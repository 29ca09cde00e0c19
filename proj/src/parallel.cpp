#include "fratio/parallel.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace fratio {

namespace {

int initial_jobs() {
  if (const char *env = std::getenv("FRATIO_JOBS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) {
        return n;
      }
    } catch (...) {
    }
  }
  return omp_get_max_threads();
}

int &job_count() {
  static int n = initial_jobs();
  return n;
}

} // namespace

int jobs() { return job_count(); }

void set_jobs(int n) { job_count() = n > 0 ? n : omp_get_max_threads(); }

} // namespace fratio
