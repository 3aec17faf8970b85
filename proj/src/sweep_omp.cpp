#include <exception>

#include "schubert/sweep.hpp"
#include "sweep_internal.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace schubert {

namespace {

// Exceptions may not cross an OpenMP region; keep the one from the lowest
// index so the rethrown error does not depend on scheduling.
void rethrow_first(const std::vector<std::exception_ptr>& errors) {
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

int default_jobs() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

CrossValidationReport cross_validate_parallel(const Group& group, int jobs) {
  const auto n = static_cast<std::ptrdiff_t>(group.size());
  std::vector<OracleVerdicts> verdicts(group.size());
  std::vector<std::exception_ptr> errors(group.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(jobs)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    try {
      verdicts[static_cast<std::size_t>(k)] = check_oracles(group, static_cast<ElementId>(k));
    } catch (...) {
      errors[static_cast<std::size_t>(k)] = std::current_exception();
    }
  }
  (void)jobs;
  rethrow_first(errors);
  return detail::reduce_cross_validation(group, verdicts);
}

CrossValidationReport cross_validate(const Group& group, int jobs) {
  return jobs > 1 ? cross_validate_parallel(group, jobs) : cross_validate_serial(group);
}

std::vector<InvolutionVerdict> classify_involutions_parallel(const Group& group,
                                                             std::span<const ElementId> invs,
                                                             int jobs) {
  const auto n = static_cast<std::ptrdiff_t>(invs.size());
  std::vector<InvolutionVerdict> out(invs.size());
  std::vector<std::exception_ptr> errors(invs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const auto slot = static_cast<std::size_t>(k);
    try {
      out[slot] = classify_involution(group, invs[slot]);
    } catch (...) {
      errors[slot] = std::current_exception();
    }
  }
  (void)jobs;
  rethrow_first(errors);
  return out;
}

}  // namespace schubert
