#pragma once

// Whole-group sweeps. Every sweep has a serial reference driver and an OpenMP
// driver that partitions the same per-element kernel across threads; results
// are written into per-element slots, so both produce identical output.

#include <span>
#include <string>
#include <vector>

#include "schubert/theorem.hpp"

namespace schubert {

struct CrossValidationReport {
  std::string system;
  std::size_t elements_checked = 0;
  std::size_t rationally_smooth = 0;
  std::vector<ElementId> disagreements;  // ascending

  friend bool operator==(const CrossValidationReport&, const CrossValidationReport&) = default;
};

/// Verdicts of both smoothness oracles for one element.
struct OracleVerdicts {
  bool regular = false;          // Carrell-Peterson
  bool rhombus_free = false;     // broken rhombus scan
};

OracleVerdicts check_oracles(const Group& group, ElementId w);

CrossValidationReport cross_validate_serial(const Group& group);
CrossValidationReport cross_validate_parallel(const Group& group, int jobs);
/// jobs <= 1 runs the serial driver.
CrossValidationReport cross_validate(const Group& group, int jobs = 1);

std::vector<InvolutionVerdict> classify_involutions_serial(const Group& group,
                                                           std::span<const ElementId> invs);
std::vector<InvolutionVerdict> classify_involutions_parallel(const Group& group,
                                                             std::span<const ElementId> invs,
                                                             int jobs);

/// Threads OpenMP would use by default, 1 without OpenMP.
int default_jobs();
bool openmp_enabled();

}  // namespace schubert
