#pragma once

#include <vector>

#include "schubert/sweep.hpp"

namespace schubert::detail {

CrossValidationReport reduce_cross_validation(const Group& group,
                                              const std::vector<OracleVerdicts>& verdicts);

}  // namespace schubert::detail
