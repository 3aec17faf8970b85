#include "schubert/sweep.hpp"
#include "sweep_internal.hpp"

namespace schubert {

OracleVerdicts check_oracles(const Group& group, ElementId w) {
  const auto graph = bruhat_graph(group, w);
  return {is_regular(graph).regular, find_broken_rhombi(graph, RhombusScan::first).empty()};
}

namespace detail {

CrossValidationReport reduce_cross_validation(const Group& group,
                                              const std::vector<OracleVerdicts>& verdicts) {
  CrossValidationReport report;
  report.system = group.system().label();
  report.elements_checked = verdicts.size();
  for (ElementId w = 0; w < verdicts.size(); ++w) {
    if (verdicts[w].regular != verdicts[w].rhombus_free) report.disagreements.push_back(w);
    if (verdicts[w].regular) ++report.rationally_smooth;
  }
  return report;
}

}  // namespace detail

CrossValidationReport cross_validate_serial(const Group& group) {
  std::vector<OracleVerdicts> verdicts(group.size());
  for (ElementId w = 0; w < group.size(); ++w) verdicts[w] = check_oracles(group, w);
  return detail::reduce_cross_validation(group, verdicts);
}

std::vector<InvolutionVerdict> classify_involutions_serial(const Group& group,
                                                           std::span<const ElementId> invs) {
  std::vector<InvolutionVerdict> out;
  out.reserve(invs.size());
  for (ElementId v : invs) out.push_back(classify_involution(group, v));
  return out;
}

}  // namespace schubert
