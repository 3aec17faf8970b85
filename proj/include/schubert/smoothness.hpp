#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "schubert/bruhat.hpp"

namespace schubert {

struct RegularGraph {
  int degree = 0;
};

struct DegreeDefect {
  ElementId vertex = 0;
  int degree = 0;
  int length = 0;  // l(w), the degree every vertex has in a regular graph
};

/// (x, u, v) with x <- u -> v inside [e, w], where every y with x -> y <- v
/// lies outside [e, w] and at least one such y exists.
struct BrokenRhombus {
  ElementId x = 0;
  ElementId u = 0;
  ElementId v = 0;
  std::vector<ElementId> witnesses_y;  // ascending
};

using Evidence = std::variant<RegularGraph, DegreeDefect, BrokenRhombus>;

struct SmoothnessCertificate {
  ElementId element = 0;
  int length = 0;
  std::size_t interval_size = 0;
  bool rationally_smooth = false;
  /// Only set for simply laced systems, where it equals rationally_smooth.
  std::optional<bool> smooth;
  Evidence evidence;
};

struct Regularity {
  bool regular = false;
  int common_degree = 0;  // meaningful when regular
  std::optional<DegreeDefect> defect;
};

/// Regularity of B(w). A defect reports the first vertex of maximal degree.
Regularity is_regular(const BruhatGraph& graph);

SmoothnessCertificate rationally_smooth_cp(const BruhatGraph& graph);
SmoothnessCertificate rationally_smooth_cp(const Group& group, ElementId w);

enum class RhombusScan { first, all };

/// Scans u in order of decreasing length (shortlex among equals), then the
/// unordered pairs of out-neighbours {v, x} of u with v before x in shortlex
/// order. Each rhombus is reported once, as (x, u, v).
std::vector<BrokenRhombus> find_broken_rhombi(const BruhatGraph& graph, RhombusScan mode);
std::vector<BrokenRhombus> find_broken_rhombi(const Group& group, ElementId w,
                                              RhombusScan mode);

SmoothnessCertificate rationally_smooth_br(const BruhatGraph& graph);
SmoothnessCertificate rationally_smooth_br(const Group& group, ElementId w);

/// All y in W with x -> y <- v, ascending.
std::vector<ElementId> common_successors(const Group& group, ElementId x, ElementId v);

struct RhombusValidation {
  bool valid = false;
  std::string reason;
  std::vector<GroupElement> witnesses_y;
};

/// Re-checks the three broken-rhombus conditions for (x, u, v) in [e, w] using
/// only element multiplication, lengths and bruhat_leq on bare elements; it
/// shares no code with the table-driven scan.
RhombusValidation validate_broken_rhombus(const GroupElement& w, const GroupElement& x,
                                          const GroupElement& u, const GroupElement& v);

RhombusValidation validate_broken_rhombus(const Group& group, ElementId w,
                                          const BrokenRhombus& rhombus);

}  // namespace schubert
