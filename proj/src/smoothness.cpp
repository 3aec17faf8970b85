#include "schubert/smoothness.hpp"

#include <algorithm>
#include <iterator>

namespace schubert {

Regularity is_regular(const BruhatGraph& graph) {
  Regularity out;
  const auto degrees = graph.degrees();
  const auto members = graph.interval().members();
  std::size_t best = 0;
  for (std::size_t p = 1; p < degrees.size(); ++p) {
    if (degrees[p] > degrees[best]) best = p;
  }
  const bool all_equal =
      std::all_of(degrees.begin(), degrees.end(), [&](int d) { return d == degrees[0]; });
  if (all_equal) {
    out.regular = true;
    out.common_degree = degrees.empty() ? 0 : degrees[0];
    return out;
  }
  out.defect = DegreeDefect{members[best], degrees[best], graph.group().length(graph.top())};
  return out;
}

namespace {

SmoothnessCertificate blank_certificate(const BruhatGraph& graph) {
  SmoothnessCertificate cert;
  cert.element = graph.top();
  cert.length = graph.group().length(graph.top());
  cert.interval_size = graph.interval().size();
  return cert;
}

void set_smooth_field(const Group& group, SmoothnessCertificate& cert) {
  if (group.system().simply_laced()) cert.smooth = cert.rationally_smooth;
}

// y = u * t with l(y) > l(u), sorted.
std::vector<ElementId> up_neighbours(const Group& group, ElementId u) {
  std::vector<ElementId> out;
  out.reserve(group.num_reflections());
  for (std::size_t k = 0; k < group.num_reflections(); ++k) {
    const ElementId y = group.right_mul_reflection(u, k);
    if (group.length(y) > group.length(u)) out.push_back(y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SmoothnessCertificate rationally_smooth_cp(const BruhatGraph& graph) {
  auto cert = blank_certificate(graph);
  const auto reg = is_regular(graph);
  cert.rationally_smooth = reg.regular;
  if (reg.regular) {
    cert.evidence = RegularGraph{reg.common_degree};
  } else {
    cert.evidence = *reg.defect;
  }
  set_smooth_field(graph.group(), cert);
  return cert;
}

SmoothnessCertificate rationally_smooth_cp(const Group& group, ElementId w) {
  return rationally_smooth_cp(bruhat_graph(group, w));
}

std::vector<ElementId> common_successors(const Group& group, ElementId x, ElementId v) {
  const auto ux = up_neighbours(group, x);
  const auto uv = up_neighbours(group, v);
  std::vector<ElementId> out;
  std::set_intersection(ux.begin(), ux.end(), uv.begin(), uv.end(), std::back_inserter(out));
  return out;
}

std::vector<BrokenRhombus> find_broken_rhombi(const BruhatGraph& graph, RhombusScan mode) {
  const auto& group = graph.group();
  const auto& interval = graph.interval();
  std::vector<BrokenRhombus> found;
  std::vector<std::vector<ElementId>> ups;
  std::vector<ElementId> common;

  for (int l = interval.max_length(); l >= 0; --l) {
    for (ElementId u : interval.rank(l)) {
      const auto nbrs = graph.out_neighbors(u);
      if (nbrs.size() < 2) continue;
      ups.clear();
      for (ElementId n : nbrs) ups.push_back(up_neighbours(group, n));
      for (std::size_t a = 0; a < nbrs.size(); ++a) {
        for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
          common.clear();
          std::set_intersection(ups[a].begin(), ups[a].end(), ups[b].begin(), ups[b].end(),
                                std::back_inserter(common));
          if (common.empty()) continue;
          const bool escapes = std::none_of(common.begin(), common.end(),
                                            [&](ElementId y) { return interval.contains(y); });
          if (!escapes) continue;
          found.push_back({nbrs[b], u, nbrs[a], common});
          if (mode == RhombusScan::first) return found;
        }
      }
    }
  }
  return found;
}

std::vector<BrokenRhombus> find_broken_rhombi(const Group& group, ElementId w,
                                              RhombusScan mode) {
  return find_broken_rhombi(bruhat_graph(group, w), mode);
}

SmoothnessCertificate rationally_smooth_br(const BruhatGraph& graph) {
  auto cert = blank_certificate(graph);
  auto rhombi = find_broken_rhombi(graph, RhombusScan::first);
  cert.rationally_smooth = rhombi.empty();
  if (rhombi.empty()) {
    cert.evidence = RegularGraph{cert.length};
  } else {
    cert.evidence = std::move(rhombi.front());
  }
  set_smooth_field(graph.group(), cert);
  return cert;
}

SmoothnessCertificate rationally_smooth_br(const Group& group, ElementId w) {
  return rationally_smooth_br(bruhat_graph(group, w));
}

// ---------------------------------------------------------------------------
// Independent validation

namespace {

bool is_reflection_edge(const GroupElement& from, const GroupElement& to) {
  return from.length() < to.length() && reflection_index(multiply(inverse(from), to)) >= 0;
}

}  // namespace

RhombusValidation validate_broken_rhombus(const GroupElement& w, const GroupElement& x,
                                          const GroupElement& u, const GroupElement& v) {
  RhombusValidation out;
  auto fail = [&](std::string why) {
    out.valid = false;
    out.reason = std::move(why);
    return out;
  };
  if (!bruhat_leq(x, w) || !bruhat_leq(u, w) || !bruhat_leq(v, w)) {
    return fail("x, u, v must all lie below w");
  }
  if (x == v) return fail("x and v coincide");
  if (!is_reflection_edge(u, x) || !is_reflection_edge(u, v)) {
    return fail("condition (1): u -> x and u -> v must be Bruhat graph edges");
  }
  for (const auto& t : w.system().reflections()) {
    GroupElement y = multiply(x, t.element);
    if (y.length() > x.length() && is_reflection_edge(v, y)) out.witnesses_y.push_back(std::move(y));
  }
  if (out.witnesses_y.empty()) return fail("condition (2): no y with x -> y <- v");
  for (const auto& y : out.witnesses_y) {
    if (bruhat_leq(y, w)) return fail("condition (3): some y with x -> y <- v lies below w");
  }
  out.valid = true;
  return out;
}

RhombusValidation validate_broken_rhombus(const Group& group, ElementId w,
                                          const BrokenRhombus& rhombus) {
  return validate_broken_rhombus(group.element(w), group.element(rhombus.x),
                                 group.element(rhombus.u), group.element(rhombus.v));
}

}  // namespace schubert
