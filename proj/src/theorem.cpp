#include "schubert/theorem.hpp"

#include <algorithm>
#include <chrono>

#include "schubert/error.hpp"
#include "schubert/sweep.hpp"
#include "schubert/word.hpp"

namespace schubert {

std::vector<ElementId> involutions(const Group& group) {
  std::vector<ElementId> out;
  for (ElementId w = 0; w < group.size(); ++w) {
    if (group.inverse(w) == w) out.push_back(w);
  }
  return out;
}

std::vector<int> support(const Group& group, ElementId w) {
  auto letters = group.word(w);
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  return letters;
}

ElementId longest_element(const Group& group, std::span<const int> subset) {
  for (int s : subset) {
    if (s < 0 || s >= group.rank()) throw PreconditionViolated("generator index out of range");
  }
  ElementId w = group.identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (int s : subset) {
      if (!group.is_left_descent(s, w)) {
        w = group.left_mul(s, w);
        grew = true;
        break;
      }
    }
  }
  return w;
}

bool is_parabolic_longest(const Group& group, ElementId v) {
  return longest_element(group, support(group, v)) == v;
}

ProofOutcome proof_witness(const Group& group, ElementId v) {
  if (!group.system().simply_laced()) {
    throw PreconditionViolated("proof witnesses exist only for simply laced systems");
  }
  if (group.inverse(v) != v) throw PreconditionViolated("element is not an involution");
  if (is_parabolic_longest(group, v)) {
    throw PreconditionViolated("element is the longest element of a parabolic subgroup");
  }

  const int length_v = group.length(v);
  int degree_e = 0;
  for (ElementId t : group.reflections()) {
    if (bruhat_leq(group, t, v)) ++degree_e;
  }
  if (degree_e != length_v) return DegreeDefect{group.identity(), degree_e, length_v};

  int s = -1;
  for (int candidate : support(group, v)) {
    if (!group.is_left_descent(candidate, v)) {
      s = candidate;
      break;
    }
  }
  if (s < 0) throw TheoremViolation("no generator s in S(v) with v < sv");
  const ElementId sv = group.left_mul(s, v);

  for (std::size_t k = 0; k < group.num_reflections(); ++k) {
    const ElementId t = group.reflection(k);
    if (!bruhat_leq(group, t, sv) || bruhat_leq(group, t, v)) continue;
    const ElementId st = group.left_mul(s, t);
    const ElementId sts = group.right_mul(st, s);
    const ElementId ts = group.right_mul(t, s);
    ProofWitness witness;
    witness.s = s;
    witness.t = k;
    witness.rhombus = {st, sts, ts, common_successors(group, st, ts)};
    return witness;
  }
  throw TheoremViolation("no reflection t <= sv with t not <= v for v = " +
                         format_word(group.word(v), group.rank()));
}

bool validate_proof_witness(const Group& group, ElementId v, const ProofWitness& witness) {
  const GroupElement& elem_v = group.element(v);
  const auto& sys = group.system();
  if (witness.t >= sys.reflections().size()) return false;
  const auto letters = schubert::support(elem_v);
  if (!std::binary_search(letters.begin(), letters.end(), witness.s)) return false;

  const GroupElement sv = left_multiply(witness.s, elem_v);
  if (sv.length() != elem_v.length() + 1) return false;
  const GroupElement& t = sys.reflections()[witness.t].element;
  if (!bruhat_leq(t, sv) || bruhat_leq(t, elem_v)) return false;

  const GroupElement st = left_multiply(witness.s, t);
  const GroupElement sts = right_multiply(st, witness.s);
  const GroupElement ts = right_multiply(t, witness.s);
  if (group.element(witness.rhombus.x) != st || group.element(witness.rhombus.u) != sts ||
      group.element(witness.rhombus.v) != ts) {
    return false;
  }
  if (!bruhat_leq(st, elem_v) || !bruhat_leq(ts, elem_v)) return false;

  const auto check = validate_broken_rhombus(elem_v, st, sts, ts);
  if (!check.valid) return false;
  if (check.witnesses_y.size() != witness.rhombus.witnesses_y.size()) return false;
  for (const auto& y : check.witnesses_y) {
    const auto id = group.find(y);
    if (!id || !std::binary_search(witness.rhombus.witnesses_y.begin(),
                                   witness.rhombus.witnesses_y.end(), *id)) {
      return false;
    }
  }
  return true;
}

InvolutionVerdict classify_involution(const Group& group, ElementId v) {
  InvolutionVerdict verdict;
  verdict.element = v;
  verdict.support = support(group, v);
  verdict.parabolic_longest = longest_element(group, verdict.support) == v;
  const auto graph = bruhat_graph(group, v);
  verdict.certificate = rationally_smooth_cp(graph);

  if (group.system().simply_laced() && !verdict.parabolic_longest) {
    verdict.witness = proof_witness(group, v);
    if (const auto* w = std::get_if<ProofWitness>(&*verdict.witness)) {
      verdict.witness_validated = validate_proof_witness(group, v, *w);
    } else {
      const auto& defect = std::get<DegreeDefect>(*verdict.witness);
      verdict.witness_validated = defect.degree != defect.length &&
                                  graph.degree(group.identity()) == defect.degree;
    }
  }
  return verdict;
}

TheoremReport verify_theorem(const Group& group, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  TheoremReport report;
  report.system = group.system().label();
  report.simply_laced = group.system().simply_laced();

  const auto invs = involutions(group);
  report.involution_count = invs.size();
  report.verdicts = jobs > 1 ? classify_involutions_parallel(group, invs, jobs)
                             : classify_involutions_serial(group, invs);

  std::vector<ElementId> unvalidated;
  for (const auto& verdict : report.verdicts) {
    if (verdict.certificate.rationally_smooth) {
      ++report.smooth_count;
    } else {
      ++report.singular_count;
    }
    if (verdict.parabolic_longest != verdict.certificate.rationally_smooth) {
      report.mismatches.push_back(verdict.element);
    }
    if (verdict.witness) {
      if (verdict.witness_validated) {
        ++report.witnesses_validated;
      } else {
        unvalidated.push_back(verdict.element);
      }
    }
  }
  report.equivalence_holds = report.mismatches.empty();
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (report.simply_laced && (!report.mismatches.empty() || !unvalidated.empty())) {
    std::string msg = "involution criterion fails in " + report.system + ":";
    for (ElementId w : report.mismatches) msg += " mismatch " + format_word(group.word(w), group.rank());
    for (ElementId w : unvalidated) msg += " unvalidated " + format_word(group.word(w), group.rank());
    throw TheoremViolation(msg);
  }
  return report;
}

}  // namespace schubert
