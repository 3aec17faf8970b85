#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "schubert/smoothness.hpp"

namespace schubert {

/// Involutions of W including e, ascending id order.
std::vector<ElementId> involutions(const Group& group);

/// Generators occurring in the shortlex word of w (0-based, ascending).
std::vector<int> support(const Group& group, ElementId w);

ElementId longest_element(const Group& group, std::span<const int> subset);

/// v = w0(J) for some J; it suffices to test J = S(v) since S(w0(J)) = J.
bool is_parabolic_longest(const Group& group, ElementId v);

/// Singularity certificate built the way the classical argument builds it:
/// s in S(v) with v < sv, a reflection t <= sv with t not <= v, and the broken
/// rhombus (st, sts, ts) of [e, v].
struct ProofWitness {
  int s = 0;
  std::size_t t = 0;  // reflection index
  BrokenRhombus rhombus;
};

using ProofOutcome = std::variant<ProofWitness, DegreeDefect>;

/// For a non-parabolic-longest involution v of a simply laced system: the
/// degree defect at e when deg_v(e) != l(v), otherwise a ProofWitness.
/// s is the smallest generator in S(v) with v < sv and t the first reflection
/// in root order with t <= sv and t not <= v.
ProofOutcome proof_witness(const Group& group, ElementId v);

/// Re-checks a witness: s in S(v), v < sv, t <= sv, t not <= v, st <= v,
/// ts <= v, and the rhombus passes validate_broken_rhombus.
bool validate_proof_witness(const Group& group, ElementId v, const ProofWitness& witness);

struct InvolutionVerdict {
  ElementId element = 0;
  std::vector<int> support;
  bool parabolic_longest = false;
  SmoothnessCertificate certificate;
  std::optional<ProofOutcome> witness;
  bool witness_validated = false;
};

/// Per-involution kernel shared by the serial and parallel sweeps.
InvolutionVerdict classify_involution(const Group& group, ElementId v);

struct TheoremReport {
  std::string system;
  bool simply_laced = false;
  std::size_t involution_count = 0;
  std::size_t smooth_count = 0;    // rationally smooth, i.e. regular B(v)
  std::size_t singular_count = 0;
  std::size_t witnesses_validated = 0;
  bool equivalence_holds = true;
  std::vector<ElementId> mismatches;  // parabolic_longest != rationally_smooth
  std::vector<InvolutionVerdict> verdicts;
  double elapsed_ms = 0.0;
};

/// Classifies every involution. In a simply laced system a mismatch or a
/// witness that fails re-validation throws TheoremViolation; in multiply laced
/// systems mismatches are only reported.
TheoremReport verify_theorem(const Group& group, int jobs = 1);

}  // namespace schubert
