#pragma once

// DOT and JSON renderings. Elements always appear as canonical shortlex words
// ("e" for the identity), and every output is byte-deterministic for a given
// input except the elapsed_ms timing field of theorem reports.

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "schubert/subgroups.hpp"
#include "schubert/sweep.hpp"
#include "schubert/theorem.hpp"

namespace schubert {

inline constexpr int kJsonSchema = 1;

std::string element_label(const Group& group, ElementId w);

/// Nodes grouped into rank=same blocks by length, in (length, shortlex)
/// order; edges sorted by the (source, target) label strings.
void write_dot(std::ostream& out, const Group& group, std::span<const ElementId> nodes,
               std::span<const BruhatEdge> edges, std::string_view title,
               std::span<const std::string> comments = {});

void write_dot(std::ostream& out, const BruhatGraph& graph);

/// Induced Bruhat graph of a reflection subgroup, annotated with X.
void write_dot(std::ostream& out, const ReflectionSubgroup& sub);

nlohmann::json info_json(const Group& group);
nlohmann::json graph_json(const BruhatGraph& graph);
nlohmann::json rhombus_json(const Group& group, const BrokenRhombus& rhombus);

/// Certificate from the regularity test, with the rhombus scan attached. When
/// `all_rhombi` is set every match is listed under "rhombi". "criteria_agree"
/// records whether the rhombus scan reached the same verdict as regularity.
nlohmann::json certificate_json(const Group& group, const SmoothnessCertificate& cert,
                                std::span<const BrokenRhombus> rhombi, bool all_rhombi);

nlohmann::json report_json(const Group& group, const TheoremReport& report);
nlohmann::json crossval_json(const Group& group, const CrossValidationReport& report);
nlohmann::json subgroup_json(const ReflectionSubgroup& sub);

}  // namespace schubert
