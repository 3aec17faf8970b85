#include "schubert/export.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "schubert/word.hpp"

namespace schubert {

using nlohmann::json;

std::string element_label(const Group& group, ElementId w) {
  return format_word(group.word(w), group.rank());
}

void write_dot(std::ostream& out, const Group& group, std::span<const ElementId> nodes,
               std::span<const BruhatEdge> edges, std::string_view title,
               std::span<const std::string> comments) {
  for (const auto& line : comments) out << "// " << line << '\n';
  out << "digraph \"" << title << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";

  std::vector<ElementId> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  std::map<int, std::vector<ElementId>> by_length;
  for (ElementId z : sorted) by_length[group.length(z)].push_back(z);
  for (const auto& [len, members] : by_length) {
    out << "  { rank=same;";
    for (ElementId z : members) out << " \"" << element_label(group, z) << "\";";
    out << " }\n";
  }

  std::vector<std::pair<std::string, std::string>> labelled;
  labelled.reserve(edges.size());
  for (const auto& e : edges) {
    labelled.emplace_back(element_label(group, e.from), element_label(group, e.to));
  }
  std::sort(labelled.begin(), labelled.end());
  for (const auto& [from, to] : labelled) out << "  \"" << from << "\" -> \"" << to << "\";\n";
  out << "}\n";
}

void write_dot(std::ostream& out, const BruhatGraph& graph) {
  const auto& group = graph.group();
  const std::string title = group.system().label() + " " + element_label(group, graph.top());
  write_dot(out, group, graph.interval().members(), graph.edges(), title);
}

void write_dot(std::ostream& out, const ReflectionSubgroup& sub) {
  const Group& group = *sub.group;
  std::string names;
  for (std::size_t k : sub.canonical_gens) {
    if (!names.empty()) names += ", ";
    names += element_label(group, group.reflection(k));
  }
  const std::vector<std::string> comments{"X = {" + names + "}"};
  const auto graphs = subgroup_bruhat_graphs(sub);
  write_dot(out, group, sub.elements, graphs.induced, group.system().label() + " subgroup",
            comments);
}

json info_json(const Group& group) {
  const auto& sys = group.system();
  json j;
  j["schema"] = kJsonSchema;
  j["system"] = sys.label();
  j["rank"] = sys.rank();
  j["order"] = group.size();
  j["reflections"] = group.num_reflections();
  j["simply_laced"] = sys.simply_laced();
  j["longest_element"] = element_label(group, group.longest());
  j["longest_length"] = group.length(group.longest());
  j["cartan"] = sys.cartan();
  j["coxeter_matrix"] = sys.coxeter_matrix();
  return j;
}

json graph_json(const BruhatGraph& graph) {
  const auto& group = graph.group();
  json j;
  j["schema"] = kJsonSchema;
  j["system"] = group.system().label();
  j["word"] = element_label(group, graph.top());
  j["length"] = group.length(graph.top());
  json vertices = json::array();
  const auto members = graph.interval().members();
  const auto degrees = graph.degrees();
  for (std::size_t p = 0; p < members.size(); ++p) {
    vertices.push_back({{"word", element_label(group, members[p])},
                        {"length", group.length(members[p])},
                        {"degree", degrees[p]}});
  }
  j["vertices"] = std::move(vertices);
  json edges = json::array();
  for (const auto& e : graph.edges()) {
    edges.push_back({element_label(group, e.from), element_label(group, e.to)});
  }
  j["edges"] = std::move(edges);
  const auto reg = is_regular(graph);
  j["regular"] = reg.regular;
  return j;
}

json rhombus_json(const Group& group, const BrokenRhombus& rhombus) {
  json witnesses = json::array();
  for (ElementId y : rhombus.witnesses_y) witnesses.push_back(element_label(group, y));
  return {{"x", element_label(group, rhombus.x)},
          {"u", element_label(group, rhombus.u)},
          {"v", element_label(group, rhombus.v)},
          {"witnesses", std::move(witnesses)}};
}

namespace {

json defect_json(const Group& group, const DegreeDefect& defect) {
  return {{"vertex", element_label(group, defect.vertex)},
          {"degree", defect.degree},
          {"length", defect.length}};
}

constexpr const char* kUndecided =
    "multiply laced type: only rational smoothness is decided by these criteria";

}  // namespace

json certificate_json(const Group& group, const SmoothnessCertificate& cert,
                      std::span<const BrokenRhombus> rhombi, bool all_rhombi) {
  json j;
  j["schema"] = kJsonSchema;
  j["system"] = group.system().label();
  j["word"] = element_label(group, cert.element);
  j["length"] = cert.length;
  j["interval_size"] = cert.interval_size;
  if (const auto* reg = std::get_if<RegularGraph>(&cert.evidence)) {
    j["regular"] = true;
    j["common_degree"] = reg->degree;
  } else {
    j["regular"] = false;
    if (const auto* defect = std::get_if<DegreeDefect>(&cert.evidence)) {
      j["defect"] = defect_json(group, *defect);
    }
  }
  if (!rhombi.empty()) j["rhombus"] = rhombus_json(group, rhombi.front());
  if (all_rhombi) {
    json list = json::array();
    for (const auto& r : rhombi) list.push_back(rhombus_json(group, r));
    j["rhombi"] = std::move(list);
  }
  j["rationally_smooth"] = cert.rationally_smooth;
  j["criteria_agree"] = rhombi.empty() == cert.rationally_smooth;
  if (cert.smooth) {
    j["smooth"] = *cert.smooth;
  } else {
    j["note"] = kUndecided;
  }
  return j;
}

json report_json(const Group& group, const TheoremReport& report) {
  json j;
  j["schema"] = kJsonSchema;
  j["system"] = report.system;
  j["simply_laced"] = report.simply_laced;
  j["involution_count"] = report.involution_count;

  json rational = json::array();
  json parabolic = json::array();
  json singular = json::array();
  for (const auto& v : report.verdicts) {
    const auto word = element_label(group, v.element);
    if (v.parabolic_longest) parabolic.push_back(word);
    if (v.certificate.rationally_smooth) {
      rational.push_back(word);
      continue;
    }
    json entry;
    entry["word"] = word;
    if (const auto* defect = std::get_if<DegreeDefect>(&v.certificate.evidence)) {
      entry["defect"] = defect_json(group, *defect);
    }
    if (v.witness) {
      json w;
      if (const auto* pw = std::get_if<ProofWitness>(&*v.witness)) {
        w["kind"] = "broken_rhombus";
        w["s"] = std::to_string(pw->s + 1);
        w["t"] = element_label(group, group.reflection(pw->t));
        entry["rhombus"] = rhombus_json(group, pw->rhombus);
      } else {
        w["kind"] = "degree_defect";
        w["defect"] = defect_json(group, std::get<DegreeDefect>(*v.witness));
      }
      w["validated"] = v.witness_validated;
      entry["witness"] = std::move(w);
    }
    singular.push_back(std::move(entry));
  }
  if (report.simply_laced) {
    j["smooth"] = rational;
  } else {
    j["note"] = kUndecided;
  }
  j["rationally_smooth"] = std::move(rational);
  j["parabolic_longest"] = std::move(parabolic);
  j["singular"] = std::move(singular);
  json mismatches = json::array();
  for (ElementId w : report.mismatches) mismatches.push_back(element_label(group, w));
  j["mismatches"] = std::move(mismatches);
  j["smooth_count"] = report.smooth_count;
  j["singular_count"] = report.singular_count;
  j["witnesses_validated"] = report.witnesses_validated;
  j["equivalence_holds"] = report.equivalence_holds;
  j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

json crossval_json(const Group& group, const CrossValidationReport& report) {
  json disagreements = json::array();
  for (ElementId w : report.disagreements) disagreements.push_back(element_label(group, w));
  return {{"schema", kJsonSchema},
          {"system", report.system},
          {"elements_checked", report.elements_checked},
          {"rationally_smooth", report.rationally_smooth},
          {"disagreements", std::move(disagreements)}};
}

json subgroup_json(const ReflectionSubgroup& sub) {
  const Group& group = *sub.group;
  auto words = [&](std::span<const std::size_t> refl) {
    json a = json::array();
    for (std::size_t k : refl) a.push_back(element_label(group, group.reflection(k)));
    return a;
  };
  json j;
  j["schema"] = kJsonSchema;
  j["system"] = group.system().label();
  j["order"] = sub.order();
  j["reflections"] = words(sub.reflections_in);
  j["canonical_generators"] = words(sub.canonical_gens);
  if (sub.canonical_gens.size() == 2) j["dihedral_type"] = dihedral_type(sub);
  j["coxeter_system"] = is_coxeter_generating_set(sub);
  j["graphs_match"] = compare_bruhat_graphs(sub);
  j["induced_edges"] = subgroup_bruhat_graphs(sub).induced.size();
  return j;
}

}  // namespace schubert
