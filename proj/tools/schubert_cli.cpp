// schubert: command-line front end to the Bruhat graph toolkit.
//
//   schubert info D4
//   schubert graph D4 21342 --format dot
//   schubert smooth D4 "2 1 3 4 2" --all-rhombi
//   schubert verify A5 --jobs 4
//   schubert subgroup A3 1 232 --format dot
//   schubert crossval B3
//
// SYSTEM is a catalog label or the path of a file holding a Cartan matrix.
// Exit status: 0 ok, 1 usage or parse error, 2 computation error, 3 theorem
// violation.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "schubert/error.hpp"
#include "schubert/export.hpp"
#include "schubert/smoothness.hpp"
#include "schubert/subgroups.hpp"
#include "schubert/sweep.hpp"
#include "schubert/theorem.hpp"
#include "schubert/word.hpp"

namespace {

using namespace schubert;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;
constexpr int kExitTheorem = 3;

// Whole-group sweeps above this order only run with --long-run.
constexpr std::size_t kLongRunOrder = 30000;

struct RunConfig {
  std::string system;
  std::string word;
  std::vector<std::string> reflection_words;
  std::string format;  // empty: subcommand default
  int jobs = 0;        // 0: default_jobs()
  std::size_t cap = Group::kDefaultCap;
  bool long_run = false;
  bool all_rhombi = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::shared_ptr<const CoxeterSystem> load_system(const std::string& spec) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    std::ifstream in(spec);
    if (!in) throw UsageError("cannot open " + spec);
    return build_system(read_cartan(in), std::filesystem::path(spec).stem().string());
  }
  return build_system(spec);
}

std::string pick_format(const RunConfig& cfg, const std::string& fallback,
                        std::initializer_list<const char*> allowed) {
  const std::string fmt = cfg.format.empty() ? fallback : cfg.format;
  for (const char* a : allowed) {
    if (fmt == a) return fmt;
  }
  throw UsageError("format '" + fmt + "' is not available for this command");
}

int jobs_of(const RunConfig& cfg) { return cfg.jobs > 0 ? cfg.jobs : default_jobs(); }

void require_long_run(const CoxeterSystem& sys, const RunConfig& cfg) {
  if (sys.predicted_order() > kLongRunOrder && !cfg.long_run) {
    throw UsageError(sys.label() + " has " + std::to_string(sys.predicted_order()) +
                     " elements; pass --long-run to sweep it");
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_info(const RunConfig& cfg) {
  const auto sys = load_system(cfg.system);
  const std::string fmt = pick_format(cfg, "text", {"text", "json"});
  const Group group(sys, cfg.cap);
  if (fmt == "json") {
    std::cout << info_json(group).dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "system        " << sys->label() << '\n'
            << "rank          " << sys->rank() << '\n'
            << "order         " << group.size() << '\n'
            << "reflections   " << group.num_reflections() << '\n'
            << "simply laced  " << yes_no(sys->simply_laced()) << '\n'
            << "w0            " << element_label(group, group.longest()) << " (length "
            << group.length(group.longest()) << ")\n";
  return kExitOk;
}

int cmd_graph(const RunConfig& cfg) {
  const auto sys = load_system(cfg.system);
  const std::string fmt = pick_format(cfg, "dot", {"dot", "json", "text"});
  const auto word = parse_word(cfg.word, sys->rank());
  const Group group(sys, cfg.cap);
  const auto graph = bruhat_graph(group, group.from_word(word));
  if (fmt == "dot") {
    write_dot(std::cout, graph);
  } else if (fmt == "json") {
    std::cout << graph_json(graph).dump(2) << '\n';
  } else {
    const auto members = graph.interval().members();
    std::cout << sys->label() << ' ' << element_label(group, graph.top()) << ": "
              << members.size() << " vertices, " << graph.num_edges() << " edges\n";
    for (std::size_t p = 0; p < members.size(); ++p) {
      std::cout << std::setw(3) << group.length(members[p]) << "  deg " << std::setw(3)
                << graph.degrees()[p] << "  " << element_label(group, members[p]) << '\n';
    }
  }
  return kExitOk;
}

int cmd_smooth(const RunConfig& cfg) {
  const auto sys = load_system(cfg.system);
  const std::string fmt = pick_format(cfg, "json", {"json", "text"});
  const auto word = parse_word(cfg.word, sys->rank());
  const Group group(sys, cfg.cap);
  const auto graph = bruhat_graph(group, group.from_word(word));
  const auto cert = rationally_smooth_cp(graph);
  const auto rhombi =
      find_broken_rhombi(graph, cfg.all_rhombi ? RhombusScan::all : RhombusScan::first);

  if (fmt == "json") {
    std::cout << certificate_json(group, cert, rhombi, cfg.all_rhombi).dump(2) << '\n';
    return kExitOk;
  }
  std::cout << sys->label() << ' ' << element_label(group, cert.element) << " (length "
            << cert.length << ", |[e,w]| = " << cert.interval_size << ")\n";
  if (const auto* reg = std::get_if<RegularGraph>(&cert.evidence)) {
    std::cout << "regular of degree " << reg->degree << '\n';
  } else if (const auto* d = std::get_if<DegreeDefect>(&cert.evidence)) {
    std::cout << "not regular: deg(" << element_label(group, d->vertex) << ") = " << d->degree
              << " > " << d->length << '\n';
  }
  for (const auto& r : rhombi) {
    std::cout << "broken rhombus x = " << element_label(group, r.x)
              << ", u = " << element_label(group, r.u) << ", v = " << element_label(group, r.v)
              << ", y outside [e,w]:";
    for (ElementId y : r.witnesses_y) std::cout << ' ' << element_label(group, y);
    std::cout << '\n';
  }
  std::cout << "rationally smooth: " << yes_no(cert.rationally_smooth) << '\n';
  if (rhombi.empty() != cert.rationally_smooth) {
    std::cout << "note: the rhombus scan and the regularity test disagree here\n";
  }
  if (cert.smooth) {
    std::cout << "smooth: " << yes_no(*cert.smooth) << '\n';
  } else {
    std::cout << "smooth: undecided (multiply laced)\n";
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  const auto sys = load_system(cfg.system);
  const std::string fmt = pick_format(cfg, "json", {"json", "text"});
  require_long_run(*sys, cfg);
  const Group group(sys, cfg.cap);
  const auto report = verify_theorem(group, jobs_of(cfg));
  if (fmt == "json") {
    std::cout << report_json(group, report).dump(2) << '\n';
    return kExitOk;
  }
  std::cout << report.system << ": " << report.involution_count << " involutions, "
            << report.smooth_count << (report.simply_laced ? " smooth, " : " rationally smooth, ")
            << report.singular_count << " singular\n";
  std::cout << "witnesses validated: " << report.witnesses_validated << '\n';
  std::cout << "equivalence holds: " << yes_no(report.equivalence_holds) << '\n';
  for (ElementId w : report.mismatches) {
    std::cout << "  mismatch " << element_label(group, w) << '\n';
  }
  return kExitOk;
}

int cmd_crossval(const RunConfig& cfg) {
  const auto sys = load_system(cfg.system);
  const std::string fmt = pick_format(cfg, "json", {"json", "text"});
  require_long_run(*sys, cfg);
  const Group group(sys, cfg.cap);
  const auto report = cross_validate(group, jobs_of(cfg));
  if (fmt == "json") {
    std::cout << crossval_json(group, report).dump(2) << '\n';
  } else {
    std::cout << report.system << ": " << report.elements_checked << " elements, "
              << report.rationally_smooth << " rationally smooth, "
              << report.disagreements.size() << " disagreements\n";
  }
  return report.disagreements.empty() ? kExitOk : kExitComputation;
}

int cmd_subgroup(const RunConfig& cfg) {
  const auto sys = load_system(cfg.system);
  const std::string fmt = pick_format(cfg, "text", {"text", "json", "dot"});
  std::vector<std::vector<int>> words;
  for (const auto& text : cfg.reflection_words) words.push_back(parse_word(text, sys->rank()));
  const Group group(sys, cfg.cap);

  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const int k = group.reflection_index(group.from_word(words[i]));
    if (k < 0) throw UsageError("'" + cfg.reflection_words[i] + "' is not a reflection");
    gens.push_back(static_cast<std::size_t>(k));
  }
  const auto sub = reflection_closure(group, gens);

  if (fmt == "dot") {
    write_dot(std::cout, sub);
  } else if (fmt == "json") {
    std::cout << subgroup_json(sub).dump(2) << '\n';
  } else {
    std::cout << "order " << sub.order() << '\n' << "X =";
    for (std::size_t k : sub.canonical_gens) {
      std::cout << ' ' << element_label(group, group.reflection(k));
    }
    std::cout << '\n';
    if (sub.canonical_gens.size() == 2) std::cout << "m = " << dihedral_type(sub) << '\n';
    std::cout << "coxeter system: " << yes_no(is_coxeter_generating_set(sub)) << '\n'
              << "graphs match: " << yes_no(compare_bruhat_graphs(sub)) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bruhat graph smoothness toolkit for finite Weyl groups", "schubert"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--jobs", cfg.jobs, "Worker threads for sweeps")
      ->envname("SCHUBERT_JOBS")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--cap", cfg.cap, "Refuse to enumerate groups larger than this")
      ->envname("SCHUBERT_CAP")
      ->check(CLI::PositiveNumber);
  app.add_flag("--long-run", cfg.long_run, "Allow sweeps over groups above 30000 elements");

  auto add_system = [&](CLI::App* sub) {
    sub->add_option("system", cfg.system, "Type label or Cartan matrix file")->required();
  };
  auto add_word = [&](CLI::App* sub) {
    sub->add_option("word", cfg.word, "Word in the generators, e.g. 21342 or \"2 1 3\"")
        ->required();
  };

  auto* info = app.add_subcommand("info", "Summary of a Coxeter system");
  add_system(info);
  auto* graph = app.add_subcommand("graph", "Bruhat graph of [e, w]");
  add_system(graph);
  add_word(graph);
  auto* smooth = app.add_subcommand("smooth", "Smoothness certificate for w");
  add_system(smooth);
  add_word(smooth);
  smooth->add_flag("--all-rhombi", cfg.all_rhombi, "Report every broken rhombus");
  auto* verify = app.add_subcommand("verify", "Classify every involution");
  add_system(verify);
  auto* subgroup = app.add_subcommand("subgroup", "Reflection subgroup generated by reflections");
  add_system(subgroup);
  subgroup->add_option("reflections", cfg.reflection_words, "Reflection words")->required();
  auto* crossval = app.add_subcommand("crossval", "Compare both smoothness tests on all of W");
  add_system(crossval);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (info->parsed()) return cmd_info(cfg);
    if (graph->parsed()) return cmd_graph(cfg);
    if (smooth->parsed()) return cmd_smooth(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (subgroup->parsed()) return cmd_subgroup(cfg);
    if (crossval->parsed()) return cmd_crossval(cfg);
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << '\n';
    return kExitTheorem;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnknownType& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const MalformedCartan& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitUsage;
}
