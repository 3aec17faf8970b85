#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "schubert/bruhat.hpp"
#include "schubert/error.hpp"

using namespace schubert;

TEST_CASE("bruhat_leq agrees with the subword property") {
  for (const char* label : {"A3", "B3", "G2", "D4"}) {
    CAPTURE(label);
    const auto& group = testing::group(label);
    const oracle::Reference ref(group.system().cartan());
    std::vector<oracle::Mat> mats;
    for (ElementId z = 0; z < group.size(); ++z) mats.push_back(ref.from_word(group.word(z)));
    for (ElementId w = 0; w < group.size(); ++w) {
      const auto below = ref.interval(group.word(w));
      for (ElementId u = 0; u < group.size(); ++u) {
        const bool expected = below.count(mats[u]) > 0;
        if (bruhat_leq(group, u, w) != expected) {
          FAIL_CHECK(testing::label(group, u) << " <= " << testing::label(group, w));
        }
      }
    }
  }
}

TEST_CASE("bruhat_leq agrees with reflection chains") {
  const auto& group = testing::group("A3");
  const oracle::Reference ref(group.system().cartan());
  for (ElementId u = 0; u < group.size(); ++u) {
    for (ElementId w = 0; w < group.size(); ++w) {
      const bool expected = ref.chain_leq(ref.from_word(group.word(u)), ref.from_word(group.word(w)));
      CHECK(bruhat_leq(group, u, w) == expected);
      CHECK(bruhat_leq(group.element(u), group.element(w)) == expected);
    }
  }
}

TEST_CASE("value-level comparison refuses mixed systems") {
  const auto& group = testing::group("A2");
  const auto other = build_system("A2");
  CHECK_THROWS_AS(bruhat_leq(group.element(0), other->identity()), SystemMismatch);
}

TEST_CASE("lower intervals") {
  const auto& group = testing::group("D4");
  const auto w = testing::id(group, "21342");
  const auto interval = lower_interval(group, w);
  CHECK(interval.size() == 30);
  CHECK(interval.max_length() == 5);
  CHECK(interval.members().front() == group.identity());
  CHECK(interval.members().back() == w);
  std::size_t total = 0;
  for (int l = 0; l <= 5; ++l) total += interval.rank(l).size();
  CHECK(total == 30);
  CHECK(interval.rank(0).size() == 1);
  CHECK(interval.rank(1).size() == 4);
  for (std::size_t p = 0; p < interval.size(); ++p) {
    CHECK(interval.position(interval.members()[p]) == static_cast<int>(p));
  }
  CHECK(lower_interval(group, group.longest()).size() == group.size());
  CHECK(lower_interval(group, group.identity()).size() == 1);
}

TEST_CASE("B(w0) in A2") {
  const auto& group = testing::group("A2");
  const auto graph = bruhat_graph(group, group.longest());
  CHECK(graph.interval().size() == 6);
  CHECK(graph.num_edges() == 9);
  for (int d : graph.degrees()) CHECK(d == 3);

  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& e : graph.edges()) {
    edges.emplace(testing::label(group, e.from), testing::label(group, e.to));
  }
  const std::set<std::pair<std::string, std::string>> drawn{
      {"e", "1"},  {"e", "2"},  {"e", "121"}, {"1", "12"},  {"1", "21"},
      {"2", "12"}, {"2", "21"}, {"12", "121"}, {"21", "121"},
  };
  CHECK(edges == drawn);
}

TEST_CASE("B(21342) in D4 matches the frozen edge list") {
  const auto& group = testing::group("D4");
  const auto w = testing::id(group, "21342");
  const auto graph = bruhat_graph(group, w);
  CHECK(graph.interval().size() == 30);
  CHECK(group.length(w) == 5);
  CHECK(graph.degree(group.identity()) == 7);

  std::ifstream in(SCHUBERT_GOLDEN_DIR "/d4_21342_edges.txt");
  REQUIRE(in);
  std::set<BruhatEdge> golden;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string from, to;
    fields >> from >> to;
    golden.insert({testing::id(group, from), testing::id(group, to)});
  }
  CHECK(golden.size() == 77);
  const std::set<BruhatEdge> computed(graph.edges().begin(), graph.edges().end());
  CHECK(computed == golden);
}

TEST_CASE("graph edges are exactly the reflection edges inside the interval") {
  for (const char* label : {"A3", "C3", "G2"}) {
    CAPTURE(label);
    const auto& group = testing::group(label);
    const oracle::Reference ref(group.system().cartan());
    for (ElementId w = 0; w < group.size(); w += 3) {
      const auto graph = bruhat_graph(group, w);
      const auto members = graph.interval().members();
      std::set<BruhatEdge> expected;
      for (ElementId a : members) {
        for (ElementId b : members) {
          if (ref.edge(ref.from_word(group.word(a)), ref.from_word(group.word(b)))) {
            expected.insert({a, b});
          }
        }
      }
      CHECK(std::set<BruhatEdge>(graph.edges().begin(), graph.edges().end()) == expected);

      std::size_t out_total = 0;
      for (ElementId a : members) {
        const auto outs = graph.out_neighbors(a);
        out_total += outs.size();
        for (ElementId b : outs) CHECK(expected.count({a, b}) == 1);
      }
      CHECK(out_total == expected.size());

      int degree_sum = 0;
      for (int d : graph.degrees()) degree_sum += d;
      CHECK(degree_sum == 2 * static_cast<int>(graph.num_edges()));
    }
  }
}

TEST_CASE("degree outside the interval is a precondition error") {
  const auto& group = testing::group("A2");
  const auto graph = bruhat_graph(group, testing::id(group, "1"));
  CHECK_THROWS_AS(graph.degree(testing::id(group, "2")), PreconditionViolated);
}
