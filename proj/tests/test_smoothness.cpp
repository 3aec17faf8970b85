#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "schubert/smoothness.hpp"

using namespace schubert;

TEST_CASE("regularity agrees with the brute-force degree count") {
  for (const char* label : {"A3", "A4", "B3", "C2", "G2", "D4"}) {
    CAPTURE(label);
    const auto& group = testing::group(label);
    const oracle::Reference ref(group.system().cartan());
    for (ElementId w = 0; w < group.size(); ++w) {
      const auto graph = bruhat_graph(group, w);
      const auto interval = ref.interval(group.word(w));
      const auto deg = ref.degrees(interval);
      for (ElementId z : graph.interval().members()) {
        CHECK(graph.degree(z) == deg.at(ref.from_word(group.word(z))));
      }
      const auto cert = rationally_smooth_cp(graph);
      CHECK(cert.rationally_smooth == ref.regular(interval));
      CHECK(cert.length == group.length(w));
      CHECK(cert.interval_size == interval.size());
      CHECK(cert.smooth.has_value() == group.system().simply_laced());
    }
  }
}

TEST_CASE("rhombus scan agrees with the literal definition") {
  for (const char* label : {"A3", "B3", "C2", "G2", "D4"}) {
    CAPTURE(label);
    const auto& group = testing::group(label);
    const oracle::Reference ref(group.system().cartan());
    for (ElementId w = 0; w < group.size(); ++w) {
      const bool expected = ref.has_broken_rhombus(ref.interval(group.word(w)));
      CHECK(find_broken_rhombi(group, w, RhombusScan::first).empty() == !expected);
    }
  }
}

TEST_CASE("in simply laced types the two criteria coincide") {
  for (const char* label : {"A3", "A4", "D4"}) {
    CAPTURE(label);
    const auto& group = testing::group(label);
    for (ElementId w = 0; w < group.size(); ++w) {
      const auto cp = rationally_smooth_cp(group, w);
      const auto br = rationally_smooth_br(group, w);
      CHECK(cp.rationally_smooth == br.rationally_smooth);
      CHECK(cp.smooth == br.smooth);
    }
  }
}

TEST_CASE("the D4 example: 21342 is singular with the rhombus (23, 2, 12)") {
  const auto& group = testing::group("D4");
  const auto w = testing::id(group, "21342");
  const auto cert = rationally_smooth_cp(group, w);
  CHECK_FALSE(cert.rationally_smooth);
  REQUIRE(cert.smooth.has_value());
  CHECK_FALSE(*cert.smooth);
  const auto* defect = std::get_if<DegreeDefect>(&cert.evidence);
  REQUIRE(defect != nullptr);
  CHECK(defect->degree == 7);
  CHECK(defect->length == 5);

  const auto rhombi = find_broken_rhombi(group, w, RhombusScan::first);
  REQUIRE(rhombi.size() == 1);
  const auto& r = rhombi.front();
  CHECK(testing::label(group, r.x) == "23");
  CHECK(testing::label(group, r.u) == "2");
  CHECK(testing::label(group, r.v) == "12");
  const auto y = testing::id(group, "123");
  CHECK(std::binary_search(r.witnesses_y.begin(), r.witnesses_y.end(), y));
  CHECK_FALSE(bruhat_leq(group, y, w));

  const auto br = rationally_smooth_br(group, w);
  const auto* found = std::get_if<BrokenRhombus>(&br.evidence);
  REQUIRE(found != nullptr);
  CHECK(found->x == r.x);
  CHECK(found->v == r.v);

  const auto check = validate_broken_rhombus(group, w, r);
  CHECK(check.valid);
  CHECK(check.witnesses_y.size() == r.witnesses_y.size());
}

TEST_CASE("every reported rhombus passes independent validation") {
  for (const char* label : {"A4", "D4", "B3"}) {
    CAPTURE(label);
    const auto& group = testing::group(label);
    for (ElementId w = 0; w < group.size(); w += 5) {
      for (const auto& r : find_broken_rhombi(group, w, RhombusScan::all)) {
        const auto check = validate_broken_rhombus(group, w, r);
        CHECK_MESSAGE(check.valid, check.reason);
        std::vector<ElementId> ys;
        for (const auto& y : check.witnesses_y) ys.push_back(*group.find(y));
        std::sort(ys.begin(), ys.end());
        CHECK(ys == r.witnesses_y);
      }
    }
  }
}

TEST_CASE("validation rejects triples that are not broken rhombi") {
  const auto& group = testing::group("D4");
  const auto w = testing::id(group, "21342");
  auto triple = [&](const char* x, const char* u, const char* v) {
    return validate_broken_rhombus(group.element(w), group.element(testing::id(group, x)),
                                   group.element(testing::id(group, u)),
                                   group.element(testing::id(group, v)));
  };
  CHECK(triple("23", "2", "12").valid);
  CHECK_FALSE(triple("23", "2", "23").valid);     // x = v
  CHECK_FALSE(triple("1", "e", "2").valid);       // 12 lies below w
  CHECK_FALSE(triple("123", "2", "12").valid);    // 123 is not below w
  CHECK_FALSE(triple("13", "2", "12").valid);     // 2 -> 13 is not an edge
}

TEST_CASE("all-rhombus mode reports each unordered pair once") {
  const auto& group = testing::group("D4");
  const auto w = testing::id(group, "21342");
  const auto all = find_broken_rhombi(group, w, RhombusScan::all);
  CHECK(all.size() == 12);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const bool same = all[i].u == all[j].u &&
                        ((all[i].x == all[j].x && all[i].v == all[j].v) ||
                         (all[i].x == all[j].v && all[i].v == all[j].x));
      CHECK_FALSE(same);
    }
  }
}

TEST_CASE("C2: both length-three involutions have regular graphs") {
  const auto& group = testing::group("C2");
  for (const char* word : {"121", "212"}) {
    CAPTURE(word);
    const auto cert = rationally_smooth_cp(group, testing::id(group, word));
    CHECK(cert.rationally_smooth);
    CHECK_FALSE(cert.smooth.has_value());
    const auto* reg = std::get_if<RegularGraph>(&cert.evidence);
    REQUIRE(reg != nullptr);
    CHECK(reg->degree == 3);
    CHECK(cert.interval_size == 6);
  }
}

TEST_CASE("defects report the first vertex of maximal degree") {
  const auto& group = testing::group("A3");
  const auto graph = bruhat_graph(group, testing::id(group, "2132"));
  const auto reg = is_regular(graph);
  REQUIRE_FALSE(reg.regular);
  REQUIRE(reg.defect.has_value());
  const auto degrees = graph.degrees();
  const int max_degree = *std::max_element(degrees.begin(), degrees.end());
  CHECK(reg.defect->degree == max_degree);
  const auto first =
      std::find(degrees.begin(), degrees.end(), max_degree) - degrees.begin();
  CHECK(reg.defect->vertex == graph.interval().members()[first]);
}
