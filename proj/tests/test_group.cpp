#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "schubert/error.hpp"
#include "schubert/group.hpp"

using namespace schubert;

TEST_CASE("enumeration agrees with the matrix group") {
  for (const char* label : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4", "A4"}) {
    CAPTURE(label);
    const auto& group = testing::group(label);
    const oracle::Reference ref(group.system().cartan());
    CHECK(group.size() == ref.elements.size());
    CHECK(group.size() == group.system().predicted_order());

    std::set<oracle::Mat> seen;
    for (ElementId w = 0; w < group.size(); ++w) {
      const auto m = ref.from_word(group.word(w));
      CHECK(ref.length(m) == group.length(w));
      seen.insert(m);
    }
    CHECK(seen.size() == group.size());
    CHECK(seen == std::set<oracle::Mat>(ref.elements.begin(), ref.elements.end()));
  }
}

TEST_CASE("ids follow length then shortlex") {
  const auto& group = testing::group("B3");
  CHECK(group.word(group.identity()).empty());
  CHECK(group.length(group.longest()) == 9);
  for (ElementId w = 1; w < group.size(); ++w) {
    const bool ordered = group.length(w - 1) < group.length(w) ||
                         (group.length(w - 1) == group.length(w) && group.word(w - 1) < group.word(w));
    CHECK(ordered);
  }
}

TEST_CASE("shortlex words are lexicographically least among reduced words") {
  const auto& group = testing::group("A3");
  // brute force: every word of length l(w) over the alphabet, keep the least that evaluates to w
  for (ElementId w = 0; w < group.size(); ++w) {
    const int len = group.length(w);
    std::vector<int> candidate(len, 0);
    std::vector<int> best;
    bool found = false;
    while (!found) {
      if (group.from_word(candidate) == w) {
        best = candidate;
        found = true;
        break;
      }
      int pos = len - 1;
      while (pos >= 0 && candidate[pos] == group.rank() - 1) candidate[pos--] = 0;
      if (pos < 0) break;
      ++candidate[pos];
    }
    CHECK(found);
    CHECK(best == group.word(w));
  }
}

TEST_CASE("multiplication tables are consistent with the matrix oracle") {
  const auto& group = testing::group("D4");
  const oracle::Reference ref(group.system().cartan());
  std::map<oracle::Mat, ElementId> ids;
  for (ElementId w = 0; w < group.size(); ++w) ids[ref.from_word(group.word(w))] = w;
  for (ElementId w = 0; w < group.size(); ++w) {
    const auto m = ref.from_word(group.word(w));
    for (int i = 0; i < group.rank(); ++i) {
      CHECK(group.left_mul(i, w) == ids.at(ref.gens[i] * m));
      CHECK(group.right_mul(w, i) == ids.at(m * ref.gens[i]));
    }
    CHECK(group.inverse(w) == ids.at(ref.inverse(m)));
    for (std::size_t k = 0; k < group.num_reflections(); k += 3) {
      const auto t = ref.from_word(group.word(group.reflection(k)));
      CHECK(group.right_mul_reflection(w, k) == ids.at(m * t));
    }
  }
  for (ElementId u = 0; u < group.size(); u += 7) {
    for (ElementId v = 0; v < group.size(); v += 11) {
      const auto uv = ref.from_word(group.word(u)) * ref.from_word(group.word(v));
      CHECK(group.multiply(u, v) == ids.at(uv));
    }
  }
}

TEST_CASE("lookup between elements and ids") {
  const auto& group = testing::group("A3");
  for (ElementId w = 0; w < group.size(); ++w) {
    CHECK(group.find(group.element(w)) == w);
    CHECK(group.id_of(group.element(w)) == w);
  }
  const auto other = build_system("A3");
  CHECK_THROWS_AS(group.id_of(other->identity()), SystemMismatch);
  CHECK_THROWS_AS(group.from_word(std::vector<int>{3}), PreconditionViolated);
  CHECK(group.first_left_descent(group.identity()) == -1);
  CHECK(group.reflection_index(group.identity()) == -1);
  for (std::size_t k = 0; k < group.num_reflections(); ++k) {
    CHECK(group.reflection_index(group.reflection(k)) == static_cast<int>(k));
  }
}

TEST_CASE("the cap refuses oversized groups before enumerating") {
  CHECK_THROWS_AS(Group(build_system("E8")), CapExceeded);
  CHECK_THROWS_AS(Group(build_system("D4"), 100), CapExceeded);
  CHECK_NOTHROW(Group(build_system("D4"), 192));
}
