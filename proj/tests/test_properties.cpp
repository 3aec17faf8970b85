#include "doctest.h"
#include "helpers.hpp"
#include "property_checks.hpp"

namespace {

void report(const checks::Tally& t) {
  for (const auto& f : t.failures) MESSAGE(f);
  CHECK(t.ok());
}

}  // namespace

TEST_CASE("degree bound on sampled vertices") {
  for (const char* label : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "C2", "C3", "D4", "D5", "G2", "F4"}) {
    CAPTURE(label);
    const auto tally = checks::degree_bound(testing::group(label), 200, 7);
    CHECK(tally.checked == 200);
    report(tally);
  }
}

TEST_CASE("inversion is an order automorphism") {
  for (const char* label : {"A3", "C2", "G2"}) {
    CAPTURE(label);
    report(checks::inversion_lemma(testing::group(label)));
  }
}

TEST_CASE("lifting property") {
  for (const char* label : {"A3", "C2", "B3"}) {
    CAPTURE(label);
    report(checks::lifting_lemma(testing::group(label)));
  }
}

TEST_CASE("length is subadditive with the right parity") {
  for (const char* label : {"A4", "B3", "D4", "F4"}) {
    CAPTURE(label);
    report(checks::length_of_products(testing::group(label), 2000, 11));
  }
}
