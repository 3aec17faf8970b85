#include "doctest.h"
#include "schubert/error.hpp"
#include "schubert/word.hpp"

using namespace schubert;

TEST_CASE("digit strings and separated tokens parse alike") {
  const std::vector<int> expected{1, 0, 2, 3, 1};
  CHECK(parse_word("21342", 4) == expected);
  CHECK(parse_word("2 1 3 4 2", 4) == expected);
  CHECK(parse_word("2,1,3,4,2", 4) == expected);
  CHECK(parse_word("  2, 1 3,4 2 ", 4) == expected);
}

TEST_CASE("identity spellings") {
  CHECK(parse_word("", 3).empty());
  CHECK(parse_word("e", 3).empty());
  CHECK(parse_word("   ", 3).empty());
}

TEST_CASE("out-of-range and malformed letters") {
  CHECK_THROWS_AS(parse_word("14", 2), ParseError);
  CHECK_THROWS_AS(parse_word("0", 3), ParseError);
  CHECK_THROWS_AS(parse_word("1x2", 3), ParseError);
  CHECK_THROWS_AS(parse_word("-1", 3), ParseError);
  CHECK_THROWS_AS(parse_word("11", 10), ParseError);
}

TEST_CASE("ranks above nine use whole-number tokens") {
  CHECK(parse_word("10 2 1", 10) == std::vector<int>{9, 1, 0});
  CHECK(format_word(std::vector<int>{9, 1, 0}, 10) == "10.2.1");
  CHECK(parse_word(format_word(std::vector<int>{9, 1, 0}, 10), 10) == std::vector<int>{9, 1, 0});
}

TEST_CASE("formatting") {
  CHECK(format_word(std::vector<int>{}, 4) == "e");
  CHECK(format_word(std::vector<int>{1, 0, 2, 3, 1}, 4) == "21342");
}
