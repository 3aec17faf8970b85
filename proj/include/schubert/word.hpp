#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schubert/coxeter.hpp"

namespace schubert {

/// Parses 1-based generator indices separated by whitespace, commas or dots.
/// For rank <= 9 every digit is its own letter, so "21342" and "2 1 3 4 2"
/// agree. "e" and the empty string denote the identity. Returns 0-based
/// indices; throws ParseError on anything out of range.
std::vector<int> parse_word(std::string_view text, int rank);

/// Digit string for rank <= 9, dot-separated indices above that, "e" if empty.
std::string format_word(std::span<const int> word, int rank);

inline std::string format_element(const GroupElement& w) {
  return format_word(w.word(), w.system().rank());
}

}  // namespace schubert
