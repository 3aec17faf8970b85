#include "schubert/word.hpp"

#include <cctype>
#include <charconv>

#include "schubert/error.hpp"

namespace schubert {

std::vector<int> parse_word(std::string_view text, int rank) {
  std::vector<int> word;
  auto is_sep = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '.';
  };
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    const auto token = text.substr(i, j - i);
    i = j;
    if (token == "e") continue;

    auto push = [&](std::string_view digits) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw ParseError("invalid generator '" + std::string(digits) + "'");
      }
      if (value < 1 || value > rank) {
        throw ParseError("generator " + std::string(digits) + " out of range 1.." +
                         std::to_string(rank));
      }
      word.push_back(value - 1);
    };
    if (rank <= 9) {
      for (std::size_t k = 0; k < token.size(); ++k) push(token.substr(k, 1));
    } else {
      push(token);
    }
  }
  return word;
}

std::string format_word(std::span<const int> word, int rank) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (rank > 9 && k > 0) out += '.';
    out += std::to_string(word[k] + 1);
  }
  return out;
}

}  // namespace schubert
