#pragma once

#include <map>
#include <memory>
#include <string>

#include "schubert/group.hpp"
#include "schubert/word.hpp"

namespace testing {

// Groups are expensive enough to share between test cases.
inline const schubert::Group& group(const std::string& label) {
  static std::map<std::string, std::unique_ptr<schubert::Group>> cache;
  auto& slot = cache[label];
  if (!slot) slot = std::make_unique<schubert::Group>(schubert::build_system(label));
  return *slot;
}

inline schubert::ElementId id(const schubert::Group& g, const std::string& word) {
  return g.from_word(schubert::parse_word(word, g.rank()));
}

inline std::string label(const schubert::Group& g, schubert::ElementId w) {
  return schubert::format_word(g.word(w), g.rank());
}

}  // namespace testing
