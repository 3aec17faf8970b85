#include "schubert/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "schubert/error.hpp"

namespace schubert {

namespace {

struct Enumeration {
  std::vector<GroupElement> elements;
  std::vector<std::vector<int>> words;
};

void check_cap(const CoxeterSystem& system, std::size_t cap) {
  if (system.predicted_order() > cap) {
    throw CapExceeded("|W(" + system.label() + ")| = " +
                      std::to_string(system.predicted_order()) + " exceeds the element cap " +
                      std::to_string(cap));
  }
}

// Breadth-first search on the left Cayley graph visits elements in order of
// length; each word is its first left descent followed by the word of s*w.
Enumeration enumerate_sorted(const CoxeterSystem& system, std::size_t cap) {
  check_cap(system, cap);
  const int rank = system.rank();
  std::vector<GroupElement> bfs{system.identity()};
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> seen{{system.identity(), 0}};
  for (std::size_t k = 0; k < bfs.size(); ++k) {
    for (int i = 0; i < rank; ++i) {
      GroupElement sw = left_multiply(i, bfs[k]);
      if (seen.contains(sw)) continue;
      if (bfs.size() >= cap) {
        throw CapExceeded("group enumeration exceeded the element cap " + std::to_string(cap));
      }
      seen.emplace(sw, bfs.size());
      bfs.push_back(std::move(sw));
    }
  }
  std::vector<std::vector<int>> words(bfs.size());
  for (std::size_t k = 1; k < bfs.size(); ++k) {
    for (int i = 0; i < rank; ++i) {
      auto sw = left_multiply(i, bfs[k]);
      if (sw.length() < bfs[k].length()) {
        const std::size_t lower = seen.at(sw);
        words[k].reserve(static_cast<std::size_t>(bfs[k].length()));
        words[k].push_back(i);
        words[k].insert(words[k].end(), words[lower].begin(), words[lower].end());
        break;
      }
    }
  }

  std::vector<std::size_t> order(bfs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (words[a].size() != words[b].size()) return words[a].size() < words[b].size();
    return words[a] < words[b];
  });
  Enumeration out;
  out.elements.reserve(bfs.size());
  out.words.reserve(bfs.size());
  for (std::size_t k : order) {
    out.elements.push_back(std::move(bfs[k]));
    out.words.push_back(std::move(words[k]));
  }
  return out;
}

}  // namespace

std::vector<GroupElement> enumerate_group(const CoxeterSystem& system, std::size_t cap) {
  return enumerate_sorted(system, cap).elements;
}

Group::Group(std::shared_ptr<const CoxeterSystem> system, std::size_t cap)
    : system_(std::move(system)), rank_(static_cast<std::size_t>(system_->rank())) {
  auto enumeration = enumerate_sorted(*system_, cap);
  elements_ = std::move(enumeration.elements);
  words_ = std::move(enumeration.words);
  const std::size_t n = elements_.size();

  lengths_.resize(n);
  index_.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    lengths_[k] = elements_[k].length();
    index_.emplace(elements_[k], static_cast<ElementId>(k));
  }

  lmul_.resize(n * rank_);
  inverse_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < rank_; ++i) {
      lmul_[k * rank_ + i] = index_.at(left_multiply(static_cast<int>(i), elements_[k]));
    }
    inverse_[k] = index_.at(schubert::inverse(elements_[k]));
  }
  // w s = (s w^-1)^-1
  rmul_.resize(n * rank_);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < rank_; ++i) {
      rmul_[k * rank_ + i] = inverse_[lmul_[inverse_[k] * rank_ + i]];
    }
  }

  const auto& refl = system_->reflections();
  reflections_.resize(refl.size());
  reflection_of_.assign(n, -1);
  for (std::size_t k = 0; k < refl.size(); ++k) {
    reflections_[k] = index_.at(refl[k].element);
    reflection_of_[reflections_[k]] = static_cast<int>(k);
  }

  const std::size_t nt = reflections_.size();
  rmul_reflection_.resize(n * nt);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t k = 0; k < nt; ++k) {
      ElementId x = static_cast<ElementId>(u);
      for (int s : words_[reflections_[k]]) x = right_mul(x, s);
      rmul_reflection_[u * nt + k] = x;
    }
  }
}

std::optional<ElementId> Group::find(const GroupElement& w) const {
  if (!w.valid() || &w.system() != system_.get()) return std::nullopt;
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId Group::id_of(const GroupElement& w) const {
  if (!w.valid() || &w.system() != system_.get()) throw SystemMismatch();
  return index_.at(w);
}

ElementId Group::from_word(std::span<const int> word) const {
  ElementId w = identity();
  for (int s : word) {
    if (s < 0 || static_cast<std::size_t>(s) >= rank_) {
      throw PreconditionViolated("generator index " + std::to_string(s + 1) +
                                 " out of range for " + system_->label());
    }
    w = right_mul(w, s);
  }
  return w;
}

ElementId Group::multiply(ElementId u, ElementId v) const {
  for (int s : words_[v]) u = right_mul(u, s);
  return u;
}

int Group::first_left_descent(ElementId w) const {
  for (std::size_t i = 0; i < rank_; ++i) {
    if (is_left_descent(static_cast<int>(i), w)) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace schubert
