#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "schubert/coxeter.hpp"

namespace schubert {

using ElementId = std::uint32_t;

/// All elements of a finite Weyl group, indexed in (length, shortlex) order,
/// with multiplication tables for generators and reflections.
///
/// Id 0 is the identity and the last id is the longest element. Immutable once
/// built; all queries are safe to call concurrently.
class Group {
 public:
  static constexpr std::size_t kDefaultCap = 1'000'000;

  explicit Group(std::shared_ptr<const CoxeterSystem> system,
                 std::size_t cap = kDefaultCap);

  const CoxeterSystem& system() const { return *system_; }
  std::shared_ptr<const CoxeterSystem> system_ptr() const { return system_; }
  int rank() const { return system_->rank(); }

  std::size_t size() const { return elements_.size(); }
  ElementId identity() const { return 0; }
  ElementId longest() const { return static_cast<ElementId>(size() - 1); }

  const GroupElement& element(ElementId id) const { return elements_[id]; }
  const std::vector<int>& word(ElementId id) const { return words_[id]; }
  int length(ElementId id) const { return lengths_[id]; }

  std::optional<ElementId> find(const GroupElement& w) const;
  /// Throws SystemMismatch when w comes from another system.
  ElementId id_of(const GroupElement& w) const;
  ElementId from_word(std::span<const int> word) const;

  /// s_i * w
  ElementId left_mul(int i, ElementId w) const { return lmul_[w * rank_ + i]; }
  /// w * s_i
  ElementId right_mul(ElementId w, int i) const { return rmul_[w * rank_ + i]; }
  ElementId inverse(ElementId w) const { return inverse_[w]; }
  ElementId multiply(ElementId u, ElementId v) const;

  bool is_left_descent(int i, ElementId w) const {
    return lengths_[left_mul(i, w)] < lengths_[w];
  }
  /// Smallest i with s_i in D_L(w), or -1 for the identity.
  int first_left_descent(ElementId w) const;

  std::size_t num_reflections() const { return reflections_.size(); }
  /// Reflection t_k for positive root k.
  ElementId reflection(std::size_t k) const { return reflections_[k]; }
  std::span<const ElementId> reflections() const { return reflections_; }
  /// u * t_k
  ElementId right_mul_reflection(ElementId u, std::size_t k) const {
    return rmul_reflection_[u * reflections_.size() + k];
  }
  /// Index k with t_k == w, or -1.
  int reflection_index(ElementId w) const { return reflection_of_[w]; }

 private:
  std::shared_ptr<const CoxeterSystem> system_;
  std::size_t rank_ = 0;
  std::vector<GroupElement> elements_;
  std::vector<std::vector<int>> words_;
  std::vector<int> lengths_;
  std::unordered_map<GroupElement, ElementId, GroupElementHash> index_;
  std::vector<ElementId> lmul_;
  std::vector<ElementId> rmul_;
  std::vector<ElementId> inverse_;
  std::vector<ElementId> reflections_;
  std::vector<int> reflection_of_;
  std::vector<ElementId> rmul_reflection_;
};

/// Every element of W ordered by (length, shortlex word). Throws CapExceeded
/// when the predicted order exceeds `cap`.
std::vector<GroupElement> enumerate_group(const CoxeterSystem& system,
                                          std::size_t cap = Group::kDefaultCap);

}  // namespace schubert
