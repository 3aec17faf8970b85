#pragma once

// Finite crystallographic Coxeter systems realized on their root lattice.
//
// A system is built from a Cartan matrix A with A[i][j] = <alpha_i^vee, alpha_j>,
// so the simple reflection s_i acts on a root b = sum_j c_j alpha_j by
//   s_i(b) = b - (sum_j A[i][j] c_j) alpha_i.
// All 2N roots are enumerated once; positive roots occupy indices [0, N) ordered
// by height, and the negative of root r is r + N. The first `rank` indices are
// the simple roots alpha_1 .. alpha_rank.
//
// Group elements are stored as the permutation they induce on the root set.
// The images of the simple roots determine the element, and equality compares
// exactly those.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

using RootIndex = std::uint16_t;
using CartanMatrix = std::vector<std::vector<int>>;

/// Integer coefficients of a root over the simple roots.
struct Root {
  std::vector<int> coords;

  bool is_positive() const;
  bool is_negative() const;
  int height() const;

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

class CoxeterSystem;

class GroupElement {
 public:
  GroupElement() = default;

  const CoxeterSystem& system() const { return *system_; }
  bool valid() const { return system_ != nullptr; }

  int length() const { return length_; }
  RootIndex image(RootIndex root) const { return perm_[root]; }
  std::span<const RootIndex> root_permutation() const { return perm_; }

  /// Images w(alpha_i) of the simple roots, the canonical form of w.
  std::vector<Root> images() const;

  /// ShortLex-minimal reduced word, 0-based generator indices.
  std::vector<int> word() const;

  bool is_identity() const { return length_ == 0; }

  friend bool operator==(const GroupElement& a, const GroupElement& b);
  friend bool operator!=(const GroupElement& a, const GroupElement& b) {
    return !(a == b);
  }

  std::size_t hash() const;

 private:
  friend class CoxeterSystem;
  friend GroupElement multiply(const GroupElement&, const GroupElement&);
  friend GroupElement inverse(const GroupElement&);
  friend GroupElement left_multiply(int, const GroupElement&);
  friend GroupElement right_multiply(const GroupElement&, int);
  GroupElement(const CoxeterSystem* system, std::vector<RootIndex> perm);

  const CoxeterSystem* system_ = nullptr;
  std::vector<RootIndex> perm_;
  int length_ = 0;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& w) const { return w.hash(); }
};

/// A reflection t in T together with the positive root it inverts.
struct Reflection {
  GroupElement element;
  RootIndex root = 0;
  // root = conjugator(alpha_simple), hence element = conjugator * s * conjugator^-1.
  std::vector<int> conjugator;
  int simple = 0;
};

class CoxeterSystem {
 public:
  /// Positive roots beyond this count mean the Cartan matrix is not of finite type.
  static constexpr std::size_t kRootCap = 4096;

  static std::shared_ptr<const CoxeterSystem> from_cartan(CartanMatrix cartan,
                                                          std::string label);

  CoxeterSystem(const CoxeterSystem&) = delete;
  CoxeterSystem& operator=(const CoxeterSystem&) = delete;

  const std::string& label() const { return label_; }
  int rank() const { return rank_; }
  const CartanMatrix& cartan() const { return cartan_; }
  const std::vector<std::vector<int>>& coxeter_matrix() const { return coxeter_; }
  bool simply_laced() const { return simply_laced_; }

  std::size_t num_positive_roots() const { return num_positive_; }
  std::size_t num_roots() const { return roots_.size(); }
  const Root& root(RootIndex r) const { return roots_[r]; }
  std::span<const Root> positive_roots() const {
    return std::span<const Root>(roots_).first(num_positive_);
  }
  bool is_positive(RootIndex r) const { return r < num_positive_; }
  RootIndex negate(RootIndex r) const {
    return static_cast<RootIndex>(r < num_positive_ ? r + num_positive_
                                                    : r - num_positive_);
  }
  /// Index of s_i(root r).
  RootIndex simple_action(int i, RootIndex r) const {
    return simple_action_[static_cast<std::size_t>(i) * roots_.size() + r];
  }
  /// Index of a root given by coordinates, or -1 when it is not a root.
  int find_root(const Root& root) const;

  const GroupElement& identity() const { return identity_; }
  const GroupElement& generator(int i) const { return generators_[i]; }

  /// One reflection per positive root, in positive-root order.
  const std::vector<Reflection>& reflections() const { return reflections_; }

  /// |W| from the exponents read off the height distribution of positive roots.
  std::size_t predicted_order() const { return predicted_order_; }

  GroupElement element_from_word(std::span<const int> word) const;

 private:
  CoxeterSystem() = default;
  GroupElement make(std::vector<RootIndex> perm) const {
    return GroupElement(this, std::move(perm));
  }
  friend GroupElement multiply(const GroupElement&, const GroupElement&);
  friend GroupElement inverse(const GroupElement&);
  friend GroupElement left_multiply(int, const GroupElement&);
  friend GroupElement right_multiply(const GroupElement&, int);

  std::string label_;
  int rank_ = 0;
  CartanMatrix cartan_;
  std::vector<std::vector<int>> coxeter_;
  bool simply_laced_ = true;
  std::size_t num_positive_ = 0;
  std::vector<Root> roots_;
  std::vector<RootIndex> simple_action_;
  GroupElement identity_;
  std::vector<GroupElement> generators_;
  std::vector<Reflection> reflections_;
  std::size_t predicted_order_ = 0;
};

/// Cartan matrix of a catalog type such as "A3", "D4", "E6", "G2".
/// Numbering follows Bourbaki; in D_n node n-2 is the branch node.
CartanMatrix catalog_cartan(std::string_view label);

std::shared_ptr<const CoxeterSystem> build_system(std::string_view label);
std::shared_ptr<const CoxeterSystem> build_system(CartanMatrix cartan,
                                                  std::string label = "custom");

/// Reads "rank" followed by rank rows of integers.
CartanMatrix read_cartan(std::istream& in);

GroupElement multiply(const GroupElement& u, const GroupElement& v);
GroupElement inverse(const GroupElement& w);
/// s_i * w
GroupElement left_multiply(int i, const GroupElement& w);
/// w * s_i
GroupElement right_multiply(const GroupElement& w, int i);

inline int length(const GroupElement& w) { return w.length(); }

/// N(w) = { t in T : l(t w) < l(w) }, returned as indices into reflections().
/// Computed as the positive roots b with w^-1(b) negative.
std::vector<std::size_t> inversion_set(const GroupElement& w);

/// D_L(w) as sorted 0-based generator indices.
std::vector<int> left_descents(const GroupElement& w);
bool is_left_descent(int i, const GroupElement& w);

/// w0(J) by greedy ascent inside the parabolic subgroup generated by J.
GroupElement longest_element(const CoxeterSystem& system, std::span<const int> subset);

/// Generators occurring in a reduced word of w.
std::vector<int> support(const GroupElement& w);

/// w * w == e; the identity counts.
bool is_involution(const GroupElement& w);

/// Index into reflections() when w is a reflection, otherwise -1.
int reflection_index(const GroupElement& w);

}  // namespace schubert
