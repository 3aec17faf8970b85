#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "schubert/group.hpp"

namespace schubert {

/// u <= w in Bruhat order.
///
/// Walks down from w by its smallest left descent s: when s is also a left
/// descent of u both sides drop (su <= sw), otherwise only w drops (u <= sw).
/// Each step is a table lookup, so a query costs at most l(w) steps.
bool bruhat_leq(const Group& group, ElementId u, ElementId w);

/// Same recursion on bare elements, without the group tables.
bool bruhat_leq(const GroupElement& u, const GroupElement& w);

/// The lower interval [e, w].
class BruhatInterval {
 public:
  const Group& group() const { return *group_; }
  ElementId top() const { return top_; }

  /// Members in (length, shortlex) order, which is ascending id order.
  std::span<const ElementId> members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  bool contains(ElementId z) const { return position_[z] >= 0; }
  /// Index of z in members(), or -1.
  int position(ElementId z) const { return position_[z]; }

  /// Members of length l.
  std::span<const ElementId> rank(int l) const;
  int max_length() const { return static_cast<int>(rank_offsets_.size()) - 2; }

 private:
  friend BruhatInterval lower_interval(const Group&, ElementId);
  const Group* group_ = nullptr;
  ElementId top_ = 0;
  std::vector<ElementId> members_;
  std::vector<std::int32_t> position_;
  std::vector<std::size_t> rank_offsets_;
};

/// [e, w], built by filtering the whole group through bruhat_leq.
BruhatInterval lower_interval(const Group& group, ElementId w);

struct BruhatEdge {
  ElementId from;
  ElementId to;
  friend auto operator<=>(const BruhatEdge&, const BruhatEdge&) = default;
};

/// Directed graph on [e, w] with an edge u -> u*t for every reflection t with
/// u*t in the interval and l(u) < l(u*t). Non-cover edges are included.
class BruhatGraph {
 public:
  const BruhatInterval& interval() const { return interval_; }
  const Group& group() const { return interval_.group(); }
  ElementId top() const { return interval_.top(); }

  /// Sorted by (from, to).
  std::span<const BruhatEdge> edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }

  /// Undirected incidence count; throws PreconditionViolated outside [e, w].
  int degree(ElementId z) const;
  /// Degrees indexed by interval position.
  std::span<const int> degrees() const { return degrees_; }

  /// Targets of edges leaving u, ascending.
  std::span<const ElementId> out_neighbors(ElementId u) const;

 private:
  friend BruhatGraph bruhat_graph(BruhatInterval);
  BruhatInterval interval_;
  std::vector<BruhatEdge> edges_;
  std::vector<ElementId> targets_;  // edges_[k].to
  std::vector<int> degrees_;
  std::vector<std::size_t> out_offsets_;
};

BruhatGraph bruhat_graph(BruhatInterval interval);
inline BruhatGraph bruhat_graph(const Group& group, ElementId w) {
  return bruhat_graph(lower_interval(group, w));
}

}  // namespace schubert
