#include "schubert/bruhat.hpp"

#include <algorithm>

#include "schubert/error.hpp"

namespace schubert {

bool bruhat_leq(const Group& group, ElementId u, ElementId w) {
  for (;;) {
    if (u == group.identity()) return true;
    const int lu = group.length(u);
    const int lw = group.length(w);
    if (lu > lw) return false;
    if (lu == lw) return u == w;
    const int s = group.first_left_descent(w);
    if (group.is_left_descent(s, u)) u = group.left_mul(s, u);
    w = group.left_mul(s, w);
  }
}

bool bruhat_leq(const GroupElement& u, const GroupElement& w) {
  if (&u.system() != &w.system()) throw SystemMismatch();
  GroupElement x = u;
  GroupElement y = w;
  for (;;) {
    if (x.is_identity()) return true;
    if (x.length() > y.length()) return false;
    if (x.length() == y.length()) return x == y;
    const int s = left_descents(y).front();
    auto sx = left_multiply(s, x);
    if (sx.length() < x.length()) x = std::move(sx);
    y = left_multiply(s, y);
  }
}

std::span<const ElementId> BruhatInterval::rank(int l) const {
  if (l < 0 || l > max_length()) return {};
  return std::span<const ElementId>(members_).subspan(
      rank_offsets_[static_cast<std::size_t>(l)],
      rank_offsets_[static_cast<std::size_t>(l) + 1] - rank_offsets_[static_cast<std::size_t>(l)]);
}

BruhatInterval lower_interval(const Group& group, ElementId w) {
  BruhatInterval out;
  out.group_ = &group;
  out.top_ = w;
  out.position_.assign(group.size(), -1);
  const int top_length = group.length(w);
  out.rank_offsets_.assign(static_cast<std::size_t>(top_length) + 2, 0);
  for (ElementId z = 0; z < group.size() && group.length(z) <= top_length; ++z) {
    if (!bruhat_leq(group, z, w)) continue;
    out.position_[z] = static_cast<std::int32_t>(out.members_.size());
    out.members_.push_back(z);
    ++out.rank_offsets_[static_cast<std::size_t>(group.length(z)) + 1];
  }
  for (std::size_t l = 1; l < out.rank_offsets_.size(); ++l) {
    out.rank_offsets_[l] += out.rank_offsets_[l - 1];
  }
  return out;
}

BruhatGraph bruhat_graph(BruhatInterval interval) {
  BruhatGraph g;
  g.interval_ = std::move(interval);
  const auto& group = g.interval_.group();
  const auto members = g.interval_.members();
  g.degrees_.assign(members.size(), 0);
  g.out_offsets_.assign(members.size() + 1, 0);

  std::vector<ElementId> targets;
  for (std::size_t p = 0; p < members.size(); ++p) {
    const ElementId u = members[p];
    targets.clear();
    for (std::size_t k = 0; k < group.num_reflections(); ++k) {
      const ElementId v = group.right_mul_reflection(u, k);
      if (g.interval_.contains(v) && group.length(v) > group.length(u)) targets.push_back(v);
    }
    std::sort(targets.begin(), targets.end());
    for (ElementId v : targets) {
      g.edges_.push_back({u, v});
      g.targets_.push_back(v);
      ++g.degrees_[p];
      ++g.degrees_[static_cast<std::size_t>(g.interval_.position(v))];
    }
    g.out_offsets_[p + 1] = g.edges_.size();
  }
  return g;
}

int BruhatGraph::degree(ElementId z) const {
  const int p = interval_.position(z);
  if (p < 0) throw PreconditionViolated("vertex is not in the Bruhat interval");
  return degrees_[static_cast<std::size_t>(p)];
}

std::span<const ElementId> BruhatGraph::out_neighbors(ElementId u) const {
  const int p = interval_.position(u);
  if (p < 0) return {};
  const auto begin = out_offsets_[static_cast<std::size_t>(p)];
  const auto end = out_offsets_[static_cast<std::size_t>(p) + 1];
  return std::span<const ElementId>(targets_).subspan(begin, end - begin);
}

}  // namespace schubert
