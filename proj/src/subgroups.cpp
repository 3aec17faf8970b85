#include "schubert/subgroups.hpp"

#include <algorithm>
#include <deque>

#include "schubert/error.hpp"

namespace schubert {

bool ReflectionSubgroup::contains(ElementId w) const {
  return std::binary_search(elements.begin(), elements.end(), w);
}

ReflectionSubgroup reflection_closure(const Group& group, std::span<const std::size_t> gens) {
  for (std::size_t k : gens) {
    if (k >= group.num_reflections()) throw PreconditionViolated("reflection index out of range");
  }
  ReflectionSubgroup sub;
  sub.group = &group;
  std::vector<char> seen(group.size(), 0);
  std::vector<ElementId> queue{group.identity()};
  seen[group.identity()] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (std::size_t k : gens) {
      const ElementId next = group.right_mul_reflection(queue[q], k);
      if (!seen[next]) {
        seen[next] = 1;
        queue.push_back(next);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  sub.elements = std::move(queue);
  for (std::size_t k = 0; k < group.num_reflections(); ++k) {
    if (seen[group.reflection(k)]) sub.reflections_in.push_back(k);
  }
  sub.canonical_gens = canonical_generators(sub);
  return sub;
}

std::vector<std::size_t> canonical_generators(const ReflectionSubgroup& sub) {
  const Group& group = *sub.group;
  std::vector<std::size_t> out;
  // Only reflections of W' can satisfy N(t) ∩ W' = {t}, since t ∈ N(t).
  for (std::size_t k : sub.reflections_in) {
    const ElementId t = group.reflection(k);
    std::size_t hits = 0;
    for (std::size_t j : sub.reflections_in) {
      // l(t' t) = l((t' t)^-1) = l(t t')
      if (group.length(group.right_mul_reflection(t, j)) < group.length(t)) ++hits;
    }
    if (hits == 1) out.push_back(k);
  }
  return out;
}

ReflectionSubgroup dihedral_from_quadruple(const Group& group, std::size_t t1, std::size_t t2,
                                           std::size_t t3, std::size_t t4) {
  const std::size_t n = group.num_reflections();
  if (t1 >= n || t2 >= n || t3 >= n || t4 >= n) {
    throw PreconditionViolated("reflection index out of range");
  }
  const ElementId left = group.right_mul_reflection(group.reflection(t1), t2);
  const ElementId right = group.right_mul_reflection(group.reflection(t3), t4);
  if (left != right) throw PreconditionViolated("t1 t2 != t3 t4");
  if (left == group.identity()) throw PreconditionViolated("t1 t2 = e");
  std::vector<std::size_t> gens{t1, t2, t3, t4};
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return reflection_closure(group, gens);
}

int element_order(const Group& group, ElementId w) {
  int order = 1;
  for (ElementId x = w; x != group.identity(); x = group.multiply(x, w)) ++order;
  return order;
}

int dihedral_type(const ReflectionSubgroup& sub) {
  if (sub.canonical_gens.size() != 2) {
    throw PreconditionViolated("subgroup is not dihedral: it has " +
                               std::to_string(sub.canonical_gens.size()) +
                               " canonical generators");
  }
  const Group& group = *sub.group;
  const ElementId product =
      group.right_mul_reflection(group.reflection(sub.canonical_gens[0]), sub.canonical_gens[1]);
  return element_order(group, product);
}

int internal_length(const ReflectionSubgroup& sub, ElementId u) {
  const Group& group = *sub.group;
  const ElementId u_inv = group.inverse(u);
  int count = 0;
  for (std::size_t k : sub.reflections_in) {
    // l(t u) = l(u^-1 t)
    if (group.length(group.right_mul_reflection(u_inv, k)) < group.length(u)) ++count;
  }
  return count;
}

std::vector<int> generator_word_lengths(const ReflectionSubgroup& sub) {
  const Group& group = *sub.group;
  std::vector<int> dist(group.size(), -1);
  std::deque<ElementId> queue{group.identity()};
  dist[group.identity()] = 0;
  while (!queue.empty()) {
    const ElementId u = queue.front();
    queue.pop_front();
    for (std::size_t k : sub.canonical_gens) {
      const ElementId next = group.right_mul_reflection(u, k);
      if (dist[next] < 0) {
        dist[next] = dist[u] + 1;
        queue.push_back(next);
      }
    }
  }
  std::vector<int> out;
  out.reserve(sub.elements.size());
  for (ElementId u : sub.elements) out.push_back(dist[u]);
  return out;
}

std::vector<std::size_t> conjugates_of_generators(const ReflectionSubgroup& sub) {
  const Group& group = *sub.group;
  std::vector<std::size_t> out;
  for (ElementId u : sub.elements) {
    for (std::size_t k : sub.canonical_gens) {
      const ElementId conj = group.multiply(group.right_mul_reflection(u, k), group.inverse(u));
      out.push_back(static_cast<std::size_t>(group.reflection_index(conj)));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_coxeter_generating_set(const ReflectionSubgroup& sub) {
  const Group& group = *sub.group;
  const auto lengths = generator_word_lengths(sub);
  for (std::size_t p = 0; p < sub.elements.size(); ++p) {
    if (lengths[p] < 0) return false;  // X does not generate W'
    if (lengths[p] != internal_length(sub, sub.elements[p])) return false;
  }
  for (std::size_t a = 0; a < sub.canonical_gens.size(); ++a) {
    for (std::size_t b = a + 1; b < sub.canonical_gens.size(); ++b) {
      const ElementId product = group.right_mul_reflection(
          group.reflection(sub.canonical_gens[a]), sub.canonical_gens[b]);
      if (element_order(group, product) < 2) return false;
    }
  }
  return true;
}

SubgroupGraphs subgroup_bruhat_graphs(const ReflectionSubgroup& sub) {
  const Group& group = *sub.group;
  SubgroupGraphs out;
  std::vector<int> inner(group.size(), -1);
  for (ElementId u : sub.elements) inner[u] = internal_length(sub, u);

  for (ElementId u : sub.elements) {
    for (std::size_t k = 0; k < group.num_reflections(); ++k) {
      const ElementId v = group.right_mul_reflection(u, k);
      if (sub.contains(v) && group.length(v) > group.length(u)) out.induced.push_back({u, v});
    }
    for (std::size_t k : sub.reflections_in) {
      const ElementId v = group.right_mul_reflection(u, k);
      if (inner[v] > inner[u]) out.internal.push_back({u, v});
    }
  }
  std::sort(out.induced.begin(), out.induced.end());
  std::sort(out.internal.begin(), out.internal.end());
  return out;
}

bool compare_bruhat_graphs(const ReflectionSubgroup& sub) {
  const auto graphs = subgroup_bruhat_graphs(sub);
  return graphs.induced == graphs.internal;
}

}  // namespace schubert
