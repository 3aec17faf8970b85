#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "schubert/bruhat.hpp"

namespace schubert {

/// A subgroup W' generated by reflections, stored as ambient element ids.
struct ReflectionSubgroup {
  const Group* group = nullptr;
  std::vector<ElementId> elements;           // ascending
  std::vector<std::size_t> reflections_in;   // W' ∩ T as reflection indices
  std::vector<std::size_t> canonical_gens;   // X = { t : N(t) ∩ W' = {t} }

  std::size_t order() const { return elements.size(); }
  bool contains(ElementId w) const;
};

/// Closure of the given reflections (indices into Group::reflections()).
ReflectionSubgroup reflection_closure(const Group& group, std::span<const std::size_t> gens);

/// { t in T : N(t) ∩ W' = {t} }.
std::vector<std::size_t> canonical_generators(const ReflectionSubgroup& sub);

/// <t1, t2, t3, t4> for t1 t2 = t3 t4 != e; throws PreconditionViolated otherwise.
ReflectionSubgroup dihedral_from_quadruple(const Group& group, std::size_t t1, std::size_t t2,
                                           std::size_t t3, std::size_t t4);

/// Order of the product of the two canonical generators.
int dihedral_type(const ReflectionSubgroup& sub);

/// Multiplicative order of an element.
int element_order(const Group& group, ElementId w);

/// Length of u in (W', X), computed as |N(u) ∩ W'|.
int internal_length(const ReflectionSubgroup& sub, ElementId u);

/// Word length over X of each element, by breadth-first search; aligned with
/// sub.elements.
std::vector<int> generator_word_lengths(const ReflectionSubgroup& sub);

/// { u x u^-1 : u in W', x in X } as sorted reflection indices.
std::vector<std::size_t> conjugates_of_generators(const ReflectionSubgroup& sub);

/// Checks that X generates W', that distinct generators have product order at
/// least 2, and that X-word length agrees with |N(u) ∩ W'| everywhere.
bool is_coxeter_generating_set(const ReflectionSubgroup& sub);

struct SubgroupGraphs {
  std::vector<BruhatEdge> induced;   // ambient graph restricted to W'
  std::vector<BruhatEdge> internal;  // graph of (W', X) using internal length
};

SubgroupGraphs subgroup_bruhat_graphs(const ReflectionSubgroup& sub);

/// True iff the induced and internal edge sets coincide.
bool compare_bruhat_graphs(const ReflectionSubgroup& sub);

}  // namespace schubert
