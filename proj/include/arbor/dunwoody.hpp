#pragma once

#include <string>
#include <vector>

#include "arbor/pocset.hpp"

namespace arbor {

// Tree realization of a nested pocset: every signed element is one directed
// edge, vertices are the gap-equivalence classes. Vertex ids are the
// canonical minimum element of the class.
struct RealizedTree {
  ElementTable elements;
  std::vector<std::vector<ElemId>> vertex_classes;  // sorted members
  std::vector<std::int32_t> vertex_of;              // ElemId -> vertex: tail(e)
  std::vector<std::int32_t> part_of_pair;           // edge labels, by star-pair
  std::vector<std::string> part_names;

  std::int32_t vertex_count() const { return static_cast<std::int32_t>(vertex_classes.size()); }
  std::int32_t tail(ElemId e) const { return vertex_of[e]; }
  std::int32_t head(ElemId e) const { return vertex_of[star(e)]; }
  std::string vertex_name(std::int32_t v) const { return elements.name(vertex_classes[v].front()); }
};

struct ComparabilityError : std::runtime_error {
  std::string a, b;
  ComparabilityError(std::string a_, std::string b_)
      : std::runtime_error("comparability fails at (" + a_ + ", " + b_ + ")"),
        a(std::move(a_)), b(std::move(b_)) {}
};

// Dunwoody realization. Requires a valid nested pocset; throws
// ComparabilityError with a crossing witness otherwise.
RealizedTree build_tree(const Pocset& p);

// Exhaustive check that t realizes p: tree shape, involution reversal, and
// a <= b iff some simple edge path starts with a and ends with b.
ValidationReport verify_realization(const RealizedTree& t, const Pocset& p);

// Directed-edge reachability in the realized tree: all f admitting a simple
// path with first edge e and last edge f (e itself included).
std::vector<bool> path_reachable(const RealizedTree& t, ElemId e);

}  // namespace arbor
