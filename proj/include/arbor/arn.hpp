#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arbor/cubing.hpp"
#include "arbor/dunwoody.hpp"

namespace arbor {

// Partition of star-pairs by iterated crossing, with {A,A*} identified.
std::vector<std::vector<std::int32_t>> cross_connected_components(const Pocset& p);

// Block / cut-vertex decomposition of a cubing 1-skeleton.
struct Decomposition {
  std::vector<std::int32_t> cut_vertices;               // ascending cubing vertex ids
  std::vector<std::vector<std::int32_t>> subcubings;    // vertex sets, sorted
  std::vector<std::vector<std::int32_t>> corner_vertices;  // per subcubing: its cut vertices
  std::vector<std::vector<std::int32_t>> hyperplanes_of;   // per subcubing: hyperplane ids
};

Decomposition decompose(const CubeComplex& c);

struct BipartiteVertex {
  enum Color { V0, V1 } color;
  std::int32_t origin;  // V0: subcubing index, V1: cut vertex id in the cubing
};

struct BipartiteTree {
  std::vector<BipartiteVertex> vertices;
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;  // (V0 index, V1 index)
  // generator -> partial vertex map, induced from the cubing action
  std::map<std::string, std::vector<std::int32_t>> action;

  std::vector<std::vector<std::int32_t>> adjacency() const;
};

// Star-gluing of the decomposition: one V0 per subcubing, one V1 per cut
// vertex, an edge whenever the cut vertex lies in the subcubing.
BipartiteTree build_arn(const Pocset& p, const CubeComplex& cubing);

// Dual tree of a part's hyperplanes inside one subcubing, with corner leaves
// attached: the refinement witness for the enclosure check.
struct EnclosureWitness {
  bool enclosed = false;
  std::string reason;
  std::int32_t component_count = 0;  // vertices of the dual tree
  std::int32_t part_edges = 0;       // inserted edges (part hyperplanes)
};

EnclosureWitness verify_enclosure(const BipartiteTree& t, std::int32_t v0_index,
                                  std::int32_t part, const Pocset& p,
                                  const CubeComplex& cubing);

struct ArnConditionReport {
  ValidationReport report;
  std::vector<std::int32_t> isolated_parts;
  std::vector<std::int32_t> isolated_v0;   // tree vertex indices
  std::vector<std::string> notes;          // not-checkable clauses, diagnostics
};

// Conditions 1, 4, 5 exhaustively; 3 as fragment minimality (convex hull of
// V0 vertices and their action translates); 2 only for supplied candidates:
// candidate parts live in `extended`, a pocset containing p's elements plus
// the candidate part, and are rechecked by rebuilding the ARN.
ArnConditionReport verify_arn_conditions(
    const BipartiteTree& t, const Pocset& p, const CubeComplex& cubing,
    const Pocset* extended = nullptr,
    const std::vector<std::string>& candidate_parts = {});

// Color-aware equivariant isomorphism search.
std::optional<std::vector<std::int32_t>> gtree_isomorphic(const BipartiteTree& a,
                                                          const BipartiteTree& b,
                                                          bool color_strict);

// Dunwoody realization for a crossing-free pocset with per-part duplicate
// multiplicities applied by edge subdivision.
struct CompatibilityTree {
  RealizedTree tree;                         // before subdivision
  std::vector<std::int32_t> multiplicity;    // per part
  // subdivided tree: edges become chains of (multiplicity) edges; reported
  // as counts since the subdivision is determined by the base tree
  std::int64_t subdivided_edge_count = 0;
  std::int64_t subdivided_vertex_count = 0;
};

struct CrossingFound : std::runtime_error {
  std::string a, b;
  CrossingFound(std::string a_, std::string b_)
      : std::runtime_error("crossing pair (" + a_ + ", " + b_ + ")"),
        a(std::move(a_)), b(std::move(b_)) {}
};

CompatibilityTree compatibility_tree(const Pocset& p,
                                     const std::vector<std::int32_t>& multiplicities = {});

// Collapse all edges except part j's: the edge set restricted to part j with
// the induced path order. Returns the induced pocset for comparison.
Pocset collapse_to_part(const RealizedTree& t, std::int32_t part);

}  // namespace arbor
