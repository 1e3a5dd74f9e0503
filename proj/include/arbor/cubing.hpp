#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arbor/ultrafilter.hpp"

namespace arbor {

struct CubingCaps {
  std::int64_t max_vertices = 20000;
  std::int32_t max_dim = 4;
};

struct CubeEdge {
  std::int32_t u, v;        // vertex indices, u < v
  std::int32_t pair;        // star-pair exited
  std::int32_t hyperplane;  // square-equivalence class
};

struct Cube {
  std::int32_t base;                // vertex index of the minimal corner
  std::vector<std::int32_t> pairs;  // flipped star-pairs, sorted, size = dim
};

// Finite cubing over a pocset fragment: vertices are all ultrafilters in the
// given order mode, enumerated in canonical order.
struct CubeComplex {
  OrderMode mode = OrderMode::AlmostInclusion;
  std::int32_t npairs = 0;
  std::vector<Ultrafilter> vertices;           // canonical (lexicographic) order
  std::vector<CubeEdge> edges;
  std::vector<std::vector<Cube>> cubes_by_dim;  // index 0 unused, 1 = edges mirror
  std::int32_t hyperplane_count = 0;
  bool truncated = false;     // vertex cap hit: partial result
  bool dim_capped = false;    // cube search stopped at max_dim
  std::vector<std::int32_t> component_of;  // vertex -> 1-skeleton component
  std::int32_t component_count = 0;

  std::int32_t vertex_count() const { return static_cast<std::int32_t>(vertices.size()); }
  std::int32_t square_count() const {
    return cubes_by_dim.size() > 2 ? static_cast<std::int32_t>(cubes_by_dim[2].size()) : 0;
  }
  std::optional<std::int32_t> vertex_index(const Ultrafilter& v) const;
};

CubeComplex build_cubing(const Pocset& p, OrderMode mode, CubingCaps caps = {});

// Vertices whose ultrafilter contains the given element.
std::vector<std::int32_t> halfspace_vertex_set(const CubeComplex& c, ElemId e);

// Checks the half-space restriction claim between the subset cubing and the
// almost-inclusion cubing built from the same pocset: L's vertex set embeds
// in C's, and each C-halfspace meets L in exactly the L-halfspace.
ValidationReport verify_embedding(const Pocset& p, const CubeComplex& subset_cubing,
                                  const CubeComplex& almost_cubing);

// Induced partial action on cubing vertices from the pocset's fragment.
std::map<std::string, std::vector<std::int32_t>> cubing_vertex_action(
    const Pocset& p, const CubeComplex& c);

}  // namespace arbor
