#pragma once

#include <random>
#include <string>

#include "arbor/json_io.hpp"

namespace arbor::testing {

// Fragment with one crossing pair: all four corners large.
inline Pocset p4() {
  Json j = {{"elements", {"A", "B"}},
            {"corners", {{"A|B", {"large", "large", "large", "large"}}}}};
  return load_pocset_json(j).pocset;
}

// Nested pair A <= B through an empty corner.
inline Pocset n4_empty() {
  Json j = {{"elements", {"A", "B"}},
            {"corners", {{"A|B", {"large", "empty", "large", "large"}}}}};
  return load_pocset_json(j).pocset;
}

// Nested pair A <= B through a small nonempty corner.
inline Pocset n4_small() {
  Json j = {{"elements", {"A", "B"}},
            {"corners", {{"A|B", {"large", "small", "large", "large"}}}}};
  return load_pocset_json(j).pocset;
}

inline Pocset single_pair() {
  Json j = {{"elements", {"A"}}};
  return load_pocset_json(j).pocset;
}

// Random tree on `edges`+1 vertices; returns the edge pocset of its directed
// edge set under the simple-path order. Valid and nested by construction,
// the independent oracle for realization round-trips.
struct RandomTreePocset {
  Pocset pocset;
  std::vector<std::int32_t> tail, head;  // per star-pair: the generating tree
};

RandomTreePocset random_tree_pocset(std::mt19937& rng, std::int32_t edges,
                                    std::int32_t parts = 1);

}  // namespace arbor::testing
