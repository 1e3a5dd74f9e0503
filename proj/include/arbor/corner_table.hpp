#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arbor/elements.hpp"
#include "arbor/report.hpp"

namespace arbor {

enum class CornerStatus : std::uint8_t { Empty, SmallNonempty, Large };

inline bool is_small(CornerStatus s) { return s != CornerStatus::Large; }

const char* to_string(CornerStatus s);
std::optional<CornerStatus> corner_status_from_string(const std::string& s);

// Corner data for a finite half-space family: for every unordered pair of
// star-pairs {P,Q}, the four statuses of (P+ n Q+, P+ n Q-, P- n Q+, P- n Q-).
// Statuses are input data at this tier; star-consistency and symmetry are
// enforced by the storage scheme, so a table is consistent by construction
// once built (the JSON loader checks redundant entries against each other).
class CornerTable {
 public:
  CornerTable() = default;
  CornerTable(ElementTable elements,
              std::vector<std::array<CornerStatus, 4>> upper_triangle);

  static std::size_t slot(std::int32_t p, std::int32_t q, std::int32_t npairs);

  const ElementTable& elements() const { return elems_; }
  std::int32_t pair_count() const { return elems_.pair_count(); }

  // Status of the corner a n b for arbitrary signed elements with distinct
  // bases. Degenerate same-pair queries throw.
  CornerStatus corner(ElemId a, ElemId b) const;

  // The four corners of the ordered pair (a, b):
  // [a n b, a n b*, a* n b, a* n b*].
  std::array<CornerStatus, 4> corners(ElemId a, ElemId b) const;

  bool crossing(ElemId a, ElemId b) const;

  ValidationReport check_position(bool very_good) const;

 private:
  ElementTable elems_;
  // one 4-entry record per unordered base pair p < q, both signs plus
  std::vector<std::array<CornerStatus, 4>> cells_;
};

}  // namespace arbor
