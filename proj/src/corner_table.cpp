#include "arbor/corner_table.hpp"

namespace arbor {

const char* to_string(CornerStatus s) {
  switch (s) {
    case CornerStatus::Empty: return "empty";
    case CornerStatus::SmallNonempty: return "small";
    case CornerStatus::Large: return "large";
  }
  return "?";
}

std::optional<CornerStatus> corner_status_from_string(const std::string& s) {
  if (s == "empty") return CornerStatus::Empty;
  if (s == "small" || s == "small-nonempty") return CornerStatus::SmallNonempty;
  if (s == "large") return CornerStatus::Large;
  return std::nullopt;
}

std::size_t CornerTable::slot(std::int32_t p, std::int32_t q, std::int32_t npairs) {
  // upper triangle p < q, row-major
  return std::size_t(p) * npairs - std::size_t(p) * (p + 1) / 2 + (q - p - 1);
}

CornerTable::CornerTable(ElementTable elements,
                         std::vector<std::array<CornerStatus, 4>> upper_triangle)
    : elems_(std::move(elements)), cells_(std::move(upper_triangle)) {
  const std::int32_t n = elems_.pair_count();
  const std::size_t want = std::size_t(n) * (n - 1) / 2;
  if (cells_.size() != want)
    throw StructuralError("corner table has " + std::to_string(cells_.size()) +
                          " cells, expected " + std::to_string(want));
}

CornerStatus CornerTable::corner(ElemId a, ElemId b) const {
  std::int32_t p = pair_of(a), q = pair_of(b);
  if (p == q)
    throw StructuralError("degenerate pair: corner of (" + elems_.name(a) +
                          ", " + elems_.name(b) + ")");
  // Normalize to the stored cell for (min pair, max pair), plus signs.
  bool swapped = p > q;
  if (swapped) {
    std::swap(p, q);
    std::swap(a, b);
  }
  const auto& cell = cells_[slot(p, q, elems_.pair_count())];
  int idx = (is_plus(a) ? 0 : 2) + (is_plus(b) ? 0 : 1);
  return cell[idx];
}

std::array<CornerStatus, 4> CornerTable::corners(ElemId a, ElemId b) const {
  return {corner(a, b), corner(a, star(b)), corner(star(a), b),
          corner(star(a), star(b))};
}

bool CornerTable::crossing(ElemId a, ElemId b) const {
  for (CornerStatus s : corners(a, b))
    if (s != CornerStatus::Large) return false;
  return true;
}

ValidationReport CornerTable::check_position(bool very_good) const {
  ValidationReport rep;
  const std::int32_t n = elems_.pair_count();
  for (std::int32_t p = 0; p < n; ++p) {
    for (std::int32_t q = p + 1; q < n; ++q) {
      const auto& cell = cells_[slot(p, q, n)];
      if (very_good) {
        static const char* corner_tag[4] = {"+ n +", "+ n -", "- n +", "- n -"};
        for (int i = 0; i < 4; ++i)
          if (cell[i] == CornerStatus::SmallNonempty)
            rep.add("very-good-position",
                    {elems_.base_name(p), elems_.base_name(q)},
                    std::string("small nonempty corner ") + corner_tag[i]);
      } else {
        int small = 0, empty = 0;
        for (CornerStatus s : cell) {
          small += is_small(s);
          empty += (s == CornerStatus::Empty);
        }
        if (small >= 2 && empty == 0)
          rep.add("good-position", {elems_.base_name(p), elems_.base_name(q)},
                  "two small corners, neither empty");
      }
    }
  }
  return rep;
}

}  // namespace arbor
