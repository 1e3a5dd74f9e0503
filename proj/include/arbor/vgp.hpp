#pragma once

#include <array>
#include <string>
#include <vector>

#include "arbor/ultrafilter.hpp"

namespace arbor {

// Ball-restricted truth value.
enum class Observed : std::uint8_t { Empty, Nonempty, Undecided };

const char* to_string(Observed s);

// Repositioned fragment. For a fragment element e and ball element x,
// x lies in the primed set e' exactly when the inverse translate of e under
// x lands on an element selected by w; an action fragment too small to
// evaluate the translate yields an explicit undecided mark.
struct VgpResult {
  std::vector<std::vector<std::string>> ball;
  // membership[e][i]: ball[i] in e'? (0 = no, 1 = yes, 2 = undecided)
  std::vector<std::vector<std::uint8_t>> membership;
  // observed corners per unordered base pair (CornerTable::slot indexing):
  // [P+ n Q+, P+ n Q-, P- n Q+, P- n Q-] of the primed sets
  std::vector<std::array<Observed, 4>> corner_cells;
  std::vector<std::pair<ElemId, ElemId>> iso_violations;
  std::vector<std::pair<ElemId, ElemId>> iso_unwitnessed;
  std::int64_t undecided_count = 0;
  bool nested_observed = true;  // every fully decided pair shows an empty corner

  bool order_isomorphic() const {
    return iso_violations.empty() && iso_unwitnessed.empty() && undecided_count == 0;
  }
};

// w must be an almost-inclusion ultrafilter on p. The ball is a list of
// words over the action generators ('-' suffix = inverse); the identity
// (empty word) is added when missing.
VgpResult reposition_vgp(const Pocset& p, const Ultrafilter& w,
                         std::vector<std::vector<std::string>> ball);

// Corner table of the primed fragment over the same element names
// (Empty -> empty, Nonempty -> large). Requires undecided_count == 0.
CornerTable primed_corner_table(const Pocset& p, const VgpResult& r);

}  // namespace arbor
