#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arbor/dfa.hpp"
#include "arbor/word.hpp"

namespace arbor {

// Folded core graph of a finitely generated subgroup of a free group.
// next[state][letter] traverses the letter in the given direction; the two
// directions of an edge are stored as mutually inverse entries.
class StallingsGraph {
 public:
  StallingsGraph() = default;
  StallingsGraph(const Basis& basis, const std::vector<Word>& generators);

  const Basis& basis() const { return basis_; }
  std::int32_t base() const { return base_; }
  std::int32_t state_count() const { return static_cast<std::int32_t>(next_.size()); }
  std::int32_t next(std::int32_t s, Letter l) const { return next_[s][l]; }

  bool contains(const Word& w) const;

  // Language of reduced words in the subgroup.
  Dfa language() const;

  // Free basis of the subgroup from a spanning tree: one generator per
  // non-tree edge, as words in the ambient basis.
  std::vector<Word> subgroup_basis() const;

  // Rewrites a member as a word over subgroup_basis() letters (letter i of
  // the returned word indexes the basis list). Returns nullopt for
  // non-members.
  std::optional<Word> rewrite(const Word& member) const;

 private:
  void fold(std::int32_t nstates, std::vector<std::array<std::int32_t, 3>> edges);
  void ensure_tree() const;

  Basis basis_;
  std::vector<std::vector<std::int32_t>> next_;
  std::int32_t base_ = 0;

  // spanning tree cache, built on demand
  mutable std::vector<std::int32_t> tree_parent_;       // state -> parent state
  mutable std::vector<Letter> tree_letter_;             // letter read parent -> state
  mutable std::vector<std::pair<std::int32_t, Letter>> nontree_;  // (state, letter), canonical
  mutable bool tree_built_ = false;
};

StallingsGraph intersect_subgroups(const StallingsGraph& h, const StallingsGraph& k);

struct CommensurabilityReport {
  bool commensurable = false;
  std::optional<std::int64_t> index_in_h;  // [H : H n K], nullopt = infinite
  std::optional<std::int64_t> index_in_k;
};

CommensurabilityReport commensurable(const StallingsGraph& h, const StallingsGraph& k);

// [H : U] for U given by generators that must lie in H; nullopt = infinite.
std::optional<std::int64_t> subgroup_index(const StallingsGraph& h,
                                           const std::vector<Word>& u_generators);

}  // namespace arbor
