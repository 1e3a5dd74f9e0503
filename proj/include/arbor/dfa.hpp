#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arbor/word.hpp"

namespace arbor {

// Deterministic automaton over the signed letters of a basis, always kept in
// canonical minimal form and accepting freely reduced words only. Missing
// transitions (-1) are dead. Canonical form: trim to useful states, merge
// Nerode-equivalent states, renumber by BFS from the start in letter order;
// the empty language is the one-state automaton with no transitions.
class Dfa {
 public:
  Dfa() = default;

  std::int32_t letters = 0;
  std::int32_t start = 0;
  std::vector<std::int32_t> trans;  // nstates x letters
  std::vector<bool> accepting;

  std::int32_t state_count() const { return static_cast<std::int32_t>(accepting.size()); }
  std::int32_t next(std::int32_t s, Letter l) const { return trans[std::size_t(s) * letters + l]; }

  bool accepts(const Word& w) const;
  bool empty() const;
  bool finite() const;  // pre: canonical (trimmed)
  std::optional<std::int64_t> exact_size() const;  // nullopt when infinite
  std::vector<Word> enumerate(std::int64_t limit) const;  // shortlex, up to limit words

  bool operator==(const Dfa&) const = default;
  std::size_t hash() const;
};

// All freely reduced words.
Dfa reduced_universe(const Basis& basis);
Dfa empty_language(const Basis& basis);
Dfa singleton(const Basis& basis, const Word& w);

Dfa intersect(const Dfa& a, const Dfa& b);
Dfa unite(const Dfa& a, const Dfa& b);
// Complement within the reduced words.
Dfa complement(const Basis& basis, const Dfa& a);
bool subset(const Dfa& a, const Dfa& b);

// Left/right group translation: reduce(x . w) / reduce(w . x).
Dfa left_mult(const Basis& basis, Letter x, const Dfa& a);
Dfa left_mult(const Basis& basis, const Word& g, const Dfa& a);
Dfa right_mult(const Basis& basis, const Dfa& a, Letter x);
Dfa right_mult(const Basis& basis, const Dfa& a, const Word& g);

// Image under a basis-to-word substitution with free reduction (the image of
// a regular set under an endomorphism of the free group stays regular).
Dfa morphism_image(const Basis& basis, const Dfa& a, const std::vector<Word>& letter_images);

// Canonicalize an arbitrary automaton (used by the constructions above).
Dfa minimize(const Dfa& a);

// Reduced words accepted at `target` markers: language of paths in a folded
// labeled graph. Used for subgroup languages.
Dfa graph_language(const Basis& basis, const std::vector<std::vector<std::int32_t>>& next,
                   std::int32_t start, const std::vector<bool>& accept);

}  // namespace arbor
