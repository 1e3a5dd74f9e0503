#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arbor/dfa.hpp"
#include "arbor/stallings.hpp"
#include "arbor/word.hpp"

namespace arbor {

// One-edge splitting of the ambient free group. For the two exact kinds the
// edge group is trivial, so corner smallness is plain language finiteness.
// The experimental kind carries generator words for nontrivial subgroups and
// only supports bounded semi-decisions.
struct SplittingSpec {
  enum class Kind { FreeAmalgam, FreeHnn, ExperimentalAmalgam };

  std::string name;
  Kind kind = Kind::FreeAmalgam;
  std::vector<std::int32_t> left_basis;    // amalgam
  std::vector<std::int32_t> right_basis;   // amalgam
  std::int32_t stable = -1;                // hnn
  std::vector<std::int32_t> vertex_basis;  // hnn
  std::optional<Automorphism> twist;
  std::vector<Word> edge_generators;       // experimental
};

struct UnsupportedExact : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void validate_spec(const Basis& basis, const SplittingSpec& s);

// Fixed orientation convention: the base vertex is the left (resp. vertex
// group) vertex and the base edge points away from it, so the untwisted
// identity-side set is {empty word} u {first letter in the left basis} for
// amalgams and {words not starting with the positive stable letter} for HNN.
bool side_membership(const Basis& basis, const SplittingSpec& s, const Word& g);

// Language of reduced words in g . X^(sign); minus = complement.
Dfa halfspace_language(const Basis& basis, const SplittingSpec& s, const Word& translate,
                       bool plus);

enum class Smallness { Empty, SmallNonempty, Large, UnknownWithinBound };

const char* to_string(Smallness s);

struct SmallnessBounds {
  std::int32_t max_cosets = 16;     // candidate coset representatives
  std::int32_t max_word_length = 8; // representative search depth
};

// Corner status of the intersection of two half-space languages. With a
// trivial stabilizer this is exact language finiteness; with a finitely
// generated stabilizer a bounded but exact-when-it-answers coset-cover
// search runs (inclusion in a finite union of cosets is itself a regular
// language test, so a positive answer is certified).
Smallness corner_smallness(const Basis& basis, const Dfa& corner,
                           const StallingsGraph* stabilizer = nullptr,
                           SmallnessBounds bounds = {});

}  // namespace arbor
