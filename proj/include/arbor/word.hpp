#pragma once

#include <map>
#include <string>
#include <vector>

#include "arbor/elements.hpp"

namespace arbor {

// Signed letters over a free basis: letter 2*i is basis symbol i, 2*i+1 its
// inverse. inv(l) == l ^ 1.
using Letter = std::int32_t;

constexpr Letter inv(Letter l) { return l ^ 1; }
constexpr std::int32_t basis_of(Letter l) { return l >> 1; }
constexpr bool positive(Letter l) { return (l & 1) == 0; }

class Basis {
 public:
  Basis() = default;
  explicit Basis(std::vector<std::string> symbols);

  std::int32_t rank() const { return static_cast<std::int32_t>(symbols_.size()); }
  std::int32_t letter_count() const { return 2 * rank(); }
  const std::string& symbol(std::int32_t i) const { return symbols_.at(i); }
  std::string letter_name(Letter l) const {
    return positive(l) ? symbols_.at(basis_of(l)) : symbols_.at(basis_of(l)) + "-";
  }
  Letter parse_letter(const std::string& tok) const;
  bool operator==(const Basis&) const = default;

 private:
  std::vector<std::string> symbols_;
};

// Freely reduced word.
struct Word {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;
};

Word normalize_word(const std::vector<Letter>& raw);
Word concat(const Word& a, const Word& b);
Word inverse(const Word& w);

// "a b- a" style parsing/printing; empty string = identity.
Word parse_word(const Basis& basis, const std::string& text);
std::string word_to_string(const Basis& basis, const Word& w);

// All reduced words of length <= radius, in length-lexicographic order.
std::vector<Word> ball(const Basis& basis, std::int32_t radius);

// Basis-image map with a validated inverse.
struct Automorphism {
  std::vector<Word> images;          // per basis symbol
  std::vector<Word> inverse_images;  // per basis symbol

  Word apply(const Word& w) const;
  Word apply_inverse(const Word& w) const;
};

// Throws StructuralError unless both compositions fix the basis.
Automorphism make_automorphism(const Basis& basis, std::vector<Word> images,
                               std::vector<Word> inverse_images);

}  // namespace arbor
