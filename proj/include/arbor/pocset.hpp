#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arbor/corner_table.hpp"
#include "arbor/elements.hpp"
#include "arbor/report.hpp"

namespace arbor {

// Relation matrix over signed elements, packed row bitsets.
class Relation {
 public:
  Relation() = default;
  explicit Relation(ElemId n) : n_(n), words_((n + 63) / 64), bits_(std::size_t(n) * words_, 0) {}

  ElemId size() const { return n_; }
  bool get(ElemId a, ElemId b) const {
    return (bits_[std::size_t(a) * words_ + b / 64] >> (b % 64)) & 1u;
  }
  void set(ElemId a, ElemId b) {
    bits_[std::size_t(a) * words_ + b / 64] |= (std::uint64_t{1} << (b % 64));
  }
  void transitive_close();
  bool operator==(const Relation&) const = default;

 private:
  ElemId n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// A generator-labeled partial action on elements. Images of starred elements
// are forced by star-equivariance; missing entries mean the translate leaves
// the fragment.
struct ActionFragment {
  // generator name -> per-element image (-1 when undefined), both signs stored
  std::map<std::string, std::vector<ElemId>> maps;

  bool empty() const { return maps.empty(); }
  std::optional<ElemId> apply(const std::string& gen, ElemId e) const;
  // applies a word of generator names; names suffixed '-' mean inverse
  std::optional<ElemId> apply_word(const std::vector<std::string>& word, ElemId e) const;
  std::optional<ElemId> apply_inverse(const std::string& gen, ElemId e) const;
};

// Finite fragment of a half-space family with the almost-inclusion order.
// `leq` is the primary order; `incl` is literal inclusion when corner data
// distinguishes the two (equal to leq for hand-written relation files).
struct Pocset {
  ElementTable elements;
  Relation leq;
  Relation incl;
  std::vector<std::string> part_names;          // canonical (sorted) order
  std::vector<std::int32_t> part_of_pair;       // star-pair index -> part index
  ActionFragment action;
  std::optional<CornerTable> corners;           // kept when derived from a table

  ElemId size() const { return elements.size(); }
  std::int32_t part_of(ElemId e) const { return part_of_pair[pair_of(e)]; }
  std::vector<ElemId> part_elements(std::int32_t part) const;
  std::string name(ElemId e) const { return elements.name(e); }

  bool comparable(ElemId a, ElemId b) const {
    return leq.get(a, b) || leq.get(star(a), b) || leq.get(a, star(b)) ||
           leq.get(star(a), star(b));
  }
  // No relation between the two star-pairs in any of the four ways.
  bool order_crossing(ElemId a, ElemId b) const { return !comparable(a, b); }
};

// Axiom validation. With require_nested also checks comparability of every
// pair (fragments with crossings legitimately fail it, hence the flag).
ValidationReport validate_pocset(const Pocset& p, bool require_nested = false);

struct OrderDeriveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Builds the pocset of a corner table: leq from "empty or the unique small
// corner", incl from empty corners, both reflexively/transitively closed.
// Throws OrderDeriveError when good position fails or the closure breaks
// antisymmetry / condition 4.
Pocset derive_order_from_corners(
    const CornerTable& t,
    const std::vector<std::string>& part_names = {},
    const std::vector<std::int32_t>& part_of_pair = {},
    ActionFragment action = {});

enum class SandwichStatus { Witnessed, CrossingEverywhere, Unknown };

const char* to_string(SandwichStatus s);

struct SandwichEntry {
  std::int32_t part_j = 0;  // sandwiched part (representative element)
  std::int32_t part_k = 0;  // sandwiching part
  SandwichStatus status = SandwichStatus::Unknown;
};

struct IntervalResult {
  bool comparable = false;            // whether a <= b held at all
  std::vector<ElemId> between;        // all c with a <= c <= b, canonical order
  std::vector<SandwichEntry> sandwich;  // one entry per ordered part pair
};

IntervalResult interval(const Pocset& p, ElemId a, ElemId b);

bool crossing(const CornerTable& t, ElemId a, ElemId b);

}  // namespace arbor
