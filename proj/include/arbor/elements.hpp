#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace arbor {

// A signed element of a half-space family. Elements come in star-pairs
// {E, E*}; ids are assigned so that star(e) == e ^ 1 and pair(e) == e >> 1.
using ElemId = std::int32_t;

constexpr ElemId star(ElemId e) { return e ^ 1; }
constexpr ElemId pair_of(ElemId e) { return e >> 1; }
constexpr bool is_plus(ElemId e) { return (e & 1) == 0; }
constexpr ElemId plus_of_pair(std::int32_t p) { return p << 1; }

struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Maps star-pair indices to base names and signed ids to display tokens
// ("A" / "A*"). Base order is fixed at construction and is the canonical
// element order used for all sorted output.
class ElementTable {
 public:
  ElementTable() = default;
  explicit ElementTable(std::vector<std::string> base_names)
      : bases_(std::move(base_names)) {
    for (std::size_t i = 0; i < bases_.size(); ++i) {
      if (bases_[i].empty() || bases_[i].back() == '*')
        throw StructuralError("bad base name: '" + bases_[i] + "'");
      for (std::size_t j = i + 1; j < bases_.size(); ++j)
        if (bases_[i] == bases_[j])
          throw StructuralError("duplicate element name: " + bases_[i]);
    }
  }

  std::int32_t pair_count() const { return static_cast<std::int32_t>(bases_.size()); }
  ElemId size() const { return static_cast<ElemId>(2 * bases_.size()); }

  const std::string& base_name(std::int32_t pair) const { return bases_.at(pair); }

  std::string name(ElemId e) const {
    std::string n = bases_.at(pair_of(e));
    if (!is_plus(e)) n += '*';
    return n;
  }

  // Parses "A" or "A*". Throws StructuralError on unknown names.
  ElemId parse(const std::string& token) const {
    std::string base = token;
    bool starred = false;
    if (!base.empty() && base.back() == '*') {
      starred = true;
      base.pop_back();
    }
    for (std::size_t i = 0; i < bases_.size(); ++i)
      if (bases_[i] == base)
        return starred ? star(plus_of_pair(static_cast<std::int32_t>(i)))
                       : plus_of_pair(static_cast<std::int32_t>(i));
    throw StructuralError("unknown element: '" + token + "'");
  }

  bool has(const std::string& token) const {
    std::string base = token;
    if (!base.empty() && base.back() == '*') base.pop_back();
    for (const auto& b : bases_)
      if (b == base) return true;
    return false;
  }

 private:
  std::vector<std::string> bases_;
};

}  // namespace arbor
