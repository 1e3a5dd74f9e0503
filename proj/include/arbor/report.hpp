#pragma once

#include <string>
#include <vector>

namespace arbor {

struct Violation {
  std::string axiom;                  // e.g. "antisymmetry", "condition4"
  std::vector<std::string> witness;   // element names, canonical order
  std::string detail;                 // optional human-readable note
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;

  void add(std::string axiom, std::vector<std::string> witness,
           std::string detail = {}) {
    ok = false;
    violations.push_back({std::move(axiom), std::move(witness), std::move(detail)});
  }
};

}  // namespace arbor
