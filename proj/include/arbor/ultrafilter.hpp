#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arbor/pocset.hpp"

namespace arbor {

enum class OrderMode { Subset, AlmostInclusion };

const char* to_string(OrderMode m);

inline const Relation& order_of(const Pocset& p, OrderMode m) {
  return m == OrderMode::Subset ? p.incl : p.leq;
}

// A side selection: one element of each star-pair, upward closed in the
// chosen order. `chosen[pair]` is the selected signed element.
struct Ultrafilter {
  std::vector<ElemId> chosen;  // indexed by star-pair
  OrderMode mode = OrderMode::AlmostInclusion;

  bool contains(ElemId e) const { return chosen[pair_of(e)] == e; }
  std::vector<ElemId> sorted_elements() const { return chosen; }
  bool operator==(const Ultrafilter&) const = default;
};

// Witness of an upward-closure failure: a chosen, a <= b, b rejected.
struct ClosureFailure {
  ElemId a, b;
};

std::optional<ClosureFailure> closure_failure(const Pocset& p, const Ultrafilter& v);

// Side selection from a per-pair membership oracle. The oracle fixes the
// sign of every pair (true = plus element). Subset-mode closure failures
// mean the oracle is inconsistent with literal inclusions and throw;
// almost-inclusion failures are returned as a value.
struct BasicVertexResult {
  Ultrafilter vertex;
  std::optional<ClosureFailure> failure;  // set only in almost-inclusion mode
};

BasicVertexResult basic_ultrafilter(const Pocset& p, const std::vector<bool>& member_plus,
                                    OrderMode mode);

// Partial ultrafilter: decided pairs carry the chosen element, others -1.
struct PartialUltrafilter {
  std::vector<ElemId> chosen;  // -1 = undecided
  OrderMode mode = OrderMode::AlmostInclusion;

  bool decided(std::int32_t pair) const { return chosen[pair] >= 0; }
  bool total() const {
    for (ElemId e : chosen)
      if (e < 0) return false;
    return true;
  }
};

struct ClosureContradiction : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Adds every b with a <= b for some chosen a. Throws ClosureContradiction
// when both b and b* get forced.
PartialUltrafilter closure(const Pocset& p, const PartialUltrafilter& v);

// Staged construction over the pocset's parts in index order: step (j,a)
// adds oracle choices for part j's undecided pairs, step (j,b) closes.
struct StageTag {
  std::int32_t part = -1;
  char kind = 'a';  // 'a' = basic choice, 'b' = closure
  std::string str() const { return std::to_string(part + 1) + kind; }
};

struct StagedUltrafilter {
  Ultrafilter vertex;
  std::vector<StageTag> decided_at;  // per star-pair
  bool closure_certified = false;    // upward closure verified on the result
};

struct StageContradiction : std::runtime_error {
  std::vector<std::string> trace;
  StageContradiction(const std::string& what, std::vector<std::string> tr)
      : std::runtime_error(what), trace(std::move(tr)) {}
};

StagedUltrafilter construct_dcc_ultrafilter(const Pocset& p,
                                            const std::vector<bool>& member_plus);

}  // namespace arbor
