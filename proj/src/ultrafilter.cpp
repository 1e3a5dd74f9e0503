#include "arbor/ultrafilter.hpp"

namespace arbor {

const char* to_string(OrderMode m) {
  return m == OrderMode::Subset ? "subset" : "almost";
}

std::optional<ClosureFailure> closure_failure(const Pocset& p, const Ultrafilter& v) {
  const auto& ord = order_of(p, v.mode);
  for (ElemId a : v.chosen)
    for (ElemId b = 0; b < p.size(); ++b)
      if (ord.get(a, b) && !v.contains(b)) return ClosureFailure{a, b};
  return std::nullopt;
}

BasicVertexResult basic_ultrafilter(const Pocset& p, const std::vector<bool>& member_plus,
                                    OrderMode mode) {
  const std::int32_t npairs = p.elements.pair_count();
  if (member_plus.size() != std::size_t(npairs))
    throw StructuralError("membership oracle must decide every star-pair");

  BasicVertexResult res;
  res.vertex.mode = mode;
  res.vertex.chosen.resize(npairs);
  for (std::int32_t q = 0; q < npairs; ++q)
    res.vertex.chosen[q] = member_plus[q] ? plus_of_pair(q) : star(plus_of_pair(q));

  auto fail = closure_failure(p, res.vertex);
  if (fail) {
    if (mode == OrderMode::Subset)
      throw StructuralError("inconsistent membership oracle: " + p.name(fail->a) +
                            " selected, " + p.name(fail->a) + " c " + p.name(fail->b) +
                            ", " + p.name(fail->b) + " rejected");
    res.failure = fail;
  }
  return res;
}

PartialUltrafilter closure(const Pocset& p, const PartialUltrafilter& v) {
  const auto& ord = order_of(p, v.mode);
  PartialUltrafilter out = v;
  for (std::int32_t q = 0; q < p.elements.pair_count(); ++q) {
    if (!v.decided(q)) continue;
    ElemId a = v.chosen[q];
    for (ElemId b = 0; b < p.size(); ++b) {
      if (!ord.get(a, b) || pair_of(b) == q) continue;
      if (v.decided(pair_of(b))) continue;  // closure only adds new support
      ElemId prev = out.chosen[pair_of(b)];
      if (prev >= 0 && prev != b)
        throw ClosureContradiction("closure forces both " + p.name(b) + " (from " +
                                   p.name(a) + ") and " + p.name(star(b)));
      out.chosen[pair_of(b)] = b;
    }
  }
  return out;
}

StagedUltrafilter construct_dcc_ultrafilter(const Pocset& p,
                                            const std::vector<bool>& member_plus) {
  const std::int32_t npairs = p.elements.pair_count();
  if (member_plus.size() != std::size_t(npairs))
    throw StructuralError("membership oracle must decide every star-pair");

  const auto nparts = static_cast<std::int32_t>(p.part_names.size());
  StagedUltrafilter out;
  out.decided_at.assign(npairs, StageTag{});

  PartialUltrafilter cur;
  cur.mode = OrderMode::AlmostInclusion;
  cur.chosen.assign(npairs, -1);

  std::vector<std::string> trace;
  for (std::int32_t j = 0; j < nparts; ++j) {
    // step (j)a: basic choices for part-j pairs not yet decided
    for (std::int32_t q = 0; q < npairs; ++q) {
      if (p.part_of_pair[q] != j || cur.decided(q)) continue;
      cur.chosen[q] = member_plus[q] ? plus_of_pair(q) : star(plus_of_pair(q));
      out.decided_at[q] = StageTag{j, 'a'};
      trace.push_back(out.decided_at[q].str() + ": chose " + p.name(cur.chosen[q]));
    }
    if (j + 1 == nparts) break;  // last part needs no closure step
    // step (j)b: closure in the whole fragment
    PartialUltrafilter closed;
    try {
      closed = closure(p, cur);
    } catch (const ClosureContradiction& e) {
      trace.push_back(StageTag{j, 'b'}.str() + ": " + e.what());
      throw StageContradiction(e.what(), trace);
    }
    for (std::int32_t q = 0; q < npairs; ++q)
      if (closed.decided(q) && !cur.decided(q)) {
        out.decided_at[q] = StageTag{j, 'b'};
        trace.push_back(out.decided_at[q].str() + ": forced " + p.name(closed.chosen[q]));
      }
    cur = closed;
  }

  if (!cur.total())
    throw StageContradiction("construction left undecided pairs", trace);

  out.vertex.mode = OrderMode::AlmostInclusion;
  out.vertex.chosen = cur.chosen;
  out.closure_certified = !closure_failure(p, out.vertex).has_value();
  if (!out.closure_certified) {
    auto f = *closure_failure(p, out.vertex);
    trace.push_back("final check: " + p.name(f.a) + " <= " + p.name(f.b) + " violated");
    throw StageContradiction("staged result is not upward closed", trace);
  }
  return out;
}

}  // namespace arbor
