#include "helpers.hpp"

namespace arbor::testing {

RandomTreePocset random_tree_pocset(std::mt19937& rng, std::int32_t edges,
                                    std::int32_t parts) {
  RandomTreePocset out;
  const std::int32_t nv = edges + 1;
  std::vector<std::int32_t> tail(edges), head(edges);
  for (std::int32_t e = 0; e < edges; ++e) {
    // random attachment point among existing vertices, random orientation
    std::int32_t other = std::uniform_int_distribution<std::int32_t>(0, e)(rng);
    std::int32_t fresh = e + 1;
    if (std::uniform_int_distribution<int>(0, 1)(rng)) {
      tail[e] = other;
      head[e] = fresh;
    } else {
      tail[e] = fresh;
      head[e] = other;
    }
  }

  std::vector<std::string> names;
  for (std::int32_t e = 0; e < edges; ++e) {
    std::string n = "e";
    // zero-padded so name order is stable
    std::string d = std::to_string(e);
    n += std::string(3 - std::min<std::size_t>(3, d.size()), '0') + d;
    names.push_back(n);
  }

  Pocset p;
  p.elements = ElementTable(names);
  p.part_names.clear();
  for (std::int32_t k = 0; k < parts; ++k) p.part_names.push_back("P" + std::to_string(k));
  p.part_of_pair.resize(edges);
  for (std::int32_t e = 0; e < edges; ++e)
    p.part_of_pair[e] = std::uniform_int_distribution<std::int32_t>(0, parts - 1)(rng);

  // path order on directed edges: e <= f iff a no-backtrack directed walk
  // starts with e and ends with f
  auto vertex_out = std::vector<std::vector<ElemId>>(nv);
  auto etail = [&](ElemId s) { return is_plus(s) ? tail[pair_of(s)] : head[pair_of(s)]; };
  auto ehead = [&](ElemId s) { return is_plus(s) ? head[pair_of(s)] : tail[pair_of(s)]; };
  for (ElemId s = 0; s < 2 * edges; ++s) vertex_out[etail(s)].push_back(s);

  p.leq = Relation(2 * edges);
  for (ElemId s = 0; s < 2 * edges; ++s) {
    std::vector<ElemId> stack{s};
    std::vector<bool> seen(2 * edges, false);
    seen[s] = true;
    while (!stack.empty()) {
      ElemId cur = stack.back();
      stack.pop_back();
      for (ElemId nxt : vertex_out[ehead(cur)]) {
        if (nxt == star(cur) || seen[nxt]) continue;
        seen[nxt] = true;
        stack.push_back(nxt);
      }
    }
    for (ElemId f = 0; f < 2 * edges; ++f)
      if (seen[f]) p.leq.set(s, f);
  }
  p.incl = p.leq;

  out.pocset = std::move(p);
  out.tail = tail;
  out.head = head;
  return out;
}

}  // namespace arbor::testing
