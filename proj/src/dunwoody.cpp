#include "arbor/dunwoody.hpp"

#include <algorithm>
#include <numeric>

namespace arbor {

namespace {

struct Dsu {
  std::vector<std::int32_t> up;
  explicit Dsu(std::int32_t n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  std::int32_t find(std::int32_t x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void unite(std::int32_t a, std::int32_t b) { up[find(a)] = find(b); }
};

}  // namespace

RealizedTree build_tree(const Pocset& p) {
  auto rep = validate_pocset(p);
  if (!rep.ok)
    throw StructuralError("pocset invalid: " + rep.violations.front().axiom);

  const ElemId n = p.size();
  for (ElemId a = 0; a < n; a += 2)
    for (ElemId b = a + 2; b < n; b += 2)
      if (!p.comparable(a, b))
        throw ComparabilityError(p.name(a), p.name(b));

  // Two edges share their tail vertex when e* <= f with nothing strictly
  // between. Symmetric by order reversal; closed transitively by the union.
  Dsu dsu(n);
  for (ElemId e = 0; e < n; ++e) {
    for (ElemId f = 0; f < n; ++f) {
      if (f == star(e) || f == e) continue;
      if (!p.leq.get(star(e), f)) continue;
      bool gap = true;
      for (ElemId a = 0; a < n && gap; ++a)
        if (a != star(e) && a != f && p.leq.get(star(e), a) && p.leq.get(a, f))
          gap = false;
      if (gap) dsu.unite(e, f);
    }
  }

  RealizedTree t;
  t.elements = p.elements;
  t.part_names = p.part_names;
  t.part_of_pair = p.part_of_pair;
  t.vertex_of.assign(n, -1);

  std::vector<std::int32_t> root_to_vertex(n, -1);
  for (ElemId e = 0; e < n; ++e) {
    std::int32_t r = dsu.find(e);
    if (root_to_vertex[r] < 0) {
      root_to_vertex[r] = t.vertex_count();
      t.vertex_classes.emplace_back();
    }
    t.vertex_of[e] = root_to_vertex[r];
    t.vertex_classes[root_to_vertex[r]].push_back(e);
  }
  for (auto& cls : t.vertex_classes) std::sort(cls.begin(), cls.end());

  // Renumber vertices by canonical minimum element for determinism.
  std::vector<std::int32_t> order(t.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::int32_t x, std::int32_t y) {
    return t.vertex_classes[x].front() < t.vertex_classes[y].front();
  });
  std::vector<std::int32_t> newid(t.vertex_count());
  for (std::int32_t i = 0; i < t.vertex_count(); ++i) newid[order[i]] = i;
  std::vector<std::vector<ElemId>> classes(t.vertex_count());
  for (std::int32_t v = 0; v < t.vertex_count(); ++v)
    classes[newid[v]] = std::move(t.vertex_classes[v]);
  t.vertex_classes = std::move(classes);
  for (ElemId e = 0; e < n; ++e) t.vertex_of[e] = newid[t.vertex_of[e]];

  // Tree sanity: |V| = |E|/2 + 1 and connected.
  const std::int32_t undirected = n / 2;
  if (t.vertex_count() != undirected + 1)
    throw StructuralError("realization is not a tree: " +
                          std::to_string(t.vertex_count()) + " vertices for " +
                          std::to_string(undirected) + " edges");
  Dsu comp(t.vertex_count());
  for (ElemId e = 0; e < n; e += 2) comp.unite(t.tail(e), t.head(e));
  for (std::int32_t v = 1; v < t.vertex_count(); ++v)
    if (comp.find(v) != comp.find(0))
      throw StructuralError("realization is disconnected");

  return t;
}

std::vector<bool> path_reachable(const RealizedTree& t, ElemId e) {
  // Follow directed edges without immediate backtracking; on a tree every
  // such walk is simple.
  const ElemId n = t.elements.size();
  std::vector<std::vector<ElemId>> out_edges(t.vertex_count());
  for (ElemId f = 0; f < n; ++f) out_edges[t.tail(f)].push_back(f);

  std::vector<bool> seen(n, false);
  std::vector<ElemId> stack{e};
  seen[e] = true;
  while (!stack.empty()) {
    ElemId cur = stack.back();
    stack.pop_back();
    for (ElemId next : out_edges[t.head(cur)]) {
      if (next == star(cur) || seen[next]) continue;
      seen[next] = true;
      stack.push_back(next);
    }
  }
  return seen;
}

ValidationReport verify_realization(const RealizedTree& t, const Pocset& p) {
  ValidationReport rep;
  const ElemId n = p.size();
  if (t.elements.size() != n) {
    rep.add("structure", {}, "element count mismatch");
    return rep;
  }

  for (ElemId e = 0; e < n; ++e) {
    if (t.vertex_of[e] < 0 || t.vertex_of[e] >= t.vertex_count()) {
      rep.add("structure", {t.elements.name(e)}, "edge endpoint out of range");
      return rep;
    }
    if (t.tail(e) != t.head(star(e)) || t.head(e) != t.tail(star(e)))
      rep.add("involution-reversal", {t.elements.name(e)});
  }

  const std::int32_t undirected = n / 2;
  if (t.vertex_count() != undirected + 1)
    rep.add("tree-shape", {}, "vertex count != edge count + 1");
  Dsu comp(t.vertex_count());
  for (ElemId e = 0; e < n; e += 2) comp.unite(t.tail(e), t.head(e));
  for (std::int32_t v = 1; v < t.vertex_count(); ++v)
    if (comp.find(v) != comp.find(0)) {
      rep.add("tree-shape", {}, "disconnected");
      break;
    }
  if (!rep.ok) return rep;

  for (ElemId a = 0; a < n; ++a) {
    auto reach = path_reachable(t, a);
    for (ElemId b = 0; b < n; ++b) {
      if (p.leq.get(a, b) != reach[b]) {
        rep.add("order-path-mismatch", {p.name(a), p.name(b)},
                p.leq.get(a, b) ? "a <= b but no path from a to b"
                                : "path exists but a <= b fails");
        return rep;  // first mismatch in canonical order
      }
    }
  }
  return rep;
}

}  // namespace arbor
