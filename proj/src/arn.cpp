#include "arbor/arn.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

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

bool pocset_pair_crossing(const Pocset& p, ElemId a, ElemId b) {
  if (p.corners) return p.corners->crossing(a, b);
  return p.order_crossing(a, b);
}

}  // namespace

std::vector<std::vector<std::int32_t>> cross_connected_components(const Pocset& p) {
  const std::int32_t npairs = p.elements.pair_count();
  Dsu dsu(npairs);
  for (std::int32_t q = 0; q < npairs; ++q)
    for (std::int32_t r = q + 1; r < npairs; ++r)
      if (pocset_pair_crossing(p, plus_of_pair(q), plus_of_pair(r))) dsu.unite(q, r);

  std::map<std::int32_t, std::int32_t> root_to_idx;
  std::vector<std::vector<std::int32_t>> out;
  for (std::int32_t q = 0; q < npairs; ++q) {
    auto [it, fresh] = root_to_idx.try_emplace(dsu.find(q), static_cast<std::int32_t>(out.size()));
    if (fresh) out.emplace_back();
    out[it->second].push_back(q);
  }
  return out;
}

Decomposition decompose(const CubeComplex& c) {
  const std::int32_t n = c.vertex_count();
  std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> adj(n);  // (to, edge)
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    adj[c.edges[i].u].push_back({c.edges[i].v, static_cast<std::int32_t>(i)});
    adj[c.edges[i].v].push_back({c.edges[i].u, static_cast<std::int32_t>(i)});
  }

  // Iterative Tarjan: articulation points and biconnected components.
  std::vector<std::int32_t> num(n, -1), low(n, 0), parent(n, -1);
  std::vector<bool> is_cut(n, false);
  std::vector<std::int32_t> edge_stack;
  std::vector<std::vector<std::int32_t>> blocks;  // edge id lists
  std::int32_t counter = 0;

  for (std::int32_t root = 0; root < n; ++root) {
    if (num[root] >= 0) continue;
    std::int32_t root_children = 0;
    struct Frame {
      std::int32_t v;
      std::size_t next;
    };
    std::vector<Frame> st{{root, 0}};
    num[root] = low[root] = counter++;
    while (!st.empty()) {
      auto& [v, next] = st.back();
      if (next < adj[v].size()) {
        auto [w, eid] = adj[v][next++];
        if (num[w] < 0) {
          edge_stack.push_back(eid);
          parent[w] = v;
          num[w] = low[w] = counter++;
          if (v == root) ++root_children;
          st.push_back({w, 0});
        } else if (w != parent[v] && num[w] < num[v]) {
          edge_stack.push_back(eid);
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        st.pop_back();
        if (st.empty()) break;
        std::int32_t u = st.back().v;
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= num[u]) {
          // u closes a block; root articulation is decided after the DFS
          std::vector<std::int32_t> block;
          while (!edge_stack.empty()) {
            std::int32_t eid = edge_stack.back();
            std::int32_t a = c.edges[eid].u, b = c.edges[eid].v;
            if (std::max(num[a], num[b]) < num[v]) break;
            edge_stack.pop_back();
            block.push_back(eid);
          }
          if (!block.empty()) blocks.push_back(std::move(block));
          if (u != root) is_cut[u] = true;
        }
      }
    }
    if (root_children > 1) is_cut[root] = true;
  }

  Decomposition d;
  for (std::int32_t v = 0; v < n; ++v)
    if (is_cut[v]) d.cut_vertices.push_back(v);

  // Deterministic block order: by minimal contained vertex.
  std::vector<std::vector<std::int32_t>> block_vertices;
  for (auto& b : blocks) {
    std::set<std::int32_t> vs;
    for (std::int32_t eid : b) {
      vs.insert(c.edges[eid].u);
      vs.insert(c.edges[eid].v);
    }
    block_vertices.emplace_back(vs.begin(), vs.end());
  }
  std::vector<std::int32_t> order(blocks.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::int32_t x, std::int32_t y) {
    return block_vertices[x] < block_vertices[y];
  });
  for (std::int32_t i : order) {
    d.subcubings.push_back(block_vertices[i]);
    std::vector<std::int32_t> crn;
    for (std::int32_t v : block_vertices[i])
      if (is_cut[v]) crn.push_back(v);
    d.corner_vertices.push_back(crn);
    std::set<std::int32_t> hs;
    for (std::int32_t eid : blocks[i]) hs.insert(c.edges[eid].hyperplane);
    d.hyperplanes_of.emplace_back(hs.begin(), hs.end());
  }
  return d;
}

std::vector<std::vector<std::int32_t>> BipartiteTree::adjacency() const {
  std::vector<std::vector<std::int32_t>> adj(vertices.size());
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

BipartiteTree build_arn(const Pocset& p, const CubeComplex& cubing) {
  if (cubing.component_count != 1)
    throw StructuralError("cubing 1-skeleton is disconnected (fragment too small)");
  if (cubing.mode != OrderMode::AlmostInclusion)
    throw StructuralError("regular neighborhoods are built over the almost-inclusion cubing");

  Decomposition d = decompose(cubing);
  BipartiteTree t;
  std::map<std::int32_t, std::int32_t> v1_of_cut;
  for (std::size_t a = 0; a < d.subcubings.size(); ++a)
    t.vertices.push_back({BipartiteVertex::V0, static_cast<std::int32_t>(a)});
  for (std::int32_t cv : d.cut_vertices) {
    v1_of_cut[cv] = static_cast<std::int32_t>(t.vertices.size());
    t.vertices.push_back({BipartiteVertex::V1, cv});
  }
  for (std::size_t a = 0; a < d.subcubings.size(); ++a)
    for (std::int32_t cv : d.corner_vertices[a])
      t.edges.push_back({static_cast<std::int32_t>(a), v1_of_cut[cv]});

  // induced partial action
  auto vact = cubing_vertex_action(p, cubing);
  for (const auto& [gen, vm] : vact) {
    std::vector<std::int32_t> tm(t.vertices.size(), -1);
    // V1 vertices move with their cut vertices
    for (const auto& [cv, idx] : v1_of_cut)
      if (vm[cv] >= 0 && v1_of_cut.count(vm[cv])) tm[idx] = v1_of_cut.at(vm[cv]);
    // V0 vertices move when every vertex of the block maps into one block
    for (std::size_t a = 0; a < d.subcubings.size(); ++a) {
      std::vector<std::int32_t> image;
      bool ok = true;
      for (std::int32_t v : d.subcubings[a]) {
        if (vm[v] < 0) {
          ok = false;
          break;
        }
        image.push_back(vm[v]);
      }
      if (!ok) continue;
      std::sort(image.begin(), image.end());
      for (std::size_t b = 0; b < d.subcubings.size(); ++b)
        if (d.subcubings[b] == image) {
          tm[a] = static_cast<std::int32_t>(b);
          break;
        }
    }
    t.action[gen] = std::move(tm);
  }
  return t;
}

EnclosureWitness verify_enclosure(const BipartiteTree& t, std::int32_t v0_index,
                                  std::int32_t part, const Pocset& p,
                                  const CubeComplex& cubing) {
  EnclosureWitness w;
  if (v0_index < 0 || v0_index >= static_cast<std::int32_t>(t.vertices.size()) ||
      t.vertices[v0_index].color != BipartiteVertex::V0)
    throw StructuralError("enclosure check needs a V0 vertex");

  Decomposition d = decompose(cubing);
  std::int32_t alpha = t.vertices[v0_index].origin;
  const auto& block = d.subcubings[alpha];

  // part-j hyperplanes inside the block
  std::set<std::int32_t> block_set(block.begin(), block.end());
  std::vector<std::int32_t> part_edges;
  for (std::size_t i = 0; i < cubing.edges.size(); ++i) {
    const auto& e = cubing.edges[i];
    if (!block_set.count(e.u) || !block_set.count(e.v)) continue;
    if (p.part_of_pair[e.pair] == part) part_edges.push_back(static_cast<std::int32_t>(i));
  }
  if (part_edges.empty()) {
    w.reason = "no hyperplanes of this part in the subcubing";
    return w;
  }
  std::set<std::int32_t> part_hyperplanes;
  for (std::int32_t eid : part_edges) part_hyperplanes.insert(cubing.edges[eid].hyperplane);
  w.part_edges = static_cast<std::int32_t>(part_hyperplanes.size());

  // Components of the block minus the part hyperplanes.
  std::map<std::int32_t, std::int32_t> local;
  for (std::int32_t v : block) local[v] = static_cast<std::int32_t>(local.size());
  Dsu comp(static_cast<std::int32_t>(block.size()));
  for (const auto& e : cubing.edges) {
    if (!block_set.count(e.u) || !block_set.count(e.v)) continue;
    if (p.part_of_pair[e.pair] == part) continue;
    comp.unite(local[e.u], local[e.v]);
  }
  std::set<std::int32_t> roots;
  for (auto [v, idx] : local) roots.insert(comp.find(idx));
  w.component_count = static_cast<std::int32_t>(roots.size());

  // The dual graph (components as vertices, one edge per part hyperplane)
  // must be a tree: #components = #hyperplanes + 1, and every hyperplane
  // must join exactly two distinct components consistently.
  if (w.component_count != w.part_edges + 1) {
    w.reason = "dual graph of part hyperplanes is not a tree";
    return w;
  }
  std::map<std::int32_t, std::set<std::pair<std::int32_t, std::int32_t>>> sides;
  for (std::int32_t eid : part_edges) {
    const auto& e = cubing.edges[eid];
    std::int32_t a = comp.find(local[e.u]), b = comp.find(local[e.v]);
    if (a == b) {
      w.reason = "part hyperplane does not separate its subcubing";
      return w;
    }
    sides[e.hyperplane].insert({std::min(a, b), std::max(a, b)});
  }
  for (const auto& [h, ss] : sides)
    if (ss.size() != 1) {
      w.reason = "hyperplane joins more than one component pair";
      return w;
    }
  // dual-tree connectivity
  Dsu dual(w.component_count);
  std::map<std::int32_t, std::int32_t> ridx;
  for (std::int32_t r : roots) ridx.try_emplace(r, static_cast<std::int32_t>(ridx.size()));
  for (const auto& [h, ss] : sides) dual.unite(ridx[ss.begin()->first], ridx[ss.begin()->second]);
  std::set<std::int32_t> droots;
  for (std::int32_t i = 0; i < w.component_count; ++i) droots.insert(dual.find(i));
  if (droots.size() != 1) {
    w.reason = "dual graph disconnected";
    return w;
  }

  // Both collapse maps are now immediate: collapsing the inserted edges
  // recovers the star of alpha (all components merge back to one center),
  // and collapsing everything else leaves exactly the part hyperplane edges.
  w.enclosed = true;
  return w;
}

ArnConditionReport verify_arn_conditions(const BipartiteTree& t, const Pocset& p,
                                         const CubeComplex& cubing,
                                         const Pocset* extended,
                                         const std::vector<std::string>& candidate_parts) {
  ArnConditionReport out;
  Decomposition d = decompose(cubing);
  const auto nparts = static_cast<std::int32_t>(p.part_names.size());

  // Isolated parts: no crossing against any other part.
  for (std::int32_t j = 0; j < nparts; ++j) {
    bool isolated = true;
    for (std::int32_t q = 0; q < p.elements.pair_count() && isolated; ++q) {
      if (p.part_of_pair[q] != j) continue;
      for (std::int32_t r = 0; r < p.elements.pair_count() && isolated; ++r) {
        if (p.part_of_pair[r] == j) continue;
        if (pocset_pair_crossing(p, plus_of_pair(q), plus_of_pair(r))) isolated = false;
      }
    }
    if (isolated) out.isolated_parts.push_back(j);
  }

  // Isolated V0 vertices: the subcubing is a single edge (one hyperplane).
  std::vector<std::int32_t> v0_list;
  for (std::size_t i = 0; i < t.vertices.size(); ++i)
    if (t.vertices[i].color == BipartiteVertex::V0)
      v0_list.push_back(static_cast<std::int32_t>(i));
  for (std::int32_t v : v0_list)
    if (d.hyperplanes_of[t.vertices[v].origin].size() == 1)
      out.isolated_v0.push_back(v);

  // Condition 1.
  std::vector<std::vector<std::int32_t>> enclosed_parts_of(v0_list.size());
  for (std::int32_t j = 0; j < nparts; ++j) {
    bool found = false;
    for (std::size_t i = 0; i < v0_list.size(); ++i) {
      auto w = verify_enclosure(t, v0_list[i], j, p, cubing);
      if (w.enclosed) {
        enclosed_parts_of[i].push_back(j);
        found = true;
      }
    }
    if (!found) out.report.add("condition1", {p.part_names[j]}, "part enclosed by no V0 orbit");
  }
  for (std::size_t i = 0; i < v0_list.size(); ++i)
    if (enclosed_parts_of[i].empty())
      out.report.add("condition1", {"V0#" + std::to_string(v0_list[i])},
                     "V0 vertex encloses no part");

  // Condition 3 (fragment minimality): T equals the convex hull of its V0
  // vertices and their action translates.
  {
    auto adj = t.adjacency();
    std::set<std::int32_t> keep(v0_list.begin(), v0_list.end());
    for (const auto& [gen, tm] : t.action)
      for (std::int32_t v : v0_list)
        if (tm[v] >= 0) keep.insert(tm[v]);
    // convex hull in a tree: repeatedly strip leaves not in keep
    std::vector<std::int32_t> deg(t.vertices.size());
    std::vector<bool> alive(t.vertices.size(), true);
    for (std::size_t v = 0; v < t.vertices.size(); ++v)
      deg[v] = static_cast<std::int32_t>(adj[v].size());
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t v = 0; v < t.vertices.size(); ++v) {
        if (!alive[v] || deg[v] > 1 || keep.count(static_cast<std::int32_t>(v))) continue;
        alive[v] = false;
        changed = true;
        for (std::int32_t u : adj[v])
          if (alive[u]) --deg[u];
      }
    }
    for (std::size_t v = 0; v < t.vertices.size(); ++v)
      if (!alive[v]) {
        out.report.add("condition3", {"V" + std::to_string(v)},
                       "vertex outside the hull of V0 vertices and their translates");
        break;
      }
    if (t.action.empty())
      out.notes.push_back("condition3 checked with an empty action fragment");
  }

  // Condition 4: bijection isolated parts <-> isolated V0 orbits via enclosure.
  {
    std::vector<bool> used(out.isolated_v0.size(), false);
    for (std::int32_t j : out.isolated_parts) {
      bool matched = false;
      for (std::size_t i = 0; i < out.isolated_v0.size() && !matched; ++i) {
        if (used[i]) continue;
        auto idx = std::find(v0_list.begin(), v0_list.end(), out.isolated_v0[i]);
        auto& parts = enclosed_parts_of[idx - v0_list.begin()];
        if (std::find(parts.begin(), parts.end(), j) != parts.end()) {
          used[i] = true;
          matched = true;
        }
      }
      if (!matched)
        out.report.add("condition4", {p.part_names[j]},
                       "isolated part matched to no isolated V0 orbit");
    }
    for (std::size_t i = 0; i < out.isolated_v0.size(); ++i)
      if (!used[i])
        out.report.add("condition4", {"V0#" + std::to_string(out.isolated_v0[i])},
                       "isolated V0 orbit encloses no isolated part");
  }

  // Condition 5.
  for (std::size_t i = 0; i < v0_list.size(); ++i) {
    if (std::find(out.isolated_v0.begin(), out.isolated_v0.end(), v0_list[i]) !=
        out.isolated_v0.end())
      continue;
    bool ok = false;
    for (std::int32_t j : enclosed_parts_of[i])
      if (std::find(out.isolated_parts.begin(), out.isolated_parts.end(), j) ==
          out.isolated_parts.end())
        ok = true;
    if (!ok)
      out.report.add("condition5", {"V0#" + std::to_string(v0_list[i])},
                     "non-isolated V0 vertex encloses no non-isolated part");
  }

  // Condition 2: spot checks for supplied candidates only.
  if (extended && !candidate_parts.empty()) {
    CubeComplex ext_cubing = build_cubing(*extended, OrderMode::AlmostInclusion);
    BipartiteTree ext_tree = build_arn(*extended, ext_cubing);
    Decomposition ext_d = decompose(ext_cubing);
    for (const auto& cand : candidate_parts) {
      auto it = std::find(extended->part_names.begin(), extended->part_names.end(), cand);
      if (it == extended->part_names.end()) {
        out.report.add("condition2", {cand}, "candidate part missing from extended pocset");
        continue;
      }
      std::int32_t cp = static_cast<std::int32_t>(it - extended->part_names.begin());
      bool ok = true;
      for (std::size_t v = 0; v < ext_tree.vertices.size() && ok; ++v) {
        if (ext_tree.vertices[v].color != BipartiteVertex::V0) continue;
        std::int32_t alpha = ext_tree.vertices[v].origin;
        bool has_cand = false;
        for (std::int32_t h : ext_d.hyperplanes_of[alpha]) {
          // hyperplane -> star-pair via any edge carrying it
          for (const auto& e : ext_cubing.edges)
            if (e.hyperplane == h && extended->part_of_pair[e.pair] == cp) has_cand = true;
        }
        if (!has_cand) continue;
        if (ext_d.hyperplanes_of[alpha].size() != 1) {
          out.report.add("condition2", {cand}, "candidate subcubing is not a single edge");
          ok = false;
        }
      }
      if (ok)
        out.notes.push_back("condition2 verified for candidate '" + cand +
                            "': every candidate subcubing is a single edge");
    }
    out.notes.push_back(
        "condition2 checked only for the supplied candidates; the universal "
        "quantifier over all sandwiched zero-crossing splittings is not checkable");
  } else {
    out.notes.push_back("condition2 not checked: no candidates supplied");
  }

  return out;
}

std::optional<std::vector<std::int32_t>> gtree_isomorphic(const BipartiteTree& a,
                                                          const BipartiteTree& b,
                                                          bool color_strict) {
  const auto n = a.vertices.size();
  if (n != b.vertices.size() || a.edges.size() != b.edges.size()) return std::nullopt;

  auto adj_a = a.adjacency();
  auto adj_b = b.adjacency();

  // degree/color signature pruning
  auto sig = [](const BipartiteTree& t, const std::vector<std::vector<std::int32_t>>& adj,
                std::size_t v, bool strict) {
    return std::pair<int, std::size_t>(strict ? t.vertices[v].color : 0, adj[v].size());
  };

  std::vector<std::int32_t> map_ab(n, -1), map_ba(n, -1);

  // shared generator labels must commute with the map
  std::vector<std::string> gens;
  for (const auto& [g, _] : a.action)
    if (b.action.count(g)) gens.push_back(g);

  std::function<bool(std::size_t)> extend = [&](std::size_t v) -> bool {
    if (v == n) {
      // edge preservation both ways
      std::set<std::pair<std::int32_t, std::int32_t>> eb;
      for (auto [x, y] : b.edges)
        eb.insert({std::min(x, y), std::max(x, y)});
      for (auto [x, y] : a.edges) {
        std::int32_t ix = map_ab[x], iy = map_ab[y];
        if (!eb.count({std::min(ix, iy), std::max(ix, iy)})) return false;
      }
      for (const auto& g : gens) {
        const auto& ma = a.action.at(g);
        const auto& mb = b.action.at(g);
        for (std::size_t x = 0; x < n; ++x) {
          if (ma[x] < 0) continue;
          std::int32_t lhs = map_ab[ma[x]];
          std::int32_t rhs = mb[map_ab[x]];
          if (rhs < 0) continue;  // partial: only compare where both defined
          if (lhs != rhs) return false;
        }
      }
      return true;
    }
    for (std::size_t w = 0; w < n; ++w) {
      if (map_ba[w] >= 0) continue;
      if (sig(a, adj_a, v, color_strict) != sig(b, adj_b, w, color_strict)) continue;
      // incremental adjacency consistency against already-mapped vertices
      bool ok = true;
      for (std::int32_t u : adj_a[v]) {
        if (map_ab[u] < 0) continue;
        if (std::find(adj_b[w].begin(), adj_b[w].end(), map_ab[u]) == adj_b[w].end()) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map_ab[v] = static_cast<std::int32_t>(w);
      map_ba[w] = static_cast<std::int32_t>(v);
      if (extend(v + 1)) return true;
      map_ab[v] = -1;
      map_ba[w] = -1;
    }
    return false;
  };

  if (extend(0)) return map_ab;
  return std::nullopt;
}

CompatibilityTree compatibility_tree(const Pocset& p,
                                     const std::vector<std::int32_t>& multiplicities) {
  for (ElemId a = 0; a < p.size(); a += 2)
    for (ElemId b = a + 2; b < p.size(); b += 2)
      if (!p.comparable(a, b)) throw CrossingFound(p.name(a), p.name(b));

  CompatibilityTree out;
  out.tree = build_tree(p);
  const auto nparts = static_cast<std::int32_t>(p.part_names.size());
  out.multiplicity.assign(nparts, 1);
  for (std::size_t j = 0; j < multiplicities.size() && j < out.multiplicity.size(); ++j)
    if (multiplicities[j] > 1) out.multiplicity[j] = multiplicities[j];

  std::int64_t extra = 0, edges = 0;
  for (std::int32_t q = 0; q < p.elements.pair_count(); ++q) {
    edges += out.multiplicity[p.part_of_pair[q]];
    extra += out.multiplicity[p.part_of_pair[q]] - 1;
  }
  out.subdivided_edge_count = edges;
  out.subdivided_vertex_count = out.tree.vertex_count() + extra;
  return out;
}

Pocset collapse_to_part(const RealizedTree& t, std::int32_t part) {
  // Edge set restricted to the part; c <= d iff a directed path in t starts
  // with c and ends with d (intermediate edges of other parts are collapsed).
  std::vector<ElemId> keep;
  for (ElemId e = 0; e < t.elements.size(); ++e)
    if (t.part_of_pair[pair_of(e)] == part) keep.push_back(e);

  std::vector<std::string> bases;
  for (ElemId e : keep)
    if (is_plus(e)) bases.push_back(t.elements.name(e));

  Pocset p;
  p.elements = ElementTable(bases);
  p.part_names = {t.part_names[part]};
  p.part_of_pair.assign(p.elements.pair_count(), 0);
  p.leq = Relation(p.elements.size());
  for (ElemId e = 0; e < p.elements.size(); ++e) p.leq.set(e, e);

  for (ElemId e : keep) {
    auto reach = path_reachable(t, e);
    for (ElemId f : keep) {
      if (!reach[f]) continue;
      p.leq.set(p.elements.parse(t.elements.name(e)), p.elements.parse(t.elements.name(f)));
    }
  }
  p.leq.transitive_close();
  p.incl = p.leq;
  return p;
}

}  // namespace arbor
