#include "arbor/cubing.hpp"

#include <algorithm>
#include <numeric>

namespace arbor {

namespace {

// Selections are compared as sign vectors (plus < minus per pair).
bool selection_less(const std::vector<ElemId>& a, const std::vector<ElemId>& b) {
  return a < b;
}

struct EdgeDsu {
  std::vector<std::int32_t> up;
  explicit EdgeDsu(std::size_t n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  std::int32_t find(std::int32_t x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void unite(std::int32_t a, std::int32_t b) { up[find(a)] = find(b); }
};

}  // namespace

std::optional<std::int32_t> CubeComplex::vertex_index(const Ultrafilter& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v,
                             [](const Ultrafilter& x, const Ultrafilter& y) {
                               return selection_less(x.chosen, y.chosen);
                             });
  if (it == vertices.end() || it->chosen != v.chosen) return std::nullopt;
  return static_cast<std::int32_t>(it - vertices.begin());
}

CubeComplex build_cubing(const Pocset& p, OrderMode mode, CubingCaps caps) {
  CubeComplex c;
  c.mode = mode;
  c.npairs = p.elements.pair_count();
  const auto& ord = order_of(p, mode);

  // Backtracking over star-pairs in canonical order. A candidate side s is
  // viable iff s is not below any already rejected element.
  std::vector<ElemId> sel;
  sel.reserve(c.npairs);
  std::vector<ElemId> rejected;
  rejected.reserve(c.npairs);

  auto viable = [&](ElemId s) {
    for (ElemId r : rejected)
      if (ord.get(s, r)) return false;
    // also not below the rejected partner of s itself
    return !ord.get(s, star(s));
  };

  struct Frame {
    std::int32_t q;
    int next_side;  // 0 = plus, 1 = minus, 2 = done
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.q == c.npairs) {
      if (static_cast<std::int64_t>(c.vertices.size()) >= caps.max_vertices) {
        c.truncated = true;
        break;
      }
      Ultrafilter v;
      v.mode = mode;
      v.chosen = sel;
      c.vertices.push_back(std::move(v));
      stack.pop_back();
      if (!stack.empty()) {
        sel.pop_back();
        rejected.pop_back();
      }
      continue;
    }
    if (f.next_side >= 2) {
      stack.pop_back();
      if (!stack.empty()) {
        sel.pop_back();
        rejected.pop_back();
      }
      continue;
    }
    ElemId s = f.next_side == 0 ? plus_of_pair(f.q) : star(plus_of_pair(f.q));
    ++f.next_side;
    if (!viable(s)) continue;
    sel.push_back(s);
    rejected.push_back(star(s));
    stack.push_back({f.q + 1, 0});
  }
  // The DFS with plus-first ordering yields lexicographic vertex order, but a
  // popped parent frame breaks it when truncation stops early; sort anyway.
  std::sort(c.vertices.begin(), c.vertices.end(),
            [](const Ultrafilter& x, const Ultrafilter& y) {
              return selection_less(x.chosen, y.chosen);
            });

  // Edges: single-pair flips that land on an enumerated vertex.
  for (std::int32_t u = 0; u < c.vertex_count(); ++u) {
    Ultrafilter w = c.vertices[u];
    for (std::int32_t q = 0; q < c.npairs; ++q) {
      w.chosen[q] = star(w.chosen[q]);
      auto v = c.vertex_index(w);
      if (v && *v > u) c.edges.push_back({u, *v, q, -1});
      w.chosen[q] = star(w.chosen[q]);
    }
  }

  // Cubes per dimension: base vertex = lexicographically minimal corner
  // (plus side on every flipped pair relative to the pair's two sides:
  // the smaller ElemId). Faces of cubes are cubes, so extend incrementally.
  c.cubes_by_dim.assign(std::max(2, caps.max_dim + 1), {});
  auto flip = [&](Ultrafilter& v, std::int32_t q) { v.chosen[q] = star(v.chosen[q]); };
  auto has_all_corners = [&](std::int32_t base, const std::vector<std::int32_t>& pairs) {
    Ultrafilter w = c.vertices[base];
    const std::size_t k = pairs.size();
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      Ultrafilter x = w;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) flip(x, pairs[i]);
      if (!c.vertex_index(x)) return false;
    }
    return true;
  };

  for (std::int32_t base = 0; base < c.vertex_count(); ++base) {
    // flippable pairs where this vertex holds the smaller side
    std::vector<std::int32_t> cand;
    for (std::int32_t q = 0; q < c.npairs; ++q) {
      ElemId s = c.vertices[base].chosen[q];
      if (s != std::min(s, star(s))) continue;
      Ultrafilter w = c.vertices[base];
      flip(w, q);
      if (c.vertex_index(w)) cand.push_back(q);
    }
    // grow subsets; a subset is only extended if it is itself a cube
    std::vector<std::vector<std::int32_t>> frontier;
    for (std::int32_t q : cand) frontier.push_back({q});
    for (std::int32_t dim = 2; dim <= caps.max_dim && !frontier.empty(); ++dim) {
      std::vector<std::vector<std::int32_t>> next;
      for (const auto& set : frontier) {
        for (std::int32_t q : cand) {
          if (q <= set.back()) continue;
          auto ext = set;
          ext.push_back(q);
          if (has_all_corners(base, ext)) {
            c.cubes_by_dim[dim].push_back({base, ext});
            next.push_back(ext);
          }
        }
      }
      if (dim == caps.max_dim && !next.empty()) c.dim_capped = true;
      frontier = std::move(next);
    }
  }

  // Hyperplanes: square-equivalence closure on edges.
  std::map<std::pair<std::int32_t, std::int32_t>, std::int32_t> edge_index;
  for (std::size_t i = 0; i < c.edges.size(); ++i)
    edge_index[{c.edges[i].u, c.edges[i].v}] = static_cast<std::int32_t>(i);
  auto edge_between = [&](std::int32_t a, std::int32_t b) {
    if (a > b) std::swap(a, b);
    auto it = edge_index.find({a, b});
    return it == edge_index.end() ? -1 : it->second;
  };
  EdgeDsu dsu(c.edges.size());
  for (const auto& sq : c.cubes_by_dim.size() > 2 ? c.cubes_by_dim[2] : std::vector<Cube>{}) {
    Ultrafilter v00 = c.vertices[sq.base];
    Ultrafilter v10 = v00, v01 = v00, v11 = v00;
    flip(v10, sq.pairs[0]);
    flip(v01, sq.pairs[1]);
    flip(v11, sq.pairs[0]);
    flip(v11, sq.pairs[1]);
    std::int32_t i00 = sq.base;
    std::int32_t i10 = *c.vertex_index(v10), i01 = *c.vertex_index(v01),
                 i11 = *c.vertex_index(v11);
    dsu.unite(edge_between(i00, i10), edge_between(i01, i11));  // pair[0] sides
    dsu.unite(edge_between(i00, i01), edge_between(i10, i11));  // pair[1] sides
  }
  std::map<std::int32_t, std::int32_t> root_to_h;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    std::int32_t r = dsu.find(static_cast<std::int32_t>(i));
    auto [it, fresh] = root_to_h.try_emplace(r, c.hyperplane_count);
    if (fresh) ++c.hyperplane_count;
    c.edges[i].hyperplane = it->second;
  }

  // 1-skeleton components (both vertex-set definitions reported upstream).
  c.component_of.assign(c.vertex_count(), -1);
  std::int32_t comp = 0;
  std::vector<std::vector<std::int32_t>> adj(c.vertex_count());
  for (const auto& e : c.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (std::int32_t v0 = 0; v0 < c.vertex_count(); ++v0) {
    if (c.component_of[v0] >= 0) continue;
    std::vector<std::int32_t> stack2{v0};
    c.component_of[v0] = comp;
    while (!stack2.empty()) {
      std::int32_t u = stack2.back();
      stack2.pop_back();
      for (std::int32_t w : adj[u])
        if (c.component_of[w] < 0) {
          c.component_of[w] = comp;
          stack2.push_back(w);
        }
    }
    ++comp;
  }
  c.component_count = comp;
  return c;
}

std::vector<std::int32_t> halfspace_vertex_set(const CubeComplex& c, ElemId e) {
  std::vector<std::int32_t> out;
  for (std::int32_t v = 0; v < c.vertex_count(); ++v)
    if (c.vertices[v].contains(e)) out.push_back(v);
  return out;
}

ValidationReport verify_embedding(const Pocset& p, const CubeComplex& subset_cubing,
                                  const CubeComplex& almost_cubing) {
  ValidationReport rep;
  for (const auto& w : almost_cubing.vertices) {
    Ultrafilter as_subset = w;
    as_subset.mode = OrderMode::Subset;
    if (!subset_cubing.vertex_index(as_subset)) {
      rep.add("vertex-embedding", {}, "almost-inclusion vertex missing from subset cubing");
      return rep;
    }
  }
  for (ElemId e = 0; e < p.size(); ++e) {
    // H_e restricted to L's vertex set must equal K_e.
    auto k = halfspace_vertex_set(almost_cubing, e);
    std::vector<std::int32_t> h_restricted;
    for (std::int32_t v = 0; v < almost_cubing.vertex_count(); ++v) {
      Ultrafilter as_subset = almost_cubing.vertices[v];
      as_subset.mode = OrderMode::Subset;
      auto idx = subset_cubing.vertex_index(as_subset);
      if (idx && subset_cubing.vertices[*idx].contains(e)) h_restricted.push_back(v);
    }
    if (k != h_restricted) rep.add("halfspace-restriction", {p.name(e)});
  }
  return rep;
}

std::map<std::string, std::vector<std::int32_t>> cubing_vertex_action(
    const Pocset& p, const CubeComplex& c) {
  std::map<std::string, std::vector<std::int32_t>> out;
  for (const auto& [gen, m] : p.action.maps) {
    std::vector<std::int32_t> vm(c.vertex_count(), -1);
    for (std::int32_t v = 0; v < c.vertex_count(); ++v) {
      Ultrafilter img;
      img.mode = c.vertices[v].mode;
      img.chosen.assign(c.npairs, -1);
      bool total = true;
      for (ElemId s : c.vertices[v].chosen) {
        if (m[s] < 0) {
          total = false;
          break;
        }
        img.chosen[pair_of(m[s])] = m[s];
      }
      if (!total) continue;
      bool complete = true;
      for (ElemId x : img.chosen)
        if (x < 0) complete = false;
      if (!complete) continue;
      auto idx = c.vertex_index(img);
      if (idx) vm[v] = *idx;
    }
    out[gen] = std::move(vm);
  }
  return out;
}

}  // namespace arbor
