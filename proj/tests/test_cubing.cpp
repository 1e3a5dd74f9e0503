#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <queue>

#include "arbor/cubing.hpp"
#include "arbor/vgp.hpp"
#include "helpers.hpp"

using namespace arbor;
using namespace arbor::testing;

namespace {

std::vector<bool> oracle(const Pocset& p, std::initializer_list<std::pair<const char*, bool>> m) {
  std::vector<bool> out(p.elements.pair_count(), false);
  for (auto [name, yes] : m) out[pair_of(p.elements.parse(name))] = yes;
  return out;
}

// brute-force enumeration: every side selection, filtered by upward closure
std::vector<std::vector<ElemId>> brute_ultrafilters(const Pocset& p, OrderMode mode) {
  const std::int32_t k = p.elements.pair_count();
  const auto& ord = order_of(p, mode);
  std::vector<std::vector<ElemId>> out;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<ElemId> sel(k);
    for (std::int32_t q = 0; q < k; ++q)
      sel[q] = (mask >> q) & 1 ? star(plus_of_pair(q)) : plus_of_pair(q);
    bool ok = true;
    for (std::int32_t q = 0; q < k && ok; ++q)
      for (ElemId b = 0; b < p.size() && ok; ++b)
        if (ord.get(sel[q], b) && sel[pair_of(b)] != b) ok = false;
    if (ok) out.push_back(sel);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("basic ultrafilter on a crossing fragment") {
  Pocset p = p4();
  auto r = basic_ultrafilter(p, oracle(p, {{"A", true}, {"B", true}}), OrderMode::Subset);
  CHECK_FALSE(r.failure.has_value());
  CHECK(r.vertex.contains(p.elements.parse("A")));
  CHECK(r.vertex.contains(p.elements.parse("B")));
}

TEST_CASE("basic ultrafilter reports an almost-inclusion closure failure") {
  Pocset p = n4_small();
  auto r = basic_ultrafilter(p, oracle(p, {{"A", true}, {"B", false}}),
                             OrderMode::AlmostInclusion);
  REQUIRE(r.failure.has_value());
  CHECK(p.name(r.failure->a) == "A");
  CHECK(p.name(r.failure->b) == "B");

  // the same point is a perfectly good subset-mode vertex
  auto s = basic_ultrafilter(p, oracle(p, {{"A", true}, {"B", false}}), OrderMode::Subset);
  CHECK_FALSE(s.failure.has_value());

  auto ok = basic_ultrafilter(p, oracle(p, {{"A", true}, {"B", true}}),
                              OrderMode::AlmostInclusion);
  CHECK_FALSE(ok.failure.has_value());
}

TEST_CASE("subset-mode inconsistency is a structural error") {
  Pocset p = n4_empty();  // A c B literally
  CHECK_THROWS_AS(
      basic_ultrafilter(p, oracle(p, {{"A", true}, {"B", false}}), OrderMode::Subset),
      StructuralError);
}

TEST_CASE("closure of a total ultrafilter is itself") {
  Pocset p = n4_empty();
  PartialUltrafilter v;
  v.mode = OrderMode::AlmostInclusion;
  v.chosen = {p.elements.parse("A"), p.elements.parse("B")};
  auto w = closure(p, v);
  CHECK(w.chosen == v.chosen);
}

TEST_CASE("closure forces one addition") {
  Json j = {{"elements", {"X1", "X2"}}, {"relations", Json::array({Json::array({"X1", "X2"})})}};
  Pocset p = load_pocset_json(j).pocset;
  PartialUltrafilter v;
  v.mode = OrderMode::AlmostInclusion;
  v.chosen.assign(2, -1);
  v.chosen[pair_of(p.elements.parse("X1"))] = p.elements.parse("X1");
  auto w = closure(p, v);
  CHECK(w.chosen[pair_of(p.elements.parse("X2"))] == p.elements.parse("X2"));
}

TEST_CASE("closure contradiction on a condition-4-violating input") {
  Json j = {{"elements", {"A", "B"}}, {"relations", Json::array({Json::array({"A", "B"}), Json::array({"A", "B*"})})}};
  Pocset p = load_pocset_json(j).pocset;
  PartialUltrafilter v;
  v.mode = OrderMode::AlmostInclusion;
  v.chosen.assign(2, -1);
  v.chosen[pair_of(p.elements.parse("A"))] = p.elements.parse("A");
  CHECK_THROWS_AS(closure(p, v), ClosureContradiction);
}

TEST_CASE("staged construction: closure overrides the basic choice") {
  Json j = {{"elements", {"X1", "X2"}},
            {"relations", Json::array({Json::array({"X1", "X2"})})},
            {"parts", {{"P1", {"X1"}}, {"P2", {"X2"}}}}};
  Pocset p = load_pocset_json(j).pocset;
  auto r = construct_dcc_ultrafilter(p, oracle(p, {{"X1", true}, {"X2", false}}));
  CHECK(r.vertex.contains(p.elements.parse("X1")));
  CHECK(r.vertex.contains(p.elements.parse("X2")));  // overridden by closure
  CHECK(r.decided_at[pair_of(p.elements.parse("X1"))].str() == "1a");
  CHECK(r.decided_at[pair_of(p.elements.parse("X2"))].str() == "1b");
  CHECK(r.closure_certified);
}

TEST_CASE("staged construction on a crossing fragment: both type-a") {
  Json j = {{"elements", {"A", "B"}},
            {"corners", {{"A|B", {"large", "large", "large", "large"}}}},
            {"parts", {{"P1", {"A"}}, {"P2", {"B"}}}}};
  Pocset p = load_pocset_json(j).pocset;
  auto r = construct_dcc_ultrafilter(p, oracle(p, {{"A", true}, {"B", false}}));
  CHECK(r.vertex.contains(p.elements.parse("A")));
  CHECK(r.vertex.contains(p.elements.parse("B*")));
  CHECK(r.decided_at[0].str() == "1a");
  CHECK(r.decided_at[1].str() == "2a");
}

TEST_CASE("staged construction with one part equals the basic vertex") {
  Pocset p = p4();  // single part by default
  auto staged = construct_dcc_ultrafilter(p, oracle(p, {{"A", true}, {"B", false}}));
  auto basic = basic_ultrafilter(p, oracle(p, {{"A", true}, {"B", false}}),
                                 OrderMode::AlmostInclusion);
  CHECK(staged.vertex.chosen == basic.vertex.chosen);
}

TEST_CASE("cubing counts: P4, N4, single pair") {
  auto c = build_cubing(p4(), OrderMode::AlmostInclusion);
  CHECK(c.vertex_count() == 4);
  CHECK(c.edges.size() == 4);
  CHECK(c.square_count() == 1);
  CHECK(c.hyperplane_count == 2);

  auto l = build_cubing(n4_small(), OrderMode::AlmostInclusion);
  CHECK(l.vertex_count() == 3);
  CHECK(l.edges.size() == 2);
  CHECK(l.square_count() == 0);
  // the excluded selection is {A, B*}
  Pocset n = n4_small();
  for (const auto& v : l.vertices)
    CHECK_FALSE((v.contains(n.elements.parse("A")) && v.contains(n.elements.parse("B*"))));

  auto s = build_cubing(single_pair(), OrderMode::AlmostInclusion);
  CHECK(s.vertex_count() == 2);
  CHECK(s.edges.size() == 1);
}

TEST_CASE("subset cubing of the small-corner fragment is the full square") {
  auto c = build_cubing(n4_small(), OrderMode::Subset);
  CHECK(c.vertex_count() == 4);
  CHECK(c.square_count() == 1);
  auto l = build_cubing(n4_small(), OrderMode::AlmostInclusion);
  CHECK(verify_embedding(n4_small(), c, l).ok);
}

TEST_CASE("enumeration agrees with the brute-force filter") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto rt = random_tree_pocset(rng, 10, 2);
    auto c = build_cubing(rt.pocset, OrderMode::AlmostInclusion);
    auto brute = brute_ultrafilters(rt.pocset, OrderMode::AlmostInclusion);
    REQUIRE(c.vertex_count() == static_cast<std::int32_t>(brute.size()));
    for (std::size_t i = 0; i < brute.size(); ++i)
      CHECK(c.vertices[i].chosen == brute[i]);
  }
}

TEST_CASE("halfspace vertex sets") {
  Pocset p = p4();
  auto c = build_cubing(p, OrderMode::AlmostInclusion);
  ElemId a = p.elements.parse("A");
  auto plus = halfspace_vertex_set(c, a);
  auto minus = halfspace_vertex_set(c, star(a));
  CHECK(plus.size() == 2);
  CHECK(minus.size() == 2);

  Pocset n = n4_small();
  auto l = build_cubing(n, OrderMode::AlmostInclusion);
  CHECK(halfspace_vertex_set(l, n.elements.parse("B")).size() == 2);
  CHECK(halfspace_vertex_set(l, n.elements.parse("A")).size() == 1);
}

TEST_CASE("edge-path distance equals the number of differing pairs") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    auto rt = random_tree_pocset(rng, 8, 1);
    auto c = build_cubing(rt.pocset, OrderMode::AlmostInclusion);
    // BFS over the 1-skeleton
    std::vector<std::vector<std::int32_t>> adj(c.vertex_count());
    for (const auto& e : c.edges) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    for (std::int32_t s = 0; s < c.vertex_count(); ++s) {
      std::vector<std::int32_t> dist(c.vertex_count(), -1);
      std::queue<std::int32_t> q;
      q.push(s);
      dist[s] = 0;
      while (!q.empty()) {
        auto u = q.front();
        q.pop();
        for (auto v : adj[u])
          if (dist[v] < 0) {
            dist[v] = dist[u] + 1;
            q.push(v);
          }
      }
      for (std::int32_t v = 0; v < c.vertex_count(); ++v) {
        std::int32_t diff = 0;
        for (std::int32_t qq = 0; qq < c.npairs; ++qq)
          diff += (c.vertices[s].chosen[qq] != c.vertices[v].chosen[qq]);
        CHECK(dist[v] == diff);
      }
    }
  }
}

TEST_CASE("square count matches crossing pairs housed in adjacent vertices (P4)") {
  auto c = build_cubing(p4(), OrderMode::AlmostInclusion);
  CHECK(c.square_count() == 1);
}

TEST_CASE("almost-inclusion vertices embed into the subset cubing") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    auto rt = random_tree_pocset(rng, 7, 2);
    auto csub = build_cubing(rt.pocset, OrderMode::Subset);
    auto calm = build_cubing(rt.pocset, OrderMode::AlmostInclusion);
    CHECK(verify_embedding(rt.pocset, csub, calm).ok);
  }
}

TEST_CASE("vertex cap produces a flagged partial result") {
  std::mt19937 rng(41);
  auto rt = random_tree_pocset(rng, 10, 1);
  CubingCaps caps;
  caps.max_vertices = 3;
  auto c = build_cubing(rt.pocset, OrderMode::AlmostInclusion, caps);
  CHECK(c.truncated);
  CHECK(c.vertex_count() <= 3);
}

TEST_CASE("reposition on the abstract small-corner fragment: empty corner, undecided marks") {
  Pocset p = n4_small();
  // identity action only: translates beyond the fragment stay undecided
  std::vector<ElemId> ident(p.size());
  for (ElemId e = 0; e < p.size(); ++e) ident[e] = e;
  p.action.maps["g"] = ident;

  Ultrafilter w;
  w.mode = OrderMode::AlmostInclusion;
  w.chosen = {p.elements.parse("A*"), p.elements.parse("B")};

  auto r = reposition_vgp(p, w, {{}, {"g"}});
  // A' is ball-empty, B' contains everything: corner A' n B'* observed empty
  auto cell = r.corner_cells[0];
  CHECK(cell[1] == Observed::Empty);   // A' n B'*
  CHECK(cell[2] == Observed::Nonempty);  // A'* n B'
  CHECK(r.iso_violations.empty());
  CHECK(r.nested_observed);
  // ball too small to witness the strict side
  CHECK_FALSE(r.iso_unwitnessed.empty());

  // undecided marks appear when the action cannot move an element
  Pocset q = n4_small();
  q.action.maps["h"] = std::vector<ElemId>(q.size(), -1);
  auto r2 = reposition_vgp(q, w, {{}, {"h"}});
  CHECK(r2.undecided_count > 0);
}

TEST_CASE("reposition identity: very good fragment maps to itself") {
  Pocset p = n4_empty();
  std::vector<ElemId> ident(p.size());
  for (ElemId e = 0; e < p.size(); ++e) ident[e] = e;
  p.action.maps["g"] = ident;

  // basic vertex at the identity with A-yes B-yes
  Ultrafilter w;
  w.mode = OrderMode::AlmostInclusion;
  w.chosen = {p.elements.parse("A"), p.elements.parse("B")};

  auto r = reposition_vgp(p, w, {{}, {"g"}});
  // membership of every ball point mirrors w: A' = ball, B' = ball
  for (std::size_t i = 0; i < r.ball.size(); ++i) {
    CHECK(r.membership[p.elements.parse("A")][i] == 1);
    CHECK(r.membership[p.elements.parse("B")][i] == 1);
  }
  CHECK(r.corner_cells[0][1] == Observed::Empty);  // A' n B'* stays empty
}
