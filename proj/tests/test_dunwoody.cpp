#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arbor/dot.hpp"
#include "arbor/dunwoody.hpp"
#include "helpers.hpp"

using namespace arbor;
using namespace arbor::testing;

TEST_CASE("single splitting edge realizes as one edge") {
  auto t = build_tree(single_pair());
  CHECK(t.vertex_count() == 2);
  CHECK(verify_realization(t, single_pair()).ok);
}

TEST_CASE("two-chain realizes as a path of three vertices") {
  Pocset p = n4_empty();
  auto t = build_tree(p);
  CHECK(t.vertex_count() == 3);

  // middle vertex is the class {A*, B}
  ElemId a = p.elements.parse("A"), b = p.elements.parse("B");
  CHECK(t.vertex_of[star(a)] == t.vertex_of[b]);
  std::vector<ElemId> middle{star(a), b};
  std::sort(middle.begin(), middle.end());
  CHECK(t.vertex_classes[t.vertex_of[b]] == middle);
  // the other two classes are singletons
  CHECK(t.vertex_classes[t.vertex_of[a]] == std::vector<ElemId>{a});
  CHECK(t.vertex_classes[t.vertex_of[star(b)]] == std::vector<ElemId>{star(b)});

  CHECK(verify_realization(t, p).ok);
}

TEST_CASE("tripod: three edges into one center class") {
  Json j = {{"elements", {"A", "B", "C"}},
            {"relations", Json::array({Json::array({"A", "B*"}), Json::array({"A", "C*"}), Json::array({"B", "C*"})})}};
  Pocset p = load_pocset_json(j).pocset;
  REQUIRE(validate_pocset(p).ok);
  auto t = build_tree(p);
  CHECK(t.vertex_count() == 4);
  CHECK(t.elements.size() == 6);

  // center class has all three starred elements, leaves are singletons
  ElemId a = p.elements.parse("A"), b = p.elements.parse("B"), c = p.elements.parse("C");
  CHECK(t.vertex_of[star(a)] == t.vertex_of[star(b)]);
  CHECK(t.vertex_of[star(b)] == t.vertex_of[star(c)]);
  CHECK(t.vertex_classes[t.vertex_of[a]].size() == 1);

  auto rep = verify_realization(t, p);
  CHECK(rep.ok);

  // path check example: first edge A, last edge B* certifies A <= B*
  auto reach = path_reachable(t, a);
  CHECK(reach[star(b)]);
  CHECK_FALSE(reach[b]);
}

TEST_CASE("comparability failure carries a crossing witness") {
  try {
    build_tree(p4());
    FAIL("expected ComparabilityError");
  } catch (const ComparabilityError& e) {
    CHECK(e.a == "A");
    CHECK(e.b == "B");
  }
}

TEST_CASE("flipping one edge breaks the order/path equivalence") {
  Pocset p = n4_empty();
  auto t = build_tree(p);
  ElemId a = p.elements.parse("A");
  std::swap(t.vertex_of[a], t.vertex_of[star(a)]);
  auto rep = verify_realization(t, p);
  CHECK_FALSE(rep.ok);
  CHECK(rep.violations.front().axiom == "order-path-mismatch");
}

TEST_CASE("round-trip on random nested pocsets with counts") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    auto rt = random_tree_pocset(
        rng, std::uniform_int_distribution<std::int32_t>(1, 25)(rng), 2);
    const Pocset& p = rt.pocset;
    auto t = build_tree(p);
    CHECK(t.vertex_count() == p.elements.pair_count() + 1);
    CHECK(verify_realization(t, p).ok);
  }
}

TEST_CASE("dot export is stable and mentions every edge") {
  Pocset p = n4_empty();
  auto t = build_tree(p);
  auto dot = tree_to_dot(t);
  CHECK(dot.find("label=\"A\"") != std::string::npos);
  CHECK(dot.find("label=\"B\"") != std::string::npos);
  CHECK(dot == tree_to_dot(build_tree(p)));
}
