#include "support.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("permutation validation and composition") {
  CHECK_THROWS_AS(Permutation({0, 0}), Error);
  CHECK_THROWS_AS(Permutation({0, 2}), Error);
  const Permutation a({1, 2, 0});
  const Permutation b({1, 0, 2});
  CHECK((a * b)(0) == a(b(0)));
  CHECK((a * a * a).is_identity());
  CHECK(a.apply(VertexSet{0, 1}) == VertexSet{1, 2});
}

TEST_CASE("orbits") {
  SUBCASE("no generators gives singletons") {
    const auto action = GroupAction::trivial(4);
    CHECK(action.orbits().size() == 4);
  }
  SUBCASE("fig1 half-turn") {
    const auto inst = fixture("fig1");
    std::vector<std::vector<std::string>> names;
    for (const auto &o : inst.action.orbits()) names.push_back(inst.graph.names(o));
    std::sort(names.begin(), names.end());
    CHECK(names == std::vector<std::vector<std::string>>{
                       {"f1", "f4"}, {"f2", "f5"}, {"f3", "f6"}, {"v1", "v4"}, {"v2", "v5"}, {"v3", "v6"}});
  }
  SUBCASE("cube rotation and flip are transitive") {
    const auto inst = fixture("cube_faces");
    REQUIRE(inst.action.orbits().size() == 1);
    CHECK(inst.action.orbits()[0].size() == 8);
  }
  SUBCASE("degree mismatch") { CHECK_THROWS_AS(GroupAction(3, {Permutation::identity(2)}), Error); }
}

TEST_CASE("automorphisms") {
  const auto fig = fixture("fig1");
  CHECK(is_automorphism(fig.graph, Permutation::identity(fig.graph.num_vertices())));
  CHECK(is_action_by_automorphisms(fig.graph, fig.action));
  const auto h = graph({"a", "b", "c"}, {{"a", "b"}});
  CHECK_FALSE(is_automorphism(h, perm(h, {{"a", "c"}, {"c", "a"}})));
}

TEST_CASE("part preservation") {
  const auto fig = fixture("fig1");
  CHECK(preserves_parts(fig.action, *fig.parts));
  const auto h = graph({"a", "b"}, {{"a", "b"}});
  const PartProfile parts(h, {{"x", {0}}, {"y", {1}}});
  CHECK(preserves_parts(Permutation::identity(2), parts));
  CHECK_FALSE(preserves_parts(perm(h, {{"a", "b"}, {"b", "a"}}), parts));
}

TEST_CASE("group order") {
  CHECK(group_order({}, 5, 10) == 1);
  const auto fig = fixture("fig1");
  CHECK(group_order(fig.action.generators(), fig.graph.num_vertices(), 1000) == 2);
  const auto cube = fixture("cube_faces");
  CHECK(group_order(cube.action.generators(), 8, 1000) == 24);
  CHECK_THROWS_AS(group_order(cube.action.generators(), 8, 23), Error);
  const auto elements = enumerate_group(cube.action.generators(), 8, 1000);
  CHECK(elements.front().is_identity());
}

TEST_CASE("property: orbit structure and closure of automorphisms") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const auto inst = random_symmetric(rng, 12, 4, 3);
    const auto &action = inst.action;
    std::size_t total = 0;
    for (const auto &o : action.orbits()) {
      CHECK_FALSE(o.empty());
      total += o.size();
    }
    CHECK(total == inst.graph.num_vertices());
    for (const auto &g : action.generators()) {
      for (Vertex v = 0; v < action.degree(); ++v) CHECK(action.orbit_of(v) == action.orbit_of(g(v)));
    }
    REQUIRE(is_action_by_automorphisms(inst.graph, action));
    const auto elements = enumerate_group(action.generators(), action.degree(), 100000);
    for (std::size_t k = 0; k < 4; ++k) {
      const auto &a = elements[rng() % elements.size()];
      const auto &b = elements[rng() % elements.size()];
      CHECK(is_automorphism(inst.graph, a * b));
    }
  }
}

TEST_CASE("property: part-preserving generators keep orbits inside parts") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto inst = generate_symmetric_instance(partite_config(seed, 3), 0);
    REQUIRE(inst.parts);
    REQUIRE(preserves_parts(inst.action, *inst.parts));
    for (const auto &o : inst.action.orbits()) {
      const auto part = inst.parts->part_of(o.front());
      for (Vertex v : o) CHECK(inst.parts->part_of(v) == part);
    }
  }
}
