#include "support.hpp"

#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <sstream>

using namespace testing;

TEST_CASE("instance parsing") {
  const auto inst = parse_instance(R"({
    "vertices": ["b", "a", "c"],
    "edges": [["a", "b"], ["b", "a"], ["c"]],
    "parts": {"x": ["a", "c"], "y": ["b"]},
    "group": {"generators": [{"a": "c", "c": "a"}]}
  })");
  CHECK(inst.graph.num_edges() == 2);
  REQUIRE(inst.parts);
  CHECK(inst.parts->size() == 2);
  CHECK(inst.action.orbits().size() == 2);
  bool warned = false;
  for (const auto &d : inst.diagnostics) warned |= d.kind == "duplicate_edge";
  CHECK(warned);
}

TEST_CASE("instance parsing errors") {
  CHECK_THROWS_AS(parse_instance("{"), Error);
  CHECK_THROWS_AS(parse_instance(R"({"vertices": ["a"], "edges": [["zz"]]})"), Error);
  CHECK_THROWS_AS(parse_instance(R"({"vertices": ["a"], "edges": [], "extra": 1})"), Error);
  CHECK_THROWS_AS(parse_instance(R"({"vertices": ["a", "b"], "edges": [],
                                     "group": {"generators": [{"a": "b"}]}})"),
                  Error);
  CHECK_THROWS_AS(parse_instance(R"({"vertices": ["a"], "edges": [], "parts": {"x": []}})"), Error);
  CHECK_THROWS_AS(load_instance("/nonexistent/missing.json"), Error);
}

TEST_CASE("non-automorphism generators are accepted at parse time") {
  const auto inst = parse_instance(R"({"vertices": ["a", "b", "c"], "edges": [["a", "b"]],
                                       "group": {"generators": [{"a": "c", "c": "a"}]}})");
  CHECK_FALSE(is_action_by_automorphisms(inst.graph, inst.action));
}

TEST_CASE("canonical serialization round-trips") {
  for (const auto &name : fixture_names()) {
    const auto inst = fixture(name);
    const auto text = serialize_instance(inst);
    CHECK(serialize_instance(parse_instance(text)) == text);
    CHECK(parse_instance(text).graph == inst.graph);
    const auto doc = nlohmann::json::parse(text);
    CHECK(doc.dump(2) + "\n" == text);
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto inst = generate_symmetric_instance(partite_config(seed, 3), 0);
    const auto text = serialize_instance(inst);
    const auto back = parse_instance(text);
    CHECK(serialize_instance(back) == text);
    CHECK(back.graph == inst.graph);
    CHECK(back.action.orbits() == inst.action.orbits());
  }
}

TEST_CASE("bundled fixture files match the built-in fixtures") {
  for (const auto &name : fixture_names()) {
    const auto path = std::string(INVCOVER_SOURCE_DIR) + "/fixtures/" + name + ".json";
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == serialize_instance(fixture(name)));
  }
  CHECK_THROWS_AS(fixture("nope"), Error);
}
