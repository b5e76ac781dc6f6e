#include <stdexcept>
#include <string>

#include <doctest.h>

#include "multispace/json_io.hpp"

using namespace multispace::io;

namespace {

const char* kGraphText = R"({
  "branes": [
    {"id": "b", "omega": [0.1, 2.0]},
    {"id": "a", "omega": [3.5, -1.0]}
  ],
  "interactions": [
    {"a": "b", "b": "a", "lambda": [0.30000000000000004]}
  ]
})";

const char* kModelText = R"({
  "subcosmoses": [
    {"id": "T", "carrier": ["t0", "t1"], "time_tag": 0},
    {"id": "A", "carrier": ["a0", "a1"], "time_tag": 1},
    {"id": "M", "carrier": ["m0"], "time_tag": 2}
  ],
  "order": [["T", "A"], ["T", "M"], ["A", "M"]],
  "restrictions": [
    {"src": "T", "dst": "A", "map": {"t0": "a0", "t1": "a1"}},
    {"src": "T", "dst": "M", "map": {"t0": "m0", "t1": "m0"}},
    {"src": "A", "dst": "M", "map": {"a0": "m0", "a1": "m0"}}
  ],
  "intersections": [
    {"pair": ["T", "A"], "meet": "M"}
  ]
})";

}  // namespace

TEST_CASE("graph JSON parses into a sorted phase") {
  const auto g = graph_from_json(kGraphText);
  CHECK(g.vertices == std::vector<std::string>{"a", "b"});
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].first == "a");  // canonical unordered pair
  CHECK(g.edges[0].second == "b");
  CHECK(g.p_dim == 2);
  CHECK(g.q_dim == 1);
  CHECK(g.omega.at("a")[0] == 3.5);
}

TEST_CASE("graph JSON round trip preserves every label bit") {
  const auto g = graph_from_json(kGraphText);
  const std::string text = graph_to_json(g);
  const auto h = graph_from_json(text);
  CHECK(h.vertices == g.vertices);
  CHECK(h.edges == g.edges);
  CHECK(h.omega == g.omega);  // exact double equality across the round trip
  CHECK(h.lambda == g.lambda);
  CHECK(graph_to_json(h) == text);  // serialization is a fixed point
}

TEST_CASE("graph JSON rejects malformed input with a clear story") {
  CHECK_THROWS_AS(graph_from_json("not json at all"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json("{}"), std::invalid_argument);  // branes required
  CHECK_THROWS_AS(graph_from_json(R"({"branes": [{"id": 7, "omega": []}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      graph_from_json(R"({"branes": [{"id": "a", "omega": ["x"]}]})"),
      std::invalid_argument);
  // Structural graph defects surface through the same error type.
  CHECK_THROWS_AS(graph_from_json(R"({
    "branes": [{"id": "a", "omega": []}],
    "interactions": [{"a": "a", "b": "a", "lambda": []}]
  })"),
                  std::invalid_argument);
}

TEST_CASE("model JSON parses, normalizes intersections, and validates") {
  const auto m = model_from_json(kModelText);
  CHECK(m.subcosmoses.size() == 3);
  CHECK(m.order.count({"T", "A"}) == 1);
  // The reversed ["T", "A"] spelling lands in the canonical (A, T) slot.
  CHECK(m.intersections.at({"A", "T"}) == "M");
  CHECK(m.subcosmoses[1].id == "A");
  CHECK(m.subcosmoses[1].time_tag == 1);
}

TEST_CASE("model JSON round trip is stable") {
  const auto m = model_from_json(kModelText);
  const std::string text = model_to_json(m);
  const auto again = model_from_json(text);
  CHECK(model_to_json(again) == text);
  CHECK(again.order == m.order);
  CHECK(again.intersections == m.intersections);
  CHECK(again.restrictions.size() == m.restrictions.size());
}

TEST_CASE("model JSON rejects incoherent structures") {
  CHECK_THROWS_AS(model_from_json("[1,2,3]"), std::invalid_argument);
  CHECK_THROWS_AS(model_from_json("{}"), std::invalid_argument);
  // Missing restriction for a declared order pair: caught by validation.
  CHECK_THROWS_AS(model_from_json(R"({
    "subcosmoses": [
      {"id": "T", "carrier": ["t0"]},
      {"id": "A", "carrier": ["a0"]}
    ],
    "order": [["T", "A"]],
    "restrictions": []
  })"),
                  std::invalid_argument);
}
