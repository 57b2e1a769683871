#include <algorithm>

#include "doctest.h"
#include "dtopo/graph_io.hpp"
#include "dtopo/invariants.hpp"
#include "dtopo/json_io.hpp"
#include "dtopo/thinning.hpp"
#include "dtopo/transforms.hpp"
#include "support/census.hpp"
#include "support/moves.hpp"

using namespace dtopo;
using Reason = TransformError::Reason;
using Labels = std::vector<VertexLabel>;

namespace {

Reason reason_of(auto&& f) {
  try {
    f();
  } catch (const TransformError& e) {
    return e.reason();
  }
  FAIL("no TransformError thrown");
  return Reason::kEmptySet;
}

Graph diamond() {
  return Graph({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
}

}  // namespace

TEST_CASE("delete_simple_point") {
  Graph p4({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  CHECK(delete_simple_point(p4, "a") == Graph({"b", "c", "d"}, {{"b", "c"}, {"c", "d"}}));
  CHECK(delete_simple_point(Graph::complete(4), "2") ==
        induced_subgraph(Graph::complete(4), Labels{"1", "3", "4"}));
  CHECK(reason_of([] { delete_simple_point(Graph::cycle(4), "1"); }) == Reason::kNotSimple);
  CHECK(reason_of([&] { delete_simple_point(p4, "q"); }) == Reason::kUnknownLabel);
}

TEST_CASE("glue_point") {
  Graph k1({"x"}, {});
  CHECK(glue_point(k1, Labels{"x"}, "y") == Graph({"x", "y"}, {{"x", "y"}}));
  CHECK(glue_point(Graph::complete(3), Labels{"1", "2", "3"}, "4") == Graph::complete(4));
  CHECK(reason_of([] { glue_point(Graph::cycle(4), Labels{"1", "3"}, "z"); }) == Reason::kNotSimple);
  CHECK(reason_of([] { glue_point(Graph::cycle(4), Labels{"1"}, "2"); }) == Reason::kLabelCollision);
  CHECK(reason_of([] { glue_point(Graph::cycle(4), Labels{"7"}, "z"); }) == Reason::kUnknownLabel);
  CHECK(reason_of([] { glue_point(Graph::cycle(4), Labels{}, "z"); }) == Reason::kNotSimple);
}

TEST_CASE("simple edges") {
  Graph k3 = Graph::complete(3);
  CHECK(delete_simple_edge(k3, "1", "3") == Graph::path(3));
  CHECK(delete_simple_edge(Graph::complete(4), "1", "2") ==
        Graph({"1", "2", "3", "4"}, {{"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}, {"3", "4"}}));
  CHECK(reason_of([] { delete_simple_edge(Graph::cycle(4), "1", "2"); }) == Reason::kNotSimple);
  CHECK(reason_of([] { delete_simple_edge(Graph::cycle(4), "1", "3"); }) == Reason::kNotAnEdge);
  CHECK(reason_of([] { glue_simple_edge(Graph::cycle(4), "1", "3"); }) == Reason::kNotSimple);
  CHECK(reason_of([] { glue_simple_edge(Graph::cycle(4), "1", "2"); }) == Reason::kAlreadyAnEdge);
  Graph d = diamond();
  CHECK(glue_simple_edge(d.without_edge("b", "c").with_edge("b", "c"), "a", "d").edge_count() == 6);
}

TEST_CASE("contract_simple_set") {
  Graph c6 = Graph::cycle(6);
  Graph out = contract_simple_set(c6, Labels{"1", "2", "3"}, "z");
  CHECK(out == Graph({"4", "5", "6", "z"}, {{"4", "5"}, {"5", "6"}, {"6", "z"}, {"z", "4"}}));
  // A singleton simple set is a relabelling of a vertex whose ball is contractible.
  Graph p3 = Graph::path(3);
  CHECK(contract_simple_set(p3, Labels{"2"}, "m") == Graph({"1", "3", "m"}, {{"1", "m"}, {"m", "3"}}));
  Graph k4 = Graph::complete(4);
  CHECK(contract_simple_set(k4, k4.vertices(), "z") == Graph({"z"}, {}));
  CHECK(reason_of([] { contract_simple_set(Graph::cycle(4), Labels{"1", "2"}, "z"); }) ==
        Reason::kNeighborhoodNotContractible);
  CHECK(reason_of([] { contract_simple_set(Graph::cycle(6), Labels{"1", "3"}, "z"); }) ==
        Reason::kSetNotContractible);
  CHECK(reason_of([] { contract_simple_set(Graph::cycle(6), Labels{}, "z"); }) == Reason::kEmptySet);
  CHECK(reason_of([] { contract_simple_set(Graph::cycle(6), Labels{"1", "2", "3"}, "5"); }) ==
        Reason::kLabelCollision);
  CHECK(reason_of([&] { contract_simple_set(c6, Labels{"1", "2", "3"}, "2"); }) == Reason::kLabelCollision);
}

TEST_CASE("undecided preconditions are reported, not guessed") {
  Oracle oracle({.use_cache = false, .euler_pruning = false});
  Graph g = join(Graph({"apex"}, {}), Graph::cycle(8));
  Graph big = join(Graph({"top"}, {}), g);
  CHECK(reason_of([&] { delete_simple_point(big, "top", OracleBudget{1}, oracle); }) == Reason::kUndecided);
}

TEST_CASE("glue and delete of the same point are inverse") {
  std::mt19937 rng(5);
  Oracle oracle;
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = testing::random_contractible(rng, 2 + rng() % 7, oracle);
    auto m = testing::random_move(rng, g, testing::MoveKind::kGluePoint, oracle);
    REQUIRE(m);
    const auto& glue = std::get<GluePoint>(*m);
    Graph bigger = glue_point(g, glue.rim, glue.vertex, {}, oracle);
    CHECK(delete_simple_point(bigger, glue.vertex, {}, oracle) == g);
  }
}

TEST_CASE("contraction equals glue-then-delete, bit for bit") {
  std::mt19937 rng(11);
  Oracle oracle;
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 50; ++trial) {
    Graph g = testing::random_graph(rng, 4 + rng() % 7, 0.45);
    auto m = testing::random_move(rng, g, testing::MoveKind::kContractSet, oracle);
    if (!m) continue;
    const auto& c = std::get<ContractSet>(*m);
    Graph a = contract_simple_set(g, c.set, c.z, {}, oracle);
    Graph b = contract_via_glue_then_delete(g, c.set, c.z, {}, oracle);
    CHECK(a == b);
    CHECK(graph_to_json(a).dump() == graph_to_json(b).dump());
    ++checked;
  }
  CHECK(checked == 50);
}

TEST_CASE("contraction_inverse replays back to the original graph") {
  Graph c6 = Graph::cycle(6);
  Labels s{"1", "2", "3"};
  Graph contracted = contract_simple_set(c6, s, "z");
  Trace back = contraction_inverse(c6, s, "z");
  CHECK(back.initial_digest == digest(contracted));
  CHECK(back.steps.size() == 4);
  CHECK(replay(back, contracted) == c6);

  std::mt19937 rng(23);
  Oracle oracle;
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = testing::random_graph(rng, 5 + rng() % 5, 0.5);
    auto m = testing::random_move(rng, g, testing::MoveKind::kContractSet, oracle);
    if (!m) continue;
    const auto& c = std::get<ContractSet>(*m);
    Graph h = contract_simple_set(g, c.set, c.z, {}, oracle);
    CHECK(replay(contraction_inverse(g, c.set, c.z), h, {}, oracle) == g);
  }
}

TEST_CASE("random transformations preserve Euler characteristic and Betti numbers") {
  std::mt19937 rng(3);
  Oracle oracle;
  std::array<int, testing::kMoveKinds> used{};
  for (int walk = 0; walk < 20; ++walk) {
    Graph g = testing::random_graph(rng, 6 + rng() % 5, 0.4);
    auto before = summarize(g);
    for (int step = 0; step < 10; ++step) {
      auto kind = static_cast<testing::MoveKind>(rng() % testing::kMoveKinds);
      auto m = testing::random_move(rng, g, kind, oracle);
      if (!m) continue;
      g = apply(g, *m, {}, oracle);
      ++used[static_cast<int>(kind)];
      auto after = summarize(g);
      CHECK(after.euler == before.euler);
      CHECK(testing::trimmed(after.betti.betti) == testing::trimmed(before.betti.betti));
    }
  }
  for (int n : used) CHECK(n > 0);
}

TEST_CASE("replay") {
  Graph c6 = Graph::cycle(6);
  Trace empty{digest(c6), {}};
  CHECK(replay(empty, c6) == c6);

  Trace one{digest(c6), {ContractSet{{"1", "2", "3"}, "z0"}}};
  CHECK(replay(one, c6) == contract_simple_set(c6, Labels{"1", "2", "3"}, "z0"));

  Trace forged{digest(c6), {ContractSet{{"1", "2", "3"}, "z0"}, DeletePoint{"4"}}};
  try {
    replay(forged, c6);
    FAIL("forged trace accepted");
  } catch (const ReplayError& e) {
    REQUIRE(e.step());
    CHECK(*e.step() == 1);
  }
  CHECK(replay(forged, c6, {}, shared_oracle(), Verification::kSkipPreconditions).order() == 3);

  Trace wrong{digest(Graph::cycle(5)), {}};
  try {
    replay(wrong, c6);
    FAIL("digest mismatch accepted");
  } catch (const ReplayError& e) {
    CHECK_FALSE(e.step());
  }
}

TEST_CASE("trace JSON round trip") {
  Graph c6 = Graph::cycle(6);
  Trace t{digest(c6),
          {ContractSet{{"1", "2", "3"}, "z0"}, GluePoint{"q", {"4", "5"}}, DeletePoint{"q"},
           GlueEdge{"4", "6"}, DeleteEdge{"4", "6"}}};
  auto j = trace_to_json(t);
  CHECK(trace_from_json(nlohmann::json::parse(j.dump())) == t);
  CHECK(j["steps"][0].dump() == R"({"kind":"contract_set","set":["1","2","3"],"z":"z0"})");
  CHECK(j["steps"][3].dump() == R"({"kind":"glue_edge","edge":["4","6"]})");
  CHECK(kind_name(t.steps[1]) == "glue_point");
  CHECK_THROWS(transformation_from_json(nlohmann::json::parse(R"({"kind":"teleport"})")));
}

TEST_CASE("fresh_label") {
  CHECK(fresh_label(Graph::cycle(3)) == "z0");
  CHECK(fresh_label(Graph({"z0", "z1"}, {})) == "z2");
  CHECK(fresh_label(Graph({"z0"}, {}), {"z1"}) == "z2");
}
