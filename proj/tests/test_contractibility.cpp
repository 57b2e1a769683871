#include <algorithm>
#include <set>
#include <thread>

#include "doctest.h"
#include "dtopo/contractibility.hpp"
#include "support/census.hpp"

using namespace dtopo;

namespace {

Graph cone_over(const Graph& g) {
  return join(Graph({"apex"}, {}), relabel(g, [](const VertexLabel& l) { return "g" + l; }));
}

}  // namespace

TEST_CASE("base cases") {
  Oracle oracle;
  auto k1 = oracle.is_contractible(Graph({"a"}, {}));
  CHECK(k1.verdict == Verdict::kTrue);
  REQUIRE(k1.certificate);
  CHECK(k1.certificate->deletion_order.empty());
  CHECK(oracle.is_contractible(Graph()).verdict == Verdict::kFalse);
  CHECK(oracle.is_contractible(Graph::independent(2)).verdict == Verdict::kFalse);
  CHECK(oracle.is_contractible(Graph::cycle(4)).verdict == Verdict::kFalse);
  CHECK(oracle.is_contractible(Graph::path(2)).verdict == Verdict::kTrue);
}

TEST_CASE("every cone over a graph with at most 5 vertices is contractible") {
  Oracle oracle;
  for (int n = 0; n <= 5; ++n)
    for (const auto& s : testing::all_graphs(n)) {
      Graph cone = cone_over(testing::to_graph(s));
      auto r = oracle.is_contractible(cone);
      CHECK(r.verdict == Verdict::kTrue);
      REQUIRE(r.certificate);
      CHECK(verify_certificate(cone, *r.certificate, oracle).valid);
    }
}

TEST_CASE("oracle matches the family built by gluing, on all graphs up to 7 vertices") {
  auto family = testing::contractible_family(7);
  // Classes below five vertices: K1, K2, P3, K3, then every connected 4-vertex graph but C4.
  CHECK(family[1].size() == 1);
  CHECK(family[2].size() == 1);
  CHECK(family[3].size() == 2);
  CHECK(family[4].size() == 5);
  Oracle oracle;
  for (int n = 1; n <= 7; ++n) {
    std::set<std::uint64_t> members(family[n].begin(), family[n].end());
    std::size_t yes = 0;
    for (const auto& s : testing::all_graphs(n)) {
      Graph g = testing::to_graph(s);
      auto r = oracle.is_contractible(g);
      bool expected = members.contains(testing::canonical_code(s));
      CHECK(r.verdict == to_verdict(expected));
      if (r.verdict == Verdict::kTrue) {
        ++yes;
        REQUIRE(r.certificate);
        CHECK(r.certificate->deletion_order.size() == g.order() - 1);
        CHECK(verify_certificate(g, *r.certificate, oracle).valid);
      }
    }
    CHECK(yes == members.size());
  }
}

TEST_CASE("cache and Euler pruning never change answers") {
  Oracle plain({.use_cache = false, .euler_pruning = false});
  Oracle cached({.use_cache = true, .euler_pruning = false});
  Oracle pruned({.use_cache = true, .euler_pruning = true});
  for (int n = 1; n <= 6; ++n)
    for (const auto& s : testing::all_graphs(n)) {
      Graph g = testing::to_graph(s);
      Verdict expected = plain.is_contractible(g).verdict;
      CHECK(cached.is_contractible(g).verdict == expected);
      CHECK(pruned.is_contractible(g).verdict == expected);
      // Second round answers from the cache.
      CHECK(cached.is_contractible(g).verdict == expected);
    }
  CHECK(cached.cache_stats().hits > 0);
  CHECK(plain.cache_stats().entries == 0);
}

TEST_CASE("cached certificates are remapped onto the queried labels") {
  Oracle oracle;
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = cone_over(testing::random_graph(rng, 3 + rng() % 6, 0.4));
    Graph h = testing::shuffle_labels(g, rng);
    auto first = oracle.is_contractible(g);
    auto second = oracle.is_contractible(h);
    REQUIRE(second.certificate);
    CHECK(verify_certificate(g, *first.certificate, oracle).valid);
    CHECK(verify_certificate(h, *second.certificate, oracle).valid);
  }
}

TEST_CASE("exhausted budget is undecided, never wrong") {
  Oracle oracle({.use_cache = false, .euler_pruning = false});
  Graph big = cone_over(Graph::cycle(8));
  auto r = oracle.is_contractible(big, OracleBudget{1});
  CHECK(r.verdict == Verdict::kUndecided);
  CHECK_FALSE(r.certificate);
  CHECK(oracle.is_contractible(big).verdict == Verdict::kTrue);
}

TEST_CASE("budget exhaustion does not poison the shared cache") {
  Oracle oracle({.use_cache = true, .euler_pruning = false});
  Graph g = cone_over(Graph::cycle(9));
  CHECK(oracle.is_contractible(g, OracleBudget{3}).verdict == Verdict::kUndecided);
  CHECK(oracle.is_contractible(g).verdict == Verdict::kTrue);
  CHECK(oracle.is_contractible(Graph::cycle(9)).verdict == Verdict::kFalse);
}

TEST_CASE("simple points") {
  Oracle oracle;
  Graph p3 = Graph::path(3);
  CHECK(oracle.is_simple_point(p3, "1") == Verdict::kTrue);
  CHECK(oracle.is_simple_point(p3, "2") == Verdict::kFalse);
  Graph c4 = Graph::cycle(4);
  for (const auto& v : c4.vertices()) CHECK(oracle.is_simple_point(c4, v) == Verdict::kFalse);
  for (std::size_t n = 2; n <= 6; ++n) {
    Graph kn = Graph::complete(n);
    for (const auto& v : kn.vertices()) CHECK(oracle.is_simple_point(kn, v) == Verdict::kTrue);
  }
  CHECK_THROWS_AS(oracle.is_simple_point(p3, "9"), GraphError);
}

TEST_CASE("simple edges") {
  Oracle oracle;
  Graph k3 = Graph::complete(3), c4 = Graph::cycle(4), k4 = Graph::complete(4);
  for (const auto& [u, v] : k3.edges()) CHECK(oracle.is_simple_edge(k3, u, v) == Verdict::kTrue);
  for (const auto& [u, v] : c4.edges()) CHECK(oracle.is_simple_edge(c4, u, v) == Verdict::kFalse);
  for (const auto& [u, v] : k4.edges()) CHECK(oracle.is_simple_edge(k4, u, v) == Verdict::kTrue);
  CHECK_THROWS_AS(oracle.is_simple_edge(c4, "1", "3"), GraphError);
  // The diamond's middle edge has two non-adjacent common neighbours.
  Graph diamond({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
  CHECK(oracle.is_simple_edge(diamond, "b", "c") == Verdict::kFalse);
  CHECK(oracle.is_simple_edge(diamond, "a", "b") == Verdict::kTrue);
}

TEST_CASE("simple sets") {
  Oracle oracle;
  Graph c6 = Graph::cycle(6);
  CHECK(oracle.is_simple_set(c6, std::vector<VertexLabel>{"1", "2", "3"}) == Verdict::kTrue);
  Graph c4 = Graph::cycle(4);
  for (const auto& [u, v] : c4.edges())
    CHECK(oracle.is_simple_set(c4, std::vector<VertexLabel>{u, v}) == Verdict::kFalse);
  Graph k4 = Graph::complete(4);
  CHECK(oracle.is_simple_set(k4, k4.vertices()) == Verdict::kTrue);

  auto check = oracle.check_simple_set(c6, c6.make_set(std::vector<VertexLabel>{"1", "3"}));
  CHECK(check.set_contractible == Verdict::kFalse);
  auto pair = oracle.check_simple_set(c4, c4.make_set(std::vector<VertexLabel>{"1", "2"}));
  CHECK(pair.set_contractible == Verdict::kTrue);
  CHECK(pair.union_contractible == Verdict::kFalse);
  CHECK_THROWS_AS(oracle.is_simple_set(c6, std::vector<VertexLabel>{}), GraphError);
  CHECK_THROWS_AS(oracle.is_simple_set(c6, std::vector<VertexLabel>{"x"}), GraphError);
}

TEST_CASE("every contractible graph is a simple set of itself") {
  Oracle oracle;
  for (int n = 1; n <= 6; ++n)
    for (const auto& s : testing::connected_graphs(n)) {
      Graph g = testing::to_graph(s);
      if (oracle.is_contractible(g).verdict == Verdict::kTrue)
        CHECK(oracle.is_simple_set(g, g.vertices()) == Verdict::kTrue);
    }
}

TEST_CASE("enumerate_simple_points") {
  Oracle oracle;
  CHECK(oracle.enumerate_simple_points(Graph::cycle(4)).points.empty());
  Graph k3({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(oracle.enumerate_simple_points(k3).points == std::vector<VertexLabel>{"a", "b", "c"});
  Graph p4({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  CHECK(oracle.enumerate_simple_points(p4).points == std::vector<VertexLabel>{"a", "d"});
  auto starved = Oracle({.use_cache = false, .euler_pruning = false})
                     .enumerate_simple_points(cone_over(Graph::cycle(6)), OracleBudget{1});
  CHECK_FALSE(starved.undecided.empty());
}

TEST_CASE("enumerate_simple_sets against an exhaustive subset check") {
  Oracle oracle;
  Graph c6 = Graph::cycle(6);
  auto sets = oracle.enumerate_simple_sets(c6, 3, 3);
  std::vector<std::vector<VertexLabel>> expected;
  // Brute force: every 3-subset, contractible as an induced path and with
  // a path-shaped neighbourhood union.
  for (int mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(mask) != 3) continue;
    std::vector<VertexLabel> s;
    for (int i = 0; i < 6; ++i)
      if ((mask >> i) & 1) s.push_back(std::to_string(i + 1));
    Graph induced = induced_subgraph(c6, s);
    if (induced.edge_count() == 2) expected.push_back(s);
  }
  std::sort(expected.begin(), expected.end());
  CHECK(sets.sets == expected);
  CHECK(sets.sets.size() == 6);
  CHECK(oracle.enumerate_simple_sets(Graph::cycle(4), 2, 3).sets.empty());
  CHECK(oracle.enumerate_simple_sets(Graph({"x"}, {}), 1, 1).sets ==
        std::vector<std::vector<VertexLabel>>{{"x"}});
  CHECK_THROWS_AS(oracle.enumerate_simple_sets(c6, 0, 2), GraphError);
  CHECK_THROWS_AS(oracle.enumerate_simple_sets(c6, 3, 2), GraphError);
  CHECK_THROWS_AS(oracle.enumerate_simple_sets(c6, 1, 7), GraphError);
}

TEST_CASE("greedy_reduce") {
  Oracle oracle;
  auto c4 = oracle.greedy_reduce(Graph::cycle(4));
  CHECK(c4.residue == Graph::cycle(4));
  CHECK(c4.deleted.empty());
  auto k4 = oracle.greedy_reduce(Graph::complete(4));
  CHECK(k4.residue.order() == 1);
  CHECK(k4.deleted.size() == 3);
  for (int n = 1; n <= 5; ++n)
    for (const auto& s : testing::connected_graphs(n)) {
      Graph g = testing::to_graph(s);
      if (oracle.is_contractible(g).verdict != Verdict::kTrue) continue;
      auto r = oracle.greedy_reduce(g);
      CHECK(r.residue.order() == 1);
      CHECK(verify_certificate(g, ContractionCertificate{r.deleted}, oracle).valid);
    }
}

TEST_CASE("forged certificates are rejected") {
  Oracle oracle;
  Graph p4 = Graph::path(4);
  CHECK(verify_certificate(p4, {{"1", "2", "3"}}, oracle).valid);
  CHECK_FALSE(verify_certificate(p4, {{"2", "1", "3"}}, oracle).valid);
  CHECK_FALSE(verify_certificate(p4, {{"1", "2"}}, oracle).valid);
  CHECK_FALSE(verify_certificate(p4, {{"1", "9", "3"}}, oracle).valid);
}

TEST_CASE("concurrent queries share the cache") {
  Oracle oracle;
  std::vector<Graph> graphs;
  for (int n = 1; n <= 6; ++n)
    for (const auto& s : testing::connected_graphs(n)) graphs.push_back(testing::to_graph(s));
  Oracle reference({.use_cache = false});
  std::vector<Verdict> expected;
  for (const auto& g : graphs) expected.push_back(reference.is_contractible(g).verdict);
  std::vector<std::vector<Verdict>> seen(4, std::vector<Verdict>(graphs.size()));
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&, t] {
      for (std::size_t i = 0; i < graphs.size(); ++i) seen[t][i] = oracle.is_contractible(graphs[i]).verdict;
    });
  for (auto& w : workers) w.join();
  for (const auto& row : seen) CHECK(row == expected);
}
