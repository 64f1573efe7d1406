#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "hidden_ties/error.hpp"
#include "hidden_ties/graph.hpp"
#include "oracle_lib.hpp"

using namespace hidden_ties;

TEST_CASE("build_bipartite folds duplicates into weights") {
  const std::vector<std::pair<std::string, std::string>> one = {{"M1", "P1"}};
  const auto g1 = build_bipartite(one);
  CHECK(g1.actor_count() == 1);
  CHECK(g1.resource_count() == 1);
  CHECK(g1.edge_count() == 1);
  CHECK(g1.edges()[0].weight == 1);

  const std::vector<std::pair<std::string, std::string>> two = {{"M1", "P1"},
                                                                {"M1", "P1"}};
  const auto g2 = build_bipartite(two);
  CHECK(g2.edge_count() == 1);
  CHECK(g2.edges()[0].weight == 2);
}

TEST_CASE("build_bipartite on the fixture pairs") {
  const auto g = fixtures::bp12();
  CHECK(g.actor_count() == 12);
  CHECK(g.resource_count() == 4);
  CHECK(g.edge_count() == 14);
  for (const auto& e : g.edges()) CHECK(e.weight == 1);
}

TEST_CASE("build_bipartite rejects empty input") {
  const std::vector<std::pair<std::string, std::string>> none;
  CHECK_THROWS_WITH_AS(build_bipartite(none), "empty record set", Error);
}

TEST_CASE("actor and resource namespaces are disjoint") {
  const std::vector<std::pair<std::string, std::string>> pairs = {{"X", "X"}};
  const auto g = build_bipartite(pairs);
  CHECK(g.actor_count() == 1);
  CHECK(g.resource_count() == 1);
  CHECK(g.actor_label(0) == g.resource_label(0));
}

TEST_CASE("bipartite weight total equals the record count") {
  std::mt19937 rng(21);
  for (int round = 0; round < 25; ++round) {
    auto pairs = oracle::random_bipartite_records(rng, 5, 4, 0.5);
    const std::vector<std::pair<std::string, std::string>> repeats(
        pairs.begin(), pairs.begin() + static_cast<std::ptrdiff_t>(pairs.size() / 2));
    pairs.insert(pairs.end(), repeats.begin(), repeats.end());
    if (pairs.empty()) continue;
    const auto g = build_bipartite(pairs);
    CHECK(g.total_weight() == pairs.size());
    for (const auto& e : g.edges()) {
      CHECK(e.actor < g.actor_count());
      CHECK(e.resource < g.resource_count());
      CHECK(e.weight >= 1);
    }
  }
}

TEST_CASE("unipartite construction validates edges") {
  CHECK_THROWS_WITH_AS(UnipartiteGraph({"a", "b"}, {{0, 0, 1}}), "self-loop rejected",
                       Error);
  CHECK_THROWS_WITH_AS(UnipartiteGraph({"a", "b"}, {{0, 1, 1}, {1, 0, 1}}),
                       "parallel edge rejected", Error);
  CHECK_THROWS_WITH_AS(UnipartiteGraph({"a", "a"}, {}), "duplicate label: a", Error);
}

TEST_CASE("connected_components on simple shapes") {
  const UnipartiteGraph edgeless({"a", "b", "c"}, {});
  const auto d = connected_components(edgeless);
  CHECK(d.count() == 3);
  CHECK(d.sizes == std::vector<std::size_t>{1, 1, 1});

  const auto r12 = fixtures::r12();
  const auto d12 = connected_components(r12);
  CHECK(d12.count() == 2);
  CHECK(d12.sizes == std::vector<std::size_t>{9, 3});

  const auto d9 = connected_components(fixtures::r9());
  CHECK(d9.count() == 1);
  CHECK(d9.sizes == std::vector<std::size_t>{9});
}

TEST_CASE("components match brute-force transitive closure") {
  std::mt19937 rng(5);
  for (int round = 0; round < 60; ++round) {
    std::uniform_int_distribution<std::size_t> size(1, 10);
    const auto g = oracle::random_graph(rng, size(rng), 0.25);
    const auto mine = connected_components(g);
    const auto brute = oracle::components(g);
    // same equivalence classes
    for (VertexId u = 0; u < g.vertex_count(); ++u)
      for (VertexId v = u; v < g.vertex_count(); ++v)
        CHECK((mine.assignments[u] == mine.assignments[v]) ==
              (brute[u] == brute[v]));
    // sizes consistent and sorted descending
    std::size_t total = 0;
    for (std::size_t i = 0; i < mine.sizes.size(); ++i) {
      total += mine.sizes[i];
      if (i > 0) CHECK(mine.sizes[i - 1] >= mine.sizes[i]);
    }
    CHECK(total == g.vertex_count());
  }
}

TEST_CASE("largest_component extracts the 9-vertex subgraph") {
  const auto r9 = largest_component(fixtures::r12());
  CHECK(r9.vertex_count() == 9);
  CHECK(r9.edge_count() == 19);
  CHECK(r9.find("CBF").has_value());
  CHECK_FALSE(r9.find("China").has_value());
}

TEST_CASE("largest_component of a connected graph is the identity") {
  const auto r9 = fixtures::r9();
  const auto again = largest_component(r9);
  REQUIRE(again.vertex_count() == r9.vertex_count());
  for (VertexId v = 0; v < r9.vertex_count(); ++v)
    CHECK(again.label(v) == r9.label(v));
  CHECK(std::equal(again.edges().begin(), again.edges().end(), r9.edges().begin(),
                   r9.edges().end()));
}

TEST_CASE("largest_component ties break toward the smallest vertex id") {
  const UnipartiteGraph g({"a", "b", "c", "d", "e", "f"},
                          {{0, 1, 1}, {1, 2, 1}, {0, 2, 1},
                           {3, 4, 1}, {4, 5, 1}, {3, 5, 1}});
  const auto picked = largest_component(g);
  CHECK(picked.vertex_count() == 3);
  CHECK(picked.find("a").has_value());
  CHECK_THROWS_WITH_AS(largest_component(UnipartiteGraph({}, {})), "empty graph", Error);
}

TEST_CASE("largest_component is idempotent") {
  std::mt19937 rng(9);
  for (int round = 0; round < 20; ++round) {
    const auto g = oracle::random_graph(rng, 9, 0.2);
    const auto once = largest_component(g);
    const auto twice = largest_component(once);
    REQUIRE(once.vertex_count() == twice.vertex_count());
    for (VertexId v = 0; v < once.vertex_count(); ++v)
      CHECK(once.label(v) == twice.label(v));
    CHECK(once.edge_count() == twice.edge_count());
  }
}

TEST_CASE("ego networks on the fixture") {
  const auto r9 = fixtures::r9();
  const VertexId cbf = *r9.find("CBF");
  const VertexId tman = *r9.find("Tman");

  const auto full = ego_network(r9, cbf, EgoRadius::OnePointFive);
  CHECK(full.subgraph.vertex_count() == 8);
  CHECK(full.subgraph.edge_count() == 18);

  const auto star = ego_network(r9, cbf, EgoRadius::One);
  CHECK(star.subgraph.vertex_count() == 8);
  CHECK(star.subgraph.edge_count() == 7);

  const auto leaf = ego_network(r9, tman, EgoRadius::OnePointFive);
  CHECK(leaf.subgraph.vertex_count() == 2);
  CHECK(leaf.subgraph.edge_count() == 1);

  CHECK_THROWS_WITH_AS(ego_network(r9, 99, EgoRadius::One), "unknown vertex", Error);
}

TEST_CASE("1.5-degree ego equals the induced neighbourhood subgraph") {
  std::mt19937 rng(13);
  for (int round = 0; round < 30; ++round) {
    const auto g = oracle::random_graph(rng, 8, 0.35);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const auto ego = ego_network(g, v, EgoRadius::OnePointFive);
      std::vector<VertexId> keep(g.neighbors(v).begin(), g.neighbors(v).end());
      keep.push_back(v);
      const auto induced = induced_subgraph(g, keep);
      REQUIRE(ego.subgraph.vertex_count() == induced.vertex_count());
      for (VertexId w = 0; w < induced.vertex_count(); ++w)
        CHECK(ego.subgraph.label(w) == induced.label(w));
      CHECK(std::equal(ego.subgraph.edges().begin(), ego.subgraph.edges().end(),
                       induced.edges().begin(), induced.edges().end()));
    }
  }
}

TEST_CASE("induced_subgraph keeps edges with both endpoints") {
  const auto r9 = fixtures::r9();

  std::vector<VertexId> all(r9.vertex_count());
  for (VertexId v = 0; v < r9.vertex_count(); ++v) all[v] = v;
  const auto same = induced_subgraph(r9, all);
  CHECK(same.vertex_count() == r9.vertex_count());
  CHECK(same.edge_count() == r9.edge_count());

  const auto empty = induced_subgraph(r9, {});
  CHECK(empty.vertex_count() == 0);
  CHECK(empty.edge_count() == 0);

  const std::vector<VertexId> keep = {*r9.find("GPO"), *r9.find("Brainy"),
                                      *r9.find("Tman")};
  const auto path = induced_subgraph(r9, keep);
  CHECK(path.vertex_count() == 3);
  CHECK(path.edge_count() == 2);
  CHECK_FALSE(path.has_edge(*path.find("GPO"), *path.find("Tman")));

  const std::vector<VertexId> bad = {42};
  CHECK_THROWS_WITH_AS(induced_subgraph(r9, bad), "unknown vertex", Error);
}
