#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "hidden_ties/error.hpp"
#include "hidden_ties/kernels.hpp"
#include "hidden_ties/metrics.hpp"
#include "oracle_lib.hpp"

using namespace hidden_ties;

namespace {

UnipartiteGraph complete_graph(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < n; ++v) labels.push_back("k" + std::to_string(v));
  std::vector<WeightedEdge> edges;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
  return UnipartiteGraph(std::move(labels), std::move(edges));
}

UnipartiteGraph path3() {
  return UnipartiteGraph({"a", "b", "c"}, {{0, 1, 1}, {1, 2, 1}});
}

}  // namespace

TEST_CASE("reference table: degrees, betweenness, closeness, eigenvector") {
  const auto r9 = fixtures::r9();
  const auto degrees = degree_all(r9);
  const auto raw_betweenness = betweenness(r9, Variant::Raw);
  const auto raw_closeness = closeness(r9, Variant::Raw);
  const auto eigen = eigenvector_centrality(r9);

  for (const auto& row : fixtures::reference_rows()) {
    const VertexId v = *r9.find(row.label);
    CHECK(degrees[v] == row.degree);
    CHECK(raw_betweenness[v] == doctest::Approx(row.betweenness).epsilon(1e-12));
    CHECK(std::fabs(raw_closeness[v] - (row.closeness)) <= 1e-3);
    CHECK(std::fabs(eigen[v] - (row.eigenvector)) <= 1.5e-3);
  }

  // handshake
  CHECK(std::accumulate(degrees.begin(), degrees.end(), std::size_t{0}) ==
        2 * r9.edge_count());
}

TEST_CASE("degree centrality") {
  const auto r9 = fixtures::r9();
  const auto dc = degree_centrality(r9);
  CHECK(dc[*r9.find("CBF")] == doctest::Approx(0.875));
  CHECK(dc[*r9.find("Tman")] == doctest::Approx(0.125));

  const auto k6 = complete_graph(6);
  for (double x : degree_centrality(k6)) CHECK(x == doctest::Approx(1.0));

  CHECK_THROWS_WITH_AS(degree_centrality(UnipartiteGraph({"a"}, {})),
                       "degenerate graph", Error);
}

TEST_CASE("closeness variants and connectivity requirement") {
  const auto r9 = fixtures::r9();
  const auto norm = closeness(r9, Variant::Normalized);
  CHECK(norm[*r9.find("CBF")] == doctest::Approx(8.0 / 9.0));
  CHECK(norm[*r9.find("GPO")] == doctest::Approx(8.0 / 14.0));

  const UnipartiteGraph pair({"a", "b"}, {{0, 1, 1}});
  CHECK(closeness(pair, Variant::Raw)[0] == doctest::Approx(1.0));
  CHECK(closeness(pair, Variant::Normalized)[0] == doctest::Approx(1.0));

  const UnipartiteGraph split({"a", "b"}, {});
  CHECK_THROWS_WITH_AS(closeness(split, Variant::Raw),
                       "closeness requires a connected graph; analyze per component",
                       Error);
}

TEST_CASE("betweenness normalization and leaves") {
  const auto r9 = fixtures::r9();
  const auto norm = betweenness(r9, Variant::Normalized);
  CHECK(norm[*r9.find("CBF")] == doctest::Approx(15.0 / 56.0));

  const auto raw = betweenness(path3(), Variant::Raw);
  CHECK(raw[0] == 0.0);  // leaf
  CHECK(raw[1] == 1.0);
}

TEST_CASE("eigenvector centrality of a regular graph is uniform") {
  const UnipartiteGraph cycle({"a", "b", "c", "d", "e"},
                              {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {0, 4, 1}});
  for (double x : eigenvector_centrality(cycle)) CHECK(x == doctest::Approx(0.2));

  CHECK_THROWS_WITH_AS(eigenvector_centrality(UnipartiteGraph({"a", "b"}, {})),
                       "edgeless graph", Error);
  const UnipartiteGraph split({"a", "b", "c"}, {{0, 1, 1}});
  CHECK_THROWS_AS(eigenvector_centrality(split), Error);
}

TEST_CASE("eigenvector residual bound holds, bipartite shapes included") {
  std::mt19937 rng(17);
  const auto& K = hidden_ties::kernels::active();
  for (int round = 0; round < 60; ++round) {
    std::uniform_int_distribution<std::size_t> size(2, 10);
    const auto g = oracle::random_connected_graph(rng, size(rng), 0.25);
    const auto x = eigenvector_centrality(g);
    const std::size_t n = g.vertex_count();

    double sum = 0.0;
    for (double e : x) {
      CHECK(e >= 0.0);
      sum += e;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));

    std::vector<double> ax(n);
    K.spmv_unit(g.csr_offsets().data(), g.csr_targets().data(), n, x.data(), ax.data());
    const double lambda = std::accumulate(ax.begin(), ax.end(), 0.0);
    double residual = 0.0;
    for (std::size_t v = 0; v < n; ++v)
      residual = std::max(residual, std::fabs(ax[v] - lambda * x[v]));
    CHECK(residual < 1e-8);
  }
  // trees are bipartite: the shifted iteration must still converge
  const auto tree = path3();
  const auto x = eigenvector_centrality(tree);
  CHECK(x[1] > x[0]);
}

TEST_CASE("local clustering on the fixture") {
  const auto r9 = fixtures::r9();
  const auto cc = local_clustering(r9);
  CHECK(cc[*r9.find("Remy")] == doctest::Approx(1.0));
  CHECK(cc[*r9.find("Brainy")] == doctest::Approx(1.0 / 3.0));
  CHECK(cc[*r9.find("Tman")] == 0.0);
}

TEST_CASE("density") {
  CHECK(std::fabs(density(fixtures::r9()) - (0.5278)) <= 1e-4);
  CHECK(density(complete_graph(3)) == doctest::Approx(1.0));
  CHECK_THROWS_WITH_AS(density(UnipartiteGraph({"a"}, {})), "degenerate graph", Error);

  // the reference large-network density value, checked at the formula level
  std::vector<std::string> labels;
  for (int v = 0; v < 95; ++v) labels.push_back("v" + std::to_string(v));
  std::vector<WeightedEdge> edges;
  for (std::uint32_t u = 0; u < 95 && edges.size() < 947; ++u)
    for (std::uint32_t v = u + 1; v < 95 && edges.size() < 947; ++v)
      edges.push_back({u, v, 1});
  const UnipartiteGraph big(std::move(labels), std::move(edges));
  REQUIRE(big.edge_count() == 947);
  CHECK(std::fabs(density(big) - (0.2121)) <= 1e-4);
}

TEST_CASE("geodesics") {
  const auto geo = geodesics(fixtures::r9());
  CHECK(geo.diameter == 3);
  CHECK(std::fabs(geo.average - (116.0 / 81.0)) <= 1e-4);

  const auto single = geodesics(UnipartiteGraph({"a"}, {}));
  CHECK(single.diameter == 0);
  CHECK(single.average == 0.0);

  const auto p = geodesics(path3());
  CHECK(p.diameter == 2);
  CHECK(p.average == doctest::Approx(8.0 / 9.0));

  const UnipartiteGraph split({"a", "b"}, {});
  CHECK_THROWS_WITH_AS(geodesics(split),
                       "geodesics require a connected graph; analyze per component",
                       Error);
}

TEST_CASE("degree distribution") {
  const auto dist = degree_distribution(fixtures::r9());
  const std::map<std::size_t, double> expected = {{1, 1.0 / 9.0},
                                                  {2, 1.0 / 9.0},
                                                  {3, 1.0 / 9.0},
                                                  {5, 5.0 / 9.0},
                                                  {7, 1.0 / 9.0}};
  REQUIRE(dist.size() == expected.size());
  double total = 0.0;
  for (const auto& [degree, fraction] : expected) {
    CHECK(dist.at(degree) == doctest::Approx(fraction).epsilon(1e-12));
    total += dist.at(degree);
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

  const auto k6 = degree_distribution(complete_graph(6));
  CHECK(k6.size() == 1);
  CHECK(k6.at(5) == doctest::Approx(1.0));

  const auto edgeless = degree_distribution(UnipartiteGraph({"a", "b", "c", "d"}, {}));
  CHECK(edgeless.at(0) == doctest::Approx(1.0));
}

TEST_CASE("vertex connectivity") {
  CHECK(connectivity(fixtures::r9()) == 1);  // removing Brainy isolates Tman
  CHECK(connectivity(complete_graph(3)) == 2);
  const UnipartiteGraph two_edges({"a", "b", "c", "d"}, {{0, 1, 1}, {2, 3, 1}});
  CHECK(connectivity(two_edges) == 0);
  CHECK(connectivity(UnipartiteGraph({"a"}, {})) == 0);

  std::mt19937 rng(23);
  for (int round = 0; round < 40; ++round) {
    std::uniform_int_distribution<std::size_t> size(2, 8);
    const auto g = oracle::random_graph(rng, size(rng), 0.4);
    CHECK(connectivity(g) == oracle::connectivity(g));
  }
}

TEST_CASE("degree centralization") {
  CHECK(degree_centralization(fixtures::r9()) == doctest::Approx(25.0 / 56.0));

  const UnipartiteGraph star({"c", "l1", "l2", "l3", "l4"},
                             {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}});
  CHECK(degree_centralization(star) == doctest::Approx(1.0));

  const UnipartiteGraph cycle({"a", "b", "c", "d"},
                              {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
  CHECK(degree_centralization(cycle) == doctest::Approx(0.0));

  CHECK_THROWS_WITH_AS(degree_centralization(UnipartiteGraph({"a", "b"}, {{0, 1, 1}})),
                       "degenerate graph", Error);
}

TEST_CASE("aggregate report on the fixture and degenerate graphs") {
  const auto report = aggregate_report(fixtures::r9());
  CHECK(report.aggregates.vertex_count == 9);
  CHECK(report.aggregates.edge_count == 19);
  CHECK(report.aggregates.diameter == 3);
  CHECK(std::fabs(report.aggregates.average_geodesic - (1.4321)) <= 1e-4);
  REQUIRE(report.aggregates.density.has_value());
  CHECK(std::fabs(*report.aggregates.density - (0.5278)) <= 1e-4);
  CHECK(report.aggregates.connectivity == 1);

  const auto triangle = aggregate_report(complete_graph(3));
  CHECK(triangle.aggregates.diameter == 1);
  CHECK(triangle.aggregates.average_geodesic == doctest::Approx(2.0 * 3.0 / 9.0));
  CHECK(*triangle.aggregates.density == doctest::Approx(1.0));

  const auto k6 = aggregate_report(complete_graph(6));
  CHECK(k6.aggregates.vertex_count == 6);
  CHECK(k6.aggregates.edge_count == 15);
  CHECK(*k6.aggregates.density == doctest::Approx(1.0));
  CHECK(k6.aggregates.diameter == 1);

  const auto lone = aggregate_report(UnipartiteGraph({"a"}, {}));
  CHECK(lone.aggregates.diameter == 0);
  CHECK_FALSE(lone.aggregates.density.has_value());
  CHECK(lone.vertices[0].closeness_raw == 0.0);
  CHECK(lone.vertices[0].eigenvector == 0.0);
}

TEST_CASE("raw centralities match brute force on random graphs") {
  std::mt19937 rng(41);
  int connected_cases = 0;
  for (int round = 0; round < 220; ++round) {
    std::uniform_int_distribution<std::size_t> size(1, 10);
    const auto g = oracle::random_graph(rng, size(rng), 0.3);

    const auto mine = betweenness(g, Variant::Raw);
    const auto brute = oracle::betweenness(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      CHECK(std::fabs(mine[v] - (brute[v])) <= 1e-9);

    const auto brute_farness = oracle::farness(g);
    if (brute_farness[0] >= 0) {
      ++connected_cases;
      const auto mine_closeness = closeness(g, Variant::Raw);
      const auto geo = geodesics(g);
      long long max_dist = 0;
      const auto dist = oracle::all_pairs_bfs(oracle::adjacency_matrix(g));
      for (const auto& row : dist)
        for (int d : row) max_dist = std::max<long long>(max_dist, d);
      CHECK(static_cast<long long>(geo.diameter) == max_dist);
      CHECK(geo.average <= static_cast<double>(geo.diameter));
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const double expected =
            brute_farness[v] == 0 ? 0.0 : 1.0 / static_cast<double>(brute_farness[v]);
        CHECK(std::fabs(mine_closeness[v] - (expected)) <= 1e-9);
      }
    }
  }
  CHECK(connected_cases > 30);
}

TEST_CASE("raw and normalized variants rank the same top vertex") {
  std::mt19937 rng(43);
  for (int round = 0; round < 25; ++round) {
    const auto g = oracle::random_connected_graph(rng, 8, 0.3);
    const auto raw_b = betweenness(g, Variant::Raw);
    const auto norm_b = betweenness(g, Variant::Normalized);
    const auto raw_c = closeness(g, Variant::Raw);
    const auto norm_c = closeness(g, Variant::Normalized);
    const auto top = [](const std::vector<double>& xs) {
      return std::max_element(xs.begin(), xs.end()) - xs.begin();
    };
    CHECK(top(raw_b) == top(norm_b));
    CHECK(top(raw_c) == top(norm_c));
    // scale relations
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      CHECK(norm_c[v] ==
            doctest::Approx(raw_c[v] * static_cast<double>(g.vertex_count() - 1))
                .epsilon(1e-12));
      CHECK(norm_b[v] ==
            doctest::Approx(raw_b[v] / (static_cast<double>(g.vertex_count() - 1) *
                                        static_cast<double>(g.vertex_count() - 2)))
                .epsilon(1e-12));
    }
  }
}
