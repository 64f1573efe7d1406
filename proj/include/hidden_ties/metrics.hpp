#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hidden_ties/graph.hpp"

namespace hidden_ties {

// Raw is the classic report convention (closeness 1/sum-of-distances,
// betweenness as plain pair counts); Normalized applies the textbook factors
// ((N-1) for closeness, 1/((N-1)(N-2)) for betweenness).
enum class Variant { Raw, Normalized };

struct Geodesics {
  std::size_t diameter = 0;
  // sum over all ordered vertex pairs (self-distances included as 0)
  // divided by N^2
  double average = 0.0;
};

struct VertexMetrics {
  std::string label;
  std::size_t degree = 0;
  double degree_centrality = 0.0;
  double closeness_raw = 0.0;
  double closeness_normalized = 0.0;
  double betweenness_raw = 0.0;
  double betweenness_normalized = 0.0;
  double eigenvector = 0.0;
  double local_clustering = 0.0;
};

struct NetworkAggregates {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::optional<double> density;  // needs N >= 2
  std::size_t diameter = 0;
  double average_geodesic = 0.0;
  std::size_t connectivity = 0;
  std::optional<double> degree_centralization;  // needs N >= 3
  std::map<std::size_t, double> degree_distribution;
};

struct MetricsReport {
  NetworkAggregates aggregates;
  std::vector<VertexMetrics> vertices;  // indexed by VertexId
};

std::vector<std::size_t> degree_all(const UnipartiteGraph& g);

// d_i / (N-1); throws "degenerate graph" for N < 2
std::vector<double> degree_centrality(const UnipartiteGraph& g);

// Throws on disconnected input; callers select a component first. A single
// vertex gets 0 by convention (its distance sum is empty).
std::vector<double> closeness(const UnipartiteGraph& g, Variant variant);

// Defined on disconnected graphs (pairs only count where reachable).
std::vector<double> betweenness(const UnipartiteGraph& g, Variant variant);

// Dominant-eigenvector scores, L1-normalized. Deterministic power iteration:
// uniform start, shifted operator A+I (keeps the iteration aperiodic on
// bipartite-structured graphs), renormalize each step, stop at max-entry
// change < 1e-12 or 10000 iterations. Requires a connected graph with at
// least one edge.
std::vector<double> eigenvector_centrality(const UnipartiteGraph& g);

// Fraction of neighbour pairs that are themselves adjacent; 0 for degree < 2.
std::vector<double> local_clustering(const UnipartiteGraph& g);

// 2|E| / (N(N-1)); throws "degenerate graph" for N < 2
double density(const UnipartiteGraph& g);

// Throws on disconnected input.
Geodesics geodesics(const UnipartiteGraph& g);

// degree -> fraction of vertices; fractions sum to 1
std::map<std::size_t, double> degree_distribution(const UnipartiteGraph& g);

// Minimum vertex cut. Disconnected or single-vertex graphs give 0; complete
// graphs give N-1 by convention.
std::size_t connectivity(const UnipartiteGraph& g);

// Freeman degree centralization: sum(d_max - d_i) / ((N-1)(N-2)).
// Throws "degenerate graph" for N < 3.
double degree_centralization(const UnipartiteGraph& g);

// Full per-vertex + whole-network report of a connected graph. Degenerate
// sizes use report conventions instead of erroring: N=1 leaves closeness and
// eigenvector at 0, density absent below N=2, centralization absent below
// N=3 (where normalized betweenness is 0 as well).
MetricsReport aggregate_report(const UnipartiteGraph& g);

}  // namespace hidden_ties
