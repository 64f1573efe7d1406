#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "hidden_ties/graph.hpp"

namespace hidden_ties {

struct Partition {
  // vertex -> community; communities are dense 0..C-1, numbered by smallest
  // contained vertex id
  std::vector<std::uint32_t> assignments;
  double modularity = 0.0;

  std::size_t community_count() const;
  // members per community, ids ascending
  std::vector<std::vector<VertexId>> groups() const;
};

// Newman modularity Q = sum_c [ e_c/m - (d_c/2m)^2 ], edges unweighted.
// Throws "edgeless graph" when m == 0.
double modularity(const UnipartiteGraph& g, std::span<const std::uint32_t> assignments);

// Removes the max-edge-betweenness edge (ties: smallest (u,v) pair) until no
// edges remain; returns the component partition with the highest modularity
// measured on the original graph (ties: earliest, starting from the
// untouched graph's components).
Partition girvan_newman(const UnipartiteGraph& g);

// Greedy agglomerative modularity maximization from singletons; merges the
// connected pair with the largest positive dQ, ties toward the smallest
// community index pair (community index = smallest member id).
Partition clauset_newman_moore(const UnipartiteGraph& g);

// CNM variant scoring merges by dQ * min(|c1|,|c2|)/max(|c1|,|c2|)
// (consolidation ratio); stops when no positive-dQ merge exists.
Partition wakita_tsurumi(const UnipartiteGraph& g);

// Random-walk agglomeration: t-step walk distributions per community,
// distances weighted by 1/d(k), Ward-style merge of the closest adjacent
// pair, cut of the merge sequence at maximum modularity (singleton start
// included). Exact probability vectors, no sampling.
Partition walktrap(const UnipartiteGraph& g, std::size_t walk_length = 4);

// Number of k-vertex subsets inducing complete subgraphs, k >= 3.
std::uint64_t count_k_cliques(const UnipartiteGraph& g, std::size_t k);

struct CliqueReport {
  // k -> number of complete k-subsets, for k in [min_k, max_clique_size]
  std::map<std::size_t, std::uint64_t> counts;
  std::size_t max_clique_size = 0;
  std::uint64_t max_clique_count = 0;
  // maximal complete subgraphs (any size), each sorted by id, listed by size
  // descending then lexicographically
  std::vector<std::vector<VertexId>> maximal_cliques;

  std::uint64_t total() const;
};

CliqueReport clique_report(const UnipartiteGraph& g, std::size_t min_k = 3);

}  // namespace hidden_ties
