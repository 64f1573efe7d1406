#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hidden_ties {

// Dense vertex index, 0..N-1 within one graph (or one bipartite part).
// Labels appear only at I/O boundaries; algorithms work on ids.
using VertexId = std::uint32_t;

struct BipartiteEdge {
  VertexId actor;
  VertexId resource;
  std::uint32_t weight;  // co-occurrence count, >= 1
};

struct WeightedEdge {
  VertexId u;  // canonical form keeps u < v
  VertexId v;
  std::uint32_t weight;  // shared-neighbor count for projections, else >= 1

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Actor-resource graph: two disjoint label namespaces, edges only across
// parts, multiplicity folded into weights.
class BipartiteGraph {
 public:
  BipartiteGraph(std::vector<std::string> actors,
                 std::vector<std::string> resources,
                 std::vector<BipartiteEdge> edges);

  std::size_t actor_count() const noexcept { return actors_.size(); }
  std::size_t resource_count() const noexcept { return resources_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& actor_label(VertexId a) const { return actors_.at(a); }
  const std::string& resource_label(VertexId r) const { return resources_.at(r); }
  std::optional<VertexId> find_actor(std::string_view label) const;
  std::optional<VertexId> find_resource(std::string_view label) const;

  std::span<const BipartiteEdge> edges() const noexcept { return edges_; }
  // resource ids adjacent to an actor, ascending
  std::span<const VertexId> actor_neighbors(VertexId a) const;
  // actor ids adjacent to a resource, ascending
  std::span<const VertexId> resource_neighbors(VertexId r) const;

  std::size_t actor_degree(VertexId a) const { return actor_neighbors(a).size(); }
  std::size_t resource_degree(VertexId r) const { return resource_neighbors(r).size(); }

  // Sum of edge weights == number of source record pairs.
  std::uint64_t total_weight() const noexcept { return total_weight_; }

 private:
  std::vector<std::string> actors_;
  std::vector<std::string> resources_;
  std::vector<BipartiteEdge> edges_;  // sorted by (actor, resource)
  std::vector<std::uint32_t> actor_offsets_;
  std::vector<VertexId> actor_targets_;
  std::vector<std::uint32_t> resource_offsets_;
  std::vector<VertexId> resource_targets_;
  std::unordered_map<std::string, VertexId> actor_index_;
  std::unordered_map<std::string, VertexId> resource_index_;
  std::uint64_t total_weight_ = 0;
};

// Undirected simple graph. Immutable after construction; every operation on
// it is a pure function, so values are freely shared across threads.
class UnipartiteGraph {
 public:
  UnipartiteGraph() = default;
  UnipartiteGraph(std::vector<std::string> labels, std::vector<WeightedEdge> edges);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& label(VertexId v) const { return labels_.at(v); }
  std::optional<VertexId> find(std::string_view label) const;

  std::span<const WeightedEdge> edges() const noexcept { return edges_; }
  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  bool has_edge(VertexId u, VertexId v) const;

  // CSR view for the numeric kernels.
  std::span<const std::uint32_t> csr_offsets() const noexcept { return offsets_; }
  std::span<const VertexId> csr_targets() const noexcept { return targets_; }

 private:
  std::vector<std::string> labels_;
  std::vector<WeightedEdge> edges_;  // canonical u < v, sorted by (u, v)
  std::vector<std::uint32_t> offsets_;
  std::vector<VertexId> targets_;
  std::unordered_map<std::string, VertexId> index_;
};

struct ComponentDecomposition {
  // vertex -> component index; components are numbered by size descending,
  // ties by smallest contained vertex id
  std::vector<std::uint32_t> assignments;
  std::vector<std::size_t> sizes;

  std::size_t count() const noexcept { return sizes.size(); }
};

enum class EgoRadius { One, OnePointFive };

struct EgoNetwork {
  VertexId ego;          // id within the host graph
  EgoRadius radius;
  UnipartiteGraph subgraph;  // {ego} + neighbors, ids re-densified
};

// Folds duplicate (actor, resource) pairs into edge weights. Labels keep
// first-appearance order. Throws "empty record set" on empty input.
BipartiteGraph build_bipartite(
    std::span<const std::pair<std::string, std::string>> records);

ComponentDecomposition connected_components(const UnipartiteGraph& g);

// Induced subgraph on the largest component (component 0 of the
// decomposition). Throws on an empty graph.
UnipartiteGraph largest_component(const UnipartiteGraph& g);

// Edges kept iff both endpoints are kept; ids re-densified in host order.
UnipartiteGraph induced_subgraph(const UnipartiteGraph& g,
                                 std::span<const VertexId> keep);

EgoNetwork ego_network(const UnipartiteGraph& g, VertexId v, EgoRadius radius);

}  // namespace hidden_ties
