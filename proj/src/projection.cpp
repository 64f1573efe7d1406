#include "hidden_ties/projection.hpp"

#include <map>

namespace hidden_ties {

UnipartiteGraph project(const BipartiteGraph& g, ProjectionSide side) {
  const bool actors = side == ProjectionSide::Actors;
  const std::size_t part_size = actors ? g.actor_count() : g.resource_count();
  const std::size_t other_size = actors ? g.resource_count() : g.actor_count();

  std::vector<std::string> labels;
  labels.reserve(part_size);
  for (VertexId v = 0; v < part_size; ++v)
    labels.push_back(actors ? g.actor_label(v) : g.resource_label(v));

  // every member of the other part spans a complete subgraph over its
  // neighbours; folding those pairs counts shared neighbours exactly
  std::map<std::pair<VertexId, VertexId>, std::uint32_t> shared;
  for (VertexId other = 0; other < other_size; ++other) {
    const auto nbrs = actors ? g.resource_neighbors(other) : g.actor_neighbors(other);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j)
        ++shared[{nbrs[i], nbrs[j]}];
  }

  std::vector<WeightedEdge> edges;
  edges.reserve(shared.size());
  for (const auto& [pair, count] : shared)
    edges.push_back({pair.first, pair.second, count});
  return UnipartiteGraph(std::move(labels), std::move(edges));
}

std::pair<UnipartiteGraph, UnipartiteGraph> project_both(const BipartiteGraph& g) {
  return {project(g, ProjectionSide::Actors), project(g, ProjectionSide::Resources)};
}

}  // namespace hidden_ties
