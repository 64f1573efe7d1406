#include "hidden_ties/graph.hpp"

#include <algorithm>
#include <map>

#include "hidden_ties/error.hpp"

namespace hidden_ties {
namespace {

template <typename Edge>
std::pair<std::vector<std::uint32_t>, std::vector<VertexId>> build_csr(
    std::size_t n, const std::vector<Edge>& edges, bool from_second) {
  std::vector<std::uint32_t> offsets(n + 1, 0);
  std::vector<VertexId> targets;
  targets.reserve(edges.size());

  auto src = [&](const Edge& e) { return from_second ? e.v : e.u; };
  auto dst = [&](const Edge& e) { return from_second ? e.u : e.v; };

  for (const Edge& e : edges) ++offsets[src(e) + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  targets.resize(edges.size());
  std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : edges) targets[cursor[src(e)]++] = dst(e);
  return {std::move(offsets), std::move(targets)};
}

}  // namespace

BipartiteGraph::BipartiteGraph(std::vector<std::string> actors,
                               std::vector<std::string> resources,
                               std::vector<BipartiteEdge> edges)
    : actors_(std::move(actors)),
      resources_(std::move(resources)),
      edges_(std::move(edges)) {
  for (VertexId a = 0; a < actors_.size(); ++a) {
    if (actors_[a].empty()) throw input_error("empty label");
    if (!actor_index_.emplace(actors_[a], a).second)
      throw input_error("duplicate actor label: " + actors_[a]);
  }
  for (VertexId r = 0; r < resources_.size(); ++r) {
    if (resources_[r].empty()) throw input_error("empty label");
    if (!resource_index_.emplace(resources_[r], r).second)
      throw input_error("duplicate resource label: " + resources_[r]);
  }

  std::sort(edges_.begin(), edges_.end(), [](const auto& a, const auto& b) {
    return std::pair{a.actor, a.resource} < std::pair{b.actor, b.resource};
  });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.actor >= actors_.size() || e.resource >= resources_.size())
      throw input_error("unknown vertex");
    if (e.weight == 0) throw input_error("edge weight must be positive");
    if (i > 0 && edges_[i - 1].actor == e.actor && edges_[i - 1].resource == e.resource)
      throw input_error("parallel edge rejected");
    total_weight_ += e.weight;
  }

  // CSR in both directions
  std::vector<std::uint32_t> off(actors_.size() + 1, 0);
  for (const auto& e : edges_) ++off[e.actor + 1];
  for (std::size_t i = 0; i < actors_.size(); ++i) off[i + 1] += off[i];
  actor_targets_.resize(edges_.size());
  {
    std::vector<std::uint32_t> cur(off.begin(), off.end() - 1);
    for (const auto& e : edges_) actor_targets_[cur[e.actor]++] = e.resource;
  }
  actor_offsets_ = std::move(off);

  std::vector<std::uint32_t> roff(resources_.size() + 1, 0);
  for (const auto& e : edges_) ++roff[e.resource + 1];
  for (std::size_t i = 0; i < resources_.size(); ++i) roff[i + 1] += roff[i];
  resource_targets_.resize(edges_.size());
  {
    std::vector<std::uint32_t> cur(roff.begin(), roff.end() - 1);
    for (const auto& e : edges_) resource_targets_[cur[e.resource]++] = e.actor;
  }
  resource_offsets_ = std::move(roff);
  for (std::size_t r = 0; r < resources_.size(); ++r)
    std::sort(resource_targets_.begin() + resource_offsets_[r],
              resource_targets_.begin() + resource_offsets_[r + 1]);
}

std::optional<VertexId> BipartiteGraph::find_actor(std::string_view label) const {
  auto it = actor_index_.find(std::string(label));
  if (it == actor_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<VertexId> BipartiteGraph::find_resource(std::string_view label) const {
  auto it = resource_index_.find(std::string(label));
  if (it == resource_index_.end()) return std::nullopt;
  return it->second;
}

std::span<const VertexId> BipartiteGraph::actor_neighbors(VertexId a) const {
  if (a >= actors_.size()) throw input_error("unknown vertex");
  return {actor_targets_.data() + actor_offsets_[a],
          actor_targets_.data() + actor_offsets_[a + 1]};
}

std::span<const VertexId> BipartiteGraph::resource_neighbors(VertexId r) const {
  if (r >= resources_.size()) throw input_error("unknown vertex");
  return {resource_targets_.data() + resource_offsets_[r],
          resource_targets_.data() + resource_offsets_[r + 1]};
}

UnipartiteGraph::UnipartiteGraph(std::vector<std::string> labels,
                                 std::vector<WeightedEdge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  for (VertexId v = 0; v < labels_.size(); ++v) {
    if (labels_[v].empty()) throw input_error("empty label");
    if (!index_.emplace(labels_[v], v).second)
      throw input_error("duplicate label: " + labels_[v]);
  }

  for (auto& e : edges_) {
    if (e.u >= labels_.size() || e.v >= labels_.size())
      throw input_error("unknown vertex");
    if (e.u == e.v) throw input_error("self-loop rejected");
    if (e.weight == 0) throw input_error("edge weight must be positive");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const auto& a, const auto& b) {
    return std::pair{a.u, a.v} < std::pair{b.u, b.v};
  });
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
      throw input_error("parallel edge rejected");

  // symmetric CSR
  offsets_.assign(labels_.size() + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) offsets_[i + 1] += offsets_[i];
  targets_.resize(edges_.size() * 2);
  std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    targets_[cursor[e.u]++] = e.v;
    targets_[cursor[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < labels_.size(); ++v)
    std::sort(targets_.begin() + offsets_[v], targets_.begin() + offsets_[v + 1]);
}

std::optional<VertexId> UnipartiteGraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const VertexId> UnipartiteGraph::neighbors(VertexId v) const {
  if (v >= labels_.size()) throw input_error("unknown vertex");
  return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
}

bool UnipartiteGraph::has_edge(VertexId u, VertexId v) const {
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

BipartiteGraph build_bipartite(
    std::span<const std::pair<std::string, std::string>> records) {
  if (records.empty()) throw input_error("empty record set");

  std::vector<std::string> actors;
  std::vector<std::string> resources;
  std::unordered_map<std::string, VertexId> actor_ids;
  std::unordered_map<std::string, VertexId> resource_ids;
  std::map<std::pair<VertexId, VertexId>, std::uint32_t> weights;

  for (const auto& [actor, resource] : records) {
    if (actor.empty() || resource.empty()) throw input_error("empty label");
    auto [ait, inserted_a] = actor_ids.emplace(actor, actors.size());
    if (inserted_a) actors.push_back(actor);
    auto [rit, inserted_r] = resource_ids.emplace(resource, resources.size());
    if (inserted_r) resources.push_back(resource);
    ++weights[{ait->second, rit->second}];
  }

  std::vector<BipartiteEdge> edges;
  edges.reserve(weights.size());
  for (const auto& [pair, w] : weights)
    edges.push_back({pair.first, pair.second, w});
  return BipartiteGraph(std::move(actors), std::move(resources), std::move(edges));
}

ComponentDecomposition connected_components(const UnipartiteGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> raw(n, UINT32_MAX);
  std::vector<VertexId> stack;
  std::uint32_t raw_count = 0;

  for (VertexId start = 0; start < n; ++start) {
    if (raw[start] != UINT32_MAX) continue;
    const std::uint32_t c = raw_count++;
    raw[start] = c;
    stack.push_back(start);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(v)) {
        if (raw[w] == UINT32_MAX) {
          raw[w] = c;
          stack.push_back(w);
        }
      }
    }
  }

  // order by size descending, tie by smallest contained vertex (== discovery
  // order, since raw indices follow first-seen vertices)
  std::vector<std::size_t> sizes(raw_count, 0);
  for (std::uint32_t c : raw) ++sizes[c];
  std::vector<std::uint32_t> order(raw_count);
  for (std::uint32_t i = 0; i < raw_count; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return sizes[a] > sizes[b]; });

  std::vector<std::uint32_t> rank(raw_count);
  for (std::uint32_t i = 0; i < raw_count; ++i) rank[order[i]] = i;

  ComponentDecomposition out;
  out.assignments.resize(n);
  for (std::size_t v = 0; v < n; ++v) out.assignments[v] = rank[raw[v]];
  out.sizes.resize(raw_count);
  for (std::uint32_t i = 0; i < raw_count; ++i) out.sizes[i] = sizes[order[i]];
  return out;
}

UnipartiteGraph largest_component(const UnipartiteGraph& g) {
  if (g.vertex_count() == 0) throw input_error("empty graph");
  const auto decomposition = connected_components(g);
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (decomposition.assignments[v] == 0) keep.push_back(v);
  return induced_subgraph(g, keep);
}

UnipartiteGraph induced_subgraph(const UnipartiteGraph& g,
                                 std::span<const VertexId> keep) {
  std::vector<VertexId> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (VertexId v : sorted)
    if (v >= g.vertex_count()) throw input_error("unknown vertex");

  std::vector<std::uint32_t> remap(g.vertex_count(), UINT32_MAX);
  std::vector<std::string> labels;
  labels.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    remap[sorted[i]] = static_cast<std::uint32_t>(i);
    labels.push_back(g.label(sorted[i]));
  }

  std::vector<WeightedEdge> edges;
  for (const auto& e : g.edges())
    if (remap[e.u] != UINT32_MAX && remap[e.v] != UINT32_MAX)
      edges.push_back({remap[e.u], remap[e.v], e.weight});
  return UnipartiteGraph(std::move(labels), std::move(edges));
}

EgoNetwork ego_network(const UnipartiteGraph& g, VertexId v, EgoRadius radius) {
  if (v >= g.vertex_count()) throw input_error("unknown vertex");
  const auto nbrs = g.neighbors(v);
  std::vector<VertexId> keep(nbrs.begin(), nbrs.end());
  keep.push_back(v);

  if (radius == EgoRadius::OnePointFive)
    return {v, radius, induced_subgraph(g, keep)};

  // radius ONE: the star around the ego only
  std::sort(keep.begin(), keep.end());
  std::vector<std::uint32_t> remap(g.vertex_count(), UINT32_MAX);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    remap[keep[i]] = static_cast<std::uint32_t>(i);
    labels.push_back(g.label(keep[i]));
  }
  std::vector<WeightedEdge> edges;
  for (const auto& e : g.edges())
    if (e.u == v || e.v == v) edges.push_back({remap[e.u], remap[e.v], e.weight});
  return {v, radius, UnipartiteGraph(std::move(labels), std::move(edges))};
}

}  // namespace hidden_ties
