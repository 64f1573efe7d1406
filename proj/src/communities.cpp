#include "hidden_ties/communities.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>

#include "hidden_ties/error.hpp"
#include "hidden_ties/parallel.hpp"

namespace hidden_ties {

std::size_t Partition::community_count() const {
  std::uint32_t max_index = 0;
  for (std::uint32_t c : assignments) max_index = std::max(max_index, c);
  return assignments.empty() ? 0 : max_index + 1;
}

std::vector<std::vector<VertexId>> Partition::groups() const {
  std::vector<std::vector<VertexId>> out(community_count());
  for (VertexId v = 0; v < assignments.size(); ++v)
    out[assignments[v]].push_back(v);
  return out;
}

double modularity(const UnipartiteGraph& g, std::span<const std::uint32_t> assignments) {
  const std::size_t m = g.edge_count();
  if (m == 0) throw input_error("edgeless graph");
  if (assignments.size() != g.vertex_count())
    throw internal_error("assignment size mismatch");

  std::map<std::uint32_t, std::uint64_t> intra;   // community -> internal edges
  std::map<std::uint32_t, std::uint64_t> degree;  // community -> degree total
  for (const auto& e : g.edges())
    if (assignments[e.u] == assignments[e.v]) ++intra[assignments[e.u]];
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    degree[assignments[v]] += g.degree(v);

  const double two_m = 2.0 * static_cast<double>(m);
  double q = 0.0;
  for (const auto& [community, d] : degree) {
    const auto it = intra.find(community);
    const double e_c = it == intra.end() ? 0.0 : static_cast<double>(it->second);
    const double frac = static_cast<double>(d) / two_m;
    q += e_c / static_cast<double>(m) - frac * frac;
  }
  return q;
}

namespace {

// dense renumbering ordered by smallest contained vertex (first appearance)
Partition finish_partition(const UnipartiteGraph& g, std::vector<std::uint32_t> raw) {
  std::map<std::uint32_t, std::uint32_t> remap;
  std::uint32_t next = 0;
  for (std::uint32_t v = 0; v < raw.size(); ++v) {
    auto [it, inserted] = remap.emplace(raw[v], next);
    if (inserted) ++next;
    raw[v] = it->second;
  }

  Partition p;
  p.assignments = std::move(raw);
  p.modularity = g.edge_count() > 0 ? modularity(g, p.assignments) : 0.0;
  return p;
}

std::vector<std::uint32_t> component_labels(const std::vector<std::vector<VertexId>>& adj) {
  std::vector<std::uint32_t> label(adj.size(), UINT32_MAX);
  std::uint32_t count = 0;
  std::vector<VertexId> stack;
  for (VertexId start = 0; start < adj.size(); ++start) {
    if (label[start] != UINT32_MAX) continue;
    label[start] = count;
    stack.push_back(start);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : adj[v])
        if (label[w] == UINT32_MAX) {
          label[w] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  return label;
}

}  // namespace

Partition girvan_newman(const UnipartiteGraph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (m == 0) throw input_error("edgeless graph");

  // mutable working copy
  std::vector<std::vector<VertexId>> adj(n);
  std::map<std::pair<VertexId, VertexId>, std::size_t> edge_index;
  std::vector<std::pair<VertexId, VertexId>> edge_list(m);
  std::vector<char> alive(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& e = g.edges()[i];
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
    edge_index[{e.u, e.v}] = i;
    edge_list[i] = {e.u, e.v};
  }

  std::vector<double> ebc(m, 0.0);

  // edge betweenness restricted to the given source set; touched edges must
  // have been zeroed by the caller
  auto accumulate_ebc = [&](const std::vector<VertexId>& sources) {
    const std::size_t blocks = block_count(sources.size());
    std::vector<std::vector<double>> partial(blocks, std::vector<double>(m, 0.0));
    parallel_blocks(sources.size(), [&](std::size_t block, std::size_t begin,
                                        std::size_t end) {
      auto& acc = partial[block];
      std::vector<std::uint32_t> dist(n);
      std::vector<double> sigma(n), delta(n);
      std::vector<VertexId> order;
      std::vector<std::vector<VertexId>> preds(n);
      for (std::size_t si = begin; si < end; ++si) {
        const VertexId s = sources[si];
        std::fill(dist.begin(), dist.end(), UINT32_MAX);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : preds) p.clear();
        order.clear();
        dist[s] = 0;
        sigma[s] = 1.0;
        std::queue<VertexId> queue;
        queue.push(s);
        while (!queue.empty()) {
          const VertexId v = queue.front();
          queue.pop();
          order.push_back(v);
          for (VertexId w : adj[v]) {
            if (dist[w] == UINT32_MAX) {
              dist[w] = dist[v] + 1;
              queue.push(w);
            }
            if (dist[w] == dist[v] + 1) {
              sigma[w] += sigma[v];
              preds[w].push_back(v);
            }
          }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
          const VertexId w = *it;
          for (VertexId p : preds[w]) {
            const double c = sigma[p] / sigma[w] * (1.0 + delta[w]);
            delta[p] += c;
            const auto key = p < w ? std::pair{p, w} : std::pair{w, p};
            acc[edge_index.find(key)->second] += c;
          }
        }
      }
    });
    for (const auto& acc : partial)
      for (std::size_t i = 0; i < m; ++i) ebc[i] += acc[i];
  };

  std::vector<VertexId> all_sources(n);
  for (VertexId v = 0; v < n; ++v) all_sources[v] = v;
  accumulate_ebc(all_sources);

  auto components = component_labels(adj);
  std::vector<std::uint32_t> best = components;
  double best_q = modularity(g, components);

  for (std::size_t removed = 0; removed < m; ++removed) {
    // max edge betweenness, ties to the smallest (u, v) pair
    std::size_t pick = SIZE_MAX;
    double pick_score = -1.0;
    for (std::size_t i = 0; i < m; ++i)
      if (alive[i] && ebc[i] > pick_score) {
        pick = i;
        pick_score = ebc[i];
      }
    if (pick == SIZE_MAX) break;

    const auto [u, v] = edge_list[pick];
    alive[pick] = 0;
    std::erase(adj[u], v);
    std::erase(adj[v], u);

    components = component_labels(adj);
    const double q = modularity(g, components);
    if (q > best_q) {
      best_q = q;
      best = components;
    }

    // betweenness only changed inside the touched component(s)
    std::vector<VertexId> sources;
    for (VertexId w = 0; w < n; ++w)
      if (components[w] == components[u] || components[w] == components[v])
        sources.push_back(w);
    for (std::size_t i = 0; i < m; ++i)
      if (alive[i] && (components[edge_list[i].first] == components[u] ||
                       components[edge_list[i].first] == components[v]))
        ebc[i] = 0.0;
    accumulate_ebc(sources);
  }

  return finish_partition(g, std::move(best));
}

namespace {

// shared greedy-agglomeration machinery for CNM and its Wakita-Tsurumi
// variant; community id = smallest member vertex id
Partition greedy_merge(const UnipartiteGraph& g, bool balance_ratio) {
  const std::size_t m = g.edge_count();
  if (m == 0) throw input_error("edgeless graph");
  const std::size_t n = g.vertex_count();

  std::map<std::uint32_t, std::uint64_t> degree_of;
  std::map<std::uint32_t, std::uint64_t> size_of;
  std::map<std::uint32_t, std::map<std::uint32_t, std::uint64_t>> cross;
  for (VertexId v = 0; v < n; ++v) {
    degree_of[v] = g.degree(v);
    size_of[v] = 1;
  }
  for (const auto& e : g.edges()) {
    ++cross[e.u][e.v];
    ++cross[e.v][e.u];
  }

  std::vector<std::uint32_t> assign(n);
  for (std::uint32_t v = 0; v < n; ++v) assign[v] = v;

  const double two_m = 2.0 * static_cast<double>(m);
  auto delta_q = [&](std::uint32_t a, std::uint32_t b, std::uint64_t between) {
    return static_cast<double>(between) / static_cast<double>(m) -
           2.0 * (static_cast<double>(degree_of[a]) / two_m) *
               (static_cast<double>(degree_of[b]) / two_m);
  };

  for (;;) {
    std::uint32_t best_a = 0, best_b = 0;
    double best_score = 0.0;
    bool found = false;
    for (const auto& [a, nbrs] : cross) {
      for (const auto& [b, between] : nbrs) {
        if (b <= a) continue;
        double score = delta_q(a, b, between);
        if (balance_ratio) {
          const double sa = static_cast<double>(size_of[a]);
          const double sb = static_cast<double>(size_of[b]);
          score *= std::min(sa, sb) / std::max(sa, sb);
        }
        if (!found || score > best_score) {
          found = true;
          best_score = score;
          best_a = a;
          best_b = b;
        }
      }
    }
    if (!found || best_score <= 0.0) break;

    // merge best_b into best_a (best_a < best_b keeps the min-member id)
    degree_of[best_a] += degree_of[best_b];
    degree_of.erase(best_b);
    size_of[best_a] += size_of[best_b];
    size_of.erase(best_b);
    for (const auto& [k, c] : cross[best_b]) {
      cross[k].erase(best_b);
      if (k == best_a) continue;
      cross[best_a][k] += c;
      cross[k][best_a] += c;
    }
    cross.erase(best_b);
    if (cross[best_a].empty()) cross.erase(best_a);
    for (std::uint32_t& a : assign)
      if (a == best_b) a = best_a;
  }

  return finish_partition(g, std::move(assign));
}

}  // namespace

Partition clauset_newman_moore(const UnipartiteGraph& g) {
  return greedy_merge(g, /*balance_ratio=*/false);
}

Partition wakita_tsurumi(const UnipartiteGraph& g) {
  return greedy_merge(g, /*balance_ratio=*/true);
}

}  // namespace hidden_ties
