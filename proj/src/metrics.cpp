#include "hidden_ties/metrics.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>

#include "hidden_ties/error.hpp"
#include "hidden_ties/kernels.hpp"
#include "hidden_ties/parallel.hpp"

namespace hidden_ties {
namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// distances from source into dist (pre-sized to N)
void bfs(const UnipartiteGraph& g, VertexId source, std::vector<std::uint32_t>& dist) {
  std::fill(dist.begin(), dist.end(), kUnreached);
  dist[source] = 0;
  std::vector<VertexId> frontier{source};
  std::vector<VertexId> next;
  while (!frontier.empty()) {
    next.clear();
    for (VertexId v : frontier) {
      for (VertexId w : g.neighbors(v)) {
        if (dist[w] == kUnreached) {
          dist[w] = dist[v] + 1;
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
}

bool is_connected(const UnipartiteGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<std::uint32_t> dist(n);
  bfs(g, 0, dist);
  return std::none_of(dist.begin(), dist.end(),
                      [](std::uint32_t d) { return d == kUnreached; });
}

// per-source totals of BFS distances; throws when disconnected
std::vector<std::uint64_t> farness_all(const UnipartiteGraph& g, const char* op) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint64_t> farness(n, 0);
  std::vector<char> incomplete(block_count(n), 0);

  parallel_blocks(n, [&](std::size_t block, std::size_t begin, std::size_t end) {
    std::vector<std::uint32_t> dist(n);
    for (std::size_t s = begin; s < end; ++s) {
      bfs(g, static_cast<VertexId>(s), dist);
      std::uint64_t total = 0;
      for (std::uint32_t d : dist) {
        if (d == kUnreached) {
          incomplete[block] = 1;
          break;
        }
        total += d;
      }
      farness[s] = total;
    }
  });

  if (std::any_of(incomplete.begin(), incomplete.end(), [](char c) { return c != 0; }))
    throw input_error(std::string(op) + " requires a connected graph; analyze per component");
  return farness;
}

}  // namespace

std::vector<std::size_t> degree_all(const UnipartiteGraph& g) {
  std::vector<std::size_t> degrees(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) degrees[v] = g.degree(v);
  return degrees;
}

std::vector<double> degree_centrality(const UnipartiteGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw input_error("degenerate graph");
  std::vector<double> out(n);
  for (VertexId v = 0; v < n; ++v)
    out[v] = static_cast<double>(g.degree(v)) / static_cast<double>(n - 1);
  return out;
}

std::vector<double> closeness(const UnipartiteGraph& g, Variant variant) {
  const std::size_t n = g.vertex_count();
  const auto farness = farness_all(g, "closeness");
  std::vector<double> out(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    if (farness[v] == 0) continue;  // single-vertex graph
    out[v] = variant == Variant::Raw
                 ? 1.0 / static_cast<double>(farness[v])
                 : static_cast<double>(n - 1) / static_cast<double>(farness[v]);
  }
  return out;
}

std::vector<double> betweenness(const UnipartiteGraph& g, Variant variant) {
  const std::size_t n = g.vertex_count();
  std::vector<double> score(n, 0.0);
  if (n == 0) return score;

  const std::size_t blocks = block_count(n);
  std::vector<std::vector<double>> partial(blocks, std::vector<double>(n, 0.0));

  parallel_blocks(n, [&](std::size_t block, std::size_t begin, std::size_t end) {
    auto& acc = partial[block];
    std::vector<std::uint32_t> dist(n);
    std::vector<double> sigma(n);
    std::vector<double> delta(n);
    std::vector<VertexId> order;
    std::vector<std::vector<VertexId>> preds(n);
    order.reserve(n);

    for (std::size_t s = begin; s < end; ++s) {
      // Brandes: BFS with path counting, then dependency accumulation
      std::fill(dist.begin(), dist.end(), kUnreached);
      std::fill(sigma.begin(), sigma.end(), 0.0);
      std::fill(delta.begin(), delta.end(), 0.0);
      for (auto& p : preds) p.clear();
      order.clear();

      dist[s] = 0;
      sigma[s] = 1.0;
      std::queue<VertexId> queue;
      queue.push(static_cast<VertexId>(s));
      while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop();
        order.push_back(v);
        for (VertexId w : g.neighbors(v)) {
          if (dist[w] == kUnreached) {
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
        for (VertexId p : preds[w])
          delta[p] += sigma[p] / sigma[w] * (1.0 + delta[w]);
        if (w != s) acc[w] += delta[w];
      }
    }
  });

  // merge per-block partials in block order: identical for any thread count
  for (const auto& acc : partial)
    for (std::size_t v = 0; v < n; ++v) score[v] += acc[v];
  for (double& s : score) s /= 2.0;  // each unordered pair counted from both ends

  if (variant == Variant::Normalized) {
    const double factor =
        n >= 3 ? 1.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2)) : 0.0;
    for (double& s : score) s *= factor;
  }
  return score;
}

std::vector<double> eigenvector_centrality(const UnipartiteGraph& g) {
  const std::size_t n = g.vertex_count();
  if (g.edge_count() == 0) throw input_error("edgeless graph");
  if (!is_connected(g))
    throw input_error(
        "eigenvector centrality requires a connected graph; analyze per component");

  const auto& K = kernels::active();
  const std::uint32_t* offsets = g.csr_offsets().data();
  const std::uint32_t* targets = g.csr_targets().data();

  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  std::vector<double> y(n);
  for (int iteration = 0; iteration < 10000; ++iteration) {
    K.spmv_unit(offsets, targets, n, x.data(), y.data());
    // shifted operator A+I: same dominant eigenvector, aperiodic iteration
    K.axpby(1.0, y.data(), 1.0, x.data(), y.data(), n);
    const double sum = K.reduce_add(y.data(), n);
    K.scale(y.data(), n, 1.0 / sum);
    const double change = K.max_abs_diff(x.data(), y.data(), n);
    x.swap(y);
    if (change < 1e-12) break;
  }
  return x;
}

std::vector<double> local_clustering(const UnipartiteGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<double> out(n, 0.0);
  for (VertexId v = 0; v < n; ++v) {
    const auto nbrs = g.neighbors(v);
    const std::size_t d = nbrs.size();
    if (d < 2) continue;
    std::size_t links = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        if (g.has_edge(nbrs[i], nbrs[j])) ++links;
    out[v] = static_cast<double>(links) /
             (static_cast<double>(d) * static_cast<double>(d - 1) / 2.0);
  }
  return out;
}

double density(const UnipartiteGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw input_error("degenerate graph");
  return 2.0 * static_cast<double>(g.edge_count()) /
         (static_cast<double>(n) * static_cast<double>(n - 1));
}

Geodesics geodesics(const UnipartiteGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw input_error("empty graph");

  const std::size_t blocks = block_count(n);
  std::vector<std::uint64_t> sums(blocks, 0);
  std::vector<std::uint32_t> maxima(blocks, 0);
  std::vector<char> incomplete(blocks, 0);

  parallel_blocks(n, [&](std::size_t block, std::size_t begin, std::size_t end) {
    std::vector<std::uint32_t> dist(n);
    for (std::size_t s = begin; s < end; ++s) {
      bfs(g, static_cast<VertexId>(s), dist);
      for (std::uint32_t d : dist) {
        if (d == kUnreached) {
          incomplete[block] = 1;
          return;
        }
        sums[block] += d;
        maxima[block] = std::max(maxima[block], d);
      }
    }
  });

  if (std::any_of(incomplete.begin(), incomplete.end(), [](char c) { return c != 0; }))
    throw input_error("geodesics require a connected graph; analyze per component");

  std::uint64_t ordered_pair_sum = 0;  // both directions; exact integers
  std::uint32_t diameter = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    ordered_pair_sum += sums[b];
    diameter = std::max(diameter, maxima[b]);
  }

  Geodesics out;
  out.diameter = diameter;
  // average over all N^2 ordered pairs, zero self-distances included
  out.average = static_cast<double>(ordered_pair_sum) /
                (static_cast<double>(n) * static_cast<double>(n));
  return out;
}

std::map<std::size_t, double> degree_distribution(const UnipartiteGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw input_error("empty graph");
  std::map<std::size_t, std::size_t> tally;
  for (VertexId v = 0; v < n; ++v) ++tally[g.degree(v)];
  std::map<std::size_t, double> out;
  for (const auto& [degree, count] : tally)
    out[degree] = static_cast<double>(count) / static_cast<double>(n);
  return out;
}

namespace {

// max number of internally vertex-disjoint s-t paths for non-adjacent s, t:
// unit-capacity max flow on the split digraph (v -> v_in, v_out)
std::size_t local_vertex_connectivity(const UnipartiteGraph& g, VertexId s, VertexId t) {
  const std::size_t n = g.vertex_count();
  struct Arc {
    std::uint32_t to;
    std::int32_t cap;
    std::uint32_t rev;
  };
  std::vector<std::vector<Arc>> arcs(2 * n);
  auto add_arc = [&](std::uint32_t from, std::uint32_t to, std::int32_t cap) {
    arcs[from].push_back({to, cap, static_cast<std::uint32_t>(arcs[to].size())});
    arcs[to].push_back({from, 0, static_cast<std::uint32_t>(arcs[from].size() - 1)});
  };
  auto node_in = [](VertexId v) { return 2 * v; };
  auto node_out = [](VertexId v) { return 2 * v + 1; };

  for (VertexId v = 0; v < n; ++v) add_arc(node_in(v), node_out(v), 1);
  for (const auto& e : g.edges()) {
    add_arc(node_out(e.u), node_in(e.v), 1);
    add_arc(node_out(e.v), node_in(e.u), 1);
  }

  const std::uint32_t source = node_out(s);
  const std::uint32_t sink = node_in(t);
  std::size_t flow = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> parent(2 * n);  // node, arc idx

  for (;;) {
    std::fill(parent.begin(), parent.end(), std::pair{UINT32_MAX, UINT32_MAX});
    std::queue<std::uint32_t> queue;
    queue.push(source);
    parent[source] = {source, UINT32_MAX};
    while (!queue.empty() && parent[sink].first == UINT32_MAX) {
      const std::uint32_t v = queue.front();
      queue.pop();
      for (std::uint32_t i = 0; i < arcs[v].size(); ++i) {
        const Arc& a = arcs[v][i];
        if (a.cap > 0 && parent[a.to].first == UINT32_MAX) {
          parent[a.to] = {v, i};
          queue.push(a.to);
        }
      }
    }
    if (parent[sink].first == UINT32_MAX) break;
    for (std::uint32_t v = sink; v != source;) {
      const auto [pv, pi] = parent[v];
      Arc& a = arcs[pv][pi];
      a.cap -= 1;
      arcs[a.to][a.rev].cap += 1;
      v = pv;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

std::size_t connectivity(const UnipartiteGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;
  if (g.edge_count() == n * (n - 1) / 2) return n - 1;  // complete-graph convention

  // Esfahanian-Hakimi: test a min-degree vertex against its non-neighbours,
  // plus non-adjacent pairs among its neighbours
  VertexId pivot = 0;
  for (VertexId v = 1; v < n; ++v)
    if (g.degree(v) < g.degree(pivot)) pivot = v;

  std::size_t best = g.degree(pivot);
  for (VertexId w = 0; w < n; ++w) {
    if (w == pivot || g.has_edge(pivot, w)) continue;
    best = std::min(best, local_vertex_connectivity(g, pivot, w));
  }
  const auto nbrs = g.neighbors(pivot);
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      if (!g.has_edge(nbrs[i], nbrs[j]))
        best = std::min(best, local_vertex_connectivity(g, nbrs[i], nbrs[j]));
  return best;
}

double degree_centralization(const UnipartiteGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3) throw input_error("degenerate graph");
  std::size_t d_max = 0;
  for (VertexId v = 0; v < n; ++v) d_max = std::max(d_max, g.degree(v));
  std::size_t spread = 0;
  for (VertexId v = 0; v < n; ++v) spread += d_max - g.degree(v);
  return static_cast<double>(spread) /
         (static_cast<double>(n - 1) * static_cast<double>(n - 2));
}

MetricsReport aggregate_report(const UnipartiteGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw input_error("empty graph");
  if (!is_connected(g))
    throw input_error("aggregate report requires a connected graph; analyze per component");

  MetricsReport report;
  auto& agg = report.aggregates;
  agg.vertex_count = n;
  agg.edge_count = g.edge_count();
  if (n >= 2) agg.density = density(g);
  const Geodesics geo = geodesics(g);
  agg.diameter = geo.diameter;
  agg.average_geodesic = geo.average;
  agg.connectivity = connectivity(g);
  if (n >= 3) agg.degree_centralization = degree_centralization(g);
  agg.degree_distribution = degree_distribution(g);

  const auto degrees = degree_all(g);
  const auto closeness_raw = closeness(g, Variant::Raw);
  const auto betweenness_raw = betweenness(g, Variant::Raw);
  const auto clustering = local_clustering(g);
  std::vector<double> eigen(n, 0.0);
  if (g.edge_count() >= 1) eigen = eigenvector_centrality(g);

  const double betweenness_factor =
      n >= 3 ? 1.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2)) : 0.0;

  report.vertices.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    auto& row = report.vertices[v];
    row.label = g.label(v);
    row.degree = degrees[v];
    row.degree_centrality =
        n >= 2 ? static_cast<double>(degrees[v]) / static_cast<double>(n - 1) : 0.0;
    row.closeness_raw = closeness_raw[v];
    row.closeness_normalized = closeness_raw[v] * static_cast<double>(n - 1);
    row.betweenness_raw = betweenness_raw[v];
    row.betweenness_normalized = betweenness_raw[v] * betweenness_factor;
    row.eigenvector = eigen[v];
    row.local_clustering = clustering[v];
  }
  return report;
}

}  // namespace hidden_ties
