// Random-walk community agglomeration (Pons-Latapy construction): communities
// carry their t-step walk distribution scaled by 1/sqrt(d(k)); the closest
// adjacent pair (Ward-style delta-sigma) merges until each component is one
// community, and the merge sequence is cut at maximum modularity.

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "hidden_ties/communities.hpp"
#include "hidden_ties/error.hpp"
#include "hidden_ties/kernels.hpp"
#include "hidden_ties/parallel.hpp"

namespace hidden_ties {
namespace {

using Pair = std::pair<std::uint32_t, std::uint32_t>;

Pair canonical(std::uint32_t a, std::uint32_t b) {
  return a < b ? Pair{a, b} : Pair{b, a};
}

}  // namespace

Partition walktrap(const UnipartiteGraph& g, std::size_t walk_length) {
  const std::size_t n = g.vertex_count();
  if (g.edge_count() == 0) throw input_error("edgeless graph");
  if (walk_length < 1) throw usage_error("walk length must be at least 1");

  const auto& K = kernels::active();

  // The reference construction gives every vertex a self-loop weighted like
  // the average incident edge (weight 1 here): the walk stays put with
  // probability 1/(d+1), which keeps it aperiodic on bipartite structures.
  std::vector<double> inv_degree(n, 0.0);
  std::vector<double> inv_sqrt_degree(n, 0.0);
  for (VertexId v = 0; v < n; ++v) {
    const double d = static_cast<double>(g.degree(v));
    if (d > 0.0) {
      inv_degree[v] = 1.0 / (d + 1.0);
      inv_sqrt_degree[v] = 1.0 / std::sqrt(d + 1.0);
    }
  }

  // signature[v][k] = P^t(v -> k) / sqrt(d(k)+1)
  std::vector<std::vector<double>> signature(n);
  const std::uint32_t* offsets = g.csr_offsets().data();
  const std::uint32_t* targets = g.csr_targets().data();
  parallel_blocks(n, [&](std::size_t, std::size_t begin, std::size_t end) {
    std::vector<double> x(n), scaled(n), next(n);
    for (std::size_t v = begin; v < end; ++v) {
      std::fill(x.begin(), x.end(), 0.0);
      x[v] = 1.0;
      for (std::size_t step = 0; step < walk_length; ++step) {
        for (std::size_t w = 0; w < n; ++w) scaled[w] = x[w] * inv_degree[w];
        // next[k] = sum over w adjacent to k of x[w]/(d(w)+1), plus the
        // self-loop term
        K.spmv_unit(offsets, targets, n, scaled.data(), next.data());
        K.axpby(1.0, next.data(), 1.0, scaled.data(), next.data(), n);
        x.swap(next);
      }
      for (std::size_t k = 0; k < n; ++k) x[k] *= inv_sqrt_degree[k];
      signature[v] = x;
    }
  });

  std::map<std::uint32_t, std::uint64_t> size_of;
  std::map<std::uint32_t, std::set<std::uint32_t>> adjacent;
  for (std::uint32_t v = 0; v < n; ++v) size_of[v] = 1;
  for (const auto& e : g.edges()) {
    adjacent[e.u].insert(e.v);
    adjacent[e.v].insert(e.u);
  }

  const double inv_n = 1.0 / static_cast<double>(n);
  auto delta_sigma = [&](std::uint32_t a, std::uint32_t b) {
    const double sa = static_cast<double>(size_of[a]);
    const double sb = static_cast<double>(size_of[b]);
    const double r2 = K.squared_distance(signature[a].data(), signature[b].data(), n);
    return inv_n * (sa * sb / (sa + sb)) * r2;
  };

  std::map<Pair, double> candidates;
  for (const auto& [a, nbrs] : adjacent)
    for (std::uint32_t b : nbrs)
      if (a < b) candidates.emplace(Pair{a, b}, delta_sigma(a, b));

  std::vector<std::uint32_t> assign(n);
  for (std::uint32_t v = 0; v < n; ++v) assign[v] = v;
  std::vector<std::uint32_t> best = assign;
  double best_q = modularity(g, assign);  // singleton start included in the sweep

  while (!candidates.empty()) {
    // closest pair, ties to the smallest (a, b)
    auto best_it = candidates.begin();
    for (auto it = std::next(candidates.begin()); it != candidates.end(); ++it)
      if (it->second < best_it->second) best_it = it;
    const auto [a, b] = best_it->first;  // a < b: merged community keeps id a

    const double sa = static_cast<double>(size_of[a]);
    const double sb = static_cast<double>(size_of[b]);
    K.axpby(sa / (sa + sb), signature[a].data(), sb / (sa + sb), signature[b].data(),
            signature[a].data(), n);
    signature[b].clear();
    signature[b].shrink_to_fit();
    size_of[a] += size_of[b];
    size_of.erase(b);

    adjacent[a].erase(b);
    for (std::uint32_t k : adjacent[b]) {
      if (k == a) continue;
      adjacent[k].erase(b);
      adjacent[k].insert(a);
      adjacent[a].insert(k);
    }
    adjacent.erase(b);
    for (auto it = candidates.begin(); it != candidates.end();) {
      const auto [x, y] = it->first;
      it = (x == a || x == b || y == a || y == b) ? candidates.erase(it) : std::next(it);
    }
    for (std::uint32_t k : adjacent[a])
      candidates.emplace(canonical(a, k), delta_sigma(a, k));
    if (adjacent[a].empty()) adjacent.erase(a);

    for (std::uint32_t& c : assign)
      if (c == b) c = a;

    const double q = modularity(g, assign);
    if (q > best_q) {
      best_q = q;
      best = assign;
    }
  }

  std::map<std::uint32_t, std::uint32_t> remap;
  std::uint32_t next_index = 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    auto [it, inserted] = remap.emplace(best[v], next_index);
    if (inserted) ++next_index;
    best[v] = it->second;
  }
  Partition p;
  p.assignments = std::move(best);
  p.modularity = modularity(g, p.assignments);
  return p;
}

}  // namespace hidden_ties
