#include <algorithm>

#include "hidden_ties/communities.hpp"
#include "hidden_ties/error.hpp"
#include "hidden_ties/parallel.hpp"

namespace hidden_ties {
namespace {

// neighbours of v with id > v (ascending); vertex-ordered extension counts
// every clique exactly once
std::vector<VertexId> higher_neighbors(const UnipartiteGraph& g, VertexId v) {
  const auto nbrs = g.neighbors(v);
  auto it = std::upper_bound(nbrs.begin(), nbrs.end(), v);
  return {it, nbrs.end()};
}

std::vector<VertexId> intersect_sorted(const std::vector<VertexId>& a,
                                       std::span<const VertexId> b) {
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

// counts[s] += number of cliques of size s rooted in the current branch;
// extension stays vertex-ordered so each clique is reached exactly once
void census_rec(const UnipartiteGraph& g, const std::vector<VertexId>& cands,
                std::size_t depth, std::vector<std::uint64_t>& counts) {
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const VertexId u = cands[i];
    ++counts[depth + 1];
    std::vector<VertexId> next;
    const auto nbrs = g.neighbors(u);
    std::set_intersection(cands.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                          cands.end(), nbrs.begin(), nbrs.end(),
                          std::back_inserter(next));
    census_rec(g, next, depth + 1, counts);
  }
}

// cliques of exactly size k extending a branch of size depth
void count_rec(const UnipartiteGraph& g, const std::vector<VertexId>& cands,
               std::size_t depth, std::size_t k, std::uint64_t& count) {
  if (depth == k) {
    ++count;
    return;
  }
  if (depth + cands.size() < k) return;
  for (VertexId u : cands) {
    std::vector<VertexId> next;
    const auto nbrs = g.neighbors(u);
    auto it = std::upper_bound(cands.begin(), cands.end(), u);
    std::set_intersection(it, cands.end(), nbrs.begin(), nbrs.end(),
                          std::back_inserter(next));
    count_rec(g, next, depth + 1, k, count);
  }
}

void bron_kerbosch(const UnipartiteGraph& g, std::vector<VertexId>& clique,
                   std::vector<VertexId> p, std::vector<VertexId> x,
                   std::vector<std::vector<VertexId>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(clique);
    return;
  }
  // pivot with the most candidates covered, ties to the smallest id
  VertexId pivot = 0;
  std::size_t pivot_cover = 0;
  bool have_pivot = false;
  for (const auto& pool : {p, x}) {
    for (VertexId u : pool) {
      const auto nbrs = g.neighbors(u);
      std::size_t cover = 0;
      for (VertexId w : p)
        if (std::binary_search(nbrs.begin(), nbrs.end(), w)) ++cover;
      if (!have_pivot || cover > pivot_cover) {
        have_pivot = true;
        pivot = u;
        pivot_cover = cover;
      }
    }
  }

  const auto pivot_nbrs = g.neighbors(pivot);
  std::vector<VertexId> frontier;
  for (VertexId u : p)
    if (!std::binary_search(pivot_nbrs.begin(), pivot_nbrs.end(), u))
      frontier.push_back(u);

  for (VertexId u : frontier) {
    const auto nbrs = g.neighbors(u);
    clique.push_back(u);
    bron_kerbosch(g, clique, intersect_sorted(p, nbrs), intersect_sorted(x, nbrs), out);
    clique.pop_back();
    p.erase(std::find(p.begin(), p.end(), u));
    x.insert(std::lower_bound(x.begin(), x.end(), u), u);
  }
}

}  // namespace

std::uint64_t count_k_cliques(const UnipartiteGraph& g, std::size_t k) {
  if (k < 3) throw usage_error("k must be at least 3");
  const std::size_t n = g.vertex_count();
  const std::size_t blocks = block_count(n);
  std::vector<std::uint64_t> partial(blocks, 0);
  parallel_blocks(n, [&](std::size_t block, std::size_t begin, std::size_t end) {
    for (std::size_t v = begin; v < end; ++v)
      count_rec(g, higher_neighbors(g, static_cast<VertexId>(v)), 1, k, partial[block]);
  });
  std::uint64_t total = 0;
  for (std::uint64_t c : partial) total += c;
  return total;
}

std::uint64_t CliqueReport::total() const {
  std::uint64_t sum = 0;
  for (const auto& [k, count] : counts) sum += count;
  return sum;
}

CliqueReport clique_report(const UnipartiteGraph& g, std::size_t min_k) {
  if (min_k < 3) throw usage_error("min_k must be at least 3");
  const std::size_t n = g.vertex_count();

  // census[s] = number of complete s-subsets, every size at once
  const std::size_t blocks = block_count(n);
  std::vector<std::vector<std::uint64_t>> partial(blocks,
                                                  std::vector<std::uint64_t>(n + 1, 0));
  parallel_blocks(n, [&](std::size_t block, std::size_t begin, std::size_t end) {
    for (std::size_t v = begin; v < end; ++v) {
      ++partial[block][1];
      census_rec(g, higher_neighbors(g, static_cast<VertexId>(v)), 1, partial[block]);
    }
  });
  std::vector<std::uint64_t> census(n + 1, 0);
  for (const auto& p : partial)
    for (std::size_t s = 0; s <= n; ++s) census[s] += p[s];

  CliqueReport report;
  for (std::size_t s = n; s > 0; --s) {
    if (census[s] > 0) {
      report.max_clique_size = s;
      report.max_clique_count = census[s];
      break;
    }
  }
  for (std::size_t k = min_k; k <= report.max_clique_size; ++k)
    report.counts[k] = census[k];

  if (n > 0) {
    std::vector<VertexId> all(n);
    for (VertexId v = 0; v < n; ++v) all[v] = v;
    std::vector<VertexId> clique;
    bron_kerbosch(g, clique, std::move(all), {}, report.maximal_cliques);
    std::sort(report.maximal_cliques.begin(), report.maximal_cliques.end(),
              [](const auto& a, const auto& b) {
                if (a.size() != b.size()) return a.size() > b.size();
                return a < b;
              });
  }
  return report;
}

}  // namespace hidden_ties
