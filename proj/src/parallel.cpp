#include "hidden_ties/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace hidden_ties {
namespace {

constexpr std::size_t kMaxBlocks = 64;

}  // namespace

std::size_t worker_count() {
  if (const char* env = std::getenv("HIDDEN_TIES_THREADS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed >= 1) return static_cast<std::size_t>(parsed);
    return 1;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::size_t block_count(std::size_t n) { return std::min(n, kMaxBlocks); }

void parallel_blocks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  const std::size_t blocks = block_count(n);
  if (blocks == 0) return;

  auto bounds = [&](std::size_t b) {
    // even split; boundaries depend only on n
    return std::pair<std::size_t, std::size_t>{n * b / blocks, n * (b + 1) / blocks};
  };

  const std::size_t workers = std::min(worker_count(), blocks);
  if (workers <= 1) {
    for (std::size_t b = 0; b < blocks; ++b) {
      const auto [lo, hi] = bounds(b);
      fn(b, lo, hi);
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= blocks) return;
      const auto [lo, hi] = bounds(b);
      fn(b, lo, hi);
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(drain);
  drain();
  for (auto& t : pool) t.join();
}

}  // namespace hidden_ties
