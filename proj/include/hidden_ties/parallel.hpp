#pragma once

#include <cstddef>
#include <functional>

namespace hidden_ties {

// Worker parallelism cap: HIDDEN_TIES_THREADS if set (clamped to >= 1),
// otherwise std::thread::hardware_concurrency().
std::size_t worker_count();

// Runs fn(block, begin, end) over a partition of [0, n) into contiguous
// blocks. Block boundaries depend only on n — never on the worker count — so
// per-block partial results merged in block order are identical for any
// HIDDEN_TIES_THREADS value. fn must only touch state owned by its block.
void parallel_blocks(std::size_t n,
                     const std::function<void(std::size_t block, std::size_t begin,
                                              std::size_t end)>& fn);

// Number of blocks parallel_blocks uses for a given n.
std::size_t block_count(std::size_t n);

}  // namespace hidden_ties
