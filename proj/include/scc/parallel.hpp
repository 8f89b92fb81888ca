#pragma once

#include <cstddef>
#include <functional>

namespace scc {

// Worker count from SCC_WORKERS, falling back to hardware concurrency.
int default_workers();

// Runs fn(begin, end) over a static partition of [0, n) into at most
// `workers` contiguous chunks. Chunk boundaries depend only on n and the
// number of launched threads never affects which index lands where, so any
// computation writing to per-index slots is deterministic.
void parallel_for(std::size_t n, int workers,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace scc
