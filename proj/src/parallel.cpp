#include "scc/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace scc {

int default_workers() {
  if (const char* env = std::getenv("SCC_WORKERS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_for(std::size_t n, int workers,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  const std::size_t w = std::min<std::size_t>(std::max(workers, 1), n);
  if (w == 1) {
    fn(0, n);
    return;
  }
  const std::size_t chunk = (n + w - 1) / w;
  std::vector<std::thread> threads;
  threads.reserve(w - 1);
  for (std::size_t t = 1; t < w; ++t) {
    const std::size_t begin = t * chunk;
    if (begin >= n) break;
    threads.emplace_back(fn, begin, std::min(begin + chunk, n));
  }
  fn(0, std::min(chunk, n));
  for (auto& th : threads) th.join();
}

}  // namespace scc
