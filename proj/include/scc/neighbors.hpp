#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "scc/core.hpp"

namespace scc {

// Exact k-nearest-neighbor graph. Per point, the k smallest dissimilarities
// (ties to the lower point index), sorted ascending. No self edges.
struct NeighborGraph {
  int k = 0;
  MetricKind metric = MetricKind::SquaredEuclidean;
  std::vector<std::vector<std::pair<std::uint32_t, double>>> adjacency;

  std::size_t size() const { return adjacency.size(); }
  std::size_t edge_count() const {
    std::size_t total = 0;
    for (const auto& list : adjacency) total += list.size();
    return total;
  }
};

// Exact blocked all-pairs construction, parallel over query points. The
// result is independent of the worker count. Throws on k outside [1, N-1].
NeighborGraph build_knn_graph(const Dataset& d, int k, Metric m, int workers = 0);

}  // namespace scc
