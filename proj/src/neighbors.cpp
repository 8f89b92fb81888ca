#include "scc/neighbors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "scc/kernels.hpp"
#include "scc/parallel.hpp"

namespace scc {

namespace {

// Bounded candidate buffer keeping the k smallest (dist, idx) pairs. Push is
// O(k) against the current worst entry; candidates arrive in index order so
// the final sort is the only tie-sensitive step and uses (dist, idx).
class TopK {
 public:
  explicit TopK(std::size_t k) : k_(k) { entries_.reserve(k + 1); }

  void push(double dist, std::uint32_t idx) {
    if (entries_.size() < k_) {
      entries_.emplace_back(dist, idx);
      if (entries_.size() == k_) {
        worst_ = worst_position();
      }
      return;
    }
    const auto& w = entries_[worst_];
    if (dist > w.first || (dist == w.first && idx > w.second)) return;
    entries_[worst_] = {dist, idx};
    worst_ = worst_position();
  }

  std::vector<std::pair<std::uint32_t, double>> sorted() {
    std::sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first < b.first : a.second < b.second;
    });
    std::vector<std::pair<std::uint32_t, double>> out;
    out.reserve(entries_.size());
    for (const auto& [dist, idx] : entries_) out.emplace_back(idx, dist);
    return out;
  }

 private:
  std::size_t worst_position() const {
    std::size_t pos = 0;
    for (std::size_t i = 1; i < entries_.size(); ++i) {
      const auto& a = entries_[i];
      const auto& b = entries_[pos];
      if (a.first > b.first || (a.first == b.first && a.second > b.second)) pos = i;
    }
    return pos;
  }

  std::size_t k_;
  std::size_t worst_ = 0;
  std::vector<std::pair<double, std::uint32_t>> entries_;
};

}  // namespace

NeighborGraph build_knn_graph(const Dataset& d, int k, Metric m, int workers) {
  const std::size_t n = d.size();
  if (k < 1 || static_cast<std::size_t>(k) > n - 1) {
    throw std::invalid_argument("build_knn_graph: k must be in [1, N-1]");
  }
  if (workers <= 0) workers = default_workers();

  // cosine norms are shared across all pairs; computing them once keeps the
  // per-pair arithmetic identical to pairwise_dissimilarity
  std::vector<double> norms;
  if (m.kind == MetricKind::CosineDissimilarity) {
    norms.resize(n);
    const auto& ops = kernels::active();
    for (std::size_t i = 0; i < n; ++i) {
      const auto r = d.row(i);
      norms[i] = std::sqrt(ops.dot(r.data(), r.data(), r.size()));
      if (norms[i] == 0.0) {
        throw std::invalid_argument("cosine dissimilarity undefined for zero vector");
      }
    }
  }

  NeighborGraph graph;
  graph.k = k;
  graph.metric = m.kind;
  graph.adjacency.resize(n);

  parallel_for(n, workers, [&](std::size_t begin, std::size_t end) {
    const auto& ops = kernels::active();
    const std::size_t dim = d.dim();
    for (std::size_t i = begin; i < end; ++i) {
      TopK top(static_cast<std::size_t>(k));
      const double* a = d.row(i).data();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const double* b = d.row(j).data();
        double dist;
        switch (m.kind) {
          case MetricKind::SquaredEuclidean:
            dist = ops.squared_euclidean(a, b, dim);
            break;
          case MetricKind::Euclidean:
            dist = std::sqrt(ops.squared_euclidean(a, b, dim));
            break;
          case MetricKind::CosineDissimilarity: {
            const double denom = norms[i] * norms[j];
            dist = 1.0 - ops.dot(a, b, dim) / denom;
            if (dist < 0.0) dist = 0.0;
            break;
          }
        }
        top.push(dist, static_cast<std::uint32_t>(j));
      }
      graph.adjacency[i] = top.sorted();
    }
  });
  return graph;
}

}  // namespace scc
