#include "scc/dissimilarity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "scc/parallel.hpp"

namespace scc {

DissimilarityMatrix::DissimilarityMatrix(std::size_t n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (n_ == 0) throw std::invalid_argument("dissimilarity matrix requires N >= 1");
  if (values_.size() != n_ * n_) {
    throw std::invalid_argument("dissimilarity matrix values size != N*N");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const double v = values_[i * n_ + j];
      if (!std::isfinite(v) || v < 0.0) {
        throw std::invalid_argument("dissimilarities must be finite and >= 0");
      }
      if (v != values_[j * n_ + i]) {
        throw std::invalid_argument("dissimilarity matrix must be symmetric");
      }
    }
  }
}

DissimilarityMatrix DissimilarityMatrix::from_dataset(const Dataset& d, Metric m,
                                                      int workers) {
  const std::size_t n = d.size();
  std::vector<double> values(n * n, 0.0);
  if (workers <= 0) workers = default_workers();
  parallel_for(n, workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        values[i * n + j] = pairwise_dissimilarity(d.row(i), d.row(j), m);
      }
    }
  });
  // enforce exact symmetry regardless of row evaluation order
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      values[j * n + i] = values[i * n + j];
    }
  }
  return DissimilarityMatrix(n, std::move(values));
}

double DissimilarityMatrix::min_off_diagonal() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      best = std::min(best, (*this)(i, j));
    }
  }
  return best;
}

double DissimilarityMatrix::max_off_diagonal() const {
  double best = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      best = std::max(best, (*this)(i, j));
    }
  }
  return best;
}

}  // namespace scc
