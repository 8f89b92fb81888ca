#pragma once

#include <cstdint>
#include <vector>

#include "scc/core.hpp"

namespace scc {

// Symmetric all-pairs point dissimilarities, stored full for O(1) access.
// Dense-evaluation algorithms and synthetic linkage tables run off this;
// sparse-graph runs never materialize it.
class DissimilarityMatrix {
 public:
  DissimilarityMatrix(std::size_t n, std::vector<double> values);

  static DissimilarityMatrix from_dataset(const Dataset& d, Metric m,
                                          int workers = 0);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const {
    return values_[i * n_ + j];
  }

  double min_off_diagonal() const;
  double max_off_diagonal() const;

 private:
  std::size_t n_;
  std::vector<double> values_;
};

}  // namespace scc
