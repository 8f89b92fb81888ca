#include "scc/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "scc/kernels.hpp"

namespace scc {

// ---------------------------------------------------------------------------
// Metric
// ---------------------------------------------------------------------------

const char* metric_name(MetricKind kind) {
  switch (kind) {
    case MetricKind::SquaredEuclidean:
      return "sqeuclidean";
    case MetricKind::Euclidean:
      return "euclidean";
    case MetricKind::CosineDissimilarity:
      return "cosine";
  }
  return "unknown";
}

MetricKind metric_from_name(const std::string& name) {
  if (name == "sqeuclidean") return MetricKind::SquaredEuclidean;
  if (name == "euclidean") return MetricKind::Euclidean;
  if (name == "cosine") return MetricKind::CosineDissimilarity;
  throw std::invalid_argument("unknown metric: " + name);
}

double pairwise_dissimilarity(std::span<const double> a, std::span<const double> b,
                              Metric m) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("pairwise_dissimilarity: dimension mismatch");
  }
  const auto& ops = kernels::active();
  switch (m.kind) {
    case MetricKind::SquaredEuclidean:
      return ops.squared_euclidean(a.data(), b.data(), a.size());
    case MetricKind::Euclidean:
      return std::sqrt(ops.squared_euclidean(a.data(), b.data(), a.size()));
    case MetricKind::CosineDissimilarity: {
      const double na = std::sqrt(ops.dot(a.data(), a.data(), a.size()));
      const double nb = std::sqrt(ops.dot(b.data(), b.data(), b.size()));
      const double denom = na * nb;
      if (denom == 0.0) {
        throw std::invalid_argument("cosine dissimilarity undefined for zero vector");
      }
      const double d = 1.0 - ops.dot(a.data(), b.data(), a.size()) / denom;
      return d < 0.0 ? 0.0 : d;  // clamp rounding excursions below zero
    }
  }
  throw std::invalid_argument("unknown metric kind");
}

// ---------------------------------------------------------------------------
// Dataset
// ---------------------------------------------------------------------------

Dataset::Dataset(std::size_t n, std::size_t dim, std::vector<double> points,
                 std::vector<std::uint32_t> labels, std::vector<std::uint64_t> ids)
    : n_(n), dim_(dim), points_(std::move(points)), labels_(std::move(labels)),
      ids_(std::move(ids)) {
  if (n_ == 0 || dim_ == 0) {
    throw std::invalid_argument("dataset requires N >= 1 and D >= 1");
  }
  if (points_.size() != n_ * dim_) {
    throw std::invalid_argument("dataset points size != N*D");
  }
  for (const double v : points_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("dataset contains non-finite value");
    }
  }
  if (!labels_.empty() && labels_.size() != n_) {
    throw std::invalid_argument("labels length != N");
  }
  if (ids_.empty()) {
    ids_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) ids_[i] = i;
  } else if (ids_.size() != n_) {
    throw std::invalid_argument("ids length != N");
  } else {
    std::unordered_set<std::uint64_t> seen(ids_.begin(), ids_.end());
    if (seen.size() != n_) {
      throw std::invalid_argument("point ids are not unique");
    }
  }
}

Dataset Dataset::normalized() const {
  std::vector<double> scaled(points_);
  const auto& ops = kernels::active();
  for (std::size_t i = 0; i < n_; ++i) {
    double* r = scaled.data() + i * dim_;
    const double norm = std::sqrt(ops.dot(r, r, dim_));
    if (norm == 0.0) {
      throw std::invalid_argument("cannot normalize zero row");
    }
    for (std::size_t j = 0; j < dim_; ++j) r[j] /= norm;
  }
  return Dataset(n_, dim_, std::move(scaled), labels_, ids_);
}

// ---------------------------------------------------------------------------
// Partition
// ---------------------------------------------------------------------------

Partition canonicalize_partition(const Partition& p) {
  Partition out;
  out.assignment.resize(p.assignment.size());
  out.round_index = p.round_index;
  out.threshold = p.threshold;
  std::unordered_map<std::uint32_t, std::uint32_t> relabel;
  relabel.reserve(p.assignment.size());
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < p.assignment.size(); ++i) {
    auto [it, inserted] = relabel.try_emplace(p.assignment[i], next);
    if (inserted) ++next;
    out.assignment[i] = it->second;
  }
  out.num_clusters = next;
  return out;
}

Partition singleton_partition(std::size_t n) {
  Partition p;
  p.assignment.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.assignment[i] = static_cast<std::uint32_t>(i);
  p.num_clusters = static_cast<std::uint32_t>(n);
  return p;
}

bool is_coarsening_of(const Partition& coarse, const Partition& fine) {
  if (coarse.assignment.size() != fine.assignment.size()) return false;
  // every fine cluster must map into exactly one coarse cluster
  std::unordered_map<std::uint32_t, std::uint32_t> image;
  for (std::size_t i = 0; i < fine.assignment.size(); ++i) {
    auto [it, inserted] = image.try_emplace(fine.assignment[i], coarse.assignment[i]);
    if (!inserted && it->second != coarse.assignment[i]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Dendrogram
// ---------------------------------------------------------------------------

Dendrogram Dendrogram::leaves_only(std::uint32_t num_points) {
  Dendrogram d;
  d.num_points = num_points;
  d.nodes.resize(num_points);
  for (std::uint32_t i = 0; i < num_points; ++i) {
    d.nodes[i].id = i;
  }
  return d;
}

std::vector<std::uint32_t> Dendrogram::roots() const {
  std::vector<std::uint32_t> out;
  for (const auto& node : nodes) {
    if (node.parent < 0) out.push_back(node.id);
  }
  return out;
}

std::vector<std::uint32_t> Dendrogram::leaves_under(std::uint32_t node) const {
  std::vector<std::uint32_t> out;
  std::vector<std::uint32_t> stack{node};
  while (!stack.empty()) {
    const std::uint32_t cur = stack.back();
    stack.pop_back();
    if (nodes[cur].is_leaf()) {
      out.push_back(cur);
    } else {
      stack.insert(stack.end(), nodes[cur].children.begin(), nodes[cur].children.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::uint32_t>> Dendrogram::member_sets() const {
  std::vector<std::vector<std::uint32_t>> sets(nodes.size());
  // nodes are created bottom-up, so children precede parents
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].is_leaf()) {
      sets[i] = {static_cast<std::uint32_t>(i)};
      continue;
    }
    std::size_t total = 0;
    for (const auto c : nodes[i].children) total += sets[c].size();
    sets[i].reserve(total);
    for (const auto c : nodes[i].children) {
      sets[i].insert(sets[i].end(), sets[c].begin(), sets[c].end());
    }
    std::sort(sets[i].begin(), sets[i].end());
  }
  return sets;
}

void Dendrogram::validate() const {
  if (nodes.size() < num_points) throw std::logic_error("dendrogram: missing leaves");
  std::vector<std::uint32_t> leaf_counts(nodes.size(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& node = nodes[i];
    if (node.id != i) throw std::logic_error("dendrogram: id/index mismatch");
    if (i < num_points) {
      if (!node.is_leaf()) throw std::logic_error("dendrogram: leaf with children");
      leaf_counts[i] = 1;
    } else {
      if (node.children.size() < 2) {
        throw std::logic_error("dendrogram: internal node with < 2 children");
      }
      std::uint32_t sum = 0;
      for (const auto c : node.children) {
        if (c >= i) throw std::logic_error("dendrogram: child created after parent");
        if (nodes[c].parent != static_cast<std::int64_t>(i)) {
          throw std::logic_error("dendrogram: parent/child mismatch");
        }
        if (nodes[c].merge_round > node.merge_round) {
          throw std::logic_error("dendrogram: merge_round decreases toward root");
        }
        sum += leaf_counts[c];
      }
      leaf_counts[i] = sum;
    }
    if (node.leaf_count != leaf_counts[i]) {
      throw std::logic_error("dendrogram: leaf_count mismatch");
    }
  }
  // every leaf reachable from exactly one root
  std::uint32_t covered = 0;
  for (const auto& node : nodes) {
    if (node.parent < 0) covered += node.leaf_count;
  }
  if (covered != num_points) {
    throw std::logic_error("dendrogram: roots do not cover leaves exactly once");
  }
}

bool tree_consistent_check(const Dendrogram& t, const Partition& p) {
  if (p.assignment.size() != t.num_points) {
    throw std::invalid_argument("tree_consistent_check: point count mismatch");
  }
  const auto sets = t.member_sets();
  std::map<std::vector<std::uint32_t>, std::uint32_t> by_members;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    by_members.emplace(sets[i], static_cast<std::uint32_t>(i));
  }
  const Partition canon = canonicalize_partition(p);
  std::vector<std::vector<std::uint32_t>> clusters(canon.num_clusters);
  for (std::size_t i = 0; i < canon.assignment.size(); ++i) {
    clusters[canon.assignment[i]].push_back(static_cast<std::uint32_t>(i));
  }
  for (const auto& cluster : clusters) {
    if (!by_members.contains(cluster)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// ThresholdSchedule
// ---------------------------------------------------------------------------

namespace {

void check_schedule(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("schedule must be non-empty");
  double prev = 0.0;
  for (const double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("schedule thresholds must be finite and > 0");
    }
    if (v <= prev) throw std::invalid_argument("schedule must be strictly increasing");
    prev = v;
  }
}

}  // namespace

ThresholdSchedule ThresholdSchedule::geometric(double tau0, int length) {
  if (length < 1) throw std::invalid_argument("schedule length must be >= 1");
  ThresholdSchedule s;
  s.kind = ScheduleKind::Geometric;
  s.tau0 = tau0;
  s.values.resize(length);
  double v = tau0;
  for (int i = 0; i < length; ++i, v *= 2.0) s.values[i] = v;
  check_schedule(s.values);
  return s;
}

ThresholdSchedule ThresholdSchedule::linear(double tau0, double tau_max, int length) {
  if (length < 1) throw std::invalid_argument("schedule length must be >= 1");
  ThresholdSchedule s;
  s.kind = ScheduleKind::Linear;
  s.tau0 = tau0;
  s.values.resize(length);
  if (length == 1) {
    s.values[0] = tau0;
  } else {
    const double step = (tau_max - tau0) / (length - 1);
    for (int i = 0; i < length; ++i) s.values[i] = tau0 + step * i;
    s.values.back() = tau_max;
  }
  check_schedule(s.values);
  return s;
}

ThresholdSchedule ThresholdSchedule::explicit_values(std::vector<double> values) {
  ThresholdSchedule s;
  s.kind = ScheduleKind::Explicit;
  s.values = std::move(values);
  check_schedule(s.values);
  s.tau0 = s.values.front();
  return s;
}

ThresholdSchedule ThresholdSchedule::log_spaced(double tau_min, double tau_max,
                                                int length) {
  if (length < 1) throw std::invalid_argument("schedule length must be >= 1");
  if (!(tau_min > 0.0) || tau_max < tau_min) {
    throw std::invalid_argument("log_spaced requires 0 < tau_min <= tau_max");
  }
  std::vector<double> values(length);
  if (length == 1) {
    values[0] = tau_min;
  } else {
    const double ratio = std::log(tau_max / tau_min) / (length - 1);
    for (int i = 0; i < length; ++i) values[i] = tau_min * std::exp(ratio * i);
    values.front() = tau_min;
    values.back() = tau_max;
  }
  return explicit_values(std::move(values));
}

// ---------------------------------------------------------------------------
// LinkageSpec
// ---------------------------------------------------------------------------

const char* linkage_name(LinkageKind kind) {
  switch (kind) {
    case LinkageKind::Average:
      return "average";
    case LinkageKind::Single:
      return "single";
    case LinkageKind::Complete:
      return "complete";
  }
  return "unknown";
}

LinkageKind linkage_from_name(const std::string& name) {
  if (name == "average") return LinkageKind::Average;
  if (name == "single") return LinkageKind::Single;
  if (name == "complete") return LinkageKind::Complete;
  throw std::invalid_argument("unknown linkage: " + name);
}

double default_missing_edge(MetricKind kind, double max_observed_edge) {
  switch (kind) {
    case MetricKind::SquaredEuclidean:
      return 4.0;
    case MetricKind::CosineDissimilarity:
      return 1.0;
    case MetricKind::Euclidean:
      return 2.0 * max_observed_edge;
  }
  return 4.0;
}

}  // namespace scc
