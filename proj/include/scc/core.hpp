#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace scc {

// ---------------------------------------------------------------------------
// Metric
// ---------------------------------------------------------------------------

enum class MetricKind { SquaredEuclidean, Euclidean, CosineDissimilarity };

const char* metric_name(MetricKind kind);
MetricKind metric_from_name(const std::string& name);

struct Metric {
  MetricKind kind = MetricKind::SquaredEuclidean;
};

// Dissimilarity between two equal-length vectors. Always >= 0; cosine
// similarity s is folded into 1-s so every metric merges on "d <= tau".
// Throws std::invalid_argument on dimension mismatch or a zero vector under
// cosine.
double pairwise_dissimilarity(std::span<const double> a, std::span<const double> b,
                              Metric m);

// ---------------------------------------------------------------------------
// Dataset
// ---------------------------------------------------------------------------

// N x D row-major matrix of f64 features with optional integer class labels
// and stable point ids. Immutable after construction; construction validates
// shape, finiteness, label length, and id uniqueness.
class Dataset {
 public:
  Dataset(std::size_t n, std::size_t dim, std::vector<double> points,
          std::vector<std::uint32_t> labels = {}, std::vector<std::uint64_t> ids = {});

  std::size_t size() const { return n_; }
  std::size_t dim() const { return dim_; }

  std::span<const double> row(std::size_t i) const {
    return {points_.data() + i * dim_, dim_};
  }
  const std::vector<double>& points() const { return points_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::uint32_t>& labels() const { return labels_; }
  const std::vector<std::uint64_t>& ids() const { return ids_; }

  // Largest pairwise dissimilarity would be 4 on unit vectors; this rescales
  // every row to unit euclidean norm. Throws on zero rows.
  Dataset normalized() const;

 private:
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> points_;
  std::vector<std::uint32_t> labels_;
  std::vector<std::uint64_t> ids_;
};

// ---------------------------------------------------------------------------
// Partition
// ---------------------------------------------------------------------------

struct Partition {
  std::vector<std::uint32_t> assignment;  // point index -> cluster id
  std::uint32_t num_clusters = 0;
  std::optional<int> round_index;
  std::optional<double> threshold;

  bool operator==(const Partition& other) const {
    return assignment == other.assignment;
  }
};

// Relabels cluster ids to 0..K-1 in order of first appearance. Idempotent.
Partition canonicalize_partition(const Partition& p);

// Partition with every point in its own cluster.
Partition singleton_partition(std::size_t n);

// True if every cluster of `coarse` is a union of clusters of `fine`.
bool is_coarsening_of(const Partition& coarse, const Partition& fine);

// ---------------------------------------------------------------------------
// Dendrogram
// ---------------------------------------------------------------------------

struct DendrogramNode {
  std::uint32_t id = 0;
  std::int64_t parent = -1;             // -1 = root of its tree
  std::vector<std::uint32_t> children;  // empty for leaves
  std::uint32_t leaf_count = 1;
  int merge_round = 0;
  double merge_threshold = std::numeric_limits<double>::quiet_NaN();

  bool is_leaf() const { return children.empty(); }
};

// Laminar forest over points 0..num_points-1. Nodes [0, num_points) are the
// leaves (leaf id == point index); internal nodes follow in creation order.
struct Dendrogram {
  std::uint32_t num_points = 0;
  std::vector<DendrogramNode> nodes;

  static Dendrogram leaves_only(std::uint32_t num_points);

  std::vector<std::uint32_t> roots() const;
  // Point indices under a node, sorted ascending.
  std::vector<std::uint32_t> leaves_under(std::uint32_t node) const;
  // Member sets of all nodes, indexed by node id, each sorted ascending.
  std::vector<std::vector<std::uint32_t>> member_sets() const;

  // Validates parent/child symmetry, leaf counts, laminarity by construction
  // (children partition their parent), and non-decreasing merge rounds.
  // Throws std::logic_error naming the violated property.
  void validate() const;
};

// True iff every cluster of p equals the member set of some node of t. Since
// p is a partition, matching nodes are then automatically disjoint and cover
// the leaves. Throws if p does not cover t's points.
bool tree_consistent_check(const Dendrogram& t, const Partition& p);

// ---------------------------------------------------------------------------
// ThresholdSchedule
// ---------------------------------------------------------------------------

enum class ScheduleKind { Geometric, Linear, Explicit };

// Strictly increasing positive thresholds tau_1..tau_L in dissimilarity
// units. Geometric means exact doubling: values[i] = 2^i * tau0.
struct ThresholdSchedule {
  ScheduleKind kind = ScheduleKind::Explicit;
  double tau0 = 0.0;
  std::vector<double> values;

  std::size_t length() const { return values.size(); }

  static ThresholdSchedule geometric(double tau0, int length);
  static ThresholdSchedule linear(double tau0, double tau_max, int length);
  static ThresholdSchedule explicit_values(std::vector<double> values);
  // length log-spaced values covering [tau_min, tau_max]; the paper-style
  // many-round progression. Stored as Explicit.
  static ThresholdSchedule log_spaced(double tau_min, double tau_max, int length);
};

// ---------------------------------------------------------------------------
// LinkageSpec
// ---------------------------------------------------------------------------

enum class LinkageKind { Average, Single, Complete };
enum class LinkageEval { Dense, SparseGraph };

const char* linkage_name(LinkageKind kind);
LinkageKind linkage_from_name(const std::string& name);

struct LinkageSpec {
  LinkageKind kind = LinkageKind::Average;
  LinkageEval evaluation = LinkageEval::Dense;
  // Dissimilarity charged to point pairs absent from the sparse graph. Must
  // dominate every observable edge; 4 covers squared euclidean on unit
  // vectors, 1 covers cosine dissimilarity.
  double missing_edge_value = 4.0;
};

// Default missing-edge constant per metric; euclidean has no natural bound so
// callers pass the largest observed edge to be doubled.
double default_missing_edge(MetricKind kind, double max_observed_edge = 0.0);

}  // namespace scc
