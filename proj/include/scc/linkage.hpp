#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "scc/core.hpp"
#include "scc/dissimilarity.hpp"
#include "scc/neighbors.hpp"

namespace scc {

// Sufficient statistics for the point pairs between two disjoint clusters.
// `present` counts pairs with a known dissimilarity; in dense evaluation that
// is every pair, in sparse-graph evaluation only pairs with a graph edge in
// either direction. pair_count = |A|*|B| is tracked by the caller via sizes.
struct ClusterPairStats {
  double sum = 0.0;
  double min_d = std::numeric_limits<double>::infinity();
  double max_d = -std::numeric_limits<double>::infinity();
  std::uint64_t present = 0;
};

// Stats for (A u C, B) from stats of (A,B) and (C,B) with A and C disjoint.
ClusterPairStats merged_linkage_update(const ClusterPairStats& ab,
                                       const ClusterPairStats& cb);

// Linkage value from stats; pairs beyond `present` are charged
// missing_edge_value (average) or collapse to it (single with no present
// edge, complete with any missing pair).
double linkage_from_stats(const ClusterPairStats& stats, std::uint64_t pair_count,
                          const LinkageSpec& spec);

// From-scratch linkage between two point-id sets; the reference every
// incremental path is tested against. In sparse mode `graph` supplies the
// known pairs; dense mode evaluates the metric on all pairs. Throws on empty
// or overlapping sets.
double linkage_value(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                     const Dataset& d, Metric m, const NeighborGraph* graph,
                     const LinkageSpec& spec);

// ---------------------------------------------------------------------------
// ClusterGraph: mutable cluster-level linkage state for round-based engines
// ---------------------------------------------------------------------------

// Clusters carry canonical ids 0..K-1. Each unordered cluster pair with any
// known point-pair dissimilarity holds one stats edge; merges fold edges via
// merged_linkage_update instead of recomputing from points.
class ClusterGraph {
 public:
  struct Edge {
    std::uint32_t a;
    std::uint32_t b;
    ClusterPairStats stats;
  };

  // Singleton clusters over an all-pairs matrix (dense evaluation).
  static ClusterGraph from_matrix(const DissimilarityMatrix& m, LinkageSpec spec);
  // Singleton clusters over a kNN graph (sparse evaluation); pairs linked in
  // either direction are deduplicated.
  static ClusterGraph from_graph(const NeighborGraph& g, LinkageSpec spec);

  std::uint32_t num_clusters() const { return static_cast<std::uint32_t>(sizes_.size()); }
  std::uint64_t cluster_size(std::uint32_t c) const { return sizes_[c]; }
  const LinkageSpec& spec() const { return spec_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Linkage between two current clusters; pairs with no stats edge evaluate
  // to missing_edge_value.
  double linkage(std::uint32_t a, std::uint32_t b) const;

  // Cluster != q minimizing linkage to q, ties to the lower id. Clusters with
  // no stats edge to q rank at missing_edge_value. If `present_only`, only
  // stats-edge neighbors are considered (no missing fallback). nullopt when
  // fewer than two clusters or no candidate.
  std::optional<std::pair<std::uint32_t, double>> nearest(
      std::uint32_t q, bool present_only = false) const;

  // Collapses clusters according to old_id -> new_id (surjective onto
  // 0..new_count-1); edges internal to a new cluster disappear, parallel
  // edges fold deterministically in (a, b) order.
  void apply_merge(std::span<const std::uint32_t> old_to_new, std::uint32_t new_count);

 private:
  ClusterGraph(LinkageSpec spec, std::vector<std::uint64_t> sizes,
               std::vector<Edge> edges);

  void rebuild_incidence();
  const Edge* find_edge(std::uint32_t a, std::uint32_t b) const;

  LinkageSpec spec_;
  std::vector<std::uint64_t> sizes_;
  std::vector<Edge> edges_;                           // unordered pairs, a < b
  std::vector<std::vector<std::uint32_t>> incident_;  // cluster -> edge ids
};

}  // namespace scc
