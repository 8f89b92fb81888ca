#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "scc/core.hpp"
#include "scc/dissimilarity.hpp"
#include "scc/linkage.hpp"
#include "scc/neighbors.hpp"

namespace scc {

enum class SccMode { FixpointPerThreshold, OneRoundPerThreshold };

struct SccConfig {
  ThresholdSchedule schedule;
  LinkageSpec linkage;
  SccMode mode = SccMode::OneRoundPerThreshold;
  // Safety cap on attempted rounds; 0 means 2*(N-1) + L, which fixpoint mode
  // can genuinely need.
  std::uint64_t max_rounds = 0;
  int workers = 0;
};

// One component collapse: the previous round's cluster ids and the id they
// became in the new partition.
struct ComponentMerge {
  std::vector<std::uint32_t> sources;
  std::uint32_t target = 0;
};

struct RoundTrace {
  int round_index = 0;
  double threshold = 0.0;
  Partition partition;
  std::vector<ComponentMerge> merges;
  std::uint64_t edge_count = 0;
};

struct ClusterRun {
  std::vector<RoundTrace> rounds;  // rounds[0] is the singleton partition
  Dendrogram dendrogram;
};

// Undirected cluster edges at threshold tau: {A,B} present iff
// linkage(A,B) <= tau and B is A's nearest cluster or A is B's. Sorted pairs
// (a < b), deduplicated. present_only restricts nearest-neighbor candidates
// to clusters sharing a stats edge and is what Boruvka-style rounds use.
std::vector<std::pair<std::uint32_t, std::uint32_t>> sub_cluster_edges(
    const ClusterGraph& graph, double tau, int workers = 1, bool present_only = false);

// Connected components of the cluster-level edge set become single clusters;
// untouched clusters pass through. Output is canonical (first-appearance
// ids). Throws on out-of-range edge endpoints.
Partition merge_components(const Partition& p,
                           std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);

// Threshold-scheduled sub-cluster component clustering over a prebuilt kNN
// graph (sparse linkage evaluation) or an explicit dissimilarity matrix
// (dense evaluation). Fixpoint mode repeats each threshold until a round
// merges nothing, as the round/threshold bookkeeping of the underlying
// algorithm prescribes; one-round mode spends exactly one round per
// threshold. Throws ResourceLimitError when max_rounds is exhausted.
ClusterRun run_scc(const NeighborGraph& graph, const SccConfig& config);
ClusterRun run_scc(const DissimilarityMatrix& matrix, const SccConfig& config);
// Convenience: dense evaluation straight from a dataset.
ClusterRun run_scc(const Dataset& d, Metric m, const SccConfig& config);

// Distinct per-round partitions in order, starting with singletons.
std::vector<Partition> rounds_to_partitions(std::span<const RoundTrace> rounds);

// Thresholdless rounds where every cluster reaches for its nearest
// stats-edge neighbor; the engine behind Boruvka-style Affinity clustering.
ClusterRun run_boruvka_rounds(const NeighborGraph& graph, LinkageSpec spec,
                              int max_rounds, int workers = 0);

}  // namespace scc
