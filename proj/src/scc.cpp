#include "scc/scc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "scc/errors.hpp"
#include "scc/parallel.hpp"
#include "scc/union_find.hpp"

namespace scc {

std::vector<std::pair<std::uint32_t, std::uint32_t>> sub_cluster_edges(
    const ClusterGraph& graph, double tau, int workers, bool present_only) {
  const std::uint32_t k = graph.num_clusters();
  std::vector<std::optional<std::pair<std::uint32_t, double>>> nn(k);
  parallel_for(k, workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t c = begin; c < end; ++c) {
      nn[c] = graph.nearest(static_cast<std::uint32_t>(c), present_only);
    }
  });

  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t c = 0; c < k; ++c) {
    if (!nn[c].has_value() || nn[c]->second > tau) continue;
    const std::uint32_t other = nn[c]->first;
    edges.emplace_back(std::min(c, other), std::max(c, other));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

Partition merge_components(
    const Partition& p,
    std::span<const std::pair<std::uint32_t, std::uint32_t>> edges) {
  UnionFind uf(p.num_clusters);
  for (const auto& [a, b] : edges) {
    if (a >= p.num_clusters || b >= p.num_clusters) {
      throw std::invalid_argument("merge_components: edge references unknown cluster");
    }
    uf.unite(a, b);
  }
  Partition out;
  out.assignment.resize(p.assignment.size());
  for (std::size_t i = 0; i < p.assignment.size(); ++i) {
    out.assignment[i] = uf.find(p.assignment[i]);
  }
  return canonicalize_partition(out);
}

namespace {

// Shared round loop: partition bookkeeping, incremental linkage state, and
// dendrogram assembly. Used by SCC here and by Boruvka rounds in the
// baselines.
class RoundEngine {
 public:
  RoundEngine(ClusterGraph graph, std::size_t num_points, int workers)
      : graph_(std::move(graph)),
        workers_(workers <= 0 ? default_workers() : workers),
        partition_(singleton_partition(num_points)),
        dendrogram_(Dendrogram::leaves_only(static_cast<std::uint32_t>(num_points))),
        node_of_(num_points) {
    for (std::size_t i = 0; i < num_points; ++i) {
      node_of_[i] = static_cast<std::uint32_t>(i);
    }
    partition_.round_index = 0;
    RoundTrace start;
    start.round_index = 0;
    start.threshold = 0.0;
    start.partition = partition_;
    rounds_.push_back(std::move(start));
  }

  std::uint32_t num_clusters() const { return graph_.num_clusters(); }

  // Runs one round at threshold tau; returns whether anything merged.
  bool step(double tau, bool present_only) {
    if (graph_.num_clusters() < 2) return false;
    const auto edges = sub_cluster_edges(graph_, tau, workers_, present_only);
    if (edges.empty()) return false;

    const Partition merged = merge_components(partition_, edges);
    if (merged.num_clusters == partition_.num_clusters) return false;

    // old cluster id -> new cluster id, via any member point
    std::vector<std::uint32_t> old_to_new(partition_.num_clusters);
    for (std::size_t i = 0; i < merged.assignment.size(); ++i) {
      old_to_new[partition_.assignment[i]] = merged.assignment[i];
    }

    std::vector<std::vector<std::uint32_t>> sources(merged.num_clusters);
    for (std::uint32_t c = 0; c < old_to_new.size(); ++c) {
      sources[old_to_new[c]].push_back(c);
    }

    ++round_index_;
    RoundTrace trace;
    trace.round_index = round_index_;
    trace.threshold = tau;
    trace.edge_count = edges.size();

    std::vector<std::uint32_t> new_node_of(merged.num_clusters);
    for (std::uint32_t c = 0; c < merged.num_clusters; ++c) {
      if (sources[c].size() == 1) {
        new_node_of[c] = node_of_[sources[c][0]];
        continue;
      }
      DendrogramNode node;
      node.id = static_cast<std::uint32_t>(dendrogram_.nodes.size());
      node.merge_round = round_index_;
      node.merge_threshold = tau;
      node.leaf_count = 0;
      for (const auto src : sources[c]) {
        node.children.push_back(node_of_[src]);
        node.leaf_count += dendrogram_.nodes[node_of_[src]].leaf_count;
        dendrogram_.nodes[node_of_[src]].parent = node.id;
      }
      new_node_of[c] = node.id;
      dendrogram_.nodes.push_back(std::move(node));
      trace.merges.push_back({sources[c], c});
    }

    graph_.apply_merge(old_to_new, merged.num_clusters);
    partition_ = merged;
    partition_.round_index = round_index_;
    partition_.threshold = tau;
    node_of_ = std::move(new_node_of);

    trace.partition = partition_;
    rounds_.push_back(std::move(trace));
    return true;
  }

  ClusterRun finish() && {
    return {std::move(rounds_), std::move(dendrogram_)};
  }

 private:
  ClusterGraph graph_;
  int workers_;
  Partition partition_;
  Dendrogram dendrogram_;
  std::vector<std::uint32_t> node_of_;
  std::vector<RoundTrace> rounds_;
  int round_index_ = 0;
};

ClusterRun run_scc_engine(ClusterGraph graph, std::size_t num_points,
                          const SccConfig& config) {
  if (config.schedule.values.empty()) {
    throw std::invalid_argument("run_scc: empty threshold schedule");
  }
  const std::uint64_t max_rounds =
      config.max_rounds > 0
          ? config.max_rounds
          : 2 * (static_cast<std::uint64_t>(num_points) - 1) +
                config.schedule.length() + 1;

  RoundEngine engine(std::move(graph), num_points, config.workers);
  std::uint64_t attempted = 0;
  for (const double tau : config.schedule.values) {
    if (engine.num_clusters() < 2) break;
    do {
      if (++attempted > max_rounds) {
        throw ResourceLimitError("run_scc: max_rounds exceeded");
      }
      if (!engine.step(tau, /*present_only=*/false)) break;
    } while (config.mode == SccMode::FixpointPerThreshold);
  }
  return std::move(engine).finish();
}

}  // namespace

ClusterRun run_scc(const NeighborGraph& graph, const SccConfig& config) {
  LinkageSpec spec = config.linkage;
  spec.evaluation = LinkageEval::SparseGraph;
  return run_scc_engine(ClusterGraph::from_graph(graph, spec), graph.size(), config);
}

ClusterRun run_scc(const DissimilarityMatrix& matrix, const SccConfig& config) {
  LinkageSpec spec = config.linkage;
  spec.evaluation = LinkageEval::Dense;
  return run_scc_engine(ClusterGraph::from_matrix(matrix, spec), matrix.size(), config);
}

ClusterRun run_scc(const Dataset& d, Metric m, const SccConfig& config) {
  return run_scc(DissimilarityMatrix::from_dataset(d, m, config.workers), config);
}

std::vector<Partition> rounds_to_partitions(std::span<const RoundTrace> rounds) {
  if (rounds.empty()) throw std::invalid_argument("rounds_to_partitions: no rounds");
  std::vector<Partition> out;
  out.reserve(rounds.size());
  for (const auto& trace : rounds) {
    if (!out.empty() && out.back() == trace.partition) continue;
    out.push_back(trace.partition);
  }
  return out;
}

ClusterRun run_boruvka_rounds(const NeighborGraph& graph, LinkageSpec spec,
                              int max_rounds, int workers) {
  spec.evaluation = LinkageEval::SparseGraph;
  RoundEngine engine(ClusterGraph::from_graph(graph, spec), graph.size(), workers);
  const double inf = std::numeric_limits<double>::infinity();
  for (int r = 0; r < max_rounds; ++r) {
    if (!engine.step(inf, /*present_only=*/true)) break;
  }
  return std::move(engine).finish();
}

}  // namespace scc
