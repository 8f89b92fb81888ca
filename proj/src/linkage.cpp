#include "scc/linkage.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace scc {

ClusterPairStats merged_linkage_update(const ClusterPairStats& ab,
                                       const ClusterPairStats& cb) {
  ClusterPairStats out;
  out.sum = ab.sum + cb.sum;
  out.min_d = std::min(ab.min_d, cb.min_d);
  out.max_d = std::max(ab.max_d, cb.max_d);
  out.present = ab.present + cb.present;
  return out;
}

double linkage_from_stats(const ClusterPairStats& stats, std::uint64_t pair_count,
                          const LinkageSpec& spec) {
  if (pair_count == 0) throw std::invalid_argument("linkage over empty cluster");
  const std::uint64_t missing = pair_count - stats.present;
  switch (spec.kind) {
    case LinkageKind::Average:
      return (stats.sum + static_cast<double>(missing) * spec.missing_edge_value) /
             static_cast<double>(pair_count);
    case LinkageKind::Single:
      return stats.present > 0 ? stats.min_d : spec.missing_edge_value;
    case LinkageKind::Complete:
      return missing > 0 ? spec.missing_edge_value
                         : (stats.present > 0 ? stats.max_d : spec.missing_edge_value);
  }
  throw std::invalid_argument("unknown linkage kind");
}

double linkage_value(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                     const Dataset& d, Metric m, const NeighborGraph* graph,
                     const LinkageSpec& spec) {
  if (a.empty() || b.empty()) throw std::invalid_argument("linkage over empty set");
  {
    std::unordered_set<std::uint32_t> seen(a.begin(), a.end());
    for (const auto p : b) {
      if (seen.contains(p)) throw std::invalid_argument("linkage sets overlap");
    }
  }

  std::unordered_set<std::uint64_t> known;
  if (graph != nullptr) {
    for (std::size_t i = 0; i < graph->adjacency.size(); ++i) {
      for (const auto& [j, dist] : graph->adjacency[i]) {
        const std::uint64_t lo = std::min<std::uint64_t>(i, j);
        const std::uint64_t hi = std::max<std::uint64_t>(i, j);
        known.insert(lo << 32 | hi);
      }
    }
  }

  ClusterPairStats stats;
  for (const auto pa : a) {
    for (const auto pb : b) {
      if (graph != nullptr) {
        const std::uint64_t lo = std::min(pa, pb);
        const std::uint64_t hi = std::max(pa, pb);
        if (!known.contains(lo << 32 | hi)) continue;
      }
      const double dist = pairwise_dissimilarity(d.row(pa), d.row(pb), m);
      stats.sum += dist;
      stats.min_d = std::min(stats.min_d, dist);
      stats.max_d = std::max(stats.max_d, dist);
      ++stats.present;
    }
  }
  return linkage_from_stats(stats, static_cast<std::uint64_t>(a.size()) * b.size(),
                            spec);
}

// ---------------------------------------------------------------------------
// ClusterGraph
// ---------------------------------------------------------------------------

ClusterGraph::ClusterGraph(LinkageSpec spec, std::vector<std::uint64_t> sizes,
                           std::vector<Edge> edges)
    : spec_(spec), sizes_(std::move(sizes)), edges_(std::move(edges)) {
  rebuild_incidence();
}

ClusterGraph ClusterGraph::from_matrix(const DissimilarityMatrix& m, LinkageSpec spec) {
  const std::size_t n = m.size();
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      const double dist = m(i, j);
      edges.push_back({i, j, {dist, dist, dist, 1}});
    }
  }
  return ClusterGraph(spec, std::vector<std::uint64_t>(n, 1), std::move(edges));
}

ClusterGraph ClusterGraph::from_graph(const NeighborGraph& g, LinkageSpec spec) {
  const std::size_t n = g.size();
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (std::uint32_t i = 0; i < n; ++i) {
    for (const auto& [j, dist] : g.adjacency[i]) {
      const std::uint32_t a = std::min(i, j);
      const std::uint32_t b = std::max(i, j);
      edges.push_back({a, b, {dist, dist, dist, 1}});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
  // a pair linked in both directions is one known pair
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](const Edge& x, const Edge& y) {
                            return x.a == y.a && x.b == y.b;
                          }),
              edges.end());
  return ClusterGraph(spec, std::vector<std::uint64_t>(n, 1), std::move(edges));
}

void ClusterGraph::rebuild_incidence() {
  incident_.assign(sizes_.size(), {});
  for (std::uint32_t e = 0; e < edges_.size(); ++e) {
    incident_[edges_[e].a].push_back(e);
    incident_[edges_[e].b].push_back(e);
  }
}

const ClusterGraph::Edge* ClusterGraph::find_edge(std::uint32_t a,
                                                  std::uint32_t b) const {
  if (a > b) std::swap(a, b);
  const auto& inc =
      incident_[a].size() <= incident_[b].size() ? incident_[a] : incident_[b];
  for (const auto e : inc) {
    if (edges_[e].a == a && edges_[e].b == b) return &edges_[e];
  }
  return nullptr;
}

double ClusterGraph::linkage(std::uint32_t a, std::uint32_t b) const {
  if (a == b) throw std::invalid_argument("linkage of a cluster with itself");
  const std::uint64_t pair_count = sizes_[a] * sizes_[b];
  const Edge* e = find_edge(a, b);
  return linkage_from_stats(e != nullptr ? e->stats : ClusterPairStats{}, pair_count,
                            spec_);
}

std::optional<std::pair<std::uint32_t, double>> ClusterGraph::nearest(
    std::uint32_t q, bool present_only) const {
  const std::uint32_t k = num_clusters();
  if (k < 2) return std::nullopt;

  std::uint32_t best_id = 0;
  double best_val = std::numeric_limits<double>::infinity();
  bool found = false;
  for (const auto e : incident_[q]) {
    const Edge& edge = edges_[e];
    const std::uint32_t other = edge.a == q ? edge.b : edge.a;
    const double val = linkage_from_stats(edge.stats, sizes_[q] * sizes_[other], spec_);
    if (!found || val < best_val || (val == best_val && other < best_id)) {
      best_id = other;
      best_val = val;
      found = true;
    }
  }
  if (present_only) {
    if (!found) return std::nullopt;
    return std::make_pair(best_id, best_val);
  }
  // clusters without a stats edge sit exactly at missing_edge_value; they win
  // only against a worse-or-tied-with-higher-id best
  if (!found || best_val > spec_.missing_edge_value ||
      (best_val == spec_.missing_edge_value && best_id > 0)) {
    std::unordered_set<std::uint32_t> adjacent;
    adjacent.reserve(incident_[q].size());
    for (const auto e : incident_[q]) {
      const Edge& edge = edges_[e];
      adjacent.insert(edge.a == q ? edge.b : edge.a);
    }
    for (std::uint32_t c = 0; c < k; ++c) {
      if (c == q || adjacent.contains(c)) continue;
      if (!found || spec_.missing_edge_value < best_val ||
          (spec_.missing_edge_value == best_val && c < best_id)) {
        best_id = c;
        best_val = spec_.missing_edge_value;
        found = true;
      }
      break;  // the lowest-id non-adjacent cluster dominates the rest
    }
  }
  if (!found) return std::nullopt;
  return std::make_pair(best_id, best_val);
}

void ClusterGraph::apply_merge(std::span<const std::uint32_t> old_to_new,
                               std::uint32_t new_count) {
  if (old_to_new.size() != sizes_.size()) {
    throw std::invalid_argument("apply_merge: mapping size mismatch");
  }
  std::vector<std::uint64_t> new_sizes(new_count, 0);
  for (std::size_t c = 0; c < old_to_new.size(); ++c) {
    if (old_to_new[c] >= new_count) {
      throw std::invalid_argument("apply_merge: mapped id out of range");
    }
    new_sizes[old_to_new[c]] += sizes_[c];
  }

  std::vector<Edge> merged;
  merged.reserve(edges_.size());
  for (const auto& e : edges_) {
    const std::uint32_t a = old_to_new[e.a];
    const std::uint32_t b = old_to_new[e.b];
    if (a == b) continue;  // became intra-cluster
    merged.push_back({std::min(a, b), std::max(a, b), e.stats});
  }
  std::sort(merged.begin(), merged.end(), [](const Edge& x, const Edge& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
  std::vector<Edge> folded;
  folded.reserve(merged.size());
  for (const auto& e : merged) {
    if (!folded.empty() && folded.back().a == e.a && folded.back().b == e.b) {
      folded.back().stats = merged_linkage_update(folded.back().stats, e.stats);
    } else {
      folded.push_back(e);
    }
  }
  sizes_ = std::move(new_sizes);
  edges_ = std::move(folded);
  rebuild_incidence();
}

}  // namespace scc
