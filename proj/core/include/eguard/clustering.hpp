#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eguard/cliques.hpp"
#include "eguard/graph.hpp"

namespace eguard {

/// Heterogeneous guard inventory: counts[i] guards of range ranges[i], with
/// ranges strictly decreasing.
struct GuardFleet {
  std::vector<unsigned> ranges;
  std::vector<unsigned> counts;

  unsigned total_guards() const;

  /// Throws NoGuardsError / InvalidFleetError on a malformed fleet.
  void validate() const;
};

/// One guard's territory. Every pair of member vertices is within
/// guard_range hops in the ORIGINAL graph (ambient distance), which is what
/// lets the guard reach any attacked member from any other member.
struct Cluster {
  int id = 0;
  std::vector<VertexId> vertices;  // sorted, non-empty
  unsigned guard_range = 0;
  int guard_id = 0;
};

struct ClusterPlan {
  std::vector<Cluster> clusters;     // pairwise disjoint
  std::vector<VertexId> uncovered;   // sorted; union with clusters is V
  VertexId vertex_count = 0;
  std::uint64_t source_graph = 0;
  GuardFleet fleet;

  std::size_t covered_count() const;
  bool covers_all() const { return uncovered.empty(); }

  /// Cluster id holding v, or nullopt when v is uncovered.
  std::optional<int> cluster_of(VertexId v) const;
};

enum class TieBreak { kDeterministic, kSeeded };

struct DecomposeOptions {
  TieBreak tie_break = TieBreak::kDeterministic;
  std::uint64_t seed = 0;  // used in seeded mode only
};

/// One guard of range r eternally secures a connected graph exactly when r
/// reaches the diameter. Throws InfeasibleError for disconnected graphs.
bool single_guard_feasible(const Graph& g, unsigned r);

/// Greedy cluster decomposition: enumerate maximal cliques of each relevant
/// graph power, then repeatedly take the clique covering the most uncovered
/// vertices while matching guards' budgets. Clusters receive only the
/// not-yet-covered part of the winning clique, so the plan is a partition of
/// the covered set and the responding guard for any vertex is unique.
ClusterPlan decompose(const Graph& g, const GuardFleet& fleet,
                      const DecomposeOptions& options = {});

/// Covered fraction of the vertex set, in [0, 1].
double coverage_ratio(const ClusterPlan& plan);

}  // namespace eguard
