#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eguard/clustering.hpp"
#include "eguard/graph.hpp"

namespace eguard {

enum class EventKind { kAttack, kResponse, kViolation };

/// Append-only audit record. Response events carry the hop distance the
/// guard travelled; violations name the uncovered vertex or overloaded
/// cluster that caused them.
struct Event {
  std::uint64_t time = 0;
  EventKind kind = EventKind::kAttack;
  VertexId vertex = 0;
  std::optional<int> guard_id;
  std::optional<Dist> path_length;
  std::optional<int> cluster_id;
  std::string detail;
};

struct GuardPosition {
  int guard_id = 0;
  VertexId vertex = 0;
  unsigned range = 0;
  int cluster_id = 0;
};

/// One attack step: a single vertex, or a simultaneous multi-vertex batch
/// (at most one attack per cluster is defendable).
struct AttackStep {
  std::vector<VertexId> targets;
  bool batch = false;

  static AttackStep single(VertexId v) { return {{v}, false}; }
  static AttackStep simultaneous(std::vector<VertexId> vs) { return {std::move(vs), true}; }
};

/// In-cluster center: the member minimizing the maximum ambient distance to
/// all members; ties go to the lowest vertex index.
VertexId cluster_center(const DistanceMatrix& dm, const Cluster& cluster);

/// Attack/response state machine over a cluster plan. Guards start on their
/// cluster centers; every attack on a covered vertex moves exactly that
/// cluster's guard onto the attacked vertex. Violations are recorded in the
/// event log, never thrown.
class Simulation {
 public:
  Simulation(Graph graph, DistanceMatrix distances, ClusterPlan plan);

  /// Eq-style vertex check: some guard is within range of v.
  bool vertex_secured(VertexId v) const;

  /// All vertices secured. Uncovered vertices fail this unless a guard
  /// happens to be within range.
  bool secure_configuration() const;

  /// Single attack; advances time by one step. Attacks on uncovered
  /// vertices log a violation and move no guard.
  void attack(VertexId v);

  /// Simultaneous attacks, at most one per cluster. Valid batches move all
  /// touched guards in one time step; invalid ones (an uncovered target or
  /// a doubly-attacked cluster) are rejected: a violation is logged and the
  /// state is otherwise unchanged. Returns whether the batch executed.
  bool attack_batch(std::span<const VertexId> targets);

  std::uint64_t time() const { return time_; }
  const std::vector<Event>& log() const { return log_; }
  const std::vector<GuardPosition>& positions() const { return positions_; }
  const ClusterPlan& plan() const { return plan_; }
  const Graph& graph() const { return graph_; }
  const DistanceMatrix& distances() const { return distances_; }

  std::size_t violation_count() const { return violations_; }

 private:
  void log_violation(VertexId vertex, std::optional<int> cluster, std::string detail);
  void verify_configuration();

  Graph graph_;
  DistanceMatrix distances_;
  ClusterPlan plan_;
  std::vector<GuardPosition> positions_;  // one per cluster, index == cluster id
  std::vector<int> cluster_of_;           // vertex -> cluster id, -1 uncovered
  std::uint64_t time_ = 0;
  std::size_t violations_ = 0;
  std::vector<Event> log_;
};

/// Builds the simulation in its initial secure-on-covered-vertices
/// configuration (each guard on its cluster center).
Simulation initial_placement(const Graph& g, const ClusterPlan& plan);

/// Folds single and batch attacks over the simulation. Returns the number of
/// violations logged during the run; stop_on_violation ends the run after
/// the first violating step.
std::size_t run_sequence(Simulation& sim, std::span<const AttackStep> attacks,
                         bool stop_on_violation = false);

}  // namespace eguard
