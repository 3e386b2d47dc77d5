#include "eguard/security.hpp"

#include <algorithm>

#include "eguard/errors.hpp"

namespace eguard {

VertexId cluster_center(const DistanceMatrix& dm, const Cluster& cluster) {
  VertexId best = cluster.vertices.front();
  Dist best_ecc = kUnreachable;
  for (VertexId v : cluster.vertices) {
    Dist ecc = 0;
    for (VertexId u : cluster.vertices) ecc = std::max(ecc, dm.at(v, u));
    if (ecc < best_ecc) {
      best_ecc = ecc;
      best = v;
    }
  }
  return best;
}

Simulation::Simulation(Graph graph, DistanceMatrix distances, ClusterPlan plan)
    : graph_(std::move(graph)), distances_(std::move(distances)), plan_(std::move(plan)) {
  if (plan_.source_graph != graph_.fingerprint() ||
      distances_.source_graph() != graph_.fingerprint())
    throw WrongGraphError("plan or distance matrix belongs to a different graph");

  cluster_of_.assign(graph_.vertex_count(), -1);
  positions_.reserve(plan_.clusters.size());
  for (std::size_t i = 0; i < plan_.clusters.size(); ++i)
    if (plan_.clusters[i].id != static_cast<int>(i))
      throw Error("cluster ids must be dense and ordered");
  for (const auto& cluster : plan_.clusters) {
    for (VertexId v : cluster.vertices) cluster_of_[v] = cluster.id;
    positions_.push_back({cluster.guard_id, cluster_center(distances_, cluster),
                          cluster.guard_range, cluster.id});
  }
}

bool Simulation::vertex_secured(VertexId v) const {
  for (const auto& pos : positions_)
    if (distances_.at(pos.vertex, v) <= pos.range) return true;
  return false;
}

bool Simulation::secure_configuration() const {
  for (VertexId v = 0; v < graph_.vertex_count(); ++v)
    if (!vertex_secured(v)) return false;
  return true;
}

void Simulation::log_violation(VertexId vertex, std::optional<int> cluster, std::string detail) {
  Event e;
  e.time = time_;
  e.kind = EventKind::kViolation;
  e.vertex = vertex;
  e.cluster_id = cluster;
  e.detail = std::move(detail);
  log_.push_back(std::move(e));
  ++violations_;
}

void Simulation::verify_configuration() {
  for (VertexId v = 0; v < graph_.vertex_count(); ++v)
    if (!vertex_secured(v)) {
      log_violation(v, std::nullopt, "configuration insecure after response");
      return;  // one violation per insecure configuration
    }
}

void Simulation::attack(VertexId v) {
  if (v >= graph_.vertex_count()) throw InvalidVertexError("attacked vertex out of range");
  ++time_;
  log_.push_back({time_, EventKind::kAttack, v, std::nullopt, std::nullopt, std::nullopt, {}});

  int ci = cluster_of_[v];
  if (ci < 0) {
    log_violation(v, std::nullopt, "attack on uncovered vertex");
    return;
  }
  GuardPosition& guard = positions_[ci];
  Dist travelled = distances_.at(guard.vertex, v);
  guard.vertex = v;
  log_.push_back({time_, EventKind::kResponse, v, guard.guard_id, travelled, ci, {}});
  verify_configuration();
}

bool Simulation::attack_batch(std::span<const VertexId> targets) {
  if (targets.empty()) return true;  // no-op, time unchanged

  std::vector<VertexId> sorted(targets.begin(), targets.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  bool ok = true;
  std::vector<int> hits(positions_.size(), 0);
  for (VertexId v : sorted) {
    if (v >= graph_.vertex_count()) throw InvalidVertexError("attacked vertex out of range");
    int ci = cluster_of_[v];
    if (ci < 0) {
      log_violation(v, std::nullopt, "batch targets uncovered vertex");
      ok = false;
    } else if (++hits[ci] == 2) {
      log_violation(v, ci,
                    "batch attacks cluster " + std::to_string(ci) + " more than once");
      ok = false;
    }
  }
  if (!ok) return false;  // rejected; state unchanged except the log

  ++time_;
  for (VertexId v : sorted) {
    log_.push_back({time_, EventKind::kAttack, v, std::nullopt, std::nullopt, std::nullopt, {}});
    GuardPosition& guard = positions_[cluster_of_[v]];
    Dist travelled = distances_.at(guard.vertex, v);
    guard.vertex = v;
    log_.push_back(
        {time_, EventKind::kResponse, v, guard.guard_id, travelled, cluster_of_[v], {}});
  }
  verify_configuration();
  return true;
}

Simulation initial_placement(const Graph& g, const ClusterPlan& plan) {
  return Simulation(g, all_pairs_distances(g), plan);
}

std::size_t run_sequence(Simulation& sim, std::span<const AttackStep> attacks,
                         bool stop_on_violation) {
  std::size_t before = sim.violation_count();
  for (const auto& step : attacks) {
    if (step.batch) {
      sim.attack_batch(step.targets);
    } else {
      for (VertexId v : step.targets) sim.attack(v);
    }
    if (stop_on_violation && sim.violation_count() > before) break;
  }
  return sim.violation_count() - before;
}

}  // namespace eguard
