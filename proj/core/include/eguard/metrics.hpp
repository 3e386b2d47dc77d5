#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "eguard/clustering.hpp"
#include "eguard/graph.hpp"

namespace eguard {

/// Average guard travel per attack, analytically and (optionally) by Monte
/// Carlo. partial_coverage flags plans that do not cover every vertex; the
/// analytic value is then taken over covered vertices only.
struct ResponseMetrics {
  double tau_analytic = 0.0;
  std::optional<double> tau_empirical;
  std::vector<std::pair<int, double>> per_cluster_mean;  // (cluster id, rho)
  std::uint64_t sample_count = 0;
  bool partial_coverage = false;
};

/// Mean ambient distance over ordered pairs of distinct cluster members;
/// 0 for a singleton (the guard already sits on the only vertex).
double cluster_mean_distance(const DistanceMatrix& dm, const Cluster& cluster);

/// Expected guard travel for a uniformly random attack: the cluster-size
/// weighted average of per-cluster mean distances.
ResponseMetrics response_metrics(const DistanceMatrix& dm, const ClusterPlan& plan);

double average_response_distance(const DistanceMatrix& dm, const ClusterPlan& plan);

/// Reset: before each attack the guard stands on a uniformly random cluster
/// vertex other than the attacked one, matching the analytic all-pairs
/// average. Stationary: guards stay where the previous response left them.
enum class McConvention { kReset, kStationary };

/// Monte Carlo estimate over `samples` uniformly random single attacks on
/// covered vertices. Reset-convention trials draw independent per-trial
/// seeds from the master seed, so results are reproducible and trials could
/// run in any order. Throws NoSamplesError when samples == 0.
double empirical_response_distance(const Graph& g, const DistanceMatrix& dm,
                                   const ClusterPlan& plan, std::uint64_t samples,
                                   std::uint64_t seed,
                                   McConvention convention = McConvention::kReset);

}  // namespace eguard
