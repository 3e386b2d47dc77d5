#include "eguard/metrics.hpp"

#include <algorithm>

#include "eguard/errors.hpp"
#include "eguard/rng.hpp"
#include "eguard/security.hpp"

namespace eguard {

double cluster_mean_distance(const DistanceMatrix& dm, const Cluster& cluster) {
  const std::size_t k = cluster.vertices.size();
  if (k <= 1) return 0.0;
  std::uint64_t total = 0;
  for (VertexId u : cluster.vertices)
    for (VertexId v : cluster.vertices) total += dm.at(u, v);
  return static_cast<double>(total) / static_cast<double>(k * (k - 1));
}

ResponseMetrics response_metrics(const DistanceMatrix& dm, const ClusterPlan& plan) {
  ResponseMetrics m;
  m.partial_coverage = !plan.covers_all();
  const std::size_t basis = m.partial_coverage ? plan.covered_count()
                                               : static_cast<std::size_t>(plan.vertex_count);
  double sum = 0.0;
  for (const auto& cluster : plan.clusters) {
    const std::size_t k = cluster.vertices.size();
    double ordered_pair_sum = 0.0;
    for (VertexId u : cluster.vertices)
      for (VertexId v : cluster.vertices) ordered_pair_sum += dm.at(u, v);
    // The per-cluster 1/(k-1) factor: a singleton guard travels 0.
    if (k > 1) sum += ordered_pair_sum / static_cast<double>(k - 1);
    m.per_cluster_mean.emplace_back(cluster.id, cluster_mean_distance(dm, cluster));
  }
  m.tau_analytic = basis == 0 ? 0.0 : sum / static_cast<double>(basis);
  return m;
}

double average_response_distance(const DistanceMatrix& dm, const ClusterPlan& plan) {
  return response_metrics(dm, plan).tau_analytic;
}

namespace {

double reset_trials(const DistanceMatrix& dm, const ClusterPlan& plan,
                    const std::vector<VertexId>& covered, const std::vector<int>& cluster_of,
                    std::uint64_t samples, std::uint64_t seed) {
  double total = 0.0;
  for (std::uint64_t t = 0; t < samples; ++t) {
    Rng rng(derive_seed(seed, kStreamMonteCarlo + t));
    VertexId target = covered[rng.below(covered.size())];
    const Cluster& cluster = plan.clusters[cluster_of[target]];
    const auto& members = cluster.vertices;
    if (members.size() == 1) continue;  // guard co-located, distance 0
    // Uniform over members other than the target.
    std::size_t target_pos =
        std::lower_bound(members.begin(), members.end(), target) - members.begin();
    std::size_t idx = rng.below(members.size() - 1);
    if (idx >= target_pos) ++idx;
    total += dm.at(members[idx], target);
  }
  return total / static_cast<double>(samples);
}

double stationary_trials(const Graph& g, const DistanceMatrix& dm, const ClusterPlan& plan,
                         const std::vector<VertexId>& covered, std::uint64_t samples,
                         std::uint64_t seed) {
  Simulation sim(g, dm, plan);
  Rng rng(derive_seed(seed, kStreamMonteCarlo));
  std::uint64_t total = 0;
  for (std::uint64_t t = 0; t < samples; ++t) {
    VertexId target = covered[rng.below(covered.size())];
    std::size_t log_size = sim.log().size();
    sim.attack(target);
    for (std::size_t i = log_size; i < sim.log().size(); ++i)
      if (sim.log()[i].kind == EventKind::kResponse) total += *sim.log()[i].path_length;
  }
  return static_cast<double>(total) / static_cast<double>(samples);
}

}  // namespace

double empirical_response_distance(const Graph& g, const DistanceMatrix& dm,
                                   const ClusterPlan& plan, std::uint64_t samples,
                                   std::uint64_t seed, McConvention convention) {
  if (samples == 0) throw NoSamplesError("empirical response distance needs >= 1 sample");

  std::vector<VertexId> covered;
  std::vector<int> cluster_of(plan.vertex_count, -1);
  for (const auto& cluster : plan.clusters)
    for (VertexId v : cluster.vertices) {
      covered.push_back(v);
      cluster_of[v] = cluster.id;
    }
  std::sort(covered.begin(), covered.end());
  if (covered.empty()) return 0.0;

  if (convention == McConvention::kReset)
    return reset_trials(dm, plan, covered, cluster_of, samples, seed);
  return stationary_trials(g, dm, plan, covered, samples, seed);
}

}  // namespace eguard
