#include "eguard/clustering.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "eguard/errors.hpp"
#include "eguard/rng.hpp"

namespace eguard {

unsigned GuardFleet::total_guards() const {
  return std::accumulate(counts.begin(), counts.end(), 0u);
}

void GuardFleet::validate() const {
  if (ranges.empty() || total_guards() == 0) throw NoGuardsError("fleet has no guards");
  if (ranges.size() != counts.size())
    throw InvalidFleetError("ranges and counts differ in length");
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    if (ranges[i] == 0) throw InvalidFleetError("guard range must be >= 1");
    if (counts[i] == 0) throw InvalidFleetError("guard count must be >= 1");
    if (i > 0 && ranges[i] >= ranges[i - 1])
      throw InvalidFleetError("ranges must be strictly decreasing");
  }
}

std::size_t ClusterPlan::covered_count() const {
  std::size_t c = 0;
  for (const auto& cl : clusters) c += cl.vertices.size();
  return c;
}

std::optional<int> ClusterPlan::cluster_of(VertexId v) const {
  for (const auto& cl : clusters)
    if (std::binary_search(cl.vertices.begin(), cl.vertices.end(), v)) return cl.id;
  return std::nullopt;
}

bool single_guard_feasible(const Graph& g, unsigned r) {
  Dist d = diameter(g);
  if (d == kUnreachable)
    throw InfeasibleError("no single guard can reach all components of a disconnected graph");
  return r >= d;
}

namespace {

struct Candidate {
  std::size_t range_class;  // index into fleet.ranges
  std::size_t clique_index;
};

}  // namespace

ClusterPlan decompose(const Graph& g, const GuardFleet& fleet, const DecomposeOptions& options) {
  fleet.validate();

  const VertexId n = g.vertex_count();
  const std::size_t class_count = fleet.ranges.size();

  DistanceMatrix dm = all_pairs_distances(g);

  // Per-range maximal clique decompositions, plus bitset mirrors for fast
  // uncovered-intersection counting.
  std::vector<CliqueSet> per_range(class_count);
  std::vector<std::vector<Bitset>> per_range_bits(class_count);
  for (std::size_t i = 0; i < class_count; ++i) {
    per_range[i] = maximal_cliques(graph_power(g, fleet.ranges[i]));
    per_range_bits[i].reserve(per_range[i].size());
    for (const auto& clique : per_range[i].cliques) {
      Bitset b(n);
      for (VertexId v : clique) b.set(v);
      per_range_bits[i].push_back(std::move(b));
    }
  }

  // Guard ids are grouped by range class and handed out in order.
  std::vector<int> id_offset(class_count, 0);
  for (std::size_t i = 1; i < class_count; ++i)
    id_offset[i] = id_offset[i - 1] + static_cast<int>(fleet.counts[i - 1]);

  Bitset uncovered(n);
  uncovered.set_all();

  std::vector<unsigned> used(class_count, 0);
  unsigned assigned = 0;
  const unsigned total = fleet.total_guards();

  Rng tie_rng(derive_seed(options.seed, kStreamTieBreak));

  ClusterPlan plan;
  plan.vertex_count = n;
  plan.source_graph = g.fingerprint();
  plan.fleet = fleet;

  while (assigned < total && uncovered.any()) {
    // Scan classes smallest range first so equal-gain ties resolve toward
    // cheap guards; within a class, canonical clique order decides.
    std::size_t best_gain = 0;
    std::vector<Candidate> winners;
    for (std::size_t rev = 0; rev < class_count; ++rev) {
      std::size_t ci = class_count - 1 - rev;
      if (used[ci] >= fleet.counts[ci]) continue;
      const auto& bits = per_range_bits[ci];
      for (std::size_t k = 0; k < bits.size(); ++k) {
        std::size_t gain = bits[k].count_and(uncovered);
        if (gain == 0) continue;  // fully covered cliques are never selected
        if (gain > best_gain) {
          best_gain = gain;
          winners.clear();
        }
        if (gain == best_gain) winners.push_back({ci, k});
      }
    }
    if (winners.empty()) break;  // nothing useful left for the remaining guards

    Candidate chosen = winners.front();
    if (options.tie_break == TieBreak::kSeeded && winners.size() > 1) {
      // Drop duplicate vertex sets first (the same set can be maximal in
      // several powers); draw uniformly among the distinct sets.
      std::vector<Candidate> distinct;
      for (const auto& cand : winners) {
        bool dup = false;
        for (const auto& kept : distinct)
          if (per_range[cand.range_class].cliques[cand.clique_index] ==
              per_range[kept.range_class].cliques[kept.clique_index]) {
            dup = true;
            break;
          }
        if (!dup) distinct.push_back(cand);
      }
      chosen = distinct[tie_rng.below(distinct.size())];
    }

    // Assign the smallest eligible range whose decomposition contains the
    // chosen clique. The smallest-range-first scan already guarantees this
    // in deterministic mode; re-deriving keeps seeded mode consistent.
    const auto& chosen_clique = per_range[chosen.range_class].cliques[chosen.clique_index];
    std::size_t assigned_class = chosen.range_class;
    for (std::size_t rev = 0; rev < class_count; ++rev) {
      std::size_t ci = class_count - 1 - rev;
      if (used[ci] >= fleet.counts[ci]) continue;
      const auto& cliques = per_range[ci].cliques;
      if (std::find(cliques.begin(), cliques.end(), chosen_clique) != cliques.end()) {
        assigned_class = ci;
        break;
      }
    }

    Cluster cluster;
    cluster.id = static_cast<int>(plan.clusters.size());
    cluster.guard_range = fleet.ranges[assigned_class];
    cluster.guard_id = id_offset[assigned_class] + static_cast<int>(used[assigned_class]);
    per_range_bits[chosen.range_class][chosen.clique_index].for_each([&](std::size_t v) {
      if (uncovered.test(v)) cluster.vertices.push_back(static_cast<VertexId>(v));
    });

    // Membership in a clique of G^r implies pairwise ambient distance <= r;
    // certify instead of trusting it.
    for (VertexId u : cluster.vertices)
      for (VertexId v : cluster.vertices)
        if (dm.at(u, v) > cluster.guard_range)
          throw Error("cluster certification failed: d(" + std::to_string(u) + "," +
                      std::to_string(v) + ") > " + std::to_string(cluster.guard_range));

    uncovered.subtract(per_range_bits[chosen.range_class][chosen.clique_index]);
    used[assigned_class] += 1;
    assigned += 1;
    plan.clusters.push_back(std::move(cluster));
  }

  uncovered.for_each([&](std::size_t v) { plan.uncovered.push_back(static_cast<VertexId>(v)); });
  return plan;
}

double coverage_ratio(const ClusterPlan& plan) {
  if (plan.vertex_count == 0) return 1.0;
  return static_cast<double>(plan.covered_count()) / static_cast<double>(plan.vertex_count);
}

}  // namespace eguard
