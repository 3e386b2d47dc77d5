#include "eguard/oracle.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "eguard/errors.hpp"

namespace eguard {
namespace {

using Mask = std::uint32_t;

std::vector<VertexId> mask_vertices(Mask m) {
  std::vector<VertexId> out;
  for (VertexId v = 0; m; ++v, m >>= 1)
    if (m & 1u) out.push_back(v);
  return out;
}

}  // namespace

CoverageWitness optimal_coverage(const Graph& g, const GuardFleet& fleet,
                                 const OracleBudget& budget) {
  fleet.validate();
  const VertexId n = g.vertex_count();
  if (n > budget.max_vertices)
    throw BudgetExceededError("optimal_coverage: " + std::to_string(n) + " vertices > budget " +
                              std::to_string(budget.max_vertices));
  if (fleet.total_guards() > budget.max_guards)
    throw BudgetExceededError("optimal_coverage: " + std::to_string(fleet.total_guards()) +
                              " guards > budget " + std::to_string(budget.max_guards));

  // Candidate cliques per range class, as vertex masks.
  std::vector<std::vector<Mask>> class_cliques(fleet.ranges.size());
  std::size_t candidates = 0;
  for (std::size_t i = 0; i < fleet.ranges.size(); ++i) {
    CliqueSet cs = maximal_cliques(graph_power(g, fleet.ranges[i]));
    for (const auto& clique : cs.cliques) {
      Mask m = 0;
      for (VertexId v : clique) m |= (1u << v);
      class_cliques[i].push_back(m);
    }
    candidates += cs.size();
  }
  if (candidates > budget.max_candidate_cliques)
    throw BudgetExceededError("optimal_coverage: " + std::to_string(candidates) +
                              " candidate cliques > budget " +
                              std::to_string(budget.max_candidate_cliques));

  // Flatten guards; each picks one clique of its class or sits out.
  std::vector<std::size_t> guard_class;
  for (std::size_t i = 0; i < fleet.counts.size(); ++i)
    for (unsigned k = 0; k < fleet.counts[i]; ++k) guard_class.push_back(i);

  // memo[(guard index, covered mask)] = best additional coverage.
  std::unordered_map<std::uint64_t, unsigned> memo;
  auto key = [](std::size_t guard, Mask covered) {
    return (static_cast<std::uint64_t>(guard) << 32) | covered;
  };

  std::function<unsigned(std::size_t, Mask)> best_extra = [&](std::size_t guard,
                                                              Mask covered) -> unsigned {
    if (guard == guard_class.size()) return 0;
    auto it = memo.find(key(guard, covered));
    if (it != memo.end()) return it->second;
    unsigned best = best_extra(guard + 1, covered);  // guard covers nothing new
    for (Mask clique : class_cliques[guard_class[guard]]) {
      Mask gained = clique & ~covered;
      if (!gained) continue;
      unsigned value = static_cast<unsigned>(std::popcount(gained)) +
                       best_extra(guard + 1, covered | clique);
      best = std::max(best, value);
    }
    memo.emplace(key(guard, covered), best);
    return best;
  };

  CoverageWitness witness;
  witness.covered = best_extra(0, 0);

  // Replay the table to extract one optimal assignment.
  Mask covered = 0;
  for (std::size_t guard = 0; guard < guard_class.size(); ++guard) {
    unsigned target = best_extra(guard, covered);
    if (target == best_extra(guard + 1, covered)) continue;  // this guard sits out
    for (Mask clique : class_cliques[guard_class[guard]]) {
      Mask gained = clique & ~covered;
      if (!gained) continue;
      unsigned value = static_cast<unsigned>(std::popcount(gained)) +
                       best_extra(guard + 1, covered | clique);
      if (value == target) {
        witness.chosen.emplace_back(guard_class[guard], mask_vertices(clique));
        covered |= clique;
        break;
      }
    }
  }
  return witness;
}

CliqueSet brute_force_cliques(const Graph& g, const OracleBudget& budget) {
  const VertexId n = g.vertex_count();
  if (n > budget.max_vertices)
    throw BudgetExceededError("brute_force_cliques: " + std::to_string(n) +
                              " vertices > budget " + std::to_string(budget.max_vertices));

  std::vector<Mask> adjacency(n, 0);
  for (VertexId v = 0; v < n; ++v)
    for (VertexId w : g.neighbors(v)) adjacency[v] |= (1u << w);

  auto complete = [&](Mask s) {
    for (VertexId v = 0; v < n; ++v)
      if ((s >> v) & 1u) {
        Mask others = s & ~(1u << v);
        if ((others & adjacency[v]) != others) return false;
      }
    return true;
  };

  CliqueSet cs;
  cs.source_graph = g.fingerprint();
  const Mask all = n == 32 ? ~0u : ((1u << n) - 1u);
  for (Mask s = 1; s <= all && n > 0; ++s) {
    if (!complete(s)) continue;
    bool extensible = false;
    for (VertexId v = 0; v < n && !extensible; ++v)
      if (!((s >> v) & 1u) && (s & adjacency[v]) == s) extensible = true;
    if (!extensible) cs.cliques.push_back(mask_vertices(s));
  }
  canonicalize(cs);
  return cs;
}

bool exhaustive_game_search(const Graph& g, unsigned guard_range, const OracleBudget& budget) {
  const VertexId n = g.vertex_count();
  if (n == 0) throw EmptyGraphError("game search on a graph with no vertices");
  if (n > budget.max_vertices)
    throw BudgetExceededError("exhaustive_game_search: " + std::to_string(n) +
                              " vertices > budget " + std::to_string(budget.max_vertices));

  DistanceMatrix dm = all_pairs_distances(g);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v)
      if (dm.at(u, v) == kUnreachable)
        throw InfeasibleError("game search requires a connected graph");

  // State = guard vertex (the response is forced onto the attacked vertex).
  // safe[u] at depth t: the configuration is secure and every possible
  // attack leads to a state safe at depth t-1.
  std::vector<char> secure(n, 1);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v)
      if (dm.at(u, v) > guard_range) {
        secure[u] = 0;
        break;
      }

  std::vector<char> safe(secure.begin(), secure.end());
  for (VertexId depth = 0; depth < n; ++depth) {
    std::vector<char> next(n, 0);
    for (VertexId u = 0; u < n; ++u) {
      if (!secure[u]) continue;
      bool ok = true;
      for (VertexId attacked = 0; attacked < n && ok; ++attacked) {
        if (dm.at(u, attacked) > guard_range) ok = false;  // cannot respond
        else if (!safe[attacked]) ok = false;              // forced move loses later
      }
      next[u] = ok;
    }
    if (next == safe) break;  // fixed point
    safe = std::move(next);
  }
  return std::any_of(safe.begin(), safe.end(), [](char c) { return c != 0; });
}

}  // namespace eguard
