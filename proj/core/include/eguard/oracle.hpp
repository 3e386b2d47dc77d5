#pragma once

#include <cstdint>
#include <vector>

#include "eguard/cliques.hpp"
#include "eguard/clustering.hpp"
#include "eguard/graph.hpp"

namespace eguard {

/// Hard limits for the exact searches. Exceeding a budget is a refusal
/// (BudgetExceededError), never silent truncation: an approximating oracle
/// would be worse than none.
struct OracleBudget {
  VertexId max_vertices = 12;
  unsigned max_guards = 4;
  std::size_t max_candidate_cliques = 24;
};

/// Exact maximum-coverage result: how many vertices the best possible
/// budget-respecting choice of power cliques covers, and one witness choice.
struct CoverageWitness {
  unsigned covered = 0;
  /// (range class index, clique vertices) per guard that covers anything.
  std::vector<std::pair<std::size_t, std::vector<VertexId>>> chosen;
};

/// Exhaustive search over all assignments of guards to maximal cliques of
/// their range's graph power (restricting to maximal cliques loses nothing:
/// any clique extends to a maximal one without shrinking coverage).
CoverageWitness optimal_coverage(const Graph& g, const GuardFleet& fleet,
                                 const OracleBudget& budget = {});

/// All-subsets enumeration of maximal cliques; the reference implementation
/// the fast enumerator is checked against.
CliqueSet brute_force_cliques(const Graph& g, const OracleBudget& budget = {});

/// Forced-response pursuit game for one guard of the given range: explores
/// every attack choice to depth |V| and reports whether some starting vertex
/// stays secure throughout. Agrees with (range >= diameter) on connected
/// graphs. Throws InfeasibleError for disconnected inputs.
bool exhaustive_game_search(const Graph& g, unsigned guard_range,
                            const OracleBudget& budget = {});

}  // namespace eguard
