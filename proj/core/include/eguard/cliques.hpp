#pragma once

#include <cstdint>
#include <vector>

#include "eguard/graph.hpp"

namespace eguard {

/// All maximal cliques of one graph, in canonical order: descending size,
/// then lexicographic by sorted vertex indices. Isolated vertices appear as
/// singleton cliques, so the union of members always covers V.
struct CliqueSet {
  std::vector<std::vector<VertexId>> cliques;  // each sorted ascending
  std::uint64_t source_graph = 0;              // Graph::fingerprint()

  std::size_t size() const { return cliques.size(); }
};

/// Bron-Kerbosch with pivoting, degeneracy ordering at the outer level.
/// Deterministic: two runs on the same graph produce identical output.
CliqueSet maximal_cliques(const Graph& g);

/// Checks that every member induces a complete subgraph, no member is nested
/// in another, and the members cover V(g). Throws WrongGraphError when cs was
/// computed on a different graph.
bool verify_clique_set(const Graph& g, const CliqueSet& cs);

/// Sorts cliques into the canonical order (size-descending, then
/// lexicographic); exposed for oracles that enumerate by other means.
void canonicalize(CliqueSet& cs);

}  // namespace eguard
