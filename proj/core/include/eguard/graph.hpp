#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "eguard/bitset.hpp"

namespace eguard {

using VertexId = std::uint32_t;
using Dist = std::uint32_t;

/// Sentinel distance for vertex pairs in different components. Never a large
/// finite number: cross-component reachability must stay distinguishable.
inline constexpr Dist kUnreachable = 0xffffffffu;

/// Simple undirected graph over 0-based integer vertex ids. Immutable after
/// construction and safe to share across threads.
class Graph {
 public:
  using Edge = std::pair<VertexId, VertexId>;

  Graph() = default;

  /// Validates and deduplicates the edge list. Throws InvalidVertexError for
  /// out-of-range endpoints and InvalidEdgeError for self-loops.
  Graph(VertexId vertex_count, std::span<const Edge> edges);
  Graph(VertexId vertex_count, std::initializer_list<Edge> edges)
      : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  VertexId vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(VertexId u, VertexId v) const { return adj_bits_[u].test(v); }

  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
  const Bitset& neighbor_bits(VertexId v) const { return adj_bits_[v]; }

  /// Canonical edge list: each edge once as (min, max), sorted.
  const std::vector<Edge>& edges() const { return edges_; }

  /// Content hash of (vertex_count, canonical edges). Stable across runs;
  /// used to tie derived artifacts (clique sets, plans) back to their graph.
  std::uint64_t fingerprint() const { return fingerprint_; }

 private:
  VertexId n_ = 0;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<Bitset> adj_bits_;
  std::vector<Edge> edges_;
  std::uint64_t fingerprint_ = 0;
};

/// All-pairs BFS hop counts. Immutable; entries are kUnreachable across
/// components.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  Dist at(VertexId u, VertexId v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  VertexId size() const { return n_; }
  std::uint64_t source_graph() const { return source_graph_; }

  friend DistanceMatrix all_pairs_distances(const Graph& g);

 private:
  VertexId n_ = 0;
  std::vector<Dist> d_;
  std::uint64_t source_graph_ = 0;
};

/// Hop distances from one source; kUnreachable where BFS does not arrive.
std::vector<Dist> bfs_distances(const Graph& g, VertexId source);

/// Full BFS matrix. Per-source searches are independent; large graphs are
/// processed on multiple threads with results identical to sequential runs.
DistanceMatrix all_pairs_distances(const Graph& g);

/// Maximum finite hop distance; kUnreachable for disconnected graphs, 0 for a
/// single vertex. Throws EmptyGraphError when the graph has no vertices.
Dist diameter(const Graph& g);

/// r-th graph power: same vertices, an edge wherever 0 < d(u,v) <= r in g.
/// Throws InvalidRangeError for r == 0.
Graph graph_power(const Graph& g, unsigned r);

}  // namespace eguard
