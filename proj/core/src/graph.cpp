#include "eguard/graph.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <string>
#include <thread>

#include "eguard/errors.hpp"
#include "eguard/hash.hpp"

namespace eguard {
namespace {

// Sources are split into contiguous chunks, one task per chunk. Each task
// writes disjoint output, so the result is bitwise identical to a
// sequential run.
void parallel_over_sources(VertexId n, const std::function<void(VertexId, VertexId)>& run) {
  unsigned hw = std::thread::hardware_concurrency();
  if (n < 1024 || hw < 2) {
    run(0, n);
    return;
  }
  unsigned tasks = std::min<unsigned>(hw, 8);
  VertexId chunk = (n + tasks - 1) / tasks;
  std::vector<std::future<void>> futures;
  for (VertexId begin = 0; begin < n; begin += chunk) {
    VertexId end = std::min<VertexId>(begin + chunk, n);
    futures.push_back(std::async(std::launch::async, run, begin, end));
  }
  for (auto& f : futures) f.get();
}

}  // namespace

Graph::Graph(VertexId vertex_count, std::span<const Edge> edges)
    : n_(vertex_count), adj_(vertex_count), adj_bits_(vertex_count, Bitset(vertex_count)) {
  for (const auto& [u, v] : edges) {
    if (u >= n_ || v >= n_)
      throw InvalidVertexError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                               ") has endpoint outside [0, " + std::to_string(n_) + ")");
    if (u == v) throw InvalidEdgeError("self-loop at vertex " + std::to_string(u));
    if (adj_bits_[u].test(v)) continue;  // duplicate, including (v, u)
    adj_bits_[u].set(v);
    adj_bits_[v].set(u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());

  std::uint64_t h = fnv1a64_u64(n_, kFnvOffset);
  for (const auto& [u, v] : edges_) {
    h = fnv1a64_u64(u, h);
    h = fnv1a64_u64(v, h);
  }
  fingerprint_ = h;
}

std::vector<Dist> bfs_distances(const Graph& g, VertexId source) {
  std::vector<Dist> dist(g.vertex_count(), kUnreachable);
  std::vector<VertexId> queue;
  queue.reserve(g.vertex_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId u = queue[head];
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const VertexId n = g.vertex_count();
  DistanceMatrix m;
  m.n_ = n;
  m.source_graph_ = g.fingerprint();
  m.d_.assign(static_cast<std::size_t>(n) * n, kUnreachable);
  parallel_over_sources(n, [&](VertexId begin, VertexId end) {
    for (VertexId s = begin; s < end; ++s) {
      auto row = bfs_distances(g, s);
      std::copy(row.begin(), row.end(), m.d_.begin() + static_cast<std::size_t>(s) * n);
    }
  });
  return m;
}

Dist diameter(const Graph& g) {
  const VertexId n = g.vertex_count();
  if (n == 0) throw EmptyGraphError("diameter of a graph with no vertices");
  Dist result = 0;
  for (VertexId s = 0; s < n; ++s) {
    auto dist = bfs_distances(g, s);
    for (Dist d : dist) {
      if (d == kUnreachable) return kUnreachable;
      result = std::max(result, d);
    }
  }
  return result;
}

Graph graph_power(const Graph& g, unsigned r) {
  if (r == 0) throw InvalidRangeError("graph power requires r >= 1");
  const VertexId n = g.vertex_count();
  std::vector<std::vector<Graph::Edge>> chunks;
  // BFS truncated at depth r from each source; collect (s, v) with s < v to
  // emit each power edge once.
  std::vector<std::pair<VertexId, VertexId>> ranges;
  {
    unsigned hw = std::thread::hardware_concurrency();
    unsigned tasks = (n >= 1024 && hw >= 2) ? std::min<unsigned>(hw, 8) : 1;
    VertexId chunk = tasks == 0 ? n : (n + tasks - 1) / tasks;
    for (VertexId begin = 0; begin < n; begin += chunk)
      ranges.emplace_back(begin, std::min<VertexId>(begin + chunk, n));
  }
  chunks.resize(ranges.size());

  auto run = [&](std::size_t chunk_idx) {
    auto [begin, end] = ranges[chunk_idx];
    auto& out = chunks[chunk_idx];
    std::vector<Dist> dist(n);
    std::vector<VertexId> queue;
    for (VertexId s = begin; s < end; ++s) {
      std::fill(dist.begin(), dist.end(), kUnreachable);
      queue.clear();
      dist[s] = 0;
      queue.push_back(s);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId u = queue[head];
        if (dist[u] == r) break;  // queue is level-ordered
        for (VertexId w : g.neighbors(u)) {
          if (dist[w] == kUnreachable) {
            dist[w] = dist[u] + 1;
            queue.push_back(w);
            if (w > s) out.emplace_back(s, w);
          }
        }
      }
    }
  };

  if (ranges.size() == 1) {
    run(0);
  } else {
    std::vector<std::future<void>> futures;
    for (std::size_t i = 0; i < ranges.size(); ++i)
      futures.push_back(std::async(std::launch::async, run, i));
    for (auto& f : futures) f.get();
  }

  std::vector<Graph::Edge> edges;
  for (auto& c : chunks) edges.insert(edges.end(), c.begin(), c.end());
  return Graph(n, edges);
}

}  // namespace eguard
