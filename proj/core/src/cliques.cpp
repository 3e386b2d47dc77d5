#include "eguard/cliques.hpp"

#include <algorithm>

#include "eguard/errors.hpp"

namespace eguard {
namespace {

/// Peel minimum-degree vertices to get a degeneracy ordering. Outer-level
/// iteration in this order keeps the candidate sets small on sparse graphs.
std::vector<VertexId> degeneracy_order(const Graph& g) {
  const VertexId n = g.vertex_count();
  std::vector<std::size_t> degree(n);
  std::size_t max_degree = 0;
  for (VertexId v = 0; v < n; ++v) {
    degree[v] = g.neighbors(v).size();
    max_degree = std::max(max_degree, degree[v]);
  }
  std::vector<std::vector<VertexId>> buckets(max_degree + 1);
  for (VertexId v = 0; v < n; ++v) buckets[degree[v]].push_back(v);

  std::vector<bool> removed(n, false);
  std::vector<VertexId> order;
  order.reserve(n);
  std::size_t cursor = 0;
  while (order.size() < n) {
    while (cursor > 0 && buckets[cursor - 1].empty() == false) --cursor;
    while (cursor <= max_degree && buckets[cursor].empty()) ++cursor;
    VertexId v = buckets[cursor].back();
    buckets[cursor].pop_back();
    if (removed[v] || degree[v] != cursor) continue;  // stale bucket entry
    removed[v] = true;
    order.push_back(v);
    for (VertexId w : g.neighbors(v)) {
      if (!removed[w]) {
        buckets[--degree[w]].push_back(w);
      }
    }
  }
  return order;
}

class BronKerbosch {
 public:
  explicit BronKerbosch(const Graph& g) : g_(g), n_(g.vertex_count()) {}

  std::vector<std::vector<VertexId>> run() {
    auto order = degeneracy_order(g_);
    std::vector<std::size_t> rank(n_);
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

    for (VertexId v : order) {
      Bitset candidates(n_);
      Bitset excluded(n_);
      for (VertexId w : g_.neighbors(v)) {
        if (rank[w] > rank[v])
          candidates.set(w);
        else
          excluded.set(w);
      }
      current_.assign(1, v);
      expand(candidates, excluded);
    }
    return std::move(found_);
  }

 private:
  void expand(Bitset candidates, Bitset excluded) {
    if (candidates.none() && excluded.none()) {
      auto clique = current_;
      std::sort(clique.begin(), clique.end());
      found_.push_back(std::move(clique));
      return;
    }
    // Pivot: vertex of P | X with the most neighbours in P; only
    // non-neighbours of the pivot are branched on.
    long pivot = -1;
    std::size_t pivot_links = 0;
    auto consider = [&](std::size_t u) {
      std::size_t links = candidates.count_and(g_.neighbor_bits(static_cast<VertexId>(u)));
      if (pivot < 0 || links > pivot_links) {
        pivot = static_cast<long>(u);
        pivot_links = links;
      }
    };
    candidates.for_each(consider);
    excluded.for_each(consider);

    Bitset branch = candidates;
    branch.subtract(g_.neighbor_bits(static_cast<VertexId>(pivot)));

    std::vector<VertexId> branch_vertices;
    branch.for_each([&](std::size_t u) { branch_vertices.push_back(static_cast<VertexId>(u)); });

    for (VertexId u : branch_vertices) {
      const Bitset& nu = g_.neighbor_bits(u);
      Bitset next_candidates = candidates;
      next_candidates &= nu;
      Bitset next_excluded = excluded;
      next_excluded &= nu;
      current_.push_back(u);
      expand(std::move(next_candidates), std::move(next_excluded));
      current_.pop_back();
      candidates.reset(u);
      excluded.set(u);
    }
  }

  const Graph& g_;
  VertexId n_;
  std::vector<VertexId> current_;
  std::vector<std::vector<VertexId>> found_;
};

}  // namespace

void canonicalize(CliqueSet& cs) {
  for (auto& c : cs.cliques) std::sort(c.begin(), c.end());
  std::sort(cs.cliques.begin(), cs.cliques.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
}

CliqueSet maximal_cliques(const Graph& g) {
  CliqueSet cs;
  cs.source_graph = g.fingerprint();
  cs.cliques = BronKerbosch(g).run();
  canonicalize(cs);
  return cs;
}

bool verify_clique_set(const Graph& g, const CliqueSet& cs) {
  if (cs.source_graph != g.fingerprint())
    throw WrongGraphError("clique set was computed on a different graph");

  const VertexId n = g.vertex_count();
  Bitset covered(n);
  std::vector<Bitset> members;
  members.reserve(cs.cliques.size());
  for (const auto& clique : cs.cliques) {
    if (clique.empty()) return false;
    Bitset bits(n);
    for (VertexId v : clique) {
      if (v >= n) return false;
      bits.set(v);
      covered.set(v);
    }
    for (VertexId u : clique)
      for (VertexId v : clique)
        if (u < v && !g.has_edge(u, v)) return false;
    members.push_back(std::move(bits));
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j)
      if (i != j && members[i].is_subset_of(members[j])) return false;
  return covered.count() == n;
}

}  // namespace eguard
