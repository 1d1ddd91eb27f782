#ifndef WALKMAT_GRAPH_HPP
#define WALKMAT_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace walkmat {

constexpr int kMaxOrder = 64;

/* Simple undirected graph on at most 64 vertices. Each adjacency row is a
   bitmask over vertex indices, so neighbor tests and counts are single-word
   operations. Treat instances as immutable once built; every operation here
   returns fresh values, which keeps concurrent use trivially safe. */
struct Graph {
    int n = 0;
    std::vector<uint64_t> adj;

    Graph() = default;
    explicit Graph(int order);
    Graph(int order, const std::vector<std::pair<int, int>>& edges);

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
    int degree(int v) const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> degree_sequence() const; // ascending

    // New graph with adjacency a[x][y] = old[perm[x]][perm[y]]; perm maps
    // new index -> old index and must be a permutation of 0..n-1.
    Graph relabeled(const std::vector<int>& perm) const;

    bool operator==(const Graph&) const = default;
};

struct Bipartition {
    std::vector<int> left;
    std::vector<int> right;
};

// Connected components as (sorted original vertex indices, induced subgraph
// reindexed in that order), ordered by smallest original vertex index.
std::vector<std::pair<std::vector<int>, Graph>> components(const Graph& g);

// 2-coloring by breadth-first layering per component, with the smallest
// vertex of each component on the left; nullopt iff g has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

// g followed by h on shifted indices, no cross edges.
// Throws std::invalid_argument if the combined order exceeds 64.
Graph disjoint_union(const Graph& g, const Graph& h);

// g plus m isolated vertices appended.
Graph add_isolated(const Graph& g, int m);

// Subgraph induced on verts (distinct original indices), reindexed in the
// given order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);

} // namespace walkmat

#endif
