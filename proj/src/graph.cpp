#include "walkmat/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace walkmat {

Graph::Graph(int order) : n(order), adj(order, 0) {
    if (order < 0 || order > kMaxOrder)
        throw std::invalid_argument("Graph: order must be between 0 and 64");
}

Graph::Graph(int order, const std::vector<std::pair<int, int>>& edges) : Graph(order) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("add_edge: vertex out of range");
    if (u == v)
        throw std::invalid_argument("add_edge: loops not supported");
    adj[u] |= uint64_t(1) << v;
    adj[v] |= uint64_t(1) << u;
}

int Graph::degree(int v) const {
    return std::popcount(adj[v]);
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n; ++v) twice += degree(v);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (has_edge(u, v)) e.emplace_back(u, v);
    return e;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n);
    for (int v = 0; v < n; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("relabeled: permutation size mismatch");
    Graph out(n);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (has_edge(perm[x], perm[y])) out.add_edge(x, y);
    return out;
}

std::vector<std::pair<std::vector<int>, Graph>> components(const Graph& g) {
    std::vector<std::pair<std::vector<int>, Graph>> result;
    uint64_t seen = 0;
    for (int s = 0; s < g.n; ++s) {
        if ((seen >> s) & 1) continue;
        // BFS over the bitmask frontier
        uint64_t comp = uint64_t(1) << s;
        uint64_t frontier = comp;
        while (frontier) {
            uint64_t next = 0;
            for (uint64_t f = frontier; f;) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.adj[v];
            }
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;

        std::vector<int> verts;
        std::vector<int> index(g.n, -1);
        for (uint64_t c = comp; c;) {
            int v = std::countr_zero(c);
            c &= c - 1;
            index[v] = static_cast<int>(verts.size());
            verts.push_back(v);
        }
        Graph sub(static_cast<int>(verts.size()));
        for (int v : verts)
            for (uint64_t nb = g.adj[v]; nb;) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                if (v < w) sub.add_edge(index[v], index[w]);
            }
        result.emplace_back(std::move(verts), std::move(sub));
    }
    return result;
}

std::optional<Bipartition> bipartition(const Graph& g) {
    std::vector<int> side(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::vector<int> queue{s};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (uint64_t nb = g.adj[v]; nb;) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition b;
    for (int v = 0; v < g.n; ++v) (side[v] == 0 ? b.left : b.right).push_back(v);
    return b;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    if (g.n + h.n > kMaxOrder)
        throw std::invalid_argument("disjoint_union: combined order exceeds 64");
    Graph out(g.n + h.n);
    for (int v = 0; v < g.n; ++v) out.adj[v] = g.adj[v];
    for (int v = 0; v < h.n; ++v) out.adj[g.n + v] = h.adj[v] << g.n;
    return out;
}

Graph add_isolated(const Graph& g, int m) {
    if (m < 0 || g.n + m > kMaxOrder)
        throw std::invalid_argument("add_isolated: resulting order out of range");
    Graph out(g.n + m);
    for (int v = 0; v < g.n; ++v) out.adj[v] = g.adj[v];
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    Graph out(static_cast<int>(verts.size()));
    for (size_t x = 0; x < verts.size(); ++x)
        for (size_t y = x + 1; y < verts.size(); ++y)
            if (g.has_edge(verts[x], verts[y]))
                out.add_edge(static_cast<int>(x), static_cast<int>(y));
    return out;
}

} // namespace walkmat
