#ifndef TESTS_FIXTURES_HPP
#define TESTS_FIXTURES_HPP

#include <utility>
#include <vector>

#include "walkmat/graph.hpp"

/* The named graphs and graph pairs exercised across the tests, entered from
   1-based edge lists. Each pair sits at a distinct spot in the hierarchy of
   walk-matrix relations, which is what makes them useful fixtures. */
namespace fixtures {

using walkmat::Graph;

inline Graph from_edges1(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
    return g;
}

inline Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle(int n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

// 7-vertex pair sharing the walk matrix entrywise (rows (1,3,9), (1,3,10) x4,
// (1,3,9), (1,4,12)) while their double coverings are not isomorphic.
inline Graph samew_diffcdc_g() {
    return from_edges1(7, {{1, 2}, {2, 3}, {3, 6}, {2, 6}, {2, 4}, {1, 4},
                           {1, 5}, {3, 5}, {4, 7}, {6, 7}, {5, 7}});
}
inline Graph samew_diffcdc_h() {
    return from_edges1(7, {{1, 2}, {2, 3}, {3, 6}, {2, 6}, {2, 4}, {1, 4},
                           {1, 5}, {4, 5}, {3, 7}, {6, 7}, {5, 7}});
}

// Zelinka's TF-isomorphic pair: triangle-path-triangle against a hexagon
// with a two-edge chord through a seventh vertex.
inline Graph zelinka_g() {
    return from_edges1(7, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6},
                           {6, 7}, {5, 7}});
}
inline Graph zelinka_h() {
    return from_edges1(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6},
                           {2, 7}, {5, 7}});
}

// Comain pair (shared main polynomial x^4 - 2x^3 - 4x^2 + 7x) with different
// walk matrices and non-isomorphic double coverings.
inline Graph comain_diffw_g() {
    return from_edges1(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {5, 6},
                           {6, 7}, {5, 7}});
}
inline Graph comain_diffw_h() {
    return from_edges1(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6},
                           {6, 7}, {2, 4}});
}

// Same principal main vectors, different main eigenvalues (1 +- sqrt 5
// against (3/2)(1 +- sqrt 5)), hence different walk matrices.
inline Graph shared_vectors_g() {
    return from_edges1(8, {{1, 5}, {1, 6}, {2, 6}, {2, 7}, {3, 7}, {3, 8},
                           {4, 5}, {4, 8}, {5, 7}, {5, 8}, {6, 7}, {6, 8}});
}
inline Graph shared_vectors_h() {
    return from_edges1(8, {{1, 5}, {1, 6}, {1, 8}, {3, 5}, {3, 6}, {3, 7},
                           {4, 5}, {4, 8}, {4, 7}, {2, 6}, {2, 8}, {2, 7},
                           {5, 6}, {5, 8}, {5, 7}, {6, 8}, {6, 7}, {7, 8}});
}

// Same main eigenspace with different principal vectors; the walk matrices
// are related by Q = ((1, -7), (0, 3)).
inline Graph related_w_g() {
    return from_edges1(6, {{1, 5}, {1, 6}, {2, 5}, {2, 6}, {3, 5}, {3, 6},
                           {4, 5}, {4, 6}, {5, 6}});
}
inline Graph related_w_h() {
    return from_edges1(6, {{1, 5}, {1, 6}, {2, 5}, {2, 6}, {3, 5}, {3, 6},
                           {4, 5}, {4, 6}, {1, 2}, {3, 4}});
}

} // namespace fixtures

#endif
