#include "walkmat/walk.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace walkmat {

IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix a(g.n, g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v)
            if (g.has_edge(u, v)) a.at(u, v) = 1;
    return a;
}

std::vector<Int> adjacency_apply(const Graph& g, const std::vector<Int>& x) {
    std::vector<Int> y(g.n);
    for (int u = 0; u < g.n; ++u) {
        Int s = 0;
        for (uint64_t nb = g.adj[u]; nb;) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            s += x[w];
        }
        y[u] = std::move(s);
    }
    return y;
}

IntMatrix walk_matrix_k(const Graph& g, int k) {
    if (k < 1)
        throw std::invalid_argument("walk_matrix_k: k must be at least 1");
    IntMatrix w(g.n, k);
    std::vector<Int> col(g.n, 1);
    for (int c = 0; c < k; ++c) {
        for (int i = 0; i < g.n; ++i) w.at(i, c) = col[i];
        if (c + 1 < k) col = adjacency_apply(g, col);
    }
    return w;
}

int main_rank(const Graph& g) {
    if (g.n == 0) return 0;
    return int_rank(walk_matrix_k(g, g.n));
}

IntMatrix walk_matrix(const Graph& g) {
    int p = main_rank(g);
    return walk_matrix_k(g, p > 0 ? p : 1);
}

WalkMatrixFamily walk_matrix_family(const Graph& g, int k) {
    return WalkMatrixFamily{g.n, main_rank(g), walk_matrix_k(g, k)};
}

std::vector<Int> main_polynomial(const Graph& g) {
    const int p = main_rank(g);
    if (p == 0) return {Int(1)}; // empty graph: the constant polynomial 1
    IntMatrix w = walk_matrix_k(g, p + 1);
    IntMatrix wp(g.n, p);
    for (int i = 0; i < g.n; ++i)
        for (int c = 0; c < p; ++c) wp.at(i, c) = w.at(i, c);
    auto c = solve_rational(wp, w.column(p));
    if (!c)
        throw std::logic_error("main_polynomial: A^p j escaped the walk space");
    std::vector<Int> coeffs(p + 1);
    for (int i = 0; i < p; ++i) {
        if (denominator((*c)[i]) != 1)
            throw std::logic_error("main_polynomial: non-integral coefficient");
        coeffs[i] = -numerator((*c)[i]);
    }
    coeffs[p] = 1;
    return coeffs;
}

bool same_walk_matrix(const Graph& g, const Graph& h) {
    if (g.n != h.n) return false;
    int pg = main_rank(g);
    if (pg != main_rank(h)) return false;
    if (pg == 0) return true;
    return walk_matrix_k(g, pg) == walk_matrix_k(h, pg);
}

bool same_walk_matrices_all_k(const Graph& g, const Graph& h) {
    if (g.n != h.n) return false;
    int k = std::max(main_rank(g), main_rank(h)) + 1;
    return walk_matrix_k(g, k) == walk_matrix_k(h, k);
}

std::optional<RatMatrix> related_walk_matrices(const Graph& g, const Graph& h) {
    if (g.n != h.n)
        throw std::invalid_argument("related_walk_matrices: order mismatch");
    if (g.n == 0) return RatMatrix{};
    IntMatrix wg = walk_matrix(g);
    IntMatrix wh = walk_matrix(h);
    if (!column_space_equal(wg, wh)) return std::nullopt;
    const int p = wg.cols; // equal column spaces force equal ranks, so p matches
    RatMatrix q(p, RatVector(p));
    for (int c = 0; c < p; ++c) {
        auto x = solve_rational(wg, wh.column(c));
        if (!x)
            throw std::logic_error("related_walk_matrices: column escaped a shared space");
        for (int r = 0; r < p; ++r) q[r][c] = (*x)[r];
    }
    return q;
}

bool main_eigenspace_equal(const Graph& g, const Graph& h) {
    if (g.n != h.n)
        throw std::invalid_argument("main_eigenspace_equal: order mismatch");
    return column_space_equal(walk_matrix(g), walk_matrix(h));
}

} // namespace walkmat
