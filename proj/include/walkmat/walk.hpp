#ifndef WALKMAT_WALK_HPP
#define WALKMAT_WALK_HPP

#include <optional>
#include <vector>

#include "walkmat/exact.hpp"
#include "walkmat/graph.hpp"

namespace walkmat {

using RatMatrix = std::vector<RatVector>; // row-major, rectangular

IntMatrix adjacency_matrix(const Graph& g);

// One adjacency-vector product A x, exact.
std::vector<Int> adjacency_apply(const Graph& g, const std::vector<Int>& x);

// n x k matrix whose columns are j, Aj, ..., A^{k-1} j. Requires k >= 1.
IntMatrix walk_matrix_k(const Graph& g, int k);

// Number of main eigenvalues, computed exactly as rank of the n-column walk
// matrix. This is the ground truth the floating side is checked against.
int main_rank(const Graph& g);

// The p-column walk matrix W(p) with p = main_rank(g).
IntMatrix walk_matrix(const Graph& g);

struct WalkMatrixFamily {
    int n = 0;
    int p = 0;
    IntMatrix columns; // n x k, k as requested
};

WalkMatrixFamily walk_matrix_family(const Graph& g, int k);

// Monic integer polynomial of degree p whose roots are the main eigenvalues,
// as coefficients by ascending power (size p+1, last entry 1). Obtained by
// solving W(p) c = A^p j exactly; the solution is provably integral and that
// is asserted (std::logic_error otherwise).
std::vector<Int> main_polynomial(const Graph& g);

// Entrywise equality of W(p) under the given labelings; no relabeling search.
bool same_walk_matrix(const Graph& g, const Graph& h);

// Equality of W(k) for every k >= 1. Checking K = max(p_g, p_h) + 1 columns
// suffices: equal W(K) forces equal p, equal W(p) and equal A^p j, hence the
// same recurrence coefficients, and the shared recurrence generates every
// later column identically.
bool same_walk_matrices_all_k(const Graph& g, const Graph& h);

// The p x p invertible rational Q with W_g Q = W_h, or nullopt when the
// column spaces differ. Throws std::invalid_argument on order mismatch.
std::optional<RatMatrix> related_walk_matrices(const Graph& g, const Graph& h);

// Main(G) = Main(H), decided exactly as equality of walk-matrix column
// spaces. Throws std::invalid_argument on order mismatch.
bool main_eigenspace_equal(const Graph& g, const Graph& h);

} // namespace walkmat

#endif
