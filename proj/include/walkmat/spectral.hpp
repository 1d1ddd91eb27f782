#ifndef WALKMAT_SPECTRAL_HPP
#define WALKMAT_SPECTRAL_HPP

#include <vector>

#include "walkmat/exact.hpp"
#include "walkmat/graph.hpp"

namespace walkmat {

/* Pinned numerics. Adjacency spectra of the orders handled here (n <= 64,
   census uses n <= 16) have eigenvalue gaps far above these thresholds, and
   the exact-rank cross check in main_decomposition turns any silent
   misclassification into a loud error. */
constexpr double kJacobiRelTol = 1e-12; // off-diagonal Frobenius vs ||A||_F
constexpr int kJacobiSweepBudget = 100;
constexpr double kEigenGroupTol = 1e-7;
constexpr double kMainWeightTolPerVertex = 1e-8; // main iff ||P_i j||^2 > 1e-8 n
constexpr double kVectorEntryTol = 1e-6;         // principal vector comparison

struct SpectralGroup {
    double value = 0;
    int multiplicity = 0;
    std::vector<std::vector<double>> basis; // orthonormal eigenvectors
};

struct Spectrum {
    std::vector<SpectralGroup> groups; // ascending by value
};

// Eigendecomposition of the adjacency matrix by cyclic Jacobi rotations,
// eigenvalues merged into groups when closer than kEigenGroupTol.
// Requires g.n >= 1; throws std::runtime_error (with the matrix in the
// message) if the sweep budget is exhausted.
Spectrum spectrum(const Graph& g);

struct MainEigenvalue {
    double value = 0;
    std::vector<double> principal; // P_i j, the projection of j onto the eigenspace
    double weight = 0;             // ||P_i j||^2
};

struct MainDecomposition {
    int p = 0;
    std::vector<MainEigenvalue> mains; // ascending by value
    std::vector<Int> main_poly;        // monic, coefficients by ascending power
};

// Classify spectral groups as main via the projection weight threshold, then
// cross-check the float count against the exact rank of the n-column walk
// matrix; a mismatch throws std::runtime_error rather than picking a side.
// The polynomial comes from the exact walk recurrence.
MainDecomposition main_decomposition(const Graph& g);

// Same set of main eigenvalues, decided exactly: identical main polynomials.
bool comain(const Graph& g, const Graph& h);

// Same multiset of principal main eigenvectors, matched by a perfect pairing
// with per-entry tolerance kVectorEntryTol. Projections are unique, so there
// is no sign or scale freedom to mod out.
bool same_principal_main_vectors(const Graph& g, const Graph& h);

// Same main eigenvalues with the same principal main eigenvector attached to
// each: comain (exact), plus entrywise agreement within kVectorEntryTol of the
// principal vectors matched by ascending eigenvalue. Strictly stronger than
// comain + same_principal_main_vectors, which also accept pairs whose shared
// vectors sit under different eigenvalues in the two graphs.
bool same_main_eigenpairs(const Graph& g, const Graph& h);

// Exact number of walks of length k (sum of the entries of A^k j), k >= 0.
Int walk_count_total(const Graph& g, int k);

} // namespace walkmat

#endif
