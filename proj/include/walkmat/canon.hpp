#ifndef WALKMAT_CANON_HPP
#define WALKMAT_CANON_HPP

#include <optional>
#include <string>
#include <vector>

#include "walkmat/graph.hpp"

namespace walkmat {

/* Relabeling-invariant identifier of an isomorphism class: byte 0 is the
   order, the rest is the canonical upper-triangle adjacency bitstring packed
   eight bits per byte (column major, the graph6 bit order). Equal
   certificates <=> isomorphic graphs, exactly, for every order the search
   accepts. */
using Certificate = std::string;

struct CanonResult {
    std::vector<int> order; // canonical position -> original vertex
    std::string bits;       // packed canonical upper triangle
};

/* Canonical form by color refinement plus individualization backtracking,
   with automorphism orbit pruning. colors may be empty (uncolored) or give
   one value per vertex; vertices of smaller color come first and two colored
   graphs get equal bits iff a color-preserving isomorphism relates them
   (given equal color class sizes). */
CanonResult canonical_form(const Graph& g, const std::vector<int>& colors);

// Uncolored certificate. Throws std::invalid_argument for n > 20 (the search
// is exact but unbounded beyond what the census needs).
Certificate certificate(const Graph& g);

std::string certificate_hex(const Certificate& c);

// Witness sigma with A_h[sigma u][sigma v] = A_g[u][v] for all u, v,
// verified before returning; nullopt iff the graphs are not isomorphic.
std::optional<std::vector<int>> isomorphic(const Graph& g, const Graph& h);

// TF-isomorphism witness: index maps with A_h[i][j] = A_g[q[i]][r[j]].
struct TfWitness {
    std::vector<int> q;
    std::vector<int> r;
};

/* Decide TF-isomorphism through the double covering: present iff the CDCs
   are isomorphic. For the witness, isolated vertices are paired off first,
   a layer-preserving isomorphism P of the remaining CDCs is found by colored
   canonical labeling (layer index as color), and P's blocks give
   Q = (P11+P21)^T, R = P22+P12, which collapses to Q = P11^T, R = P22 since
   P12 = P21 = 0. The witness is re-verified before it is returned.
   Throws std::invalid_argument on order mismatch or n > 10. */
std::optional<TfWitness> tf_isomorphism(const Graph& g, const Graph& h);

// True iff w.q and w.r are permutations and A_h[i][j] = A_g[q[i]][r[j]]
// entrywise. Throws std::invalid_argument on order mismatch.
bool verify_tf(const Graph& g, const Graph& h, const TfWitness& w);

} // namespace walkmat

#endif
