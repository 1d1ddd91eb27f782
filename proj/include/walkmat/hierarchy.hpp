#ifndef WALKMAT_HIERARCHY_HPP
#define WALKMAT_HIERARCHY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "walkmat/canon.hpp"
#include "walkmat/graph.hpp"
#include "walkmat/walk.hpp"

namespace walkmat {

struct RelationProfile {
    bool comain = false;
    bool same_walk_matrix = false;
    bool same_all_k_walk_matrices = false;
    bool same_main_eigenspace = false;
    bool same_principal_main_vectors = false;
    bool same_main_eigenpairs = false; // vectors matched to the same eigenvalues
    bool related_walk_matrices = false;
    bool cdc_isomorphic = false; // equivalently: TF-isomorphic
};

/* All hierarchy predicates for a pair of equal-order graphs (callers pad
   with isolated vertices first if needed). When the CDCs are isomorphic, h
   is relabeled once by the witness's layer-0 action and every
   label-sensitive predicate is evaluated in that shared frame; walk-matrix
   and column-space predicates are meaningless across unrelated labelings
   otherwise. comain and cdc_isomorphic are label-free to begin with.
   Throws std::invalid_argument on order mismatch. */
RelationProfile relation_profile(const Graph& g, const Graph& h);

// relation_profile plus the evidence behind it: the TF witness when the
// CDCs are isomorphic, and the rational Q with W_g Q = W_frame when the
// column spaces agree (frame = h relabeled by the witness, else h itself).
struct PairAnalysis {
    RelationProfile profile;
    std::optional<TfWitness> witness;
    std::optional<RatMatrix> q;
};

PairAnalysis analyze_pair(const Graph& g, const Graph& h);

/* Violated implications among:
     THM_3_2  cdc_isomorphic -> same_walk_matrix
     COR_3_6  same_walk_matrix -> same_main_eigenspace
     EQ_2     same_principal_main_vectors -> same_main_eigenspace
     THM_5_5  same_main_eigenpairs -> same_all_k
     PROP_5_3 same_principal_main_vectors and not comain -> not same_all_k
     THM_5_6  related_walk_matrices <-> same_main_eigenspace
   Empty for every profile arising from actual graph pairs. */
std::vector<std::string> implication_violations(const RelationProfile& pr);

// Among all pairs with isomorphic CDCs, return those that are not comain
// (0-based corpus indices, i < j). Expected empty on corpora of at most 8
// vertices. Requires pairwise non-isomorphic corpus graphs.
std::vector<std::pair<size_t, size_t>>
check_question_cdc_implies_comain(const std::vector<Graph>& corpus);

} // namespace walkmat

#endif
