#include "walkmat/hierarchy.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "walkmat/canon.hpp"
#include "walkmat/cdc.hpp"
#include "walkmat/spectral.hpp"
#include "walkmat/walk.hpp"

namespace walkmat {

PairAnalysis analyze_pair(const Graph& g, const Graph& h) {
    if (g.n != h.n)
        throw std::invalid_argument("relation_profile: order mismatch, pad first");

    PairAnalysis out;
    RelationProfile& pr = out.profile;
    out.witness = tf_isomorphism(g, h);
    pr.cdc_isomorphic = out.witness.has_value();

    Graph frame = h;
    if (out.witness) {
        // q is phi0^-1, so its inverse relabels h into g's row frame:
        // walk vectors satisfy (A_g^l j)[u] = (A_h^l j)[phi0(u)].
        std::vector<int> phi0(h.n);
        for (int i = 0; i < h.n; ++i) phi0[out.witness->q[i]] = i;
        frame = h.relabeled(phi0);
    }

    pr.comain = comain(g, h);
    pr.same_walk_matrix = same_walk_matrix(g, frame);
    pr.same_all_k_walk_matrices = same_walk_matrices_all_k(g, frame);
    pr.same_main_eigenspace = main_eigenspace_equal(g, frame);
    pr.same_principal_main_vectors = same_principal_main_vectors(g, frame);
    pr.same_main_eigenpairs = same_main_eigenpairs(g, frame);
    out.q = related_walk_matrices(g, frame);
    pr.related_walk_matrices = out.q.has_value();
    return out;
}

RelationProfile relation_profile(const Graph& g, const Graph& h) {
    return analyze_pair(g, h).profile;
}

std::vector<std::string> implication_violations(const RelationProfile& pr) {
    std::vector<std::string> out;
    if (pr.cdc_isomorphic && !pr.same_walk_matrix) out.emplace_back("THM_3_2");
    if (pr.same_walk_matrix && !pr.same_main_eigenspace) out.emplace_back("COR_3_6");
    if (pr.same_principal_main_vectors && !pr.same_main_eigenspace) out.emplace_back("EQ_2");
    // comain + a shared vector set is weaker than the real premise: the same
    // vectors can sit under exchanged eigenvalues (e.g. K2 u 4K1 vs 2K2 u 2K1
    // with mains {0,1}), and those pairs genuinely differ from W(2) on.
    if (pr.same_main_eigenpairs && !pr.same_all_k_walk_matrices)
        out.emplace_back("THM_5_5");
    // The claim only constrains W(k) for k >= 2, so a shared one-column walk
    // matrix (any two regular graphs) is not a violation; all-k equality is.
    if (pr.same_principal_main_vectors && !pr.comain && pr.same_all_k_walk_matrices)
        out.emplace_back("PROP_5_3");
    if (pr.related_walk_matrices != pr.same_main_eigenspace) out.emplace_back("THM_5_6");
    return out;
}

std::vector<std::pair<size_t, size_t>>
check_question_cdc_implies_comain(const std::vector<Graph>& corpus) {
    std::unordered_map<Certificate, std::vector<size_t>> groups;
    for (size_t i = 0; i < corpus.size(); ++i)
        groups[certificate(cdc(corpus[i]).graph)].push_back(i);

    std::vector<std::vector<Int>> poly(corpus.size());
    std::vector<std::pair<size_t, size_t>> offenders;
    for (const auto& [cert, members] : groups) {
        if (members.size() < 2) continue;
        for (size_t a = 0; a < members.size(); ++a)
            for (size_t b = a + 1; b < members.size(); ++b) {
                size_t i = members[a], j = members[b];
                if (poly[i].empty()) poly[i] = main_polynomial(corpus[i]);
                if (poly[j].empty()) poly[j] = main_polynomial(corpus[j]);
                if (poly[i] != poly[j]) offenders.emplace_back(std::min(i, j), std::max(i, j));
            }
    }
    std::sort(offenders.begin(), offenders.end());
    return offenders;
}

} // namespace walkmat
