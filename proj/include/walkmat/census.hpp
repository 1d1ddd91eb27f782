#ifndef WALKMAT_CENSUS_HPP
#define WALKMAT_CENSUS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "walkmat/canon.hpp"
#include "walkmat/exact.hpp"
#include "walkmat/graph.hpp"

namespace walkmat {

struct CensusOptions {
    int jobs = 0; // worker threads; 0 or less means hardware concurrency
};

struct GraphSummary {
    int index = 0; // 1-based position in the input
    int order = 0;
    int p = 0;
    std::vector<Int> main_poly; // coefficients by ascending power, monic
    std::vector<int> degree_sequence;
};

// Non-isomorphic pair with isomorphic double coverings; the witness has been
// verified with verify_tf before the report is returned.
struct SameCdcPair {
    int i = 0, j = 0; // 1-based, i < j
    std::string cdc_certificate_hex;
    TfWitness witness; // A_j[x][y] = A_i[q[x]][r[y]]
};

/* Pair whose walk matrices W(p) agree entrywise under the labelings in the
   input file while the (p+1)-column walk matrices differ. Only p >= 2 is
   scanned: W(1) is the all-ones column for every graph, so one-column
   agreement is vacuous. The comparison is deliberately labeling-sensitive
   (no relabeling search); the same corpus relabeled can yield a different
   list. */
struct SameWalkPair {
    int i = 0, j = 0;
    int p = 0;
    std::vector<std::vector<Int>> w_rows;    // shared rows of W(p)
    std::vector<std::vector<Int>> kw_rows_i; // rows of W(p+1) of graph i
    std::vector<std::vector<Int>> kw_rows_j;
};

struct ViolationRecord {
    int i = 0, j = 0;
    std::vector<std::string> labels;
};

struct CensusReport {
    size_t corpus_size = 0;
    std::vector<GraphSummary> graphs;
    std::uint64_t comain_pair_count = 0;
    std::vector<SameCdcPair> same_cdc_pairs;
    std::vector<SameWalkPair> same_w_diff_kw_pairs;
    std::vector<ViolationRecord> violations;
    std::vector<std::pair<int, int>> question_5_8_offenders; // 1-based, i < j
    std::vector<std::pair<std::string, double>> timings_ms;  // per stage
};

/* The full pipeline: (1) parse, (2) exact main polynomial per graph,
   (3) comain pair count from polynomial buckets, (4) double-covering
   certificate grouping into non-isomorphic same-CDC pairs, (5) witness
   extraction and verification per pair, (6) same-walk-matrix scan for
   (p+1)-column failures, (7) the CDC-implies-comain check, plus a closing
   implication-violation audit over every surfaced pair. Everything except
   timings_ms is a pure function of the corpus, independent of opts.jobs. */
CensusReport run_census(const std::vector<Graph>& corpus,
                        const CensusOptions& opts = {});

// Same, reading a line-delimited graph6 file. Parse failures carry the
// file name and line number.
CensusReport run_census_file(const std::string& path,
                             const CensusOptions& opts = {});

std::string report_to_json(const CensusReport& rep, bool include_graphs,
                           bool include_timings);
std::string report_to_text(const CensusReport& rep);
std::string pairs_to_csv(const CensusReport& rep);

} // namespace walkmat

#endif
