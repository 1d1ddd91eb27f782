#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "walkmat/canon.hpp"
#include "walkmat/cdc.hpp"
#include "walkmat/census.hpp"
#include "walkmat/corpus.hpp"
#include "walkmat/graph6.hpp"
#include "walkmat/spectral.hpp"

#include "fixtures.hpp"

using walkmat::CensusOptions;
using walkmat::CensusReport;
using walkmat::Graph;

namespace {

// Comain count recomputed along the floating path: bucket by the multiset
// of rounded main eigenvalues instead of the exact polynomial.
std::uint64_t float_comain_pairs(const std::vector<Graph>& corpus) {
    std::map<std::vector<long long>, std::uint64_t> buckets;
    for (const Graph& g : corpus) {
        std::vector<long long> key;
        for (const auto& m : walkmat::main_decomposition(g).mains)
            key.push_back(std::llround(m.value * 1e9));
        ++buckets[key];
    }
    std::uint64_t pairs = 0;
    for (const auto& [key, count] : buckets) pairs += count * (count - 1) / 2;
    return pairs;
}

} // namespace

TEST_CASE("census counts on the full five- and six-vertex corpora") {
    CensusOptions opts;
    opts.jobs = 2;

    auto c5 = walkmat::enumerate_graphs(5);
    CensusReport r5 = walkmat::run_census(c5, opts);
    CHECK(r5.corpus_size == 34);
    CHECK(r5.comain_pair_count == 3);
    CHECK(r5.comain_pair_count == float_comain_pairs(c5));
    CHECK(r5.same_cdc_pairs.empty());
    CHECK(r5.same_w_diff_kw_pairs.empty());
    CHECK(r5.violations.empty());
    CHECK(r5.question_5_8_offenders.empty());
    CHECK(r5.graphs.size() == 34);

    auto c6 = walkmat::enumerate_graphs(6);
    CensusReport r6 = walkmat::run_census(c6, opts);
    CHECK(r6.corpus_size == 156);
    CHECK(r6.comain_pair_count == 16);
    CHECK(r6.comain_pair_count == float_comain_pairs(c6));
    CHECK(r6.same_w_diff_kw_pairs.empty());
    CHECK(r6.violations.empty());
    CHECK(r6.question_5_8_offenders.empty());

    // The lone same-covering pair on six vertices: the hexagon against two
    // triangles, both of whose coverings are a pair of hexagons.
    REQUIRE(r6.same_cdc_pairs.size() == 1);
    const auto& pr = r6.same_cdc_pairs[0];
    Graph a = c6[pr.i - 1], b = c6[pr.j - 1];
    Graph two_triangles =
        walkmat::disjoint_union(fixtures::cycle(3), fixtures::cycle(3));
    std::set<walkmat::Certificate> got{walkmat::certificate(a),
                                       walkmat::certificate(b)};
    std::set<walkmat::Certificate> want{
        walkmat::certificate(fixtures::cycle(6)),
        walkmat::certificate(two_triangles)};
    CHECK(got == want);
    CHECK(walkmat::verify_tf(a, b, pr.witness));
    CHECK(pr.cdc_certificate_hex ==
          walkmat::certificate_hex(
              walkmat::certificate(walkmat::cdc(a).graph)));
}

TEST_CASE("reports are identical for any worker count, timings aside") {
    auto corpus = walkmat::enumerate_graphs(5);
    CensusOptions one, four;
    one.jobs = 1;
    four.jobs = 4;
    CensusReport a = walkmat::run_census(corpus, one);
    CensusReport b = walkmat::run_census(corpus, four);
    CHECK(walkmat::report_to_json(a, true, false) ==
          walkmat::report_to_json(b, true, false));
    CHECK(walkmat::pairs_to_csv(a) == walkmat::pairs_to_csv(b));
}

TEST_CASE("file and in-memory censuses agree") {
    auto corpus = walkmat::enumerate_graphs(4);
    std::string path = "census_roundtrip.g6";
    {
        std::ofstream out(path);
        for (const Graph& g : corpus) out << walkmat::write_graph6(g) << "\n";
    }
    CensusOptions opts;
    opts.jobs = 1;
    CensusReport from_file = walkmat::run_census_file(path, opts);
    CensusReport from_mem = walkmat::run_census(corpus, opts);
    CHECK(walkmat::report_to_json(from_file, true, false) ==
          walkmat::report_to_json(from_mem, true, false));
    std::remove(path.c_str());
}

TEST_CASE("report serializations carry the headline numbers") {
    CensusOptions opts;
    opts.jobs = 2;
    CensusReport r = walkmat::run_census(walkmat::enumerate_graphs(6), opts);

    std::string json = walkmat::report_to_json(r, false, true);
    for (const char* key :
         {"\"corpus_size\": 156", "\"comain_pair_count\": 16",
          "\"same_cdc_pairs\"", "\"same_w_diff_kw_pairs\"", "\"violations\"",
          "\"question_5_8_offenders\"", "\"timings_ms\"", "\"q\"", "\"r\"",
          "\"cdc_certificate_hex\""})
        CHECK(json.find(key) != std::string::npos);
    CHECK(json.find("\"graphs\"") == std::string::npos);
    CHECK(walkmat::report_to_json(r, true, true).find("\"graphs\"") !=
          std::string::npos);

    std::string text = walkmat::report_to_text(r);
    CHECK(text.find("corpus size") != std::string::npos);
    CHECK(text.find("156") != std::string::npos);

    std::string csv = walkmat::pairs_to_csv(r);
    CHECK(csv.rfind("kind,i,j,detail\n", 0) == 0);
    CHECK(csv.find("same_cdc,") != std::string::npos);
}

TEST_CASE("seven-vertex census separates the walk-matrix list from the covering list") {
    CensusOptions opts;
    opts.jobs = 2;
    CensusReport r = walkmat::run_census(walkmat::enumerate_graphs(7), opts);
    CHECK(r.corpus_size == 1044);
    CHECK(r.comain_pair_count == 113);
    CHECK(r.same_cdc_pairs.size() == 4);
    CHECK(r.same_w_diff_kw_pairs.size() == 2);
    CHECK(r.violations.empty());
    CHECK(r.question_5_8_offenders.empty());
    for (const auto& pr : r.same_w_diff_kw_pairs) {
        CHECK(pr.p >= 2);
        CHECK(pr.kw_rows_i != pr.kw_rows_j);
        // The shared block is genuinely the i-side prefix of both.
        for (size_t row = 0; row < pr.w_rows.size(); ++row)
            for (size_t c = 0; c < pr.w_rows[row].size(); ++c) {
                CHECK(pr.kw_rows_i[row][c] == pr.w_rows[row][c]);
                CHECK(pr.kw_rows_j[row][c] == pr.w_rows[row][c]);
            }
    }
}
