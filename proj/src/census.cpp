#include "walkmat/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "json.hpp"

#include "walkmat/cdc.hpp"
#include "walkmat/graph6.hpp"
#include "walkmat/hierarchy.hpp"
#include "walkmat/walk.hpp"

namespace walkmat {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

/* Work-stealing map over [0, count) writing into caller-preallocated slots.
   Scheduling order varies with the worker count but each slot is a pure
   function of its index, so the merged result never does. */
template <class Body>
void parallel_map(size_t count, int jobs, Body&& body) {
    if (count == 0) return;
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    if (static_cast<size_t>(jobs) > count) jobs = static_cast<int>(count);
    if (jobs == 1) {
        for (size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr err;
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            try {
                for (size_t i; (i = next.fetch_add(1)) < count;) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
                next.store(count);
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

std::vector<std::vector<Int>> matrix_rows(const IntMatrix& m) {
    std::vector<std::vector<Int>> rows(m.rows);
    for (int r = 0; r < m.rows; ++r) {
        rows[r].reserve(m.cols);
        for (int c = 0; c < m.cols; ++c) rows[r].push_back(m.at(r, c));
    }
    return rows;
}

CensusReport run_pipeline(const std::vector<Graph>& corpus,
                          const CensusOptions& opts, CensusReport rep) {
    const size_t n = corpus.size();
    rep.corpus_size = n;

    // Stage 2: exact main polynomial per graph.
    auto t0 = Clock::now();
    rep.graphs.assign(n, GraphSummary{});
    parallel_map(n, opts.jobs, [&](size_t i) {
        GraphSummary& s = rep.graphs[i];
        s.index = static_cast<int>(i) + 1;
        s.order = corpus[i].n;
        s.main_poly = main_polynomial(corpus[i]);
        s.p = static_cast<int>(s.main_poly.size()) - 1;
        s.degree_sequence = corpus[i].degree_sequence();
    });
    rep.timings_ms.emplace_back("main_polynomials", ms_since(t0));

    // Stage 3: comain count from polynomial buckets.
    t0 = Clock::now();
    std::map<std::vector<Int>, std::vector<int>> poly_buckets;
    for (size_t i = 0; i < n; ++i)
        poly_buckets[rep.graphs[i].main_poly].push_back(static_cast<int>(i));
    rep.comain_pair_count = 0;
    for (const auto& [poly, members] : poly_buckets) {
        std::uint64_t b = members.size();
        rep.comain_pair_count += b * (b - 1) / 2;
    }
    rep.timings_ms.emplace_back("comain_buckets", ms_since(t0));

    // Stage 4: group by double-covering certificate, keep cross pairs of
    // non-isomorphic members.
    t0 = Clock::now();
    std::vector<Certificate> graph_cert(n), cdc_cert(n);
    parallel_map(n, opts.jobs, [&](size_t i) {
        graph_cert[i] = certificate(corpus[i]);
        cdc_cert[i] = certificate(cdc(corpus[i]).graph);
    });
    std::map<Certificate, std::vector<int>> cdc_groups;
    for (size_t i = 0; i < n; ++i)
        cdc_groups[cdc_cert[i]].push_back(static_cast<int>(i));
    std::vector<std::pair<int, int>> cdc_pairs; // 0-based
    for (const auto& [cert, members] : cdc_groups)
        for (size_t a = 0; a + 1 < members.size(); ++a)
            for (size_t b = a + 1; b < members.size(); ++b)
                if (graph_cert[members[a]] != graph_cert[members[b]])
                    cdc_pairs.emplace_back(members[a], members[b]);
    std::sort(cdc_pairs.begin(), cdc_pairs.end());
    rep.timings_ms.emplace_back("cdc_grouping", ms_since(t0));

    // Stage 5: extract and re-verify a TF witness for every same-CDC pair.
    t0 = Clock::now();
    rep.same_cdc_pairs.assign(cdc_pairs.size(), SameCdcPair{});
    parallel_map(cdc_pairs.size(), opts.jobs, [&](size_t k) {
        auto [i, j] = cdc_pairs[k];
        SameCdcPair& out = rep.same_cdc_pairs[k];
        out.i = i + 1;
        out.j = j + 1;
        out.cdc_certificate_hex = certificate_hex(cdc_cert[i]);
        auto w = tf_isomorphism(corpus[i], corpus[j]);
        if (!w)
            throw std::logic_error("census: equal CDC certificates but no TF witness");
        if (!verify_tf(corpus[i], corpus[j], *w))
            throw std::logic_error("census: extracted TF witness failed verification");
        out.witness = std::move(*w);
    });
    rep.timings_ms.emplace_back("tf_witnesses", ms_since(t0));

    // Stage 6: equal walk matrices with unequal (p+1)-column walk matrices.
    // Equality is entrywise under the input labelings (no relabeling search),
    // and only walk matrices with at least two columns take part: W(1) is the
    // all-ones column for every graph, so one-column agreement carries no
    // information and would list every pair of regular graphs. Equal W(p+1)
    // would force the same recurrence and with it equality for every k, so
    // one extra column decides the whole family.
    t0 = Clock::now();
    std::vector<std::vector<std::vector<Int>>> w_rows(n), kw_rows(n);
    parallel_map(n, opts.jobs, [&](size_t i) {
        int p = rep.graphs[i].p;
        if (p < 2) return;
        w_rows[i] = matrix_rows(walk_matrix_k(corpus[i], p));
        kw_rows[i] = matrix_rows(walk_matrix_k(corpus[i], p + 1));
    });
    std::map<std::vector<std::vector<Int>>, std::vector<int>> w_buckets;
    for (size_t i = 0; i < n; ++i)
        if (!w_rows[i].empty()) w_buckets[w_rows[i]].push_back(static_cast<int>(i));
    std::vector<std::pair<int, int>> samew_pairs; // 0-based, incl. same-kW
    for (const auto& [rows, members] : w_buckets)
        for (size_t a = 0; a + 1 < members.size(); ++a)
            for (size_t b = a + 1; b < members.size(); ++b)
                samew_pairs.emplace_back(members[a], members[b]);
    std::sort(samew_pairs.begin(), samew_pairs.end());
    for (auto [i, j] : samew_pairs) {
        if (kw_rows[i] == kw_rows[j]) continue;
        SameWalkPair out;
        out.i = i + 1;
        out.j = j + 1;
        out.p = rep.graphs[i].p;
        out.w_rows = w_rows[i];
        out.kw_rows_i = kw_rows[i];
        out.kw_rows_j = kw_rows[j];
        rep.same_w_diff_kw_pairs.push_back(std::move(out));
    }
    rep.timings_ms.emplace_back("same_w_scan", ms_since(t0));

    // Stage 7: does an isomorphic double covering force comain?
    t0 = Clock::now();
    for (auto [a, b] : check_question_cdc_implies_comain(corpus))
        rep.question_5_8_offenders.emplace_back(static_cast<int>(a) + 1,
                                                static_cast<int>(b) + 1);
    rep.timings_ms.emplace_back("question_5_8", ms_since(t0));

    /* Closing audit: profile every surfaced pair (comain, same-CDC, shared
       walk-matrix bucket) and collect implication violations. Each
       implication's premise puts any violating pair into one of those sets:
       cdc_isomorphic pairs are same-CDC pairs, premises or conclusions
       involving the walk matrix put the pair in a shared W bucket, and
       comain premises put it in a polynomial bucket. Mixed-order pairs have
       no shared labeling frame and are skipped. */
    t0 = Clock::now();
    std::set<std::pair<int, int>> audit;
    for (const auto& [poly, members] : poly_buckets)
        for (size_t a = 0; a + 1 < members.size(); ++a)
            for (size_t b = a + 1; b < members.size(); ++b)
                if (corpus[members[a]].n == corpus[members[b]].n)
                    audit.insert({members[a], members[b]});
    audit.insert(cdc_pairs.begin(), cdc_pairs.end());
    audit.insert(samew_pairs.begin(), samew_pairs.end());
    std::vector<std::pair<int, int>> audit_pairs(audit.begin(), audit.end());
    std::vector<std::vector<std::string>> labels(audit_pairs.size());
    parallel_map(audit_pairs.size(), opts.jobs, [&](size_t k) {
        auto [i, j] = audit_pairs[k];
        labels[k] = implication_violations(relation_profile(corpus[i], corpus[j]));
    });
    for (size_t k = 0; k < audit_pairs.size(); ++k) {
        if (labels[k].empty()) continue;
        rep.violations.push_back({audit_pairs[k].first + 1,
                                  audit_pairs[k].second + 1,
                                  std::move(labels[k])});
    }
    rep.timings_ms.emplace_back("violations_audit", ms_since(t0));
    return rep;
}

nlohmann::ordered_json json_int(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

nlohmann::ordered_json json_rows(const std::vector<std::vector<Int>>& rows) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        auto r = nlohmann::ordered_json::array();
        for (const Int& v : row) r.push_back(json_int(v));
        arr.push_back(std::move(r));
    }
    return arr;
}

} // namespace

CensusReport run_census(const std::vector<Graph>& corpus,
                        const CensusOptions& opts) {
    CensusReport rep;
    rep.timings_ms.emplace_back("parse", 0.0);
    return run_pipeline(corpus, opts, std::move(rep));
}

CensusReport run_census_file(const std::string& path,
                             const CensusOptions& opts) {
    CensusReport rep;
    auto t0 = Clock::now();
    std::vector<Graph> corpus = read_graph6_file(path);
    rep.timings_ms.emplace_back("parse", ms_since(t0));
    return run_pipeline(corpus, opts, std::move(rep));
}

std::string report_to_json(const CensusReport& rep, bool include_graphs,
                           bool include_timings) {
    nlohmann::ordered_json out;
    out["corpus_size"] = rep.corpus_size;
    out["comain_pair_count"] = rep.comain_pair_count;
    auto cdc_arr = nlohmann::ordered_json::array();
    for (const auto& pr : rep.same_cdc_pairs) {
        nlohmann::ordered_json e;
        e["i"] = pr.i;
        e["j"] = pr.j;
        e["cdc_certificate_hex"] = pr.cdc_certificate_hex;
        e["q"] = pr.witness.q;
        e["r"] = pr.witness.r;
        cdc_arr.push_back(std::move(e));
    }
    out["same_cdc_pairs"] = std::move(cdc_arr);
    auto w_arr = nlohmann::ordered_json::array();
    for (const auto& pr : rep.same_w_diff_kw_pairs) {
        nlohmann::ordered_json e;
        e["i"] = pr.i;
        e["j"] = pr.j;
        e["p"] = pr.p;
        e["w_rows"] = json_rows(pr.w_rows);
        e["kw_rows_i"] = json_rows(pr.kw_rows_i);
        e["kw_rows_j"] = json_rows(pr.kw_rows_j);
        w_arr.push_back(std::move(e));
    }
    out["same_w_diff_kw_pairs"] = std::move(w_arr);
    auto v_arr = nlohmann::ordered_json::array();
    for (const auto& v : rep.violations) {
        nlohmann::ordered_json e;
        e["i"] = v.i;
        e["j"] = v.j;
        e["labels"] = v.labels;
        v_arr.push_back(std::move(e));
    }
    out["violations"] = std::move(v_arr);
    auto q_arr = nlohmann::ordered_json::array();
    for (auto [i, j] : rep.question_5_8_offenders)
        q_arr.push_back(nlohmann::ordered_json::array({i, j}));
    out["question_5_8_offenders"] = std::move(q_arr);
    if (include_timings) {
        nlohmann::ordered_json t;
        for (const auto& [stage, ms] : rep.timings_ms) t[stage] = ms;
        out["timings_ms"] = std::move(t);
    }
    if (include_graphs) {
        auto g_arr = nlohmann::ordered_json::array();
        for (const auto& s : rep.graphs) {
            nlohmann::ordered_json e;
            e["index"] = s.index;
            e["order"] = s.order;
            e["p"] = s.p;
            auto poly = nlohmann::ordered_json::array();
            for (const Int& c : s.main_poly) poly.push_back(json_int(c));
            e["main_poly"] = std::move(poly);
            e["degree_sequence"] = s.degree_sequence;
            g_arr.push_back(std::move(e));
        }
        out["graphs"] = std::move(g_arr);
    }
    return out.dump(2) + "\n";
}

std::string report_to_text(const CensusReport& rep) {
    std::ostringstream os;
    os << std::left;
    os << std::setw(28) << "corpus size" << rep.corpus_size << "\n";
    os << std::setw(28) << "comain pairs" << rep.comain_pair_count << "\n";
    os << std::setw(28) << "same-CDC pairs" << rep.same_cdc_pairs.size() << "\n";
    os << std::setw(28) << "same-W / diff-kW pairs"
       << rep.same_w_diff_kw_pairs.size() << "\n";
    os << std::setw(28) << "hierarchy violations" << rep.violations.size() << "\n";
    os << std::setw(28) << "question 5.8 offenders"
       << rep.question_5_8_offenders.size() << "\n";
    if (!rep.same_cdc_pairs.empty()) {
        os << "\nsame-CDC pairs (i, j, CDC certificate):\n";
        for (const auto& pr : rep.same_cdc_pairs)
            os << "  " << std::right << std::setw(6) << pr.i << ' '
               << std::setw(6) << pr.j << "  " << pr.cdc_certificate_hex << "\n";
    }
    if (!rep.same_w_diff_kw_pairs.empty()) {
        os << "\nsame-W / diff-kW pairs (i, j, p):\n";
        for (const auto& pr : rep.same_w_diff_kw_pairs)
            os << "  " << std::right << std::setw(6) << pr.i << ' '
               << std::setw(6) << pr.j << "  " << pr.p << "\n";
    }
    if (!rep.violations.empty()) {
        os << "\nhierarchy violations (i, j, labels):\n";
        for (const auto& v : rep.violations) {
            os << "  " << std::right << std::setw(6) << v.i << ' '
               << std::setw(6) << v.j << " ";
            for (const auto& l : v.labels) os << ' ' << l;
            os << "\n";
        }
    }
    if (!rep.question_5_8_offenders.empty()) {
        os << "\nquestion 5.8 offenders (i, j):\n";
        for (auto [i, j] : rep.question_5_8_offenders)
            os << "  " << std::right << std::setw(6) << i << ' '
               << std::setw(6) << j << "\n";
    }
    os << "\ntimings (ms):\n";
    for (const auto& [stage, ms] : rep.timings_ms)
        os << "  " << std::left << std::setw(20) << stage << std::right
           << std::fixed << std::setprecision(1) << std::setw(10) << ms << "\n";
    return os.str();
}

std::string pairs_to_csv(const CensusReport& rep) {
    std::ostringstream os;
    os << "kind,i,j,detail\n";
    for (const auto& pr : rep.same_cdc_pairs)
        os << "same_cdc," << pr.i << ',' << pr.j << ','
           << pr.cdc_certificate_hex << "\n";
    for (const auto& pr : rep.same_w_diff_kw_pairs)
        os << "same_w_diff_kw," << pr.i << ',' << pr.j << ",p=" << pr.p << "\n";
    for (const auto& v : rep.violations) {
        os << "violation," << v.i << ',' << v.j << ',';
        for (size_t k = 0; k < v.labels.size(); ++k) {
            if (k) os << '|';
            os << v.labels[k];
        }
        os << "\n";
    }
    for (auto [i, j] : rep.question_5_8_offenders)
        os << "question_5_8," << i << ',' << j << ",\n";
    return os.str();
}

} // namespace walkmat
