#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "walkmat/canon.hpp"
#include "walkmat/cdc.hpp"
#include "walkmat/census.hpp"
#include "walkmat/graph.hpp"
#include "walkmat/graph6.hpp"
#include "walkmat/hierarchy.hpp"
#include "walkmat/spectral.hpp"
#include "walkmat/walk.hpp"

namespace {

using namespace walkmat;
using ordered_json = nlohmann::ordered_json;

ordered_json jint(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

std::string poly_to_string(const std::vector<Int>& coeffs) {
    int p = static_cast<int>(coeffs.size()) - 1;
    if (p < 0) return "0";
    if (p == 0) return coeffs[0].str();
    std::string s;
    for (int k = p; k >= 0; --k) {
        const Int& c = coeffs[k];
        if (c == 0) continue;
        bool neg = c < 0;
        Int mag = neg ? Int(-c) : c;
        if (s.empty()) {
            if (neg) s += '-';
        } else {
            s += neg ? " - " : " + ";
        }
        if (k == 0) {
            s += mag.str();
        } else {
            if (mag != 1) s += mag.str();
            s += 'x';
            if (k > 1) s += '^' + std::to_string(k);
        }
    }
    return s.empty() ? "0" : s;
}

std::string fmt_double(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(4) << v;
    return os.str();
}

std::vector<Graph> graphs_from_arg(const std::string& input) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(input, ec))
        return read_graph6_file(input);
    try {
        return {parse_graph6(input)};
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error("'" + input +
                                 "' is neither a readable file nor a graph6 record (" +
                                 e.what() + ")");
    }
}

void print_analysis_text(std::ostream& os, const Graph& g, int index) {
    os << "graph " << index << ": order " << g.n << ", " << g.edge_count()
       << " edges, graph6 " << write_graph6(g) << "\n";
    if (g.n == 0) {
        os << "  p 0, main polynomial 1\n";
        return;
    }
    os << "  degree sequence ";
    for (int d : g.degree_sequence()) os << d << ' ';
    os << "\n  spectrum        ";
    for (const auto& grp : spectrum(g).groups)
        os << fmt_double(grp.value) << "(x" << grp.multiplicity << ") ";
    MainDecomposition md = main_decomposition(g);
    os << "\n  main eigenvalues";
    for (const auto& m : md.mains)
        os << ' ' << fmt_double(m.value) << " (weight " << fmt_double(m.weight) << ")";
    os << "\n  p               " << md.p;
    os << "\n  main polynomial " << poly_to_string(md.main_poly) << "\n";
    IntMatrix w = walk_matrix_k(g, std::max(md.p, 1));
    os << "  walk matrix W(" << w.cols << ")\n";
    for (int r = 0; r < w.rows; ++r) {
        os << "   ";
        for (int c = 0; c < w.cols; ++c) os << ' ' << w.at(r, c);
        os << "\n";
    }
    CdcGraph c = cdc(g);
    os << "  CDC order " << c.graph.n << ", components "
       << components(c.graph).size() << "\n";
}

ordered_json analysis_json(const Graph& g) {
    ordered_json out;
    out["order"] = g.n;
    out["graph6"] = write_graph6(g);
    out["degree_sequence"] = g.degree_sequence();
    if (g.n == 0) {
        out["p"] = 0;
        out["main_poly"] = ordered_json::array({1});
        out["main_poly_str"] = "1";
        return out;
    }
    auto spec_arr = ordered_json::array();
    for (const auto& grp : spectrum(g).groups) {
        ordered_json e;
        e["value"] = grp.value;
        e["multiplicity"] = grp.multiplicity;
        spec_arr.push_back(std::move(e));
    }
    out["spectrum"] = std::move(spec_arr);
    MainDecomposition md = main_decomposition(g);
    auto mains = ordered_json::array();
    for (const auto& m : md.mains) {
        ordered_json e;
        e["value"] = m.value;
        e["weight"] = m.weight;
        mains.push_back(std::move(e));
    }
    out["main_eigenvalues"] = std::move(mains);
    out["p"] = md.p;
    auto poly = ordered_json::array();
    for (const Int& c : md.main_poly) poly.push_back(jint(c));
    out["main_poly"] = std::move(poly);
    out["main_poly_str"] = poly_to_string(md.main_poly);
    IntMatrix w = walk_matrix_k(g, std::max(md.p, 1));
    auto rows = ordered_json::array();
    for (int r = 0; r < w.rows; ++r) {
        auto row = ordered_json::array();
        for (int c = 0; c < w.cols; ++c) row.push_back(jint(w.at(r, c)));
        rows.push_back(std::move(row));
    }
    out["walk_matrix"] = std::move(rows);
    CdcGraph c = cdc(g);
    out["cdc"] = {{"order", c.graph.n},
                  {"components", components(c.graph).size()}};
    return out;
}

int cmd_analyze(const std::string& input, bool as_json) {
    std::vector<Graph> graphs = graphs_from_arg(input);
    if (as_json) {
        if (graphs.size() == 1) {
            std::cout << analysis_json(graphs[0]).dump(2) << "\n";
        } else {
            auto arr = ordered_json::array();
            for (const Graph& g : graphs) arr.push_back(analysis_json(g));
            std::cout << arr.dump(2) << "\n";
        }
    } else {
        for (size_t i = 0; i < graphs.size(); ++i)
            print_analysis_text(std::cout, graphs[i], static_cast<int>(i) + 1);
    }
    return 0;
}

int cmd_pair(const std::string& a, const std::string& b, bool pad) {
    Graph g = parse_graph6(a);
    Graph h = parse_graph6(b);
    if (g.n != h.n) {
        if (!pad)
            throw std::runtime_error("orders differ (" + std::to_string(g.n) +
                                     " vs " + std::to_string(h.n) +
                                     "); pass --pad to add isolated vertices");
        int n = std::max(g.n, h.n);
        g = add_isolated(g, n - g.n);
        h = add_isolated(h, n - h.n);
    }
    PairAnalysis pa = analyze_pair(g, h);
    std::vector<std::string> viols = implication_violations(pa.profile);

    ordered_json out;
    out["order"] = g.n;
    out["profile"] = {
        {"comain", pa.profile.comain},
        {"same_walk_matrix", pa.profile.same_walk_matrix},
        {"same_all_k_walk_matrices", pa.profile.same_all_k_walk_matrices},
        {"same_main_eigenspace", pa.profile.same_main_eigenspace},
        {"same_principal_main_vectors", pa.profile.same_principal_main_vectors},
        {"same_main_eigenpairs", pa.profile.same_main_eigenpairs},
        {"related_walk_matrices", pa.profile.related_walk_matrices},
        {"cdc_isomorphic", pa.profile.cdc_isomorphic},
    };
    if (pa.witness) {
        out["tf_witness"] = {{"q", pa.witness->q}, {"r", pa.witness->r}};
    } else {
        out["tf_witness"] = nullptr;
    }
    if (pa.q) {
        auto rows = ordered_json::array();
        for (const auto& row : *pa.q) {
            auto r = ordered_json::array();
            for (const Rat& v : row) r.push_back(v.str());
            rows.push_back(std::move(r));
        }
        out["related_q"] = std::move(rows);
    } else {
        out["related_q"] = nullptr;
    }
    out["violations"] = viols;
    std::cout << out.dump(2) << "\n";
    return viols.empty() ? 0 : 1;
}

int cmd_cdc(const std::string& input, bool as_json) {
    Graph g = parse_graph6(input);
    CdcGraph c = cdc(g);
    size_t comps = components(c.graph).size();
    if (as_json) {
        ordered_json out;
        out["base_order"] = c.base_n;
        out["order"] = c.graph.n;
        out["graph6"] = write_graph6(c.graph);
        out["components"] = comps;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "base order " << c.base_n << " -> CDC order " << c.graph.n
                  << "\n"
                  << "graph6     " << write_graph6(c.graph) << "\n"
                  << "components " << comps << "\n";
    }
    return 0;
}

int cmd_census(const std::string& path, const std::string& out_json,
               const std::string& out_csv, int jobs) {
    CensusOptions opts;
    opts.jobs = jobs;
    CensusReport rep = run_census_file(path, opts);
    std::cout << report_to_text(rep);
    if (!out_json.empty()) {
        std::ofstream os(out_json);
        if (!os) throw std::runtime_error("cannot write " + out_json);
        os << report_to_json(rep, true, true);
    }
    if (!out_csv.empty()) {
        std::ofstream os(out_csv);
        if (!os) throw std::runtime_error("cannot write " + out_csv);
        os << pairs_to_csv(rep);
    }
    bool bad = !rep.violations.empty() || !rep.question_5_8_offenders.empty();
    return bad ? 1 : 0;
}

int cmd_verify_hierarchy(const std::string& path, int max_order) {
    std::vector<Graph> corpus = read_graph6_file(path);
    if (max_order > 0) {
        std::vector<Graph> kept;
        for (Graph& g : corpus)
            if (g.n <= max_order) kept.push_back(std::move(g));
        corpus = std::move(kept);
    }
    size_t pairs = 0, bad = 0;
    for (size_t i = 0; i < corpus.size(); ++i) {
        for (size_t j = i + 1; j < corpus.size(); ++j) {
            Graph a = corpus[i];
            Graph b = corpus[j];
            int n = std::max(a.n, b.n);
            a = add_isolated(a, n - a.n);
            b = add_isolated(b, n - b.n);
            auto viols = implication_violations(relation_profile(a, b));
            ++pairs;
            if (!viols.empty()) {
                ++bad;
                std::cout << "violation: pair (" << i + 1 << ", " << j + 1 << ")";
                for (const auto& v : viols) std::cout << ' ' << v;
                std::cout << "\n";
            }
        }
    }
    std::cout << corpus.size() << " graphs, " << pairs << " pairs profiled, "
              << bad << " with violations\n";
    return bad ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"walk matrices, main eigenvalues and double coverings"};
    app.require_subcommand(1);
    int rc = 0;

    std::string an_input;
    bool an_json = false;
    auto* an = app.add_subcommand("analyze", "summarize graphs (graph6 string or file)");
    an->add_option("input", an_input, "graph6 record or file path")->required();
    an->add_flag("--json", an_json, "JSON output");
    an->callback([&] { rc = cmd_analyze(an_input, an_json); });

    std::string pr_a, pr_b;
    bool pr_pad = false;
    auto* pr = app.add_subcommand("pair", "full relation profile of two graphs");
    pr->add_option("g6a", pr_a, "first graph6 record")->required();
    pr->add_option("g6b", pr_b, "second graph6 record")->required();
    pr->add_flag("--pad", pr_pad, "pad the smaller graph with isolated vertices");
    pr->callback([&] { rc = cmd_pair(pr_a, pr_b, pr_pad); });

    std::string cd_input;
    bool cd_json = false;
    auto* cd = app.add_subcommand("cdc", "canonical double covering of a graph");
    cd->add_option("g6", cd_input, "graph6 record")->required();
    cd->add_flag("--json", cd_json, "JSON output");
    cd->callback([&] { rc = cmd_cdc(cd_input, cd_json); });

    std::string cs_path, cs_out, cs_csv;
    int cs_jobs = 0;
    auto* cs = app.add_subcommand("census", "full pipeline over a graph6 corpus");
    cs->add_option("file", cs_path, "line-delimited graph6 file")->required();
    cs->add_option("--out", cs_out, "write the JSON report here");
    cs->add_option("--csv", cs_csv, "write the pair lists here as CSV");
    cs->add_option("--jobs", cs_jobs, "worker threads (default: all cores)");
    cs->callback([&] { rc = cmd_census(cs_path, cs_out, cs_csv, cs_jobs); });

    std::string vh_path;
    int vh_max = 0;
    auto* vh = app.add_subcommand("verify-hierarchy",
                                  "profile every pair in a corpus and report violations");
    vh->add_option("file", vh_path, "line-delimited graph6 file")->required();
    vh->add_option("--max-order", vh_max, "skip graphs above this order");
    vh->callback([&] { rc = cmd_verify_hierarchy(vh_path, vh_max); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
