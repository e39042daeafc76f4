#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rainbowlab/ar_search.hpp"
#include "rainbowlab/coloring.hpp"
#include "rainbowlab/extremal.hpp"
#include "rainbowlab/graph.hpp"
#include "rainbowlab/packing.hpp"

using nlohmann::json;
using namespace rainbowlab;

namespace {

// Exit codes: 0 clean, 1 violation or rainbow packing found where absence was
// being checked, 2 usage or input error, 3 failed self-check, 4 node budget
// exhausted before the question was settled.
constexpr int kExitOk = 0;
constexpr int kExitFound = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSelfCheck = 3;
constexpr int kExitExhausted = 4;

int resolve_workers(int flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("RAINBOWLAB_WORKERS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1 || v > 1024)
            throw std::invalid_argument("RAINBOWLAB_WORKERS must be an integer in [1, 1024]");
        return static_cast<int>(v);
    }
    return 1;
}

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::invalid_argument("cannot open output file: " + path);
    os << content;
    if (!os) throw std::invalid_argument("short write on output file: " + path);
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

json base_report(const std::string& command, json config) {
    return json{{"schema_version", 1}, {"command", command}, {"config", std::move(config)}};
}

json packing_json(const RainbowPacking& p) {
    json triples = json::array();
    for (const auto& t : p.triples) triples.push_back({t[0], t[1], t[2]});
    json colors = json::array();
    for (const auto& c : p.triple_colors) colors.push_back({c[0], c[1], c[2]});
    return json{{"triples", triples}, {"colors", colors}};
}

std::pair<int, int> parse_edge(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("edge must look like u,v: " + s);
    try {
        int u = std::stoi(s.substr(0, comma));
        int v = std::stoi(s.substr(comma + 1));
        return {u, v};
    } catch (const std::exception&) {
        throw std::invalid_argument("edge must look like u,v: " + s);
    }
}

const char* outcome_name(AvoidOutcome o) {
    switch (o) {
        case AvoidOutcome::present: return "present";
        case AvoidOutcome::absent: return "absent";
        default: return "exhausted";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"anti-Ramsey toolkit for rainbow triangle packings"};
    app.require_subcommand(1);
    int rc = kExitOk;

    // formulas
    auto* formulas = app.add_subcommand("formulas", "closed-form edge and color counts");
    int f_n = 0, f_t = 0;
    bool f_json = false;
    formulas->add_option("--n", f_n, "vertex count")->required();
    formulas->add_option("--t", f_t, "join clique size")->required();
    formulas->add_flag("--json", f_json, "emit a JSON report");
    formulas->callback([&]() {
        long long te = turan_edges(f_n - f_t, 2);
        long long me = moon_ex(f_n, f_t);
        ArFormulaResult ar = ar_formula(f_n, f_t);
        if (f_json) {
            json rep = base_report("formulas", {{"n", f_n}, {"t", f_t}});
            rep["turan_edges"] = te;
            rep["moon_ex"] = me;
            rep["ar_formula"] = ar.value;
            rep["in_proven_range"] = ar.in_proven_range;
            emit(rep);
        } else {
            std::cout << "turan_edges " << te << "\n"
                      << "moon_ex " << me << "\n"
                      << "ar_formula " << ar.value << "\n"
                      << "in_proven_range " << (ar.in_proven_range ? "true" : "false") << "\n";
        }
    });

    // construct
    auto* construct = app.add_subcommand("construct", "build and self-check the lower-bound coloring");
    int c_n = 0, c_t = 0;
    std::string c_out;
    std::uint64_t c_budget = PackingLimits{}.node_budget;
    bool c_json = false;
    construct->add_option("--n", c_n, "vertex count")->required();
    construct->add_option("--t", c_t, "join clique size")->required();
    construct->add_option("--out", c_out, "write the coloring to this file");
    construct->add_option("--budget", c_budget, "node budget for the self-check")->check(CLI::PositiveNumber);
    construct->add_flag("--json", c_json, "emit a JSON report");
    construct->callback([&]() {
        EdgeColoring col = build_lower_bound_coloring(c_n, c_t);
        PackingLimits lim{c_budget};
        auto packing = has_rainbow_packing(col, c_t + 2, lim);
        if (packing) {
            std::cerr << "self-check failed: construction admits a rainbow packing\n";
            rc = kExitSelfCheck;
            return;
        }
        std::string text = coloring_to_text(col);
        if (!c_out.empty()) write_file(c_out, text);
        if (c_json) {
            json rep = base_report("construct", {{"n", c_n}, {"t", c_t}, {"budget", c_budget}, {"out", c_out}});
            rep["colors"] = col.color_count();
            rep["edges"] = col.edge_total();
            rep["verified_avoids"] = c_t + 2;
            emit(rep);
        } else if (c_out.empty()) {
            std::cout << text;
        } else {
            std::cout << "wrote " << col.color_count() << "-coloring of K_" << c_n << " to " << c_out << "\n";
        }
    });

    // check-rainbow
    auto* check = app.add_subcommand("check-rainbow", "search a coloring for a rainbow triangle packing");
    std::string ck_in;
    int ck_k = 1;
    std::uint64_t ck_budget = PackingLimits{}.node_budget;
    bool ck_json = false;
    check->add_option("--in", ck_in, "coloring file")->required();
    check->add_option("--k", ck_k, "packing size to look for")->required();
    check->add_option("--budget", ck_budget, "node budget")->check(CLI::PositiveNumber);
    check->add_flag("--json", ck_json, "emit a JSON report");
    check->callback([&]() {
        EdgeColoring col = coloring_from_text(read_file(ck_in));
        PackingLimits lim{ck_budget};
        auto packing = has_rainbow_packing(col, ck_k, lim);
        if (ck_json) {
            json rep = base_report("check-rainbow",
                                   {{"in", ck_in}, {"k", ck_k}, {"budget", ck_budget}});
            rep["n"] = col.vertex_count();
            rep["colors"] = col.color_count();
            rep["rainbow_found"] = packing.has_value();
            if (packing) rep["packing"] = packing_json(*packing);
            emit(rep);
        } else if (packing) {
            std::cout << "rainbow packing found:\n";
            for (std::size_t i = 0; i < packing->triples.size(); ++i) {
                const auto& t = packing->triples[i];
                const auto& cs = packing->triple_colors[i];
                std::cout << t[0] << " " << t[1] << " " << t[2] << "  colors " << cs[0] << " " << cs[1] << " "
                          << cs[2] << "\n";
            }
        } else {
            std::cout << "no rainbow packing of size " << ck_k << "\n";
        }
        if (packing) rc = kExitFound;
    });

    // ar-search
    auto* search = app.add_subcommand("ar-search", "exact anti-Ramsey search by canonical enumeration");
    int s_n = 0, s_k = 1, s_r = 0, s_workers = 0, s_split = 0;
    std::uint64_t s_budget = SearchOptions{}.node_budget;
    std::string s_checkpoint, s_witness_out;
    bool s_resume = false, s_json = false;
    search->add_option("--n", s_n, "vertex count")->required();
    search->add_option("--k", s_k, "number of disjoint rainbow triangles")->required();
    search->add_option("--r", s_r, "only decide existence of an avoiding r-coloring")->check(CLI::NonNegativeNumber);
    search->add_option("--budget", s_budget, "node budget")->check(CLI::PositiveNumber);
    search->add_option("--workers", s_workers, "worker threads (default: RAINBOWLAB_WORKERS or 1)")->check(CLI::PositiveNumber);
    search->add_option("--split-depth", s_split, "edges fixed per work unit (default: automatic)")->check(CLI::NonNegativeNumber);
    search->add_option("--checkpoint", s_checkpoint, "checkpoint file for exhausted runs");
    search->add_option("--witness-out", s_witness_out, "write the witness coloring to this file");
    search->add_flag("--resume", s_resume, "resume from the checkpoint file");
    search->add_flag("--json", s_json, "emit a JSON report");
    search->callback([&]() {
        SearchOptions opts;
        opts.node_budget = s_budget;
        opts.workers = resolve_workers(s_workers);
        opts.split_depth = s_split;
        opts.checkpoint_path = s_checkpoint;
        opts.resume = s_resume;
        json config{{"n", s_n},       {"k", s_k},           {"r", s_r},
                    {"budget", s_budget}, {"workers", opts.workers}, {"split_depth", s_split},
                    {"checkpoint", s_checkpoint}, {"resume", s_resume}};
        if (s_r > 0) {
            AvoidingResult res = exists_avoiding_coloring(s_n, s_r, s_k, opts);
            if (res.witness && !s_witness_out.empty()) write_file(s_witness_out, coloring_to_text(*res.witness));
            if (s_json) {
                json rep = base_report("ar-search", config);
                rep["outcome"] = outcome_name(res.outcome);
                rep["nodes"] = res.nodes;
                rep["witness_written"] = res.witness.has_value() && !s_witness_out.empty();
                emit(rep);
            } else {
                std::cout << "outcome " << outcome_name(res.outcome) << "\n"
                          << "nodes " << res.nodes << "\n";
            }
            if (res.outcome == AvoidOutcome::exhausted) rc = kExitExhausted;
        } else {
            SearchReport rep = ar_exact(s_n, s_k, opts);
            if (rep.witness && !s_witness_out.empty()) write_file(s_witness_out, coloring_to_text(*rep.witness));
            bool exact = rep.outcome == SearchOutcome::exact;
            if (s_json) {
                json out = base_report("ar-search", config);
                out["outcome"] = exact ? "exact" : "exhausted";
                out["ar"] = rep.ar;
                out["ar_lower"] = rep.ar_lower;
                out["ar_upper"] = rep.ar_upper;
                out["nodes"] = rep.nodes;
                out["wall_ms"] = rep.wall_ms;
                out["witness_written"] = rep.witness.has_value() && !s_witness_out.empty();
                emit(out);
            } else {
                std::cout << "outcome " << (exact ? "exact" : "exhausted") << "\n";
                if (exact)
                    std::cout << "ar " << rep.ar << "\n";
                else
                    std::cout << "ar_lower " << rep.ar_lower << "\n"
                              << "ar_upper " << rep.ar_upper << "\n";
                std::cout << "nodes " << rep.nodes << "\n";
            }
            if (!exact) rc = kExitExhausted;
        }
    });

    // verify-moon
    auto* vmoon = app.add_subcommand("verify-moon", "census of the packing-number edge bound");
    int vm_nmax = 7;
    bool vm_json = false;
    vmoon->add_option("--n-max", vm_nmax, "largest vertex count to census");
    vmoon->add_flag("--json", vm_json, "emit a JSON report");
    vmoon->callback([&]() {
        CensusResult res = verify_moon(vm_nmax);
        if (vm_json) {
            json rep = base_report("verify-moon", {{"n_max", vm_nmax}});
            rep["graphs_examined"] = res.graphs_examined;
            rep["violations"] = res.violations;
            json ext = json::array();
            for (const auto& r : res.extremal)
                ext.push_back({{"n", r.n}, {"t", r.t}, {"bound", r.bound}, {"graph6", r.graph6},
                               {"matches_reference", r.matches_reference}});
            rep["extremal"] = ext;
            rep["ok"] = res.ok();
            emit(rep);
        } else {
            std::cout << "examined " << res.graphs_examined << "\n";
            for (const auto& r : res.extremal)
                std::cout << "extremal n=" << r.n << " t=" << r.t << " " << r.graph6 << " bound=" << r.bound
                          << (r.matches_reference ? " (reference)" : " (UNEXPECTED)") << "\n";
            for (const auto& v : res.violations) std::cout << "violation: " << v << "\n";
            std::cout << (res.ok() ? "ok" : "FAIL") << "\n";
        }
        if (!res.ok()) rc = kExitFound;
    });

    // verify-gamma
    auto* vgamma = app.add_subcommand("verify-gamma", "census of the triangle-free matching bound");
    int vg_nmax = 7;
    bool vg_json = false;
    vgamma->add_option("--n-max", vg_nmax, "largest vertex count to census");
    vgamma->add_flag("--json", vg_json, "emit a JSON report");
    vgamma->callback([&]() {
        CensusResult res = verify_gamma(vg_nmax);
        if (vg_json) {
            json rep = base_report("verify-gamma", {{"n_max", vg_nmax}});
            rep["graphs_examined"] = res.graphs_examined;
            rep["violations"] = res.violations;
            rep["extremal_count"] = res.extremal.size();
            rep["ok"] = res.ok();
            emit(rep);
        } else {
            std::cout << "examined " << res.graphs_examined << "\n";
            for (const auto& v : res.violations) std::cout << "violation: " << v << "\n";
            std::cout << (res.ok() ? "ok" : "FAIL") << "\n";
        }
        if (!res.ok()) rc = kExitFound;
    });

    // verify-pairs
    auto* vpairs = app.add_subcommand("verify-pairs", "pivot extraction on random dense triangle-free graphs");
    int vp_n = 60, vp_t = 0, vp_count = 100, vp_maxdel = 0;
    std::uint64_t vp_seed = 0;
    bool vp_json = false;
    vpairs->add_option("--n", vp_n, "vertex count");
    vpairs->add_option("--t", vp_t, "packing parameter of the threshold");
    vpairs->add_option("--count", vp_count, "number of random instances");
    vpairs->add_option("--max-deletions", vp_maxdel, "edges to delete, at most");
    vpairs->add_option("--seed", vp_seed, "random seed");
    vpairs->add_flag("--json", vp_json, "emit a JSON report");
    vpairs->callback([&]() {
        long long floor_edges = turan_edges(vp_n, 2) - vp_maxdel;
        long long need4 = static_cast<long long>(vp_n) * vp_n - 2 * vp_n - 24 * vp_t - 44;
        if (4 * floor_edges < need4)
            throw std::invalid_argument("max-deletions can drop the edge count below the lemma threshold");
        std::mt19937_64 rng(vp_seed);
        json failures = json::array();
        for (int i = 0; i < vp_count; ++i) {
            Graph g = random_dense_triangle_free(vp_n, vp_maxdel, rng);
            PairsExtraction ex = lemma_pairs_extract(g, vp_t);
            if (!ex.ok())
                failures.push_back({{"instance", i}, {"graph6", graph6_encode(g)},
                                    {"counterexamples", ex.counterexamples}});
        }
        if (vp_json) {
            json rep = base_report("verify-pairs", {{"n", vp_n}, {"t", vp_t}, {"count", vp_count},
                                                    {"max_deletions", vp_maxdel}, {"seed", vp_seed}});
            rep["failures"] = failures;
            rep["ok"] = failures.empty();
            emit(rep);
        } else {
            std::cout << "instances " << vp_count << "\n"
                      << "failures " << failures.size() << "\n"
                      << (failures.empty() ? "ok" : "FAIL") << "\n";
        }
        if (!failures.empty()) rc = kExitFound;
    });

    // i3
    auto* i3 = app.add_subcommand("i3", "maximum number of vertex-disjoint triangles");
    std::string i3_g6;
    std::uint64_t i3_budget = PackingLimits{}.node_budget;
    bool i3_json = false;
    i3->add_option("--graph", i3_g6, "graph6 string")->required();
    i3->add_option("--budget", i3_budget, "node budget")->check(CLI::PositiveNumber);
    i3->add_flag("--json", i3_json, "emit a JSON report");
    i3->callback([&]() {
        Graph g = graph6_decode(i3_g6);
        PackingLimits lim{i3_budget};
        auto packing = max_independent_triangles(g, lim);
        if (i3_json) {
            json rep = base_report("i3", {{"graph", i3_g6}, {"budget", i3_budget}});
            rep["value"] = packing.size();
            json triples = json::array();
            for (const auto& t : packing.triples) triples.push_back({t[0], t[1], t[2]});
            rep["packing"] = triples;
            emit(rep);
        } else {
            std::cout << packing.size() << "\n";
        }
    });

    // matching
    auto* match = app.add_subcommand("matching", "maximum matching size");
    std::string m_g6;
    bool m_json = false;
    match->add_option("--graph", m_g6, "graph6 string")->required();
    match->add_flag("--json", m_json, "emit a JSON report");
    match->callback([&]() {
        Graph g = graph6_decode(m_g6);
        Matching m = max_matching(g);
        if (m_json) {
            json rep = base_report("matching", {{"graph", m_g6}});
            rep["value"] = m.size();
            json edges = json::array();
            for (const auto& [u, v] : m.edges) edges.push_back({u, v});
            rep["edges"] = edges;
            emit(rep);
        } else {
            std::cout << m.size() << "\n";
        }
    });

    // encode
    auto* enc = app.add_subcommand("encode", "edge list to graph6");
    int e_n = 0;
    std::vector<std::string> e_edges;
    enc->add_option("--n", e_n, "vertex count")->required();
    enc->add_option("--edge", e_edges, "edge as u,v (repeatable)");
    enc->callback([&]() {
        std::vector<std::pair<int, int>> es;
        for (const auto& s : e_edges) es.push_back(parse_edge(s));
        std::cout << graph6_encode(Graph(e_n, es)) << "\n";
    });

    // decode
    auto* dec = app.add_subcommand("decode", "graph6 to edge list");
    std::string d_g6;
    bool d_json = false;
    dec->add_option("--graph", d_g6, "graph6 string")->required();
    dec->add_flag("--json", d_json, "emit a JSON report");
    dec->callback([&]() {
        Graph g = graph6_decode(d_g6);
        if (d_json) {
            json rep = base_report("decode", {{"graph", d_g6}});
            rep["n"] = g.vertex_count();
            json edges = json::array();
            for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
            rep["edges"] = edges;
            emit(rep);
        } else {
            std::cout << g.vertex_count() << " " << g.edge_count() << "\n";
            for (const auto& [u, v] : g.edges()) std::cout << u << " " << v << "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const ResourceExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitExhausted;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return kExitSelfCheck;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return rc;
}
