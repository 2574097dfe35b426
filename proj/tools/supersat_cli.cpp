#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#ifdef _OPENMP
#include <omp.h>
#endif

#include "supersat/constructions.hpp"
#include "supersat/counting.hpp"
#include "supersat/formulas.hpp"
#include "supersat/io.hpp"
#include "supersat/optimizer.hpp"
#include "supersat/oracle.hpp"

using nlohmann::json;
using namespace supersat;

namespace {

json j_wide(u128 v) {
    if (fits_u64(v)) return json((std::uint64_t)v);
    return json(to_string(v));
}

void emit(const std::string& out_path, std::string payload) {
    if (payload.empty() || payload.back() != '\n') payload.push_back('\n');
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + out_path);
    f << payload;
}

std::vector<long long> parse_range(const std::string& text) {
    // A..B[..step], or a single value
    std::vector<long long> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t dots = text.find("..", pos);
        std::string tok = text.substr(pos, dots == std::string::npos ? dots : dots - pos);
        std::size_t used = 0;
        long long v;
        try {
            v = std::stoll(tok, &used);
        } catch (...) {
            throw CLI::ValidationError("range", "bad range component '" + tok + "'");
        }
        if (used != tok.size()) throw CLI::ValidationError("range", "bad range component '" + tok + "'");
        parts.push_back(v);
        if (dots == std::string::npos) break;
        pos = dots + 2;
    }
    if (parts.size() == 1) return {parts[0]};
    if (parts.size() > 3) throw CLI::ValidationError("range", "expected A..B[..step]");
    long long lo = parts[0], hi = parts[1], step = parts.size() == 3 ? parts[2] : 1;
    if (step < 1) throw CLI::ValidationError("range", "step must be >= 1");
    std::vector<long long> vals;
    for (long long v = lo; v <= hi; v += step) vals.push_back(v);
    return vals;
}

std::string tsv_row(const std::vector<std::string>& cells) {
    std::string row;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) row.push_back('\t');
        row += cells[i];
    }
    row.push_back('\n');
    return row;
}

json j_edge_list(const EdgeList& el) {
    json edges = json::array();
    for (auto [u, v] : el.edges) edges.push_back(json::array({u, v}));
    return json{{"n", el.n}, {"m", el.edges.size()}, {"edges", edges}};
}

std::string graph_payload(const Graph& g, const std::string& format) {
    if (format == "edge-list") return write_graph(g, GraphFormat::edge_list);
    if (format == "graph6") return write_graph(g, GraphFormat::graph6);
    if (format == "json") return j_edge_list(edge_list_of(g)).dump();
    std::string out = tsv_row({std::to_string(g.n()), std::to_string(g.edge_count())});
    for (auto [u, v] : g.edges()) out += tsv_row({std::to_string(u), std::to_string(v)});
    return out;
}

std::vector<int> near_regular_phi(long long v, long long b) {
    DegreeProfile p = near_regular_profile(v, b);
    std::vector<int> phi((std::size_t)(p.alpha + p.beta), (int)p.b);
    std::fill(phi.begin(), phi.begin() + (std::ptrdiff_t)p.alpha, (int)p.a);
    return phi;
}

int usage_error(const std::string& msg) {
    std::cerr << "usage error: " << msg << "\n";
    return 1;
}

struct VerifyRow {
    long long n = 0, q = 0;
    std::optional<u128> oracle;
    u128 optimizer = 0;
    bool realizable = false;
    u128 asymptotic = 0;
    std::optional<u128> upper;
    bool violation = false;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bowtie counting, constructions and supersaturation search"};
    app.require_subcommand(1);
    app.fallthrough();

    int threads = 0;
    if (const char* env = std::getenv("SUPERSAT_THREADS")) threads = std::atoi(env);
    app.add_option("--threads", threads, "worker thread count (default: SUPERSAT_THREADS or all cores)");
    unsigned long long seed = 0;
    app.add_option("--seed", seed, "seed for randomized workloads (reserved; current subcommands are deterministic)");
    std::string out_path;
    app.add_option("--out", out_path, "write output to this file instead of stdout");

    auto* c_count = app.add_subcommand("count", "count triangles and bowties of a graph file");
    std::string count_file, count_format = "json";
    c_count->add_option("file", count_file, "edge-list or graph6 file")->required();
    c_count->add_option("--format", count_format, "json|tsv")
        ->check(CLI::IsMember({"json", "tsv"}));

    auto* c_construct = app.add_subcommand("construct", "emit a named graph family member");
    std::string family, construct_format = "edge-list", variant = "larger";
    long long p_r = 0, p_n = 0, p_q = 0, p_alpha = 0, p_a = 0, p_beta = 0, p_b = 0;
    long long p_v1 = 0, p_v2 = 0, p_b1 = 0, p_b2 = 0;
    c_construct->add_option("family", family, "turan|extremal|upper-bound|hstar|trifree")
        ->required()
        ->check(CLI::IsMember({"turan", "extremal", "upper-bound", "hstar", "trifree"}));
    c_construct->add_option("--r", p_r, "part count (turan)");
    auto* opt_n = c_construct->add_option("--n", p_n, "vertex count");
    auto* opt_q = c_construct->add_option("--q", p_q, "edges beyond the extremal number");
    c_construct->add_option("--alpha", p_alpha, "vertices of degree a (trifree)");
    c_construct->add_option("--a", p_a, "first degree (trifree)");
    c_construct->add_option("--beta", p_beta, "vertices of degree b (trifree)");
    c_construct->add_option("--b", p_b, "second degree (trifree)");
    c_construct->add_option("--v1", p_v1, "part 1 size (hstar)");
    c_construct->add_option("--v2", p_v2, "part 2 size (hstar)");
    c_construct->add_option("--b1", p_b1, "part 1 internal edges (hstar)");
    c_construct->add_option("--b2", p_b2, "part 2 internal edges (hstar)");
    c_construct->add_option("--variant", variant, "larger|smaller: part holding the extra edge (extremal)")
        ->check(CLI::IsMember({"larger", "smaller"}));
    c_construct->add_option("--format", construct_format, "edge-list|graph6|json|tsv")
        ->check(CLI::IsMember({"edge-list", "graph6", "json", "tsv"}));

    auto* c_formula = app.add_subcommand("formula", "closed-form minimum and derived parameters");
    long long f_n = 0, f_q = 0;
    std::string formula_format = "json";
    c_formula->add_option("--n", f_n, "vertex count")->required();
    c_formula->add_option("--q", f_q, "edges beyond the extremal number")->required();
    c_formula->add_option("--format", formula_format, "json|tsv")
        ->check(CLI::IsMember({"json", "tsv"}));

    auto* c_optimize = app.add_subcommand("optimize", "minimize the bowtie formula over two-part splits");
    long long o_n = 0, o_q = 0, o_max_offset = 2;
    std::string optimize_format = "json";
    c_optimize->add_option("--n", o_n, "vertex count")->required();
    c_optimize->add_option("--q", o_q, "edges beyond the extremal number")->required();
    c_optimize->add_option("--max-offset", o_max_offset, "largest part-size offset |a| to scan");
    c_optimize->add_option("--format", optimize_format, "json|tsv")
        ->check(CLI::IsMember({"json", "tsv"}));

    auto* c_oracle = app.add_subcommand("oracle", "exhaustive small-n ground truth");
    long long r_n = 0, r_q = 0;
    bool r_uniqueness = false, r_no_prune = false, r_symmetry = false;
    unsigned long long r_budget = 100'000'000ull;
    int r_witness_cap = 10;
    std::string oracle_format = "json";
    c_oracle->add_option("--n", r_n, "vertex count")->required();
    auto* opt_rq = c_oracle->add_option("--q", r_q, "edges beyond the extremal number (minimum bowtie search)");
    c_oracle->add_flag("--uniqueness", r_uniqueness, "bucket extremal graphs by isomorphism");
    c_oracle->add_flag("--no-prune-bound", r_no_prune, "disable branch-and-bound pruning");
    c_oracle->add_flag("--prune-symmetry", r_symmetry, "restrict to nonincreasing degree sequences");
    c_oracle->add_option("--budget", r_budget, "largest enumeration size attempted");
    c_oracle->add_option("--witness-cap", r_witness_cap, "optimal graphs to keep");
    c_oracle->add_option("--format", oracle_format, "json|tsv")
        ->check(CLI::IsMember({"json", "tsv"}));

    auto* c_verify = app.add_subcommand("verify", "cross-check oracle, optimizer and formulas over a grid");
    std::string v_nrange, v_qrange;
    long long v_max_offset = 2;
    unsigned long long v_budget = 100'000'000ull;
    std::string verify_format = "tsv";
    c_verify->add_option("--n-range", v_nrange, "A..B[..step] or single n")->required();
    c_verify->add_option("--q-range", v_qrange, "A..B[..step] or single q")->required();
    c_verify->add_option("--max-offset", v_max_offset, "largest part-size offset |a| to scan");
    c_verify->add_option("--budget", v_budget, "oracle enumeration budget");
    c_verify->add_option("--format", verify_format, "json|tsv")
        ->check(CLI::IsMember({"json", "tsv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.what() << "\n";
        return 1;
    }

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif
    (void)seed;

    try {
        if (c_count->parsed()) {
            std::ifstream f(count_file, std::ios::binary);
            if (!f) throw ParseError("cannot open input file " + count_file);
            std::stringstream buf;
            buf << f.rdbuf();
            Graph g = read_graph_any(buf.str());
            CountReport rep = count_triangles(g);
            u128 bowties = count_bowties(g);
            if (count_format == "json") {
                json j{{"n", g.n()},
                       {"edges", g.edge_count()},
                       {"triangles", j_wide(rep.triangles)},
                       {"bowties", j_wide(bowties)}};
                emit(out_path, j.dump());
            } else {
                std::string out = tsv_row({"n", "edges", "triangles", "bowties"});
                out += tsv_row({std::to_string(g.n()), std::to_string(g.edge_count()),
                                to_string(rep.triangles), to_string(bowties)});
                emit(out_path, out);
            }
            return 0;
        }

        if (c_construct->parsed()) {
            Graph g;
            if (family == "turan") {
                if (p_r <= 0 || !*opt_n) return usage_error("construct turan needs --r and --n");
                g = turan((int)p_r, (int)p_n);
            } else if (family == "extremal") {
                if (!*opt_n) return usage_error("construct extremal needs --n");
                g = extremal_bowtie_free((int)p_n, variant == "larger"
                                                       ? ExtremalVariant::edge_in_larger_part
                                                       : ExtremalVariant::edge_in_smaller_part);
            } else if (family == "upper-bound") {
                if (!*opt_n || !*opt_q) return usage_error("construct upper-bound needs --n and --q");
                g = upper_bound_graph((int)p_n, p_q);
            } else if (family == "hstar") {
                if (p_v1 <= 0 || p_v2 < 0) return usage_error("construct hstar needs --v1 and --v2");
                PartitionSpec spec;
                spec.v1 = (int)p_v1;
                spec.v2 = (int)p_v2;
                spec.phi = near_regular_phi(p_v1, p_b1);
                auto phi2 = near_regular_phi(p_v2, p_b2);
                spec.phi.insert(spec.phi.end(), phi2.begin(), phi2.end());
                g = build_hstar(spec);
            } else {
                DegreeProfile prof{p_alpha, p_a, p_beta, p_b};
                g = realize_trifree(prof);
            }
            emit(out_path, graph_payload(g, construct_format));
            return 0;
        }

        if (c_formula->parsed()) {
            FormulaParams p = FormulaParams::from(f_n, f_q);
            u128 value = asymptotic_h(p);
            if (formula_format == "json") {
                json j{{"n", p.n},    {"q", p.q},   {"d", p.d},           {"m", p.m},
                       {"e1", p.e1},  {"e2", p.e2}, {"value", j_wide(value)}};
                emit(out_path, j.dump());
            } else {
                std::string out = tsv_row({"n", "q", "d", "m", "e1", "e2", "value"});
                out += tsv_row({std::to_string(p.n), std::to_string(p.q), std::to_string(p.d),
                                std::to_string(p.m), std::to_string(p.e1), std::to_string(p.e2),
                                to_string(value)});
                emit(out_path, out);
            }
            return 0;
        }

        if (c_optimize->parsed()) {
            SearchResult r = minimize_f(o_n, o_q, o_max_offset);
            if (!r.realizable)
                std::cerr << "warning: no constructive realization for the optimal cell; "
                             "the reported value is a formula minimum only\n";
            if (optimize_format == "json") {
                json j{{"n", o_n},
                       {"q", o_q},
                       {"min_value", j_wide(r.min_value)},
                       {"a", r.a},
                       {"b1", r.b1},
                       {"b2", r.b2},
                       {"v1", r.witness.v1},
                       {"v2", r.witness.v2},
                       {"realizable", r.realizable},
                       {"cells_examined", r.cells_examined}};
                emit(out_path, j.dump());
            } else {
                std::string out = tsv_row({"n", "q", "min_value", "a", "b1", "b2", "v1", "v2",
                                           "realizable", "cells_examined"});
                out += tsv_row({std::to_string(o_n), std::to_string(o_q), to_string(r.min_value),
                                std::to_string(r.a), std::to_string(r.b1), std::to_string(r.b2),
                                std::to_string(r.witness.v1), std::to_string(r.witness.v2),
                                std::to_string((int)r.realizable),
                                std::to_string(r.cells_examined)});
                emit(out_path, out);
            }
            return 0;
        }

        if (c_oracle->parsed()) {
            OracleOptions opts;
            opts.witness_cap = r_witness_cap;
            opts.budget = r_budget;
            opts.prune_bound = !r_no_prune;
            opts.prune_symmetry = r_symmetry;
            if (r_uniqueness) {
                UniquenessReport rep = extremal_uniqueness((int)r_n, opts);
                if (oracle_format == "json") {
                    json classes = json::array();
                    for (std::size_t i = 0; i < rep.class_representatives.size(); ++i)
                        classes.push_back(json{{"size", rep.class_sizes[i]},
                                               {"turan_plus_edge", (bool)rep.class_is_turan_plus_edge[i]},
                                               {"representative", j_edge_list(rep.class_representatives[i])}});
                    json j{{"n", rep.n},
                           {"edges", rep.edges},
                           {"labeled_graphs", rep.labeled_graphs},
                           {"classes", classes}};
                    emit(out_path, j.dump());
                } else {
                    std::string out =
                        tsv_row({"n", "edges", "labeled_graphs", "class", "size", "turan_plus_edge"});
                    for (std::size_t i = 0; i < rep.class_sizes.size(); ++i)
                        out += tsv_row({std::to_string(rep.n), std::to_string(rep.edges),
                                        std::to_string(rep.labeled_graphs), std::to_string(i),
                                        std::to_string(rep.class_sizes[i]),
                                        std::to_string((int)rep.class_is_turan_plus_edge[i])});
                    emit(out_path, out);
                }
                return 0;
            }
            OracleReport rep = *opt_rq ? h_exact((int)r_n, r_q, opts) : ex_exact((int)r_n, opts);
            std::cerr << "oracle wall time: " << rep.wall_time << "s\n";
            if (oracle_format == "json") {
                json wits = json::array();
                for (const auto& w : rep.witnesses) wits.push_back(j_edge_list(w));
                json j{{"n", rep.n},
                       {"q", rep.q},
                       {"target_edges", rep.target_edges},
                       {"optimum", j_wide(rep.optimum)},
                       {"graphs_examined", rep.graphs_examined},
                       {"witness_count", rep.witnesses.size()},
                       {"witnesses", wits}};
                emit(out_path, j.dump());
            } else {
                std::string out = tsv_row(
                    {"n", "q", "target_edges", "optimum", "graphs_examined", "witness_count"});
                out += tsv_row({std::to_string(rep.n), std::to_string(rep.q),
                                std::to_string(rep.target_edges), to_string(rep.optimum),
                                std::to_string(rep.graphs_examined),
                                std::to_string(rep.witnesses.size())});
                emit(out_path, out);
            }
            return 0;
        }

        // verify
        std::vector<long long> ns = parse_range(v_nrange);
        std::vector<long long> qs = parse_range(v_qrange);
        if (ns.empty() || qs.empty()) return usage_error("verify ranges must be non-empty");
        for (long long n : ns)
            if (n < 5) return usage_error("verify needs n >= 5");
        for (long long q : qs)
            if (q < 0) return usage_error("verify needs q >= 0");

        std::vector<VerifyRow> rows;
        for (long long n : ns)
            for (long long q : qs) {
                VerifyRow row;
                row.n = n;
                row.q = q;
                SearchResult r = minimize_f(n, q, v_max_offset);
                row.optimizer = r.min_value;
                row.realizable = r.realizable;
                row.asymptotic = asymptotic_h(FormulaParams::from(n, q));
                try {
                    row.upper = upper_bound_value(n, q);
                } catch (const RegimeViolated&) {
                }
                if (n <= 8) {
                    OracleOptions opts;
                    opts.budget = v_budget;
                    opts.witness_cap = 0;
                    try {
                        row.oracle = h_exact((int)n, q, opts).optimum;
                    } catch (const BudgetExceeded&) {
                    } catch (const Infeasible&) {
                    }
                }
                if (row.oracle) {
                    if (row.realizable && *row.oracle > row.optimizer) row.violation = true;
                    if (row.upper && *row.oracle > *row.upper) row.violation = true;
                }
                rows.push_back(row);
            }

        bool violated = false;
        if (verify_format == "json") {
            json arr = json::array();
            for (const auto& row : rows) {
                json j{{"n", row.n},
                       {"q", row.q},
                       {"oracle", row.oracle ? j_wide(*row.oracle) : json()},
                       {"optimizer", j_wide(row.optimizer)},
                       {"realizable", row.realizable},
                       {"asymptotic", j_wide(row.asymptotic)},
                       {"upper_bound", row.upper ? j_wide(*row.upper) : json()},
                       {"agree", row.oracle ? json(*row.oracle == row.optimizer) : json()},
                       {"violation", row.violation}};
                arr.push_back(j);
                violated |= row.violation;
            }
            emit(out_path, arr.dump());
        } else {
            std::string out = tsv_row({"n", "q", "oracle", "optimizer", "realizable", "asymptotic",
                                       "upper_bound", "agree", "violation"});
            for (const auto& row : rows) {
                out += tsv_row({std::to_string(row.n), std::to_string(row.q),
                                row.oracle ? to_string(*row.oracle) : "-",
                                to_string(row.optimizer), std::to_string((int)row.realizable),
                                to_string(row.asymptotic),
                                row.upper ? to_string(*row.upper) : "-",
                                row.oracle ? std::to_string((int)(*row.oracle == row.optimizer)) : "-",
                                std::to_string((int)row.violation)});
                violated |= row.violation;
            }
            emit(out_path, out);
        }
        return violated ? 4 : 0;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedHeader& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Unrealizable& e) {
        std::cerr << "unrealizable (" << to_string(e.reason) << "): " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
