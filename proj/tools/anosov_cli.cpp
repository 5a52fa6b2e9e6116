// Command line front end for the anosov library.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "anosov/bounds.hpp"
#include "anosov/census.hpp"
#include "anosov/equivalence.hpp"
#include "anosov/errors.hpp"
#include "anosov/graph6.hpp"
#include "anosov/injection.hpp"
#include "anosov/io.hpp"
#include "anosov/lie.hpp"
#include "anosov/quotient.hpp"

namespace {

using anosov::CensusMethod;
using anosov::SimpleGraph;
using anosov::WeightedGraph;
using ojson = nlohmann::ordered_json;

// The input argument is a file path if one exists, "-" or empty for
// standard input, and literal graph text otherwise.
std::string read_input(const std::string& arg) {
    if (arg.empty() || arg == "-") {
        std::ostringstream all;
        all << std::cin.rdbuf();
        return all.str();
    }
    if (std::filesystem::exists(arg)) {
        std::ifstream f(arg, std::ios::binary);
        if (!f) throw anosov::input_error("cannot open " + arg);
        std::ostringstream all;
        all << f.rdbuf();
        return all.str();
    }
    return arg;
}

SimpleGraph load_graph(const std::string& arg, const std::string& format) {
    std::string text = read_input(arg);
    if (format == "auto") return anosov::graph_from_text(text);
    if (format == "graph6") return anosov::from_graph6(text);
    if (format == "json") return anosov::graph_from_json(text);
    if (format == "edges") return anosov::graph_from_edge_list(text);
    throw anosov::input_error("unknown --format " + format);
}

std::string show_type(const std::vector<int>& type) {
    std::string s = "(";
    for (std::size_t i = 0; i < type.size(); i++) {
        if (i) s += ", ";
        s += std::to_string(type[i]);
    }
    return s + ")";
}

std::string rational_text(const anosov::Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::string fixed6(double x) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(6) << x;
    return s.str();
}

struct Config {
    std::string format = "auto";
    std::string output;
    std::string cache_dir;
    int workers = 1;
};

void write_out(const Config& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) throw anosov::input_error("cannot open " + cfg.output + " for writing");
    f << text;
    if (!f) throw anosov::input_error("write to " + cfg.output + " failed");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"anosov graphs: similarity classes, quotients, censuses, bounds"};
    app.require_subcommand(1);
    app.footer("exit codes: 0 success, 1 bad input, 2 beyond supported size, 64 usage");

    Config cfg;
    if (const char* env = std::getenv("ANOSOV_CACHE")) cfg.cache_dir = env;

    std::string input_arg;
    std::string to = "";
    bool allow_disconnected = false;
    bool allow_large = false;
    bool list_graphs = false;
    std::string method_name = "quotient";
    int n_arg = 0;
    int n_hi = -1;
    int t_arg = 0;
    int w_arg = 0;
    int limit = 14;
    std::vector<int> parts;

    auto* check = app.add_subcommand(
        "check", "Decide whether a graph is an Anosov graph: connected, every similarity class "
                 "(equal open or closed neighborhoods) has at least two vertices, and no size-2 "
                 "class induces an edge. Prints the type partition or the violated condition.");
    check->add_option("input", input_arg, "graph as file, literal, or - for stdin");
    check->add_option("--format", cfg.format, "input format: auto|graph6|json|edges");
    check->add_flag("--allow-disconnected", allow_disconnected, "skip the connectivity requirement");
    check->add_option("--to", to, "output format: text|json (default text)");
    check->add_option("--output", cfg.output, "write output to a file");

    auto* quot = app.add_subcommand(
        "quotient", "Compute the weighted quotient of a graph: one vertex per similarity class, "
                    "weight = class size, loop on complete classes.");
    quot->add_option("input", input_arg, "graph as file, literal, or - for stdin");
    quot->add_option("--format", cfg.format, "input format: auto|graph6|json|edges");
    quot->add_option("--to", to, "output format: json|dot (default json)");
    quot->add_option("--output", cfg.output, "write output to a file");

    auto* decon = app.add_subcommand(
        "deconstruct", "Blow a weighted graph back up: each vertex becomes a block of its weight, "
                       "complete when looped, with complete joins along edges.");
    decon->add_option("input", input_arg, "weighted graph JSON as file, literal, or - for stdin");
    decon->add_option("--to", to, "output format: graph6|json|dot (default graph6)");
    decon->add_option("--output", cfg.output, "write output to a file");

    auto* enumerate = app.add_subcommand(
        "enumerate", "Census of Anosov graphs on n vertices up to isomorphism. TSV columns: "
                     "n, method, count; with --method both a final agree/disagree line; "
                     "--list appends one graph6 row per graph.");
    enumerate->add_option("n", n_arg, "number of vertices")->required();
    enumerate->add_option("--method", method_name, "brute|quotient|both (default quotient)");
    enumerate->add_option("--workers", cfg.workers, "parallel workers (default 1)");
    enumerate->add_option("--cache-dir", cfg.cache_dir, "census cache directory (or ANOSOV_CACHE)");
    enumerate->add_flag("--list", list_graphs, "also list the census in graph6");
    enumerate->add_option("--to", to, "output format: tsv|json (default tsv)");
    enumerate->add_option("--output", cfg.output, "write output to a file");

    auto* bounds = app.add_subcommand(
        "bounds", "Census counts with the sandwich and big-one bounds. TSV columns: n, L, a, U, "
                  "bigone_lower, bigone_upper, nu_paper, nu_dani_mainkar; the nu columns read "
                  "the row's n as the total dimension w = n + m.");
    bounds->add_option("n", n_arg, "first n")->required();
    bounds->add_option("n_hi", n_hi, "last n (default: first)");
    bounds->add_option("--workers", cfg.workers, "parallel workers (default 1)");
    bounds->add_option("--cache-dir", cfg.cache_dir, "census cache directory (or ANOSOV_CACHE)");
    bounds->add_option("--output", cfg.output, "write output to a file");

    auto* xt = app.add_subcommand(
        "xt", "X(t): symmetric t x t binary matrices with distinct rows, counted up to "
              "simultaneous row and column permutation.");
    xt->add_option("t", t_arg, "matrix size")->required();
    xt->add_flag("--allow-large", allow_large, "permit t = 7 (minutes of work)");
    xt->add_option("--output", cfg.output, "write output to a file");

    auto* inject = app.add_subcommand(
        "inject", "Image of a partition of n >= 9 under the case construction that maps "
                  "partitions to quotients of Anosov graphs.");
    inject->add_option("parts", parts, "partition parts, e.g. 4 3 2")->required()->delimiter(',');
    inject->add_option("--to", to, "output format: json|dot (default json)");
    inject->add_option("--output", cfg.output, "write output to a file");

    auto* verify = app.add_subcommand(
        "verify-injection", "Check the case construction on every partition of n: images pass "
                            "the brick conditions and are pairwise non-isomorphic.");
    verify->add_option("n", n_arg, "partition total, 9..limit")->required();
    verify->add_option("--limit", limit, "largest allowed n (default 14)");
    verify->add_option("--output", cfg.output, "write output to a file");

    auto* lie = app.add_subcommand(
        "lie", "Two-step nilpotent Lie algebra of a graph: vertex and edge generators with "
               "[v_i, v_j] = e_ij on edges. Emits structure constants and check results.");
    lie->add_option("input", input_arg, "graph as file, literal, or - for stdin");
    lie->add_option("--format", cfg.format, "input format: auto|graph6|json|edges");
    lie->add_option("--to", to, "output format: json|text (default json)");
    lie->add_option("--output", cfg.output, "write output to a file");

    auto* nufam = app.add_subcommand(
        "nu-family", "Two-parameter families of Anosov graphs with a prescribed total dimension "
                     "w = n + m, with the counting formula and both lower-bound formulas.");
    nufam->add_option("w", w_arg, "total dimension")->required();
    nufam->add_option("--to", to, "output format: tsv|json (default tsv)");
    nufam->add_option("--output", cfg.output, "write output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    try {
        std::ostringstream out;

        if (check->parsed()) {
            SimpleGraph g = load_graph(input_arg, cfg.format);
            anosov::AnosovVerdict verdict = anosov::diagnose_anosov(g, allow_disconnected);
            anosov::EquivalenceDecomposition d = anosov::decompose(g);
            if (to == "json") {
                ojson j;
                j["anosov"] = verdict.anosov;
                if (!verdict.anosov) {
                    j["reason"] = verdict.reason;
                    j["witness"] = verdict.witness;
                }
                j["decomposition"] = ojson::parse(anosov::decomposition_to_json(d));
                out << j.dump() << "\n";
            } else {
                if (verdict.anosov)
                    out << "Anosov graph of type " << show_type(d.type) << "\n";
                else
                    out << "not Anosov: " << verdict.reason << "\n";
            }
            write_out(cfg, out.str());
            return 0;
        }

        if (quot->parsed()) {
            SimpleGraph g = load_graph(input_arg, cfg.format);
            WeightedGraph w = anosov::quotient(g);
            if (to == "dot")
                out << anosov::weighted_to_dot(w);
            else
                out << anosov::weighted_to_json(w) << "\n";
            write_out(cfg, out.str());
            return 0;
        }

        if (decon->parsed()) {
            WeightedGraph w = anosov::weighted_from_json(read_input(input_arg));
            SimpleGraph g = anosov::deconstruct(w);
            if (to == "json")
                out << anosov::graph_to_json(g) << "\n";
            else if (to == "dot")
                out << anosov::graph_to_dot(g);
            else
                out << anosov::to_graph6(g) << "\n";
            write_out(cfg, out.str());
            return 0;
        }

        if (enumerate->parsed()) {
            std::vector<CensusMethod> methods;
            if (method_name == "brute")
                methods = {CensusMethod::brute_force};
            else if (method_name == "quotient")
                methods = {CensusMethod::quotient_synthesis};
            else if (method_name == "both")
                methods = {CensusMethod::brute_force, CensusMethod::quotient_synthesis};
            else
                throw anosov::input_error("unknown --method " + method_name);

            std::vector<anosov::CensusResult> results;
            for (CensusMethod m : methods)
                results.push_back(anosov::enumerate_anosov(n_arg, m, cfg.workers, cfg.cache_dir));
            bool agree = results.size() < 2 || results[0].codes == results[1].codes;

            if (to == "json") {
                ojson j;
                j["n"] = n_arg;
                j["results"] = ojson::array();
                for (const auto& r : results) {
                    ojson jr;
                    jr["method"] = anosov::to_string(r.method);
                    jr["count"] = r.count;
                    j["results"].push_back(std::move(jr));
                }
                if (results.size() > 1) j["agree"] = agree;
                if (list_graphs && agree) {
                    j["graphs"] = ojson::array();
                    for (const auto& code : results[0].codes)
                        j["graphs"].push_back(anosov::to_graph6(anosov::graph_from_code(code)));
                }
                out << j.dump() << "\n";
            } else {
                out << "n\tmethod\tcount\n";
                for (const auto& r : results)
                    out << r.n << "\t" << anosov::to_string(r.method) << "\t" << r.count << "\n";
                if (results.size() > 1) out << (agree ? "methods agree\n" : "methods disagree\n");
                if (list_graphs && agree)
                    for (const auto& code : results[0].codes)
                        out << anosov::to_graph6(anosov::graph_from_code(code)) << "\n";
            }
            write_out(cfg, out.str());
            return agree ? 0 : 1;
        }

        if (bounds->parsed()) {
            if (n_hi < 0) n_hi = n_arg;
            if (n_hi < n_arg) throw anosov::input_error("n_hi must be at least n");
            out << "n\tL\ta\tU\tbigone_lower\tbigone_upper\tnu_paper\tnu_dani_mainkar\n";
            for (int n = n_arg; n <= n_hi; n++) {
                auto census = anosov::enumerate_anosov(n, CensusMethod::quotient_synthesis,
                                                       cfg.workers, cfg.cache_dir);
                std::map<int, std::uint64_t> xs;
                for (int t = 1; 2 * t <= n; t++) xs[t] = anosov::compute_X(t);
                anosov::BigOneBounds big = anosov::big_one_bounds(n, xs);
                out << n << "\t" << anosov::count_lower_types(n) << "\t" << census.count << "\t"
                    << anosov::count_upper_types(n) << "\t" << rational_text(big.lower) << "\t"
                    << big.upper << "\t"
                    << fixed6(anosov::nu_lower_bound(n, anosov::NuFormula::paper)) << "\t"
                    << fixed6(anosov::nu_lower_bound(n, anosov::NuFormula::dani_mainkar)) << "\n";
            }
            write_out(cfg, out.str());
            return 0;
        }

        if (xt->parsed()) {
            out << anosov::compute_X(t_arg, allow_large) << "\n";
            write_out(cfg, out.str());
            return 0;
        }

        if (inject->parsed()) {
            anosov::InjectionImage image = anosov::inject(parts);
            const auto& cases = anosov::injection_cases();
            std::cerr << "case " << image.case_id << ": "
                      << cases[static_cast<std::size_t>(image.case_id - 1)].shape << "\n";
            if (to == "dot")
                out << anosov::weighted_to_dot(image.graph);
            else
                out << anosov::weighted_to_json(image.graph) << "\n";
            write_out(cfg, out.str());
            return 0;
        }

        if (verify->parsed()) {
            anosov::InjectionReport report = anosov::verify_injection(n_arg, limit);
            out << "partitions checked: " << report.partition_count << "\n";
            for (const auto& v : report.violations) out << "violation: " << v << "\n";
            out << (report.ok() ? "OK\n" : "FAIL\n");
            write_out(cfg, out.str());
            return report.ok() ? 0 : 1;
        }

        if (lie->parsed()) {
            SimpleGraph g = load_graph(input_arg, cfg.format);
            anosov::GraphLieAlgebra L = anosov::build_lie_algebra(g);
            anosov::LieCheck c = anosov::verify_two_step(L);
            if (to == "text") {
                out << "dim\t" << L.dim() << "\n"
                    << "n\t" << L.n << "\n"
                    << "m\t" << L.m << "\n"
                    << "antisymmetric\t" << (c.antisymmetric ? "ok" : "FAIL") << "\n"
                    << "image_in_center\t" << (c.image_in_center ? "ok" : "FAIL") << "\n"
                    << "center_central\t" << (c.center_central ? "ok" : "FAIL") << "\n"
                    << "two_step\t" << (c.two_step ? "ok" : "FAIL") << "\n"
                    << "jacobi\t" << (c.jacobi ? "ok" : "FAIL") << "\n";
            } else {
                out << anosov::lie_to_json(L) << "\n";
            }
            write_out(cfg, out.str());
            return c.ok() ? 0 : 1;
        }

        if (nufam->parsed()) {
            anosov::NuFamilyCount counts = anosov::nu_family_count(w_arg);
            std::vector<anosov::NuFamilyMember> members;
            bool listed = true;
            try {
                members = anosov::nu_family_members(w_arg);
            } catch (const anosov::capability_error&) {
                listed = false;
            }
            double paper = anosov::nu_lower_bound(w_arg, anosov::NuFormula::paper);
            double dani = anosov::nu_lower_bound(w_arg, anosov::NuFormula::dani_mainkar);
            if (to == "json") {
                ojson j;
                j["w"] = w_arg;
                j["count_no_loop"] = counts.no_loop;
                j["count_loop"] = counts.loop;
                j["count_total"] = counts.total;
                if (!counts.note.empty()) j["note"] = counts.note;
                j["paper_bound"] = paper;
                j["exceeds_paper_bound"] =
                    anosov::count_exceeds_nu_bound(counts.total, w_arg, anosov::NuFormula::paper);
                j["dani_mainkar_bound"] = dani;
                j["exceeds_dani_mainkar_bound"] = anosov::count_exceeds_nu_bound(
                    counts.total, w_arg, anosov::NuFormula::dani_mainkar);
                if (listed) {
                    j["members"] = ojson::array();
                    for (const auto& m : members) {
                        ojson jm;
                        jm["family"] = m.family;
                        jm["k"] = m.k;
                        jm["p"] = m.p;
                        jm["q"] = m.q;
                        jm["n"] = m.graph.total_weight();
                        jm["m"] = w_arg - m.graph.total_weight();
                        j["members"].push_back(std::move(jm));
                    }
                }
                out << j.dump() << "\n";
            } else {
                out << "w\tfamily\tk\tp\tq\tn\tm\n";
                if (listed)
                    for (const auto& m : members)
                        out << w_arg << "\t" << m.family << "\t" << m.k << "\t" << m.p << "\t"
                            << m.q << "\t" << m.graph.total_weight() << "\t"
                            << w_arg - m.graph.total_weight() << "\n";
                out << "count_no_loop\t" << counts.no_loop << "\n";
                out << "count_loop\t" << counts.loop << "\n";
                out << "count_total\t" << counts.total << "\n";
                if (!counts.note.empty()) out << "note\t" << counts.note << "\n";
                if (!listed) out << "note\tmember list needs pattern graphs beyond 7 vertices\n";
                out << "paper_bound\t" << fixed6(paper) << "\n";
                out << "exceeds_paper_bound\t"
                    << (anosov::count_exceeds_nu_bound(counts.total, w_arg,
                                                       anosov::NuFormula::paper)
                            ? "yes"
                            : "no")
                    << "\n";
                out << "dani_mainkar_bound\t" << fixed6(dani) << "\n";
                out << "exceeds_dani_mainkar_bound\t"
                    << (anosov::count_exceeds_nu_bound(counts.total, w_arg,
                                                       anosov::NuFormula::dani_mainkar)
                            ? "yes"
                            : "no")
                    << "\n";
            }
            write_out(cfg, out.str());
            return 0;
        }
    } catch (const anosov::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const anosov::capability_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 0;
}
