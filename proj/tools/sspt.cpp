// sspt: command-line front end for the SSPT approximation pipeline.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
//             3 infeasible instance, 4 oracle budget exceeded.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sspt/generate.hpp"
#include "sspt/io.hpp"
#include "sspt/oracle.hpp"
#include "sspt/reductions.hpp"
#include "sspt/sp_subgraph.hpp"

using json = nlohmann::ordered_json;
using namespace sspt;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitBudget = 4;

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string digest(const std::string& data) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << fnv1a(data);
    return os.str();
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

OracleBudget budget_from_env() {
    OracleBudget b;
    if (const char* env = std::getenv("SSPT_ORACLE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) b.max_nonterminals_enumerated = v;
    }
    return b;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

json certificate_json(const BoundCertificate& c) {
    std::ostringstream h;
    h << c.harmonic_bound.numerator() << "/" << c.harmonic_bound.denominator();
    return json{{"radius", c.radius_hops},
                {"radius_vsc", c.radius_hops_vsc},
                {"universe", c.universe_size},
                {"cover_size", c.cover_size},
                {"cover_weight", c.cover_weight},
                {"nt_before_expansion", c.nt_before_expansion},
                {"harmonic", h.str()}};
}

double harmonic_double(const Rational& r) {
    return r.numerator().convert_to<double>() / r.denominator().convert_to<double>();
}

struct BenchRow {
    std::string name;
    std::size_t nt = 0;
    bool weighted = false;
    bool have_opt = false;
    std::uint64_t opt = 0;  // count or weight depending on mode
    std::uint64_t value = 0;
    double ratio = 0;
    std::uint64_t radius = 0;
    double h_bound = 0;  // H(|S|)
    double rh_bound = 0;
    double wall_ms = 0;
};

int run_bench(const std::string& corpus, bool no_time, bool as_json, const OracleBudget& budget) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(corpus))
        if (entry.is_regular_file() && entry.path().extension() == ".txt")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::vector<BenchRow> rows;
    for (const auto& path : files) {
        Instance inst = parse_instance(read_file(path.string()));
        BenchRow row;
        row.name = path.filename().string();
        row.weighted = inst.vertex_weights().has_value();
        Clock::time_point start = Clock::now();
        SolutionReport rep = row.weighted ? solve_weighted_sspt(inst) : solve_sspt(inst);
        row.wall_ms = ms_since(start);
        row.nt = rep.nt_count;
        row.value = row.weighted ? rep.nt_weight : rep.nt_count;
        row.radius = rep.certificate.radius_hops;
        row.h_bound = harmonic_double(rep.certificate.harmonic_bound);
        row.rh_bound = static_cast<double>(row.radius) * row.h_bound;
        try {
            SolutionReport opt = row.weighted ? exact_weighted_sspt(inst, budget)
                                             : exact_sspt(inst, budget);
            row.have_opt = true;
            row.opt = row.weighted ? opt.nt_weight : opt.nt_count;
            if (row.opt > 0)
                row.ratio = static_cast<double>(row.value) / static_cast<double>(row.opt);
            else
                row.ratio = row.value == 0 ? 1.0 : 0.0;
        } catch (const TooLarge&) {
        } catch (const TimeLimitExceeded&) {
        }
        rows.push_back(row);
    }

    if (as_json) {
        json out = json::array();
        for (const BenchRow& r : rows) {
            json j{{"instance", r.name},
                   {"weighted", r.weighted},
                   {"nt", r.nt},
                   {"value", r.value},
                   {"radius", r.radius},
                   {"h_bound", r.h_bound},
                   {"rh_bound", r.rh_bound}};
            if (r.have_opt) {
                j["opt"] = r.opt;
                if (r.opt > 0 || r.value == 0) j["ratio"] = r.ratio;
            }
            if (!no_time) j["time_ms"] = r.wall_ms;
            out.push_back(std::move(j));
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << std::left << std::setw(28) << "instance" << std::right << std::setw(8) << "value"
              << std::setw(8) << "opt" << std::setw(8) << "ratio" << std::setw(6) << "R"
              << std::setw(10) << "H(|S|)" << std::setw(10) << "R*H";
    if (!no_time) std::cout << std::setw(12) << "time_ms";
    std::cout << "\n";
    for (const BenchRow& r : rows) {
        std::cout << std::left << std::setw(28) << r.name << std::right << std::setw(8) << r.value;
        if (r.have_opt)
            std::cout << std::setw(8) << r.opt;
        else
            std::cout << std::setw(8) << "-";
        std::cout << std::fixed << std::setprecision(3);
        if (r.have_opt && (r.opt > 0 || r.value == 0))
            std::cout << std::setw(8) << r.ratio;
        else
            std::cout << std::setw(8) << "-";
        std::cout << std::setw(6) << r.radius << std::setw(10) << r.h_bound << std::setw(10)
                  << r.rh_bound;
        if (!no_time) std::cout << std::setw(12) << r.wall_ms;
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steiner shortest path tree approximation pipeline"};
    app.require_subcommand(1);

    OracleBudget default_budget = budget_from_env();

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a seeded instance");
    std::string gen_family = "random-gnp", gen_out;
    GeneratorSpec spec;
    gen->add_option("--family", gen_family,
                    "layered|random-gnp|shallow-random|gadget|grid");
    gen->add_option("--seed", spec.seed, "Generator seed");
    gen->add_option("-n,--vertices", spec.n, "Vertex count (random families)");
    gen->add_option("-p,--density", spec.p, "Edge/chord probability or gadget density");
    gen->add_option("--layers", spec.layer_widths, "Layer widths (layered family)");
    gen->add_option("--radius", spec.radius, "Target hop radius (shallow-random)");
    gen->add_option("--terminal-fraction", spec.terminal_fraction, "Fraction of terminals");
    gen->add_option("--subsets", spec.subsets, "Gadget subset count");
    gen->add_option("--universe", spec.universe, "Gadget universe size");
    gen->add_option("--rows", spec.rows, "Grid rows");
    gen->add_option("--cols", spec.cols, "Grid columns");
    gen->add_option("--max-weight", spec.max_weight, "Edge weights drawn in 0..max");
    gen->add_flag("--vertex-weighted", spec.vertex_weighted, "Draw non-terminal vertex weights");
    gen->add_option("--max-vertex-weight", spec.max_vertex_weight, "Vertex weights in 1..max");
    gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

    // sps
    auto* sps_cmd = app.add_subcommand("sps", "Build the shortest path subgraph");
    std::string sps_file;
    bool sps_pruned = false, sps_json = false;
    sps_cmd->add_option("file", sps_file, "Instance file")->required();
    sps_cmd->add_flag("-x,--pruned", sps_pruned, "Prune to the terminal set");
    sps_cmd->add_flag("--json", sps_json, "Machine-readable report");

    // approx
    auto* approx_cmd = app.add_subcommand("approx", "Run the approximation pipeline");
    std::string approx_file, approx_out;
    bool approx_weighted = false, approx_uvdst_mode = false, approx_unpruned = false,
         approx_json = false;
    approx_cmd->add_option("file", approx_file, "Instance file")->required();
    approx_cmd->add_flag("--weighted", approx_weighted, "Minimize non-terminal weight");
    approx_cmd->add_flag("--uvdst", approx_uvdst_mode,
                         "Treat the instance as UVDST/VDST; skip the subgraph reduction");
    approx_cmd->add_flag("--unpruned", approx_unpruned, "Run on G~(s) instead of G~(s,X)");
    approx_cmd->add_option("-o,--output", approx_out, "Solution file (default stdout)");
    approx_cmd->add_flag("--json", approx_json, "Machine-readable run report to stderr");

    // exact
    auto* exact_cmd = app.add_subcommand("exact", "Brute-force exact oracle");
    std::string exact_file, exact_out;
    bool exact_weighted = false, exact_uvdst_mode = false, exact_json = false;
    std::size_t exact_budget = default_budget.max_nonterminals_enumerated;
    std::uint64_t exact_time_ms = 0;
    exact_cmd->add_option("file", exact_file, "Instance file")->required();
    exact_cmd->add_flag("--weighted", exact_weighted, "Minimize non-terminal weight");
    exact_cmd->add_flag("--uvdst", exact_uvdst_mode, "Treat the instance as UVDST/VDST");
    exact_cmd->add_option("--budget", exact_budget, "Max candidate non-terminals enumerated");
    exact_cmd->add_option("--time-limit-ms", exact_time_ms, "Wall-clock limit (0: none)");
    exact_cmd->add_option("-o,--output", exact_out, "Solution file (default stdout)");
    exact_cmd->add_flag("--json", exact_json, "Machine-readable run report to stderr");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check a solution file");
    std::string verify_file, verify_sol;
    bool verify_shortest = false;
    verify_cmd->add_option("file", verify_file, "Instance file")->required();
    verify_cmd->add_option("solution", verify_sol, "Solution file")->required();
    verify_cmd->add_flag("--shortest", verify_shortest,
                         "Also require every root path to be shortest");

    // reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "Emit a transformed instance");
    std::string reduce_file, reduce_to, reduce_out;
    reduce_cmd->add_option("file", reduce_file, "Input file")->required();
    reduce_cmd->add_option("--to", reduce_to, "dsspt|usspt|gadget-from-cover")->required();
    reduce_cmd->add_option("-o,--output", reduce_out, "Output file (default stdout)");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Solve a corpus and tabulate bounds");
    std::string bench_corpus;
    bool bench_no_time = false, bench_json = false;
    std::size_t bench_budget = default_budget.max_nonterminals_enumerated;
    bench_cmd->add_option("--corpus", bench_corpus, "Directory of .txt instances")->required();
    bench_cmd->add_flag("--no-time", bench_no_time, "Omit the timing column");
    bench_cmd->add_flag("--json", bench_json, "Machine-readable table");
    bench_cmd->add_option("--budget", bench_budget, "Oracle budget for the OPT column");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            spec.family = family_from_name(gen_family);
            emit(gen_out, serialize_instance(generate(spec)));
            return 0;
        }

        if (sps_cmd->parsed()) {
            std::string text = read_file(sps_file);
            Instance inst = parse_instance(text);
            Clock::time_point start = Clock::now();
            SpSubgraph sub = build_sps(inst.graph(), inst.source());
            if (sps_pruned) sub = prune_to_terminals(sub, inst.terminals());
            double build_ms = ms_since(start);
            bool acyclic = is_acyclic(sub.base);
            ShallownessReport shallow{0, 0};
            bool have_shallow = !inst.terminals().empty();
            if (have_shallow)
                shallow = shallowness(inst.graph(), inst.source(), inst.terminals());
            if (sps_json) {
                json j{{"command", "sps"},
                       {"digest", digest(text)},
                       {"pruned", sps_pruned},
                       {"vertices", sub.vertex_set.size()},
                       {"edges", sub.base.edge_count()},
                       {"acyclic", acyclic},
                       {"timings_ms", {{"build", build_ms}}}};
                if (have_shallow) {
                    j["radius_hops"] = shallow.radius_hops;
                    j["sp_radius_hops"] = shallow.sp_radius_hops;
                }
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "retained vertices " << sub.vertex_set.size() << "\n"
                          << "edges " << sub.base.edge_count() << "\n"
                          << "acyclic " << (acyclic ? "yes" : "no") << "\n";
                if (have_shallow)
                    std::cout << "radius-hops " << shallow.radius_hops << "\n"
                              << "sp-radius-hops " << shallow.sp_radius_hops << "\n";
            }
            return 0;
        }

        if (approx_cmd->parsed() || exact_cmd->parsed()) {
            bool is_exact = exact_cmd->parsed();
            const std::string& file = is_exact ? exact_file : approx_file;
            bool weighted = is_exact ? exact_weighted : approx_weighted;
            bool uvdst_mode = is_exact ? exact_uvdst_mode : approx_uvdst_mode;
            std::string text = read_file(file);
            Instance inst = parse_instance(text);
            Clock::time_point start = Clock::now();
            SolutionReport rep;
            if (is_exact) {
                OracleBudget b = default_budget;
                b.max_nonterminals_enumerated = exact_budget;
                b.time_limit = std::chrono::milliseconds(exact_time_ms);
                rep = uvdst_mode ? (weighted ? exact_vdst(inst, b) : exact_uvdst(inst, b))
                                 : (weighted ? exact_weighted_sspt(inst, b)
                                             : exact_sspt(inst, b));
            } else {
                rep = uvdst_mode
                          ? (weighted ? approx_vdst(inst) : approx_uvdst(inst))
                          : (weighted ? solve_weighted_sspt(inst, !approx_unpruned)
                                      : solve_sspt(inst, !approx_unpruned));
            }
            double solve_ms = ms_since(start);
            if (!rep.warning.empty()) std::cerr << "warning: " << rep.warning << "\n";
            emit(is_exact ? exact_out : approx_out, serialize_solution(rep));
            if (is_exact ? exact_json : approx_json) {
                json j{{"command", is_exact ? "exact" : "approx"},
                       {"digest", digest(text)},
                       {"weighted", weighted},
                       {"uvdst", uvdst_mode},
                       {"nt_count", rep.nt_count},
                       {"nt_weight", rep.nt_weight},
                       {"timings_ms", {{"solve", solve_ms}}},
                       {"certificate", certificate_json(rep.certificate)}};
                if (!rep.warning.empty()) j["warning"] = rep.warning;
                std::cerr << j.dump(2) << "\n";
            }
            return 0;
        }

        if (verify_cmd->parsed()) {
            Instance inst = parse_instance(read_file(verify_file));
            ParsedSolution sol = parse_solution(read_file(verify_sol));
            SolutionVerification v = verify_solution(inst, sol.tree, verify_shortest);
            std::size_t nt = 0;
            Weight ntw = 0;
            if (v.pass) {
                nt = nonterminal_count(inst, sol.tree);
                ntw = nonterminal_weight(inst, sol.tree);
                if (nt != sol.nt_count || ntw != sol.nt_weight) {
                    v.pass = false;
                    v.witness = "declared nt-count/nt-weight do not match the tree";
                }
            }
            if (v.pass) {
                std::cout << "PASS nt-count " << nt << " nt-weight " << ntw << "\n";
                return 0;
            }
            std::cout << "FAIL " << v.witness << "\n";
            return kExitVerifyFail;
        }

        if (reduce_cmd->parsed()) {
            if (reduce_to == "gadget-from-cover") {
                SetCoverInstance sc = parse_set_cover(read_file(reduce_file));
                emit(reduce_out, serialize_instance(gadget_from_set_cover(sc).first));
                return 0;
            }
            Instance inst = parse_instance(read_file(reduce_file));
            Instance out;
            if (reduce_to == "dsspt")
                out = inst.graph().directed() ? uvdst_to_dsspt(inst) : usspt_to_dsspt(inst);
            else if (reduce_to == "usspt")
                out = acyclic_uvdst_to_usspt(inst);
            else {
                std::cerr << "error: unknown reduction target '" << reduce_to << "'\n";
                return kExitUsage;
            }
            emit(reduce_out, serialize_instance(out));
            return 0;
        }

        if (bench_cmd->parsed()) {
            OracleBudget b = default_budget;
            b.max_nonterminals_enumerated = bench_budget;
            return run_bench(bench_corpus, bench_no_time, bench_json, b);
        }
    } catch (const TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const TimeLimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const TerminalUnreachable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const UnreachableTarget& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const InfeasibleCover& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const NotAcyclic& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
