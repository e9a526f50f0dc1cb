// aspdp command line: solve, count, decompose, generate, bench.
#include "aspdp/bench.hpp"
#include "aspdp/decomposition.hpp"
#include "aspdp/oracle.hpp"
#include "aspdp/parser.hpp"
#include "aspdp/solver.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace aspdp;

namespace {

enum Exit : int { kOk = 0, kInconsistent = 1, kUsage = 2, kInput = 3 };

// Input problems that map to exit code 3.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

bool looks_smodels(const std::string& path, const std::string& text) {
    auto ext = fs::path(path).extension().string();
    if (ext == ".sm" || ext == ".smodels" || ext == ".lparse") return true;
    if (ext == ".lp") return false;
    auto i = text.find_first_not_of(" \t\r\n");
    return i != std::string::npos && std::isdigit(static_cast<unsigned char>(text[i]));
}

Program load_program(const std::string& path, const std::string& format, double* parse_ms = nullptr) {
    const std::string text = read_file(path);
    auto t0 = std::chrono::steady_clock::now();
    const bool sm = format == "smodels" || (format.empty() && looks_smodels(path, text));
    ParseResult r = sm ? parse_smodels(text) : parse_native(text);
    if (parse_ms) *parse_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& w : r.warnings) std::cerr << path << ":" << to_string(w) << " (warning)\n";
    if (!r) {
        for (const auto& e : r.errors) std::cerr << path << ":" << to_string(e) << "\n";
        throw InputError("parse failed");
    }
    return std::move(*r.program);
}

struct PipelineFlags {
    std::string graph;
    std::string algorithm;
    std::string task;
    std::string heuristic = "min-fill";
    std::uint64_t seed = 1;
    std::string format;
    std::string stats_csv;
    std::string td_path;
    bool check = false;
    bool no_caps = false;

    void add(CLI::App* app, bool with_task) {
        app->add_option("--graph", graph, "graph representation (default: incidence, primal for prim)")
            ->check(CLI::IsMember({"primal", "incidence"}));
        app->add_option("--algorithm,--engine", algorithm, "prim, inc or oracle (default: by graph)")
            ->check(CLI::IsMember({"prim", "inc", "oracle"}));
        if (with_task)
            app->add_option("--task", task, "consistency, count-optimal or extract")
                ->check(CLI::IsMember({"consistency", "count-optimal", "extract"}));
        app->add_option("--td-heuristic", heuristic)->check(CLI::IsMember({"min-fill", "min-degree"}));
        app->add_option("--seed", seed, "tie-breaking seed for the heuristic");
        app->add_option("--format", format, "input format (default: by extension/content)")
            ->check(CLI::IsMember({"native", "smodels"}));
        app->add_option("--stats-csv", stats_csv, "append a stats row to this CSV file");
        app->add_option("--td", td_path, "PACE tree decomposition of the chosen graph");
        app->add_flag("--check", check, "verify DP invariants at every node");
        app->add_flag("--no-caps", no_caps, "disable rule-state caps (INC)");
    }

    SolveOptions options(Task default_task) const {
        SolveOptions o;
        if (algorithm == "prim") o.algorithm = Algorithm::Prim;
        else if (algorithm == "oracle") o.algorithm = Algorithm::Oracle;
        else if (algorithm == "inc") o.algorithm = Algorithm::Inc;
        else o.algorithm = graph == "primal" ? Algorithm::Prim : Algorithm::Inc;
        if (graph.empty()) o.graph = o.algorithm == Algorithm::Prim ? GraphKind::Primal : GraphKind::Incidence;
        else o.graph = graph == "primal" ? GraphKind::Primal : GraphKind::Incidence;
        if (o.algorithm == Algorithm::Prim && o.graph != GraphKind::Primal)
            throw CLI::ValidationError("--algorithm prim requires --graph primal");
        if (o.algorithm == Algorithm::Inc && o.graph != GraphKind::Incidence)
            throw CLI::ValidationError("--algorithm inc requires --graph incidence");
        o.task = default_task;
        if (task == "consistency") o.task = Task::Consistency;
        else if (task == "count-optimal") o.task = Task::CountOptimal;
        else if (task == "extract") o.task = Task::Extract;
        o.heuristic = heuristic == "min-degree" ? Heuristic::MinDegree : Heuristic::MinFill;
        o.seed = seed;
        o.check_invariants = check;
        o.caps = !no_caps;
        if (!td_path.empty()) o.td = read_pace(read_file(td_path));
        return o;
    }
};

void append_csv(const std::string& path, const RunStats& s) {
    const bool fresh = !fs::exists(path) || fs::file_size(path) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) throw InputError("cannot write " + path);
    if (fresh) out << csv_header() << "\n";
    out << csv_row(s) << "\n";
}

std::string count_str(const Count& c) { return c.str(); }

RunStats stats_of(const std::string& instance, const SolveOptions& o, const SolveResult& r, double parse_ms) {
    RunStats s;
    s.instance = instance;
    s.graph = o.algorithm == Algorithm::Oracle ? "none" : to_string(o.graph);
    s.heuristic = to_string(o.heuristic);
    s.seed = o.seed;
    s.width = r.width;
    s.nodes = r.nodes;
    s.parse_ms = parse_ms;
    s.td_ms = r.td_ms;
    s.dp_ms = r.dp_ms;
    s.result = r.consistent ? "consistent" : "inconsistent";
    if (r.consistent && o.task != Task::Consistency) {
        s.count = count_str(r.count);
        if (r.optimum) s.optimum = std::to_string(*r.optimum);
    }
    return s;
}

void print_result(const Program& p, const SolveOptions& o, const SolveResult& r) {
    if (!r.consistent) {
        std::cout << "inconsistent\n";
        return;
    }
    switch (o.task) {
        case Task::Consistency: std::cout << "consistent\n"; break;
        case Task::CountOptimal: std::cout << "optimum=" << *r.optimum << " count=" << count_str(r.count) << "\n"; break;
        case Task::Extract: {
            std::cout << "optimum=" << *r.optimum << " count=" << count_str(r.count) << "\nanswer set:";
            for (const auto& n : p.names_of(*r.answer_set)) std::cout << ' ' << n;
            std::cout << "\n";
            break;
        }
    }
}

int run_solve(const std::string& file, const PipelineFlags& f, Task default_task) {
    SolveOptions o = f.options(default_task);
    double parse_ms = 0;
    Program p = load_program(file, f.format, &parse_ms);
    SolveResult r = solve(p, o);
    print_result(p, o, r);
    if (!f.stats_csv.empty()) append_csv(f.stats_csv, stats_of(file, o, r, parse_ms));
    return r.consistent ? kOk : kInconsistent;
}

int run_decompose(const std::string& file, const PipelineFlags& f, bool edge_list, bool nice) {
    SolveOptions o = f.options(Task::Consistency);
    Graph g = edge_list ? read_edge_list(read_file(file)) : build_graph(load_program(file, f.format), o.graph);
    if (nice) {
        NiceTreeDecomposition td = decompose(g, o);
        std::cout << "c nice: width " << td.width() << ", " << td.size() << " nodes\n";
        std::cout << write_pace(td, g.num_vertices());
        for (Node t = 0; t < td.size(); ++t) {
            std::cout << "c node " << t + 1 << ' ' << to_string(td.type[t]);
            if (td.type[t] == NodeType::Int || td.type[t] == NodeType::Rem) std::cout << ' ' << td.vertex[t] + 1;
            std::cout << "\n";
        }
        return kOk;
    }
    TreeDecomposition td;
    if (o.td) {
        auto rep = validate_td(g, *o.td);
        if (!rep.ok) throw InputError("supplied tree decomposition is invalid: " + rep.violations.front());
        td = *o.td;
    } else {
        td = heuristic_td(g, o.heuristic, o.seed);
    }
    std::cout << write_pace(td, g.num_vertices());
    return kOk;
}

int run_bench(const std::string& dir, const PipelineFlags& f, const std::vector<std::uint64_t>& seeds) {
    if (!fs::is_directory(dir)) throw InputError(dir + " is not a directory");
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir)) {
        const auto ext = e.path().extension().string();
        if (e.is_regular_file() && (ext == ".lp" || ext == ".sm" || ext == ".smodels" || ext == ".lparse"))
            files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    int failures = 0;
    for (const auto& path : files) {
        for (std::uint64_t seed : seeds) {
            PipelineFlags g = f;
            g.seed = seed;
            SolveOptions o = g.options(Task::CountOptimal);
            RunStats s;
            try {
                double parse_ms = 0;
                Program p = load_program(path.string(), f.format, &parse_ms);
                s = stats_of(path.filename().string(), o, solve(p, o), parse_ms);
            } catch (const std::exception& e) {
                std::cerr << path.string() << ": " << e.what() << "\n";
                s.instance = path.filename().string();
                s.graph = to_string(o.graph);
                s.heuristic = to_string(o.heuristic);
                s.seed = seed;
                s.result = "error";
                ++failures;
            }
            std::cout << csv_row(s) << "\n";
            if (!f.stats_csv.empty()) append_csv(f.stats_csv, s);
        }
    }
    return failures ? kInput : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dynamic programming on tree decompositions for answer set programs"};
    app.require_subcommand(1);

    std::string file;
    PipelineFlags solve_f, count_f, dec_f, bench_f;

    auto* solve_cmd = app.add_subcommand("solve", "decide consistency (or extract with --task extract)");
    solve_cmd->add_option("file", file, "program file")->required();
    solve_f.add(solve_cmd, true);

    auto* count_cmd = app.add_subcommand("count", "optimum cost and number of optimal answer sets");
    count_cmd->add_option("file", file, "program file")->required();
    count_f.add(count_cmd, true);

    bool edge_list = false, nice = false;
    auto* dec_cmd = app.add_subcommand("decompose", "print a tree decomposition in PACE format");
    dec_cmd->add_option("file", file, "program file (or edge list with --edge-list)")->required();
    dec_f.add(dec_cmd, false);
    dec_cmd->add_flag("--edge-list", edge_list, "input is a graph in 'p tw n m' edge-list format");
    dec_cmd->add_flag("--nice", nice, "print the nice decomposition with node types");

    std::string gen_kind;
    int k = 3, l = 40;
    double p = 0.85, density = 0.3;
    std::size_t n = 10;
    std::uint64_t gen_seed = 1;
    std::string edges_path, emit_graph;
    auto* gen_cmd = app.add_subcommand("generate", "emit a benchmark instance in native format");
    gen_cmd->add_option("kind", gen_kind, "tgrid, threecol, svc, cvc, ds or twocol")
        ->required()
        ->check(CLI::IsMember({"tgrid", "threecol", "svc", "cvc", "ds", "twocol"}));
    gen_cmd->add_option("--k", k, "tgrid rows")->check(CLI::Range(1, 1 << 20));
    gen_cmd->add_option("--l", l, "tgrid columns")->check(CLI::Range(1, 1 << 20));
    gen_cmd->add_option("--p", p, "tgrid clause probability")->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--n", n, "random graph order");
    gen_cmd->add_option("--density", density, "random graph edge probability")->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--edges", edges_path, "encode this edge-list graph instead of a random one");
    gen_cmd->add_option("--emit-graph", emit_graph, "also write the random graph as an edge list here");
    gen_cmd->add_option("--seed", gen_seed);

    std::string dir;
    std::vector<std::uint64_t> seeds{1};
    auto* bench_cmd = app.add_subcommand("bench", "run every instance of a directory, one CSV row per run");
    bench_cmd->add_option("dir", dir, "instance directory (*.lp, *.sm)")->required();
    bench_f.add(bench_cmd, true);
    bench_cmd->add_option("--seeds", seeds, "heuristic seeds, one run each")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*solve_cmd) return run_solve(file, solve_f, Task::Consistency);
        if (*count_cmd) return run_solve(file, count_f, Task::CountOptimal);
        if (*dec_cmd) return run_decompose(file, dec_f, edge_list, nice);
        if (*gen_cmd) {
            if (gen_kind == "tgrid") {
                if (p <= 0) throw CLI::ValidationError("--p must be in (0,1]");
                std::cout << emit_native(generate_tgrid(k, l, p, gen_seed).program);
                return kOk;
            }
            Graph g = edges_path.empty() ? random_graph(n, density, gen_seed) : read_edge_list(read_file(edges_path));
            if (!emit_graph.empty()) {
                std::ofstream out(emit_graph);
                if (!out) throw InputError("cannot write " + emit_graph);
                out << write_edge_list(g);
            }
            std::cout << emit_native(encode_graph_problem(g, *parse_graph_problem(gen_kind)));
            return kOk;
        }
        if (*bench_cmd) {
            if (bench_f.stats_csv.empty()) std::cout << csv_header() << "\n";
            return run_bench(dir, bench_f, seeds);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    }
    return kUsage;
}
