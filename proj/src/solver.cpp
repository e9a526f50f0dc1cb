#include "aspdp/solver.hpp"

#include "aspdp/dp.hpp"
#include "aspdp/inc.hpp"
#include "aspdp/oracle.hpp"
#include "aspdp/prim.hpp"

#include <chrono>
#include <stdexcept>

namespace aspdp {

const char* to_string(Algorithm a) {
    switch (a) {
        case Algorithm::Prim: return "prim";
        case Algorithm::Inc: return "inc";
        case Algorithm::Oracle: return "oracle";
    }
    return "?";
}

const char* to_string(Task t) {
    switch (t) {
        case Task::Consistency: return "consistency";
        case Task::CountOptimal: return "count-optimal";
        case Task::Extract: return "extract";
    }
    return "?";
}

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

template <class Algo>
void run(Algo& algo, const DpContext& ctx, const SolveOptions& opt, SolveResult& res) {
    const bool extract = opt.task == Task::Extract;
    DpStats stats;
    auto store = run_dp(algo, ctx, extract, &stats);
    res.max_table = stats.max_table;
    auto root = read_root(*store[ctx.td->root], Algo::empty_key());
    res.consistent = root.consistent;
    if (!root.consistent) return;
    if (opt.task != Task::Consistency) {
        res.optimum = root.optimum;
        res.count = root.count;
    }
    if (extract) res.answer_set = extract_answer_set(ctx, store, *root.index);
}

}  // namespace

NiceTreeDecomposition decompose(const Graph& g, const SolveOptions& opt) {
    TreeDecomposition td;
    if (opt.td) {
        auto rep = validate_td(g, *opt.td);
        if (!rep.ok) throw std::invalid_argument("supplied tree decomposition is invalid: " + rep.violations.front());
        td = *opt.td;
    } else {
        td = heuristic_td(g, opt.heuristic, opt.seed);
    }
    return make_nice(td);
}

SolveResult solve(const Program& p, const SolveOptions& opt) {
    SolveResult res;
    if (opt.algorithm == Algorithm::Oracle) {
        auto t0 = std::chrono::steady_clock::now();
        auto rep = count_optimal(p);
        res.dp_ms = ms_since(t0);
        res.consistent = !rep.answer_sets.empty();
        if (res.consistent && opt.task != Task::Consistency) {
            res.optimum = rep.optimum;
            res.count = rep.optimal_count;
        }
        if (res.consistent && opt.task == Task::Extract) {
            Interpretation all(p.num_atoms());
            all.set();
            for (const auto& m : rep.answer_sets)
                if (cost(p, m, all) == *rep.optimum) {
                    res.answer_set = m;
                    break;
                }
        }
        return res;
    }
    if (opt.algorithm == Algorithm::Prim && opt.graph != GraphKind::Primal)
        throw std::invalid_argument("prim runs on the primal graph");
    if (opt.algorithm == Algorithm::Inc && opt.graph != GraphKind::Incidence)
        throw std::invalid_argument("inc runs on the incidence graph");

    auto t0 = std::chrono::steady_clock::now();
    Graph g = build_graph(p, opt.graph);
    NiceTreeDecomposition nice = decompose(g, opt);
    res.td_ms = ms_since(t0);
    res.width = nice.width();
    res.nodes = nice.size();
    if (opt.check_invariants) {
        auto a = validate_td(g, nice);
        auto b = validate_nice(nice);
        if (!a.ok) throw InvariantViolation("nice TD invalid: " + a.violations.front());
        if (!b.ok) throw InvariantViolation("nice TD malformed: " + b.violations.front());
    }

    t0 = std::chrono::steady_clock::now();
    DpContext ctx = prepare_dp(p, g, nice, opt.graph);
    const bool counting = opt.task != Task::Consistency;
    if (opt.algorithm == Algorithm::Prim) {
        PrimAlgorithm algo(ctx, {counting, opt.check_invariants});
        run(algo, ctx, opt, res);
    } else {
        IncAlgorithm algo(ctx, {counting, opt.caps, opt.check_invariants});
        run(algo, ctx, opt, res);
    }
    res.dp_ms = ms_since(t0);
    return res;
}

}  // namespace aspdp
