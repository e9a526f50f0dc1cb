// End-to-end pipeline: graph, decomposition, nice TD, DP, root readout.
#pragma once

#include "aspdp/decomposition.hpp"
#include "aspdp/graph.hpp"
#include "aspdp/model.hpp"

#include <optional>
#include <string>

namespace aspdp {

enum class Algorithm : std::uint8_t { Prim, Inc, Oracle };
enum class Task : std::uint8_t { Consistency, CountOptimal, Extract };

const char* to_string(Algorithm a);
const char* to_string(Task t);

struct SolveOptions {
    GraphKind graph = GraphKind::Incidence;
    Algorithm algorithm = Algorithm::Inc;
    Task task = Task::Consistency;
    Heuristic heuristic = Heuristic::MinFill;
    std::uint64_t seed = 1;
    bool check_invariants = false;
    bool caps = true;
    // Use this decomposition of the chosen graph instead of the heuristic one.
    std::optional<TreeDecomposition> td;
};

struct SolveResult {
    bool consistent = false;
    std::optional<Cost> optimum;          // count-optimal / extract
    Count count = 0;                      // count-optimal
    std::optional<Interpretation> answer_set;  // extract
    int width = -1;
    std::size_t nodes = 0;
    std::size_t max_table = 0;
    double td_ms = 0, dp_ms = 0;
};

// Throws std::invalid_argument for a PRIM/incidence mismatch or an invalid supplied TD,
// OracleLimitExceeded for oversized oracle runs.
SolveResult solve(const Program& p, const SolveOptions& opt);

// Runs the nice-TD construction step alone.
NiceTreeDecomposition decompose(const Graph& g, const SolveOptions& opt);

}  // namespace aspdp
