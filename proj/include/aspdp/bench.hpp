// Instance generators, graph-problem encoders, run statistics.
#pragma once

#include "aspdp/graph.hpp"
#include "aspdp/model.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aspdp {

struct Clause {
    std::array<Atom, 3> atoms;
    std::array<bool, 3> positive;
};

struct TGrid {
    Program program;
    std::vector<Clause> clauses;  // the underlying SAT instance over the same atoms
};

// Triangle-grid instance over variables (1,1)..(k,l): a choice rule per variable and
// one constraint per clause forbidding its falsifying assignment.
TGrid generate_tgrid(int k, int l, double p, std::uint64_t seed);

enum class GraphProblem : std::uint8_t { ThreeCol, Svc, Cvc, Ds, TwoCol };

const char* to_string(GraphProblem g);
std::optional<GraphProblem> parse_graph_problem(std::string_view s);

// twocol is encoded exactly like svc.
Program encode_graph_problem(const Graph& g, GraphProblem problem);

// Erdos-Renyi G(n, p).
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

struct RunStats {
    std::string instance;
    std::string graph;
    std::string heuristic;
    std::uint64_t seed = 0;
    int width = -1;
    std::size_t nodes = 0;
    double parse_ms = 0, td_ms = 0, dp_ms = 0;
    std::string result;  // consistent / inconsistent / error
    std::string count;
    std::string optimum;
};

const char* csv_header();
std::string csv_row(const RunStats& s);

}  // namespace aspdp
