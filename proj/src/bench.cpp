#include "aspdp/bench.hpp"

#include <iomanip>
#include <random>
#include <sstream>

namespace aspdp {

namespace {
// Uniform double in [0,1) from the top 53 bits; unlike std distributions this is identical on every platform.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
}  // namespace

TGrid generate_tgrid(int k, int l, double p, std::uint64_t seed) {
    TGrid g;
    auto& prog = g.program;
    auto var = [&](int i, int j) {
        return static_cast<Atom>((i - 1) * l + (j - 1));
    };
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= l; ++j) prog.add_atom("v_" + std::to_string(i) + "_" + std::to_string(j));
    for (Atom a = 0; a < prog.num_atoms(); ++a) prog.add_rule(Rule::choice({a}));

    std::mt19937_64 rng(seed);
    for (int i = 2; i <= k; ++i)
        for (int j = 2; j <= l; ++j) {
            if (!(unit(rng) < p)) continue;
            const std::array<std::array<Atom, 3>, 3> tri{{{var(i, j), var(i - 1, j), var(i, j - 1)},
                                                          {var(i, j), var(i - 1, j), var(i - 1, j - 1)},
                                                          {var(i, j), var(i - 1, j - 1), var(i, j - 1)}}};
            for (const auto& atoms : tri) {
                Clause c{atoms, {}};
                for (auto& s : c.positive) s = rng() & 1;
                std::vector<Atom> pos, neg;
                for (int x = 0; x < 3; ++x) (c.positive[x] ? neg : pos).push_back(atoms[x]);
                prog.add_rule(Rule::disjunctive({}, pos, neg));
                g.clauses.push_back(c);
            }
        }
    return g;
}

const char* to_string(GraphProblem g) {
    switch (g) {
        case GraphProblem::ThreeCol: return "threecol";
        case GraphProblem::Svc: return "svc";
        case GraphProblem::Cvc: return "cvc";
        case GraphProblem::Ds: return "ds";
        case GraphProblem::TwoCol: return "twocol";
    }
    return "?";
}

std::optional<GraphProblem> parse_graph_problem(std::string_view s) {
    for (auto g : {GraphProblem::ThreeCol, GraphProblem::Svc, GraphProblem::Cvc, GraphProblem::Ds, GraphProblem::TwoCol})
        if (s == to_string(g)) return g;
    return std::nullopt;
}

Program encode_graph_problem(const Graph& g, GraphProblem problem) {
    Program p;
    const auto n = g.num_vertices();
    const auto edges = g.edges();
    if (problem == GraphProblem::ThreeCol) {
        auto col = [](Vertex v, int c) { return static_cast<Atom>(3 * v + c); };
        for (Vertex v = 0; v < n; ++v)
            for (int c = 0; c < 3; ++c) p.add_atom("col_" + std::to_string(v + 1) + "_" + std::to_string(c + 1));
        for (Vertex v = 0; v < n; ++v) {
            p.add_rule(Rule::choice({col(v, 0), col(v, 1), col(v, 2)}));
            p.add_rule(Rule::disjunctive({}, {}, {col(v, 0), col(v, 1), col(v, 2)}));
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b) p.add_rule(Rule::disjunctive({}, {col(v, a), col(v, b)}));
        }
        for (auto [u, v] : edges)
            for (int c = 0; c < 3; ++c) p.add_rule(Rule::disjunctive({}, {col(u, c), col(v, c)}));
        return p;
    }
    for (Vertex v = 0; v < n; ++v) p.add_atom("in_" + std::to_string(v + 1));
    switch (problem) {
        case GraphProblem::Svc:
        case GraphProblem::TwoCol:
            for (auto [u, v] : edges) p.add_rule(Rule::disjunctive({u, v}));
            break;
        case GraphProblem::Cvc:
            for (Vertex v = 0; v < n; ++v) p.add_rule(Rule::choice({v}));
            for (auto [u, v] : edges) p.add_rule(Rule::disjunctive({}, {}, {u, v}));
            for (Vertex v = 0; v < n; ++v) p.add_rule(Rule::optimization(v, false, 1));
            break;
        case GraphProblem::Ds:
            for (Vertex v = 0; v < n; ++v) {
                std::vector<Atom> head{v};
                head.insert(head.end(), g.neighbors(v).begin(), g.neighbors(v).end());
                p.add_rule(Rule::disjunctive(head));
            }
            break;
        default: break;
    }
    return p;
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    Graph g(n);
    std::mt19937_64 rng(seed);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (unit(rng) < p) g.add_edge(u, v);
    return g;
}

const char* csv_header() {
    return "instance,graph,heuristic,seed,width,nodes,parse_ms,td_ms,dp_ms,result,count,optimum";
}

std::string csv_row(const RunStats& s) {
    std::ostringstream out;
    auto field = [&](const std::string& x) {
        if (x.find_first_of(",\"\n") == std::string::npos) { out << x; return; }
        out << '"';
        for (char c : x) out << (c == '"' ? "\"\"" : std::string(1, c));
        out << '"';
    };
    field(s.instance);
    out << ',' << s.graph << ',' << s.heuristic << ',' << s.seed << ',' << s.width << ',' << s.nodes << ','
        << std::fixed << std::setprecision(3) << s.parse_ms << ',' << s.td_ms << ',' << s.dp_ms << ',' << s.result
        << ',' << s.count << ',' << s.optimum;
    return out.str();
}

}  // namespace aspdp
