#include "aspdp/bench.hpp"
#include "aspdp/oracle.hpp"
#include "aspdp/parser.hpp"
#include "aspdp/solver.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace aspdp;

namespace {

py::int_ to_py(const Count& c) { return py::reinterpret_steal<py::int_>(PyLong_FromString(c.str().c_str(), nullptr, 10)); }

template <class E>
E pick(const std::string& s, std::initializer_list<std::pair<const char*, E>> xs, const char* what) {
    for (auto& [n, e] : xs)
        if (s == n) return e;
    throw py::value_error(std::string("unknown ") + what + " '" + s + "'");
}

Program parse(const std::string& text, const std::string& format) {
    ParseResult r = format == "smodels" ? parse_smodels(text)
                  : format == "native"  ? parse_native(text)
                                        : throw py::value_error("format must be 'native' or 'smodels'");
    if (!r) {
        std::string msg;
        for (const auto& d : r.errors) msg += (msg.empty() ? "" : "\n") + to_string(d);
        throw py::value_error(msg);
    }
    return std::move(*r.program);
}

py::dict solve_py(const Program& p, const std::string& task, const std::string& graph, std::optional<std::string> algorithm,
                  const std::string& heuristic, std::uint64_t seed, bool check, bool caps) {
    SolveOptions o;
    o.graph = pick<GraphKind>(graph, {{"primal", GraphKind::Primal}, {"incidence", GraphKind::Incidence}}, "graph");
    o.algorithm = algorithm ? pick<Algorithm>(*algorithm, {{"prim", Algorithm::Prim}, {"inc", Algorithm::Inc}, {"oracle", Algorithm::Oracle}}, "algorithm")
                            : (o.graph == GraphKind::Primal ? Algorithm::Prim : Algorithm::Inc);
    o.task = pick<Task>(task, {{"consistency", Task::Consistency}, {"count-optimal", Task::CountOptimal}, {"extract", Task::Extract}}, "task");
    o.heuristic = pick<Heuristic>(heuristic, {{"min-fill", Heuristic::MinFill}, {"min-degree", Heuristic::MinDegree}}, "heuristic");
    o.seed = seed;
    o.check_invariants = check;
    o.caps = caps;
    SolveResult r;
    {
        py::gil_scoped_release nogil;
        r = solve(p, o);
    }
    py::dict d;
    d["consistent"] = r.consistent;
    d["optimum"] = r.optimum ? py::object(py::int_(*r.optimum)) : py::none();
    d["count"] = o.task == Task::CountOptimal || o.task == Task::Extract ? py::object(to_py(r.count)) : py::none();
    d["answer_set"] = r.answer_set ? py::object(py::cast(p.names_of(*r.answer_set))) : py::none();
    d["width"] = r.width;
    d["nodes"] = r.nodes;
    d["max_table"] = r.max_table;
    d["td_ms"] = r.td_ms;
    d["dp_ms"] = r.dp_ms;
    return d;
}

GraphKind graph_kind(const std::string& s) {
    return pick<GraphKind>(s, {{"primal", GraphKind::Primal}, {"incidence", GraphKind::Incidence}}, "graph");
}

}  // namespace

PYBIND11_MODULE(_aspdp, m) {
    m.doc() = "Answer-set counting by dynamic programming on tree decompositions";

    py::register_exception<OracleLimitExceeded>(m, "OracleLimitExceeded", PyExc_ValueError);

    py::class_<Program>(m, "Program")
        .def_property_readonly("atoms", &Program::names)
        .def_property_readonly("num_rules", &Program::num_rules)
        .def("to_native", [](const Program& p) { return emit_native(p); })
        .def("__repr__", [](const Program& p) {
            return "<Program " + std::to_string(p.num_atoms()) + " atoms, " + std::to_string(p.num_rules()) + " rules>";
        });

    m.def("parse", &parse, py::arg("text"), py::arg("format") = "native");
    m.def("solve", &solve_py, py::arg("program"), py::arg("task") = "consistency", py::arg("graph") = "incidence",
          py::arg("algorithm") = py::none(), py::arg("heuristic") = "min-fill", py::arg("seed") = 1,
          py::arg("check") = false, py::arg("caps") = true);
    m.def("answer_sets", [](const Program& p) {
        std::vector<std::vector<std::string>> out;
        for (const auto& a : enumerate_answer_sets(p)) out.push_back(p.names_of(a));
        return out;
    }, py::arg("program"), "All answer sets by brute force (at most 20 atoms).");
    m.def("edges", [](const Program& p, const std::string& graph) { return build_graph(p, graph_kind(graph)).edges(); },
          py::arg("program"), py::arg("graph") = "incidence");
    m.def("decompose", [](const Program& p, const std::string& graph, const std::string& heuristic, std::uint64_t seed) {
        const Graph g = build_graph(p, graph_kind(graph));
        auto td = heuristic_td(g, pick<Heuristic>(heuristic, {{"min-fill", Heuristic::MinFill}, {"min-degree", Heuristic::MinDegree}}, "heuristic"), seed);
        py::dict d;
        d["width"] = td.width();
        d["bags"] = td.bags;
        d["parent"] = td.parent;
        d["root"] = td.root;
        d["pace"] = write_pace(td, g.num_vertices());
        return d;
    }, py::arg("program"), py::arg("graph") = "incidence", py::arg("heuristic") = "min-fill", py::arg("seed") = 1);
    m.def("generate_tgrid", [](int k, int l, double p, std::uint64_t seed) { return generate_tgrid(k, l, p, seed).program; },
          py::arg("k"), py::arg("l"), py::arg("p"), py::arg("seed") = 1);
    m.def("encode_graph", [](const std::vector<std::pair<Vertex, Vertex>>& edges, std::size_t n, const std::string& problem) {
        auto prob = parse_graph_problem(problem);
        if (!prob) throw py::value_error("unknown problem '" + problem + "'");
        Graph g(n);
        for (auto [u, v] : edges) {
            if (u >= n || v >= n) throw py::value_error("edge endpoint out of range");
            g.add_edge(u, v);
        }
        return encode_graph_problem(g, *prob);
    }, py::arg("edges"), py::arg("n"), py::arg("problem"), "Encode a graph problem; vertices are 0-based.");
}
