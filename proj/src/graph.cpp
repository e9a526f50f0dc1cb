#include "aspdp/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace aspdp {

const char* to_string(GraphKind k) { return k == GraphKind::Primal ? "primal" : "incidence"; }

Graph::Graph(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) add_vertex({VertexRef::AtomVertex, static_cast<std::uint32_t>(i)});
}

Vertex Graph::add_vertex(VertexRef ref) {
    auto v = static_cast<Vertex>(adj_.size());
    adj_.emplace_back();
    refs_.push_back(ref);
    if (ref.kind == VertexRef::RuleVertex) {
        if (rule_vertex_.size() <= ref.id) rule_vertex_.resize(ref.id + 1, npos);
        rule_vertex_[ref.id] = v;
    }
    return v;
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (u == v) return;
    auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it != a.end() && *it == v) return;
    a.insert(it, v);
    auto& b = adj_[v];
    b.insert(std::lower_bound(b.begin(), b.end(), u), u);
    ++m_;
}

bool Graph::adjacent(Vertex u, Vertex v) const { return std::binary_search(adj_[u].begin(), adj_[u].end(), v); }

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < adj_.size(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Vertex Graph::rule_vertex(std::uint32_t rule) const {
    return rule < rule_vertex_.size() ? rule_vertex_[rule] : npos;
}

Graph primal_graph(const Program& p) {
    Graph g(p.num_atoms());
    for (const auto& r : p.rules()) {
        if (r.kind == RuleKind::Optimization) continue;
        auto at = r.atoms();
        for (std::size_t i = 0; i < at.size(); ++i)
            for (std::size_t j = i + 1; j < at.size(); ++j) g.add_edge(at[i], at[j]);
    }
    return g;
}

Graph incidence_graph(const Program& p) {
    Graph g(p.num_atoms());
    for (std::uint32_t i = 0; i < p.num_rules(); ++i) {
        const auto& r = p.rules()[i];
        if (r.kind == RuleKind::Optimization) continue;
        Vertex v = g.add_vertex({VertexRef::RuleVertex, i});
        for (Atom a : r.atoms()) g.add_edge(a, v);
    }
    return g;
}

Graph build_graph(const Program& p, GraphKind kind) {
    return kind == GraphKind::Primal ? primal_graph(p) : incidence_graph(p);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "p tw " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

Graph read_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    Graph g;
    bool header = false;
    std::size_t n = 0, m = 0, lines = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, tw;
            if (!(ls >> p >> tw >> n >> m)) throw std::invalid_argument("bad edge-list header");
            g = Graph(n);
            header = true;
            continue;
        }
        if (!header) throw std::invalid_argument("edge line before 'p tw' header");
        std::size_t u, v;
        if (!(ls >> u >> v) || u == 0 || v == 0 || u > n || v > n)
            throw std::invalid_argument("bad edge line: " + line);
        g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        ++lines;
    }
    if (!header) throw std::invalid_argument("missing 'p tw' header");
    if (lines != m)
        throw std::invalid_argument("header announces " + std::to_string(m) + " edges, found " + std::to_string(lines));
    return g;
}

}  // namespace aspdp
