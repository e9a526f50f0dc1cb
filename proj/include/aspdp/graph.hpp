// Primal and incidence graphs of a program.
#pragma once

#include "aspdp/model.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aspdp {

using Vertex = std::uint32_t;

enum class GraphKind : std::uint8_t { Primal, Incidence };

const char* to_string(GraphKind k);

struct VertexRef {
    enum Kind : std::uint8_t { AtomVertex, RuleVertex } kind;
    std::uint32_t id;  // atom id or rule index
    bool operator==(const VertexRef&) const = default;
};

// Simple undirected graph over dense vertex ids. Atom vertices come first
// (vertex i is atom i), then rule vertices in rule order.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    Vertex add_vertex(VertexRef ref);
    // Ignores self-loops and repeated edges.
    void add_edge(Vertex u, Vertex v);

    std::size_t num_vertices() const { return adj_.size(); }
    std::size_t num_edges() const { return m_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    bool adjacent(Vertex u, Vertex v) const;
    const VertexRef& ref(Vertex v) const { return refs_[v]; }
    std::vector<std::pair<Vertex, Vertex>> edges() const;  // u < v, sorted

    // Rule index -> vertex, or npos when the rule has no vertex.
    Vertex rule_vertex(std::uint32_t rule) const;
    static constexpr Vertex npos = static_cast<Vertex>(-1);

private:
    std::vector<std::vector<Vertex>> adj_;  // sorted
    std::vector<VertexRef> refs_;
    std::vector<Vertex> rule_vertex_;
    std::size_t m_ = 0;
};

Graph primal_graph(const Program& p);
Graph incidence_graph(const Program& p);
Graph build_graph(const Program& p, GraphKind kind);

// "p tw n m" header, then one "u v" line per edge, 1-based.
std::string write_edge_list(const Graph& g);
// Reads the same format into a plain graph (all vertices tagged as atoms).
Graph read_edge_list(std::string_view text);

}  // namespace aspdp
