// Tree decompositions: heuristics, validation, nice normal form, PACE i/o.
#pragma once

#include "aspdp/graph.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace aspdp {

using Node = std::uint32_t;

enum class NodeType : std::uint8_t { Leaf, Int, Rem, Join };
enum class Heuristic : std::uint8_t { MinFill, MinDegree };

const char* to_string(NodeType t);
const char* to_string(Heuristic h);

struct TreeDecomposition {
    std::vector<std::vector<Vertex>> bags;  // sorted
    std::vector<Node> parent;               // root has itself as parent
    std::vector<std::vector<Node>> children;
    Node root = 0;

    std::size_t size() const { return bags.size(); }
    int width() const;
    Node add_node(std::vector<Vertex> bag);
    void link(Node child, Node par);
};

// Nice TD: every node typed; int/rem carry the affected vertex.
struct NiceTreeDecomposition : TreeDecomposition {
    std::vector<NodeType> type;
    std::vector<Vertex> vertex;  // int/rem only
};

struct TdReport {
    bool ok = true;
    std::vector<std::string> violations;
};

TdReport validate_td(const Graph& g, const TreeDecomposition& td);
// Checks node typing, at most two children, empty leaf and root bags.
TdReport validate_nice(const NiceTreeDecomposition& td);

TreeDecomposition heuristic_td(const Graph& g, Heuristic h, std::uint64_t seed);
NiceTreeDecomposition make_nice(const TreeDecomposition& td);
std::vector<Node> post_order(const TreeDecomposition& td, Node t);
inline std::vector<Node> post_order(const TreeDecomposition& td) { return post_order(td, td.root); }

// PACE .td format. Bag 1 becomes the root on read.
std::string write_pace(const TreeDecomposition& td, std::size_t num_vertices);
TreeDecomposition read_pace(std::string_view text);

}  // namespace aspdp
