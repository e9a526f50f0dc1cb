#include "aspdp/decomposition.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace aspdp {

const char* to_string(NodeType t) {
    switch (t) {
        case NodeType::Leaf: return "leaf";
        case NodeType::Int:  return "int";
        case NodeType::Rem:  return "rem";
        case NodeType::Join: return "join";
    }
    return "?";
}

const char* to_string(Heuristic h) { return h == Heuristic::MinFill ? "min-fill" : "min-degree"; }

int TreeDecomposition::width() const {
    std::size_t w = 0;
    for (const auto& b : bags) w = std::max(w, b.size());
    return static_cast<int>(w) - 1;
}

Node TreeDecomposition::add_node(std::vector<Vertex> bag) {
    std::sort(bag.begin(), bag.end());
    auto id = static_cast<Node>(bags.size());
    bags.push_back(std::move(bag));
    parent.push_back(id);
    children.emplace_back();
    return id;
}

void TreeDecomposition::link(Node child, Node par) {
    parent[child] = par;
    children[par].push_back(child);
}

std::vector<Node> post_order(const TreeDecomposition& td, Node t) {
    std::vector<Node> out;
    std::vector<std::pair<Node, std::size_t>> stack{{t, 0}};
    while (!stack.empty()) {
        auto& [n, i] = stack.back();
        if (i < td.children[n].size()) {
            Node c = td.children[n][i++];
            stack.emplace_back(c, 0);
        } else {
            out.push_back(n);
            stack.pop_back();
        }
    }
    return out;
}

TdReport validate_td(const Graph& g, const TreeDecomposition& td) {
    TdReport rep;
    auto bad = [&](std::string m) {
        rep.ok = false;
        if (rep.violations.size() < 20) rep.violations.push_back(std::move(m));
    };
    const std::size_t n = td.size();
    if (n == 0) {
        if (g.num_vertices() > 0) bad("empty decomposition of a non-empty graph");
        return rep;
    }
    // tree shape: every node reaches the root exactly once
    if (td.root >= n || td.parent[td.root] != td.root) bad("root is not its own parent");
    auto order = post_order(td);
    if (order.size() != n) bad("nodes unreachable from the root or cycle");
    for (Node t = 0; t < n; ++t)
        for (Node c : td.children[t])
            if (td.parent[c] != t) bad("parent/child links disagree at node " + std::to_string(c));

    std::vector<std::vector<Node>> where(g.num_vertices());
    for (Node t = 0; t < n; ++t)
        for (Vertex v : td.bags[t]) {
            if (v >= g.num_vertices()) bad("bag " + std::to_string(t) + " holds unknown vertex");
            else where[v].push_back(t);
        }
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (where[v].empty()) bad("vertex " + std::to_string(v) + " in no bag");
    for (auto [u, v] : g.edges()) {
        bool found = false;
        for (Node t : where[u])
            if (std::binary_search(td.bags[t].begin(), td.bags[t].end(), v)) { found = true; break; }
        if (!found) bad("edge " + std::to_string(u) + "-" + std::to_string(v) + " in no bag");
    }
    // connectedness: the nodes holding v form a subtree iff exactly one of them has a parent without v
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        int tops = 0;
        for (Node t : where[v]) {
            Node p = td.parent[t];
            if (p == t || !std::binary_search(td.bags[p].begin(), td.bags[p].end(), v)) ++tops;
        }
        if (tops > 1) bad("vertex " + std::to_string(v) + " violates connectedness");
    }
    return rep;
}

TdReport validate_nice(const NiceTreeDecomposition& td) {
    TdReport rep;
    auto bad = [&](std::string m) {
        rep.ok = false;
        if (rep.violations.size() < 20) rep.violations.push_back(std::move(m));
    };
    if (!td.bags[td.root].empty()) bad("root bag not empty");
    for (Node t = 0; t < td.size(); ++t) {
        const auto& ch = td.children[t];
        const auto& b  = td.bags[t];
        switch (td.type[t]) {
            case NodeType::Leaf:
                if (!ch.empty() || !b.empty()) bad("leaf " + std::to_string(t) + " malformed");
                break;
            case NodeType::Join:
                if (ch.size() != 2 || td.bags[ch[0]] != b || td.bags[ch[1]] != b)
                    bad("join " + std::to_string(t) + " malformed");
                break;
            case NodeType::Int:
            case NodeType::Rem: {
                if (ch.size() != 1) { bad("node " + std::to_string(t) + " needs one child"); break; }
                const auto& big   = td.type[t] == NodeType::Int ? b : td.bags[ch[0]];
                const auto& small = td.type[t] == NodeType::Int ? td.bags[ch[0]] : b;
                std::vector<Vertex> diff;
                std::set_difference(big.begin(), big.end(), small.begin(), small.end(), std::back_inserter(diff));
                if (big.size() != small.size() + 1 || diff.size() != 1 || diff[0] != td.vertex[t])
                    bad(std::string(to_string(td.type[t])) + " " + std::to_string(t) + " malformed");
                break;
            }
        }
    }
    return rep;
}

TreeDecomposition heuristic_td(const Graph& g, Heuristic h, std::uint64_t seed) {
    const std::size_t n = g.num_vertices();
    TreeDecomposition td;
    if (n == 0) {
        td.add_node({});
        return td;
    }
    std::vector<std::set<Vertex>> adj(n);
    for (Vertex v = 0; v < n; ++v) adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());

    auto score = [&](Vertex v) -> std::size_t {
        if (h == Heuristic::MinDegree) return adj[v].size();
        std::size_t fill = 0;
        for (auto i = adj[v].begin(); i != adj[v].end(); ++i)
            for (auto j = std::next(i); j != adj[v].end(); ++j)
                if (!adj[*i].count(*j)) ++fill;
        return fill;
    };
    std::vector<std::size_t> sc(n);
    for (Vertex v = 0; v < n; ++v) sc[v] = score(v);

    std::mt19937_64 rng(seed);
    std::vector<char> gone(n, 0);
    std::vector<std::size_t> pos(n);
    std::vector<std::vector<Vertex>> bag(n);
    std::vector<Vertex> order;
    std::vector<Vertex> ties;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        ties.clear();
        for (Vertex v = 0; v < n; ++v) {
            if (gone[v]) continue;
            if (sc[v] < best) { best = sc[v]; ties.clear(); }
            if (sc[v] == best) ties.push_back(v);
        }
        Vertex v = ties[rng() % ties.size()];
        gone[v] = 1;
        pos[v] = step;
        order.push_back(v);
        std::vector<Vertex> nb(adj[v].begin(), adj[v].end());
        bag[v] = nb;
        bag[v].push_back(v);
        for (Vertex u : nb) adj[u].erase(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                adj[nb[i]].insert(nb[j]);
                adj[nb[j]].insert(nb[i]);
            }
        std::set<Vertex> touched(nb.begin(), nb.end());
        if (h == Heuristic::MinFill)
            for (Vertex u : nb) touched.insert(adj[u].begin(), adj[u].end());
        for (Vertex u : touched) sc[u] = score(u);
    }
    for (Vertex v : order) td.add_node(bag[v]);
    // node i is the bag of order[i]; its parent is the earliest-eliminated later neighbour
    Node root = static_cast<Node>(n - 1);
    td.root = root;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Vertex v = order[i];
        std::size_t up = n;
        for (Vertex u : bag[v])
            if (u != v) up = std::min(up, pos[u]);
        td.link(static_cast<Node>(i), up == n ? root : static_cast<Node>(up));
    }
    return td;
}

namespace {

struct NiceBuilder {
    NiceTreeDecomposition out;

    Node add(std::vector<Vertex> bag, NodeType t, Vertex v, std::initializer_list<Node> ch) {
        Node id = out.add_node(std::move(bag));
        out.type.push_back(t);
        out.vertex.push_back(v);
        for (Node c : ch) out.link(c, id);
        return id;
    }

    // Chain from node x (bag from) up to a node whose bag is `to`: removals first, rule-side vertices
    // (larger ids) removed before atoms, then introductions in increasing id order.
    Node chain(Node x, const std::vector<Vertex>& to) {
        std::vector<Vertex> cur = out.bags[x];
        std::vector<Vertex> drop, add_;
        std::set_difference(cur.begin(), cur.end(), to.begin(), to.end(), std::back_inserter(drop));
        std::set_difference(to.begin(), to.end(), cur.begin(), cur.end(), std::back_inserter(add_));
        for (auto it = drop.rbegin(); it != drop.rend(); ++it) {
            cur.erase(std::find(cur.begin(), cur.end(), *it));
            x = add(cur, NodeType::Rem, *it, {x});
        }
        for (Vertex v : add_) {
            cur.insert(std::lower_bound(cur.begin(), cur.end(), v), v);
            x = add(cur, NodeType::Int, v, {x});
        }
        return x;
    }
};

}  // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& td) {
    NiceBuilder b;
    std::vector<Node> top(td.size());
    for (Node t : post_order(td)) {
        const auto& bag = td.bags[t];
        const auto& ch  = td.children[t];
        if (ch.empty()) {
            Node leaf = b.add({}, NodeType::Leaf, 0, {});
            top[t] = b.chain(leaf, bag);
            continue;
        }
        Node acc = b.chain(top[ch[0]], bag);
        for (std::size_t i = 1; i < ch.size(); ++i) {
            Node other = b.chain(top[ch[i]], bag);
            acc = b.add(bag, NodeType::Join, 0, {acc, other});
        }
        top[t] = acc;
    }
    Node root = b.chain(top[td.root], {});
    b.out.root = root;
    b.out.parent[root] = root;
    return std::move(b.out);
}

std::string write_pace(const TreeDecomposition& td, std::size_t num_vertices) {
    std::ostringstream out;
    out << "s td " << td.size() << ' ' << td.width() + 1 << ' ' << num_vertices << '\n';
    for (Node t = 0; t < td.size(); ++t) {
        out << "b " << t + 1;
        for (Vertex v : td.bags[t]) out << ' ' << v + 1;
        out << '\n';
    }
    for (Node t = 0; t < td.size(); ++t)
        if (td.parent[t] != t) out << td.parent[t] + 1 << ' ' << t + 1 << '\n';
    return out.str();
}

TreeDecomposition read_pace(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t nbags = 0, nv = 0;
    bool header = false;
    std::vector<std::vector<Vertex>> bags;
    std::vector<std::vector<Node>> adj;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 's') {
            std::string s, tdw;
            std::size_t w;
            if (!(ls >> s >> tdw >> nbags >> w >> nv) || tdw != "td") throw std::invalid_argument("bad 's td' header");
            bags.assign(nbags, {});
            adj.assign(nbags, {});
            header = true;
        } else if (!header) {
            throw std::invalid_argument("TD line before 's td' header");
        } else if (line[0] == 'b') {
            std::string b;
            std::size_t id;
            ls >> b >> id;
            if (id == 0 || id > nbags) throw std::invalid_argument("bad bag id: " + line);
            std::size_t v;
            while (ls >> v) {
                if (v == 0 || v > nv) throw std::invalid_argument("vertex out of range: " + line);
                bags[id - 1].push_back(static_cast<Vertex>(v - 1));
            }
        } else {
            std::size_t a, c;
            if (!(ls >> a >> c) || a == 0 || c == 0 || a > nbags || c > nbags)
                throw std::invalid_argument("bad tree edge: " + line);
            adj[a - 1].push_back(static_cast<Node>(c - 1));
            adj[c - 1].push_back(static_cast<Node>(a - 1));
        }
    }
    if (!header) throw std::invalid_argument("missing 's td' header");
    TreeDecomposition td;
    for (auto& b : bags) td.add_node(b);
    if (nbags == 0) {
        td.add_node({});
        return td;
    }
    std::vector<char> seen(nbags, 0);
    std::vector<Node> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        Node t = stack.back();
        stack.pop_back();
        for (Node u : adj[t])
            if (!seen[u]) {
                seen[u] = 1;
                td.link(u, t);
                stack.push_back(u);
            }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw std::invalid_argument("TD is not a connected tree");
    td.root = 0;
    return td;
}

}  // namespace aspdp
