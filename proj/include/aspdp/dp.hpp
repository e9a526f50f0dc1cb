// Post-order dynamic programming over nice tree decompositions.
#pragma once

#include "aspdp/decomposition.hpp"
#include "aspdp/graph.hpp"
#include "aspdp/model.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace aspdp {

using Mask = std::uint64_t;
constexpr std::size_t kMaxBagAtoms = 64;

inline Mask bit(int i) { return Mask{1} << i; }
// Insert a zero bit at position p, shifting higher bits up.
inline Mask insert_bit(Mask m, int p) {
    Mask low = bit(p) - 1;
    return (m & low) | ((m & ~low) << 1);
}
// Delete bit p, shifting higher bits down.
inline Mask erase_bit(Mask m, int p) {
    Mask low = bit(p) - 1;
    return (m & low) | ((m >> 1) & ~low);
}

struct NodeContext {
    Node node = 0;
    NodeType type = NodeType::Leaf;
    std::vector<Atom> atoms;          // bag atoms, sorted
    std::vector<std::uint32_t> rules;  // bag-rules, sorted rule indices
    std::vector<Node> children;
    // int/rem: the affected atom or rule and its index in the larger of (node, child) lists
    bool atom_vertex = true;
    std::uint32_t item = 0;
    int local = -1;
};

struct DpContext {
    const Program* program = nullptr;
    const NiceTreeDecomposition* td = nullptr;
    GraphKind kind = GraphKind::Incidence;
    std::vector<NodeContext> nodes;
    std::vector<Interpretation> atoms_below;  // at_{<=t}
    std::vector<Node> order;                  // post-order
    std::vector<Cost> cost_true, cost_false;  // cst(P,{a},{a}) and cst(P,{},{a})

    Cost bag_cost(const NodeContext& n, Mask m) const;
};

// Pi_t for a bag of graph vertices.
std::vector<std::uint32_t> bag_rules(const Program& p, const Graph& g, const std::vector<Vertex>& bag, GraphKind kind);

// Throws std::length_error when a bag holds more than kMaxBagAtoms atoms.
DpContext prepare_dp(const Program& p, const Graph& g, const NiceTreeDecomposition& td, GraphKind kind);

// Provenance: indices of the originating tuples in the child tables.
struct Origin {
    static constexpr std::uint32_t none = static_cast<std::uint32_t>(-1);
    std::uint32_t left = none, right = none;
};

struct Payload {
    Cost cost = 0;
    Count count = 1;
    Origin origin;
};

// A finished table: keys in canonical (sorted) order with parallel payloads.
template <class Key>
struct Table {
    std::vector<Key> keys;
    std::vector<Payload> pay;
    std::size_t size() const { return keys.size(); }
    std::optional<std::size_t> find(const Key& k) const {
        auto it = std::lower_bound(keys.begin(), keys.end(), k);
        if (it == keys.end() || !(*it == k)) return std::nullopt;
        return static_cast<std::size_t>(it - keys.begin());
    }
};

// Collects tuples; equal keys merge by keeping the minimum cost and summing counts
// of minimum-cost derivations (kmin followed by cnt).
template <class Key, class Hash>
class TableBuilder {
public:
    explicit TableBuilder(bool counting) : counting_(counting) {}

    void add(Key k, Cost c, const Count& n, Origin o) {
        auto [it, fresh] = map_.try_emplace(std::move(k));
        Payload& p = it->second;
        if (fresh) {
            p.cost = c;
            p.origin = o;
            if (counting_) p.count = n;
        } else if (counting_) {
            if (c < p.cost) {
                p.cost = c;
                p.count = n;
                p.origin = o;
            } else if (c == p.cost) {
                p.count += n;
            }
        }
    }

    Table<Key> finish() {
        std::vector<std::pair<Key, Payload>> items;
        items.reserve(map_.size());
        while (!map_.empty()) {
            auto nh = map_.extract(map_.begin());
            items.emplace_back(std::move(nh.key()), std::move(nh.mapped()));
        }
        std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        Table<Key> t;
        t.keys.reserve(items.size());
        t.pay.reserve(items.size());
        for (auto& [k, p] : items) {
            t.keys.push_back(std::move(k));
            t.pay.push_back(std::move(p));
        }
        return t;
    }

private:
    bool counting_;
    std::unordered_map<Key, Payload, Hash> map_;
};

struct DpStats {
    std::size_t max_table = 0;
    std::size_t total_tuples = 0;
};

// Tables in post-order. An algorithm provides
//   using Key; Table<Key> compute(const NodeContext&, const std::vector<const Table<Key>*>&);
// Child tables are released once their parent is done unless keep_all is set.
template <class Algo>
std::vector<std::optional<Table<typename Algo::Key>>> run_dp(Algo& algo, const DpContext& ctx, bool keep_all,
                                                             DpStats* stats = nullptr) {
    using T = Table<typename Algo::Key>;
    std::vector<std::optional<T>> store(ctx.nodes.size());
    std::vector<const T*> kids;
    for (Node t : ctx.order) {
        const auto& nc = ctx.nodes[t];
        kids.clear();
        for (Node c : nc.children) kids.push_back(&*store[c]);
        store[t] = algo.compute(nc, kids);
        if (stats) {
            stats->max_table = std::max(stats->max_table, store[t]->size());
            stats->total_tuples += store[t]->size();
        }
        if (!keep_all)
            for (Node c : nc.children) store[c].reset();
    }
    return store;
}

struct RootSummary {
    bool consistent = false;
    Cost optimum = 0;
    Count count = 0;
    std::optional<std::size_t> index;  // root tuple
};

template <class Key>
RootSummary read_root(const Table<Key>& root, const Key& empty) {
    RootSummary s;
    if (auto i = root.find(empty)) {
        s.consistent = true;
        s.optimum = root.pay[*i].cost;
        s.count = root.pay[*i].count;
        s.index = i;
    }
    return s;
}

// Walks provenance links from the root tuple and unions the witness sets on the way.
template <class Key>
Interpretation extract_answer_set(const DpContext& ctx, const std::vector<std::optional<Table<Key>>>& store,
                                  std::size_t root_index) {
    Interpretation m(ctx.program->num_atoms());
    std::vector<std::pair<Node, std::size_t>> stack{{ctx.td->root, root_index}};
    while (!stack.empty()) {
        auto [t, i] = stack.back();
        stack.pop_back();
        const auto& nc = ctx.nodes[t];
        const auto& tab = *store[t];
        Mask w = tab.keys[i].M;
        for (std::size_t j = 0; j < nc.atoms.size(); ++j)
            if (w >> j & 1) m.set(nc.atoms[j]);
        const auto& o = tab.pay[i].origin;
        if (!nc.children.empty()) stack.emplace_back(nc.children[0], o.left);
        if (nc.children.size() > 1) stack.emplace_back(nc.children[1], o.right);
    }
    return m;
}

struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace aspdp
