#include "aspdp/dp.hpp"

#include <algorithm>

namespace aspdp {

Cost DpContext::bag_cost(const NodeContext& n, Mask m) const {
    Cost c = 0;
    for (std::size_t j = 0; j < n.atoms.size(); ++j) c += (m >> j & 1) ? cost_true[n.atoms[j]] : cost_false[n.atoms[j]];
    return c;
}

std::vector<std::uint32_t> bag_rules(const Program& p, const Graph& g, const std::vector<Vertex>& bag, GraphKind kind) {
    std::vector<std::uint32_t> out;
    if (kind == GraphKind::Incidence) {
        for (Vertex v : bag)
            if (g.ref(v).kind == VertexRef::RuleVertex) out.push_back(g.ref(v).id);
    } else {
        for (std::uint32_t i = 0; i < p.num_rules(); ++i) {
            const auto& r = p.rules()[i];
            if (r.kind == RuleKind::Optimization) continue;
            auto at = r.atoms();
            if (std::includes(bag.begin(), bag.end(), at.begin(), at.end())) out.push_back(i);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

DpContext prepare_dp(const Program& p, const Graph& g, const NiceTreeDecomposition& td, GraphKind kind) {
    DpContext ctx;
    ctx.program = &p;
    ctx.td = &td;
    ctx.kind = kind;
    ctx.order = post_order(td);
    ctx.nodes.resize(td.size());
    ctx.atoms_below.assign(td.size(), Interpretation(p.num_atoms()));

    // primal bag-rules: index rules by their smallest atom to avoid scanning all rules per node
    std::vector<std::vector<std::uint32_t>> by_atom(p.num_atoms());
    std::vector<std::uint32_t> atom_free;
    std::vector<std::vector<Atom>> rule_atoms(p.num_rules());
    if (kind == GraphKind::Primal) {
        for (std::uint32_t i = 0; i < p.num_rules(); ++i) {
            if (p.rules()[i].kind == RuleKind::Optimization) continue;
            rule_atoms[i] = p.rules()[i].atoms();
            if (rule_atoms[i].empty()) atom_free.push_back(i);
            else by_atom[rule_atoms[i][0]].push_back(i);
        }
    }

    for (Node t : ctx.order) {
        auto& nc = ctx.nodes[t];
        nc.node = t;
        nc.type = td.type[t];
        nc.children = td.children[t];
        for (Vertex v : td.bags[t]) {
            const auto& ref = g.ref(v);
            if (ref.kind == VertexRef::AtomVertex) nc.atoms.push_back(ref.id);
        }
        std::sort(nc.atoms.begin(), nc.atoms.end());
        if (nc.atoms.size() > kMaxBagAtoms) throw std::length_error("bag holds more than 64 atoms");
        if (kind == GraphKind::Incidence) {
            nc.rules = bag_rules(p, g, td.bags[t], kind);
        } else {
            nc.rules = atom_free;
            for (Atom a : nc.atoms)
                for (auto i : by_atom[a])
                    if (std::includes(nc.atoms.begin(), nc.atoms.end(), rule_atoms[i].begin(), rule_atoms[i].end()))
                        nc.rules.push_back(i);
            std::sort(nc.rules.begin(), nc.rules.end());
        }
        auto& below = ctx.atoms_below[t];
        for (Node c : nc.children) below |= ctx.atoms_below[c];
        for (Atom a : nc.atoms) below.set(a);

        if (nc.type == NodeType::Int || nc.type == NodeType::Rem) {
            const auto& ref = g.ref(td.vertex[t]);
            nc.atom_vertex = ref.kind == VertexRef::AtomVertex;
            nc.item = ref.id;
            // position inside the larger list: the node's own for int, the child's for rem
            const auto& big = nc.type == NodeType::Int ? nc : ctx.nodes[nc.children[0]];
            if (nc.atom_vertex)
                nc.local = static_cast<int>(std::lower_bound(big.atoms.begin(), big.atoms.end(), nc.item) - big.atoms.begin());
            else
                nc.local = static_cast<int>(std::lower_bound(big.rules.begin(), big.rules.end(), nc.item) - big.rules.begin());
        }
    }

    ctx.cost_true.assign(p.num_atoms(), 0);
    ctx.cost_false.assign(p.num_atoms(), 0);
    for (const auto& r : p.rules()) {
        if (r.kind != RuleKind::Optimization) continue;
        for (Atom a : r.pos) ctx.cost_true[a] += r.cost;
        for (Atom a : r.neg) ctx.cost_false[a] += r.cost;
    }
    return ctx;
}

}  // namespace aspdp
