#include "aspdp/prim.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

namespace aspdp {

namespace {

using Builder = TableBuilder<PrimKey, PrimKeyHash>;

void normalize(std::vector<Mask>& f) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
}

// Pi_t as local rules; every atom of these rules is in the bag.
LocalProgram bag_program(const std::vector<RuleView>& views) {
    LocalProgram p;
    for (const auto& v : views) p.push_back(v.local(static_cast<std::int64_t>(v.bound)));
    return p;
}

LocalProgram reduct(const LocalProgram& p, Mask m) {
    LocalProgram out;
    for (const auto& r : p) append_reduct(out, r, m);
    return out;
}

}  // namespace

std::vector<Mask> mod_filter(const std::vector<Mask>& family, const LocalProgram& p) {
    std::vector<Mask> out;
    for (Mask c : family)
        if (satisfies(p, c)) out.push_back(c);
    return out;
}

PrimTable PrimAlgorithm::compute(const NodeContext& nc, const std::vector<const PrimTable*>& kids) {
    PrimTable t;
    switch (nc.type) {
        case NodeType::Leaf: t = leaf(nc); break;
        case NodeType::Int: t = introduce(nc, *kids[0]); break;
        case NodeType::Rem: t = remove(nc, *kids[0]); break;
        case NodeType::Join: t = join(nc, *kids[0], *kids[1]); break;
    }
    if (opt_.check) check(nc, t);
    return t;
}

PrimTable PrimAlgorithm::leaf(const NodeContext& nc) {
    Builder b(opt_.counting);
    // only atom-free rules (e.g. an empty constraint) can be bag-rules of a leaf
    const auto views = make_views(ctx_, nc, true);
    if (satisfies(bag_program(views), 0)) b.add(PrimKey{}, 0, Count(1), {});
    return b.finish();
}

PrimTable PrimAlgorithm::introduce(const NodeContext& nc, const PrimTable& child) {
    const auto views = make_views(ctx_, nc, true);
    const LocalProgram prog = bag_program(views);
    const int p = nc.local;
    const Mask a = bit(p);
    const Cost c_in = ctx_.cost_true[nc.item], c_out = ctx_.cost_false[nc.item];
    Builder b(opt_.counting);
    std::vector<Mask> fam;
    for (std::uint32_t i = 0; i < child.size(); ++i) {
        const PrimKey& k = child.keys[i];
        const Mask m0 = insert_bit(k.M, p), m1 = m0 | a;
        if (satisfies(prog, m1)) {
            fam.clear();
            fam.push_back(m0);
            for (Mask c : k.cws) {
                fam.push_back(insert_bit(c, p) | a);
                fam.push_back(insert_bit(c, p));
            }
            PrimKey out{m1, mod_filter(fam, reduct(prog, m1))};
            normalize(out.cws);
            b.add(std::move(out), child.pay[i].cost + c_in, child.pay[i].count, {i});
        }
        if (satisfies(prog, m0)) {
            fam.clear();
            for (Mask c : k.cws) fam.push_back(insert_bit(c, p));
            PrimKey out{m0, mod_filter(fam, reduct(prog, m0))};
            normalize(out.cws);
            b.add(std::move(out), child.pay[i].cost + c_out, child.pay[i].count, {i});
        }
    }
    return b.finish();
}

PrimTable PrimAlgorithm::remove(const NodeContext& nc, const PrimTable& child) {
    const int p = nc.local;
    Builder b(opt_.counting);
    for (std::uint32_t i = 0; i < child.size(); ++i) {
        const PrimKey& k = child.keys[i];
        PrimKey out{erase_bit(k.M, p), {}};
        out.cws.reserve(k.cws.size());
        for (Mask c : k.cws) out.cws.push_back(erase_bit(c, p));
        normalize(out.cws);
        b.add(std::move(out), child.pay[i].cost, child.pay[i].count, {i});
    }
    return b.finish();
}

PrimTable PrimAlgorithm::join(const NodeContext& nc, const PrimTable& left, const PrimTable& right) {
    std::unordered_map<Mask, std::vector<std::uint32_t>> by_m;
    for (std::uint32_t j = 0; j < right.size(); ++j) by_m[right.keys[j].M].push_back(j);
    Builder b(opt_.counting);
    for (std::uint32_t i = 0; i < left.size(); ++i) {
        const PrimKey& l = left.keys[i];
        auto it = by_m.find(l.M);
        if (it == by_m.end()) continue;
        const Mask m = l.M;
        const Cost shared = ctx_.bag_cost(nc, m);
        const bool m_left = std::binary_search(l.cws.begin(), l.cws.end(), m);
        for (std::uint32_t j : it->second) {
            const PrimKey& r = right.keys[j];
            PrimKey out{m, {}};
            std::set_intersection(l.cws.begin(), l.cws.end(), r.cws.begin(), r.cws.end(), std::back_inserter(out.cws));
            if (m_left || std::binary_search(r.cws.begin(), r.cws.end(), m)) out.cws.push_back(m);
            normalize(out.cws);
            Cost c = left.pay[i].cost + right.pay[j].cost - shared;
            if (opt_.counting) b.add(std::move(out), c, left.pay[i].count * right.pay[j].count, {i, j});
            else b.add(std::move(out), c, Count(1), {i, j});
        }
    }
    return b.finish();
}

void PrimAlgorithm::check(const NodeContext& nc, const PrimTable& t) const {
    auto fail = [&](const std::string& what) {
        throw InvariantViolation("PRIM node " + std::to_string(nc.node) + ": " + what);
    };
    const auto views = make_views(ctx_, nc, true);
    const LocalProgram prog = bag_program(views);
    for (const auto& k : t.keys) {
        for (Mask c : k.cws)
            if (c & ~k.M) fail("counterwitness not a subset of its witness");
        if (nc.type == NodeType::Int) {
            if (!satisfies(prog, k.M)) fail("witness is not a model of the bag-rules");
            const LocalProgram red = reduct(prog, k.M);
            for (Mask c : k.cws)
                if (!satisfies(red, c)) fail("counterwitness is not a model of the reduct");
        }
    }
    // 2^{k+1} * 2^{2^{k+1}}, compared in log2
    const long double n = static_cast<long double>(nc.atoms.size());
    if (t.size() > 0 && std::log2(static_cast<long double>(t.size())) > n + std::pow(2.0L, n))
        fail("table exceeds size ceiling");
}

}  // namespace aspdp
