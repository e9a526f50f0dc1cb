// Rules projected onto the atoms of one bag, as bitmasks over bag positions.
#pragma once

#include "aspdp/dp.hpp"

#include <boost/container/small_vector.hpp>

namespace aspdp {

struct LocalRule {
    RuleKind kind = RuleKind::Disjunctive;
    Mask head = 0, pos = 0, neg = 0;
    std::int64_t bound = 0;      // weight rules
    const Weight* w = nullptr;   // weight per bag position (weight rules)
};

using LocalProgram = boost::container::small_vector<LocalRule, 4>;

inline Weight mask_weight(const Weight* w, Mask m) {
    Weight s = 0;
    for (; m; m &= m - 1) s += w[__builtin_ctzll(m)];
    return s;
}

inline bool satisfies(const LocalRule& r, Mask m) {
    switch (r.kind) {
        case RuleKind::Disjunctive: return ((r.head | r.neg) & m) || (r.pos & ~m);
        case RuleKind::Weight:
            if (r.head & m) return true;
            return static_cast<std::int64_t>(mask_weight(r.w, r.pos & m) + mask_weight(r.w, r.neg & ~m)) < r.bound;
        default: return true;
    }
}

inline bool satisfies(const LocalProgram& p, Mask m) {
    for (const auto& r : p)
        if (!satisfies(r, m)) return false;
    return true;
}

// Appends r^M.
inline void append_reduct(LocalProgram& out, const LocalRule& r, Mask m) {
    switch (r.kind) {
        case RuleKind::Choice:
            if (r.neg & m) return;
            for (Mask h = r.head & m; h; h &= h - 1) out.push_back({RuleKind::Disjunctive, h & -h, r.pos, 0, 0, nullptr});
            return;
        case RuleKind::Disjunctive:
            if (r.neg & m) return;
            out.push_back({RuleKind::Disjunctive, r.head, r.pos, 0, 0, nullptr});
            return;
        case RuleKind::Weight: {
            auto off = static_cast<std::int64_t>(mask_weight(r.w, r.neg & ~m));
            out.push_back({RuleKind::Weight, r.head, r.pos, 0, std::max<std::int64_t>(0, r.bound - off), r.w});
            return;
        }
        case RuleKind::Optimization: return;
    }
}

// A bag-rule seen from one node: masks over the node's bag atoms plus what is known
// about the rule's atoms outside the bag.
struct RuleView {
    std::uint32_t rule = 0;
    RuleKind kind = RuleKind::Disjunctive;
    Mask head = 0, pos = 0, neg = 0;
    std::vector<Weight> w;  // per bag position
    Weight bound = 0;
    Weight unseen = 0;       // wght(r, at(r) \ at_{<=t})
    bool heads_seen = true;  // H_r subset of at_{<=t}
    std::uint32_t cap = 0;   // largest finite state value kept

    LocalRule local(std::int64_t b) const { return {kind, head, pos, neg, b, w.data()}; }
};

std::vector<RuleView> make_views(const DpContext& ctx, const NodeContext& nc, bool caps);

}  // namespace aspdp
