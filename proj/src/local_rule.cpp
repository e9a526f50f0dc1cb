#include "aspdp/inc.hpp"
#include "aspdp/local_rule.hpp"

namespace aspdp {

std::vector<RuleView> make_views(const DpContext& ctx, const NodeContext& nc, bool caps) {
    const auto& p = *ctx.program;
    const auto& below = ctx.atoms_below[nc.node];
    auto local = [&](Atom a) -> int {
        auto it = std::lower_bound(nc.atoms.begin(), nc.atoms.end(), a);
        return it != nc.atoms.end() && *it == a ? static_cast<int>(it - nc.atoms.begin()) : -1;
    };
    std::vector<RuleView> out;
    out.reserve(nc.rules.size());
    for (auto i : nc.rules) {
        const Rule& r = p.rules()[i];
        RuleView v;
        v.rule = i;
        v.kind = r.kind;
        v.bound = r.bound;
        v.w.assign(nc.atoms.size(), 0);
        for (Atom a : r.head) {
            if (int j = local(a); j >= 0) v.head |= bit(j);
            if (!below.test(a)) v.heads_seen = false;
        }
        auto body = [&](const std::vector<Atom>& lits, const std::vector<Weight>& ws, Mask& m) {
            for (std::size_t k = 0; k < lits.size(); ++k) {
                Weight wk = r.kind == RuleKind::Weight ? ws[k] : 0;
                if (int j = local(lits[k]); j >= 0) {
                    m |= bit(j);
                    v.w[j] = wk;
                }
                if (!below.test(lits[k])) v.unseen += wk;
            }
        };
        body(r.pos, r.pos_w, v.pos);
        body(r.neg, r.neg_w, v.neg);
        if (!caps) v.cap = kInf - 1;
        else if (r.kind == RuleKind::Weight) v.cap = static_cast<std::uint32_t>(std::min<Weight>(r.bound, kInf - 1));
        else if (r.kind == RuleKind::Choice) v.cap = 1;
        else v.cap = 0;
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace aspdp
