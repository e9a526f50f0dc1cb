#include "aspdp/inc.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <unordered_map>

namespace aspdp {

namespace {

std::uint32_t add_capped(std::uint32_t a, std::uint32_t b, std::uint32_t cap) {
    if (a == kInf || b == kInf) return kInf;
    std::uint64_t s = std::uint64_t{a} + b;
    return s > cap ? cap : static_cast<std::uint32_t>(s);
}

bool witness_sat(const RuleView& v, std::uint32_t s, Mask m) {
    return s == kInf || satisfies(state_program(v, s), m);
}

bool counter_sat(const RuleView& v, std::uint32_t rho, Mask m, Mask c) {
    return rho == kInf || satisfies(state_program_reduct(v, rho, m), c);
}

void refresh_witness(const std::vector<RuleView>& views, State& s, Mask m) {
    for (std::size_t i = 0; i < views.size(); ++i)
        if (s[i] != kInf && witness_sat(views[i], s[i], m)) s[i] = kInf;
}

void refresh_counter(const std::vector<RuleView>& views, State& rho, Mask m, Mask c) {
    for (std::size_t i = 0; i < views.size(); ++i)
        if (rho[i] != kInf && counter_sat(views[i], rho[i], m, c)) rho[i] = kInf;
}

void normalize(std::vector<CounterWitness>& cws) {
    std::sort(cws.begin(), cws.end());
    cws.erase(std::unique(cws.begin(), cws.end()), cws.end());
}

std::vector<std::uint32_t> caps_of(const std::vector<RuleView>& views) {
    std::vector<std::uint32_t> caps;
    caps.reserve(views.size());
    for (const auto& v : views) caps.push_back(v.cap);
    return caps;
}

using Builder = TableBuilder<IncKey, IncKeyHash>;

}  // namespace

State combine_states(const State& a, const State& b, const std::vector<std::uint32_t>& caps) {
    State out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = add_capped(a[i], b[i], caps[i]);
    return out;
}

LocalProgram state_program(const RuleView& v, std::uint32_t s) {
    LocalProgram out;
    if (s == kInf) return out;
    std::int64_t b = 0;
    if (v.kind == RuleKind::Weight)
        b = std::max<std::int64_t>(0, static_cast<std::int64_t>(v.bound) - s - static_cast<std::int64_t>(v.unseen));
    out.push_back(v.local(b));
    if (v.kind == RuleKind::Choice && !v.heads_seen) out.push_back({RuleKind::Disjunctive, 0, v.pos, v.neg, 0, nullptr});
    return out;
}

LocalProgram state_program_reduct(const RuleView& v, std::uint32_t rho, Mask m) {
    LocalProgram out;
    if (rho == kInf) return out;
    LocalProgram s = state_program(v, rho);
    if (v.kind == RuleKind::Choice && rho > 0 && v.heads_seen) s.push_back({RuleKind::Disjunctive, 0, v.pos, v.neg, 0, nullptr});
    for (const auto& r : s) append_reduct(out, r, m);
    return out;
}

State ssr(const std::vector<LocalProgram>& programs, Mask m) {
    State out(programs.size(), 0);
    for (std::size_t i = 0; i < programs.size(); ++i)
        if (satisfies(programs[i], m)) out[i] = kInf;
    return out;
}

State update_states(const Program& p, const std::vector<std::uint32_t>& rules, Atom a, bool a_in_m) {
    State out(rules.size(), 0);
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const Rule& r = p.rules()[rules[i]];
        if (r.kind != RuleKind::Weight) continue;
        for (std::size_t k = 0; k < r.pos.size(); ++k)
            if (r.pos[k] == a && a_in_m) out[i] = static_cast<std::uint32_t>(std::min<Weight>(r.pos_w[k], kInf - 1));
        for (std::size_t k = 0; k < r.neg.size(); ++k)
            if (r.neg[k] == a && !a_in_m) out[i] = static_cast<std::uint32_t>(std::min<Weight>(r.neg_w[k], kInf - 1));
    }
    return out;
}

State update_red_states(const Program& p, const std::vector<std::uint32_t>& rules, Atom a, bool a_in_m, bool a_in_c) {
    State out(rules.size(), 0);
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const Rule& r = p.rules()[rules[i]];
        if (r.kind == RuleKind::Weight) {
            for (std::size_t k = 0; k < r.neg.size(); ++k)
                if (r.neg[k] == a && !a_in_m) out[i] = static_cast<std::uint32_t>(std::min<Weight>(r.neg_w[k], kInf - 1));
            for (std::size_t k = 0; k < r.pos.size(); ++k)
                if (r.pos[k] == a && a_in_c) out[i] = static_cast<std::uint32_t>(std::min<Weight>(r.pos_w[k], kInf - 1));
        } else if (r.kind == RuleKind::Choice) {
            bool in_head = std::find(r.head.begin(), r.head.end(), a) != r.head.end();
            out[i] = in_head && a_in_m && !a_in_c ? 1 : 0;
        }
    }
    return out;
}

std::vector<CountedTuple> kmin(std::vector<CountedTuple> s) {
    std::map<IncKey, Cost> best;
    for (const auto& t : s) {
        auto [it, fresh] = best.emplace(t.key, t.cost);
        if (!fresh) it->second = std::min(it->second, t.cost);
    }
    std::erase_if(s, [&](const CountedTuple& t) { return t.cost != best.at(t.key); });
    return s;
}

std::vector<CountedTuple> cnt(std::vector<CountedTuple> s) {
    std::map<std::pair<IncKey, Cost>, Count> acc;
    for (auto& t : s) acc[{t.key, t.cost}] += t.count;
    std::vector<CountedTuple> out;
    for (auto& [k, n] : acc) out.push_back({k.first, k.second, n});
    return out;
}

IncTable IncAlgorithm::compute(const NodeContext& nc, const std::vector<const IncTable*>& kids) {
    IncTable t;
    switch (nc.type) {
        case NodeType::Leaf: t = leaf(); break;
        case NodeType::Int: t = nc.atom_vertex ? int_atom(nc, *kids[0]) : int_rule(nc, *kids[0]); break;
        case NodeType::Rem: t = nc.atom_vertex ? rem_atom(nc, *kids[0]) : rem_rule(nc, *kids[0]); break;
        case NodeType::Join: t = join(nc, *kids[0], *kids[1]); break;
    }
    if (opt_.check) check(nc, t);
    return t;
}

IncTable IncAlgorithm::leaf() {
    Builder b(opt_.counting);
    b.add(IncKey{}, 0, Count(1), {});
    return b.finish();
}

IncTable IncAlgorithm::int_atom(const NodeContext& nc, const IncTable& child) {
    const auto views = make_views(ctx_, nc, opt_.caps);
    const int p = nc.local;
    const Mask a = bit(p);
    const Cost c_in = ctx_.cost_true[nc.item], c_out = ctx_.cost_false[nc.item];
    Builder b(opt_.counting);
    for (std::uint32_t i = 0; i < child.size(); ++i) {
        const IncKey& k = child.keys[i];
        const Payload& pl = child.pay[i];
        const Mask m0 = insert_bit(k.M, p), m1 = m0 | a;

        IncKey in{m1, k.sigma, {}};
        refresh_witness(views, in.sigma, m1);
        CounterWitness seed{m0, k.sigma};
        refresh_counter(views, seed.rho, m1, m0);
        in.cws.push_back(std::move(seed));
        for (const auto& cw : k.cws) {
            const Mask c0 = insert_bit(cw.C, p);
            CounterWitness with{c0 | a, cw.rho}, without{c0, cw.rho};
            refresh_counter(views, with.rho, m1, c0 | a);
            refresh_counter(views, without.rho, m1, c0);
            in.cws.push_back(std::move(with));
            in.cws.push_back(std::move(without));
        }
        normalize(in.cws);
        b.add(std::move(in), pl.cost + c_in, pl.count, {i});

        IncKey out{m0, k.sigma, {}};
        refresh_witness(views, out.sigma, m0);
        for (const auto& cw : k.cws) {
            const Mask c0 = insert_bit(cw.C, p);
            CounterWitness same{c0, cw.rho};
            refresh_counter(views, same.rho, m0, c0);
            out.cws.push_back(std::move(same));
        }
        normalize(out.cws);
        b.add(std::move(out), pl.cost + c_out, pl.count, {i});
    }
    return b.finish();
}

IncTable IncAlgorithm::int_rule(const NodeContext& nc, const IncTable& child) {
    const auto views = make_views(ctx_, nc, opt_.caps);
    const int q = nc.local;
    const RuleView& v = views[q];
    Builder b(opt_.counting);
    for (std::uint32_t i = 0; i < child.size(); ++i) {
        const IncKey& k = child.keys[i];
        IncKey out{k.M, k.sigma, {}};
        out.sigma.insert(out.sigma.begin() + q, witness_sat(v, 0, k.M) ? kInf : 0);
        out.cws.reserve(k.cws.size());
        for (const auto& cw : k.cws) {
            CounterWitness n{cw.C, cw.rho};
            n.rho.insert(n.rho.begin() + q, counter_sat(v, 0, k.M, cw.C) ? kInf : 0);
            out.cws.push_back(std::move(n));
        }
        normalize(out.cws);
        b.add(std::move(out), child.pay[i].cost, child.pay[i].count, {i});
    }
    return b.finish();
}

IncTable IncAlgorithm::rem_atom(const NodeContext& nc, const IncTable& child) {
    const auto views = make_views(ctx_, nc, opt_.caps);
    const auto caps = caps_of(views);
    const int p = nc.local;
    const auto& prog = *ctx_.program;
    const State up_in = update_states(prog, nc.rules, nc.item, true);
    const State up_out = update_states(prog, nc.rules, nc.item, false);
    // counterwitness increments indexed by (a in M, a in C)
    const State red[2][2] = {
        {update_red_states(prog, nc.rules, nc.item, false, false), update_red_states(prog, nc.rules, nc.item, false, true)},
        {update_red_states(prog, nc.rules, nc.item, true, false), update_red_states(prog, nc.rules, nc.item, true, true)}};
    Builder b(opt_.counting);
    for (std::uint32_t i = 0; i < child.size(); ++i) {
        const IncKey& k = child.keys[i];
        const bool in_m = k.M >> p & 1;
        IncKey out{erase_bit(k.M, p), combine_states(k.sigma, in_m ? up_in : up_out, caps), {}};
        out.cws.reserve(k.cws.size());
        for (const auto& cw : k.cws) {
            const bool in_c = cw.C >> p & 1;
            out.cws.push_back({erase_bit(cw.C, p), combine_states(cw.rho, red[in_m][in_c], caps)});
        }
        normalize(out.cws);
        b.add(std::move(out), child.pay[i].cost, child.pay[i].count, {i});
    }
    return b.finish();
}

IncTable IncAlgorithm::rem_rule(const NodeContext& nc, const IncTable& child) {
    const int q = nc.local;
    Builder b(opt_.counting);
    for (std::uint32_t i = 0; i < child.size(); ++i) {
        const IncKey& k = child.keys[i];
        if (k.sigma[q] != kInf) continue;
        IncKey out{k.M, k.sigma, {}};
        out.sigma.erase(out.sigma.begin() + q);
        for (const auto& cw : k.cws) {
            if (cw.rho[q] != kInf) continue;
            CounterWitness n{cw.C, cw.rho};
            n.rho.erase(n.rho.begin() + q);
            out.cws.push_back(std::move(n));
        }
        normalize(out.cws);
        b.add(std::move(out), child.pay[i].cost, child.pay[i].count, {i});
    }
    return b.finish();
}

IncTable IncAlgorithm::join(const NodeContext& nc, const IncTable& left, const IncTable& right) {
    const auto views = make_views(ctx_, nc, opt_.caps);
    const auto caps = caps_of(views);
    std::unordered_map<Mask, std::vector<std::uint32_t>> by_m;
    for (std::uint32_t j = 0; j < right.size(); ++j) by_m[right.keys[j].M].push_back(j);
    Builder b(opt_.counting);
    for (std::uint32_t i = 0; i < left.size(); ++i) {
        const IncKey& l = left.keys[i];
        auto it = by_m.find(l.M);
        if (it == by_m.end()) continue;
        const Mask m = l.M;
        const Cost shared = ctx_.bag_cost(nc, m);
        for (std::uint32_t j : it->second) {
            const IncKey& r = right.keys[j];
            IncKey out{m, combine_states(l.sigma, r.sigma, caps), {}};
            // rules may become decided only once both branches are known
            refresh_witness(views, out.sigma, m);
            const auto& lc = l.cws;
            const auto& rc = r.cws;
            for (std::size_t x = 0, y = 0; x < lc.size() && y < rc.size();) {
                if (lc[x].C < rc[y].C) { ++x; continue; }
                if (rc[y].C < lc[x].C) { ++y; continue; }
                std::size_t xe = x, ye = y;
                while (xe < lc.size() && lc[xe].C == lc[x].C) ++xe;
                while (ye < rc.size() && rc[ye].C == rc[y].C) ++ye;
                for (std::size_t u = x; u < xe; ++u)
                    for (std::size_t w = y; w < ye; ++w) out.cws.push_back({lc[u].C, combine_states(lc[u].rho, rc[w].rho, caps)});
                x = xe;
                y = ye;
            }
            for (const auto& cw : lc)
                if (cw.C == m) out.cws.push_back({m, combine_states(cw.rho, r.sigma, caps)});
            for (const auto& cw : rc)
                if (cw.C == m) out.cws.push_back({m, combine_states(l.sigma, cw.rho, caps)});
            for (auto& cw : out.cws) refresh_counter(views, cw.rho, m, cw.C);
            normalize(out.cws);
            Cost c = left.pay[i].cost + right.pay[j].cost - shared;
            if (opt_.counting) b.add(std::move(out), c, left.pay[i].count * right.pay[j].count, {i, j});
            else b.add(std::move(out), c, Count(1), {i, j});
        }
    }
    return b.finish();
}

void IncAlgorithm::check(const NodeContext& nc, const IncTable& t) const {
    const auto& prog = *ctx_.program;
    const std::size_t nr = nc.rules.size();
    const Mask range = nc.atoms.size() >= 64 ? ~Mask{0} : bit(static_cast<int>(nc.atoms.size())) - 1;
    auto fail = [&](const std::string& what) {
        throw InvariantViolation("INC node " + std::to_string(nc.node) + ": " + what);
    };
    auto values = [&](const State& s, bool counter) {
        if (s.size() != nr) fail("rule-state domain differs from bag-rules");
        for (std::size_t i = 0; i < nr; ++i) {
            if (s[i] == kInf) continue;
            const Rule& r = prog.rules()[nc.rules[i]];
            if (r.kind == RuleKind::Disjunctive && s[i] != 0) fail("disjunctive state not in {0, inf}");
            if (!opt_.caps) continue;
            if (r.kind == RuleKind::Weight && s[i] > r.bound) fail("weight state above bound");
            if (r.kind == RuleKind::Choice && s[i] > (counter ? 1u : 0u)) fail("choice state out of range");
        }
    };
    for (const auto& k : t.keys) {
        if (k.M & ~range) fail("witness outside bag");
        values(k.sigma, false);
        for (const auto& cw : k.cws) {
            if (cw.C & ~range) fail("counterwitness outside bag");
            values(cw.rho, true);
        }
    }
    // 2^{k+1} * l^{k+1} * 2^{2^{k+1} * l^{k+1}}, compared in log2
    Weight l = 3;
    for (const auto& r : prog.rules())
        if (r.kind == RuleKind::Weight) l = std::max(l, r.bound);
    const long double n = static_cast<long double>(nc.atoms.size() + nc.rules.size());
    const long double lg = n + n * std::log2(static_cast<long double>(l)) +
                           std::pow(2.0L, n) * std::pow(static_cast<long double>(l), n);
    if (t.size() > 0 && std::log2(static_cast<long double>(t.size())) > lg) fail("table exceeds size ceiling");
}

}  // namespace aspdp
