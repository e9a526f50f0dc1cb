// Shared test helpers: the example program, an independent brute-force answer-set
// checker, a seeded random program generator, and table pretty-printers.
#pragma once

#include "aspdp/dp.hpp"
#include "aspdp/inc.hpp"
#include "aspdp/parser.hpp"
#include "aspdp/prim.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace testing {

using namespace aspdp;

inline const char* kSample =
    "{a; b} :- c.\n"
    "c :- 1 <= { b=1, not a=1 }.\n"
    "d | a.\n";

inline Program parse_or_throw(std::string_view text) {
    auto r = parse_native(text);
    if (!r) throw std::runtime_error("test program does not parse: " + to_string(r.errors.front()));
    return std::move(*r.program);
}

inline Program sample_program() { return parse_or_throw(kSample); }

// ---- brute force on plain masks, written against the textbook definitions ----

using Bits = std::uint32_t;

inline Bits bits_of(const std::vector<Atom>& xs) {
    Bits b = 0;
    for (Atom a : xs) b |= Bits{1} << a;
    return b;
}

inline Weight body_weight(const Rule& r, Bits pos_true, Bits neg_false) {
    Weight s = 0;
    for (std::size_t i = 0; i < r.pos.size(); ++i)
        if (pos_true >> r.pos[i] & 1) s += r.pos_w[i];
    for (std::size_t i = 0; i < r.neg.size(); ++i)
        if (neg_false >> r.neg[i] & 1) s += r.neg_w[i];
    return s;
}

inline bool bf_model(const Rule& r, Bits m) {
    const Bits h = bits_of(r.head), p = bits_of(r.pos), n = bits_of(r.neg);
    switch (r.kind) {
        case RuleKind::Disjunctive: return (h & m) || (p & ~m) || (n & m);
        case RuleKind::Weight: return (h & m) || body_weight(r, m, ~m) < r.bound;
        default: return true;
    }
}

// C |= r^M without materializing the reduct.
inline bool bf_reduct_model(const Rule& r, Bits m, Bits c) {
    const Bits h = bits_of(r.head), p = bits_of(r.pos), n = bits_of(r.neg);
    switch (r.kind) {
        case RuleKind::Disjunctive: return (n & m) || (p & ~c) || (h & c);
        case RuleKind::Choice: return (n & m) || (p & ~c) || ((h & m & ~c) == 0);
        case RuleKind::Weight: {
            Weight off = body_weight(r, 0, ~m);  // negative literals false under M
            Weight b = r.bound > off ? r.bound - off : 0;
            return (h & c) || body_weight(r, c, 0) < b;
        }
        default: return true;
    }
}

inline bool bf_answer_set(const Program& p, Bits m) {
    for (const auto& r : p.rules())
        if (!bf_model(r, m)) return false;
    // every proper subset must fail the reduct
    for (Bits c = m; c;) {
        c = (c - 1) & m;
        bool all = true;
        for (const auto& r : p.rules())
            if (!bf_reduct_model(r, m, c)) { all = false; break; }
        if (all) return false;
        if (c == 0) break;
    }
    return true;
}

inline std::vector<Bits> bf_answer_sets(const Program& p) {
    if (p.num_atoms() > 20) throw std::length_error("brute force limited to 20 atoms");
    std::vector<Bits> out;
    for (Bits m = 0; m < (Bits{1} << p.num_atoms()); ++m)
        if (bf_answer_set(p, m)) out.push_back(m);
    return out;
}

inline Cost bf_cost(const Program& p, Bits m) {
    Cost c = 0;
    for (const auto& r : p.rules()) {
        if (r.kind != RuleKind::Optimization) continue;
        if ((!r.pos.empty() && (m >> r.pos[0] & 1)) || (!r.neg.empty() && !(m >> r.neg[0] & 1))) c += r.cost;
    }
    return c;
}

struct BfSummary {
    bool consistent = false;
    Cost optimum = 0;
    std::uint64_t count = 0;
};

inline BfSummary bf_optimal(const Program& p) {
    BfSummary s;
    for (Bits m : bf_answer_sets(p)) {
        Cost c = bf_cost(p, m);
        if (!s.consistent || c < s.optimum) s = {true, c, 0};
        if (c == s.optimum) ++s.count;
    }
    return s;
}

inline Bits to_bits(const Interpretation& m) {
    Bits b = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) b |= Bits{1} << i;
    return b;
}

// ---- random programs ----

struct FuzzShape {
    int max_atoms = 8;
    int max_rules = 10;
    Weight max_weight = 4;
    Weight max_bound = 6;
};

inline Program random_program(std::uint64_t seed, const FuzzShape& s = {}) {
    std::mt19937_64 rng(seed);
    auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    Program p;
    const int n = uni(1, s.max_atoms);
    for (int i = 0; i < n; ++i) p.add_atom("p" + std::to_string(i));
    const int m = uni(0, s.max_rules);
    std::vector<Atom> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 0; i < m; ++i) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::size_t next = 0;
        auto take = [&](int k) {
            std::vector<Atom> xs;
            for (; k > 0 && next < perm.size(); --k) xs.push_back(perm[next++]);
            return xs;
        };
        const int kind = uni(0, 99);
        if (kind < 35) {
            auto h = take(uni(0, 2));
            auto b1 = take(uni(0, 2));
            auto b2 = take(uni(0, 2));
            p.add_rule(Rule::disjunctive(h, b1, b2));
        } else if (kind < 58) {
            auto h = take(uni(1, 3));
            auto b1 = take(uni(0, 1));
            auto b2 = take(uni(0, 1));
            p.add_rule(Rule::choice(h, b1, b2));
        } else if (kind < 85) {
            auto h = take(uni(0, 1));
            auto b1 = take(uni(0, 3));
            auto b2 = take(uni(0, 3));
            std::vector<Weight> w1, w2;
            for (std::size_t j = 0; j < b1.size(); ++j) w1.push_back(uni(0, static_cast<int>(s.max_weight)));
            for (std::size_t j = 0; j < b2.size(); ++j) w2.push_back(uni(0, static_cast<int>(s.max_weight)));
            p.add_rule(Rule::weight(h, uni(0, static_cast<int>(s.max_bound)), b1, w1, b2, w2));
        } else {
            p.add_rule(Rule::optimization(perm[0], uni(0, 1) == 1, uni(0, 3)));
        }
    }
    return p;
}

// ---- hand-built nice TDs ----

struct NiceNode {
    std::vector<Vertex> bag;
    NodeType type;
    Vertex vertex = 0;
    std::vector<int> children;  // 1-based: t1..tn
};

// Nodes are t1..tn; the last one is the root.
inline NiceTreeDecomposition build_nice(const std::vector<NiceNode>& nodes) {
    NiceTreeDecomposition td;
    for (const auto& n : nodes) {
        auto bag = n.bag;
        std::sort(bag.begin(), bag.end());
        td.add_node(bag);
        td.type.push_back(n.type);
        td.vertex.push_back(n.vertex);
    }
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (int c : nodes[i].children) td.link(static_cast<Node>(c - 1), static_cast<Node>(i));
    td.root = static_cast<Node>(nodes.size() - 1);
    td.parent[td.root] = td.root;
    return td;
}

// ---- printing tables compactly ----

inline std::string set_str(const Program& p, const std::vector<Atom>& atoms, Mask m) {
    std::vector<std::string> xs;
    for (std::size_t i = 0; i < atoms.size(); ++i)
        if (m >> i & 1) xs.push_back(p.name(atoms[i]));
    std::sort(xs.begin(), xs.end());
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i];
    return s + "}";
}

inline std::string state_str(const std::vector<std::uint32_t>& rules, const State& st) {
    std::string s = "{";
    for (std::size_t i = 0; i < rules.size(); ++i) {
        s += (i ? ",r" : "r") + std::to_string(rules[i] + 1) + ":";
        s += st[i] == kInf ? std::string("inf") : std::to_string(st[i]);
    }
    return s + "}";
}

inline std::string join_sorted(std::vector<std::string> xs) {
    std::sort(xs.begin(), xs.end());
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i];
    return s + "}";
}

inline std::set<std::string> prim_rows(const Program& p, const NodeContext& nc, const PrimTable& t) {
    std::set<std::string> rows;
    for (const auto& k : t.keys) {
        std::vector<std::string> cws;
        for (Mask c : k.cws) cws.push_back(set_str(p, nc.atoms, c));
        rows.insert("<" + set_str(p, nc.atoms, k.M) + "," + join_sorted(cws) + ">");
    }
    return rows;
}

inline std::set<std::string> inc_rows(const Program& p, const NodeContext& nc, const IncTable& t) {
    std::set<std::string> rows;
    for (const auto& k : t.keys) {
        std::vector<std::string> cws;
        for (const auto& c : k.cws) cws.push_back("(" + set_str(p, nc.atoms, c.C) + "," + state_str(nc.rules, c.rho) + ")");
        rows.insert("<" + set_str(p, nc.atoms, k.M) + "," + state_str(nc.rules, k.sigma) + "," + join_sorted(cws) + ">");
    }
    return rows;
}

}  // namespace testing
