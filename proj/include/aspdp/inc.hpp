// INC: witnesses with rule-states and counterwitnesses over incidence-graph TDs,
// with the optional (cost, count) extension.
#pragma once

#include "aspdp/dp.hpp"
#include "aspdp/local_rule.hpp"

#include <boost/container/small_vector.hpp>
#include <boost/container_hash/hash.hpp>

#include <limits>

namespace aspdp {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

// Rule-state over the node's bag-rules (same order as NodeContext::rules).
using State = boost::container::small_vector<std::uint32_t, 8>;

struct CounterWitness {
    Mask C = 0;
    State rho;
    bool operator==(const CounterWitness& o) const { return C == o.C && rho == o.rho; }
    bool operator<(const CounterWitness& o) const { return C != o.C ? C < o.C : rho < o.rho; }
};

struct IncKey {
    Mask M = 0;
    State sigma;
    std::vector<CounterWitness> cws;  // sorted, unique
    bool operator==(const IncKey& o) const { return M == o.M && sigma == o.sigma && cws == o.cws; }
    bool operator<(const IncKey& o) const {
        if (M != o.M) return M < o.M;
        if (sigma != o.sigma) return sigma < o.sigma;
        return cws < o.cws;
    }
};

struct IncKeyHash {
    std::size_t operator()(const IncKey& k) const {
        std::size_t h = std::hash<Mask>{}(k.M);
        boost::hash_range(h, k.sigma.begin(), k.sigma.end());
        for (const auto& c : k.cws) {
            boost::hash_combine(h, c.C);
            boost::hash_range(h, c.rho.begin(), c.rho.end());
        }
        return h;
    }
};

using IncTable = Table<IncKey>;

// sigma (+) rho with infinity absorbing; finite sums are clipped to caps[i].
State combine_states(const State& a, const State& b, const std::vector<std::uint32_t>& caps);

// State-program of one rule under witness state s.
LocalProgram state_program(const RuleView& v, std::uint32_t s);
// State-program of one rule under counterwitness state rho, reduced by witness m.
LocalProgram state_program_reduct(const RuleView& v, std::uint32_t rho, Mask m);
// infinity where m models the rule's program, 0 otherwise.
State ssr(const std::vector<LocalProgram>& programs, Mask m);

// Increments on removing atom a from bag-rules `rules`.
State update_states(const Program& p, const std::vector<std::uint32_t>& rules, Atom a, bool a_in_m);
State update_red_states(const Program& p, const std::vector<std::uint32_t>& rules, Atom a, bool a_in_m, bool a_in_c);

struct CountedTuple {
    IncKey key;
    Cost cost = 0;
    Count count = 1;
};
// Per key, keep only tuples of minimum cost.
std::vector<CountedTuple> kmin(std::vector<CountedTuple> s);
// Merge equal (key, cost) tuples by summing counts.
std::vector<CountedTuple> cnt(std::vector<CountedTuple> s);

class IncAlgorithm {
public:
    using Key = IncKey;
    struct Options {
        bool counting = false;
        bool caps = true;
        bool check = false;  // invariant checks on every table
    };

    IncAlgorithm(const DpContext& ctx, Options opt) : ctx_(ctx), opt_(opt) {}

    IncTable compute(const NodeContext& nc, const std::vector<const IncTable*>& kids);
    static IncKey empty_key() { return {}; }

private:
    IncTable leaf();
    IncTable int_atom(const NodeContext& nc, const IncTable& child);
    IncTable int_rule(const NodeContext& nc, const IncTable& child);
    IncTable rem_atom(const NodeContext& nc, const IncTable& child);
    IncTable rem_rule(const NodeContext& nc, const IncTable& child);
    IncTable join(const NodeContext& nc, const IncTable& left, const IncTable& right);
    void check(const NodeContext& nc, const IncTable& t) const;

    const DpContext& ctx_;
    Options opt_;
};

}  // namespace aspdp
