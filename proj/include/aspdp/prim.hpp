// PRIM: witnesses and counterwitness families over primal-graph TDs,
// with the optional (cost, count) extension.
#pragma once

#include "aspdp/dp.hpp"
#include "aspdp/local_rule.hpp"

#include <boost/container_hash/hash.hpp>

namespace aspdp {

struct PrimKey {
    Mask M = 0;
    std::vector<Mask> cws;  // sorted, unique; each a subset of M
    bool operator==(const PrimKey& o) const { return M == o.M && cws == o.cws; }
    bool operator<(const PrimKey& o) const { return M != o.M ? M < o.M : cws < o.cws; }
};

struct PrimKeyHash {
    std::size_t operator()(const PrimKey& k) const {
        std::size_t h = std::hash<Mask>{}(k.M);
        boost::hash_range(h, k.cws.begin(), k.cws.end());
        return h;
    }
};

using PrimTable = Table<PrimKey>;

// Mod(family, P): members that model every rule of P.
std::vector<Mask> mod_filter(const std::vector<Mask>& family, const LocalProgram& p);

class PrimAlgorithm {
public:
    using Key = PrimKey;
    struct Options {
        bool counting = false;
        bool check = false;
    };

    PrimAlgorithm(const DpContext& ctx, Options opt) : ctx_(ctx), opt_(opt) {}

    PrimTable compute(const NodeContext& nc, const std::vector<const PrimTable*>& kids);
    static PrimKey empty_key() { return {}; }

private:
    PrimTable leaf(const NodeContext& nc);
    PrimTable introduce(const NodeContext& nc, const PrimTable& child);
    PrimTable remove(const NodeContext& nc, const PrimTable& child);
    PrimTable join(const NodeContext& nc, const PrimTable& left, const PrimTable& right);
    void check(const NodeContext& nc, const PrimTable& t) const;

    const DpContext& ctx_;
    Options opt_;
};

}  // namespace aspdp
