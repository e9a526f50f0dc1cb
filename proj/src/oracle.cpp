#include "aspdp/oracle.hpp"

#include <string>

namespace aspdp {

std::vector<Interpretation> enumerate_answer_sets(const Program& p, std::size_t limit) {
    const auto n = p.num_atoms();
    if (n > limit)
        throw OracleLimitExceeded("oracle refuses programs with " + std::to_string(n) + " atoms (limit " +
                                  std::to_string(limit) + ")");
    std::vector<Interpretation> out;
    Interpretation m(n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        for (std::size_t i = 0; i < n; ++i) m[i] = (bits >> i) & 1;
        if (is_answer_set(p, m)) out.push_back(m);
    }
    return out;
}

OracleReport count_optimal(const Program& p, std::size_t limit) {
    OracleReport rep;
    rep.answer_sets = enumerate_answer_sets(p, limit);
    Interpretation all(p.num_atoms());
    all.set();
    for (const auto& m : rep.answer_sets) {
        Cost c = cost(p, m, all);
        if (!rep.optimum || c < *rep.optimum) {
            rep.optimum       = c;
            rep.optimal_count = 0;
        }
        if (c == *rep.optimum) ++rep.optimal_count;
    }
    return rep;
}

}  // namespace aspdp
