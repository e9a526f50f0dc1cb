// Brute-force reference solver for small programs.
#pragma once

#include "aspdp/model.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace aspdp {

constexpr std::size_t kOracleAtomLimit = 20;

struct OracleLimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleReport {
    std::vector<Interpretation> answer_sets;  // in increasing bit-pattern order
    std::optional<Cost> optimum;
    std::uint64_t optimal_count = 0;
};

std::vector<Interpretation> enumerate_answer_sets(const Program& p, std::size_t limit = kOracleAtomLimit);
OracleReport count_optimal(const Program& p, std::size_t limit = kOracleAtomLimit);

}  // namespace aspdp
