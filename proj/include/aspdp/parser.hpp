// Native text format and lparse/smodels numeric format.
#pragma once

#include "aspdp/model.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aspdp {

struct SourceLocation {
    int line   = 1;
    int column = 1;
};

struct Diagnostic {
    SourceLocation loc;
    std::string message;
};

struct ParseResult {
    std::optional<Program> program;  // set iff errors is empty
    std::vector<Diagnostic> errors;
    std::vector<Diagnostic> warnings;

    explicit operator bool() const { return program.has_value(); }
};

std::string to_string(const Diagnostic& d);

// Statements:
//   a | b :- c, not d.          disjunctive (empty head = constraint)
//   {a; b} :- c.                choice
//   h :- 2 <= { b=1, not c=2 }. weight (head may be empty)
//   :~ a. [3]   :~ not a. [3]   optimization
//   #atoms a b c.               declare atoms (fixes id order, allows isolated atoms)
// '%' starts a comment.
ParseResult parse_native(std::string_view text);
ParseResult parse_smodels(std::string_view text);

std::string emit_native(const Program& p);

}  // namespace aspdp
