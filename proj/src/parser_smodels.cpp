#include "aspdp/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>

namespace aspdp {
namespace {

struct Truncated {
    SourceLocation loc;
    std::string msg;
};

class Numbers {
public:
    explicit Numbers(std::string_view s) : s_(s) {}

    std::uint64_t next(const char* what) {
        skip();
        loc_ = {line_, col_};
        if (i_ >= s_.size()) throw Truncated{loc_, std::string("truncated record: missing ") + what};
        std::size_t j = i_;
        while (j < s_.size() && !std::isspace(static_cast<unsigned char>(s_[j]))) ++j;
        std::uint64_t v = 0;
        auto [p, ec] = std::from_chars(s_.data() + i_, s_.data() + j, v);
        if (ec != std::errc() || p != s_.data() + j)
            throw Truncated{loc_, "malformed number '" + std::string(s_.substr(i_, j - i_)) + "'"};
        col_ += static_cast<int>(j - i_);
        i_ = j;
        return v;
    }

    // Rest of the current line, used for symbol names.
    std::string rest_of_line() {
        while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t')) { ++i_; ++col_; }
        std::size_t j = i_;
        while (j < s_.size() && s_[j] != '\n' && s_[j] != '\r') ++j;
        std::string t(s_.substr(i_, j - i_));
        col_ += static_cast<int>(j - i_);
        i_ = j;
        return t;
    }

    // Optional section label such as "B+" on its own line.
    void label() {
        skip();
        if (i_ < s_.size() && s_[i_] == 'B') rest_of_line();
    }

    bool at_end() {
        skip();
        return i_ >= s_.size();
    }
    SourceLocation loc() const { return loc_; }

private:
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) {
            if (s_[i_] == '\n') { ++line_; col_ = 1; }
            else ++col_;
            ++i_;
        }
    }
    std::string_view s_;
    std::size_t i_ = 0;
    int line_ = 1, col_ = 1;
    SourceLocation loc_;
};

// Rule over raw smodels atom numbers.
struct RawRule {
    Rule rule;
    SourceLocation loc;
};

bool native_name(const std::string& s) {
    if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
    return std::none_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == '.'; });
}

}  // namespace

ParseResult parse_smodels(std::string_view text) {
    ParseResult res;
    Numbers in(text);
    std::vector<RawRule> raw;
    std::set<std::uint64_t> used;
    int minimize_count = 0;

    auto atoms = [&](std::uint64_t n, const char* what) {
        std::vector<Atom> out;
        for (std::uint64_t k = 0; k < n; ++k) {
            auto a = in.next(what);
            if (a == 0) throw Truncated{in.loc(), "atom number 0 is reserved"};
            used.insert(a);
            out.push_back(static_cast<Atom>(a));
        }
        return out;
    };
    auto body = [&](std::vector<Atom>& pos, std::vector<Atom>& neg) {
        auto n = in.next("literal count");
        auto nn = in.next("negative literal count");
        if (nn > n) throw Truncated{in.loc(), "literal count mismatch: more negative literals than literals"};
        neg = atoms(nn, "negative literal");
        pos = atoms(n - nn, "positive literal");
        return n;
    };

    try {
        for (;;) {
            auto type = in.next("rule type");
            SourceLocation at = in.loc();
            if (type == 0) break;
            Rule r;
            switch (type) {
                case 1: {
                    r.kind = RuleKind::Disjunctive;
                    r.head = atoms(1, "head");
                    body(r.pos, r.neg);
                    break;
                }
                case 2: {
                    r.kind = RuleKind::Weight;
                    r.head = atoms(1, "head");
                    auto n = in.next("literal count");
                    auto nn = in.next("negative literal count");
                    if (nn > n) throw Truncated{in.loc(), "literal count mismatch: more negative literals than literals"};
                    r.bound = in.next("bound");
                    r.neg = atoms(nn, "negative literal");
                    r.pos = atoms(n - nn, "positive literal");
                    r.neg_w.assign(r.neg.size(), 1);
                    r.pos_w.assign(r.pos.size(), 1);
                    break;
                }
                case 3: {
                    r.kind = RuleKind::Choice;
                    auto nh = in.next("head count");
                    r.head = atoms(nh, "head");
                    body(r.pos, r.neg);
                    break;
                }
                case 5: {
                    r.kind = RuleKind::Weight;
                    r.head = atoms(1, "head");
                    r.bound = in.next("bound");
                    auto n = body(r.pos, r.neg);
                    for (std::uint64_t k = 0; k < n; ++k) {
                        auto w = in.next("weight");
                        (k < r.neg.size() ? r.neg_w : r.pos_w).push_back(w);
                    }
                    break;
                }
                case 6: {
                    if (in.next("minimize marker") != 0) throw Truncated{in.loc(), "minimize record must start with 0"};
                    if (++minimize_count > 1) {
                        res.errors.push_back({at, "multiple minimize statements (priority levels) are not supported"});
                    }
                    std::vector<Atom> pos, neg;
                    auto n = body(pos, neg);
                    for (std::uint64_t k = 0; k < n; ++k) {
                        auto w = in.next("weight");
                        bool negated = k < neg.size();
                        Atom a = negated ? neg[k] : pos[k - neg.size()];
                        raw.push_back({Rule::optimization(a, negated, static_cast<Cost>(w)), at});
                    }
                    continue;
                }
                case 8: {
                    r.kind = RuleKind::Disjunctive;
                    auto nh = in.next("head count");
                    r.head = atoms(nh, "head");
                    body(r.pos, r.neg);
                    break;
                }
                default: throw Truncated{at, "unknown rule type " + std::to_string(type)};
            }
            raw.push_back({std::move(r), at});
        }

        std::map<std::uint64_t, std::string> names;
        for (; !in.at_end();) {
            auto id = in.next("symbol number");
            if (id == 0) break;
            SourceLocation at = in.loc();
            auto name = in.rest_of_line();
            if (name.empty()) throw Truncated{at, "symbol without a name"};
            if (!native_name(name)) res.warnings.push_back({at, "symbol '" + name + "' is not a native atom name"});
            names[id] = name;
        }

        std::vector<std::pair<std::uint64_t, bool>> compute;  // (atom, must be true)
        for (int section = 0; section < 2 && !in.at_end(); ++section) {
            in.label();
            for (;;) {
                auto a = in.next("compute atom");
                if (a == 0) break;
                used.insert(a);
                compute.emplace_back(a, section == 0);
            }
        }
        if (!in.at_end()) in.next("model count");

        for (auto& [id, n] : names) {
            if (!used.count(id)) {
                res.warnings.push_back({{1, 1}, "atom '" + n + "' occurs only in the symbol table; kept as isolated atom"});
                used.insert(id);
            }
        }

        Program prog;
        std::map<std::uint64_t, Atom> id_of;
        std::set<std::string> taken;
        for (auto& [_, n] : names) taken.insert(n);
        for (auto a : used) {
            std::string n;
            if (auto it = names.find(a); it != names.end()) n = it->second;
            else {
                n = "x" + std::to_string(a);
                while (taken.count(n)) n += "_";
                taken.insert(n);
            }
            id_of[a] = prog.add_atom(n);
        }
        auto map = [&](std::vector<Atom>& xs) {
            for (auto& x : xs) x = id_of.at(x);
        };
        for (auto& [r, at] : raw) {
            map(r.head);
            map(r.pos);
            map(r.neg);
            if (r.kind != RuleKind::Weight && r.kind != RuleKind::Optimization) {
                // duplicate body literals are harmless; a head atom in the positive body makes a tautology
                auto dedup = [](std::vector<Atom>& xs) {
                    std::sort(xs.begin(), xs.end());
                    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
                };
                dedup(r.pos);
                dedup(r.neg);
                dedup(r.head);
                bool taut = std::any_of(r.head.begin(), r.head.end(), [&](Atom h) {
                    return std::find(r.pos.begin(), r.pos.end(), h) != r.pos.end();
                });
                if (taut && r.kind == RuleKind::Disjunctive) {
                    res.warnings.push_back({at, "dropping tautological rule"});
                    continue;
                }
            }
            try {
                prog.add_rule(std::move(r));
            } catch (const std::invalid_argument& e) {
                res.errors.push_back({at, e.what()});
            }
        }
        for (auto [a, truth] : compute) {
            Atom x = id_of.at(a);
            prog.add_rule(truth ? Rule::disjunctive({}, {}, {x}) : Rule::disjunctive({}, {x}, {}));
        }
        if (res.errors.empty()) res.program = std::move(prog);
    } catch (const Truncated& t) {
        res.errors.push_back({t.loc, t.msg});
        res.program.reset();
    }
    return res;
}

}  // namespace aspdp
