// Ground programs: rules, satisfaction, GL reduct, cost.
#pragma once

#include <boost/dynamic_bitset.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace aspdp {

using Atom = std::uint32_t;
using Weight = std::uint64_t;
using Cost = std::int64_t;
using Count = boost::multiprecision::cpp_int;

// Set of atoms over the universe of one program, indexed by atom id.
using Interpretation = boost::dynamic_bitset<>;

enum class RuleKind : std::uint8_t { Disjunctive, Choice, Weight, Optimization };

const char* to_string(RuleKind k);

// One ground rule. Weight rules keep per-literal weights parallel to pos/neg;
// optimization rules hold exactly one literal (in pos or neg) and its cost.
struct Rule {
    RuleKind          kind = RuleKind::Disjunctive;
    std::vector<Atom> head;
    std::vector<Atom> pos;
    std::vector<Atom> neg;
    std::vector<Weight> pos_w;
    std::vector<Weight> neg_w;
    Weight bound = 0;
    Cost   cost  = 0;

    static Rule disjunctive(std::vector<Atom> h, std::vector<Atom> p = {}, std::vector<Atom> n = {});
    static Rule choice(std::vector<Atom> h, std::vector<Atom> p = {}, std::vector<Atom> n = {});
    static Rule weight(std::vector<Atom> h, Weight bnd, std::vector<Atom> p, std::vector<Weight> pw,
                       std::vector<Atom> n = {}, std::vector<Weight> nw = {});
    static Rule optimization(Atom a, bool negated, Cost c);

    // at(r)
    std::vector<Atom> atoms() const;
    // wght(r, a); 0 for atoms not in the body.
    Weight weight_of(Atom a) const;
    bool operator==(const Rule&) const = default;
};

class Program {
public:
    Program() = default;

    Atom intern(std::string_view name);
    Atom add_atom(std::string name);  // fails if name exists
    bool has_atom(std::string_view name) const;
    Atom atom(std::string_view name) const;  // throws std::out_of_range
    const std::string& name(Atom a) const { return names_[a]; }
    std::size_t num_atoms() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }

    void add_rule(Rule r);
    const std::vector<Rule>& rules() const { return rules_; }
    std::size_t num_rules() const { return rules_.size(); }

    Interpretation make_interpretation(std::initializer_list<std::string_view> atoms) const;
    Interpretation empty_interpretation() const { return Interpretation(num_atoms()); }
    std::vector<std::string> names_of(const Interpretation& m) const;

    bool operator==(const Program& o) const { return names_ == o.names_ && rules_ == o.rules_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Atom> ids_;
    std::vector<Rule> rules_;
};

// Throws std::invalid_argument if r breaks the rule shape invariants.
void validate_rule(const Rule& r, std::size_t num_atoms);

bool satisfies(const Interpretation& m, const Rule& r);
bool is_model(const Interpretation& m, const Program& p);
// GL reduct: only disjunctive and weight rules with positive bodies remain.
Program reduct(const Program& p, const Interpretation& m);
Cost cost(const Program& p, const Interpretation& m, const Interpretation& a);
bool is_answer_set(const Program& p, const Interpretation& m);

}  // namespace aspdp
