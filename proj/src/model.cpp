#include "aspdp/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace aspdp {

const char* to_string(RuleKind k) {
    switch (k) {
        case RuleKind::Disjunctive:  return "disjunctive";
        case RuleKind::Choice:       return "choice";
        case RuleKind::Weight:       return "weight";
        case RuleKind::Optimization: return "optimization";
    }
    return "?";
}

Rule Rule::disjunctive(std::vector<Atom> h, std::vector<Atom> p, std::vector<Atom> n) {
    Rule r;
    r.kind = RuleKind::Disjunctive;
    r.head = std::move(h);
    r.pos  = std::move(p);
    r.neg  = std::move(n);
    return r;
}

Rule Rule::choice(std::vector<Atom> h, std::vector<Atom> p, std::vector<Atom> n) {
    Rule r = disjunctive(std::move(h), std::move(p), std::move(n));
    r.kind = RuleKind::Choice;
    return r;
}

Rule Rule::weight(std::vector<Atom> h, Weight bnd, std::vector<Atom> p, std::vector<Weight> pw,
                  std::vector<Atom> n, std::vector<Weight> nw) {
    Rule r  = disjunctive(std::move(h), std::move(p), std::move(n));
    r.kind  = RuleKind::Weight;
    r.bound = bnd;
    r.pos_w = std::move(pw);
    r.neg_w = std::move(nw);
    return r;
}

Rule Rule::optimization(Atom a, bool negated, Cost c) {
    Rule r;
    r.kind = RuleKind::Optimization;
    (negated ? r.neg : r.pos).push_back(a);
    r.cost = c;
    return r;
}

std::vector<Atom> Rule::atoms() const {
    std::vector<Atom> out;
    out.reserve(head.size() + pos.size() + neg.size());
    out.insert(out.end(), head.begin(), head.end());
    out.insert(out.end(), pos.begin(), pos.end());
    out.insert(out.end(), neg.begin(), neg.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Weight Rule::weight_of(Atom a) const {
    if (kind != RuleKind::Weight) return 0;
    for (std::size_t i = 0; i < pos.size(); ++i)
        if (pos[i] == a) return pos_w[i];
    for (std::size_t i = 0; i < neg.size(); ++i)
        if (neg[i] == a) return neg_w[i];
    return 0;
}

Atom Program::intern(std::string_view name) {
    auto it = ids_.find(std::string(name));
    if (it != ids_.end()) return it->second;
    return add_atom(std::string(name));
}

Atom Program::add_atom(std::string name) {
    if (ids_.count(name)) throw std::invalid_argument("duplicate atom name: " + name);
    auto id = static_cast<Atom>(names_.size());
    ids_.emplace(name, id);
    names_.push_back(std::move(name));
    return id;
}

bool Program::has_atom(std::string_view name) const { return ids_.count(std::string(name)) != 0; }

Atom Program::atom(std::string_view name) const { return ids_.at(std::string(name)); }

void Program::add_rule(Rule r) {
    validate_rule(r, num_atoms());
    rules_.push_back(std::move(r));
}

Interpretation Program::make_interpretation(std::initializer_list<std::string_view> atoms) const {
    Interpretation m(num_atoms());
    for (auto n : atoms) m.set(atom(n));
    return m;
}

std::vector<std::string> Program::names_of(const Interpretation& m) const {
    std::vector<std::string> out;
    for (auto i = m.find_first(); i != Interpretation::npos; i = m.find_next(i)) out.push_back(names_[i]);
    return out;
}

void validate_rule(const Rule& r, std::size_t num_atoms) {
    auto all = r.head;
    all.insert(all.end(), r.pos.begin(), r.pos.end());
    all.insert(all.end(), r.neg.begin(), r.neg.end());
    for (auto a : all)
        if (a >= num_atoms) throw std::invalid_argument("rule refers to unknown atom");
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::invalid_argument("duplicate atom within one rule");
    switch (r.kind) {
        case RuleKind::Choice:
            if (r.head.empty()) throw std::invalid_argument("choice rule needs a head atom");
            break;
        case RuleKind::Weight:
            if (r.head.size() > 1) throw std::invalid_argument("weight rule head has more than one atom");
            if (r.pos_w.size() != r.pos.size() || r.neg_w.size() != r.neg.size())
                throw std::invalid_argument("weight list does not match literal list");
            break;
        case RuleKind::Optimization:
            if (!r.head.empty() || r.pos.size() + r.neg.size() != 1)
                throw std::invalid_argument("optimization rule must carry exactly one literal");
            if (r.cost < 0) throw std::invalid_argument("negative cost");
            break;
        case RuleKind::Disjunctive: break;
    }
}

namespace {
bool any_in(const std::vector<Atom>& xs, const Interpretation& m) {
    return std::any_of(xs.begin(), xs.end(), [&](Atom a) { return m.test(a); });
}
bool all_in(const std::vector<Atom>& xs, const Interpretation& m) {
    return std::all_of(xs.begin(), xs.end(), [&](Atom a) { return m.test(a); });
}
}  // namespace

bool satisfies(const Interpretation& m, const Rule& r) {
    switch (r.kind) {
        case RuleKind::Disjunctive:
            return any_in(r.head, m) || any_in(r.neg, m) || !all_in(r.pos, m);
        case RuleKind::Weight: {
            if (any_in(r.head, m)) return true;
            Weight sum = 0;
            for (std::size_t i = 0; i < r.pos.size(); ++i)
                if (m.test(r.pos[i])) sum += r.pos_w[i];
            for (std::size_t i = 0; i < r.neg.size(); ++i)
                if (!m.test(r.neg[i])) sum += r.neg_w[i];
            return sum < r.bound;
        }
        case RuleKind::Choice:
        case RuleKind::Optimization: return true;
    }
    return true;
}

bool is_model(const Interpretation& m, const Program& p) {
    return std::all_of(p.rules().begin(), p.rules().end(), [&](const Rule& r) { return satisfies(m, r); });
}

Program reduct(const Program& p, const Interpretation& m) {
    Program out;
    for (const auto& n : p.names()) out.add_atom(n);
    for (const auto& r : p.rules()) {
        switch (r.kind) {
            case RuleKind::Choice:
                if (any_in(r.neg, m)) break;
                for (Atom a : r.head)
                    if (m.test(a)) out.add_rule(Rule::disjunctive({a}, r.pos));
                break;
            case RuleKind::Disjunctive:
                if (!any_in(r.neg, m)) out.add_rule(Rule::disjunctive(r.head, r.pos));
                break;
            case RuleKind::Weight: {
                Weight off = 0;
                for (std::size_t i = 0; i < r.neg.size(); ++i)
                    if (!m.test(r.neg[i])) off += r.neg_w[i];
                Weight b = r.bound > off ? r.bound - off : 0;
                out.add_rule(Rule::weight(r.head, b, r.pos, r.pos_w));
                break;
            }
            case RuleKind::Optimization: break;
        }
    }
    return out;
}

Cost cost(const Program& p, const Interpretation& m, const Interpretation& a) {
    Cost total = 0;
    for (const auto& r : p.rules()) {
        if (r.kind != RuleKind::Optimization) continue;
        bool hit = false;
        for (Atom x : r.pos) hit |= a.test(x) && m.test(x);
        for (Atom x : r.neg) hit |= a.test(x) && !m.test(x);
        if (hit) total += r.cost;
    }
    return total;
}

bool is_answer_set(const Program& p, const Interpretation& m) {
    if (!is_model(m, p)) return false;
    Program red = reduct(p, m);
    std::vector<std::size_t> members;
    for (auto i = m.find_first(); i != Interpretation::npos; i = m.find_next(i)) members.push_back(i);
    if (members.size() >= 63) throw std::length_error("interpretation too large for minimality check");
    const std::uint64_t full = (std::uint64_t{1} << members.size()) - 1;
    Interpretation sub(m.size());
    for (std::uint64_t s = 0; s < full; ++s) {
        sub.reset();
        for (std::size_t i = 0; i < members.size(); ++i)
            if (s >> i & 1) sub.set(members[i]);
        if (is_model(sub, red)) return false;
    }
    return true;
}

}  // namespace aspdp
