#include "aspdp/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace aspdp {

std::string to_string(const Diagnostic& d) {
    return std::to_string(d.loc.line) + ":" + std::to_string(d.loc.column) + ": " + d.message;
}

namespace {

enum class Tok { Ident, Number, Not, If, Weak, Bar, Semi, Comma, Dot, LBrace, RBrace, Le, Eq, LBrack, RBrack, Directive, End, Bad };

struct Token {
    Tok kind;
    std::string text;
    SourceLocation loc;
};

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) {}

    Token next() {
        skip();
        SourceLocation at{line_, col_};
        if (i_ >= s_.size()) return {Tok::End, "", at};
        char c = s_[i_];
        auto one = [&](Tok k) { adv(1); return Token{k, std::string(1, c), at}; };
        if (std::islower(static_cast<unsigned char>(c))) return ident(at);
        if (std::isdigit(static_cast<unsigned char>(c)) || (c == '-' && i_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_ + 1])))) {
            std::size_t j = i_ + 1;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            std::string t(s_.substr(i_, j - i_));
            adv(j - i_);
            return {Tok::Number, t, at};
        }
        if (c == '#') {
            std::size_t j = i_ + 1;
            while (j < s_.size() && std::isalpha(static_cast<unsigned char>(s_[j]))) ++j;
            std::string t(s_.substr(i_, j - i_));
            adv(j - i_);
            return {Tok::Directive, t, at};
        }
        if (c == ':' && i_ + 1 < s_.size() && s_[i_ + 1] == '-') { adv(2); return {Tok::If, ":-", at}; }
        if (c == ':' && i_ + 1 < s_.size() && s_[i_ + 1] == '~') { adv(2); return {Tok::Weak, ":~", at}; }
        if (c == '<' && i_ + 1 < s_.size() && s_[i_ + 1] == '=') { adv(2); return {Tok::Le, "<=", at}; }
        switch (c) {
            case '|': return one(Tok::Bar);
            case ';': return one(Tok::Semi);
            case ',': return one(Tok::Comma);
            case '.': return one(Tok::Dot);
            case '{': return one(Tok::LBrace);
            case '}': return one(Tok::RBrace);
            case '=': return one(Tok::Eq);
            case '[': return one(Tok::LBrack);
            case ']': return one(Tok::RBrack);
            default: return one(Tok::Bad);
        }
    }

private:
    void adv(std::size_t n) {
        for (std::size_t k = 0; k < n && i_ < s_.size(); ++k, ++i_) {
            if (s_[i_] == '\n') { ++line_; col_ = 1; }
            else ++col_;
        }
    }
    void skip() {
        while (i_ < s_.size()) {
            char c = s_[i_];
            if (std::isspace(static_cast<unsigned char>(c))) adv(1);
            else if (c == '%') { while (i_ < s_.size() && s_[i_] != '\n') adv(1); }
            else break;
        }
    }
    // name [ '(' balanced, no whitespace ')' ]; quoted strings inside the parens may hold anything but '"'.
    Token ident(SourceLocation at) {
        std::size_t j = i_;
        while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
        if (j < s_.size() && s_[j] == '(') {
            int depth = 0;
            bool quoted = false;
            for (; j < s_.size(); ++j) {
                char c = s_[j];
                if (quoted) { if (c == '"') quoted = false; continue; }
                if (c == '"') quoted = true;
                else if (c == '(') ++depth;
                else if (c == ')') { if (--depth == 0) { ++j; break; } }
                else if (std::isspace(static_cast<unsigned char>(c))) break;
            }
            if (depth != 0 || quoted) {
                std::string t(s_.substr(i_, j - i_));
                adv(j - i_);
                return {Tok::Bad, t, at};
            }
        }
        std::string t(s_.substr(i_, j - i_));
        adv(j - i_);
        if (t == "not") return {Tok::Not, t, at};
        return {Tok::Ident, t, at};
    }

    std::string_view s_;
    std::size_t i_ = 0;
    int line_ = 1, col_ = 1;
};

struct SyntaxError {
    SourceLocation loc;
    std::string msg;
};

class NativeParser {
public:
    explicit NativeParser(std::string_view text) : lex_(text) { cur_ = lex_.next(); }

    ParseResult run() {
        ParseResult res;
        while (cur_.kind != Tok::End) {
            try {
                statement();
            } catch (const SyntaxError& e) {
                res.errors.push_back({e.loc, e.msg});
                while (cur_.kind != Tok::Dot && cur_.kind != Tok::End) cur_ = lex_.next();
                if (cur_.kind == Tok::Dot) {
                    cur_ = lex_.next();
                    // an optimization statement carries its weight after the dot
                    if (cur_.kind == Tok::LBrack) {
                        while (cur_.kind != Tok::RBrack && cur_.kind != Tok::End) cur_ = lex_.next();
                        if (cur_.kind == Tok::RBrack) cur_ = lex_.next();
                    }
                }
            }
        }
        if (res.errors.empty()) res.program = std::move(prog_);
        return res;
    }

private:
    [[noreturn]] void fail(const Token& t, const std::string& msg) { throw SyntaxError{t.loc, msg}; }

    [[noreturn]] void unexpected(const std::string& what) {
        if (cur_.kind == Tok::Bad) fail(cur_, "malformed token '" + cur_.text + "'");
        if (cur_.kind == Tok::End) fail(cur_, "unexpected end of input, expected " + what);
        fail(cur_, "unexpected '" + cur_.text + "', expected " + what);
    }

    Token take(Tok k, const char* what) {
        if (cur_.kind != k) unexpected(what);
        Token t = cur_;
        cur_ = lex_.next();
        return t;
    }
    bool accept(Tok k) {
        if (cur_.kind != k) return false;
        cur_ = lex_.next();
        return true;
    }

    std::uint64_t number(const char* what) {
        Token t = take(Tok::Number, what);
        if (t.text[0] == '-') fail(t, std::string("negative ") + what);
        std::uint64_t v = 0;
        auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || p != t.text.data() + t.text.size()) fail(t, std::string("invalid ") + what);
        return v;
    }

    Atom atom() { return prog_.intern(take(Tok::Ident, "atom").text); }

    void statement() {
        const Token first = cur_;
        switch (cur_.kind) {
            case Tok::Weak: optimization(); return;
            case Tok::Directive: directive(); return;
            case Tok::LBrace: choice(first); return;
            case Tok::If: rule(first, {}); return;
            case Tok::Ident: {
                std::vector<Atom> head{atom()};
                while (accept(Tok::Bar)) head.push_back(atom());
                rule(first, std::move(head));
                return;
            }
            default: unexpected("statement");
        }
    }

    void directive() {
        Token d = take(Tok::Directive, "directive");
        if (d.text != "#atoms") fail(d, "unknown directive '" + d.text + "'");
        while (cur_.kind == Tok::Ident) atom();
        take(Tok::Dot, "'.'");
    }

    void optimization() {
        take(Tok::Weak, "':~'");
        bool negated = accept(Tok::Not);
        Atom a = atom();
        take(Tok::Dot, "'.'");
        take(Tok::LBrack, "'['");
        Token wt = cur_;
        std::uint64_t w = number("weight");
        take(Tok::RBrack, "']'");
        add(wt, Rule::optimization(a, negated, static_cast<Cost>(w)));
    }

    void body(std::vector<Atom>& pos, std::vector<Atom>& neg) {
        if (cur_.kind == Tok::Dot) return;
        do {
            bool n = accept(Tok::Not);
            (n ? neg : pos).push_back(atom());
        } while (accept(Tok::Comma));
    }

    void choice(const Token& first) {
        take(Tok::LBrace, "'{'");
        std::vector<Atom> head;
        if (cur_.kind == Tok::RBrace) fail(cur_, "choice rule needs at least one head atom");
        do head.push_back(atom());
        while (accept(Tok::Semi));
        take(Tok::RBrace, "'}'");
        std::vector<Atom> pos, neg;
        if (accept(Tok::If)) body(pos, neg);
        take(Tok::Dot, "'.'");
        add(first, Rule::choice(std::move(head), std::move(pos), std::move(neg)));
    }

    void rule(const Token& first, std::vector<Atom> head) {
        std::vector<Atom> pos, neg;
        if (!accept(Tok::If)) {
            take(Tok::Dot, "'.' or ':-'");
            add(first, Rule::disjunctive(std::move(head), {}, {}));
            return;
        }
        if (cur_.kind == Tok::Number) {
            weight_rule(first, std::move(head));
            return;
        }
        body(pos, neg);
        take(Tok::Dot, "'.'");
        add(first, Rule::disjunctive(std::move(head), std::move(pos), std::move(neg)));
    }

    void weight_rule(const Token& first, std::vector<Atom> head) {
        if (head.size() > 1) fail(first, "weight rule head must be a single atom");
        std::uint64_t bound = number("bound");
        take(Tok::Le, "'<='");
        take(Tok::LBrace, "'{'");
        std::vector<Atom> pos, neg;
        std::vector<Weight> pw, nw;
        if (cur_.kind != Tok::RBrace) {
            do {
                bool n = accept(Tok::Not);
                Atom a = atom();
                Weight w = 1;
                if (accept(Tok::Eq)) w = number("weight");
                (n ? neg : pos).push_back(a);
                (n ? nw : pw).push_back(w);
            } while (accept(Tok::Comma));
        }
        take(Tok::RBrace, "'}'");
        take(Tok::Dot, "'.'");
        add(first, Rule::weight(std::move(head), bound, std::move(pos), std::move(pw), std::move(neg), std::move(nw)));
    }

    void add(const Token& at, Rule r) {
        try {
            prog_.add_rule(std::move(r));
        } catch (const std::invalid_argument& e) {
            fail(at, e.what());
        }
    }

    Lexer lex_;
    Token cur_;
    Program prog_;
};

void emit_list(std::ostringstream& out, const Program& p, const std::vector<Atom>& xs, const char* sep) {
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? sep : "") << p.name(xs[i]);
}

void emit_body(std::ostringstream& out, const Program& p, const Rule& r) {
    bool first = true;
    for (Atom a : r.pos) { out << (first ? "" : ", ") << p.name(a); first = false; }
    for (Atom a : r.neg) { out << (first ? "" : ", ") << "not " << p.name(a); first = false; }
}

}  // namespace

ParseResult parse_native(std::string_view text) { return NativeParser(text).run(); }

std::string emit_native(const Program& p) {
    std::ostringstream out;
    // Atom ids follow first occurrence, so a declaration is only needed when that order
    // differs from the id order or some atom occurs in no rule.
    std::vector<Atom> seen;
    std::vector<char> mark(p.num_atoms(), 0);
    auto visit = [&](Atom a) { if (!mark[a]) { mark[a] = 1; seen.push_back(a); } };
    for (const auto& r : p.rules()) {
        for (Atom a : r.head) visit(a);
        for (Atom a : r.pos) visit(a);
        for (Atom a : r.neg) visit(a);
    }
    bool ordered = seen.size() == p.num_atoms();
    for (std::size_t i = 0; ordered && i < seen.size(); ++i) ordered = seen[i] == i;
    if (!ordered) {
        out << "#atoms";
        for (Atom a = 0; a < p.num_atoms(); ++a) out << ' ' << p.name(a);
        out << ".\n";
    }
    for (const auto& r : p.rules()) {
        switch (r.kind) {
            case RuleKind::Disjunctive:
                emit_list(out, p, r.head, " | ");
                if (!r.pos.empty() || !r.neg.empty() || r.head.empty()) {
                    out << (r.head.empty() ? ":- " : " :- ");
                    emit_body(out, p, r);
                }
                out << ".\n";
                break;
            case RuleKind::Choice:
                out << '{';
                emit_list(out, p, r.head, "; ");
                out << '}';
                if (!r.pos.empty() || !r.neg.empty()) {
                    out << " :- ";
                    emit_body(out, p, r);
                }
                out << ".\n";
                break;
            case RuleKind::Weight: {
                emit_list(out, p, r.head, "");
                out << (r.head.empty() ? ":- " : " :- ") << r.bound << " <= { ";
                bool first = true;
                for (std::size_t i = 0; i < r.pos.size(); ++i) {
                    out << (first ? "" : ", ") << p.name(r.pos[i]) << '=' << r.pos_w[i];
                    first = false;
                }
                for (std::size_t i = 0; i < r.neg.size(); ++i) {
                    out << (first ? "" : ", ") << "not " << p.name(r.neg[i]) << '=' << r.neg_w[i];
                    first = false;
                }
                out << (first ? "}.\n" : " }.\n");
                break;
            }
            case RuleKind::Optimization:
                out << ":~ " << (r.neg.empty() ? "" : "not ") << p.name(r.pos.empty() ? r.neg[0] : r.pos[0]) << ". ["
                    << r.cost << "]\n";
                break;
        }
    }
    return out.str();
}

}  // namespace aspdp
