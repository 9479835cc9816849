#include "alcomega/parser.hpp"

#include <cctype>
#include <vector>

namespace alcomega {

namespace {

// ── Lexer ───────────────────────────────────────────────────────────────────

enum class Tok {
    Ident,     // identifier (classification by first letter)
    Subsume,   // [=
    Equiv,     // ==
    LParen, RParen, LBrace, RBrace,
    Comma, Dot, Backslash,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto push = [&](Tok k, std::string t, int l, int c) {
        out.push_back(Token{k, std::move(t), l, c});
    };
    while (i < text.size()) {
        char c = text[i];
        int tl = line, tc = col;
        auto adv = [&](size_t n) {
            for (size_t j = 0; j < n; ++j) {
                if (text[i] == '\n') { ++line; col = 1; } else { ++col; }
                ++i;
            }
        };
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') { adv(1); continue; }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') adv(1);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '$') {
            size_t j = i;
            if (text[j] == '$') ++j;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) ||
                    text[j] == '_' || text[j] == '\''))
                ++j;
            std::string ident = text.substr(i, j - i);
            if (ident == "$")
                throw SyntaxError(tl, tc, "identifier expected after '$'");
            adv(j - i);
            push(Tok::Ident, ident, tl, tc);
            continue;
        }
        if (c == '[' && i + 1 < text.size() && text[i + 1] == '=') {
            adv(2); push(Tok::Subsume, "[=", tl, tc); continue;
        }
        if (c == '=' && i + 1 < text.size() && text[i + 1] == '=') {
            adv(2); push(Tok::Equiv, "==", tl, tc); continue;
        }
        switch (c) {
            case '(': adv(1); push(Tok::LParen, "(", tl, tc); continue;
            case ')': adv(1); push(Tok::RParen, ")", tl, tc); continue;
            case '{': adv(1); push(Tok::LBrace, "{", tl, tc); continue;
            case '}': adv(1); push(Tok::RBrace, "}", tl, tc); continue;
            case ',': adv(1); push(Tok::Comma, ",", tl, tc); continue;
            case '.': adv(1); push(Tok::Dot, ".", tl, tc); continue;
            case '\\': adv(1); push(Tok::Backslash, "\\", tl, tc); continue;
            default:
                throw SyntaxError(tl, tc, std::string("unexpected character '") +
                                              c + "'");
        }
    }
    out.push_back(Token{Tok::End, "", line, col});
    return out;
}

bool is_keyword(const std::string& s) {
    return s == "Top" || s == "Bot" || s == "not" || s == "and" || s == "or" ||
           s == "all" || s == "some" || s == "in" || s == "Pow" ||
           s == "inv" || s == "neg";
}

// ── Parser ──────────────────────────────────────────────────────────────────

class Parser {
public:
    Parser(std::vector<Token> toks, ParseOptions opts)
        : toks_(std::move(toks)), opts_(opts) {}

    std::vector<Axiom> parse_statements() {
        std::vector<Axiom> axioms;
        while (peek().kind != Tok::End) parse_statement(axioms);
        return axioms;
    }

    Axiom parse_single_statement() {
        std::vector<Axiom> axioms;
        parse_statement(axioms);
        if (peek().kind != Tok::End)
            throw err("end of input after the statement");
        if (axioms.size() != 1)
            throw err("a single statement (== sugar is not a query)");
        return axioms[0];
    }

    ConceptPtr parse_whole_concept() {
        ConceptPtr c = parse_or();
        if (peek().kind != Tok::End) throw err("end of input after concept");
        return c;
    }

private:
    std::vector<Token> toks_;
    size_t pos_ = 0;
    ParseOptions opts_;

    const Token& peek(size_t ahead = 0) const {
        size_t p = pos_ + ahead;
        return p < toks_.size() ? toks_[p] : toks_.back();
    }
    Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool at_ident(const char* kw) const {
        return peek().kind == Tok::Ident && peek().text == kw;
    }
    SyntaxError err(const std::string& expected) const {
        return SyntaxError(peek().line, peek().col, "expected " + expected);
    }
    void expect(Tok k, const char* what) {
        if (peek().kind != k) throw err(what);
        next();
    }

    void check_name(const std::string& n, bool role_position) {
        if (!opts_.allow_reserved) {
            if (is_reserved_name(n)) throw ReservedName(n);
            if (role_position && n == "e") throw ReservedName("e");
        }
    }

    std::string expect_lower_name(const char* what, bool role_position) {
        if (peek().kind != Tok::Ident || is_keyword(peek().text) ||
            !is_lower_name(peek().text))
            throw err(what);
        std::string n = next().text;
        check_name(n, role_position);
        return n;
    }

    Role parse_role() {
        if (at_ident("inv") && peek(1).kind == Tok::LParen) {
            next(); next();
            Role r;
            r.name = expect_lower_name("a role name", true);
            r.inverted = true;
            expect(Tok::RParen, "')'");
            return r;
        }
        if (at_ident("neg") && peek(1).kind == Tok::LParen) {
            next(); next();
            Role r;
            r.name = expect_lower_name("a role name", true);
            r.negated = true;
            expect(Tok::RParen, "')'");
            return r;
        }
        Role r;
        r.name = expect_lower_name("a role name", true);
        return r;
    }

    ConceptPtr parse_atom() {
        const Token& t = peek();
        if (t.kind == Tok::LBrace) {
            next();
            std::string ind = expect_lower_name("an individual name", false);
            expect(Tok::RBrace, "'}'");
            return nominal(ind);
        }
        if (t.kind == Tok::LParen) {
            next();
            ConceptPtr c = parse_or();
            expect(Tok::RParen, "')'");
            return c;
        }
        if (t.kind == Tok::Ident) {
            if (t.text == "Top") { next(); return top(); }
            if (t.text == "Bot") { next(); return bot(); }
            if (!is_keyword(t.text) && is_concept_name(t.text)) {
                std::string n = next().text;
                check_name(n, false);
                return name(n);
            }
        }
        throw err("a concept");
    }

    ConceptPtr parse_prefix() {
        if (at_ident("not")) { next(); return not_(parse_prefix()); }
        if (at_ident("Pow")) {
            next();
            expect(Tok::LParen, "'(' after Pow");
            ConceptPtr c = parse_or();
            expect(Tok::RParen, "')'");
            return pow(c);
        }
        if (at_ident("all") || at_ident("some")) {
            bool universal = peek().text == "all";
            next();
            Role r = parse_role();
            expect(Tok::Dot, "'.' after the role");
            ConceptPtr body = parse_prefix();
            return universal ? forall(r, body) : exists(r, body);
        }
        return parse_atom();
    }

    ConceptPtr parse_diff() {
        ConceptPtr c = parse_prefix();
        while (peek().kind == Tok::Backslash) {
            next();
            c = diff(c, parse_prefix());
        }
        return c;
    }

    ConceptPtr parse_and() {
        ConceptPtr c = parse_diff();
        while (at_ident("and")) {
            next();
            c = and_(c, parse_diff());
        }
        return c;
    }

    ConceptPtr parse_or() {
        ConceptPtr c = parse_and();
        while (at_ident("or")) {
            next();
            c = or_(c, parse_and());
        }
        return c;
    }

    void parse_statement(std::vector<Axiom>& out) {
        // Role assertion: lowercase ident "(" ind "," ind ")" "."
        if (peek().kind == Tok::Ident && !is_keyword(peek().text) &&
            is_lower_name(peek().text) && peek(1).kind == Tok::LParen) {
            std::string role = next().text;
            check_name(role, true);
            next();  // (
            std::string a = expect_lower_name("an individual name", false);
            expect(Tok::Comma, "','");
            std::string b = expect_lower_name("an individual name", false);
            expect(Tok::RParen, "')'");
            expect(Tok::Dot, "'.'");
            out.push_back(Axiom::role_assertion(role, a, b));
            return;
        }
        // Role membership: "(" concept "," concept ")" "in" role "."
        // Backtracks into the concept path when the "," is absent.
        if (peek().kind == Tok::LParen) {
            size_t save = pos_;
            try {
                next();  // (
                ConceptPtr c = parse_or();
                if (peek().kind == Tok::Comma) {
                    next();
                    ConceptPtr d = parse_or();
                    expect(Tok::RParen, "')'");
                    if (!at_ident("in")) throw err("'in'");
                    next();
                    std::string role = expect_lower_name("a role name", true);
                    expect(Tok::Dot, "'.'");
                    out.push_back(Axiom::role_membership(c, d, role));
                    return;
                }
            } catch (const SyntaxError&) {
                // fall through to the concept-statement path
            }
            pos_ = save;
        }
        ConceptPtr c = parse_or();
        if (peek().kind == Tok::Subsume) {
            next();
            ConceptPtr d = parse_or();
            expect(Tok::Dot, "'.'");
            out.push_back(Axiom::inclusion(c, d));
            return;
        }
        if (peek().kind == Tok::Equiv) {
            next();
            ConceptPtr d = parse_or();
            expect(Tok::Dot, "'.'");
            out.push_back(Axiom::inclusion(c, d));
            out.push_back(Axiom::inclusion(d, c));
            return;
        }
        if (at_ident("in")) {
            next();
            ConceptPtr d = parse_or();
            expect(Tok::Dot, "'.'");
            out.push_back(Axiom::concept_membership(c, d));
            return;
        }
        if (peek().kind == Tok::LParen) {
            next();
            std::string a = expect_lower_name("an individual name", false);
            expect(Tok::RParen, "')'");
            expect(Tok::Dot, "'.'");
            out.push_back(Axiom::assertion(c, a));
            return;
        }
        throw err("'[=', '==', 'in', or '(individual)'");
    }
};

}  // namespace

KnowledgeBase parse_kb(const std::string& text, ParseOptions opts) {
    Parser p(lex(text), opts);
    return make_kb(p.parse_statements());
}

Query parse_query(const std::string& text, ParseOptions opts) {
    Parser p(lex(text), opts);
    return p.parse_single_statement();
}

ConceptPtr parse_concept(const std::string& text, ParseOptions opts) {
    Parser p(lex(text), opts);
    return p.parse_whole_concept();
}

}  // namespace alcomega
