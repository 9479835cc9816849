// ============================================================================
// alcomega/parser.hpp — recursive-descent parser for the KB concrete syntax
// ============================================================================
//
// Grammar (statements end with "."; line comments start with "#"):
//
//   statement ::= concept "[=" concept "."      inclusion
//               | concept "==" concept "."      sugar: two inclusions
//               | concept "(" IND ")" "."       assertion
//               | ROLE "(" IND "," IND ")" "."  role assertion
//               | concept "in" concept "."      concept membership
//               | "(" concept "," concept ")" "in" ROLE "."
//
//   concept   ::= or-level, with precedence  or < and < \ < prefix
//   prefix    ::= "not" prefix | "Pow" "(" concept ")"
//               | "all" role "." prefix | "some" role "." prefix | atom
//   atom      ::= "Top" | "Bot" | CNAME | "{" IND "}" | "(" concept ")"
//   role      ::= ROLE | "inv" "(" ROLE ")" | "neg" "(" ROLE ")"
//
// CNAME starts uppercase, ROLE/IND lowercase; a leading `$` (generated
// names) is skipped for the case test.  User input rejects `$`-names and the
// role name `e` unless opts.allow_reserved is set (translation output must
// round-trip through this parser).
// ============================================================================

#ifndef ALCOMEGA_PARSER_HPP
#define ALCOMEGA_PARSER_HPP

#include <string>

#include "alcomega/ast.hpp"

namespace alcomega {

struct SyntaxError : Error {
    int line, col;
    SyntaxError(int line_, int col_, const std::string& expected)
        : Error("syntax error at " + std::to_string(line_) + ":" +
                std::to_string(col_) + ": " + expected),
          line(line_), col(col_) {}
};

struct ReservedName : Error {
    std::string name;
    explicit ReservedName(std::string n)
        : Error("reserved name in user input: " + n), name(std::move(n)) {}
};

struct ParseOptions {
    // Accept `$`-prefixed generated names and the reserved role `e`
    // (used when re-reading translation output).
    bool allow_reserved = false;
};

KnowledgeBase parse_kb(const std::string& text, ParseOptions opts = {});

// Parse exactly one statement (with its trailing ".").
Query parse_query(const std::string& text, ParseOptions opts = {});

ConceptPtr parse_concept(const std::string& text, ParseOptions opts = {});

}  // namespace alcomega

#endif  // ALCOMEGA_PARSER_HPP
