// ============================================================================
// alcomega/printer.hpp — concrete-syntax rendering with minimal parentheses
// ============================================================================
//
// render() is the inverse of the parser: parse(render(X)) is structurally
// identical to X.  Precedence levels (loosest to tightest):
//
//     or (0)  <  and (1)  <  \ (2)  <  prefix: not / Pow / all / some (3)
//
// Binary operators are left-associative; a right child at the same level is
// parenthesised so right-nested trees survive the round trip.
//
// The rendered text of a concept is also its canonical key: e_C identity,
// denotation-table keys and concept interning all use render(C).
// ============================================================================

#ifndef ALCOMEGA_PRINTER_HPP
#define ALCOMEGA_PRINTER_HPP

#include <string>

#include "alcomega/ast.hpp"

namespace alcomega {

std::string render(const ConceptPtr& c);
std::string render(const Role& r);
std::string render(const Axiom& ax);           // includes trailing "."
std::string render(const KnowledgeBase& kb);   // one statement per line

}  // namespace alcomega

#endif  // ALCOMEGA_PRINTER_HPP
