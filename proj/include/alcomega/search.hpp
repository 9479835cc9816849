// ============================================================================
// alcomega/search.hpp — bounded model finding via propositional encoding
// ============================================================================
//
// Two encoders over a fixed pool {0..n-1}:
//
//   * find_model_direct — membership-graph interpretations of an ALC^Ω /
//     LC^Ω KB.  Variables: e-edges E[x][y], concept/role extensions, and a
//     denotation-choice row per membership-LHS concept with an explicit
//     "undefined" slot (a membership axiom forces definedness; a falsified
//     membership may leave the denotation undefined).  Individuals pick
//     their atoms through choice rows — distinct names may share a node,
//     the semantics makes no unique-name assumption — with the i-th
//     individual confined to the first i+1 nodes (symmetry breaking).
//     Transitivity of the domain is
//     structural — E only ranges over the pool.
//
//   * find_model_alcoi — ordinary DL interpretations of the translated
//     (ALCOI / ALC(neg)) dialects: nominal choice variables per individual,
//     inverse roles by index transposition, the negated role by literal
//     polarity.
//
// Both extract an Interpretation from the satisfying assignment and
// re-verify it with check_kb / check_query before returning — the SAT layer
// is never trusted for the final claim.
// ============================================================================

#ifndef ALCOMEGA_SEARCH_HPP
#define ALCOMEGA_SEARCH_HPP

#include <cstdint>
#include <optional>

#include "alcomega/ast.hpp"
#include "alcomega/model.hpp"

namespace alcomega {

struct BudgetExceeded : Error {
    using Error::Error;
};

// A model of K with pool size exactly n, falsifying F when given.
// Returns nothing when no such model exists at this size.
std::optional<Interpretation> find_model_direct(
    const KnowledgeBase& K, const std::optional<Query>& falsify, int n,
    std::uint64_t seed = 0);

std::optional<Interpretation> find_model_alcoi(
    const KnowledgeBase& Kt, const std::optional<Query>& falsify, int n,
    std::uint64_t seed = 0);

}  // namespace alcomega

#endif  // ALCOMEGA_SEARCH_HPP
