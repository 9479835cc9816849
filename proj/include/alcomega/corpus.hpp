// ============================================================================
// alcomega/corpus.hpp — seeded random KBs, queries and models
// ============================================================================
//
// Deterministic generators used by the roundtrip command and the property
// suites.  Everything is driven by a caller-owned std::mt19937 so a single
// seed reproduces the whole corpus.
//
// Shapes are deliberately small (the translation/transport properties are
// about structure, not scale): a handful of concept names, at most one or
// two roles, a couple of membership axioms.  With max_roles = 0 and
// max_individuals = 0 the generator stays inside the role-free fragment.
// ============================================================================

#ifndef ALCOMEGA_CORPUS_HPP
#define ALCOMEGA_CORPUS_HPP

#include <optional>
#include <random>

#include "alcomega/ast.hpp"
#include "alcomega/model.hpp"

namespace alcomega {

struct CorpusOptions {
    int num_concepts = 3;      // concept names A, B, C, ...
    int max_roles = 1;         // role names r, s, ...
    int max_individuals = 2;   // a, b, ...
    int max_inclusions = 3;
    int max_assertions = 2;    // only when individuals exist
    int max_memberships = 2;
    int max_depth = 2;         // concept nesting
    bool allow_pow = true;
    bool allow_diff = true;
};

KnowledgeBase random_kb(std::mt19937& rng, const CorpusOptions& opts = {});

// A query over K's signature (falls back to an inclusion when the preferred
// shape has no names to draw from).
Query random_query(std::mt19937& rng, const KnowledgeBase& K,
                   const CorpusOptions& opts = {});

// A model of K with pool size ≤ max_size, via bounded search (nullopt when
// K has no model that small — e.g. K is inconsistent).
std::optional<Interpretation> random_model(std::mt19937& rng,
                                           const KnowledgeBase& K,
                                           int max_size = 5);

}  // namespace alcomega

#endif  // ALCOMEGA_CORPUS_HPP
