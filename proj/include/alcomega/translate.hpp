// ============================================================================
// alcomega/translate.hpp — the ALCOI translation K ↦ K^T and its models
// ============================================================================
//
// translate_kb_T realizes the linear translation into ALCOI:
//   * Pow(D) ↦ all $e . D^T  (the reserved role $e encodes ∋),
//   * Diff   ↦ And(·, Not ·) (ALCOI has no difference),
//   * each membership-LHS concept C gets a concept individual $e_C and the
//     defining equivalence  C^T ≡ some inv($e) . {$e_C}, stored as two
//     inclusions,
//   * memberships become assertions/role assertions over the $e_C,
//   * every standard individual is pinned to an atom by (not some $e . Top)(a).
//
// translate_kb_Tneg is the finite-model-property variant: the equivalence is
// replaced by the assertion pair (all $e . C^T)($e_C) and
// (all neg($e) . not C^T)($e_C), producing plain ALC plus one negated role.
//
// lift_model / collapse_model are the two model constructions of the
// soundness/completeness proofs: lifting a membership-graph model of K to an
// ALCOI model of K^T (e = ∋, e_C = the denotation node), and collapsing a
// finite ALCOI model of K^T back through the Mostowski-style map M with
// duplication tags (M bijective).
// ============================================================================

#ifndef ALCOMEGA_TRANSLATE_HPP
#define ALCOMEGA_TRANSLATE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alcomega/ast.hpp"
#include "alcomega/model.hpp"

namespace alcomega {

inline const std::string kMembershipRole = "$e";

struct TranslationOutput {
    KnowledgeBase kb;  // dialect ALCOI (or ALC(neg); or the identity image)
    // Membership-LHS concepts in order of first occurrence, with their
    // generated individual names; keyed by render(C) in the map.
    std::vector<std::pair<ConceptPtr, std::string>> concept_individuals;
    std::map<std::string, std::string> e_name;  // render(C) → $e_C name
    Signature source_sig;
    // provenance: rendered generated axiom → rendered source axiom
    std::vector<std::pair<std::string, std::string>> provenance;

    bool has_e(const ConceptPtr& c) const;
    const std::string& e_of(const ConceptPtr& c) const;
};

struct NotAModel : Error {
    using Error::Error;
};

struct UnknownName : Error {
    explicit UnknownName(const std::string& n)
        : Error("query uses a name outside the KB signature: " + n) {}
};

// Concept-level translation: Pow → all $e, Diff → And/Not; names unchanged.
ConceptPtr translate_concept_T(const ConceptPtr& C);

TranslationOutput translate_kb_T(const KnowledgeBase& K,
                                 const std::optional<Query>& query = std::nullopt);

// Translate a query, reusing ctx's e_C names; mints a fresh e_C (appending
// its equivalence axioms to ctx.kb) when the query introduces a new
// membership-LHS concept.  Throws UnknownName for out-of-signature names.
Query translate_query_T(const Query& F, TranslationOutput& ctx);

TranslationOutput translate_kb_Tneg(const KnowledgeBase& K,
                                    const std::optional<Query>& query = std::nullopt);

// Lift construction: model of K → ALCOI model of K^T (same domain, $e = ∋,
// $e_C = denotation node).  Requires check_kb(I,K) to pass and denotations
// for every membership-LHS concept of K.
Interpretation lift_model(const Interpretation& I, const KnowledgeBase& K,
                          const TranslationOutput& T);

// Collapse construction: finite ALCOI model J of T.kb → Interpretation of K.
// Returns the collapsed model and the bijection M (J node → new node).
struct CollapsedModel {
    Interpretation model;
    std::map<NodeId, NodeId> m;
};
CollapsedModel collapse_model(const Interpretation& J, const KnowledgeBase& K,
                              const TranslationOutput& T);

}  // namespace alcomega

#endif  // ALCOMEGA_TRANSLATE_HPP
