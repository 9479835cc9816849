// ============================================================================
// alcomega/tableau.hpp — refutation tableau for the ALCOI dialect
// ============================================================================
//
// tableau_decide(Kt, Ft) answers Kt ⊨ Ft by saturating a completion graph
// for Kt ∪ {¬Ft}: standard ⊓/⊔/∃/∀ rules, inverse-role propagation, nominal
// merging into the individual root nodes, the internalized TBox fired on
// every node, and pairwise anywhere-blocking (label of the node *and* of its
// predecessor must repeat — the inverse-safe variant).
//
// The query is refuted structurally: ¬(C ⊑ D) seeds a fresh root with
// {C, ¬D}; ¬C(a) adds ¬C to a's root; ¬r(a,b) adds ∀r.¬{b} to a's root.
//
// A closed tableau is trusted (each closure step is a literal clash); an
// open saturated branch is *not* — it is converted to a finite ALCOI model
// with blocked nodes redirected to their blockers, and that model is
// machine-checked by the semantics.  A verified model is returned through
// `open_model`; a failed check throws (bug trap, never a user condition).
// ============================================================================

#ifndef ALCOMEGA_TABLEAU_HPP
#define ALCOMEGA_TABLEAU_HPP

#include <optional>

#include "alcomega/ast.hpp"
#include "alcomega/model.hpp"

namespace alcomega {

struct TableauLimits {
    long max_nodes = 4000;    // per branch
    long max_branches = 200000;
};

// Negation normal form over {¬name, ¬nominal} literals (ALCOI fragment).
ConceptPtr nnf(const ConceptPtr& c, bool negated = false);

// True iff Kt ⊨ Ft (every branch of the refutation tableau closes).
// On false, *open_model (when non-null) receives the verified open-branch
// model, which satisfies Kt and falsifies Ft.
bool tableau_decide(const KnowledgeBase& Kt, const Query& Ft,
                    Interpretation* open_model = nullptr,
                    const TableauLimits& limits = {});

}  // namespace alcomega

#endif  // ALCOMEGA_TABLEAU_HPP
