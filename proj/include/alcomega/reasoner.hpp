// ============================================================================
// alcomega/reasoner.hpp — entailment decisions for ALC^Ω
// ============================================================================
//
// Two engines, used against each other:
//
//   * the ALCOI tableau on the translated KB (tableau.hpp) supplies the
//     Entailed direction;
//   * bounded countermodel search supplies NotEntailed — either directly
//     over membership-graph interpretations, or over ALCOI models of the
//     translation collapsed back through M (mode `translated`).
//
// Both translations are size-preserving on models, so in mode `both` the two
// searches must agree at the shared bound; a disagreement is a bug trap
// (Conflict), never a user-facing condition.
//
// Every NotEntailed verdict carries a witness model that has passed check_kb
// and falsified the query in-process.  "Entailed by exhaustion" is only
// claimed when the bound reaches the certified 2^|closure| figure from the
// filtration argument — astronomically rare in practice, reported alongside
// the practical bound otherwise.
// ============================================================================

#ifndef ALCOMEGA_REASONER_HPP
#define ALCOMEGA_REASONER_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "alcomega/ast.hpp"
#include "alcomega/model.hpp"
#include "alcomega/search.hpp"
#include "alcomega/tableau.hpp"

namespace alcomega {

enum class SearchMode { Direct, Translated, Both };

struct SearchConfig {
    int max_domain = 6;
    SearchMode mode = SearchMode::Both;
    std::uint64_t seed = 0;
    long time_budget_ms = 60'000;
};

struct Conflict : Error {
    using Error::Error;
};

enum class VerdictKind { Entailed, NotEntailed, Unknown };

struct Verdict {
    VerdictKind kind = VerdictKind::Unknown;
    // Entailed: "tableau" or "exhausted-bound-with-certified-bound".
    std::string proof_source;
    std::optional<Interpretation> witness;  // NotEntailed only
    int bound_used = 0;
    // 2^|closure(K,F)| from the filtration argument (clamped to LONG_MAX);
    // reported so "bound reached" claims are auditable.
    long certified_bound = 0;
    std::string note;
};

// 2^{number of distinct subconcepts of K and F}, clamped.
long certified_bound(const KnowledgeBase& K, const Query& F);

// First verified countermodel (satisfies K, falsifies F) over pool sizes
// 1..cfg.max_domain, per cfg.mode; deterministic given cfg.seed.
std::optional<Interpretation> find_countermodel(const KnowledgeBase& K,
                                                const Query& F,
                                                const SearchConfig& cfg);

Verdict decide(const KnowledgeBase& K, const Query& F,
               const SearchConfig& cfg = {});

// Satisfiability of C w.r.t. K as non-entailment of C ⊑ ⊥: a NotEntailed
// verdict means satisfiable, and its witness has a node in eval(C).
Verdict concept_satisfiable(const KnowledgeBase& K, const ConceptPtr& C,
                            const SearchConfig& cfg = {});

}  // namespace alcomega

#endif  // ALCOMEGA_REASONER_HPP
