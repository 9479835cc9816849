#include "alcomega/reasoner.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <limits>
#include <set>
#include <string>

#include "alcomega/printer.hpp"
#include "alcomega/translate.hpp"

namespace alcomega {

namespace {

void collect_subconcepts(const ConceptPtr& c, std::set<std::string>& out) {
    if (!c) return;
    out.insert(render(c));
    collect_subconcepts(c->lhs, out);
    collect_subconcepts(c->rhs, out);
}

void check_query_signature(const KnowledgeBase& K, const Query& F) {
    Signature fs = compute_signature({}, F);
    auto require = [](const std::vector<std::string>& needed,
                      const std::vector<std::string>& have) {
        for (const auto& s : needed)
            if (!std::binary_search(have.begin(), have.end(), s))
                throw UnknownName(s);
    };
    require(fs.concepts, K.sig.concepts);
    require(fs.roles, K.sig.roles);
    require(fs.individuals, K.sig.individuals);
}

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point end;
    explicit Deadline(long ms) : end(Clock::now() + std::chrono::milliseconds(ms)) {}
    void check() const {
        if (Clock::now() > end)
            throw BudgetExceeded("search time budget exhausted");
    }
};

std::optional<Interpretation> search_direct(const KnowledgeBase& K,
                                            const Query& F,
                                            const SearchConfig& cfg,
                                            const Deadline& dl) {
    for (int n = 1; n <= cfg.max_domain; ++n) {
        dl.check();
        if (auto m = find_model_direct(K, F, n, cfg.seed)) return m;
    }
    return std::nullopt;
}

std::optional<Interpretation> search_translated(const KnowledgeBase& K,
                                                const Query& F,
                                                const SearchConfig& cfg,
                                                const Deadline& dl) {
    TranslationOutput T = translate_kb_T(K, F);
    Query Ft = translate_query_T(F, T);
    for (int n = 1; n <= cfg.max_domain; ++n) {
        dl.check();
        auto J = find_model_alcoi(T.kb, Ft, n, cfg.seed);
        if (!J) continue;
        try {
            CollapsedModel col = collapse_model(*J, K, T);
            if (check_kb(col.model, K).all_satisfied() &&
                !check_query(col.model, F))
                return col.model;
        } catch (const NotAModel&) {
            // this ALCOI model does not collapse; keep scanning
        }
    }
    return std::nullopt;
}

}  // namespace

long certified_bound(const KnowledgeBase& K, const Query& F) {
    std::set<std::string> closure;
    auto walk = [&](const Axiom& ax) {
        collect_subconcepts(ax.c, closure);
        collect_subconcepts(ax.d, closure);
    };
    for (const auto& ax : K.all_axioms()) walk(ax);
    walk(F);
    std::size_t k = closure.size();
    if (k >= static_cast<std::size_t>(
                 std::numeric_limits<long>::digits))
        return LONG_MAX;
    return 1L << k;
}

std::optional<Interpretation> find_countermodel(const KnowledgeBase& K,
                                                const Query& F,
                                                const SearchConfig& cfg) {
    check_query_signature(K, F);
    int need = static_cast<int>(K.sig.individuals.size() +
                                membership_lhs_concepts(K, F).size());
    if (cfg.max_domain < need)
        throw Error("max_domain " + std::to_string(cfg.max_domain) +
                    " is below the " + std::to_string(need) +
                    " nodes forced by individuals and membership concepts — "
                    "the search would be vacuous");
    Deadline dl(cfg.time_budget_ms);
    switch (cfg.mode) {
        case SearchMode::Direct: return search_direct(K, F, cfg, dl);
        case SearchMode::Translated: return search_translated(K, F, cfg, dl);
        case SearchMode::Both: {
            auto a = search_direct(K, F, cfg, dl);
            auto b = search_translated(K, F, cfg, dl);
            // The translations preserve model sizes both ways, so the two
            // scans must agree at the shared bound (Props 1 & 3).
            if (a.has_value() != b.has_value())
                throw Conflict(
                    std::string("countermodel existence disagreement at "
                                "bound ") +
                    std::to_string(cfg.max_domain) + ": direct=" +
                    (a ? "found" : "none") + ", translated=" +
                    (b ? "found" : "none") + " for query " + render(F));
            return a;
        }
    }
    return std::nullopt;
}

Verdict decide(const KnowledgeBase& K, const Query& F,
               const SearchConfig& cfg) {
    check_query_signature(K, F);
    Verdict v;
    v.bound_used = cfg.max_domain;
    v.certified_bound = certified_bound(K, F);

    TranslationOutput T = translate_kb_T(K, F);
    Query Ft = translate_query_T(F, T);

    std::optional<bool> tab;
    Interpretation tab_open;
    try {
        tab = tableau_decide(T.kb, Ft, &tab_open);
    } catch (const BudgetExceeded&) {
        v.note = "tableau budget exhausted; ";
    }

    if (tab && *tab) {
        // A closed tableau is trusted outright — every closure step is a
        // literal clash, so no countermodel search is spent on it.
        v.kind = VerdictKind::Entailed;
        v.proof_source = "tableau";
        return v;
    }

    std::optional<Interpretation> cm;
    bool search_complete = true;
    try {
        cm = find_countermodel(K, F, cfg);
    } catch (const BudgetExceeded&) {
        search_complete = false;
        v.note += "search budget exhausted; ";
    }
    if (cm) {
        v.kind = VerdictKind::NotEntailed;
        v.witness = std::move(cm);
        return v;
    }
    if (tab && !*tab) {
        // Open tableau, but no countermodel within the bound: collapse the
        // open-branch model into a (possibly larger) witness.
        try {
            CollapsedModel col = collapse_model(tab_open, K, T);
            if (check_kb(col.model, K).all_satisfied() &&
                !check_query(col.model, F)) {
                v.kind = VerdictKind::NotEntailed;
                v.witness = std::move(col.model);
                v.note += "witness collapsed from the tableau open branch";
                return v;
            }
        } catch (const NotAModel&) {
        }
        v.kind = VerdictKind::Unknown;
        v.note += "tableau open but no witness verified within bounds";
        return v;
    }
    // No tableau answer and no countermodel.
    if (search_complete && v.certified_bound <= cfg.max_domain) {
        v.kind = VerdictKind::Entailed;
        v.proof_source = "exhausted-bound-with-certified-bound";
        return v;
    }
    v.kind = VerdictKind::Unknown;
    v.note += "bound " + std::to_string(cfg.max_domain) +
              " reached (certified bound " +
              std::to_string(v.certified_bound) + ")";
    return v;
}

Verdict concept_satisfiable(const KnowledgeBase& K, const ConceptPtr& C,
                            const SearchConfig& cfg) {
    return decide(K, Axiom::inclusion(C, bot()), cfg);
}

}  // namespace alcomega
