#include "alcomega/translate.hpp"

#include <algorithm>

#include "alcomega/printer.hpp"

namespace alcomega {

bool TranslationOutput::has_e(const ConceptPtr& c) const {
    return e_name.count(render(c)) != 0;
}

const std::string& TranslationOutput::e_of(const ConceptPtr& c) const {
    return e_name.at(render(c));
}

// ── Concept translation ─────────────────────────────────────────────────────

ConceptPtr translate_concept_T(const ConceptPtr& C) {
    switch (C->kind) {
        case ConceptKind::Top:
        case ConceptKind::Bot:
        case ConceptKind::Name:
        case ConceptKind::Nominal:
            return C;
        case ConceptKind::Not:
            return not_(translate_concept_T(C->lhs));
        case ConceptKind::And:
            return and_(translate_concept_T(C->lhs), translate_concept_T(C->rhs));
        case ConceptKind::Or:
            return or_(translate_concept_T(C->lhs), translate_concept_T(C->rhs));
        case ConceptKind::Diff:
            return and_(translate_concept_T(C->lhs),
                        not_(translate_concept_T(C->rhs)));
        case ConceptKind::Pow:
            return forall(Role{kMembershipRole, false, false},
                          translate_concept_T(C->lhs));
        case ConceptKind::Forall:
            return forall(C->role, translate_concept_T(C->lhs));
        case ConceptKind::Exists:
            return exists(C->role, translate_concept_T(C->lhs));
    }
    return C;
}

// ── Fresh-name generation for $e_C ──────────────────────────────────────────

namespace {

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
            out += c;
        else if (c == ' ') {
            if (!out.empty() && out.back() != '_') out += '_';
        }
        // other punctuation dropped
    }
    return out;
}

std::string mint_e_name(const ConceptPtr& C, TranslationOutput& ctx) {
    std::string base = "$e_" + sanitize(render(C));
    std::string name = base;
    int suffix = 2;
    auto taken = [&](const std::string& n) {
        for (const auto& [key, used] : ctx.e_name)
            if (used == n) return true;
        return false;
    };
    while (taken(name)) name = base + "_" + std::to_string(suffix++);
    std::string key = render(C);
    ctx.e_name[key] = name;
    ctx.concept_individuals.push_back({C, name});
    return name;
}

// The defining equivalence C^T ≡ some inv($e).{$e_C}, as two inclusions.
std::pair<Axiom, Axiom> equivalence_for(const ConceptPtr& C,
                                        const std::string& e_c) {
    ConceptPtr ct = translate_concept_T(C);
    ConceptPtr marker =
        exists(Role{kMembershipRole, true, false}, nominal(e_c));
    return {Axiom::inclusion(ct, marker), Axiom::inclusion(marker, ct)};
}

// The finite-model variant: the two assertions attached to $e_C.
std::pair<Axiom, Axiom> assertion_pair_for(const ConceptPtr& C,
                                           const std::string& e_c) {
    ConceptPtr ct = translate_concept_T(C);
    Axiom pos = Axiom::assertion(forall(Role{kMembershipRole, false, false}, ct),
                                 e_c);
    Axiom neg = Axiom::assertion(
        forall(Role{kMembershipRole, false, true}, not_(ct)), e_c);
    return {pos, neg};
}

Axiom translate_abox_axiom(const Axiom& ax, TranslationOutput& ctx) {
    switch (ax.kind) {
        case AxiomKind::Assertion:
            return Axiom::assertion(translate_concept_T(ax.c), ax.a);
        case AxiomKind::RoleAssertion:
            return ax;
        case AxiomKind::ConceptMembership:
            return Axiom::assertion(translate_concept_T(ax.d),
                                    ctx.e_of(ax.c));
        case AxiomKind::RoleMembership:
            return Axiom::role_assertion(ax.role, ctx.e_of(ax.c),
                                         ctx.e_of(ax.d));
        default:
            throw Error("inclusion in ABox");
    }
}

TranslationOutput translate_impl(const KnowledgeBase& K,
                                 const std::optional<Query>& query,
                                 bool negated_variant) {
    TranslationOutput ctx;
    ctx.source_sig = compute_signature(K.all_axioms());

    std::vector<Axiom> axioms;
    for (const auto& ax : K.tbox) {
        Axiom t = Axiom::inclusion(translate_concept_T(ax.c),
                                   translate_concept_T(ax.d));
        ctx.provenance.push_back({render(t), render(ax)});
        axioms.push_back(std::move(t));
    }

    // One $e_C per distinct membership-LHS concept, in first-occurrence
    // order (KB first, then the query).
    std::vector<Axiom> defining;
    for (const auto& C : membership_lhs_concepts(K, query)) {
        std::string e_c = mint_e_name(C, ctx);
        if (!negated_variant) {
            auto [fwd, bwd] = equivalence_for(C, e_c);
            ctx.provenance.push_back({render(fwd), "e_C for " + render(C)});
            ctx.provenance.push_back({render(bwd), "e_C for " + render(C)});
            axioms.push_back(std::move(fwd));
            axioms.push_back(std::move(bwd));
        } else {
            auto [pos, neg] = assertion_pair_for(C, e_c);
            ctx.provenance.push_back({render(pos), "e_C for " + render(C)});
            ctx.provenance.push_back({render(neg), "e_C for " + render(C)});
            defining.push_back(std::move(pos));
            defining.push_back(std::move(neg));
        }
    }

    for (const auto& ax : K.abox) {
        Axiom t = translate_abox_axiom(ax, ctx);
        ctx.provenance.push_back({render(t), render(ax)});
        axioms.push_back(std::move(t));
    }
    for (auto& ax : defining) axioms.push_back(std::move(ax));

    // Standard individuals denote atoms: (not some $e . Top)(a).
    for (const auto& a : ctx.source_sig.individuals) {
        Axiom t = Axiom::assertion(
            not_(exists(Role{kMembershipRole, false, false}, top())), a);
        ctx.provenance.push_back({render(t), "atom pinning for " + a});
        axioms.push_back(std::move(t));
    }

    ctx.kb = make_kb(std::move(axioms));
    return ctx;
}

}  // namespace

TranslationOutput translate_kb_T(const KnowledgeBase& K,
                                 const std::optional<Query>& query) {
    return translate_impl(K, query, /*negated_variant=*/false);
}

TranslationOutput translate_kb_Tneg(const KnowledgeBase& K,
                                    const std::optional<Query>& query) {
    return translate_impl(K, query, /*negated_variant=*/true);
}

// ── Query translation ───────────────────────────────────────────────────────

namespace {

void check_signature_subset(const Query& F, const Signature& sig) {
    Signature fs = compute_signature({}, F);
    auto subset = [](const std::vector<std::string>& small,
                     const std::vector<std::string>& big,
                     std::string* offender) {
        for (const auto& n : small)
            if (!std::binary_search(big.begin(), big.end(), n)) {
                *offender = n;
                return false;
            }
        return true;
    };
    std::string n;
    if (!subset(fs.concepts, sig.concepts, &n) ||
        !subset(fs.roles, sig.roles, &n) ||
        !subset(fs.individuals, sig.individuals, &n))
        throw UnknownName(n);
}

std::string e_of_or_mint(const ConceptPtr& C, TranslationOutput& ctx) {
    if (ctx.has_e(C)) return ctx.e_of(C);
    std::string e_c = mint_e_name(C, ctx);
    auto [fwd, bwd] = equivalence_for(C, e_c);
    ctx.kb.tbox.push_back(fwd);
    ctx.kb.tbox.push_back(bwd);
    ctx.provenance.push_back({render(fwd), "e_C for query " + render(C)});
    ctx.provenance.push_back({render(bwd), "e_C for query " + render(C)});
    return e_c;
}

}  // namespace

Query translate_query_T(const Query& F, TranslationOutput& ctx) {
    check_signature_subset(F, ctx.source_sig);
    switch (F.kind) {
        case AxiomKind::Inclusion:
            return Axiom::inclusion(translate_concept_T(F.c),
                                    translate_concept_T(F.d));
        case AxiomKind::Assertion:
            return Axiom::assertion(translate_concept_T(F.c), F.a);
        case AxiomKind::ConceptMembership:
            return Axiom::assertion(translate_concept_T(F.d),
                                    e_of_or_mint(F.c, ctx));
        case AxiomKind::RoleMembership:
            return Axiom::role_assertion(F.role, e_of_or_mint(F.c, ctx),
                                         e_of_or_mint(F.d, ctx));
        case AxiomKind::RoleAssertion:
            return F;
    }
    return F;
}

// ── lift_model ─────────────────────────────────────────────────────

Interpretation lift_model(const Interpretation& I, const KnowledgeBase& K,
                          const TranslationOutput& T) {
    if (!check_kb(I, K).all_satisfied())
        throw NotAModel("lift_model: the input does not satisfy K");
    Interpretation J = I;
    auto& e_rel = J.roles[kMembershipRole];
    for (NodeId x : I.pool)
        for (NodeId y : I.elems_of(x)) e_rel.insert({x, y});
    for (const auto& [C, e_c] : T.concept_individuals) {
        auto it = I.denotations.find(render(C));
        if (it == I.denotations.end()) throw MissingDenotation(render(C));
        J.individuals[e_c] = it->second;
    }
    return J;
}

// ── collapse_model ─────────────────────────────────────────────────

CollapsedModel collapse_model(const Interpretation& J,
                              const KnowledgeBase& /*K: re-checked by callers*/,
                              const TranslationOutput& T) {
    if (!check_kb(J, T.kb).all_satisfied())
        throw NotAModel("collapse_model: input does not satisfy K^T");

    std::set<std::pair<NodeId, NodeId>> e_edges;
    if (auto it = J.roles.find(kMembershipRole); it != J.roles.end())
        e_edges = it->second;

    std::set<NodeId> e_c_nodes;
    for (const auto& [C, e_c] : T.concept_individuals) {
        (void)C;
        auto it = J.individuals.find(e_c);
        if (it == J.individuals.end())
            throw NotAModel("collapse_model: missing individual " + e_c);
        e_c_nodes.insert(it->second);
    }

    // Δ0: nodes with no e-successors that are not some e_C's value — plus
    // any element-less node hosting a standard individual, even when it
    // coincides with an e_C: the semantics allows a denotation to sit on an
    // atom (both have empty extension), and the direct search exploits that,
    // so the collapse must accept it too or the two procedures diverge.
    std::set<NodeId> has_succ;
    for (const auto& [x, y] : e_edges) { (void)y; has_succ.insert(x); }
    std::set<NodeId> delta0, domain(J.pool.begin(), J.pool.end());
    for (NodeId n : J.pool)
        if (!has_succ.count(n) && !e_c_nodes.count(n)) delta0.insert(n);

    for (const auto& a : T.source_sig.individuals) {
        auto it = J.individuals.find(a);
        if (it == J.individuals.end())
            throw NotAModel("collapse_model: missing individual " + a);
        if (has_succ.count(it->second))
            throw NotAModel("collapse_model: individual " + a +
                            " does not collapse to an atom");
        delta0.insert(it->second);
    }

    CollapseResult col =
        mostowski_collapse(domain, e_edges, delta0, /*duplicate_tags=*/true);

    CollapsedModel out;
    Interpretation& M = out.model;
    out.m = col.m;
    for (NodeId n : col.graph.nodes) M.pool.push_back(n);
    std::sort(M.pool.begin(), M.pool.end());
    for (NodeId n : col.graph.nodes) M.elems[n] = col.graph.successors(n);
    for (const auto& [n, label] : col.graph.atoms) {
        (void)label;
        M.atoms.insert(n);
    }
    for (const auto& name : T.source_sig.concepts) {
        auto it = J.concepts.find(name);
        auto& ext = M.concepts[name];
        if (it != J.concepts.end())
            for (NodeId d : it->second) ext.insert(col.m.at(d));
    }
    for (const auto& rname : T.source_sig.roles) {
        auto it = J.roles.find(rname);
        auto& rel = M.roles[rname];
        if (it != J.roles.end())
            for (const auto& [a, b] : it->second)
                rel.insert({col.m.at(a), col.m.at(b)});
    }
    for (const auto& a : T.source_sig.individuals)
        M.individuals[a] = col.m.at(J.individuals.at(a));
    for (const auto& [C, e_c] : T.concept_individuals)
        M.denotations[render(C)] = col.m.at(J.individuals.at(e_c));
    return out;
}

}  // namespace alcomega
