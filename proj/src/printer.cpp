#include "alcomega/printer.hpp"

#include <set>

namespace alcomega {

namespace {

// Precedence level of a concept node; atoms get the maximum.
int level(const ConceptPtr& c) {
    switch (c->kind) {
        case ConceptKind::Or: return 0;
        case ConceptKind::And: return 1;
        case ConceptKind::Diff: return 2;
        case ConceptKind::Not:
        case ConceptKind::Pow:
        case ConceptKind::Forall:
        case ConceptKind::Exists: return 3;
        default: return 4;
    }
}

// Render c, parenthesising when its level is below `min_level`.
std::string rec(const ConceptPtr& c, int min_level) {
    std::string out;
    switch (c->kind) {
        case ConceptKind::Top: return "Top";
        case ConceptKind::Bot: return "Bot";
        case ConceptKind::Name: return c->name;
        case ConceptKind::Nominal: return "{" + c->name + "}";
        case ConceptKind::Pow:
            return "Pow(" + rec(c->lhs, 0) + ")";
        case ConceptKind::Not:
            out = "not " + rec(c->lhs, 3);
            break;
        case ConceptKind::Forall:
            out = "all " + render(c->role) + " . " + rec(c->lhs, 3);
            break;
        case ConceptKind::Exists:
            out = "some " + render(c->role) + " . " + rec(c->lhs, 3);
            break;
        case ConceptKind::Diff:
            out = rec(c->lhs, 2) + " \\ " + rec(c->rhs, 3);
            break;
        case ConceptKind::And:
            out = rec(c->lhs, 1) + " and " + rec(c->rhs, 2);
            break;
        case ConceptKind::Or:
            out = rec(c->lhs, 0) + " or " + rec(c->rhs, 1);
            break;
    }
    if (level(c) < min_level) return "(" + out + ")";
    return out;
}

}  // namespace

std::string render(const ConceptPtr& c) { return rec(c, 0); }

std::string render(const Role& r) {
    if (r.inverted) return "inv(" + r.name + ")";
    if (r.negated) return "neg(" + r.name + ")";
    return r.name;
}

std::string render(const Axiom& ax) {
    switch (ax.kind) {
        case AxiomKind::Inclusion:
            return render(ax.c) + " [= " + render(ax.d) + ".";
        case AxiomKind::Assertion: {
            // A bare concept name can prefix the individual directly; other
            // shapes need parentheses so the statement re-parses.
            std::string ctext = render(ax.c);
            if (level(ax.c) < 4) ctext = "(" + ctext + ")";
            return ctext + "(" + ax.a + ").";
        }
        case AxiomKind::RoleAssertion:
            return ax.role + "(" + ax.a + ", " + ax.b + ").";
        case AxiomKind::ConceptMembership:
            return render(ax.c) + " in " + render(ax.d) + ".";
        case AxiomKind::RoleMembership:
            return "(" + render(ax.c) + ", " + render(ax.d) + ") in " +
                   ax.role + ".";
    }
    return "";
}

std::string render(const KnowledgeBase& kb) {
    std::string out;
    for (const auto& ax : kb.tbox) out += render(ax) + "\n";
    for (const auto& ax : kb.abox) out += render(ax) + "\n";
    return out;
}

// Defined here (needs render) though declared in ast.hpp.
std::vector<ConceptPtr> membership_lhs_concepts(
    const KnowledgeBase& kb, const std::optional<Query>& query) {
    std::vector<ConceptPtr> out;
    std::set<std::string> seen;
    auto add = [&](const ConceptPtr& c) {
        if (!c) return;
        std::string key = render(c);
        if (seen.insert(key).second) out.push_back(c);
    };
    auto visit = [&](const Axiom& ax) {
        if (ax.kind == AxiomKind::ConceptMembership) add(ax.c);
        if (ax.kind == AxiomKind::RoleMembership) { add(ax.c); add(ax.d); }
    };
    for (const auto& ax : kb.tbox) visit(ax);
    for (const auto& ax : kb.abox) visit(ax);
    if (query) visit(*query);
    return out;
}

}  // namespace alcomega
