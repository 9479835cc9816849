#include "alcomega/ast.hpp"

#include <algorithm>
#include <set>

namespace alcomega {

// ── Concept factories ───────────────────────────────────────────────────────

static ConceptPtr make(ConceptKind k, std::string n = {}, Role r = {},
                       ConceptPtr lhs = nullptr, ConceptPtr rhs = nullptr) {
    auto c = std::make_shared<Concept>();
    c->kind = k;
    c->name = std::move(n);
    c->role = std::move(r);
    c->lhs = std::move(lhs);
    c->rhs = std::move(rhs);
    return c;
}

ConceptPtr top() { return make(ConceptKind::Top); }
ConceptPtr bot() { return make(ConceptKind::Bot); }
ConceptPtr name(std::string n) { return make(ConceptKind::Name, std::move(n)); }
ConceptPtr nominal(std::string i) { return make(ConceptKind::Nominal, std::move(i)); }
ConceptPtr not_(ConceptPtr c) { return make(ConceptKind::Not, {}, {}, std::move(c)); }
ConceptPtr and_(ConceptPtr l, ConceptPtr r) {
    return make(ConceptKind::And, {}, {}, std::move(l), std::move(r));
}
ConceptPtr or_(ConceptPtr l, ConceptPtr r) {
    return make(ConceptKind::Or, {}, {}, std::move(l), std::move(r));
}
ConceptPtr diff(ConceptPtr l, ConceptPtr r) {
    return make(ConceptKind::Diff, {}, {}, std::move(l), std::move(r));
}
ConceptPtr pow(ConceptPtr c) { return make(ConceptKind::Pow, {}, {}, std::move(c)); }
ConceptPtr forall(Role r, ConceptPtr c) {
    return make(ConceptKind::Forall, {}, std::move(r), std::move(c));
}
ConceptPtr exists(Role r, ConceptPtr c) {
    return make(ConceptKind::Exists, {}, std::move(r), std::move(c));
}

bool equal(const ConceptPtr& a, const ConceptPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->name != b->name || !(a->role == b->role))
        return false;
    return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
}

int node_count(const ConceptPtr& c) {
    if (!c) return 0;
    return 1 + node_count(c->lhs) + node_count(c->rhs);
}

// ── Axioms ──────────────────────────────────────────────────────────────────

Axiom Axiom::inclusion(ConceptPtr c, ConceptPtr d) {
    Axiom ax;
    ax.kind = AxiomKind::Inclusion;
    ax.c = std::move(c);
    ax.d = std::move(d);
    return ax;
}
Axiom Axiom::assertion(ConceptPtr c, std::string a) {
    Axiom ax;
    ax.kind = AxiomKind::Assertion;
    ax.c = std::move(c);
    ax.a = std::move(a);
    return ax;
}
Axiom Axiom::role_assertion(std::string role, std::string a, std::string b) {
    Axiom ax;
    ax.kind = AxiomKind::RoleAssertion;
    ax.role = std::move(role);
    ax.a = std::move(a);
    ax.b = std::move(b);
    return ax;
}
Axiom Axiom::concept_membership(ConceptPtr c, ConceptPtr d) {
    Axiom ax;
    ax.kind = AxiomKind::ConceptMembership;
    ax.c = std::move(c);
    ax.d = std::move(d);
    return ax;
}
Axiom Axiom::role_membership(ConceptPtr c, ConceptPtr d, std::string role) {
    Axiom ax;
    ax.kind = AxiomKind::RoleMembership;
    ax.c = std::move(c);
    ax.d = std::move(d);
    ax.role = std::move(role);
    return ax;
}

bool equal(const Axiom& x, const Axiom& y) {
    return x.kind == y.kind && equal(x.c, y.c) && equal(x.d, y.d) &&
           x.role == y.role && x.a == y.a && x.b == y.b;
}

int node_count(const Axiom& ax) {
    // One node for the axiom itself, one per named individual / role slot,
    // plus the concept trees.
    int n = 1 + node_count(ax.c) + node_count(ax.d);
    if (!ax.role.empty()) n += 1;
    if (!ax.a.empty()) n += 1;
    if (!ax.b.empty()) n += 1;
    return n;
}

// ── Dialect & signature ─────────────────────────────────────────────────────

const char* dialect_name(Dialect d) {
    switch (d) {
        case Dialect::LcOmega: return "LC-Omega";
        case Dialect::AlcOmega: return "ALC-Omega";
        case Dialect::Alcoi: return "ALCOI";
        case Dialect::AlcNeg: return "ALC(neg)";
    }
    return "?";
}

namespace {

struct Features {
    bool pow = false, diffc = false, nominal = false, inverse = false;
    bool negrole = false, quantifier = false, membership = false;
    bool assertion = false, role_assertion = false;
};

void scan(const ConceptPtr& c, Features& f,
          std::set<std::string>* concepts, std::set<std::string>* roles,
          std::set<std::string>* inds) {
    if (!c) return;
    switch (c->kind) {
        case ConceptKind::Name:
            if (concepts) concepts->insert(c->name);
            break;
        case ConceptKind::Nominal:
            f.nominal = true;
            if (inds) inds->insert(c->name);
            break;
        case ConceptKind::Pow: f.pow = true; break;
        case ConceptKind::Diff: f.diffc = true; break;
        case ConceptKind::Forall:
        case ConceptKind::Exists:
            f.quantifier = true;
            if (c->role.inverted) f.inverse = true;
            if (c->role.negated) f.negrole = true;
            if (roles) roles->insert(c->role.name);
            break;
        default: break;
    }
    scan(c->lhs, f, concepts, roles, inds);
    scan(c->rhs, f, concepts, roles, inds);
}

void scan(const Axiom& ax, Features& f,
          std::set<std::string>* concepts, std::set<std::string>* roles,
          std::set<std::string>* inds) {
    scan(ax.c, f, concepts, roles, inds);
    scan(ax.d, f, concepts, roles, inds);
    switch (ax.kind) {
        case AxiomKind::Assertion:
            f.assertion = true;
            if (inds) inds->insert(ax.a);
            break;
        case AxiomKind::RoleAssertion:
            f.role_assertion = true;
            if (roles) roles->insert(ax.role);
            if (inds) { inds->insert(ax.a); inds->insert(ax.b); }
            break;
        case AxiomKind::ConceptMembership:
            f.membership = true;
            break;
        case AxiomKind::RoleMembership:
            f.membership = true;
            if (roles) roles->insert(ax.role);
            break;
        case AxiomKind::Inclusion:
            break;
    }
}

}  // namespace

Signature compute_signature(const std::vector<Axiom>& axioms,
                            const std::optional<Query>& query) {
    Features f;
    std::set<std::string> concepts, roles, inds;
    for (const auto& ax : axioms) scan(ax, f, &concepts, &roles, &inds);
    if (query) scan(*query, f, &concepts, &roles, &inds);
    Signature sig;
    sig.concepts.assign(concepts.begin(), concepts.end());
    sig.roles.assign(roles.begin(), roles.end());
    sig.individuals.assign(inds.begin(), inds.end());
    return sig;
}

Dialect infer_dialect(const std::vector<Axiom>& axioms) {
    Features f;
    for (const auto& ax : axioms) scan(ax, f, nullptr, nullptr, nullptr);
    if (f.nominal || f.inverse) {
        if (f.pow || f.diffc)
            throw DialectError("Pow/difference cannot be mixed with nominals "
                               "or inverse roles (no dialect admits both)");
        if (f.membership)
            throw DialectError("membership axioms cannot be mixed with "
                               "nominals or inverse roles");
        return Dialect::Alcoi;
    }
    if (f.negrole) {
        if (f.pow || f.diffc || f.membership)
            throw DialectError("negated roles only occur in plain-ALC "
                               "translation output");
        return Dialect::AlcNeg;
    }
    const bool role_free = !f.quantifier && !f.assertion && !f.role_assertion;
    bool lc = role_free;
    for (const auto& ax : axioms)
        if (ax.kind != AxiomKind::Inclusion &&
            ax.kind != AxiomKind::ConceptMembership)
            lc = false;
    return lc ? Dialect::LcOmega : Dialect::AlcOmega;
}

KnowledgeBase make_kb(std::vector<Axiom> axioms) {
    KnowledgeBase kb;
    for (auto& ax : axioms) {
        if (ax.kind == AxiomKind::Inclusion)
            kb.tbox.push_back(std::move(ax));
        else
            kb.abox.push_back(std::move(ax));
    }
    std::vector<Axiom> all = kb.all_axioms();
    kb.dialect = infer_dialect(all);
    kb.sig = compute_signature(all);
    return kb;
}

std::vector<Axiom> KnowledgeBase::all_axioms() const {
    std::vector<Axiom> all = tbox;
    all.insert(all.end(), abox.begin(), abox.end());
    return all;
}

int node_count(const KnowledgeBase& kb) {
    int n = 0;
    for (const auto& ax : kb.tbox) n += node_count(ax);
    for (const auto& ax : kb.abox) n += node_count(ax);
    return n;
}

// membership_lhs_concepts needs render(); defined in printer.cpp to avoid a
// circular translation unit.  Declared here for clarity.

bool is_reserved_name(const std::string& s) {
    return !s.empty() && s[0] == '$';
}

static char first_letter(const std::string& s) {
    if (s.empty()) return '\0';
    return s[0] == '$' && s.size() > 1 ? s[1] : s[0];
}

bool is_concept_name(const std::string& s) {
    char c = first_letter(s);
    return c >= 'A' && c <= 'Z';
}

bool is_lower_name(const std::string& s) {
    char c = first_letter(s);
    return c >= 'a' && c <= 'z';
}

}  // namespace alcomega
