#include "alcomega/settrans.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "alcomega/printer.hpp"

namespace alcomega {

// ── Term / formula constructors ─────────────────────────────────────────────

namespace {
TermPtr mk_term(TermKind k, std::string v = {}, TermPtr l = nullptr,
                TermPtr r = nullptr) {
    auto t = std::make_shared<SetTerm>();
    t->kind = k;
    t->var = std::move(v);
    t->lhs = std::move(l);
    t->rhs = std::move(r);
    return t;
}
FormPtr mk_form(FormKind k, TermPtr t1 = nullptr, TermPtr t2 = nullptr,
                FormPtr f1 = nullptr, FormPtr f2 = nullptr,
                std::string v = {}) {
    auto f = std::make_shared<OmegaFormula>();
    f->kind = k;
    f->t1 = std::move(t1);
    f->t2 = std::move(t2);
    f->f1 = std::move(f1);
    f->f2 = std::move(f2);
    f->var = std::move(v);
    return f;
}
}  // namespace

TermPtr t_empty() { return mk_term(TermKind::Empty); }
TermPtr t_var(std::string v) { return mk_term(TermKind::Var, std::move(v)); }
TermPtr t_union(TermPtr a, TermPtr b) {
    return mk_term(TermKind::Union, {}, std::move(a), std::move(b));
}
TermPtr t_inter(TermPtr a, TermPtr b) {
    return mk_term(TermKind::Inter, {}, std::move(a), std::move(b));
}
TermPtr t_diff(TermPtr a, TermPtr b) {
    return mk_term(TermKind::Diff, {}, std::move(a), std::move(b));
}
TermPtr t_pow(TermPtr a) {
    return mk_term(TermKind::Pow, {}, std::move(a));
}

TermPtr expand_inter(const TermPtr& t) {
    if (!t) return t;
    TermPtr l = expand_inter(t->lhs), r = expand_inter(t->rhs);
    if (t->kind == TermKind::Inter) return t_diff(l, t_diff(l, r));
    if (l == t->lhs && r == t->rhs) return t;
    return mk_term(t->kind, t->var, l, r);
}

FormPtr f_mem(TermPtr a, TermPtr b) {
    return mk_form(FormKind::Mem, std::move(a), std::move(b));
}
FormPtr f_sub(TermPtr a, TermPtr b) {
    return mk_form(FormKind::Sub, std::move(a), std::move(b));
}
FormPtr f_not(FormPtr f) {
    return mk_form(FormKind::Not, nullptr, nullptr, std::move(f));
}
FormPtr f_and(FormPtr a, FormPtr b) {
    return mk_form(FormKind::And, nullptr, nullptr, std::move(a), std::move(b));
}
FormPtr f_or(FormPtr a, FormPtr b) {
    return mk_form(FormKind::Or, nullptr, nullptr, std::move(a), std::move(b));
}
FormPtr f_implies(FormPtr a, FormPtr b) {
    return mk_form(FormKind::Implies, nullptr, nullptr, std::move(a),
                   std::move(b));
}
FormPtr f_iff(FormPtr a, FormPtr b) {
    return mk_form(FormKind::Iff, nullptr, nullptr, std::move(a), std::move(b));
}
FormPtr f_forall(std::string v, FormPtr f) {
    return mk_form(FormKind::Forall, nullptr, nullptr, std::move(f), nullptr,
                   std::move(v));
}
FormPtr f_exists(std::string v, FormPtr f) {
    return mk_form(FormKind::Exists, nullptr, nullptr, std::move(f), nullptr,
                   std::move(v));
}

FormPtr f_conj(const std::vector<FormPtr>& fs) {
    if (fs.empty()) return f_sub(t_empty(), t_empty());  // vacuously true
    FormPtr out = fs[0];
    for (size_t i = 1; i < fs.size(); ++i) out = f_and(out, fs[i]);
    return out;
}

FormPtr trans_macro(const TermPtr& t, const std::string& p) {
    std::string v = p + "1";
    return f_forall(v, f_implies(f_mem(t_var(v), t), f_sub(t_var(v), t)));
}

FormPtr trans2_macro(const TermPtr& t, const std::string& p) {
    std::string v1 = p + "1", v2 = p + "2";
    return f_forall(
        v1, f_forall(v2, f_implies(f_and(f_mem(t_var(v1), t_var(v2)),
                                         f_mem(t_var(v2), t)),
                                   f_sub(t_var(v1), t))));
}

// ── Emission ────────────────────────────────────────────────────────────────

std::string to_sexp(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Empty: return "empty";
        case TermKind::Var: return t->var;
        case TermKind::Union:
            return "(cup " + to_sexp(t->lhs) + " " + to_sexp(t->rhs) + ")";
        case TermKind::Inter:
            return "(cap " + to_sexp(t->lhs) + " " + to_sexp(t->rhs) + ")";
        case TermKind::Diff:
            return "(diff " + to_sexp(t->lhs) + " " + to_sexp(t->rhs) + ")";
        case TermKind::Pow:
            return "(pow " + to_sexp(t->lhs) + ")";
    }
    return "?";
}

std::string to_sexp(const FormPtr& f, bool expand) {
    auto term = [&](const TermPtr& t) {
        return to_sexp(expand ? expand_inter(t) : t);
    };
    switch (f->kind) {
        case FormKind::Mem:
            return "(in " + term(f->t1) + " " + term(f->t2) + ")";
        case FormKind::Sub:
            return "(sub " + term(f->t1) + " " + term(f->t2) + ")";
        case FormKind::Not: return "(not " + to_sexp(f->f1, expand) + ")";
        case FormKind::And:
            return "(and " + to_sexp(f->f1, expand) + " " +
                   to_sexp(f->f2, expand) + ")";
        case FormKind::Or:
            return "(or " + to_sexp(f->f1, expand) + " " +
                   to_sexp(f->f2, expand) + ")";
        case FormKind::Implies:
            return "(implies " + to_sexp(f->f1, expand) + " " +
                   to_sexp(f->f2, expand) + ")";
        case FormKind::Iff:
            return "(iff " + to_sexp(f->f1, expand) + " " +
                   to_sexp(f->f2, expand) + ")";
        case FormKind::Forall:
            return "(forall " + f->var + " " + to_sexp(f->f1, expand) + ")";
        case FormKind::Exists:
            return "(exists " + f->var + " " + to_sexp(f->f1, expand) + ")";
    }
    return "?";
}

namespace {

std::string tptp_var(const std::string& v) {
    std::string out = "V_" + v;  // TPTP variables must start uppercase
    return out;
}

std::string tptp_term(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Empty: return "empty";
        case TermKind::Var: return tptp_var(t->var);
        case TermKind::Union:
            return "cup(" + tptp_term(t->lhs) + "," + tptp_term(t->rhs) + ")";
        case TermKind::Inter:
            // the TPTP signature only has cup/diff/pow — expanded upstream
            throw Error("intersection must be expanded for TPTP output");
        case TermKind::Diff:
            return "diff(" + tptp_term(t->lhs) + "," + tptp_term(t->rhs) + ")";
        case TermKind::Pow:
            return "pow(" + tptp_term(t->lhs) + ")";
    }
    return "?";
}

std::string tptp_form(const FormPtr& f) {
    switch (f->kind) {
        case FormKind::Mem:
            return "member(" + tptp_term(expand_inter(f->t1)) + "," +
                   tptp_term(expand_inter(f->t2)) + ")";
        case FormKind::Sub:
            return "subset(" + tptp_term(expand_inter(f->t1)) + "," +
                   tptp_term(expand_inter(f->t2)) + ")";
        case FormKind::Not: return "~(" + tptp_form(f->f1) + ")";
        case FormKind::And:
            return "(" + tptp_form(f->f1) + " & " + tptp_form(f->f2) + ")";
        case FormKind::Or:
            return "(" + tptp_form(f->f1) + " | " + tptp_form(f->f2) + ")";
        case FormKind::Implies:
            return "(" + tptp_form(f->f1) + " => " + tptp_form(f->f2) + ")";
        case FormKind::Iff:
            return "(" + tptp_form(f->f1) + " <=> " + tptp_form(f->f2) + ")";
        case FormKind::Forall:
            return "(! [" + tptp_var(f->var) + "] : " + tptp_form(f->f1) + ")";
        case FormKind::Exists:
            return "(? [" + tptp_var(f->var) + "] : " + tptp_form(f->f1) + ")";
    }
    return "?";
}

}  // namespace

std::string to_tptp(const FormPtr& f, const std::string& name,
                    const std::string& role) {
    return "fof(" + name + ", " + role + ",\n  " + tptp_form(f) + ").\n";
}

// ── Variable context ────────────────────────────────────────────────────────

int VarContext::role_index(const std::string& r) const {
    for (size_t i = 0; i < roles.size(); ++i)
        if (roles[i] == r) return static_cast<int>(i) + 1;
    throw BadIndex("role not in context: " + r);
}

int VarContext::concept_index(const std::string& c) const {
    for (size_t i = 0; i < concepts.size(); ++i)
        if (concepts[i] == c) return static_cast<int>(i) + 1;
    throw BadIndex("concept not in context: " + c);
}

TermPtr VarContext::x() const { return t_var("x"); }
TermPtr VarContext::y(int i) const {
    if (i < 1 || i > static_cast<int>(roles.size()))
        throw BadIndex("role index out of range: " + std::to_string(i));
    return t_var("y" + std::to_string(i));
}
TermPtr VarContext::xc(const std::string& name) const {
    return t_var("x" + std::to_string(concept_index(name)));
}
TermPtr VarContext::role_union() const {
    if (roles.empty()) return t_empty();
    TermPtr out = t_var("y1");
    for (size_t i = 2; i <= roles.size(); ++i)
        out = t_union(out, t_var("y" + std::to_string(i)));
    return out;
}

VarContext var_context(const KnowledgeBase& K) {
    VarContext ctx;
    ctx.roles = K.sig.roles;
    ctx.concepts = K.sig.concepts;
    return ctx;
}

static VarContext var_context_with_query(const KnowledgeBase& K,
                                         const Query& F) {
    Signature sig = compute_signature(K.all_axioms(), F);
    VarContext ctx;
    ctx.roles = sig.roles;
    ctx.concepts = sig.concepts;
    return ctx;
}

// ── ALC translation ──────────────────────────────────────────────────

namespace {

void require_alc(const ConceptPtr& C) {
    switch (C->kind) {
        case ConceptKind::Pow:
        case ConceptKind::Diff:
        case ConceptKind::Nominal:
            throw DialectError("not an ALC concept: " + render(C));
        case ConceptKind::Forall:
        case ConceptKind::Exists:
            if (C->role.inverted || C->role.negated)
                throw DialectError("plain roles only: " + render(C));
            break;
        default: break;
    }
    if (C->lhs) require_alc(C->lhs);
    if (C->rhs) require_alc(C->rhs);
}

}  // namespace

TermPtr translate_alc_S(const VarContext& ctx, const ConceptPtr& C) {
    switch (C->kind) {
        case ConceptKind::Top: return ctx.x();
        case ConceptKind::Bot: return t_empty();
        case ConceptKind::Name: return ctx.xc(C->name);
        case ConceptKind::Not:
            return t_diff(ctx.x(), translate_alc_S(ctx, C->lhs));
        case ConceptKind::And:
            return t_inter(translate_alc_S(ctx, C->lhs),
                           translate_alc_S(ctx, C->rhs));
        case ConceptKind::Or:
            return t_union(translate_alc_S(ctx, C->lhs),
                           translate_alc_S(ctx, C->rhs));
        case ConceptKind::Forall: {
            int i = ctx.role_index(C->role.name);
            TermPtr base = t_union(ctx.x(), ctx.role_union());
            return t_pow(t_union(t_diff(base, ctx.y(i)),
                                 t_pow(translate_alc_S(ctx, C->lhs))));
        }
        case ConceptKind::Exists: {
            // (∃R.C)^S = (¬∀R.¬C)^S
            int i = ctx.role_index(C->role.name);
            TermPtr body = t_diff(ctx.x(), translate_alc_S(ctx, C->lhs));
            TermPtr base = t_union(ctx.x(), ctx.role_union());
            TermPtr fa = t_pow(t_union(t_diff(base, ctx.y(i)), t_pow(body)));
            return t_diff(ctx.x(), fa);
        }
        default:
            throw DialectError("not an ALC concept: " + render(C));
    }
}

FormPtr emit_alc_theorem(const KnowledgeBase& K, const Query& F) {
    if (F.kind != AxiomKind::Inclusion)
        throw DialectError("the ALC theorem covers inclusion queries only");
    if (!K.abox.empty())
        throw DialectError("the ALC theorem requires an empty ABox");
    for (const auto& ax : K.tbox) { require_alc(ax.c); require_alc(ax.d); }
    require_alc(F.c);
    require_alc(F.d);

    VarContext ctx = var_context_with_query(K, F);
    std::vector<FormPtr> tbox;
    for (const auto& ax : K.tbox)
        tbox.push_back(f_sub(t_inter(translate_alc_S(ctx, ax.c), ctx.x()),
                             translate_alc_S(ctx, ax.d)));
    FormPtr concl = f_sub(t_inter(translate_alc_S(ctx, F.c), ctx.x()),
                          translate_alc_S(ctx, F.d));
    FormPtr inner = f_implies(f_conj(tbox), concl);
    for (int i = static_cast<int>(ctx.concepts.size()); i >= 1; --i)
        inner = f_forall("x" + std::to_string(i), inner);
    FormPtr body = f_implies(trans2_macro(ctx.x()), inner);
    for (int i = static_cast<int>(ctx.roles.size()); i >= 1; --i)
        body = f_forall("y" + std::to_string(i), body);
    return f_forall("x", body);
}

FormPtr emit_role_axiom(const VarContext& ctx, RoleAxiomKind kind, int j,
                        int i) {
    int k = static_cast<int>(ctx.roles.size());
    auto check = [&](int idx) {
        if (idx < 1 || idx > k)
            throw BadIndex("role index out of range: " + std::to_string(idx));
    };
    check(i);
    switch (kind) {
        case RoleAxiomKind::Hierarchy:
            check(j);
            return f_sub(ctx.y(j), ctx.y(i));
        case RoleAxiomKind::Transitive: {
            TermPtr x = ctx.x(), yi = ctx.y(i);
            auto v = [](const char* n) { return t_var(n); };
            FormPtr ante = f_conj({f_mem(v("u"), v("y")), f_mem(v("u"), yi),
                                   f_mem(v("v"), v("u")),
                                   f_mem(v("up"), v("v")), f_mem(v("up"), yi),
                                   f_mem(v("z"), v("up"))});
            FormPtr succ = f_exists(
                "upp", f_conj({f_mem(v("upp"), v("y")), f_mem(v("upp"), yi),
                               f_mem(v("z"), v("upp"))}));
            FormPtr body = f_implies(f_mem(v("y"), x),
                                     f_implies(ante, succ));
            for (const char* n : {"z", "up", "v", "u", "y"})
                body = f_forall(n, body);
            return body;
        }
        case RoleAxiomKind::Inverse: {
            check(j);
            TermPtr x = ctx.x(), yi = ctx.y(i), yj = ctx.y(j);
            auto v = [](const char* n) { return t_var(n); };
            FormPtr lhs = f_exists(
                "u", f_conj({f_mem(v("u"), v("y")), f_mem(v("u"), yj),
                             f_mem(v("v"), v("u"))}));
            FormPtr rhs = f_exists(
                "up", f_conj({f_mem(v("up"), v("v")), f_mem(v("up"), yi),
                              f_mem(v("y"), v("up"))}));
            FormPtr body = f_implies(f_mem(v("y"), x), f_iff(lhs, rhs));
            return f_forall("y", f_forall("v", body));
        }
    }
    throw BadIndex("unknown role-axiom kind");
}

// ── LC^Ω translation ─────────────────────────────────────────────────

TermPtr translate_lc_S(const VarContext& ctx, const ConceptPtr& C) {
    switch (C->kind) {
        case ConceptKind::Top: return ctx.x();
        case ConceptKind::Bot: return t_empty();
        case ConceptKind::Name: return ctx.xc(C->name);
        case ConceptKind::Not:
            return t_diff(ctx.x(), translate_lc_S(ctx, C->lhs));
        case ConceptKind::And:
            return t_inter(translate_lc_S(ctx, C->lhs),
                           translate_lc_S(ctx, C->rhs));
        case ConceptKind::Or:
            return t_union(translate_lc_S(ctx, C->lhs),
                           translate_lc_S(ctx, C->rhs));
        case ConceptKind::Diff:
            return t_diff(translate_lc_S(ctx, C->lhs),
                          translate_lc_S(ctx, C->rhs));
        case ConceptKind::Pow:
            return t_pow(translate_lc_S(ctx, C->lhs));
        default:
            throw DialectError("not an LC-Omega concept: " + render(C));
    }
}

namespace {

// Shared theorem shape; `ctx` fixes variable indexing.
FormPtr lc_theorem(const VarContext& ctx, const KnowledgeBase& K,
                   const Query& F) {
    std::vector<FormPtr> hyp;
    for (const auto& ax : K.abox) {
        if (ax.kind != AxiomKind::ConceptMembership)
            throw DialectError("LC-Omega ABox contains only memberships");
        hyp.push_back(f_mem(translate_lc_S(ctx, ax.c),
                            t_inter(translate_lc_S(ctx, ax.d), ctx.x())));
    }
    for (const auto& ax : K.tbox)
        hyp.push_back(f_sub(t_inter(translate_lc_S(ctx, ax.c), ctx.x()),
                            translate_lc_S(ctx, ax.d)));
    FormPtr concl;
    if (F.kind == AxiomKind::Inclusion)
        concl = f_sub(t_inter(translate_lc_S(ctx, F.c), ctx.x()),
                      translate_lc_S(ctx, F.d));
    else if (F.kind == AxiomKind::ConceptMembership)
        concl = f_mem(translate_lc_S(ctx, F.c),
                      t_inter(translate_lc_S(ctx, F.d), ctx.x()));
    else
        throw DialectError("LC-Omega queries are inclusions or memberships");
    FormPtr inner = f_implies(f_conj(hyp), concl);
    for (int i = static_cast<int>(ctx.concepts.size()); i >= 1; --i)
        inner = f_forall("x" + std::to_string(i), inner);
    return f_forall("x", f_implies(trans_macro(ctx.x()), inner));
}

}  // namespace

FormPtr emit_lc_theorem(const KnowledgeBase& K, const Query& F) {
    if (K.dialect != Dialect::LcOmega && !K.all_axioms().empty())
        for (const auto& ax : K.all_axioms())
            if (ax.kind != AxiomKind::Inclusion &&
                ax.kind != AxiomKind::ConceptMembership)
                throw DialectError("not an LC-Omega KB");
    return lc_theorem(var_context_with_query(K, F), K, F);
}

// ── Encoding into LC^Ω ───────────────────────────────────────────────

namespace {

// U_1 ⊔ … ⊔ U_k, or nullptr when k = 0.
ConceptPtr u_disjunction(const EncodedKB& enc) {
    if (enc.u_names.empty()) return nullptr;
    ConceptPtr out = name(enc.u_names[0]);
    for (size_t i = 1; i < enc.u_names.size(); ++i)
        out = or_(out, name(enc.u_names[i]));
    return out;
}

}  // namespace

ConceptPtr encode_concept_E(const EncodedKB& enc, const ConceptPtr& C) {
    switch (C->kind) {
        case ConceptKind::Top:
        case ConceptKind::Bot:
        case ConceptKind::Name:
            return C;
        case ConceptKind::Not:
            return not_(encode_concept_E(enc, C->lhs));
        case ConceptKind::And:
            return and_(encode_concept_E(enc, C->lhs),
                        encode_concept_E(enc, C->rhs));
        case ConceptKind::Or:
            return or_(encode_concept_E(enc, C->lhs),
                       encode_concept_E(enc, C->rhs));
        case ConceptKind::Diff:
            return diff(encode_concept_E(enc, C->lhs),
                        encode_concept_E(enc, C->rhs));
        case ConceptKind::Pow: {
            ConceptPtr ce = encode_concept_E(enc, C->lhs);
            ConceptPtr uu = u_disjunction(enc);
            return pow(uu ? or_(uu, ce) : ce);
        }
        case ConceptKind::Forall: {
            ConceptPtr ce = encode_concept_E(enc, C->lhs);
            const std::string& ui = enc.u_of_role.at(C->role.name);
            return pow(or_(not_(name(ui)), pow(ce)));
        }
        case ConceptKind::Exists:
            // ∃R.C = ¬∀R.¬C, then encode.
            return not_(encode_concept_E(
                enc, forall(C->role, not_(C->lhs))));
        default:
            throw DialectError("cannot encode concept: " + render(C));
    }
}

std::pair<EncodedKB, std::optional<Query>> encode_lc(
    const KnowledgeBase& K, const std::optional<Query>& F) {
    EncodedKB enc;
    enc.source_sig = compute_signature(K.all_axioms(), F);
    for (size_t i = 0; i < enc.source_sig.roles.size(); ++i) {
        std::string u = "$U_" + std::to_string(i + 1);
        enc.u_names.push_back(u);
        enc.u_of_role[enc.source_sig.roles[i]] = u;
    }
    for (size_t i = 0; i < enc.source_sig.individuals.size(); ++i) {
        std::string b = "$B_" + std::to_string(i + 1);
        enc.b_names.push_back(b);
        enc.b_of_ind[enc.source_sig.individuals[i]] = b;
    }
    ConceptPtr uu = u_disjunction(enc);
    ConceptPtr not_u = uu ? not_(uu) : nullptr;

    auto ind_index = [&](const std::string& a) {
        auto& inds = enc.source_sig.individuals;
        return std::find(inds.begin(), inds.end(), a) - inds.begin() + 1;
    };
    auto role_idx = [&](const std::string& r) {
        auto& rs = enc.source_sig.roles;
        return std::find(rs.begin(), rs.end(), r) - rs.begin() + 1;
    };

    std::vector<Axiom> axioms;
    auto emit = [&](Axiom ax, const std::string& source) {
        enc.provenance.push_back({render(ax), source});
        axioms.push_back(std::move(ax));
    };

    for (const auto& ax : K.tbox) {
        ConceptPtr ce = encode_concept_E(enc, ax.c);
        ConceptPtr de = encode_concept_E(enc, ax.d);
        emit(Axiom::inclusion(not_u ? and_(ce, not_u) : ce, de), render(ax));
    }
    int g_counter = 0;
    for (const auto& ax : K.abox) {
        switch (ax.kind) {
            case AxiomKind::ConceptMembership:
                emit(Axiom::concept_membership(encode_concept_E(enc, ax.c),
                                               encode_concept_E(enc, ax.d)),
                     render(ax));
                break;
            case AxiomKind::Assertion:
                emit(Axiom::concept_membership(name(enc.b_of_ind.at(ax.a)),
                                               encode_concept_E(enc, ax.c)),
                     render(ax));
                break;
            case AxiomKind::RoleAssertion: {
                std::string f = "$F_" + std::to_string(role_idx(ax.role)) +
                                "_" + std::to_string(ind_index(ax.a)) + "_" +
                                std::to_string(ind_index(ax.b));
                enc.f_names.push_back({ax.role, ax.a, ax.b, f});
                const std::string& bh = enc.b_of_ind.at(ax.a);
                const std::string& bj = enc.b_of_ind.at(ax.b);
                const std::string& ui = enc.u_of_role.at(ax.role);
                emit(Axiom::concept_membership(name(f), name(bh)), render(ax));
                emit(Axiom::concept_membership(name(bj), name(f)), render(ax));
                emit(Axiom::concept_membership(name(f), name(ui)), render(ax));
                break;
            }
            case AxiomKind::RoleMembership: {
                std::string g = "$G_" + std::to_string(++g_counter);
                enc.g_names.push_back(
                    {ax.role, render(ax.c), render(ax.d), g});
                const std::string& ui = enc.u_of_role.at(ax.role);
                emit(Axiom::concept_membership(name(g),
                                               encode_concept_E(enc, ax.c)),
                     render(ax));
                emit(Axiom::concept_membership(encode_concept_E(enc, ax.d),
                                               name(g)),
                     render(ax));
                emit(Axiom::concept_membership(name(g), name(ui)), render(ax));
                break;
            }
            default:
                throw DialectError("inclusion in ABox");
        }
    }

    // Extra axiom families: concept names, individuals and
    // membership-LHS concepts live outside the U layers; ¬U is 2-transitive.
    if (not_u) {
        for (const auto& a : enc.source_sig.concepts)
            emit(Axiom::inclusion(name(a), not_u), "name-disjointness");
        for (const auto& b : enc.b_names)
            emit(Axiom::concept_membership(name(b), not_u),
                 "name-disjointness");
        for (const auto& C : membership_lhs_concepts(K, F))
            emit(Axiom::concept_membership(encode_concept_E(enc, C), not_u),
                 "name-disjointness");
        emit(Axiom::inclusion(not_u, pow(or_(not_u, pow(not_u)))),
             "2-transitivity of the non-U layer");
    }

    enc.kb = make_kb(std::move(axioms));

    std::optional<Query> fq;
    if (F) {
        switch (F->kind) {
            case AxiomKind::Inclusion:
                fq = Axiom::inclusion(encode_concept_E(enc, F->c),
                                      encode_concept_E(enc, F->d));
                break;
            case AxiomKind::Assertion:
                fq = Axiom::concept_membership(name(enc.b_of_ind.at(F->a)),
                                               encode_concept_E(enc, F->c));
                break;
            case AxiomKind::ConceptMembership:
                fq = Axiom::concept_membership(encode_concept_E(enc, F->c),
                                               encode_concept_E(enc, F->d));
                break;
            default:
                throw DialectError(
                    "role assertions/memberships are not query forms of the "
                    "encoding");
        }
    }
    return {std::move(enc), std::move(fq)};
}

// ── Composed translation ──────────────────────────────────────

namespace {

// Variable context for the composed translation: the $U_i map to the role
// variables y_i; every other name (user concepts first, then generated
// names) gets an x_j.
struct StarContext {
    VarContext vars;                      // concepts = x-indexed names
    std::map<std::string, int> role_var;  // $U_i name → i
};

StarContext star_context(const EncodedKB& enc) {
    StarContext ctx;
    ctx.vars.roles = enc.source_sig.roles;
    ctx.vars.concepts = enc.source_sig.concepts;
    for (const auto& b : enc.b_names) ctx.vars.concepts.push_back(b);
    for (const auto& f : enc.f_names) ctx.vars.concepts.push_back(f[3]);
    for (const auto& g : enc.g_names) ctx.vars.concepts.push_back(g[3]);
    for (size_t i = 0; i < enc.u_names.size(); ++i)
        ctx.role_var[enc.u_names[i]] = static_cast<int>(i) + 1;
    return ctx;
}

// LC^Ω S-translation with $U_i ↦ y_i.
TermPtr star_term(const StarContext& ctx, const ConceptPtr& C) {
    if (C->kind == ConceptKind::Name) {
        auto it = ctx.role_var.find(C->name);
        if (it != ctx.role_var.end()) return ctx.vars.y(it->second);
        return ctx.vars.xc(C->name);
    }
    switch (C->kind) {
        case ConceptKind::Top: return ctx.vars.x();
        case ConceptKind::Bot: return t_empty();
        case ConceptKind::Not:
            return t_diff(ctx.vars.x(), star_term(ctx, C->lhs));
        case ConceptKind::And:
            return t_inter(star_term(ctx, C->lhs), star_term(ctx, C->rhs));
        case ConceptKind::Or:
            return t_union(star_term(ctx, C->lhs), star_term(ctx, C->rhs));
        case ConceptKind::Diff:
            return t_diff(star_term(ctx, C->lhs), star_term(ctx, C->rhs));
        case ConceptKind::Pow:
            return t_pow(star_term(ctx, C->lhs));
        default:
            throw DialectError("not an LC-Omega concept: " + render(C));
    }
}

}  // namespace

TermPtr translate_star_concept(const KnowledgeBase& K, const ConceptPtr& C) {
    auto [enc, none] = encode_lc(K);
    (void)none;
    StarContext ctx = star_context(enc);
    return star_term(ctx, encode_concept_E(enc, C));
}

FormPtr translate_star(const KnowledgeBase& K, const Query& F) {
    if (F.kind != AxiomKind::Inclusion)
        throw DialectError("the composed theorem covers inclusion queries");
    auto [enc, fq] = encode_lc(K, F);
    StarContext ctx = star_context(enc);

    std::vector<FormPtr> hyp;
    for (const auto& ax : enc.kb.abox)
        hyp.push_back(f_mem(star_term(ctx, ax.c),
                            t_inter(star_term(ctx, ax.d), ctx.vars.x())));
    for (const auto& ax : enc.kb.tbox)
        hyp.push_back(f_sub(t_inter(star_term(ctx, ax.c), ctx.vars.x()),
                            star_term(ctx, ax.d)));

    // Conclusion: C* ∩ (x \ (y_1 ∪ … ∪ y_k)) ⊆ D*.
    TermPtr restricted =
        enc.u_names.empty() ? ctx.vars.x()
                            : t_diff(ctx.vars.x(), ctx.vars.role_union());
    FormPtr concl = f_sub(t_inter(star_term(ctx, fq->c), restricted),
                          star_term(ctx, fq->d));

    FormPtr inner = f_implies(f_conj(hyp), concl);
    for (int i = static_cast<int>(ctx.vars.concepts.size()); i >= 1; --i)
        inner = f_forall("x" + std::to_string(i), inner);
    FormPtr body = f_implies(trans_macro(ctx.vars.x()), inner);
    for (int i = static_cast<int>(ctx.vars.roles.size()); i >= 1; --i)
        body = f_forall("y" + std::to_string(i), body);
    return f_forall("x", body);
}

// ── Model transport into the encoding ───────────────────────────────────────────

EncodedModel encode_model(const KnowledgeBase& K, const Interpretation& I,
                          const EncodedKB& enc) {
    NodeId next = I.pool.empty() ? 0 : I.pool.back() + 1;
    // Witness nodes u^i_{s,t} per role pair, in deterministic order.
    std::map<std::tuple<std::string, NodeId, NodeId>, NodeId> u_node;
    std::set<NodeId> domain(I.pool.begin(), I.pool.end());
    std::set<std::pair<NodeId, NodeId>> edges;
    for (NodeId s : I.pool)
        for (NodeId t : I.elems_of(s)) edges.insert({s, t});
    for (const auto& r : enc.source_sig.roles) {
        auto it = I.roles.find(r);
        if (it == I.roles.end()) continue;
        for (const auto& [s, t] : it->second) {
            NodeId u = next++;
            u_node[{r, s, t}] = u;
            domain.insert(u);
            edges.insert({s, u});
            edges.insert({u, t});
        }
    }
    std::set<NodeId> leaves;
    std::set<NodeId> has_succ;
    for (const auto& [a, b] : edges) { (void)b; has_succ.insert(a); }
    for (NodeId n : domain)
        if (!has_succ.count(n)) leaves.insert(n);

    CollapseResult col =
        mostowski_collapse(domain, edges, leaves, /*duplicate_tags=*/true);

    EncodedModel out;
    Interpretation& J = out.J;
    for (NodeId n : col.graph.nodes) J.pool.push_back(n);
    std::sort(J.pool.begin(), J.pool.end());
    for (NodeId n : col.graph.nodes) J.elems[n] = col.graph.successors(n);
    for (const auto& [n, label] : col.graph.atoms) {
        (void)label;
        J.atoms.insert(n);
    }
    for (const auto& a : enc.source_sig.concepts) {
        auto it = I.concepts.find(a);
        auto& ext = J.concepts[a];
        if (it != I.concepts.end())
            for (NodeId d : it->second) ext.insert(col.m.at(d));
    }
    for (const auto& r : enc.source_sig.roles) {
        auto& ext = J.concepts[enc.u_of_role.at(r)];
        for (const auto& [key, u] : u_node)
            if (std::get<0>(key) == r) ext.insert(col.m.at(u));
    }
    for (const auto& [a, b] : enc.b_of_ind) {
        auto it = I.individuals.find(a);
        if (it == I.individuals.end()) continue;
        NodeId n = col.m.at(it->second);
        J.concepts[b] = col.graph.successors(n);
        J.denotations[b] = n;
    }
    for (const auto& [role, a, b, fname] : enc.f_names) {
        auto sa = I.individuals.find(a);
        auto sb = I.individuals.find(b);
        if (sa == I.individuals.end() || sb == I.individuals.end()) continue;
        auto it = u_node.find({role, sa->second, sb->second});
        if (it == u_node.end()) continue;  // role link absent in I
        NodeId n = col.m.at(it->second);
        J.concepts[fname] = col.graph.successors(n);
        J.denotations[fname] = n;
    }
    for (const auto& [role, ckey, dkey, gname] : enc.g_names) {
        auto sc = I.denotations.find(ckey);
        auto sd = I.denotations.find(dkey);
        if (sc == I.denotations.end() || sd == I.denotations.end()) continue;
        auto it = u_node.find({role, sc->second, sd->second});
        if (it == u_node.end()) continue;
        NodeId n = col.m.at(it->second);
        J.concepts[gname] = col.graph.successors(n);
        J.denotations[gname] = n;
    }
    // Denotations of the membership-LHS concepts transport through M.
    for (const auto& C : membership_lhs_concepts(K)) {
        auto it = I.denotations.find(render(C));
        if (it != I.denotations.end())
            J.denotations[render(encode_concept_E(enc, C))] =
                col.m.at(it->second);
    }
    for (NodeId d : I.pool) out.m[d] = col.m.at(d);
    return out;
}

// ── Finite evaluation ───────────────────────────────────────────────────────

EvalEnv::Val EvalEnv::node_val(NodeId n) {
    Val v;
    v.is_node = true;
    v.node = n;
    return v;
}
EvalEnv::Val EvalEnv::ext_val(std::set<NodeId> s) {
    Val v;
    v.ext = std::move(s);
    return v;
}

std::set<NodeId> eval_set_term(const TermPtr& t, const Interpretation& I,
                               const EvalEnv& env) {
    switch (t->kind) {
        case TermKind::Empty: return {};
        case TermKind::Var: {
            auto it = env.beta.find(t->var);
            if (it == env.beta.end()) throw UnboundVariable(t->var);
            if (it->second.is_node) return I.elems_of(it->second.node);
            return it->second.ext;
        }
        case TermKind::Union: {
            auto out = eval_set_term(t->lhs, I, env);
            auto r = eval_set_term(t->rhs, I, env);
            out.insert(r.begin(), r.end());
            return out;
        }
        case TermKind::Inter: {
            auto l = eval_set_term(t->lhs, I, env);
            auto r = eval_set_term(t->rhs, I, env);
            std::set<NodeId> out;
            std::set_intersection(l.begin(), l.end(), r.begin(), r.end(),
                                  std::inserter(out, out.begin()));
            return out;
        }
        case TermKind::Diff: {
            auto l = eval_set_term(t->lhs, I, env);
            auto r = eval_set_term(t->rhs, I, env);
            std::set<NodeId> out;
            std::set_difference(l.begin(), l.end(), r.begin(), r.end(),
                                std::inserter(out, out.begin()));
            return out;
        }
        case TermKind::Pow: {
            auto s = eval_set_term(t->lhs, I, env);
            std::set<NodeId> out;
            for (NodeId n : I.pool) {
                const auto& es = I.elems_of(n);
                if (std::includes(s.begin(), s.end(), es.begin(), es.end()))
                    out.insert(n);
            }
            return out;
        }
    }
    return {};
}

namespace {

struct Evaluator {
    const Interpretation& I;
    EvalEnv& env;
    EvalResult flags{true, false, false};
    long steps = 0;

    void tick() {
        if (++steps > env.budget)
            throw QuantifierBlowup("quantifier sweep exceeded the budget of " +
                                   std::to_string(env.budget) + " steps");
    }

    bool eval(const FormPtr& f) {
        tick();
        switch (f->kind) {
            case FormKind::Mem: {
                std::set<NodeId> rhs = eval_set_term(f->t2, I, env);
                // A variable bound to a pool element is that element.
                if (f->t1->kind == TermKind::Var) {
                    auto it = env.beta.find(f->t1->var);
                    if (it == env.beta.end())
                        throw UnboundVariable(f->t1->var);
                    if (it->second.is_node)
                        return rhs.count(it->second.node) != 0;
                }
                // A compound LHS resolves through the denotation map.
                auto dn = env.denot.find(to_sexp(f->t1));
                if (dn != env.denot.end()) return rhs.count(dn->second) != 0;
                // Last resort: match by extension (reported to the caller —
                // sound only up to non-extensionality).
                flags.extensional_fallback = true;
                std::set<NodeId> lhs = eval_set_term(f->t1, I, env);
                for (NodeId n : rhs)
                    if (I.elems_of(n) == lhs) return true;
                return false;
            }
            case FormKind::Sub: {
                auto l = eval_set_term(f->t1, I, env);
                auto r = eval_set_term(f->t2, I, env);
                return std::includes(r.begin(), r.end(), l.begin(), l.end());
            }
            case FormKind::Not: return !eval(f->f1);
            case FormKind::And: return eval(f->f1) && eval(f->f2);
            case FormKind::Or: return eval(f->f1) || eval(f->f2);
            case FormKind::Implies: return !eval(f->f1) || eval(f->f2);
            case FormKind::Iff: return eval(f->f1) == eval(f->f2);
            case FormKind::Forall:
            case FormKind::Exists: {
                flags.quantifier_restricted = true;
                bool universal = f->kind == FormKind::Forall;
                auto saved = env.beta.find(f->var) != env.beta.end()
                                 ? std::optional<EvalEnv::Val>(
                                       env.beta[f->var])
                                 : std::nullopt;
                bool result = universal;
                auto try_val = [&](EvalEnv::Val v) {
                    env.beta[f->var] = std::move(v);
                    bool b = eval(f->f1);
                    if (universal && !b) result = false;
                    if (!universal && b) result = true;
                    return universal ? result : !result;
                };
                bool keep_going = true;
                for (NodeId n : I.pool) {
                    keep_going = try_val(EvalEnv::node_val(n));
                    if (!keep_going) break;
                }
                if (keep_going)
                    for (const auto& c : env.candidates) {
                        keep_going = try_val(EvalEnv::ext_val(c));
                        if (!keep_going) break;
                    }
                if (saved)
                    env.beta[f->var] = *saved;
                else
                    env.beta.erase(f->var);
                return result;
            }
        }
        return false;
    }
};

}  // namespace

EvalResult eval_formula(const FormPtr& f, const Interpretation& I,
                        EvalEnv env) {
    Evaluator ev{I, env};
    ev.flags.value = ev.eval(f);
    return ev.flags;
}

EvalEnv canonical_beta(const KnowledgeBase& K, const Interpretation& I) {
    EvalEnv env;
    env.beta["x"] =
        EvalEnv::ext_val(std::set<NodeId>(I.pool.begin(), I.pool.end()));
    VarContext ctx = var_context(K);
    for (size_t i = 0; i < ctx.concepts.size(); ++i) {
        auto it = I.concepts.find(ctx.concepts[i]);
        env.beta["x" + std::to_string(i + 1)] = EvalEnv::ext_val(
            it == I.concepts.end() ? std::set<NodeId>{} : it->second);
    }
    for (const auto& C : membership_lhs_concepts(K)) {
        auto it = I.denotations.find(render(C));
        if (it != I.denotations.end())
            env.denot[to_sexp(translate_lc_S(ctx, C))] = it->second;
    }
    return env;
}

EvalEnv star_beta(const EncodedKB& enc, const Interpretation& J) {
    EvalEnv env;
    env.beta["x"] =
        EvalEnv::ext_val(std::set<NodeId>(J.pool.begin(), J.pool.end()));
    StarContext ctx = star_context(enc);
    for (size_t i = 0; i < ctx.vars.concepts.size(); ++i) {
        auto it = J.concepts.find(ctx.vars.concepts[i]);
        env.beta["x" + std::to_string(i + 1)] = EvalEnv::ext_val(
            it == J.concepts.end() ? std::set<NodeId>{} : it->second);
    }
    for (size_t i = 0; i < ctx.vars.roles.size(); ++i) {
        auto it = J.concepts.find(enc.u_names[i]);
        env.beta["y" + std::to_string(i + 1)] = EvalEnv::ext_val(
            it == J.concepts.end() ? std::set<NodeId>{} : it->second);
    }
    return env;
}

FormPtr strip_foralls(const FormPtr& f, std::vector<std::string>* vars) {
    FormPtr cur = f;
    while (cur->kind == FormKind::Forall) {
        if (vars) vars->push_back(cur->var);
        cur = cur->f1;
    }
    return cur;
}

}  // namespace alcomega
