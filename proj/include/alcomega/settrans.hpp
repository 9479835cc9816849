// ============================================================================
// alcomega/settrans.hpp — set-theoretic translations into the theory Omega
// ============================================================================
//
// Three pipelines over terms {∅, vars, ∪, ∩, \, Pow} and FO formulas over
// {∈, ⊆}:
//
//   * ALC → Ω          (translate_alc_S / emit_alc_theorem):
//       ⊤ ↦ x, A_i ↦ x_i, roles via the y_i device
//       (∀R_i.C)^S = Pow(((x ∪ y_1 ∪…∪ y_k) \ y_i) ∪ Pow(C^S)),
//       theorem shape  ∀x∀y.. (Trans²(x) → ∀x.. (⋀TBox_T → C^S∩x ⊆ D^S)).
//   * LC^Ω → Ω         (translate_lc_S / emit_lc_theorem):
//       Pow ↦ Pow, theorem shape with Trans(x) and ABox memberships.
//   * ALC^Ω → LC^Ω     (encode_lc): role quantifiers and individuals are
//       compiled away with fresh names $U_i (role layers), $B_i
//       (individuals), $F/$G (role links); translate_star composes this
//       encoding with the LC^Ω translation into the single Ω-theorem of the
//       role-ful case.
//
// ∩ is definable (A∩B = A \ (A\B)); emitters expand it on demand
// (S-expressions via a flag, TPTP always, since the TPTP signature only has
// cup/diff/pow).
//
// eval_set_term / eval_formula form a *finite test oracle*, not a prover:
// terms are evaluated pool-relatively (Pow sees only pool nodes), and
// quantifiers range over pool elements plus explicitly listed candidate
// sets; the restriction is reported in the result.
// ============================================================================

#ifndef ALCOMEGA_SETTRANS_HPP
#define ALCOMEGA_SETTRANS_HPP

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "alcomega/ast.hpp"
#include "alcomega/model.hpp"
#include "alcomega/translate.hpp"

namespace alcomega {

// ── Terms & formulas ────────────────────────────────────────────────────────

enum class TermKind { Empty, Var, Union, Inter, Diff, Pow };

struct SetTerm;
using TermPtr = std::shared_ptr<const SetTerm>;

struct SetTerm {
    TermKind kind;
    std::string var;
    TermPtr lhs, rhs;
};

TermPtr t_empty();
TermPtr t_var(std::string v);
TermPtr t_union(TermPtr a, TermPtr b);
TermPtr t_inter(TermPtr a, TermPtr b);
TermPtr t_diff(TermPtr a, TermPtr b);
TermPtr t_pow(TermPtr a);

// Replace every Inter(A,B) by Diff(A, Diff(A, B)).
TermPtr expand_inter(const TermPtr& t);

enum class FormKind { Mem, Sub, Not, And, Or, Implies, Iff, Forall, Exists };

struct OmegaFormula;
using FormPtr = std::shared_ptr<const OmegaFormula>;

struct OmegaFormula {
    FormKind kind;
    TermPtr t1, t2;    // Mem / Sub
    FormPtr f1, f2;
    std::string var;   // Forall / Exists
};

FormPtr f_mem(TermPtr a, TermPtr b);
FormPtr f_sub(TermPtr a, TermPtr b);
FormPtr f_not(FormPtr f);
FormPtr f_and(FormPtr a, FormPtr b);
FormPtr f_or(FormPtr a, FormPtr b);
FormPtr f_implies(FormPtr a, FormPtr b);
FormPtr f_iff(FormPtr a, FormPtr b);
FormPtr f_forall(std::string v, FormPtr f);
FormPtr f_exists(std::string v, FormPtr f);
FormPtr f_conj(const std::vector<FormPtr>& fs);  // empty → (sub empty empty)

// Named macros.  Trans(t): every element of t is a subset of t.
// Trans²(t): elements of elements of t are subsets of t.
FormPtr trans_macro(const TermPtr& t, const std::string& fresh_prefix = "q");
FormPtr trans2_macro(const TermPtr& t, const std::string& fresh_prefix = "q");

// ── Emission ────────────────────────────────────────────────────────────────

std::string to_sexp(const TermPtr& t);
std::string to_sexp(const FormPtr& f, bool expand_inter_flag = false);
std::string to_tptp(const FormPtr& f, const std::string& name = "goal",
                    const std::string& role = "conjecture");

// ── ALC translation ──────────────────────────────────────────────────

struct BadIndex : Error {
    using Error::Error;
};

// Variable context: x, y_1..y_k (roles, signature order), x_1..x_{n+m}
// (concept names; generated names are appended after user names).
struct VarContext {
    std::vector<std::string> roles;     // index i (1-based) → role name
    std::vector<std::string> concepts;  // index i (1-based) → concept name
    int role_index(const std::string& r) const;     // 1-based
    int concept_index(const std::string& c) const;  // 1-based; appends? no
    TermPtr x() const;
    TermPtr y(int i) const;                  // role var
    TermPtr xc(const std::string& name) const;  // concept var
    TermPtr role_union() const;              // y_1 ∪ … ∪ y_k (Empty if k=0)
};

VarContext var_context(const KnowledgeBase& K);

TermPtr translate_alc_S(const VarContext& ctx, const ConceptPtr& C);
FormPtr emit_alc_theorem(const KnowledgeBase& K, const Query& F);

enum class RoleAxiomKind { Hierarchy, Transitive, Inverse };
FormPtr emit_role_axiom(const VarContext& ctx, RoleAxiomKind kind, int j,
                        int i);

// ── LC^Ω translation ─────────────────────────────────────────────────

TermPtr translate_lc_S(const VarContext& ctx, const ConceptPtr& C);
FormPtr emit_lc_theorem(const KnowledgeBase& K, const Query& F);

// ── Encoding into LC^Ω ───────────────────────────────────────────────

struct EncodedKB {
    KnowledgeBase kb;  // dialect LC^Ω
    std::vector<std::string> u_names;              // $U_1..$U_k, role order
    std::map<std::string, std::string> u_of_role;
    std::vector<std::string> b_names;              // $B_1..$B_r
    std::map<std::string, std::string> b_of_ind;
    // (role, a, b, name) for role assertions; (role, render C, render D,
    // name) for role memberships.
    std::vector<std::array<std::string, 4>> f_names;
    std::vector<std::array<std::string, 4>> g_names;
    std::vector<std::pair<std::string, std::string>> provenance;
    Signature source_sig;
};

ConceptPtr encode_concept_E(const EncodedKB& enc, const ConceptPtr& C);
std::pair<EncodedKB, std::optional<Query>> encode_lc(
    const KnowledgeBase& K, const std::optional<Query>& F = std::nullopt);

// The composed theorem for an inclusion query.
FormPtr translate_star(const KnowledgeBase& K, const Query& F);
// The C* term of the composed translation (S ∘ E with U_i ↦ y_i).
TermPtr translate_star_concept(const KnowledgeBase& K, const ConceptPtr& C);

// Model transport into the encoding: a model I of K becomes a membership-graph
// model J of (an equivalence-relevant fragment of) K^E, via witness nodes
// u^i_{s,t} for role pairs and the duplicating collapse M.
struct EncodedModel {
    Interpretation J;
    std::map<NodeId, NodeId> m;  // I-pool node → J node
};
EncodedModel encode_model(const KnowledgeBase& K, const Interpretation& I,
                          const EncodedKB& enc);

// ── Finite evaluation (test oracle) ─────────────────────────────────────────

struct UnboundVariable : Error {
    explicit UnboundVariable(const std::string& v)
        : Error("unbound set variable: " + v) {}
};

struct QuantifierBlowup : Error {
    using Error::Error;
};

struct EvalEnv {
    // A binding is either a pool element or an extension.
    struct Val {
        bool is_node = false;
        NodeId node = 0;
        std::set<NodeId> ext;
    };
    std::map<std::string, Val> beta;
    // Term-key (sexp) → denoting pool node, resolving memberships whose
    // left-hand side is a compound term (the finite-model counterpart of
    // "which set C^S is").
    std::map<std::string, NodeId> denot;
    // Extra candidate extensions for quantifiers (besides pool elements).
    std::vector<std::set<NodeId>> candidates;
    long budget = 2'000'000;

    static Val node_val(NodeId n);
    static Val ext_val(std::set<NodeId> s);
};

struct EvalResult {
    bool value;
    bool quantifier_restricted;     // quantifiers ranged over a finite slice
    bool extensional_fallback;      // a Mem LHS was matched by extension
};

std::set<NodeId> eval_set_term(const TermPtr& t, const Interpretation& I,
                               const EvalEnv& env);
EvalResult eval_formula(const FormPtr& f, const Interpretation& I,
                        EvalEnv env);

// The canonical assignment: x = pool, x_i = A_i^I (plus denotations for the
// membership LHS terms of K).
EvalEnv canonical_beta(const KnowledgeBase& K, const Interpretation& I);

// β for the composed translation evaluated over an encoded model J:
// x = J-pool, y_i = U_i^J, x_i = A^J (including the generated names).
EvalEnv star_beta(const EncodedKB& enc, const Interpretation& J);

// Strip a ∀-prefix, binding the stripped variables via `bind`; used by the
// finite-validity harnesses to evaluate theorem matrices under a chosen β.
FormPtr strip_foralls(const FormPtr& f, std::vector<std::string>* vars);

}  // namespace alcomega

#endif  // ALCOMEGA_SETTRANS_HPP
