// ============================================================================
// alcomega/ast.hpp — Abstract syntax for ALC^Omega / LC^Omega / ALCOI KBs
// ============================================================================
//
// Design notes:
//
//   Concepts are immutable shared trees (ConceptPtr = shared_ptr<const
//   Concept>).  Structural equality is recursive; ordered containers key
//   concepts by their rendered text (render() in printer.hpp), which doubles
//   as the normalization used to identify e_C concept-individuals.
//
//   Dialects form a small lattice:
//
//     LcOmega   — booleans, \, Pow, memberships; no roles, no individuals
//     AlcOmega  — full user-facing language (ALC + Pow + \ + memberships)
//     Alcoi     — translation target: nominals + inverse roles, no Pow/Diff
//     AlcNeg    — finite-model variant: plain ALC plus one negated role
//
//   parse/infer always pick the smallest dialect admitting the constructs
//   used; plain ALC input is reported as AlcOmega (dialect monotonicity).
//
//   Generated names live in the reserved `$` namespace:
//     $e         — the membership role
//     $e_<C>     — concept individual for membership-LHS concept C
//     $U_i, $B_i, $F_.., $G_..  — LC^Omega encoding names (settrans.hpp)
//
// ============================================================================

#ifndef ALCOMEGA_AST_HPP
#define ALCOMEGA_AST_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace alcomega {

// ── Errors ──────────────────────────────────────────────────────────────────

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DialectError : Error {
    using Error::Error;
};

// ── Roles ───────────────────────────────────────────────────────────────────

struct Role {
    std::string name;
    bool inverted = false;  // ALCOI only
    bool negated = false;   // ALC(neg) only — the single negated role

    bool operator==(const Role& o) const {
        return name == o.name && inverted == o.inverted && negated == o.negated;
    }
};

// ── Concepts ────────────────────────────────────────────────────────────────

enum class ConceptKind {
    Top,
    Bot,
    Name,     // concept name
    Not,      // lhs
    And,      // lhs, rhs
    Or,       // lhs, rhs
    Diff,     // lhs \ rhs
    Pow,      // lhs
    Forall,   // role, lhs
    Exists,   // role, lhs
    Nominal,  // individual name (ALCOI only)
};

struct Concept;
using ConceptPtr = std::shared_ptr<const Concept>;

struct Concept {
    ConceptKind kind;
    std::string name;  // Name: concept name; Nominal: individual name
    Role role;         // Forall / Exists
    ConceptPtr lhs, rhs;
};

// Factory helpers.
ConceptPtr top();
ConceptPtr bot();
ConceptPtr name(std::string n);
ConceptPtr nominal(std::string individual);
ConceptPtr not_(ConceptPtr c);
ConceptPtr and_(ConceptPtr l, ConceptPtr r);
ConceptPtr or_(ConceptPtr l, ConceptPtr r);
ConceptPtr diff(ConceptPtr l, ConceptPtr r);
ConceptPtr pow(ConceptPtr c);
ConceptPtr forall(Role r, ConceptPtr c);
ConceptPtr exists(Role r, ConceptPtr c);

bool equal(const ConceptPtr& a, const ConceptPtr& b);

// Number of AST nodes of a concept tree (each constructor counts 1).
int node_count(const ConceptPtr& c);

// ── Axioms ──────────────────────────────────────────────────────────────────

enum class AxiomKind {
    Inclusion,          // c [= d
    Assertion,          // c(a)
    RoleAssertion,      // role(a, b)
    ConceptMembership,  // c in d
    RoleMembership,     // (c, d) in role
};

struct Axiom {
    AxiomKind kind;
    ConceptPtr c, d;      // d unused for Assertion
    std::string role;     // RoleAssertion / RoleMembership
    std::string a, b;     // individuals (Assertion uses a only)

    static Axiom inclusion(ConceptPtr c, ConceptPtr d);
    static Axiom assertion(ConceptPtr c, std::string a);
    static Axiom role_assertion(std::string role, std::string a, std::string b);
    static Axiom concept_membership(ConceptPtr c, ConceptPtr d);
    static Axiom role_membership(ConceptPtr c, ConceptPtr d, std::string role);
};

bool equal(const Axiom& x, const Axiom& y);
int node_count(const Axiom& ax);

// A query is a single axiom-shaped statement.  RoleAssertion queries only
// arise as translation output (role membership maps to R($e_C, $e_D)).
using Query = Axiom;

// ── Dialect & signature ─────────────────────────────────────────────────────

enum class Dialect { LcOmega, AlcOmega, Alcoi, AlcNeg };

const char* dialect_name(Dialect d);

struct Signature {
    std::vector<std::string> concepts;     // sorted, unique
    std::vector<std::string> roles;        // sorted, unique
    std::vector<std::string> individuals;  // sorted, unique
};

// ── KnowledgeBase ───────────────────────────────────────────────────────────

struct KnowledgeBase {
    std::vector<Axiom> tbox;  // Inclusion only
    std::vector<Axiom> abox;  // everything else
    Dialect dialect = Dialect::AlcOmega;
    Signature sig;

    std::vector<Axiom> all_axioms() const;
};

// Recompute signature + infer the smallest dialect from the axioms present.
// Throws DialectError for incoherent mixtures (e.g. Pow alongside nominals).
Signature compute_signature(const std::vector<Axiom>& axioms,
                            const std::optional<Query>& query = std::nullopt);
Dialect infer_dialect(const std::vector<Axiom>& axioms);

// Rebuild a KB from a flat axiom list (splitting tbox/abox, computing
// signature and dialect).
KnowledgeBase make_kb(std::vector<Axiom> axioms);

// Membership-LHS concepts of K (and optionally a query), deduplicated by
// rendered text, in order of first occurrence.  These are the concepts that
// receive e_C individuals under the ALCOI translation.
std::vector<ConceptPtr> membership_lhs_concepts(
    const KnowledgeBase& kb, const std::optional<Query>& query = std::nullopt);

// Total AST size of a KB (sum over axioms of node_count).
int node_count(const KnowledgeBase& kb);

// Name classification helpers for the concrete syntax.
bool is_concept_name(const std::string& s);     // uppercase-initial (after $)
bool is_lower_name(const std::string& s);       // role/individual
bool is_reserved_name(const std::string& s);    // starts with '$'

}  // namespace alcomega

#endif  // ALCOMEGA_AST_HPP
