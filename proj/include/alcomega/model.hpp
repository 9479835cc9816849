// ============================================================================
// alcomega/model.hpp — finite membership-graph interpretations
// ============================================================================
//
// An Interpretation is a finite model whose domain (pool) is a transitive
// set presented as its own node pool: elems(n) ⊆ pool makes transitivity
// structural.  Individuals map to atoms (element-less nodes).
//
// Membership axioms C ∈ D are checked through an explicit denotation table
// keyed by render(C): the ambient set theory is non-extensional, so "C^I is
// an element of the domain" is a fact about *which* set C^I is, not about
// extensions.  The table is the finite-model counterpart of the e_C
// concept individuals of the ALCOI translation, with the coherence
// requirement elems(denotations(C)) = eval(C).
//
// The same evaluator serves the ALCOI dialect (nominals {a}^I = {a^I},
// inverse roles) and the ALC(neg) dialect (the one negated role), so the
// translation checkers reuse a single eval.
// ============================================================================

#ifndef ALCOMEGA_MODEL_HPP
#define ALCOMEGA_MODEL_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "alcomega/ast.hpp"
#include "alcomega/hyperset.hpp"

namespace alcomega {

struct Interpretation {
    std::vector<NodeId> pool;                          // sorted, unique
    std::map<NodeId, std::set<NodeId>> elems;          // total on pool
    std::set<NodeId> atoms;                            // elems = ∅
    std::map<std::string, std::set<NodeId>> concepts;  // absent name → ∅
    std::map<std::string, std::set<std::pair<NodeId, NodeId>>> roles;
    std::map<std::string, NodeId> individuals;
    std::map<std::string, NodeId> denotations;  // key: render(C)

    bool in_pool(NodeId n) const;
    const std::set<NodeId>& elems_of(NodeId n) const;
};

struct MissingDenotation : Error {
    explicit MissingDenotation(const std::string& c)
        : Error("no denotation node for membership-LHS concept " + c) {}
};

struct CheckReport {
    struct Entry {
        Axiom axiom;
        bool satisfied;
        std::string witness;  // empty when satisfied
    };
    std::vector<Entry> entries;
    bool all_satisfied() const;
    std::string summary() const;
};

// Extension C^I ⊆ pool.  Pow(C) = {x ∈ pool : elems(x) ⊆ C^I}; unknown
// concept names evaluate to ∅, unknown roles to the empty relation; unknown
// individuals (Nominal) are an error.
std::set<NodeId> eval_concept(const Interpretation& I, const ConceptPtr& C);

CheckReport check_kb(const Interpretation& I, const KnowledgeBase& K);
bool check_axiom(const Interpretation& I, const Axiom& ax,
                 std::string* witness = nullptr);
bool check_query(const Interpretation& I, const Query& F);

// Structural invariants: atoms empty, elems/map values within the pool,
// individuals map to atoms, denotation coherence.  Violations are returned,
// not thrown.
std::vector<std::string> validate_interpretation(const Interpretation& I,
                                                 bool require_atom_individuals = true);

// JSON model file format (bit-exact keys — see External Interfaces).
std::string to_json(const Interpretation& I);
Interpretation interpretation_from_json(const std::string& text);

// DOT export of the membership structure of a model.
std::string to_dot(const Interpretation& I);

}  // namespace alcomega

#endif  // ALCOMEGA_MODEL_HPP
