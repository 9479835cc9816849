// ============================================================================
// alcomega/hyperset.hpp — finite hypersets as membership graphs
// ============================================================================
//
// Hypersets of HF^{1/2}(atoms) are finite pointed graphs: an edge x→y reads
// "y is an element of x".  Cycles are allowed (non-well-founded sets); a
// well-foundedness flag reports whether the solved system was acyclic (HF0).
//
// Node identity is explicit and id-based.  Extensional equality is the
// *computed* bisimilarity relation, never an implicit identification — the
// ambient theory is non-extensional, and the duplication device of the
// completeness proofs is realized as per-node tags that block bisimulation
// merging.
//
// Atom labels are interned strings "a0", "a1", ... allocated by a
// deterministic counter so output is reproducible.
// ============================================================================

#ifndef ALCOMEGA_HYPERSET_HPP
#define ALCOMEGA_HYPERSET_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "alcomega/ast.hpp"

namespace alcomega {

using NodeId = int;

struct MembershipGraph {
    std::set<NodeId> nodes;
    // succ[x] = elements of x (edge x→y means y ∈ x).
    std::map<NodeId, std::set<NodeId>> succ;
    // Atom nodes (injectively labelled); atoms have no successors.
    std::map<NodeId, std::string> atoms;
    // Optional distinctness tags (the duplication device).
    std::map<NodeId, std::string> tags;

    const std::set<NodeId>& successors(NodeId n) const;
};

struct EquationSystem {
    struct Item {
        bool is_atom;       // atom label vs. variable reference
        std::string text;
    };
    std::vector<std::string> variables;            // declaration order
    std::map<std::string, std::vector<Item>> rhs;  // total on variables
};

struct UndeclaredVariable : Error {
    explicit UndeclaredVariable(const std::string& v)
        : Error("undeclared variable on a right-hand side: " + v) {}
};

struct UnknownNode : Error {
    explicit UnknownNode(NodeId n)
        : Error("unknown node id " + std::to_string(n)) {}
};

struct AtomWithSuccessors : Error {
    explicit AtomWithSuccessors(NodeId n)
        : Error("atom_pick node has e-successors: " + std::to_string(n)) {}
};

struct Bisimulation {
    std::map<NodeId, int> partition;  // node → class id
    int class_count = 0;
};

struct SolveResult {
    MembershipGraph graph;
    std::map<std::string, NodeId> var_node;
    bool well_founded;  // dependency graph acyclic (HF0)
};

// Solve a system of set equations.  One node per variable plus one per atom
// label; the result is canonicalized by bisimulation quotient unless
// keep_duplicates is set.
SolveResult solve_equations(const EquationSystem& sys,
                            bool keep_duplicates = false);

// Coarsest bisimulation respecting atom labels and tags, by partition
// refinement; class ids are numbered by smallest member node id.
Bisimulation bisimulation_partition(const MembershipGraph& g);

// Quotient a graph by its bisimulation partition (used by the solver).
// Returns the quotient plus the node → representative map.
std::pair<MembershipGraph, std::map<NodeId, NodeId>> quotient(
    const MembershipGraph& g, const Bisimulation& bis);

// Elements of the transitive closure of n (successors, their successors, ...;
// n itself only if reachable from itself).
std::set<NodeId> transitive_closure(const MembershipGraph& g, NodeId n);

// Graph reading of "universe is a transitive set": every successor of a
// universe node is in the universe.
bool is_transitive(const MembershipGraph& g, const std::set<NodeId>& universe);

// The Mostowski-style collapse M of the completeness constructions:
// M(d) = { M(d') : (d,d') ∈ e_edges }, atom_pick nodes become fresh atoms.
// With duplicate_tags=true every node gets a distinct tag, making M a
// bijection (the duplication footnote of the proofs); otherwise the result
// is canonicalized by bisimulation.
struct CollapseResult {
    MembershipGraph graph;
    std::map<NodeId, NodeId> m;  // domain node → collapsed node
};
CollapseResult mostowski_collapse(
    const std::set<NodeId>& domain,
    const std::set<std::pair<NodeId, NodeId>>& e_edges,
    const std::set<NodeId>& atom_pick, bool duplicate_tags = true);

// Equation-file front end: one `var = { item, ... }` per line, items are
// variables or quoted atom literals ('a0', 'a1', ...).
EquationSystem parse_equations(const std::string& text);

// DOT export (atoms as boxes, tags as labels).
std::string to_dot(const MembershipGraph& g,
                   const std::map<std::string, NodeId>* var_node = nullptr);

}  // namespace alcomega

#endif  // ALCOMEGA_HYPERSET_HPP
