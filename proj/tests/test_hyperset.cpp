// ============================================================================
// tests/test_hyperset.cpp — equation solving, bisimulation, collapse
// ============================================================================
//
// The kernel's contract is graph-theoretic: solutions of set equations are
// membership graphs canonical up to bisimilarity, tags are the only thing
// that can keep extensionally equal nodes apart, and the collapse map M is
// exactly the quotient construction with fresh atoms at the picked nodes.
// ============================================================================

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "alcomega/hyperset.hpp"

using namespace alcomega;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SolveResult solve_file(const std::string& path) {
    return solve_equations(parse_equations(slurp(path)));
}

// Random graph over `n` nodes: arbitrary edges, a few atom leaves, no tags.
MembershipGraph random_graph(std::mt19937& rng, int n) {
    MembershipGraph g;
    for (int i = 0; i < n; ++i) g.nodes.insert(i);
    std::uniform_int_distribution<int> coin(0, 3);
    int atom_counter = 0;
    for (int i = 0; i < n; ++i) {
        if (coin(rng) == 0) {
            g.atoms[i] = "a" + std::to_string(atom_counter++);
            continue;  // atoms have no successors
        }
        auto& s = g.succ[i];
        for (int j = 0; j < n; ++j)
            if (coin(rng) == 0) s.insert(j);
    }
    return g;
}

// Disjoint union with the second graph's ids shifted by `offset`.
MembershipGraph disjoint_union(const MembershipGraph& a,
                               const MembershipGraph& b, int offset) {
    MembershipGraph u = a;
    for (NodeId n : b.nodes) u.nodes.insert(n + offset);
    for (const auto& [n, s] : b.succ) {
        auto& t = u.succ[n + offset];
        for (NodeId m : s) t.insert(m + offset);
    }
    for (const auto& [n, l] : b.atoms) u.atoms[n + offset] = l;
    for (const auto& [n, t] : b.tags) u.tags[n + offset] = t;
    return u;
}

}  // namespace

TEST_CASE("the system x1={x2,x3}, x2={x3}, x3={} is well-founded") {
    SolveResult r = solve_file("data/hf0.eq");
    CHECK(r.well_founded);
    REQUIRE(r.var_node.count("x1"));
    NodeId x1 = r.var_node.at("x1"), x2 = r.var_node.at("x2"),
           x3 = r.var_node.at("x3");
    CHECK(r.graph.successors(x3).empty());
    CHECK(r.graph.successors(x2) == std::set<NodeId>{x3});
    CHECK(r.graph.successors(x1) == std::set<NodeId>{x2, x3});
    CHECK(r.graph.atoms.empty());
    // The point's transitive closure is exactly {∅, {∅}}.
    CHECK(transitive_closure(r.graph, x1) == std::set<NodeId>{x2, x3});
}

TEST_CASE("the system y={∅,y} is a 2-node cycle, not well-founded") {
    SolveResult r = solve_file("data/omega_loop.eq");
    CHECK_FALSE(r.well_founded);
    CHECK(r.graph.nodes.size() == 2);
    NodeId y = r.var_node.at("y"), empty = r.var_node.at("empty");
    CHECK(r.graph.successors(y) == std::set<NodeId>{empty, y});
    CHECK(r.graph.successors(empty).empty());
    // y reaches itself through the cycle.
    CHECK(transitive_closure(r.graph, y).count(y) == 1);
}

TEST_CASE("the system y={a,b,x}, x={b,y} solves to the 4-node cyclic graph") {
    SolveResult r = solve_file("data/fig1.eq");
    CHECK_FALSE(r.well_founded);
    CHECK(r.graph.nodes.size() == 4);
    NodeId y = r.var_node.at("y"), x = r.var_node.at("x");
    CHECK(r.graph.successors(y).size() == 3);
    CHECK(r.graph.successors(x).size() == 2);
    CHECK(r.graph.successors(y).count(x) == 1);
    CHECK(r.graph.successors(x).count(y) == 1);
    CHECK(r.graph.atoms.size() == 2);

    // y's transitive closure contains everything, y itself included.
    CHECK(transitive_closure(r.graph, y) ==
          std::set<NodeId>(r.graph.nodes.begin(), r.graph.nodes.end()));

    // All four nodes are pairwise non-bisimilar.
    Bisimulation bis = bisimulation_partition(r.graph);
    CHECK(bis.class_count == 4);

    // {y, a, b} is not transitive: x ∈ y but x is not in the set.
    NodeId a = *r.graph.successors(x).begin() == y
                   ? *std::next(r.graph.successors(x).begin())
                   : *r.graph.successors(x).begin();
    std::set<NodeId> ys = r.graph.successors(y);
    ys.erase(x);
    std::set<NodeId> universe = ys;
    universe.insert(y);
    CHECK_FALSE(is_transitive(r.graph, universe));
    CHECK(is_transitive(r.graph, r.graph.nodes));
    (void)a;
}

TEST_CASE("a sub-collection missing an element's element is not transitive") {
    // Universe {a, b, c, p} with p = {a, b}: dropping b breaks transitivity.
    MembershipGraph g;
    for (int i = 0; i < 4; ++i) g.nodes.insert(i);
    g.atoms[0] = "a";
    g.atoms[1] = "b";
    g.atoms[2] = "c";
    g.succ[3] = {0, 1};
    CHECK(is_transitive(g, {0, 1, 2, 3}));
    CHECK_FALSE(is_transitive(g, {0, 2, 3}));  // b = 1 is missing
}

TEST_CASE("undeclared right-hand-side variables are rejected") {
    CHECK_THROWS_AS(solve_equations(parse_equations("x = { y }\n")),
                    UndeclaredVariable);
}

TEST_CASE("bisimilarity: empty extensions merge unless tagged apart") {
    MembershipGraph g;
    g.nodes = {0, 1};
    Bisimulation bis = bisimulation_partition(g);
    CHECK(bis.class_count == 1);
    CHECK(bis.partition.at(0) == bis.partition.at(1));

    g.tags[0] = "t0";
    g.tags[1] = "t1";
    bis = bisimulation_partition(g);
    CHECK(bis.class_count == 2);
}

TEST_CASE("bisimilarity respects atom labels") {
    MembershipGraph g;
    g.nodes = {0, 1};
    g.atoms[0] = "a0";
    g.atoms[1] = "a1";
    Bisimulation bis = bisimulation_partition(g);
    CHECK(bis.class_count == 2);
}

TEST_CASE("collapse with no edges yields distinct atoms at picked nodes") {
    CollapseResult r = mostowski_collapse({10, 20}, {}, {10, 20});
    CHECK(r.graph.nodes.size() == 2);
    CHECK(r.graph.atoms.size() == 2);
    CHECK(r.m.at(10) != r.m.at(20));
    CHECK(r.graph.atoms.at(r.m.at(10)) != r.graph.atoms.at(r.m.at(20)));
}

TEST_CASE("collapse of a 2-chain is the singleton of an atom") {
    CollapseResult r = mostowski_collapse({0, 1}, {{0, 1}}, {1});
    CHECK(r.graph.successors(r.m.at(0)) == std::set<NodeId>{r.m.at(1)});
    CHECK(r.graph.atoms.count(r.m.at(1)) == 1);
    CHECK(r.graph.successors(r.m.at(1)).empty());
}

TEST_CASE("collapse of a self-loop is bisimilar to the solution of y={y}") {
    CollapseResult r = mostowski_collapse({0}, {{0, 0}}, {},
                                          /*duplicate_tags=*/false);
    SolveResult s = solve_equations(parse_equations("y = { y }\n"));
    CHECK_FALSE(s.well_founded);
    MembershipGraph u = disjoint_union(r.graph, s.graph, 100);
    Bisimulation bis = bisimulation_partition(u);
    CHECK(bis.partition.at(r.m.at(0)) ==
          bis.partition.at(s.var_node.at("y") + 100));
}

TEST_CASE("atom_pick nodes with successors are rejected") {
    CHECK_THROWS_AS(mostowski_collapse({0, 1}, {{0, 1}}, {0}),
                    AtomWithSuccessors);
}

TEST_CASE("duplication tags make the collapse injective") {
    // Two extensionally equal leaves: without tags they merge, with the
    // default duplication they stay apart.
    std::set<NodeId> dom{0, 1, 2};
    std::set<std::pair<NodeId, NodeId>> edges{{0, 1}, {0, 2}};
    CollapseResult dup = mostowski_collapse(dom, edges, {});
    CHECK(dup.graph.nodes.size() == 3);
    CHECK(dup.m.at(1) != dup.m.at(2));
    CollapseResult merged = mostowski_collapse(dom, edges, {}, false);
    CHECK(merged.graph.nodes.size() == 2);
    CHECK(merged.m.at(1) == merged.m.at(2));
}

TEST_CASE("solved systems are canonical: quotient is bisimulation-free") {
    std::mt19937 rng(97);
    std::uniform_int_distribution<int> size(1, 8);
    for (int trial = 0; trial < 1000; ++trial) {
        MembershipGraph g = random_graph(rng, size(rng));
        Bisimulation bis = bisimulation_partition(g);
        auto [q, rep] = quotient(g, bis);

        // Canonicity: the quotient has no bisimilar pair left.
        Bisimulation again = bisimulation_partition(q);
        CHECK(again.class_count == static_cast<int>(q.nodes.size()));

        // Soundness: every node is bisimilar to its representative.
        MembershipGraph u = disjoint_union(g, q, 1000);
        Bisimulation joint = bisimulation_partition(u);
        for (NodeId n : g.nodes)
            CHECK(joint.partition.at(n) == joint.partition.at(rep.at(n) + 1000));
    }
}

TEST_CASE("equation solving canonicalizes duplicate definitions") {
    // Two variables with the same extension collapse to one node ...
    SolveResult r = solve_equations(
        parse_equations("x = { 'a' }\ny = { 'a' }\n"));
    CHECK(r.var_node.at("x") == r.var_node.at("y"));
    // ... unless duplicates are kept.
    SolveResult k = solve_equations(
        parse_equations("x = { 'a' }\ny = { 'a' }\n"), true);
    CHECK(k.var_node.at("x") != k.var_node.at("y"));
}

TEST_CASE("DOT export names variables and marks atoms") {
    SolveResult r = solve_file("data/fig1.eq");
    std::string dot = to_dot(r.graph, &r.var_node);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
    CHECK(dot.find("x") != std::string::npos);
    CHECK(dot.find("y") != std::string::npos);
}
