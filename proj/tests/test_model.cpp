// ============================================================================
// tests/test_model.cpp — membership-graph interpretations and the checker
// ============================================================================
//
// The distinguishing semantic facts exercised here:
//
//   * Pow is evaluated pool-relatively: Pow(C)^I = {x : elems(x) ⊆ C^I}, so
//     every element-less node (atoms included) belongs to every Pow — in
//     particular Pow(Bot)^I is exactly the element-less nodes.
//   * Membership axioms are about node identity, not extension: C ∈ D holds
//     iff the *denotation node* of C lies in D^I, so two concepts with equal
//     extensions can differ on memberships (non-extensionality).
// ============================================================================

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "alcomega/model.hpp"
#include "alcomega/parser.hpp"
#include "alcomega/printer.hpp"

using namespace alcomega;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Interpretation five_node() {
    return interpretation_from_json(slurp("data/five_node.json"));
}

// The intended 3-node model of the eagle KB: harry's atom (0), the Eagle
// set {harry} (1), and the empty PolarCreature⊓Bear set (2).
Interpretation eagle_model() {
    Interpretation I;
    I.pool = {0, 1, 2};
    I.elems[0] = {};
    I.elems[1] = {0};
    I.elems[2] = {};
    I.atoms = {0};
    I.concepts["Eagle"] = {0};
    I.concepts["CannotHunt"] = {0};
    I.concepts["RedListSpecies"] = {1, 2};
    I.individuals["harry"] = 0;
    I.denotations["Eagle"] = 1;
    I.denotations["PolarCreature and Bear"] = 2;
    return I;
}

}  // namespace

TEST_CASE("power-set evaluation on the five-node model") {
    Interpretation I = five_node();
    REQUIRE(I.pool == std::vector<NodeId>{0, 1, 2, 3, 4});

    // Pow(Bot) is exactly the element-less nodes (the three atoms).
    CHECK(eval_concept(I, pow(bot())) == std::set<NodeId>{0, 1, 2});

    // Every node's elements lie in the pool, so by the uniform pool-relative
    // rule Pow(Top) is the whole domain — the element-less atoms included.
    CHECK(eval_concept(I, pow(top())) == std::set<NodeId>{0, 1, 2, 3, 4});
    CHECK(eval_concept(I, top()) == std::set<NodeId>{0, 1, 2, 3, 4});

    // Pow of a proper subset: elems ⊆ {0,1} holds for atoms and node 3.
    Interpretation J = I;
    J.concepts["A"] = {0, 1};
    CHECK(eval_concept(J, pow(name("A"))) == std::set<NodeId>{0, 1, 2, 3});
}

TEST_CASE("boolean and unknown-name evaluation") {
    Interpretation I = five_node();
    CHECK(eval_concept(I, name("Nowhere")).empty());
    CHECK(eval_concept(I, not_(bot())) == std::set<NodeId>(I.pool.begin(),
                                                           I.pool.end()));
    I.concepts["A"] = {0, 3};
    I.concepts["B"] = {3, 4};
    CHECK(eval_concept(I, and_(name("A"), name("B"))) == std::set<NodeId>{3});
    CHECK(eval_concept(I, or_(name("A"), name("B"))) ==
          std::set<NodeId>{0, 3, 4});
    CHECK(eval_concept(I, diff(name("A"), name("B"))) == std::set<NodeId>{0});
}

TEST_CASE("role quantifiers, inverse roles and nominals share one evaluator") {
    Interpretation I;
    I.pool = {0, 1, 2};
    I.elems[0] = I.elems[1] = I.elems[2] = {};
    I.atoms = {0, 1, 2};
    I.roles["r"] = {{0, 1}, {0, 2}};
    I.concepts["A"] = {1};
    I.individuals["b"] = 1;

    Role r{"r", false, false};
    Role rinv{"r", true, false};
    CHECK(eval_concept(I, exists(r, name("A"))) == std::set<NodeId>{0});
    CHECK(eval_concept(I, forall(r, name("A"))) == std::set<NodeId>{1, 2});
    CHECK(eval_concept(I, exists(rinv, top())) == std::set<NodeId>{1, 2});
    CHECK(eval_concept(I, nominal("b")) == std::set<NodeId>{1});
    CHECK_THROWS_AS(eval_concept(I, nominal("nobody")), Error);
}

TEST_CASE("the eagle model satisfies its knowledge base") {
    Interpretation I = eagle_model();
    KnowledgeBase K = parse_kb(slurp("data/eagle.kb"));
    CheckReport rep = check_kb(I, K);
    CHECK(rep.all_satisfied());
    CHECK(check_query(I, parse_query("CannotHunt(harry).")));
    CHECK_FALSE(check_query(I, parse_query("Bot(harry).")));
}

TEST_CASE("an empty knowledge base is satisfied by anything") {
    KnowledgeBase empty;
    CHECK(check_kb(five_node(), empty).all_satisfied());
}

TEST_CASE("denotation coherence is enforced by the checker") {
    Interpretation I = eagle_model();
    KnowledgeBase K = parse_kb(slurp("data/eagle.kb"));
    // Break the Eagle denotation: its elems no longer equal eval(Eagle).
    I.elems[1] = {};
    CheckReport rep = check_kb(I, K);
    CHECK_FALSE(rep.all_satisfied());
    bool flagged = false;
    for (const auto& e : rep.entries)
        if (!e.satisfied && e.witness.find("elems != eval") != std::string::npos)
            flagged = true;
    CHECK(flagged);
}

TEST_CASE("a missing denotation falsifies the membership") {
    Interpretation I = eagle_model();
    I.denotations.erase("Eagle");
    CHECK_FALSE(check_axiom(
        I, Axiom::concept_membership(name("Eagle"), name("RedListSpecies"))));
}

TEST_CASE("memberships depend on the denotation node, not the extension") {
    // Two nodes with identical elems {0}; only node 1 is in RedListSpecies.
    Interpretation I;
    I.pool = {0, 1, 2};
    I.elems[0] = {};
    I.elems[1] = {0};
    I.elems[2] = {0};
    I.atoms = {0};
    I.concepts["Eagle"] = {0};
    I.concepts["Aquila"] = {0};
    I.concepts["RedListSpecies"] = {1};
    I.denotations["Eagle"] = 1;
    I.denotations["Aquila"] = 2;

    Axiom eagle_in =
        Axiom::concept_membership(name("Eagle"), name("RedListSpecies"));
    Axiom aquila_in =
        Axiom::concept_membership(name("Aquila"), name("RedListSpecies"));
    CHECK(check_axiom(I, eagle_in));
    CHECK_FALSE(check_axiom(I, aquila_in));
    // Same extensions, opposite verdicts: membership is non-extensional.
    CHECK(eval_concept(I, name("Eagle")) == eval_concept(I, name("Aquila")));
}

TEST_CASE("structural validation reports violations without throwing") {
    Interpretation I = eagle_model();
    CHECK(validate_interpretation(I).empty());

    Interpretation bad = I;
    bad.elems[0] = {1};  // atom with an element
    auto v = validate_interpretation(bad);
    CHECK_FALSE(v.empty());

    bad = I;
    bad.concepts["Eagle"] = {0, 2};  // now elems(denot) != eval
    v = validate_interpretation(bad);
    CHECK_FALSE(v.empty());

    bad = I;
    bad.individuals["harry"] = 1;  // individuals must map to atoms
    CHECK_FALSE(validate_interpretation(bad).empty());
    // The requirement is waivable for intermediate (lifted) structures.
    CHECK(validate_interpretation(bad, false).empty());
}

TEST_CASE("JSON serialization round-trips bit-exactly") {
    Interpretation I = eagle_model();
    std::string j = to_json(I);
    Interpretation back = interpretation_from_json(j);
    CHECK(to_json(back) == j);
    CHECK(back.pool == I.pool);
    CHECK(back.elems == I.elems);
    CHECK(back.atoms == I.atoms);
    CHECK(back.concepts == I.concepts);
    CHECK(back.individuals == I.individuals);
    CHECK(back.denotations == I.denotations);

    // The shipped file parses to the documented shape.
    Interpretation five = five_node();
    CHECK(five.atoms == std::set<NodeId>{0, 1, 2});
    CHECK(five.elems_of(3) == std::set<NodeId>{0, 1});
    CHECK(five.elems_of(4) == std::set<NodeId>{0, 2});
}

TEST_CASE("DOT export of a model shows membership edges") {
    std::string dot = to_dot(five_node());
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
}
