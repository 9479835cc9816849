#include "alcomega/model.hpp"

#include <algorithm>
#include <sstream>

#include "alcomega/parser.hpp"
#include "alcomega/printer.hpp"
#include "json.hpp"

namespace alcomega {

bool Interpretation::in_pool(NodeId n) const {
    return std::binary_search(pool.begin(), pool.end(), n);
}

const std::set<NodeId>& Interpretation::elems_of(NodeId n) const {
    static const std::set<NodeId> empty;
    auto it = elems.find(n);
    return it == elems.end() ? empty : it->second;
}

bool CheckReport::all_satisfied() const {
    for (const auto& e : entries)
        if (!e.satisfied) return false;
    return true;
}

std::string CheckReport::summary() const {
    std::ostringstream out;
    for (const auto& e : entries) {
        out << (e.satisfied ? "  ok    " : "  FAIL  ") << render(e.axiom);
        if (!e.satisfied && !e.witness.empty()) out << "   # " << e.witness;
        out << "\n";
    }
    return out.str();
}

// ── Concept evaluation ──────────────────────────────────────────────────────

namespace {

std::set<NodeId> pool_set(const Interpretation& I) {
    return std::set<NodeId>(I.pool.begin(), I.pool.end());
}

// Neighbors of x along a (possibly inverted / negated) role.
std::set<NodeId> role_successors(const Interpretation& I, const Role& r,
                                 NodeId x) {
    std::set<NodeId> out;
    auto it = I.roles.find(r.name);
    const std::set<std::pair<NodeId, NodeId>>* pairs =
        it == I.roles.end() ? nullptr : &it->second;
    if (r.negated) {
        // All y with (x,y) not in the base relation.
        for (NodeId y : I.pool) {
            bool linked = pairs && pairs->count({x, y});
            if (!linked) out.insert(y);
        }
        return out;
    }
    if (!pairs) return out;
    for (const auto& [a, b] : *pairs) {
        if (!r.inverted && a == x) out.insert(b);
        if (r.inverted && b == x) out.insert(a);
    }
    return out;
}

}  // namespace

std::set<NodeId> eval_concept(const Interpretation& I, const ConceptPtr& C) {
    switch (C->kind) {
        case ConceptKind::Top:
            return pool_set(I);
        case ConceptKind::Bot:
            return {};
        case ConceptKind::Name: {
            auto it = I.concepts.find(C->name);
            return it == I.concepts.end() ? std::set<NodeId>{} : it->second;
        }
        case ConceptKind::Nominal: {
            auto it = I.individuals.find(C->name);
            if (it == I.individuals.end())
                throw Error("unknown individual in nominal: " + C->name);
            return {it->second};
        }
        case ConceptKind::Not: {
            std::set<NodeId> sub = eval_concept(I, C->lhs), out;
            for (NodeId n : I.pool)
                if (!sub.count(n)) out.insert(n);
            return out;
        }
        case ConceptKind::And: {
            std::set<NodeId> l = eval_concept(I, C->lhs),
                             r = eval_concept(I, C->rhs), out;
            std::set_intersection(l.begin(), l.end(), r.begin(), r.end(),
                                  std::inserter(out, out.begin()));
            return out;
        }
        case ConceptKind::Or: {
            std::set<NodeId> out = eval_concept(I, C->lhs);
            std::set<NodeId> r = eval_concept(I, C->rhs);
            out.insert(r.begin(), r.end());
            return out;
        }
        case ConceptKind::Diff: {
            std::set<NodeId> l = eval_concept(I, C->lhs),
                             r = eval_concept(I, C->rhs), out;
            std::set_difference(l.begin(), l.end(), r.begin(), r.end(),
                                std::inserter(out, out.begin()));
            return out;
        }
        case ConceptKind::Pow: {
            std::set<NodeId> sub = eval_concept(I, C->lhs), out;
            for (NodeId n : I.pool) {
                const auto& es = I.elems_of(n);
                if (std::includes(sub.begin(), sub.end(), es.begin(), es.end()))
                    out.insert(n);
            }
            return out;
        }
        case ConceptKind::Forall: {
            std::set<NodeId> sub = eval_concept(I, C->lhs), out;
            for (NodeId x : I.pool) {
                bool all = true;
                for (NodeId y : role_successors(I, C->role, x))
                    if (!sub.count(y)) { all = false; break; }
                if (all) out.insert(x);
            }
            return out;
        }
        case ConceptKind::Exists: {
            std::set<NodeId> sub = eval_concept(I, C->lhs), out;
            for (NodeId x : I.pool) {
                for (NodeId y : role_successors(I, C->role, x))
                    if (sub.count(y)) { out.insert(x); break; }
            }
            return out;
        }
    }
    return {};
}

// ── KB / query checking ─────────────────────────────────────────────────────

namespace {

// Denotation lookup with coherence check: the node must exist and its elems
// must equal eval(C) — otherwise the model does not witness "C^I ∈ Δ".
bool denotation_of(const Interpretation& I, const ConceptPtr& C, NodeId* out,
                   std::string* witness) {
    std::string key = render(C);
    auto it = I.denotations.find(key);
    if (it == I.denotations.end()) {
        if (witness) *witness = "no denotation for " + key;
        return false;
    }
    NodeId n = it->second;
    if (!I.in_pool(n)) {
        if (witness)
            *witness = "denotation of " + key + " outside the pool";
        return false;
    }
    if (I.elems_of(n) != eval_concept(I, C)) {
        if (witness)
            *witness = "denotation of " + key + " has elems != eval";
        return false;
    }
    *out = n;
    return true;
}

}  // namespace

bool check_axiom(const Interpretation& I, const Axiom& ax,
                 std::string* witness) {
    switch (ax.kind) {
        case AxiomKind::Inclusion: {
            std::set<NodeId> l = eval_concept(I, ax.c),
                             r = eval_concept(I, ax.d);
            for (NodeId n : l)
                if (!r.count(n)) {
                    if (witness)
                        *witness = "node " + std::to_string(n) +
                                   " is in the LHS but not the RHS";
                    return false;
                }
            return true;
        }
        case AxiomKind::Assertion: {
            auto it = I.individuals.find(ax.a);
            if (it == I.individuals.end()) {
                if (witness) *witness = "unknown individual " + ax.a;
                return false;
            }
            if (eval_concept(I, ax.c).count(it->second)) return true;
            if (witness)
                *witness = ax.a + " (node " + std::to_string(it->second) +
                           ") is not in the concept's extension";
            return false;
        }
        case AxiomKind::RoleAssertion: {
            auto a = I.individuals.find(ax.a);
            auto b = I.individuals.find(ax.b);
            if (a == I.individuals.end() || b == I.individuals.end()) {
                if (witness) *witness = "unknown individual";
                return false;
            }
            auto r = I.roles.find(ax.role);
            bool ok = r != I.roles.end() &&
                      r->second.count({a->second, b->second});
            if (!ok && witness) *witness = "pair not in role " + ax.role;
            return ok;
        }
        case AxiomKind::ConceptMembership: {
            NodeId n;
            if (!denotation_of(I, ax.c, &n, witness)) return false;
            if (eval_concept(I, ax.d).count(n)) return true;
            if (witness)
                *witness = "denotation node " + std::to_string(n) +
                           " not in the RHS extension";
            return false;
        }
        case AxiomKind::RoleMembership: {
            NodeId n, m;
            if (!denotation_of(I, ax.c, &n, witness)) return false;
            if (!denotation_of(I, ax.d, &m, witness)) return false;
            auto r = I.roles.find(ax.role);
            bool ok = r != I.roles.end() && r->second.count({n, m});
            if (!ok && witness)
                *witness = "denotation pair not in role " + ax.role;
            return ok;
        }
    }
    return false;
}

CheckReport check_kb(const Interpretation& I, const KnowledgeBase& K) {
    CheckReport report;
    for (const auto& ax : K.all_axioms()) {
        CheckReport::Entry e;
        e.axiom = ax;
        e.satisfied = check_axiom(I, ax, &e.witness);
        report.entries.push_back(std::move(e));
    }
    return report;
}

bool check_query(const Interpretation& I, const Query& F) {
    return check_axiom(I, F, nullptr);
}

// ── Validation ──────────────────────────────────────────────────────────────

std::vector<std::string> validate_interpretation(const Interpretation& I,
                                                 bool require_atom_individuals) {
    std::vector<std::string> v;
    std::set<NodeId> pool(I.pool.begin(), I.pool.end());
    if (pool.size() != I.pool.size()) v.push_back("PoolDuplicates");
    for (NodeId n : I.pool)
        if (!I.elems.count(n)) v.push_back("ElemsNotTotal: node " + std::to_string(n));
    for (const auto& [n, es] : I.elems) {
        if (!pool.count(n))
            v.push_back("ElemsKeyOutsidePool: " + std::to_string(n));
        for (NodeId e : es)
            if (!pool.count(e))
                v.push_back("ElemOutsidePool: " + std::to_string(n) + "->" +
                            std::to_string(e));
    }
    for (NodeId a : I.atoms) {
        if (!pool.count(a)) v.push_back("AtomOutsidePool: " + std::to_string(a));
        else if (!I.elems_of(a).empty())
            v.push_back("AtomNotEmpty: " + std::to_string(a));
    }
    for (const auto& [name, ext] : I.concepts)
        for (NodeId n : ext)
            if (!pool.count(n))
                v.push_back("ConceptOutsidePool: " + name);
    for (const auto& [name, rel] : I.roles)
        for (const auto& [a, b] : rel)
            if (!pool.count(a) || !pool.count(b))
                v.push_back("RoleOutsidePool: " + name);
    for (const auto& [name, n] : I.individuals) {
        if (!pool.count(n)) {
            v.push_back("IndividualOutsidePool: " + name);
            continue;
        }
        if (require_atom_individuals && !I.atoms.count(n))
            v.push_back("IndividualNotAtom: " + name);
    }
    for (const auto& [key, n] : I.denotations) {
        if (!pool.count(n)) {
            v.push_back("DenotationOutsidePool: " + key);
            continue;
        }
        // The key is the canonical rendering of the concept; re-parse it to
        // check the coherence requirement elems(n) = eval(C).
        try {
            ParseOptions opts;
            opts.allow_reserved = true;
            ConceptPtr c = parse_concept(key, opts);
            if (I.elems_of(n) != eval_concept(I, c))
                v.push_back("DenotationMismatch: " + key);
        } catch (const Error&) {
            v.push_back("DenotationKeyUnparsable: " + key);
        }
    }
    return v;
}

// ── JSON serialization ──────────────────────────────────────────────────────

std::string to_json(const Interpretation& I) {
    nlohmann::ordered_json j;
    j["atoms"] = I.atoms;
    j["nodes"] = I.pool;
    nlohmann::ordered_json elems = nlohmann::ordered_json::object();
    for (NodeId n : I.pool) elems[std::to_string(n)] = I.elems_of(n);
    j["elems"] = std::move(elems);
    nlohmann::ordered_json concepts = nlohmann::ordered_json::object();
    for (const auto& [name, ext] : I.concepts) concepts[name] = ext;
    j["concepts"] = std::move(concepts);
    nlohmann::ordered_json roles = nlohmann::ordered_json::object();
    for (const auto& [name, rel] : I.roles) {
        nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
        for (const auto& [a, b] : rel) pairs.push_back({a, b});
        roles[name] = std::move(pairs);
    }
    j["roles"] = std::move(roles);
    nlohmann::ordered_json inds = nlohmann::ordered_json::object();
    for (const auto& [name, n] : I.individuals) inds[name] = n;
    j["individuals"] = std::move(inds);
    nlohmann::ordered_json denot = nlohmann::ordered_json::object();
    for (const auto& [key, n] : I.denotations) denot[key] = n;
    j["denotations"] = std::move(denot);
    return j.dump(2) + "\n";
}

Interpretation interpretation_from_json(const std::string& text) try {
    nlohmann::json j = nlohmann::json::parse(text);
    Interpretation I;
    for (const auto& n : j.at("nodes")) I.pool.push_back(n.get<NodeId>());
    std::sort(I.pool.begin(), I.pool.end());
    for (const auto& n : j.at("atoms")) I.atoms.insert(n.get<NodeId>());
    for (auto it = j.at("elems").begin(); it != j.at("elems").end(); ++it) {
        NodeId n = std::stoi(it.key());
        auto& es = I.elems[n];
        for (const auto& e : it.value()) es.insert(e.get<NodeId>());
    }
    for (NodeId n : I.pool) I.elems[n];
    if (j.contains("concepts"))
        for (auto it = j["concepts"].begin(); it != j["concepts"].end(); ++it)
            for (const auto& n : it.value())
                I.concepts[it.key()].insert(n.get<NodeId>());
    if (j.contains("roles"))
        for (auto it = j["roles"].begin(); it != j["roles"].end(); ++it)
            for (const auto& p : it.value())
                I.roles[it.key()].insert({p.at(0).get<NodeId>(),
                                          p.at(1).get<NodeId>()});
    if (j.contains("individuals"))
        for (auto it = j["individuals"].begin(); it != j["individuals"].end();
             ++it)
            I.individuals[it.key()] = it.value().get<NodeId>();
    if (j.contains("denotations"))
        for (auto it = j["denotations"].begin(); it != j["denotations"].end();
             ++it)
            I.denotations[it.key()] = it.value().get<NodeId>();
    return I;
} catch (const Error&) {
    throw;
} catch (const std::exception& e) {  // json parse/type errors, bad keys
    throw Error(std::string("model JSON: ") + e.what());
}

std::string to_dot(const Interpretation& I) {
    MembershipGraph g;
    for (NodeId n : I.pool) {
        g.nodes.insert(n);
        g.succ[n] = I.elems_of(n);
    }
    int counter = 0;
    for (NodeId a : I.atoms) g.atoms[a] = "a" + std::to_string(counter++);
    std::map<std::string, NodeId> labels;
    for (const auto& [name, n] : I.individuals) labels[name] = n;
    for (const auto& [key, n] : I.denotations) labels["[" + key + "]"] = n;
    return to_dot(g, &labels);
}

}  // namespace alcomega
