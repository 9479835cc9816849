#include "alcomega/search.hpp"

#include <map>
#include <string>
#include <vector>

#include "alcomega/printer.hpp"
#include "alcomega/sat.hpp"

namespace alcomega {

namespace {

// Shared clause-building state for one (KB, n) instance.
struct Enc {
    sat::Solver solver;
    int n;
    std::map<std::string, std::vector<int>> concept_vars;  // name → per-node
    std::map<std::string, std::vector<int>> role_vars;     // name → n*n grid
    std::map<std::string, std::vector<int>> subconcepts;   // render → per-node
    std::map<std::string, std::vector<int>> denot_vars;    // render → n+1 row
    std::map<std::string, std::vector<int>> ind_vars;      // name → per-node
    std::vector<int> e_vars;                               // n*n grid

    explicit Enc(int n_) : n(n_) {}

    std::vector<int> fresh_row(int count) {
        std::vector<int> out;
        out.reserve(count);
        for (int i = 0; i < count; ++i) out.push_back(solver.new_var());
        return out;
    }
    int& grid(std::vector<int>& g, int x, int y) { return g[x * n + y]; }

    std::vector<int>& concept_row(const std::string& name) {
        auto it = concept_vars.find(name);
        if (it != concept_vars.end()) return it->second;
        return concept_vars[name] = fresh_row(n);
    }
    std::vector<int>& role_grid(const std::string& name) {
        auto it = role_vars.find(name);
        if (it != role_vars.end()) return it->second;
        return role_vars[name] = fresh_row(n * n);
    }
    std::vector<int>& ind_row(const std::string& name) {
        auto it = ind_vars.find(name);
        if (it != ind_vars.end()) return it->second;
        auto& row = ind_vars[name] = fresh_row(n);
        // exactly one node per individual
        std::vector<int> all(row.begin(), row.end());
        solver.add_clause(all);
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                solver.add_clause({-row[x], -row[y]});
        return row;
    }

    // Literal "y is an R-successor of x"; `edges` is a plain-role grid.
    int role_lit(std::vector<int>& edges, const Role& r, int x, int y) {
        int base = r.inverted ? grid(edges, y, x) : grid(edges, x, y);
        return r.negated ? -base : base;
    }

    // v ↔ succ-condition ∀/∃ over `lit(y)` with body row `body`.
    // universal: v_x ↔ ∀y (L(x,y) → body_y)
    void define_universal(int v, int x, const std::vector<int>& body,
                          auto&& lit) {
        std::vector<int> big{v};
        for (int y = 0; y < n; ++y) {
            int L = lit(x, y);
            solver.add_clause({-v, -L, body[y]});
            int w = solver.new_var();
            solver.add_clause({-w, L});
            solver.add_clause({-w, -body[y]});
            big.push_back(w);
        }
        solver.add_clause(big);
    }
    // existential: v_x ↔ ∃y (L(x,y) ∧ body_y)
    void define_existential(int v, int x, const std::vector<int>& body,
                            auto&& lit) {
        std::vector<int> big{-v};
        for (int y = 0; y < n; ++y) {
            int L = lit(x, y);
            solver.add_clause({-L, -body[y], v});
            int w = solver.new_var();
            solver.add_clause({-w, L});
            solver.add_clause({-w, body[y]});
            big.push_back(w);
        }
        solver.add_clause(big);
    }
};

// Tseitin rows for subconcepts, shared by both encoders; `use_e` selects the
// membership-graph reading of Pow (the ALCOI dialects never contain Pow).
const std::vector<int>& encode_concept(Enc& e, const ConceptPtr& C) {
    std::string key = render(C);
    auto it = e.subconcepts.find(key);
    if (it != e.subconcepts.end()) return it->second;

    std::vector<int> row;
    switch (C->kind) {
        case ConceptKind::Top:
            row = e.fresh_row(e.n);
            for (int v : row) e.solver.add_clause({v});
            break;
        case ConceptKind::Bot:
            row = e.fresh_row(e.n);
            for (int v : row) e.solver.add_clause({-v});
            break;
        case ConceptKind::Name:
            row = e.concept_row(C->name);
            break;
        case ConceptKind::Nominal: {
            const auto& ind = e.ind_row(C->name);
            row = e.fresh_row(e.n);
            for (int x = 0; x < e.n; ++x) {
                e.solver.add_clause({-row[x], ind[x]});
                e.solver.add_clause({row[x], -ind[x]});
            }
            break;
        }
        case ConceptKind::Not: {
            const auto a = encode_concept(e, C->lhs);
            row = e.fresh_row(e.n);
            for (int x = 0; x < e.n; ++x) {
                e.solver.add_clause({-row[x], -a[x]});
                e.solver.add_clause({row[x], a[x]});
            }
            break;
        }
        case ConceptKind::And: {
            const auto a = encode_concept(e, C->lhs);
            const auto b = encode_concept(e, C->rhs);
            row = e.fresh_row(e.n);
            for (int x = 0; x < e.n; ++x) {
                e.solver.add_clause({-row[x], a[x]});
                e.solver.add_clause({-row[x], b[x]});
                e.solver.add_clause({row[x], -a[x], -b[x]});
            }
            break;
        }
        case ConceptKind::Or: {
            const auto a = encode_concept(e, C->lhs);
            const auto b = encode_concept(e, C->rhs);
            row = e.fresh_row(e.n);
            for (int x = 0; x < e.n; ++x) {
                e.solver.add_clause({row[x], -a[x]});
                e.solver.add_clause({row[x], -b[x]});
                e.solver.add_clause({-row[x], a[x], b[x]});
            }
            break;
        }
        case ConceptKind::Diff: {
            const auto a = encode_concept(e, C->lhs);
            const auto b = encode_concept(e, C->rhs);
            row = e.fresh_row(e.n);
            for (int x = 0; x < e.n; ++x) {
                e.solver.add_clause({-row[x], a[x]});
                e.solver.add_clause({-row[x], -b[x]});
                e.solver.add_clause({row[x], -a[x], b[x]});
            }
            break;
        }
        case ConceptKind::Pow: {
            const auto body = encode_concept(e, C->lhs);
            row = e.fresh_row(e.n);
            for (int x = 0; x < e.n; ++x)
                e.define_universal(row[x], x, body, [&](int a, int b) {
                    return e.grid(e.e_vars, a, b);
                });
            break;
        }
        case ConceptKind::Forall: {
            const auto body = encode_concept(e, C->lhs);
            auto& edges = e.role_grid(C->role.name);
            Role r = C->role;
            row = e.fresh_row(e.n);
            for (int x = 0; x < e.n; ++x)
                e.define_universal(row[x], x, body, [&](int a, int b) {
                    return e.role_lit(edges, r, a, b);
                });
            break;
        }
        case ConceptKind::Exists: {
            const auto body = encode_concept(e, C->lhs);
            auto& edges = e.role_grid(C->role.name);
            Role r = C->role;
            row = e.fresh_row(e.n);
            for (int x = 0; x < e.n; ++x)
                e.define_existential(row[x], x, body, [&](int a, int b) {
                    return e.role_lit(edges, r, a, b);
                });
            break;
        }
    }
    return e.subconcepts[key] = std::move(row);
}

// Denotation-choice row for a membership-LHS concept: slots 0..n-1 pick the
// denoting node, slot n means "undefined"; exactly one; coherence
// elems(slot) = eval(C).  An individual's atom is a legal denotation when
// eval(C) is empty — the coherence clauses cover that case uniformly.
const std::vector<int>& denot_row(Enc& e, const ConceptPtr& C) {
    std::string key = render(C);
    auto it = e.denot_vars.find(key);
    if (it != e.denot_vars.end()) return it->second;
    auto row = e.fresh_row(e.n + 1);
    std::vector<int> all(row.begin(), row.end());
    e.solver.add_clause(all);
    for (int i = 0; i <= e.n; ++i)
        for (int j = i + 1; j <= e.n; ++j)
            e.solver.add_clause({-row[i], -row[j]});
    const auto& ext = encode_concept(e, C);
    for (int j = 0; j < e.n; ++j) {
        for (int y = 0; y < e.n; ++y) {
            e.solver.add_clause({-row[j], -e.grid(e.e_vars, j, y), ext[y]});
            e.solver.add_clause({-row[j], e.grid(e.e_vars, j, y), -ext[y]});
        }
    }
    return e.denot_vars[key] = std::move(row);
}

}  // namespace

std::optional<Interpretation> find_model_direct(
    const KnowledgeBase& K, const std::optional<Query>& falsify, int n,
    std::uint64_t seed) {
    Signature sig = compute_signature(K.all_axioms(), falsify);
    int r = static_cast<int>(sig.individuals.size());
    if (n < 1) return std::nullopt;

    Enc e(n);
    e.e_vars = e.fresh_row(n * n);
    // Individuals choose their atom freely (distinct names may share one),
    // but the chosen node must be element-less, and — pure symmetry
    // breaking — the i-th individual may only use the first i+1 nodes.
    for (int i = 0; i < r; ++i) {
        const auto& row = e.ind_row(sig.individuals[i]);
        for (int x = 0; x < n; ++x) {
            if (x > i) {
                e.solver.add_clause({-row[x]});
                continue;
            }
            for (int y = 0; y < n; ++y)
                e.solver.add_clause({-row[x], -e.grid(e.e_vars, x, y)});
        }
    }

    auto require = [&](const Axiom& ax) {
        switch (ax.kind) {
            case AxiomKind::Inclusion: {
                const auto a = encode_concept(e, ax.c);
                const auto b = encode_concept(e, ax.d);
                for (int x = 0; x < n; ++x)
                    e.solver.add_clause({-a[x], b[x]});
                break;
            }
            case AxiomKind::Assertion: {
                const auto a = encode_concept(e, ax.c);
                const auto& ind = e.ind_row(ax.a);
                for (int x = 0; x < n; ++x)
                    e.solver.add_clause({-ind[x], a[x]});
                break;
            }
            case AxiomKind::RoleAssertion: {
                auto& g = e.role_grid(ax.role);
                const auto& ia = e.ind_row(ax.a);
                const auto& ib = e.ind_row(ax.b);
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y)
                        e.solver.add_clause(
                            {-ia[x], -ib[y], e.grid(g, x, y)});
                break;
            }
            case AxiomKind::ConceptMembership: {
                const auto dc = denot_row(e, ax.c);
                const auto ext = encode_concept(e, ax.d);
                e.solver.add_clause({-dc[n]});  // must be defined
                for (int j = 0; j < n; ++j)
                    e.solver.add_clause({-dc[j], ext[j]});
                break;
            }
            case AxiomKind::RoleMembership: {
                const auto dc = denot_row(e, ax.c);
                const auto dd = denot_row(e, ax.d);
                auto& g = e.role_grid(ax.role);
                e.solver.add_clause({-dc[n]});
                e.solver.add_clause({-dd[n]});
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        e.solver.add_clause(
                            {-dc[i], -dd[j], e.grid(g, i, j)});
                break;
            }
        }
    };
    for (const auto& ax : K.all_axioms()) require(ax);

    if (falsify) {
        const Axiom& q = *falsify;
        switch (q.kind) {
            case AxiomKind::Inclusion: {
                const auto a = encode_concept(e, q.c);
                const auto b = encode_concept(e, q.d);
                std::vector<int> big;
                for (int x = 0; x < n; ++x) {
                    int s = e.solver.new_var();
                    e.solver.add_clause({-s, a[x]});
                    e.solver.add_clause({-s, -b[x]});
                    big.push_back(s);
                }
                e.solver.add_clause(big);
                break;
            }
            case AxiomKind::Assertion: {
                const auto a = encode_concept(e, q.c);
                const auto& ind = e.ind_row(q.a);
                for (int x = 0; x < n; ++x)
                    e.solver.add_clause({-ind[x], -a[x]});
                break;
            }
            case AxiomKind::RoleAssertion: {
                auto& g = e.role_grid(q.role);
                const auto& ia = e.ind_row(q.a);
                const auto& ib = e.ind_row(q.b);
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y)
                        e.solver.add_clause(
                            {-ia[x], -ib[y], -e.grid(g, x, y)});
                break;
            }
            case AxiomKind::ConceptMembership: {
                const auto dc = denot_row(e, q.c);
                const auto ext = encode_concept(e, q.d);
                // either undefined, or the denoting node is outside D
                for (int j = 0; j < n; ++j)
                    e.solver.add_clause({-dc[j], -ext[j]});
                break;
            }
            case AxiomKind::RoleMembership: {
                const auto dc = denot_row(e, q.c);
                const auto dd = denot_row(e, q.d);
                auto& g = e.role_grid(q.role);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        e.solver.add_clause(
                            {-dc[i], -dd[j], -e.grid(g, i, j)});
                break;
            }
        }
    }

    if (e.solver.solve(seed) != sat::Result::Sat) return std::nullopt;

    Interpretation I;
    for (int x = 0; x < n; ++x) {
        I.pool.push_back(x);
        auto& es = I.elems[x];
        for (int y = 0; y < n; ++y)
            if (e.solver.value(e.grid(e.e_vars, x, y))) es.insert(y);
    }
    for (const auto& [name, row] : e.concept_vars) {
        auto& ext = I.concepts[name];
        for (int x = 0; x < n; ++x)
            if (e.solver.value(row[x])) ext.insert(x);
    }
    for (const auto& [name, g0] : e.role_vars) {
        auto& ext = I.roles[name];
        const auto& g = g0;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (e.solver.value(g[x * n + y])) ext.insert({x, y});
    }
    std::set<NodeId> ind_nodes;
    for (const auto& [a, row] : e.ind_vars)
        for (int x = 0; x < n; ++x)
            if (e.solver.value(row[x])) {
                I.individuals[a] = x;
                ind_nodes.insert(x);
            }
    for (const auto& [key, row] : e.denot_vars)
        for (int j = 0; j < n; ++j)
            if (e.solver.value(row[j])) I.denotations[key] = j;
    std::set<NodeId> denoting;
    for (const auto& [k, v] : I.denotations) { (void)k; denoting.insert(v); }
    for (int x = 0; x < n; ++x)
        if (I.elems[x].empty() && (ind_nodes.count(x) || !denoting.count(x)))
            I.atoms.insert(x);

    // The SAT layer proposes; the semantics disposes.
    if (!check_kb(I, K).all_satisfied()) return std::nullopt;
    if (falsify && check_query(I, *falsify)) return std::nullopt;
    return I;
}

std::optional<Interpretation> find_model_alcoi(
    const KnowledgeBase& Kt, const std::optional<Query>& falsify, int n,
    std::uint64_t seed) {
    if (n < 1) return std::nullopt;
    Enc e(n);

    auto require = [&](const Axiom& ax) {
        switch (ax.kind) {
            case AxiomKind::Inclusion: {
                const auto a = encode_concept(e, ax.c);
                const auto b = encode_concept(e, ax.d);
                for (int x = 0; x < n; ++x)
                    e.solver.add_clause({-a[x], b[x]});
                break;
            }
            case AxiomKind::Assertion: {
                const auto a = encode_concept(e, ax.c);
                const auto& ind = e.ind_row(ax.a);
                for (int x = 0; x < n; ++x)
                    e.solver.add_clause({-ind[x], a[x]});
                break;
            }
            case AxiomKind::RoleAssertion: {
                auto& g = e.role_grid(ax.role);
                const auto& ia = e.ind_row(ax.a);
                const auto& ib = e.ind_row(ax.b);
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y)
                        e.solver.add_clause(
                            {-ia[x], -ib[y], e.grid(g, x, y)});
                break;
            }
            default:
                throw DialectError(
                    "membership axioms have no ALCOI encoding");
        }
    };
    for (const auto& ax : Kt.all_axioms()) require(ax);

    if (falsify) {
        const Axiom& q = *falsify;
        switch (q.kind) {
            case AxiomKind::Inclusion: {
                const auto a = encode_concept(e, q.c);
                const auto b = encode_concept(e, q.d);
                std::vector<int> big;
                for (int x = 0; x < n; ++x) {
                    int s = e.solver.new_var();
                    e.solver.add_clause({-s, a[x]});
                    e.solver.add_clause({-s, -b[x]});
                    big.push_back(s);
                }
                e.solver.add_clause(big);
                break;
            }
            case AxiomKind::Assertion: {
                const auto a = encode_concept(e, q.c);
                const auto& ind = e.ind_row(q.a);
                for (int x = 0; x < n; ++x)
                    e.solver.add_clause({-ind[x], -a[x]});
                break;
            }
            case AxiomKind::RoleAssertion: {
                auto& g = e.role_grid(q.role);
                const auto& ia = e.ind_row(q.a);
                const auto& ib = e.ind_row(q.b);
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y)
                        e.solver.add_clause(
                            {-ia[x], -ib[y], -e.grid(g, x, y)});
                break;
            }
            default:
                throw DialectError(
                    "membership queries have no ALCOI encoding");
        }
    }

    if (e.solver.solve(seed) != sat::Result::Sat) return std::nullopt;

    Interpretation J;
    for (int x = 0; x < n; ++x) {
        J.pool.push_back(x);
        J.elems[x];  // ALCOI models carry no membership structure
    }
    for (const auto& [name, row] : e.concept_vars) {
        auto& ext = J.concepts[name];
        for (int x = 0; x < n; ++x)
            if (e.solver.value(row[x])) ext.insert(x);
    }
    for (const auto& [name, g] : e.role_vars) {
        auto& ext = J.roles[name];
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (e.solver.value(g[x * n + y])) ext.insert({x, y});
    }
    for (const auto& [a, row] : e.ind_vars)
        for (int x = 0; x < n; ++x)
            if (e.solver.value(row[x])) J.individuals[a] = x;

    if (!check_kb(J, Kt).all_satisfied()) return std::nullopt;
    if (falsify && check_query(J, *falsify)) return std::nullopt;
    return J;
}

}  // namespace alcomega
