#include "alcomega/tableau.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "alcomega/printer.hpp"
#include "alcomega/search.hpp"

namespace alcomega {

ConceptPtr nnf(const ConceptPtr& c, bool negated) {
    switch (c->kind) {
        case ConceptKind::Top: return negated ? bot() : top();
        case ConceptKind::Bot: return negated ? top() : bot();
        case ConceptKind::Name:
        case ConceptKind::Nominal:
            return negated ? not_(c) : c;
        case ConceptKind::Not: return nnf(c->lhs, !negated);
        case ConceptKind::And:
            return negated ? or_(nnf(c->lhs, true), nnf(c->rhs, true))
                           : and_(nnf(c->lhs), nnf(c->rhs));
        case ConceptKind::Or:
            return negated ? and_(nnf(c->lhs, true), nnf(c->rhs, true))
                           : or_(nnf(c->lhs), nnf(c->rhs));
        case ConceptKind::Forall:
            return negated ? exists(c->role, nnf(c->lhs, true))
                           : forall(c->role, nnf(c->lhs));
        case ConceptKind::Exists:
            return negated ? forall(c->role, nnf(c->lhs, true))
                           : exists(c->role, nnf(c->lhs));
        default:
            throw DialectError("no ALCOI normal form for " + render(c));
    }
}

namespace {

struct TNode {
    std::map<std::string, ConceptPtr> label;  // render → concept
    int merged_into = -1;
    int parent = -1;   // creating node (tree structure); -1 for roots
    Role parent_role;  // role of the generating ∃
    bool is_root = false;
};

struct State {
    std::vector<TNode> nodes;
    std::set<std::tuple<int, int, std::string>> edges;  // (from,to,role)
    std::map<std::string, int> ind_node;
};

struct Budget {
    long branches = 0;
    const TableauLimits* limits;
};

int find(const State& st, int x) {
    while (st.nodes[x].merged_into != -1) x = st.nodes[x].merged_into;
    return x;
}

bool add_concept(State& st, int x, const ConceptPtr& c) {
    x = find(st, x);
    return st.nodes[x].label.emplace(render(c), c).second;
}

bool has_concept(const State& st, int x, const ConceptPtr& c) {
    return st.nodes[find(st, x)].label.count(render(c)) != 0;
}

std::set<int> successors(const State& st, int x, const Role& r) {
    std::set<int> out;
    x = find(st, x);
    for (const auto& [u, v, role] : st.edges) {
        if (role != r.name) continue;
        int fu = find(st, u), fv = find(st, v);
        if (!r.inverted && fu == x) out.insert(fv);
        if (r.inverted && fv == x) out.insert(fu);
    }
    return out;
}

void merge(State& st, int x, int target) {
    x = find(st, x);
    target = find(st, target);
    if (x == target) return;
    // Roots absorb tree nodes; between two roots the older id wins so
    // individual anchors stay put.
    if (!st.nodes[target].is_root && st.nodes[x].is_root) std::swap(x, target);
    std::set<std::tuple<int, int, std::string>> moved;
    for (const auto& [u, v, role] : st.edges)
        moved.insert({find(st, u) == x ? target : find(st, u),
                      find(st, v) == x ? target : find(st, v), role});
    st.edges = std::move(moved);
    for (const auto& [key, c] : st.nodes[x].label)
        st.nodes[target].label.emplace(key, c);
    st.nodes[x].merged_into = target;
}

bool has_clash(const State& st, int x) {
    const auto& label = st.nodes[x].label;
    if (label.count("Bot")) return true;
    for (const auto& [key, c] : label) {
        if (c->kind == ConceptKind::Not && label.count(render(c->lhs)))
            return true;
    }
    return false;
}

// A disjunct whose addition would clash on the spot: ⊥, a literal whose
// complement is already in the label.  Used to resolve disjunctions
// deterministically before paying for a branch.
bool locally_refuted(const State& st, int x, const ConceptPtr& d) {
    const auto& label = st.nodes[find(st, x)].label;
    switch (d->kind) {
        case ConceptKind::Bot: return true;
        case ConceptKind::Not: return label.count(render(d->lhs)) != 0;
        case ConceptKind::Name:
        case ConceptKind::Nominal:
            return label.count(render(not_(d))) != 0;
        default: return false;
    }
}

bool labels_equal(const TNode& a, const TNode& b) {
    if (a.label.size() != b.label.size()) return false;
    auto it = a.label.begin();
    for (const auto& [k, v] : b.label) {
        (void)v;
        if (it->first != k) return false;
        ++it;
    }
    return true;
}

// Directly blocked nodes and their blockers, computed in id order so a
// blocker is itself unblocked (pairwise anywhere-blocking).
std::map<int, int> compute_blocking(const State& st) {
    std::map<int, int> blocked;
    for (std::size_t x = 0; x < st.nodes.size(); ++x) {
        const TNode& nx = st.nodes[x];
        if (nx.merged_into != -1 || nx.is_root || nx.parent == -1) continue;
        int px = find(st, nx.parent);
        if (st.nodes[px].merged_into != -1) continue;
        for (std::size_t y = 0; y < x; ++y) {
            const TNode& ny = st.nodes[y];
            if (ny.merged_into != -1 || ny.is_root || ny.parent == -1)
                continue;
            if (blocked.count(static_cast<int>(y))) continue;
            int py = find(st, ny.parent);
            if (!(nx.parent_role == ny.parent_role)) continue;
            if (!labels_equal(nx, ny)) continue;
            if (!labels_equal(st.nodes[px], st.nodes[py])) continue;
            blocked[static_cast<int>(x)] = static_cast<int>(y);
            break;
        }
    }
    return blocked;
}

bool has_blocked_ancestor(const State& st, int x,
                          const std::map<int, int>& blocked) {
    int cur = st.nodes[x].parent;
    while (cur != -1) {
        if (blocked.count(cur)) return true;
        if (st.nodes[cur].merged_into != -1) return false;  // root-connected
        cur = st.nodes[cur].parent;
    }
    return false;
}

int make_node(State& st, const std::vector<ConceptPtr>& meta, int parent,
              const Role& r, bool is_root) {
    TNode n;
    n.parent = parent;
    n.parent_role = r;
    n.is_root = is_root;
    st.nodes.push_back(std::move(n));
    int id = static_cast<int>(st.nodes.size()) - 1;
    for (const auto& m : meta) add_concept(st, id, m);
    return id;
}

int root_for(State& st, const std::vector<ConceptPtr>& meta,
             const std::string& individual) {
    auto it = st.ind_node.find(individual);
    if (it != st.ind_node.end()) return it->second;
    int id = make_node(st, meta, -1, Role{}, true);
    add_concept(st, id, nominal(individual));
    st.ind_node[individual] = id;
    return id;
}

struct Outcome {
    bool closed;
    State open_state;  // saturated branch when !closed
};

Outcome expand(State st, const std::vector<ConceptPtr>& meta, Budget& bud) {
    if (++bud.branches > bud.limits->max_branches)
        throw BudgetExceeded("tableau branch limit exceeded");
    while (true) {
        if (static_cast<long>(st.nodes.size()) > bud.limits->max_nodes)
            throw BudgetExceeded("tableau node limit exceeded");
        bool changed = false;

        for (std::size_t x = 0; x < st.nodes.size(); ++x) {
            if (st.nodes[x].merged_into != -1) continue;
            if (has_clash(st, static_cast<int>(x))) return {true, {}};
        }

        // Nominal merging first so generating rules see the merged graph.
        for (std::size_t x = 0; x < st.nodes.size() && !changed; ++x) {
            if (st.nodes[x].merged_into != -1) continue;
            for (const auto& [key, c] : st.nodes[x].label) {
                (void)key;
                if (c->kind != ConceptKind::Nominal) continue;
                int t = root_for(st, meta, c->name);
                if (find(st, t) != static_cast<int>(x)) {
                    merge(st, static_cast<int>(x), t);
                    changed = true;
                    break;
                }
            }
        }
        if (changed) continue;

        // Deterministic rules: ⊓ and ∀ (inverse-aware).
        for (std::size_t x = 0; x < st.nodes.size(); ++x) {
            if (st.nodes[x].merged_into != -1) continue;
            auto label = st.nodes[x].label;  // snapshot (mutation below)
            for (const auto& [key, c] : label) {
                (void)key;
                if (c->kind == ConceptKind::And) {
                    changed |= add_concept(st, static_cast<int>(x), c->lhs);
                    changed |= add_concept(st, static_cast<int>(x), c->rhs);
                } else if (c->kind == ConceptKind::Forall) {
                    for (int y : successors(st, static_cast<int>(x), c->role))
                        changed |= add_concept(st, y, c->lhs);
                } else if (c->kind == ConceptKind::Or) {
                    // Unit resolution: a disjunction with one side already
                    // refuted is deterministic, not a branch point.
                    if (has_concept(st, static_cast<int>(x), c->lhs) ||
                        has_concept(st, static_cast<int>(x), c->rhs))
                        continue;
                    bool l = locally_refuted(st, static_cast<int>(x), c->lhs);
                    bool r = locally_refuted(st, static_cast<int>(x), c->rhs);
                    if (l && !r)
                        changed |= add_concept(st, static_cast<int>(x), c->rhs);
                    else if (r)  // both refuted closes via either side
                        changed |= add_concept(st, static_cast<int>(x), c->lhs);
                }
            }
        }
        if (changed) continue;

        // Generating rule ∃, subject to blocking.
        auto blocked = compute_blocking(st);
        for (std::size_t x = 0; x < st.nodes.size() && !changed; ++x) {
            if (st.nodes[x].merged_into != -1) continue;
            if (blocked.count(static_cast<int>(x))) continue;
            if (has_blocked_ancestor(st, static_cast<int>(x), blocked))
                continue;
            auto label = st.nodes[x].label;
            for (const auto& [key, c] : label) {
                (void)key;
                if (c->kind != ConceptKind::Exists) continue;
                bool satisfied = false;
                for (int y : successors(st, static_cast<int>(x), c->role))
                    if (has_concept(st, y, c->lhs)) {
                        satisfied = true;
                        break;
                    }
                if (satisfied) continue;
                int z = make_node(st, meta, static_cast<int>(x), c->role,
                                  false);
                add_concept(st, z, c->lhs);
                if (c->role.inverted)
                    st.edges.insert({z, static_cast<int>(x), c->role.name});
                else
                    st.edges.insert({static_cast<int>(x), z, c->role.name});
                changed = true;
                break;
            }
        }
        if (changed) continue;

        // ⊔ branching: first unexpanded disjunction in node/label order.
        for (std::size_t x = 0; x < st.nodes.size(); ++x) {
            if (st.nodes[x].merged_into != -1) continue;
            for (const auto& [key, c] : st.nodes[x].label) {
                (void)key;
                if (c->kind != ConceptKind::Or) continue;
                if (has_concept(st, static_cast<int>(x), c->lhs) ||
                    has_concept(st, static_cast<int>(x), c->rhs))
                    continue;
                State left = st;
                add_concept(left, static_cast<int>(x), c->lhs);
                Outcome a = expand(std::move(left), meta, bud);
                if (!a.closed) return a;
                // Semantic branching: the left branch failed, so its choice
                // is refuted here — record that, or the right branch will
                // re-explore the same subtree through other disjunctions.
                State right = std::move(st);
                add_concept(right, static_cast<int>(x), nnf(c->lhs, true));
                add_concept(right, static_cast<int>(x), c->rhs);
                return expand(std::move(right), meta, bud);
            }
        }
        return {false, std::move(st)};  // saturated and clash-free
    }
}

// Open saturated branch → candidate ALCOI model: blocked nodes are dropped
// and their incoming edges rerouted to the blockers.
Interpretation extract_model(const State& st) {
    auto blocked = compute_blocking(st);
    std::map<int, int> renumber;
    std::vector<int> domain;
    for (std::size_t x = 0; x < st.nodes.size(); ++x) {
        if (st.nodes[x].merged_into != -1) continue;
        if (blocked.count(static_cast<int>(x))) continue;
        if (has_blocked_ancestor(st, static_cast<int>(x), blocked)) continue;
        renumber[static_cast<int>(x)] = static_cast<int>(domain.size());
        domain.push_back(static_cast<int>(x));
    }
    Interpretation J;
    for (int x : domain) {
        int id = renumber.at(x);
        J.pool.push_back(id);
        J.elems[id];
        for (const auto& [key, c] : st.nodes[x].label) {
            (void)key;
            if (c->kind == ConceptKind::Name)
                J.concepts[c->name].insert(id);
        }
    }
    for (const auto& [u0, v0, role] : st.edges) {
        int u = find(st, u0), v = find(st, v0);
        auto bv = blocked.find(v);
        if (bv != blocked.end()) v = bv->second;
        auto iu = renumber.find(u), iv = renumber.find(v);
        if (iu == renumber.end() || iv == renumber.end()) continue;
        J.roles[role].insert({iu->second, iv->second});
    }
    for (const auto& [a, nd] : st.ind_node) {
        auto it = renumber.find(find(st, nd));
        if (it != renumber.end()) J.individuals[a] = it->second;
    }
    return J;
}

}  // namespace

bool tableau_decide(const KnowledgeBase& Kt, const Query& Ft,
                    Interpretation* open_model, const TableauLimits& limits) {
    std::vector<ConceptPtr> meta;
    for (const auto& ax : Kt.tbox)
        meta.push_back(or_(nnf(ax.c, true), nnf(ax.d)));

    State st;
    for (const auto& a : Kt.sig.individuals) root_for(st, meta, a);

    for (const auto& ax : Kt.abox) {
        switch (ax.kind) {
            case AxiomKind::Assertion:
                add_concept(st, root_for(st, meta, ax.a), nnf(ax.c));
                break;
            case AxiomKind::RoleAssertion:
                st.edges.insert({root_for(st, meta, ax.a),
                                 root_for(st, meta, ax.b), ax.role});
                break;
            default:
                throw DialectError("ALCOI ABox holds assertions only");
        }
    }

    switch (Ft.kind) {
        case AxiomKind::Inclusion: {
            int x = make_node(st, meta, -1, Role{}, true);
            add_concept(st, x, nnf(Ft.c));
            add_concept(st, x, nnf(Ft.d, true));
            break;
        }
        case AxiomKind::Assertion:
            add_concept(st, root_for(st, meta, Ft.a), nnf(Ft.c, true));
            break;
        case AxiomKind::RoleAssertion:
            add_concept(st, root_for(st, meta, Ft.a),
                        forall(Role{Ft.role, false, false},
                               not_(nominal(Ft.b))));
            break;
        default:
            throw DialectError("ALCOI queries have no membership forms");
    }

    Budget bud{0, &limits};
    Outcome out = expand(std::move(st), meta, bud);
    if (out.closed) return true;

    Interpretation J = extract_model(out.open_state);
    bool ok = check_kb(J, Kt).all_satisfied() && !check_query(J, Ft);
    if (!ok) {
        // Extraction through blocking can miss in corner cases; fall back to
        // exhaustive search near the extracted size before declaring a bug.
        int limit = static_cast<int>(J.pool.size()) + 3;
        for (int n = 1; n <= limit && !ok; ++n) {
            auto alt = find_model_alcoi(Kt, Ft, n);
            if (alt) {
                J = *alt;
                ok = true;
            }
        }
    }
    if (!ok)
        throw Error(
            "tableau open branch produced no verifiable model (internal "
            "inconsistency)");
    if (open_model) *open_model = std::move(J);
    return false;
}

}  // namespace alcomega
