#include "alcomega/hyperset.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "alcomega/parser.hpp"

namespace alcomega {

const std::set<NodeId>& MembershipGraph::successors(NodeId n) const {
    static const std::set<NodeId> empty;
    auto it = succ.find(n);
    return it == succ.end() ? empty : it->second;
}

// ── Bisimulation by partition refinement ────────────────────────────────────

Bisimulation bisimulation_partition(const MembershipGraph& g) {
    // Initial partition: by (atom-label, tag) signature.  Atom labels are
    // injective, so every atom is already alone in its class.
    std::map<NodeId, int> cls;
    {
        std::map<std::pair<std::string, std::string>, int> sig_class;
        for (NodeId n : g.nodes) {
            std::pair<std::string, std::string> sig{
                g.atoms.count(n) ? g.atoms.at(n) : std::string(),
                g.tags.count(n) ? g.tags.at(n) : std::string()};
            if (g.atoms.count(n)) sig.first = "@" + sig.first;  // atom marker
            auto it = sig_class.find(sig);
            if (it == sig_class.end())
                it = sig_class.emplace(sig, static_cast<int>(sig_class.size()))
                         .first;
            cls[n] = it->second;
        }
    }
    // Refine: split classes by the set of successor classes until stable.
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<std::pair<int, std::set<int>>, int> new_class;
        std::map<NodeId, int> next;
        for (NodeId n : g.nodes) {
            std::set<int> succ_classes;
            for (NodeId s : g.successors(n)) succ_classes.insert(cls[s]);
            std::pair<int, std::set<int>> key{cls[n], std::move(succ_classes)};
            auto it = new_class.find(key);
            if (it == new_class.end())
                it = new_class.emplace(key, static_cast<int>(new_class.size()))
                         .first;
            next[n] = it->second;
        }
        if (next != cls) {
            cls = std::move(next);
            changed = true;
        }
    }
    // Renumber deterministically by smallest member node id.
    std::map<int, NodeId> smallest;
    for (auto it = cls.rbegin(); it != cls.rend(); ++it)
        smallest[it->second] = it->first;  // overwritten down to the smallest
    std::vector<std::pair<NodeId, int>> order;
    for (const auto& [c, n] : smallest) order.push_back({n, c});
    std::sort(order.begin(), order.end());
    std::map<int, int> renum;
    for (size_t i = 0; i < order.size(); ++i)
        renum[order[i].second] = static_cast<int>(i);
    Bisimulation bis;
    for (const auto& [n, c] : cls) bis.partition[n] = renum[c];
    bis.class_count = static_cast<int>(order.size());
    return bis;
}

std::pair<MembershipGraph, std::map<NodeId, NodeId>> quotient(
    const MembershipGraph& g, const Bisimulation& bis) {
    // Representative of a class = its smallest member (matches numbering).
    std::map<int, NodeId> rep;
    for (NodeId n : g.nodes) {
        int c = bis.partition.at(n);
        auto it = rep.find(c);
        if (it == rep.end() || n < it->second) rep[c] = n;
    }
    MembershipGraph q;
    std::map<NodeId, NodeId> to_rep;
    for (NodeId n : g.nodes) to_rep[n] = rep.at(bis.partition.at(n));
    for (const auto& [c, r] : rep) {
        (void)c;
        q.nodes.insert(r);
        if (g.atoms.count(r)) q.atoms[r] = g.atoms.at(r);
        if (g.tags.count(r)) q.tags[r] = g.tags.at(r);
        auto& ss = q.succ[r];
        for (NodeId s : g.successors(r)) ss.insert(to_rep.at(s));
    }
    return {std::move(q), std::move(to_rep)};
}

// ── Equation solving ────────────────────────────────────────────────────────

SolveResult solve_equations(const EquationSystem& sys, bool keep_duplicates) {
    std::map<std::string, NodeId> var_node;
    NodeId next_id = 0;
    for (const auto& v : sys.variables)
        if (!var_node.count(v)) var_node[v] = next_id++;

    MembershipGraph g;
    for (const auto& [v, n] : var_node) {
        (void)v;
        g.nodes.insert(n);
        g.succ[n];
    }
    std::map<std::string, NodeId> atom_node;
    for (const auto& v : sys.variables) {
        auto it = sys.rhs.find(v);
        if (it == sys.rhs.end()) continue;
        for (const auto& item : it->second) {
            NodeId target;
            if (item.is_atom) {
                auto at = atom_node.find(item.text);
                if (at == atom_node.end()) {
                    target = next_id++;
                    atom_node[item.text] = target;
                    g.nodes.insert(target);
                    g.succ[target];
                    g.atoms[target] = item.text;
                } else {
                    target = at->second;
                }
            } else {
                auto vn = var_node.find(item.text);
                if (vn == var_node.end()) throw UndeclaredVariable(item.text);
                target = vn->second;
            }
            g.succ[var_node[v]].insert(target);
        }
    }

    // Well-foundedness = acyclicity of the dependency graph.
    bool well_founded = true;
    {
        std::map<NodeId, int> state;  // 0 new, 1 on stack, 2 done
        std::function<void(NodeId)> dfs = [&](NodeId n) {
            state[n] = 1;
            for (NodeId s : g.successors(n)) {
                if (state[s] == 1) well_founded = false;
                else if (state[s] == 0) dfs(s);
            }
            state[n] = 2;
        };
        for (NodeId n : g.nodes)
            if (state[n] == 0) dfs(n);
    }

    SolveResult res;
    if (keep_duplicates) {
        res.graph = std::move(g);
        res.var_node = std::move(var_node);
    } else {
        auto [q, to_rep] = quotient(g, bisimulation_partition(g));
        res.graph = std::move(q);
        for (const auto& [v, n] : var_node) res.var_node[v] = to_rep.at(n);
    }
    res.well_founded = well_founded;
    return res;
}

// ── Transitive closure & transitivity ───────────────────────────────────────

std::set<NodeId> transitive_closure(const MembershipGraph& g, NodeId n) {
    if (!g.nodes.count(n)) throw UnknownNode(n);
    std::set<NodeId> seen;
    std::vector<NodeId> work(g.successors(n).begin(), g.successors(n).end());
    while (!work.empty()) {
        NodeId x = work.back();
        work.pop_back();
        if (!seen.insert(x).second) continue;
        for (NodeId s : g.successors(x)) work.push_back(s);
    }
    return seen;
}

bool is_transitive(const MembershipGraph& g,
                   const std::set<NodeId>& universe) {
    for (NodeId n : universe)
        for (NodeId s : g.successors(n))
            if (!universe.count(s)) return false;
    return true;
}

// ── Mostowski-style collapse ────────────────────────────────────────────────

CollapseResult mostowski_collapse(
    const std::set<NodeId>& domain,
    const std::set<std::pair<NodeId, NodeId>>& e_edges,
    const std::set<NodeId>& atom_pick, bool duplicate_tags) {
    std::map<NodeId, std::set<NodeId>> succ;
    for (NodeId d : domain) succ[d];
    for (const auto& [x, y] : e_edges) {
        if (domain.count(x) && domain.count(y)) succ[x].insert(y);
    }
    for (NodeId a : atom_pick)
        if (!succ[a].empty()) throw AtomWithSuccessors(a);

    // Build the collapse as a graph over fresh contiguous ids (domain order).
    MembershipGraph g;
    std::map<NodeId, NodeId> m;
    NodeId next_id = 0;
    for (NodeId d : domain) m[d] = next_id++;
    int atom_counter = 0;
    for (NodeId d : domain) {
        NodeId n = m[d];
        g.nodes.insert(n);
        g.succ[n];
        if (atom_pick.count(d))
            g.atoms[n] = "a" + std::to_string(atom_counter++);
        else
            for (NodeId s : succ[d]) g.succ[n].insert(m[s]);
        if (duplicate_tags) g.tags[n] = "d" + std::to_string(n);
    }

    if (!duplicate_tags) {
        auto [q, to_rep] = quotient(g, bisimulation_partition(g));
        CollapseResult res;
        res.graph = std::move(q);
        for (auto& [d, n] : m) res.m[d] = to_rep.at(n);
        return res;
    }
    return CollapseResult{std::move(g), std::move(m)};
}

// ── Equation files ──────────────────────────────────────────────────────────

EquationSystem parse_equations(const std::string& text) {
    EquationSystem sys;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](int col, const std::string& what) -> SyntaxError {
        return SyntaxError(lineno, col, what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t i = 0;
        auto skip_ws = [&] {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        };
        auto read_name = [&]() -> std::string {
            size_t j = i;
            while (j < line.size() &&
                   (std::isalnum(static_cast<unsigned char>(line[j])) ||
                    line[j] == '_'))
                ++j;
            std::string n = line.substr(i, j - i);
            i = j;
            return n;
        };
        skip_ws();
        if (i >= line.size()) continue;
        std::string var = read_name();
        if (var.empty()) throw fail(static_cast<int>(i + 1), "expected a variable name");
        skip_ws();
        if (i >= line.size() || line[i] != '=')
            throw fail(static_cast<int>(i + 1), "expected '='");
        ++i;
        skip_ws();
        if (i >= line.size() || line[i] != '{')
            throw fail(static_cast<int>(i + 1), "expected '{'");
        ++i;
        std::vector<EquationSystem::Item> items;
        skip_ws();
        while (i < line.size() && line[i] != '}') {
            EquationSystem::Item item;
            if (line[i] == '\'') {
                ++i;
                item.is_atom = true;
                item.text = read_name();
                if (i >= line.size() || line[i] != '\'')
                    throw fail(static_cast<int>(i + 1), "expected closing '");
                ++i;
            } else {
                item.is_atom = false;
                item.text = read_name();
                if (item.text.empty())
                    throw fail(static_cast<int>(i + 1), "expected an item");
            }
            items.push_back(std::move(item));
            skip_ws();
            if (i < line.size() && line[i] == ',') { ++i; skip_ws(); }
        }
        if (i >= line.size() || line[i] != '}')
            throw fail(static_cast<int>(i + 1), "expected '}'");
        sys.variables.push_back(var);
        sys.rhs[var] = std::move(items);
    }
    return sys;
}

// ── DOT export ──────────────────────────────────────────────────────────────

std::string to_dot(const MembershipGraph& g,
                   const std::map<std::string, NodeId>* var_node) {
    std::map<NodeId, std::string> var_of;
    if (var_node)
        for (const auto& [v, n] : *var_node)
            var_of[n] = var_of.count(n) ? var_of[n] + "," + v : v;
    std::ostringstream out;
    out << "digraph hyperset {\n";
    for (NodeId n : g.nodes) {
        std::string label;
        if (g.atoms.count(n)) label = g.atoms.at(n);
        else if (var_of.count(n)) label = var_of.at(n);
        else label = "n" + std::to_string(n);
        if (g.tags.count(n)) label += " [" + g.tags.at(n) + "]";
        out << "  n" << n << " [label=\"" << label << "\""
            << (g.atoms.count(n) ? ", shape=box" : ", shape=circle") << "];\n";
    }
    for (NodeId n : g.nodes)
        for (NodeId s : g.successors(n))
            out << "  n" << n << " -> n" << s << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace alcomega
