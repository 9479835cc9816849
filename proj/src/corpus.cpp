#include "alcomega/corpus.hpp"

#include <string>
#include <vector>

#include "alcomega/search.hpp"

namespace alcomega {

namespace {

int pick(std::mt19937& rng, int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

struct Names {
    std::vector<std::string> concepts, roles, individuals;
};

ConceptPtr random_concept(std::mt19937& rng, const Names& nm,
                          const CorpusOptions& opts, int depth) {
    if (depth <= 0) {
        int k = pick(rng, 0, 9);
        if (k == 0) return top();
        if (k == 1) return bot();
        return name(nm.concepts[pick(
            rng, 0, static_cast<int>(nm.concepts.size()) - 1)]);
    }
    int hi = 6;
    if (opts.allow_pow) ++hi;          // 7
    if (opts.allow_diff) ++hi;         // 8
    if (!nm.roles.empty()) hi += 2;    // 9, 10
    int k = pick(rng, 0, hi);
    auto sub = [&](int d) { return random_concept(rng, nm, opts, d); };
    switch (k) {
        case 0:
        case 1:
        case 2:
            return random_concept(rng, nm, opts, 0);
        case 3: return not_(sub(depth - 1));
        case 4: return and_(sub(depth - 1), sub(depth - 1));
        case 5: return or_(sub(depth - 1), sub(depth - 1));
        case 6: return sub(depth - 1);
        case 7:
            if (opts.allow_pow) return pow(sub(depth - 1));
            [[fallthrough]];
        case 8:
            if (opts.allow_diff) return diff(sub(depth - 1), sub(depth - 1));
            [[fallthrough]];
        default: {
            Role r{nm.roles[pick(rng, 0,
                                 static_cast<int>(nm.roles.size()) - 1)],
                   false, false};
            return k % 2 == 0 ? forall(r, sub(depth - 1))
                              : exists(r, sub(depth - 1));
        }
    }
}

}  // namespace

KnowledgeBase random_kb(std::mt19937& rng, const CorpusOptions& opts) {
    Names nm;
    int nc = std::max(1, opts.num_concepts);
    for (int i = 0; i < nc; ++i)
        nm.concepts.push_back(std::string(1, static_cast<char>('A' + i)));
    int nr = opts.max_roles > 0 ? pick(rng, 0, opts.max_roles) : 0;
    for (int i = 0; i < nr; ++i)
        nm.roles.push_back(std::string(1, static_cast<char>('r' + i)));
    int ni = opts.max_individuals > 0 ? pick(rng, 0, opts.max_individuals) : 0;
    for (int i = 0; i < ni; ++i)
        nm.individuals.push_back(std::string(1, static_cast<char>('a' + i)));

    std::vector<Axiom> axioms;
    int n_incl = pick(rng, 1, std::max(1, opts.max_inclusions));
    for (int i = 0; i < n_incl; ++i)
        axioms.push_back(
            Axiom::inclusion(random_concept(rng, nm, opts, opts.max_depth),
                             random_concept(rng, nm, opts, opts.max_depth)));
    if (!nm.individuals.empty()) {
        int n_as = pick(rng, 0, opts.max_assertions);
        for (int i = 0; i < n_as; ++i) {
            const auto& a = nm.individuals[pick(
                rng, 0, static_cast<int>(nm.individuals.size()) - 1)];
            if (!nm.roles.empty() && pick(rng, 0, 2) == 0) {
                const auto& b = nm.individuals[pick(
                    rng, 0, static_cast<int>(nm.individuals.size()) - 1)];
                axioms.push_back(Axiom::role_assertion(nm.roles[0], a, b));
            } else {
                axioms.push_back(Axiom::assertion(
                    random_concept(rng, nm, opts, 1), a));
            }
        }
    }
    int n_mem = pick(rng, 0, opts.max_memberships);
    for (int i = 0; i < n_mem; ++i) {
        ConceptPtr lhs = name(nm.concepts[pick(
            rng, 0, static_cast<int>(nm.concepts.size()) - 1)]);
        if (pick(rng, 0, 3) == 0) lhs = random_concept(rng, nm, opts, 1);
        if (!nm.roles.empty() && pick(rng, 0, 3) == 0) {
            ConceptPtr rhs = name(nm.concepts[pick(
                rng, 0, static_cast<int>(nm.concepts.size()) - 1)]);
            axioms.push_back(Axiom::role_membership(lhs, rhs, nm.roles[0]));
        } else {
            axioms.push_back(Axiom::concept_membership(
                lhs, random_concept(rng, nm, opts, 1)));
        }
    }
    return make_kb(std::move(axioms));
}

Query random_query(std::mt19937& rng, const KnowledgeBase& K,
                   const CorpusOptions& opts) {
    Names nm{K.sig.concepts, K.sig.roles, K.sig.individuals};
    if (nm.concepts.empty()) return Axiom::inclusion(top(), bot());
    int kind = pick(rng, 0, 3);
    if (kind == 1 && !nm.individuals.empty())
        return Axiom::assertion(
            random_concept(rng, nm, opts, 1),
            nm.individuals[pick(
                rng, 0, static_cast<int>(nm.individuals.size()) - 1)]);
    if (kind == 2)
        return Axiom::concept_membership(
            name(nm.concepts[pick(
                rng, 0, static_cast<int>(nm.concepts.size()) - 1)]),
            random_concept(rng, nm, opts, 1));
    if (kind == 3 && !nm.roles.empty() && nm.individuals.size() >= 1) {
        const auto& a = nm.individuals[pick(
            rng, 0, static_cast<int>(nm.individuals.size()) - 1)];
        const auto& b = nm.individuals[pick(
            rng, 0, static_cast<int>(nm.individuals.size()) - 1)];
        return Axiom::role_assertion(nm.roles[0], a, b);
    }
    return Axiom::inclusion(random_concept(rng, nm, opts, opts.max_depth),
                            random_concept(rng, nm, opts, opts.max_depth));
}

std::optional<Interpretation> random_model(std::mt19937& rng,
                                           const KnowledgeBase& K,
                                           int max_size) {
    std::uint64_t seed = rng();
    int lo = std::max<int>(1, static_cast<int>(K.sig.individuals.size()));
    // Vary the starting size so different seeds explore different shapes.
    int start = lo + pick(rng, 0, std::max(0, max_size - lo));
    for (int n = start; n <= max_size; ++n)
        if (auto m = find_model_direct(K, std::nullopt, n, seed)) return m;
    for (int n = lo; n < start; ++n)
        if (auto m = find_model_direct(K, std::nullopt, n, seed)) return m;
    return std::nullopt;
}

}  // namespace alcomega
