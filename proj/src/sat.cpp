#include "alcomega/sat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>

namespace alcomega::sat {

namespace {

// Luby restart sequence: 1 1 2 1 1 2 4 1 1 2 1 1 2 4 8 ...
long luby(long i) {
    long k = 1;
    while ((1L << k) - 1 < i) ++k;
    while ((1L << k) - 1 != i) {
        i -= (1L << (k - 1)) - 1;
        k = 1;
        while ((1L << k) - 1 < i) ++k;
    }
    return 1L << (k - 1);
}

constexpr double kActivityDecay = 0.95;
constexpr double kActivityLimit = 1e100;
constexpr long kRestartUnit = 128;  // conflicts per Luby step

}  // namespace

int Solver::new_var() {
    ++nvars_;
    assign_.push_back(0);
    reason_.push_back(-1);
    level_.push_back(0);
    activity_.push_back(0.0);
    phase_.push_back(-1);  // negative-first: sparsest models first
    watches_.resize(2 * static_cast<std::size_t>(nvars_) + 2);
    return nvars_;
}

std::size_t Solver::widx(Lit l) {
    int v = std::abs(l);
    return 2 * static_cast<std::size_t>(v) + (l > 0 ? 0 : 1);
}

bool Solver::lit_true(Lit l) const {
    std::int8_t a = assign_[std::abs(l) - 1];
    return l > 0 ? a == 1 : a == -1;
}

bool Solver::lit_false(Lit l) const {
    std::int8_t a = assign_[std::abs(l) - 1];
    return l > 0 ? a == -1 : a == 1;
}

void Solver::attach(int ci) {
    watches_[widx(clauses_[ci].lits[0])].push_back(ci);
    watches_[widx(clauses_[ci].lits[1])].push_back(ci);
}

void Solver::add_clause(std::vector<Lit> c) {
    std::sort(c.begin(), c.end(), [](Lit a, Lit b) {
        return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
    });
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (c[i] == -c[i + 1]) return;  // tautology
    if (c.empty()) {
        empty_clause_ = true;
        return;
    }
    if (c.size() == 1) {
        unit_queue_.push_back(c[0]);
        return;
    }
    int id = static_cast<int>(clauses_.size());
    clauses_.push_back({std::move(c)});
    attach(id);
}

bool Solver::enqueue(Lit l, int reason) {
    if (lit_false(l)) return false;
    if (lit_true(l)) return true;
    int v = std::abs(l) - 1;
    assign_[v] = l > 0 ? 1 : -1;
    reason_[v] = reason;
    level_[v] = static_cast<int>(trail_lim_.size());
    trail_.push_back(l);
    return true;
}

// Propagate trail entries from *qhead onward; returns the conflicting
// clause id, or -1 when a fixpoint is reached.
int Solver::propagate(std::size_t& qhead) {
    while (qhead < trail_.size()) {
        Lit p = trail_[qhead++];
        std::vector<int>& wl = watches_[widx(-p)];
        std::size_t keep = 0;
        int conflict = -1;
        for (std::size_t i = 0; i < wl.size(); ++i) {
            int id = wl[i];
            if (conflict != -1) {  // keep remaining watches untouched
                wl[keep++] = id;
                continue;
            }
            Clause& cl = clauses_[id];
            if (cl.lits[0] == -p) std::swap(cl.lits[0], cl.lits[1]);
            if (lit_true(cl.lits[0])) {
                wl[keep++] = id;
                continue;
            }
            bool moved = false;
            for (std::size_t k = 2; k < cl.lits.size(); ++k) {
                if (!lit_false(cl.lits[k])) {
                    std::swap(cl.lits[1], cl.lits[k]);
                    watches_[widx(cl.lits[1])].push_back(id);
                    moved = true;
                    break;
                }
            }
            if (moved) continue;  // watch relocated away from this list
            wl[keep++] = id;
            if (!enqueue(cl.lits[0], id)) conflict = id;
        }
        wl.resize(keep);
        if (conflict != -1) return conflict;
    }
    return -1;
}

void Solver::backjump(std::size_t level) {
    std::size_t target = trail_lim_[level];
    while (trail_.size() > target) {
        Lit l = trail_.back();
        trail_.pop_back();
        int v = std::abs(l) - 1;
        phase_[v] = assign_[v];
        assign_[v] = 0;
        reason_[v] = -1;
        order_.push({activity_[v], -(v + 1)});
    }
    trail_lim_.resize(level);
}

void Solver::bump(int var) {
    int v = var - 1;
    activity_[v] += var_inc_;
    if (activity_[v] > kActivityLimit) {
        for (auto& a : activity_) a *= 1.0 / kActivityLimit;
        var_inc_ *= 1.0 / kActivityLimit;
        // Stale heap entries now overshoot; harmless, they are re-checked.
    }
    if (assign_[v] == 0) order_.push({activity_[v], -(v + 1)});
}

void Solver::decay() { var_inc_ *= 1.0 / kActivityDecay; }

int Solver::pick_branch_var() {
    while (!order_.empty()) {
        auto [act, negv] = order_.top();
        int v = -negv;
        // Lazy deletion: skip assigned or stale (activity changed) entries.
        if (assign_[v - 1] == 0 && act == activity_[v - 1]) return v;
        order_.pop();
    }
    return 0;
}

// First-UIP conflict analysis.  Walks the trail backwards resolving on the
// implied literals of the current level until exactly one remains; that
// literal (negated) leads the learned clause.  Returns the backjump level.
std::size_t Solver::analyze(int confl, std::vector<Lit>& learnt) {
    learnt.assign(1, 0);  // slot 0 = asserting literal, filled at the end
    std::vector<char> seen(static_cast<std::size_t>(nvars_), 0);
    int counter = 0;
    Lit p = 0;
    std::size_t idx = trail_.size();
    int current = static_cast<int>(trail_lim_.size());

    for (;;) {
        for (Lit q : clauses_[confl].lits) {
            if (q == p) continue;
            int v = std::abs(q) - 1;
            if (seen[v] || level_[v] == 0) continue;
            seen[v] = 1;
            bump(v + 1);
            if (level_[v] == current)
                ++counter;
            else
                learnt.push_back(q);
        }
        // Find the next marked literal on the trail.
        do {
            p = trail_[--idx];
        } while (!seen[std::abs(p) - 1]);
        seen[std::abs(p) - 1] = 0;
        if (--counter == 0) break;
        confl = reason_[std::abs(p) - 1];
    }
    learnt[0] = -p;

    std::size_t back = 0;
    if (learnt.size() > 1) {
        // Watch the literal of the highest remaining level at slot 1.
        std::size_t at = 1;
        for (std::size_t i = 2; i < learnt.size(); ++i)
            if (level_[std::abs(learnt[i]) - 1] >
                level_[std::abs(learnt[at]) - 1])
                at = i;
        std::swap(learnt[1], learnt[at]);
        back = static_cast<std::size_t>(level_[std::abs(learnt[1]) - 1]);
    }
    return back;
}

Result Solver::solve(std::uint64_t seed) {
    if (empty_clause_) return Result::Unsat;
    for (auto& a : assign_) a = 0;
    for (auto& r : reason_) r = -1;
    for (auto& l : level_) l = 0;
    trail_.clear();
    trail_lim_.clear();
    var_inc_ = 1.0;

    // Seed only jitters the initial activities — the run itself is
    // deterministic, and seed 0 keeps the natural variable order.
    std::mt19937_64 rng(seed);
    for (int v = 0; v < nvars_; ++v) {
        activity_[v] =
            seed == 0 ? 0.0
                      : std::uniform_real_distribution<double>(0.0, 0.5)(rng);
        phase_[v] = -1;
    }
    order_ = {};
    for (int v = 1; v <= nvars_; ++v) order_.push({activity_[v - 1], -v});

    for (Lit u : unit_queue_)
        if (!enqueue(u, -1)) return Result::Unsat;

    std::size_t qhead = 0;
    long conflicts_total = 0;
    long restarts = 0;
    long budget = kRestartUnit * luby(++restarts);

    for (;;) {
        int confl = propagate(qhead);
        if (confl != -1) {
            ++conflicts_total;
            if (trail_lim_.empty()) return Result::Unsat;
            std::vector<Lit> learnt;
            std::size_t back = analyze(confl, learnt);
            backjump(back);
            qhead = trail_.size();
            if (learnt.size() == 1) {
                if (!enqueue(learnt[0], -1)) return Result::Unsat;
            } else {
                int id = static_cast<int>(clauses_.size());
                clauses_.push_back({std::move(learnt)});
                attach(id);
                enqueue(clauses_[id].lits[0], id);
            }
            decay();
            if (--budget <= 0) {
                backjump(0);
                qhead = trail_.size();
                budget = kRestartUnit * luby(++restarts);
            }
            continue;
        }
        int pick = pick_branch_var();
        if (pick == 0) return Result::Sat;
        trail_lim_.push_back(trail_.size());
        enqueue(phase_[pick - 1] > 0 ? pick : -pick, -1);
    }
}

bool Solver::value(int var) const { return assign_[var - 1] == 1; }

}  // namespace alcomega::sat
