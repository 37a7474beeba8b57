#include "mcn/solvers.hpp"

#include <algorithm>
#include <numeric>

namespace mcn {

BudgetSubsetStream::BudgetSubsetStream(const std::vector<long long>& costs,
                                       VertexSet candidates, long long budget)
    : cand_(std::move(candidates)), budget_(budget) {
    if (budget_ < 0) {
        throw ValidationError("negative budget in subset enumeration");
    }
    cost_.reserve(cand_.size());
    for (int v : cand_) {
        if (v < 0 || v >= static_cast<int>(costs.size())) {
            throw ValidationError("candidate out of range: " + std::to_string(v));
        }
        cost_.push_back(costs[v]);
    }
    // Largest subset size that can possibly fit: greedily take cheapest costs.
    std::vector<long long> sorted_costs = cost_;
    std::sort(sorted_costs.begin(), sorted_costs.end());
    long long acc = 0;
    max_k_ = 0;
    for (long long c : sorted_costs) {
        acc += c;
        if (acc > budget_) {
            break;
        }
        ++max_k_;
    }
}

bool BudgetSubsetStream::advance_combination() {
    // Next k-combination of indices in lexicographic order.
    int n = static_cast<int>(cand_.size());
    int i = k_ - 1;
    while (i >= 0 && idx_[i] == n - k_ + i) {
        --i;
    }
    if (i < 0) {
        return false;
    }
    ++idx_[i];
    for (int j = i + 1; j < k_; ++j) {
        idx_[j] = idx_[j - 1] + 1;
    }
    return true;
}

bool BudgetSubsetStream::next(VertexSet& out) {
    while (!done_) {
        if (first_) {
            first_ = false;
            out.clear();  // the empty set, size 0
            return true;
        }
        // Move to the next combination, growing the size when exhausted.
        bool have = k_ > 0 && advance_combination();
        while (!have) {
            ++k_;
            if (k_ > max_k_) {
                done_ = true;
                return false;
            }
            idx_.resize(k_);
            std::iota(idx_.begin(), idx_.end(), 0);
            have = true;
        }
        long long total = 0;
        for (int i : idx_) {
            total += cost_[i];
        }
        if (total <= budget_) {
            out.clear();
            for (int i : idx_) {
                out.push_back(cand_[i]);
            }
            return true;
        }
    }
    return false;
}

BudgetSubsetStream enumerate_budget_subsets(const std::vector<long long>& costs,
                                            VertexSet candidates, long long budget) {
    return BudgetSubsetStream(costs, std::move(candidates), budget);
}

namespace {

struct PlayCounter {
    long long used = 0;
    long long cap = 0;

    void tick() {
        if (++used > cap) {
            throw SizeCapError(
                "instance too large for exact solve: play cap of " + std::to_string(cap) +
                " inner plays exceeded");
        }
    }
};

VertexSet all_vertices(const Instance& inst) {
    VertexSet v(inst.n());
    std::iota(v.begin(), v.end(), 0);
    return v;
}

GameValue protect_inner(const Instance& inst, const VertexSet& D, const VertexSet& I,
                        const VertexSet& universe, PlayCounter& counter) {
    VertexSet blocked = set_union(D, I);
    VertexSet pool = set_difference(universe, blocked);
    BudgetSubsetStream stream =
        enumerate_budget_subsets(inst.prot_cost, std::move(pool), inst.lambda);
    std::optional<GameValue> best;
    VertexSet P;
    while (stream.next(P)) {
        counter.tick();
        StrategyTriple strat{D, I, P};
        long long value = play(inst, strat).value;
        if (!best || value > best->value) {
            best = GameValue{value, std::move(strat)};
        }
    }
    return *best;  // the empty protection is always feasible
}

GameValue attack_inner(const Instance& inst, const VertexSet& D, PlayCounter& counter) {
    VertexSet pool = set_difference(all_vertices(inst), D);
    BudgetSubsetStream stream =
        enumerate_budget_subsets(inst.attack_cost, std::move(pool), inst.phi);
    std::optional<GameValue> best;
    VertexSet I;
    while (stream.next(I)) {
        counter.tick();
        StrategyTriple strat{D, I, {}};
        long long value = play(inst, strat).value;
        if (!best || value < best->value) {
            best = GameValue{value, std::move(strat)};
        }
    }
    return *best;
}

GameValue attack_protect_inner(const Instance& inst, const VertexSet& D,
                               PlayCounter& counter) {
    VertexSet pool = set_difference(all_vertices(inst), D);
    BudgetSubsetStream stream =
        enumerate_budget_subsets(inst.attack_cost, std::move(pool), inst.phi);
    std::optional<GameValue> worst;
    VertexSet I;
    VertexSet universe = all_vertices(inst);
    while (stream.next(I)) {
        GameValue response = protect_inner(inst, D, I, universe, counter);
        if (!worst || response.value < worst->value) {
            worst = std::move(response);
        }
    }
    return *worst;
}

// Polynomial inner attack for unitary undirected instances: infect one vertex
// in each of the phi largest components of the graph with D deleted.
GameValue largest_components_attack(const Instance& inst, const VertexSet& D,
                                    PlayCounter& counter) {
    counter.tick();
    InducedSubgraph sub = induced_subgraph(inst.graph, D);
    std::vector<VertexSet> comps = connected_components(sub.graph);
    long long take = std::min<long long>(inst.phi, static_cast<long long>(comps.size()));
    GameValue out;
    out.witness.D = D;
    long long infected = 0;
    for (long long i = 0; i < take; ++i) {
        infected += static_cast<long long>(comps[i].size());
        out.witness.I.push_back(sub.old_of_new[comps[i].front()]);
    }
    out.witness.I = normalize_set(std::move(out.witness.I));
    out.value = inst.total_benefit() - infected;
    return out;
}

}  // namespace

GameValue best_protect(const Instance& inst, const VertexSet& D, const VertexSet& I,
                       const SolveLimits& limits) {
    return best_protect_over(inst, D, I, all_vertices(inst), limits);
}

GameValue best_protect_over(const Instance& inst, const VertexSet& D, const VertexSet& I,
                            const VertexSet& universe, const SolveLimits& limits) {
    inst.validate();
    if (sets_intersect(D, I)) {
        throw ValidationError("D and I overlap");
    }
    PlayCounter counter{0, limits.max_plays};
    return protect_inner(inst, D, I, universe, counter);
}

GameValue best_attack(const Instance& inst, const VertexSet& D, const SolveLimits& limits) {
    inst.validate();
    PlayCounter counter{0, limits.max_plays};
    return attack_inner(inst, D, counter);
}

GameValue best_attack_protect(const Instance& inst, const VertexSet& D,
                              const SolveLimits& limits) {
    inst.validate();
    PlayCounter counter{0, limits.max_plays};
    return attack_protect_inner(inst, D, counter);
}

GameValue best_vaccination_attack(const Instance& inst, const SolveLimits& limits) {
    inst.validate();
    PlayCounter counter{0, limits.max_plays};
    bool poly_inner = inst.unitary() && !inst.graph.directed();
    BudgetSubsetStream stream =
        enumerate_budget_subsets(inst.vacc_cost, all_vertices(inst), inst.omega);
    std::optional<GameValue> best;
    VertexSet D;
    while (stream.next(D)) {
        GameValue response = poly_inner ? largest_components_attack(inst, D, counter)
                                        : attack_inner(inst, D, counter);
        if (!best || response.value > best->value) {
            best = std::move(response);
        }
    }
    return *best;
}

GameValue solve_mcn(const Instance& inst, const SolveLimits& limits) {
    inst.validate();
    PlayCounter counter{0, limits.max_plays};
    BudgetSubsetStream stream =
        enumerate_budget_subsets(inst.vacc_cost, all_vertices(inst), inst.omega);
    std::optional<GameValue> best;
    VertexSet D;
    while (stream.next(D)) {
        GameValue response = attack_protect_inner(inst, D, counter);
        if (!best || response.value > best->value) {
            best = std::move(response);
        }
    }
    return *best;
}

}  // namespace mcn
