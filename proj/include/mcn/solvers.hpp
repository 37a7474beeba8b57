#pragma once

// Brute-force optimal play for the full game and its subgames. These serve
// as ground-truth oracles for the polynomial algorithms and the reduction
// round trips, and as the full solver at desk scale.

#include <optional>

#include "mcn/propagation.hpp"

namespace mcn {

// Optimal value plus a witness: the strategy components fixed so far
// together with the optimal next move(s). Replaying the witness through
// play() reproduces the value exactly.
struct GameValue {
    long long value = 0;
    StrategyTriple witness;
};

// Trilevel enumeration is triply exponential in the worst case; solvers
// refuse instances once the number of inner plays exceeds this cap.
struct SolveLimits {
    long long max_plays = 10'000'000;
};

// Streams every subset S of `candidates` with total cost <= budget, in
// canonical order: size ascending, then lexicographic on the sorted ids.
// The empty set always comes first. Costs are indexed by vertex id.
class BudgetSubsetStream {
public:
    BudgetSubsetStream(const std::vector<long long>& costs, VertexSet candidates,
                       long long budget);

    // Fills `out` with the next subset; false when exhausted.
    bool next(VertexSet& out);

private:
    VertexSet cand_;
    std::vector<long long> cost_;  // cost_[i] = cost of cand_[i]
    long long budget_ = 0;
    int k_ = 0;
    int max_k_ = 0;
    bool first_ = true;
    bool done_ = false;
    std::vector<int> idx_;  // current combination as indices into cand_

    bool advance_combination();
};

BudgetSubsetStream enumerate_budget_subsets(const std::vector<long long>& costs,
                                            VertexSet candidates, long long budget);

// Last level alone: maximize saved benefit over feasible protections,
// with D and I fixed. Ties broken by canonical subset order.
GameValue best_protect(const Instance& inst, const VertexSet& D, const VertexSet& I,
                       const SolveLimits& limits = {});

// Same, but the protector may only pick from `universe`; used to check that
// restricting the search to candidate vertices never changes the value.
GameValue best_protect_over(const Instance& inst, const VertexSet& D, const VertexSet& I,
                            const VertexSet& universe, const SolveLimits& limits = {});

// Attacker alone (no protection level): minimize saved benefit over feasible
// attacks, with D fixed.
GameValue best_attack(const Instance& inst, const VertexSet& D,
                      const SolveLimits& limits = {});

// min over attacks of (max over protections), with D fixed.
GameValue best_attack_protect(const Instance& inst, const VertexSet& D,
                              const SolveLimits& limits = {});

// max over vaccinations of (min over attacks), no protection level. On
// unitary undirected instances the inner minimization uses the
// largest-components attack instead of enumeration.
GameValue best_vaccination_attack(const Instance& inst, const SolveLimits& limits = {});

// The full three-level optimum.
GameValue solve_mcn(const Instance& inst, const SolveLimits& limits = {});

}  // namespace mcn
