#pragma once

// Polynomial and pseudo-polynomial special-case algorithms: component-based
// attacks, knapsack DP, the tree-protection dynamic program, candidate
// computation and the arborescence protection greedy. Each is verified
// against the brute-force oracles in solvers.hpp.

#include <vector>

#include "mcn/graph.hpp"

namespace mcn {

// Attack chosen by a polynomial rule: the vertices to infect plus the total
// infected weight (count for the unitary rule, benefit for the weighted one).
struct AttackPlan {
    VertexSet I;
    long long infected = 0;
};

// Unitary undirected attack: infecting one vertex per component floods it,
// so an optimal budget-phi attack hits the phi largest components. Returns
// the smallest-id vertex of each chosen component.
AttackPlan attack_components_unitary(const Graph& g, long long phi);

// Weighted undirected attack: each component C collapses to an item with
// profit sum_b(C) and weight min_h(C); a knapsack over the attack budget
// selects the components, and the cheapest (then smallest-id) vertex of each
// is infected.
AttackPlan attack_components_weighted(const Instance& inst, long long phi);

// 0/1 knapsack by the standard profit table. `selection` lists chosen item
// indices ascending; ties prefer excluding later items.
struct KnapsackResult {
    long long profit = 0;
    std::vector<int> selection;
};

KnapsackResult knapsack_dp(const std::vector<long long>& weights,
                           const std::vector<long long>& profits, long long capacity);

// A protection together with the saved benefit it achieves.
struct ProtectPlan {
    VertexSet P;
    long long value = 0;
};

// Exact optimal protection on unitary trees and forests (undirected, unit
// benefits and protection costs) against a fixed attack I, protection budget
// `lambda`. Runs the subtree dynamic program per component plus a budget
// split across components; matches best_protect exactly.
ProtectPlan protect_tree_dp(const Instance& inst, const VertexSet& I, long long lambda);

// Optimal saved count for the single tree component containing `root`,
// rooted there, as a function of the protection budget 0..lambda. The vector
// is root-independent; exposed so tests can confirm that.
std::vector<long long> tree_budget_values(const Instance& inst, const VertexSet& I,
                                          long long lambda, int root);

// Protection candidates for a directed graph under attack I: the vertices
// whose isolated protection yields a set-inclusion-maximal saved set.
// values[i] is the saved count when members[i] is the only protected vertex.
struct CandidateSet {
    VertexSet members;
    std::vector<long long> values;
};

CandidateSet compute_candidates(const Graph& g, const VertexSet& I);

// Optimal protection when the graph induced by the unattacked vertices is an
// arborescence forest: protect the budget-many candidates of largest
// benefit-weighted value (ties to the smallest id). Benefits may be
// non-unitary; protection costs must be 1.
ProtectPlan protect_arborescence_greedy(const Instance& inst, const VertexSet& I,
                                        long long lambda);

// Sum over components of the graph minus `removed` of (size choose 2).
long long pairwise_connectivity(const Graph& g, const VertexSet& removed);

}  // namespace mcn
