#pragma once

// Gadget compilers: constructive reductions from classical decision problems
// (CNP on split graphs, Dominating Set, Knapsack and its bilevel/trilevel
// interdiction variants, SAT and quantified CNF) to instances of the game
// and its subgames, plus brute-force source oracles and a round-trip
// verification harness.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mcn/solvers.hpp"

namespace mcn {

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Source-problem types
// ---------------------------------------------------------------------------

// CNF with optional quantifier blocks X, Y, Z (variables are 1-based).
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;  // signed 1-based literals
    std::vector<int> block_x, block_y, block_z;
    std::vector<std::string> var_names;  // optional, size num_vars when present

    void validate() const;
    std::string var_name(int var) const;  // falls back to "x<var>"
    bool eval(const std::vector<uint8_t>& assignment) const;  // assignment[var-1]
};

// Plain knapsack decision problem: profit >= goal within weight capacity.
struct KnapsackInstance {
    std::vector<long long> weight, profit;
    long long capacity = 0;
    long long goal = 0;

    void validate() const;
};

// Bilevel interdiction knapsack: a leader removes items within interdiction
// capacity A; the follower then packs remaining items, constrained to total
// profit at most B, maximizing profit. Yes iff the leader can keep the
// follower's best strictly below `goal`.
struct BikInstance {
    std::vector<long long> weight, profit;  // a_o, p_o
    long long leader_capacity = 0;          // A
    long long profit_cap = 0;               // B
    long long goal = 0;                     // strict upper target on follower profit

    void validate() const;
    long long total_profit() const;
};

// Trilevel interdiction knapsack with two weights per item. Yes iff the
// first player can pick O1 (first weights within capacity_first) so that for
// every adversary pick O2 disjoint from O1 (second weights within
// capacity_second), some O3 disjoint from O2 reaches profit >= goal while
// staying within profit_cap. O3 may reuse O1's items.
struct TikInstance {
    std::vector<BigInt> weight_first, weight_second, profit;  // a', a, p
    BigInt capacity_first, capacity_second;                   // A', A
    BigInt profit_cap;                                        // B
    BigInt goal;
    std::vector<std::string> labels;  // optional, size items when present

    int items() const { return static_cast<int>(profit.size()); }
    void validate() const;
};

struct DominatingSetInstance {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    long long budget = 0;

    void validate() const;
};

// Split graph (clique + independent set) with a deletion budget and a
// pairwise-connectivity goal: Yes iff deleting at most `budget` vertices
// brings the sum of per-component (size choose 2) down to at most `goal`.
struct CnpSplitInstance {
    VertexSet clique, independent;
    std::vector<std::pair<int, int>> edges;
    long long budget = 0;
    long long goal = 0;

    int n() const;
    void validate() const;
};

Graph cnp_split_graph(const CnpSplitInstance& cnp);

// ---------------------------------------------------------------------------
// Reduction certificates
// ---------------------------------------------------------------------------

enum class TargetProblem { protect, attack, attack_protect, vaccination_attack, full_game };
enum class TargetMetric { saved_benefit, infected_benefit };
enum class TargetRelation { less_equal, greater_equal, less };

// Everything needed to decide the source problem on the target side: the
// compiled instance, any pre-committed attack, and how the exact solver's
// value relates to the threshold on a Yes instance.
struct ReductionCertificate {
    Instance target;
    VertexSet fixed_I;  // pre-committed attack for protection-level targets
    TargetProblem problem = TargetProblem::full_game;
    TargetMetric metric = TargetMetric::saved_benefit;
    TargetRelation relation = TargetRelation::greater_equal;
    long long threshold = 0;
    std::string back_map;  // how to read target witnesses in source terms
};

struct TargetSolve {
    GameValue result;        // solver value (saved benefit) and witness
    long long metric_value;  // result in the certificate's metric
    bool answer;             // metric_value <relation> threshold
};

TargetSolve solve_target(const ReductionCertificate& cert, const SolveLimits& limits = {});

// ---------------------------------------------------------------------------
// The reductions
// ---------------------------------------------------------------------------

// Split-graph CNP -> undirected Protect: a fresh hub joined to the clique is
// attacked; protections play the role of deletions.
ReductionCertificate reduce_cnp_split_to_protect(const CnpSplitInstance& cnp);

// Dominating Set -> unitary Attack-Protect on the same graph: the budget
// leaves the protector exactly one vertex short of covering everything.
ReductionCertificate reduce_dominating_set_to_attack_protect(const DominatingSetInstance& ds);

// Knapsack -> weighted Attack on an edgeless graph.
ReductionCertificate reduce_knapsack_to_attack_w(const KnapsackInstance& kp);

// Bilevel interdiction knapsack -> weighted Attack-Protect on a star.
ReductionCertificate reduce_bik_to_attack_protect_w(const BikInstance& bik);

// Bilevel interdiction knapsack -> weighted Vaccination-Attack on a star.
ReductionCertificate reduce_bik_to_vaccination_attack_w(const BikInstance& bik);

// 3-alternating quantified CNF (exists X, forall Y, exists Z) -> trilevel
// interdiction knapsack via base-10 digit encoding with an exact profit
// target. Supports at most one universally quantified variable: with two or
// more, the second level could afford to interdict both items of one of them
// by skipping another, and such a move decodes to no assignment.
TikInstance reduce_b3cnf_to_tik(const CnfFormula& qbf);

// Trilevel interdiction knapsack -> weighted full game on chain gadgets.
ReductionCertificate reduce_tik_to_mcn_w(const TikInstance& tik);

// 3-SAT -> directed unitary Attack with literal vertices, shared paths and
// clause vertices.
ReductionCertificate reduce_3sat_to_attack_dir(const CnfFormula& cnf);

// 2-alternating quantified CNF (exists X, forall Y, not E) -> directed
// unitary Vaccination-Attack with cliques in place of paths.
ReductionCertificate reduce_b2cnf_to_vaccination_attack_dir(const CnfFormula& qbf);

// Split-graph CNP -> directed Protect with doubled vertices.
ReductionCertificate reduce_cnp_split_to_protect_dir(const CnpSplitInstance& cnp);

// Renders the digit matrix of a trilevel interdiction knapsack: one row per
// item (first weight, second weight, profit) plus the capacity rows, most
// significant digit first.
std::string render_tik_digit_table(const TikInstance& tik);

// ---------------------------------------------------------------------------
// Brute-force source oracles
// ---------------------------------------------------------------------------

struct OracleCaps {
    int max_bools = 12;      // SAT / quantified CNF
    int max_bik_items = 10;  // bilevel knapsack
    int max_tik_items = 15;  // trilevel knapsack (submask-sum evaluation)
    int max_vertices = 10;   // Dominating Set / CNP
};

bool sat3_bruteforce(const CnfFormula& cnf, const OracleCaps& caps = {},
                     std::vector<uint8_t>* assignment = nullptr);
bool qbf3_bruteforce(const CnfFormula& qbf, const OracleCaps& caps = {},
                     std::vector<uint8_t>* x_assignment = nullptr);
// Inner two levels of the 3-alternation with X fixed: forall Y exists Z, E.
bool qbf3_inner(const CnfFormula& qbf, const std::vector<uint8_t>& x_assignment);
bool qbf2_bruteforce(const CnfFormula& qbf, const OracleCaps& caps = {},
                     std::vector<uint8_t>* x_assignment = nullptr);
// Inner level of the 2-alternation with X fixed: forall Y, not E.
bool qbf2_inner(const CnfFormula& qbf, const std::vector<uint8_t>& x_assignment);

bool dominating_set_bruteforce(const DominatingSetInstance& ds, const OracleCaps& caps = {},
                               VertexSet* witness = nullptr);
bool is_dominating_set(const DominatingSetInstance& ds, const VertexSet& set);

long long cnp_split_bruteforce_value(const CnpSplitInstance& cnp, const OracleCaps& caps = {},
                                     VertexSet* witness = nullptr);
bool cnp_split_bruteforce(const CnpSplitInstance& cnp, const OracleCaps& caps = {});

long long bik_follower_best(const BikInstance& bik, const std::vector<int>& leader_set);
long long bik_bruteforce_value(const BikInstance& bik, const OracleCaps& caps = {},
                               std::vector<int>* leader_set = nullptr);
bool bik_bruteforce(const BikInstance& bik, const OracleCaps& caps = {});

// Inner two levels with O1 fixed (item indices).
bool tik_inner(const TikInstance& tik, const std::vector<int>& first_set);
bool tik_bruteforce(const TikInstance& tik, const OracleCaps& caps = {},
                    std::vector<int>* first_set = nullptr);

struct Sat3Source { CnfFormula formula; };
struct Qbf3Source { CnfFormula formula; };
struct Qbf2Source { CnfFormula formula; };

using SourceProblem = std::variant<Sat3Source, Qbf3Source, Qbf2Source, KnapsackInstance,
                                   BikInstance, TikInstance, DominatingSetInstance,
                                   CnpSplitInstance>;

struct SourceAnswer {
    bool yes = false;
    std::string witness;  // human-readable certificate when yes
};

SourceAnswer solve_source_bruteforce(const SourceProblem& src, const OracleCaps& caps = {});

// ---------------------------------------------------------------------------
// File formats
// ---------------------------------------------------------------------------

// DIMACS CNF; quantifier blocks may be declared in a comment line
// "c blocks X: 1 2 / Y: 3 / Z: 4".
CnfFormula parse_cnf_dimacs(const std::string& text);

KnapsackInstance parse_knapsack_json(const std::string& text);
BikInstance parse_bik_json(const std::string& text);
TikInstance parse_tik_json(const std::string& text);
std::string serialize_tik_json(const TikInstance& tik);
DominatingSetInstance parse_dominating_set_json(const std::string& text);
CnpSplitInstance parse_cnp_split_json(const std::string& text);

// ---------------------------------------------------------------------------
// Round-trip verification
// ---------------------------------------------------------------------------

// The nine addressable reductions; "bik" covers both star gadgets.
std::vector<std::string> reduction_names();

struct RoundTrip {
    std::string reduction;
    int samples = 0;
    int mismatches = 0;
    std::vector<std::string> notes;  // first few failure descriptions
};

// Draws `samples` seeded random source instances, decides each by brute
// force, compiles it, decides the target with the exact solver, and compares
// answers; on Yes instances also transports the target witness back and
// checks it against the source. Throws on unknown names.
RoundTrip verify_reduction(const std::string& name, int samples, uint64_t seed,
                           const SolveLimits& limits = {});

}  // namespace mcn
