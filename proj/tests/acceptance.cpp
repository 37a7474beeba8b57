// Acceptance gate: exercises the workbench end to end and prints exactly one
// PASS/FAIL line per criterion. Exit code 0 iff every criterion passes.
//
//   1  six-vertex demo: full solve value and the drawn strategy's saved set
//   2  polytree candidates and the unique optimal two-vertex protection
//   3  tree protection DP == brute force on 200 random trees
//   4  arborescence protection greedy == brute force on 200 random instances
//   5  component attack rules == brute force on 200 random undirected instances
//   6  nine reduction round trips (50 samples each) plus the frozen digit table
//   7  deletion decomposition holds on 10^4 random (instance, strategy) pairs
//   8  tree DP completes at n=60, budget 10, five attacks, within 30 s
//   9  every outcome played during criteria 1-7 passes the consistency check

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "mcn/generators.hpp"
#include "mcn/poly.hpp"
#include "mcn/propagation.hpp"
#include "mcn/reductions.hpp"
#include "mcn/rng.hpp"
#include "mcn/solvers.hpp"
#include "tik_fixture.hpp"

using namespace mcn;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool ok = false;
    std::string detail;
};

// Consistency bookkeeping for criterion 9, fed by the play observer while
// criteria 1-7 run.
long long g_outcomes = 0;
long long g_inconsistent = 0;
std::string g_first_violation;

void start_observing() {
    set_play_observer([](const Instance& inst, const StrategyTriple& strat,
                         const PlayOutcome& outcome) {
        // The consistency check replays the strategy itself; skip those nested
        // plays or the observer would recurse forever.
        static bool checking = false;
        if (checking) {
            return;
        }
        ++g_outcomes;
        checking = true;
        ConsistencyVerdict v = check_trilevel_consistency(inst, strat, outcome);
        checking = false;
        if (!v.consistent) {
            ++g_inconsistent;
            if (g_first_violation.empty() && !v.violations.empty()) {
                g_first_violation = v.violations.front();
            }
        }
    });
}

// Draws `count` distinct vertex ids from [0, n).
VertexSet draw_vertices(SplitMix64& rng, int n, int count) {
    VertexSet picked;
    while (static_cast<int>(picked.size()) < count) {
        int v = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
        if (!set_contains(picked, v)) {
            picked = set_union(picked, {v});
        }
    }
    return picked;
}

Verdict criterion_demo() {
    Instance inst = fixtures::six_vertex_demo();
    GameValue r = solve_mcn(inst);
    PlayOutcome own = play(inst, r.witness);
    StrategyTriple drawn{fixtures::named({3}), fixtures::named({2}), fixtures::named({1})};
    PlayOutcome fig = play(inst, drawn);
    bool ok = r.value == 4 && own.value == 4 && fig.value == 4 &&
              fig.saved == fixtures::named({1, 3, 4, 5});
    return {ok, "full solve value 4; drawn strategy saves vertices {1,3,4,5}"};
}

Verdict criterion_candidates() {
    Graph g = fixtures::twelve_vertex_polytree();
    VertexSet I = fixtures::named({10, 11, 12});
    CandidateSet c = compute_candidates(g, I);
    bool ok = c.members == fixtures::named({1, 2, 3, 9}) &&
              c.values == std::vector<long long>{1, 6, 1, 1};

    Instance inst = make_unitary_instance(g, 0, 3, 2);
    GameValue best = best_protect(inst, {}, I);
    ok = ok && best.value == 8 && best.witness.P == fixtures::named({1, 3});

    // Uniqueness: no other protection within budget 2 reaches the optimum.
    VertexSet all;
    for (int v = 0; v < inst.n(); ++v) {
        all.push_back(v);
    }
    BudgetSubsetStream stream(inst.prot_cost, set_difference(all, I), inst.lambda);
    VertexSet P;
    int optimal_count = 0;
    while (stream.next(P)) {
        if (play(inst, {{}, I, P}).value == best.value) {
            ++optimal_count;
        }
    }
    ok = ok && optimal_count == 1;
    return {ok, "candidates {1,2,3,9} with values (1,6,1,1); unique optimum P={1,3}"};
}

Verdict criterion_tree_dp() {
    SplitMix64 rng(0xACCE0003);
    int mismatches = 0;
    for (int t = 0; t < 200; ++t) {
        int n = 2 + static_cast<int>(rng.below(13));  // 2..14
        Instance inst = gen_random_instance("tree", n, rng.next());
        int attacks = static_cast<int>(rng.below(4));  // 0..3
        VertexSet I = draw_vertices(rng, n, std::min(attacks, n));
        inst.phi = std::max<long long>(1, static_cast<long long>(I.size()));
        inst.lambda = static_cast<long long>(rng.below(5));  // 0..4
        ProtectPlan dp = protect_tree_dp(inst, I, inst.lambda);
        GameValue oracle = best_protect(inst, {}, I);
        if (dp.value != oracle.value || play(inst, {{}, I, dp.P}).value != dp.value) {
            ++mismatches;
        }
    }
    return {mismatches == 0,
            "tree DP vs brute force on 200 random trees: " + std::to_string(mismatches) +
                " mismatches"};
}

Verdict criterion_arborescence() {
    SplitMix64 rng(0xACCE0004);
    int mismatches = 0;
    for (int t = 0; t < 200; ++t) {
        int n = 2 + static_cast<int>(rng.below(13));
        Instance inst = gen_random_instance("arborescence", n, rng.next());
        if (t % 2 == 1) {
            for (int v = 0; v < n; ++v) {
                inst.benefit[v] = rng.range(1, 9);
            }
        }
        int attacks = 1 + static_cast<int>(rng.below(3));  // 1..3
        VertexSet I = draw_vertices(rng, n, std::min(attacks, n));
        inst.phi = static_cast<long long>(I.size());
        inst.lambda = static_cast<long long>(rng.below(5));
        ProtectPlan greedy = protect_arborescence_greedy(inst, I, inst.lambda);
        GameValue oracle = best_protect(inst, {}, I);
        if (greedy.value != oracle.value ||
            play(inst, {{}, I, greedy.P}).value != greedy.value) {
            ++mismatches;
        }
    }
    return {mismatches == 0,
            "arborescence greedy vs brute force on 200 random instances: " +
                std::to_string(mismatches) + " mismatches"};
}

Verdict criterion_attack_rules() {
    SplitMix64 rng(0xACCE0005);
    const std::vector<std::string> shapes = {"random", "tree", "star", "split"};
    int mismatches = 0;
    for (int t = 0; t < 200; ++t) {
        int n = 1 + static_cast<int>(rng.below(12));  // 1..12
        bool weighted = t % 2 == 1;
        Instance inst = gen_random_instance(shapes[t % shapes.size()], n, rng.next(),
                                            weighted ? WeightMode::weighted
                                                     : WeightMode::unitary);
        inst.phi = static_cast<long long>(rng.below(7));  // 0..6
        long long rule_saved;
        if (weighted) {
            AttackPlan plan = attack_components_weighted(inst, inst.phi);
            rule_saved = inst.total_benefit() - plan.infected;
        } else {
            AttackPlan plan = attack_components_unitary(inst.graph, inst.phi);
            rule_saved = inst.total_benefit() - plan.infected;
        }
        GameValue oracle = best_attack(inst, {});
        if (rule_saved != oracle.value) {
            ++mismatches;
        }
    }
    return {mismatches == 0,
            "component attack rules vs brute force on 200 random instances: " +
                std::to_string(mismatches) + " mismatches"};
}

Verdict criterion_round_trips() {
    int mismatches = 0;
    std::string first;
    uint64_t seed = 0xACCE0006;
    for (const auto& name : reduction_names()) {
        RoundTrip rt = verify_reduction(name, 50, seed++);
        mismatches += rt.mismatches;
        if (rt.mismatches > 0 && first.empty()) {
            first = name + ": " + (rt.notes.empty() ? "mismatch" : rt.notes.front());
        }
    }
    TikInstance tik = reduce_b3cnf_to_tik(fixtures::worked_qbf3());
    bool table_ok = render_tik_digit_table(tik) == fixtures::worked_qbf3_digit_table();
    bool ok = mismatches == 0 && table_ok;
    std::string detail = "9 reductions x 50 round trips: " + std::to_string(mismatches) +
                         " mismatches; digit table " +
                         (table_ok ? "matches byte-for-byte" : "DIFFERS");
    if (!first.empty()) {
        detail += " (" + first + ")";
    }
    return {ok, detail};
}

Verdict criterion_decomposition() {
    SplitMix64 rng(0xACCE0007);
    int failures = 0;
    for (int t = 0; t < 10'000; ++t) {
        int n = 1 + static_cast<int>(rng.below(10));  // 1..10
        const auto& shapes = generator_shapes();
        Instance inst = gen_random_instance(shapes[t % shapes.size()], n, rng.next(),
                                            t % 3 == 0 ? WeightMode::weighted
                                                       : WeightMode::unitary);
        // Random feasible strategy: assign each vertex to one move (or none)
        // while its cost still fits the remaining budget.
        StrategyTriple strat;
        long long omega = inst.omega, phi = inst.phi, lambda = inst.lambda;
        for (int v = 0; v < n; ++v) {
            switch (rng.below(4)) {
                case 0:
                    if (inst.vacc_cost[v] <= omega) {
                        omega -= inst.vacc_cost[v];
                        strat.D.push_back(v);
                    }
                    break;
                case 1:
                    if (inst.attack_cost[v] <= phi) {
                        phi -= inst.attack_cost[v];
                        strat.I.push_back(v);
                    }
                    break;
                case 2:
                    if (inst.prot_cost[v] <= lambda) {
                        lambda -= inst.prot_cost[v];
                        strat.P.push_back(v);
                    }
                    break;
                default:
                    break;
            }
        }
        Decomposition d = property1_decompose(inst, strat);
        PlayOutcome out = play(inst, strat);
        if (d.total != out.value || d.reduced_value + d.removed_benefit != d.total) {
            ++failures;
        }
    }
    return {failures == 0,
            "deletion decomposition on 10^4 random pairs: " + std::to_string(failures) +
                " failures"};
}

Verdict criterion_smoke() {
    SplitMix64 rng(0xACCE0008);
    Instance inst = gen_random_instance("tree", 60, 41);
    VertexSet I = draw_vertices(rng, 60, 5);
    inst.phi = 5;
    auto start = Clock::now();
    ProtectPlan plan = protect_tree_dp(inst, I, 10);
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    bool ok = secs < 30.0 && plan.value >= 0 && plan.value <= 60;
    char buf[128];
    std::snprintf(buf, sizeof buf, "tree DP at n=60, budget 10, five attacks: %.2f s", secs);
    return {ok, buf};
}

Verdict criterion_consistency() {
    bool ok = g_outcomes > 0 && g_inconsistent == 0;
    std::string detail = std::to_string(g_outcomes) + " played outcomes checked, " +
                         std::to_string(g_inconsistent) + " inconsistent";
    if (!g_first_violation.empty()) {
        detail += " (first: " + g_first_violation + ")";
    }
    return {ok, detail};
}

}  // namespace

int main() {
    std::vector<Verdict (*)()> criteria = {
        criterion_demo,        criterion_candidates,  criterion_tree_dp,
        criterion_arborescence, criterion_attack_rules, criterion_round_trips,
        criterion_decomposition, criterion_smoke,       criterion_consistency,
    };

    start_observing();
    bool all_ok = true;
    for (size_t i = 0; i < criteria.size(); ++i) {
        if (i == 7) {
            clear_play_observer();  // consistency covers criteria 1-7 only
        }
        Verdict v;
        try {
            v = criteria[i]();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        all_ok = all_ok && v.ok;
        std::printf("criterion %zu: %s — %s\n", i + 1, v.ok ? "PASS" : "FAIL",
                    v.detail.c_str());
        std::fflush(stdout);
    }
    return all_ok ? 0 : 1;
}
