#include "mcn/propagation.hpp"

#include <algorithm>

namespace mcn {

namespace {
PlayObserver g_play_observer;
}  // namespace

void set_play_observer(PlayObserver observer) {
    g_play_observer = std::move(observer);
}

void clear_play_observer() {
    g_play_observer = nullptr;
}

static void check_strategy(const Instance& inst, const StrategyTriple& strat) {
    auto check_level = [&](const VertexSet& s, const std::vector<long long>& cost,
                           long long budget, const char* label) {
        long long total = 0;
        for (int v : s) {
            if (v < 0 || v >= inst.n()) {
                throw ValidationError(std::string(label) + " contains out-of-range vertex " +
                                      std::to_string(v));
            }
            total += cost[v];
        }
        if (total > budget) {
            throw ValidationError(std::string(label) + " cost " + std::to_string(total) +
                                  " exceeds budget " + std::to_string(budget));
        }
    };
    check_level(strat.D, inst.vacc_cost, inst.omega, "D");
    check_level(strat.I, inst.attack_cost, inst.phi, "I");
    check_level(strat.P, inst.prot_cost, inst.lambda, "P");
    auto check_disjoint = [](const VertexSet& a, const VertexSet& b, const char* what) {
        auto ia = a.begin();
        auto ib = b.begin();
        while (ia != a.end() && ib != b.end()) {
            if (*ia < *ib) {
                ++ia;
            } else if (*ib < *ia) {
                ++ib;
            } else {
                throw ValidationError(std::string("overlap violation: vertex ") +
                                      std::to_string(*ia) + " in " + what);
            }
        }
    };
    check_disjoint(strat.D, strat.I, "both D and I");
    check_disjoint(strat.I, strat.P, "both I and P");
    check_disjoint(strat.D, strat.P, "both D and P");
}

PlayOutcome play(const Instance& inst, const StrategyTriple& strat) {
    inst.validate();
    check_strategy(inst, strat);

    // Vaccinated and protected vertices behave exactly like deleted ones:
    // remove them, then spread the infection from I along remaining arcs.
    VertexSet removed = set_union(strat.D, strat.P);
    InducedSubgraph sub = induced_subgraph(inst.graph, removed);
    VertexSet sub_sources;
    for (int v : strat.I) {
        sub_sources.push_back(sub.new_of_old[v]);
    }
    sub_sources = normalize_set(std::move(sub_sources));
    VertexSet sub_infected = reachable_set(sub.graph, sub_sources);

    PlayOutcome out;
    out.alpha.assign(inst.n(), 1);
    for (int v : sub_infected) {
        out.alpha[sub.old_of_new[v]] = 0;
    }
    for (int v = 0; v < inst.n(); ++v) {
        if (out.alpha[v]) {
            out.saved.push_back(v);
            out.value += inst.benefit[v];
        } else {
            out.infected.push_back(v);
        }
    }
    if (g_play_observer) {
        g_play_observer(inst, strat, out);
    }
    return out;
}

ConsistencyVerdict check_trilevel_consistency(const Instance& inst,
                                              const StrategyTriple& strat,
                                              const PlayOutcome& outcome) {
    ConsistencyVerdict verdict;
    auto fail = [&](std::string msg) {
        verdict.consistent = false;
        verdict.violations.push_back(std::move(msg));
    };
    int n = inst.n();
    if (static_cast<int>(outcome.alpha.size()) != n) {
        fail("alpha has wrong length");
        return verdict;
    }
    std::vector<uint8_t> z(n, 0), y(n, 0), x(n, 0);
    for (int v : strat.D) z[v] = 1;
    for (int v : strat.I) y[v] = 1;
    for (int v : strat.P) x[v] = 1;

    // alpha_v <= 1 + z_v - y_v: an attacked, unvaccinated vertex cannot be saved.
    for (int v = 0; v < n; ++v) {
        if (outcome.alpha[v] > 1 + z[v] - y[v]) {
            fail("vertex " + std::to_string(v) +
                 ": saved although attacked and unvaccinated");
        }
    }
    // alpha_v <= alpha_u + x_v + z_v: infection crosses (u,v) unless v is shielded.
    for (auto [u, v] : inst.graph.arcs()) {
        if (outcome.alpha[v] > outcome.alpha[u] + x[v] + z[v]) {
            fail("arc (" + std::to_string(u) + "," + std::to_string(v) +
                 "): saved endpoint fed by an infected one without protection");
        }
    }
    // Maximality: the feasible alpha with the most ones is exactly the
    // complement of the reachable set; the coupled constraints mean a
    // one-flip check is not enough (a whole cycle could flip together).
    PlayOutcome reference = play(inst, strat);
    for (int v = 0; v < n; ++v) {
        if (outcome.alpha[v] < reference.alpha[v]) {
            fail("vertex " + std::to_string(v) +
                 ": alpha not maximal (vertex could be saved)");
        }
    }
    return verdict;
}

Decomposition property1_decompose(const Instance& inst, const StrategyTriple& strat) {
    Decomposition dec;
    VertexSet removed = set_union(strat.D, strat.P);
    for (int v : removed) {
        dec.removed_benefit += inst.benefit[v];
    }

    // Attack-only play on the graph with D u P deleted.
    InducedSubgraph sub = induced_subgraph(inst.graph, removed);
    Instance reduced;
    reduced.graph = sub.graph;
    for (int old_id : sub.old_of_new) {
        reduced.benefit.push_back(inst.benefit[old_id]);
        reduced.vacc_cost.push_back(inst.vacc_cost[old_id]);
        reduced.attack_cost.push_back(inst.attack_cost[old_id]);
        reduced.prot_cost.push_back(inst.prot_cost[old_id]);
    }
    reduced.omega = 0;
    reduced.phi = inst.phi;
    reduced.lambda = 0;
    StrategyTriple attack_only;
    for (int v : strat.I) {
        attack_only.I.push_back(sub.new_of_old[v]);
    }
    attack_only.I = normalize_set(std::move(attack_only.I));
    dec.reduced_value = play(reduced, attack_only).value;
    dec.total = dec.reduced_value + dec.removed_benefit;

    long long direct = play(inst, strat).value;
    if (dec.total != direct) {
        throw ValidationError("decomposition mismatch: " + std::to_string(dec.total) +
                              " vs direct " + std::to_string(direct));
    }
    return dec;
}

}  // namespace mcn
