#include "mcn/poly.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <memory>
#include <string>
#include <utility>

namespace mcn {

namespace {

// Infeasible-entry sentinel: negative enough to stay negative (and overflow
// free) after any additive chain of table entries. Real values are >= 0, so
// feasibility is simply `v >= 0`.
constexpr long long kNegInf = std::numeric_limits<long long>::min() / 4;

bool feasible(long long v) { return v >= 0; }

void check_vertex_set(const Graph& g, const VertexSet& s, const char* what) {
    for (int v : s) {
        if (v < 0 || v >= g.n()) {
            throw ValidationError(std::string(what) + ": vertex id out of range");
        }
    }
}

}  // namespace

AttackPlan attack_components_unitary(const Graph& g, long long phi) {
    if (g.directed()) {
        throw ValidationError("component-based attack requires an undirected graph");
    }
    if (phi < 0) {
        throw ValidationError("negative attack budget");
    }
    std::vector<VertexSet> comps = connected_components(g);
    long long take = std::min<long long>(phi, static_cast<long long>(comps.size()));
    AttackPlan plan;
    for (long long i = 0; i < take; ++i) {
        plan.I.push_back(comps[i].front());
        plan.infected += static_cast<long long>(comps[i].size());
    }
    plan.I = normalize_set(std::move(plan.I));
    return plan;
}

AttackPlan attack_components_weighted(const Instance& inst, long long phi) {
    inst.validate();
    if (inst.graph.directed()) {
        throw ValidationError("component-based attack requires an undirected graph");
    }
    if (phi < 0) {
        throw ValidationError("negative attack budget");
    }
    std::vector<VertexSet> comps = connected_components(inst.graph);

    // Collapse each component to an item: infecting its cheapest vertex
    // floods the whole component.
    std::vector<long long> weights, profits;
    std::vector<int> entry;  // cheapest (then smallest-id) vertex per component
    for (const VertexSet& comp : comps) {
        long long profit = 0;
        long long cheapest = inst.attack_cost[comp.front()];
        int vertex = comp.front();
        for (int v : comp) {
            profit += inst.benefit[v];
            if (inst.attack_cost[v] < cheapest) {
                cheapest = inst.attack_cost[v];
                vertex = v;
            }
        }
        weights.push_back(cheapest);
        profits.push_back(profit);
        entry.push_back(vertex);
    }

    KnapsackResult chosen = knapsack_dp(weights, profits, phi);
    AttackPlan plan;
    plan.infected = chosen.profit;
    for (int item : chosen.selection) {
        plan.I.push_back(entry[item]);
    }
    plan.I = normalize_set(std::move(plan.I));
    return plan;
}

KnapsackResult knapsack_dp(const std::vector<long long>& weights,
                           const std::vector<long long>& profits, long long capacity) {
    if (weights.size() != profits.size()) {
        throw ValidationError("knapsack: weights and profits differ in length");
    }
    for (size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 0 || profits[i] < 0) {
            throw ValidationError("knapsack: negative weight or profit");
        }
    }
    if (capacity < 0) {
        throw ValidationError("knapsack: negative capacity");
    }

    const long long items = static_cast<long long>(weights.size());
    constexpr long long kMaxTableCells = 20'000'000;
    if ((items + 1) * (capacity + 1) > kMaxTableCells) {
        throw SizeCapError(
            "knapsack table too large; use the exact solver or a smaller capacity");
    }

    const size_t width = static_cast<size_t>(capacity) + 1;
    // dp[i][w] = best profit using the first i items with weight budget w.
    std::vector<long long> dp((static_cast<size_t>(items) + 1) * width, 0);
    for (long long i = 1; i <= items; ++i) {
        const long long w_i = weights[i - 1];
        const long long p_i = profits[i - 1];
        for (long long w = 0; w <= capacity; ++w) {
            long long best = dp[(i - 1) * width + w];
            if (w_i <= w) {
                best = std::max(best, dp[(i - 1) * width + (w - w_i)] + p_i);
            }
            dp[i * width + w] = best;
        }
    }

    KnapsackResult result;
    result.profit = dp[items * width + capacity];
    long long w = capacity;
    for (long long i = items; i >= 1; --i) {
        // Prefer exclusion on ties so the selection is canonical and minimal.
        if (dp[i * width + w] == dp[(i - 1) * width + w]) {
            continue;
        }
        result.selection.push_back(static_cast<int>(i - 1));
        w -= weights[i - 1];
    }
    std::sort(result.selection.begin(), result.selection.end());
    return result;
}

namespace {

// ---------------------------------------------------------------------------
// Tree-protection dynamic program.
//
// The tree is rooted and processed bottom-up. For each vertex a the table
// F_a(c, m, s) is the maximum number of vertices of a's subtree already
// *confirmed* saved, when c protections are spent inside the subtree and the
// part of the subtree still connected to a ("open": unprotected and not yet
// separated from a) has m vertices; s = 1 means that open part touches an
// attacked vertex and is doomed. Open vertices are counted in m but not in
// F; they are credited exactly once: when an ancestor's protection seals
// them off clean (credit m per child), or at the root (credit m * (1 - s)).
//
// States by case:
//   a attacked            -> (c, 0, 1); children contribute their best flat
//                            value (their open parts are doomed via a).
//   a protected           -> (c, 0, 0), c >= 1; each child contributes its
//                            best value plus m'(1 - s') credit, and a itself
//                            adds +1.
//   a free (neither)      -> (c, m >= 1, s); child open parts merge with a,
//                            m = 1 + sum m', s = max s'.
// The case is recoverable from the state (attacked / m == 0 / m >= 1),
// which keeps backtracking unambiguous. Vaccinated vertices never occur
// here: the protection subgame is played after deletion of D.
// ---------------------------------------------------------------------------

struct DpTable {
    int cmax = 0;
    int mmax = 0;
    std::vector<long long> val;

    DpTable() = default;
    DpTable(int c, int m)
        : cmax(c),
          mmax(m),
          val(static_cast<size_t>(c + 1) * (m + 1) * 2, kNegInf) {}

    long long& at(int c, int m, int s) {
        return val[(static_cast<size_t>(c) * (mmax + 1) + m) * 2 + s];
    }
    long long get(int c, int m, int s) const {
        if (c < 0 || c > cmax || m < 0 || m > mmax) {
            return kNegInf;
        }
        return val[(static_cast<size_t>(c) * (mmax + 1) + m) * 2 + s];
    }
};

// Budget-indexed max-plus convolution of two vectors with -inf guards.
std::vector<long long> convolve(const std::vector<long long>& a,
                                const std::vector<long long>& b, int out_max) {
    std::vector<long long> out(static_cast<size_t>(out_max) + 1, kNegInf);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!feasible(a[i])) {
            continue;
        }
        for (size_t j = 0; j < b.size(); ++j) {
            if (!feasible(b[j]) || i + j > static_cast<size_t>(out_max)) {
                continue;
            }
            out[i + j] = std::max(out[i + j], a[i] + b[j]);
        }
    }
    return out;
}

struct VertexTables {
    DpTable F;
    std::vector<DpTable> G;                      // free-case merge prefixes, G[0..s]
    std::vector<std::vector<long long>> flat;    // per child: max over (m, s)
    std::vector<std::vector<long long>> cred;    // per child: max of F + m(1-s)
    std::vector<std::vector<long long>> flatp;   // prefix convolutions of flat
    std::vector<std::vector<long long>> credp;   // prefix convolutions of cred
};

class TreeDp {
public:
    TreeDp(const Graph& g, const std::vector<uint8_t>& attacked, int lambda, int root)
        : g_(g), attacked_(attacked), lambda_(lambda) {
        build_rooted_structure(root);
        for (int a : postorder_) {
            fill_tables(a);
        }
    }

    // Optimal confirmed-saved count for each budget 0..lambda.
    std::vector<long long> budget_values() const {
        std::vector<long long> vals(static_cast<size_t>(lambda_) + 1, 0);
        const DpTable& F = tables_.at(root_)->F;
        long long running = kNegInf;
        for (int beta = 0; beta <= lambda_; ++beta) {
            if (beta <= F.cmax) {
                for (int m = 0; m <= F.mmax; ++m) {
                    for (int s = 0; s < 2; ++s) {
                        long long v = F.get(beta, m, s);
                        if (feasible(v)) {
                            running = std::max(running, v + m * (1 - s));
                        }
                    }
                }
            }
            assert(feasible(running));
            vals[beta] = running;
        }
        return vals;
    }

    // Protection achieving budget_values()[beta], canonical choice.
    VertexSet backtrack(int beta) const {
        long long target = budget_values()[static_cast<size_t>(beta)];
        const DpTable& F = tables_.at(root_)->F;
        VertexSet P;
        for (int c = 0; c <= std::min(beta, F.cmax); ++c) {
            for (int m = 0; m <= F.mmax; ++m) {
                for (int s = 0; s < 2; ++s) {
                    long long v = F.get(c, m, s);
                    if (feasible(v) && v + m * (1 - s) == target) {
                        recover(root_, c, m, s, P);
                        return normalize_set(std::move(P));
                    }
                }
            }
        }
        assert(false && "no root state matches the optimal value");
        return P;
    }

private:
    const Graph& g_;
    const std::vector<uint8_t>& attacked_;
    int lambda_ = 0;
    int root_ = 0;
    std::vector<int> postorder_;
    std::vector<std::vector<int>> children_;
    std::vector<int> subtree_;  // subtree sizes
    std::vector<std::unique_ptr<VertexTables>> tables_;

    void build_rooted_structure(int root) {
        root_ = root;
        children_.resize(g_.n());
        subtree_.assign(g_.n(), 0);
        tables_.resize(g_.n());
        std::vector<int> parent(g_.n(), -2);
        std::vector<std::pair<int, size_t>> stack{{root, 0}};
        parent[root] = -1;
        // Iterative DFS; children are visited in ascending id order because
        // adjacency lists are sorted.
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next == 0) {
                for (int u : g_.out(v)) {
                    if (parent[u] == -2) {
                        parent[u] = v;
                        children_[v].push_back(u);
                    }
                }
            }
            if (next < children_[v].size()) {
                int child = children_[v][next++];
                stack.emplace_back(child, 0);
            } else {
                postorder_.push_back(v);
                stack.pop_back();
            }
        }
    }

    void fill_tables(int a) {
        auto t = std::make_unique<VertexTables>();
        const std::vector<int>& kids = children_[a];
        const int s_count = static_cast<int>(kids.size());

        t->G.emplace_back(0, 0);
        t->G[0].at(0, 0, 0) = 0;
        t->flatp.push_back({0});
        t->credp.push_back({0});

        int prefix_size = 0;
        for (int k = 0; k < s_count; ++k) {
            const DpTable& Fc = tables_[kids[k]]->F;

            std::vector<long long> flat(static_cast<size_t>(Fc.cmax) + 1, kNegInf);
            std::vector<long long> cred(static_cast<size_t>(Fc.cmax) + 1, kNegInf);
            for (int c = 0; c <= Fc.cmax; ++c) {
                for (int m = 0; m <= Fc.mmax; ++m) {
                    for (int sg = 0; sg < 2; ++sg) {
                        long long v = Fc.get(c, m, sg);
                        if (!feasible(v)) {
                            continue;
                        }
                        flat[c] = std::max(flat[c], v);
                        cred[c] = std::max(cred[c], v + m * (1 - sg));
                    }
                }
            }

            prefix_size += subtree_[kids[k]];
            const int pc = std::min(lambda_, prefix_size);
            t->flatp.push_back(convolve(t->flatp.back(), flat, pc));
            t->credp.push_back(convolve(t->credp.back(), cred, pc));
            t->flat.push_back(std::move(flat));
            t->cred.push_back(std::move(cred));

            const DpTable& prev = t->G.back();
            DpTable merged(pc, prefix_size);
            for (int c = 0; c <= pc; ++c) {
                for (int m = 0; m <= prefix_size; ++m) {
                    for (int cc = 0; cc <= std::min(c, Fc.cmax); ++cc) {
                        for (int mm = 0; mm <= std::min(m, Fc.mmax); ++mm) {
                            for (int sg = 0; sg < 2; ++sg) {
                                long long fv = Fc.get(cc, mm, sg);
                                if (!feasible(fv)) {
                                    continue;
                                }
                                for (int sp = 0; sp < 2; ++sp) {
                                    long long gv = prev.get(c - cc, m - mm, sp);
                                    if (!feasible(gv)) {
                                        continue;
                                    }
                                    int so = std::max(sg, sp);
                                    merged.at(c, m, so) =
                                        std::max(merged.at(c, m, so), fv + gv);
                                }
                            }
                        }
                    }
                }
            }
            t->G.push_back(std::move(merged));
        }

        subtree_[a] = prefix_size + 1;
        const int cmax = std::min(lambda_, subtree_[a]);
        t->F = DpTable(cmax, subtree_[a]);
        if (attacked_[a]) {
            const std::vector<long long>& fl = t->flatp.back();
            for (int c = 0; c <= cmax && c < static_cast<int>(fl.size()); ++c) {
                if (feasible(fl[c])) {
                    t->F.at(c, 0, 1) = fl[c];
                }
            }
        } else {
            const DpTable& G = t->G.back();
            for (int c = 0; c <= G.cmax; ++c) {
                for (int m = 0; m <= G.mmax; ++m) {
                    for (int sg = 0; sg < 2; ++sg) {
                        long long v = G.get(c, m, sg);
                        if (feasible(v)) {
                            t->F.at(c, m + 1, sg) = v;
                        }
                    }
                }
            }
            const std::vector<long long>& cr = t->credp.back();
            for (int c = 1; c <= cmax; ++c) {
                if (c - 1 < static_cast<int>(cr.size()) && feasible(cr[c - 1])) {
                    t->F.at(c, 0, 0) = cr[c - 1] + 1;
                }
            }
        }
        tables_[a] = std::move(t);
    }

    // Splits a prefix-convolution target back into (per-child budget, rest).
    static int split_convolution(const std::vector<long long>& prefix_prev,
                                 const std::vector<long long>& child_vec,
                                 long long target, int budget) {
        for (int cc = 0; cc <= budget && cc < static_cast<int>(child_vec.size()); ++cc) {
            if (!feasible(child_vec[cc])) {
                continue;
            }
            int rest = budget - cc;
            if (rest < static_cast<int>(prefix_prev.size()) &&
                feasible(prefix_prev[rest]) &&
                child_vec[cc] + prefix_prev[rest] == target) {
                return cc;
            }
        }
        assert(false && "convolution split not found");
        return 0;
    }

    // Finds the child state matching a collapsed (flat or credited) value.
    std::pair<int, int> child_state(int child, int c, long long target,
                                    bool credit) const {
        const DpTable& Fc = tables_[child]->F;
        for (int m = 0; m <= Fc.mmax; ++m) {
            for (int sg = 0; sg < 2; ++sg) {
                long long v = Fc.get(c, m, sg);
                if (feasible(v) && v + (credit ? m * (1 - sg) : 0) == target) {
                    return {m, sg};
                }
            }
        }
        assert(false && "child state not found");
        return {0, 0};
    }

    void recover(int a, int c, int m, int s, VertexSet& P) const {
        const VertexTables& t = *tables_[a];
        const std::vector<int>& kids = children_[a];
        const int s_count = static_cast<int>(kids.size());

        if (attacked_[a]) {
            assert(m == 0 && s == 1);
            int budget = c;
            for (int k = s_count; k >= 1; --k) {
                long long target = t.flatp[k][budget];
                int cc = split_convolution(t.flatp[k - 1], t.flat[k - 1], target, budget);
                auto [cm, cs] = child_state(kids[k - 1], cc, t.flat[k - 1][cc], false);
                recover(kids[k - 1], cc, cm, cs, P);
                budget -= cc;
            }
            return;
        }
        if (m == 0) {  // protected
            assert(s == 0 && c >= 1);
            P.push_back(a);
            int budget = c - 1;
            for (int k = s_count; k >= 1; --k) {
                long long target = t.credp[k][budget];
                int cc = split_convolution(t.credp[k - 1], t.cred[k - 1], target, budget);
                auto [cm, cs] = child_state(kids[k - 1], cc, t.cred[k - 1][cc], true);
                recover(kids[k - 1], cc, cm, cs, P);
                budget -= cc;
            }
            return;
        }
        // Free: peel children off the merge prefixes right to left.
        int bc = c;
        int bm = m - 1;
        int bs = s;
        for (int k = s_count; k >= 1; --k) {
            const DpTable& G = t.G[k];
            const DpTable& prev = t.G[k - 1];
            const DpTable& Fc = tables_[kids[k - 1]]->F;
            long long target = G.get(bc, bm, bs);
            assert(feasible(target));
            bool found = false;
            for (int cc = 0; cc <= std::min(bc, Fc.cmax) && !found; ++cc) {
                for (int mm = 0; mm <= std::min(bm, Fc.mmax) && !found; ++mm) {
                    for (int sg = 0; sg < 2 && !found; ++sg) {
                        long long fv = Fc.get(cc, mm, sg);
                        if (!feasible(fv)) {
                            continue;
                        }
                        for (int sp = 0; sp < 2 && !found; ++sp) {
                            if (std::max(sg, sp) != bs) {
                                continue;
                            }
                            long long gv = prev.get(bc - cc, bm - mm, sp);
                            if (feasible(gv) && fv + gv == target) {
                                recover(kids[k - 1], cc, mm, sg, P);
                                bc -= cc;
                                bm -= mm;
                                bs = sp;
                                found = true;
                            }
                        }
                    }
                }
            }
            assert(found && "merge split not found");
        }
        assert(bc == 0 && bm == 0);
    }
};

void check_tree_inputs(const Instance& inst, const VertexSet& I, long long lambda) {
    inst.validate();
    if (inst.graph.directed()) {
        throw ValidationError("tree protection requires an undirected graph");
    }
    for (int v = 0; v < inst.n(); ++v) {
        if (inst.benefit[v] != 1 || inst.prot_cost[v] != 1) {
            throw ValidationError(
                "tree protection requires unit benefits and protection costs");
        }
    }
    if (lambda < 0) {
        throw ValidationError("negative protection budget");
    }
    check_vertex_set(inst.graph, I, "attack set");
    size_t edges = inst.graph.arcs().size() / 2;
    size_t comps = connected_components(inst.graph).size();
    if (edges != static_cast<size_t>(inst.n()) - comps) {
        throw ValidationError("graph is not a forest");
    }
}

std::vector<uint8_t> attack_flags(const Instance& inst, const VertexSet& I) {
    std::vector<uint8_t> attacked(inst.n(), 0);
    for (int v : I) {
        attacked[v] = 1;
    }
    return attacked;
}

}  // namespace

std::vector<long long> tree_budget_values(const Instance& inst, const VertexSet& I,
                                          long long lambda, int root) {
    check_tree_inputs(inst, I, lambda);
    check_vertex_set(inst.graph, {root}, "root");
    std::vector<uint8_t> attacked = attack_flags(inst, I);
    int cap = static_cast<int>(std::min<long long>(lambda, inst.n()));
    TreeDp dp(inst.graph, attacked, cap, root);
    std::vector<long long> vals = dp.budget_values();
    // Budgets beyond n add nothing; pad by repetition.
    vals.resize(static_cast<size_t>(lambda) + 1, vals.back());
    return vals;
}

ProtectPlan protect_tree_dp(const Instance& inst, const VertexSet& I, long long lambda) {
    check_tree_inputs(inst, I, lambda);
    std::vector<uint8_t> attacked = attack_flags(inst, I);
    const int cap = static_cast<int>(std::min<long long>(lambda, inst.n()));

    std::vector<VertexSet> comps = connected_components(inst.graph);
    std::vector<TreeDp> dps;
    std::vector<std::vector<long long>> vals;
    dps.reserve(comps.size());
    for (const VertexSet& comp : comps) {
        int comp_cap = std::min<int>(cap, static_cast<int>(comp.size()));
        dps.emplace_back(inst.graph, attacked, comp_cap, comp.front());
        std::vector<long long> v = dps.back().budget_values();
        v.resize(static_cast<size_t>(cap) + 1, v.back());
        vals.push_back(std::move(v));
    }

    // Split the budget across components: best[j][beta] = optimum over the
    // first j components spending beta in total.
    size_t width = static_cast<size_t>(cap) + 1;
    std::vector<std::vector<long long>> best(comps.size() + 1,
                                             std::vector<long long>(width, 0));
    for (size_t j = 1; j <= comps.size(); ++j) {
        for (size_t beta = 0; beta < width; ++beta) {
            long long b = kNegInf;
            for (size_t spend = 0; spend <= beta; ++spend) {
                b = std::max(b, best[j - 1][beta - spend] + vals[j - 1][spend]);
            }
            best[j][beta] = b;
        }
    }

    ProtectPlan plan;
    plan.value = best[comps.size()][cap];
    size_t beta = static_cast<size_t>(cap);
    for (size_t j = comps.size(); j >= 1; --j) {
        for (size_t spend = 0; spend <= beta; ++spend) {
            if (best[j - 1][beta - spend] + vals[j - 1][spend] == best[j][beta]) {
                int comp_budget =
                    std::min<int>(static_cast<int>(spend), static_cast<int>(comps[j - 1].size()));
                VertexSet P = dps[j - 1].backtrack(comp_budget);
                plan.P = set_union(plan.P, P);
                beta -= spend;
                break;
            }
        }
    }
    return plan;
}

CandidateSet compute_candidates(const Graph& g, const VertexSet& I) {
    check_vertex_set(g, I, "attack set");
    CandidateSet result;
    if (I.empty()) {
        return result;
    }
    VertexSet reached = reachable_set(g, I);

    std::vector<int> members;
    std::vector<VertexSet> saved_sets;
    for (int v : reached) {
        if (set_contains(I, v)) {
            continue;
        }
        InducedSubgraph sub = induced_subgraph(g, {v});
        VertexSet sub_I;
        for (int i : I) {
            sub_I.push_back(sub.new_of_old[i]);
        }
        VertexSet sub_reached = reachable_set(sub.graph, sub_I);
        std::vector<uint8_t> infected(g.n(), 0);
        for (int u : sub_reached) {
            infected[sub.old_of_new[u]] = 1;
        }
        VertexSet saved;
        for (int u = 0; u < g.n(); ++u) {
            if (!infected[u]) {
                saved.push_back(u);
            }
        }
        members.push_back(v);
        saved_sets.push_back(std::move(saved));
    }

    // Keep only the vertices whose saved set is set-inclusion maximal.
    for (size_t i = 0; i < members.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < members.size() && !dominated; ++j) {
            if (i != j && saved_sets[i].size() < saved_sets[j].size() &&
                std::includes(saved_sets[j].begin(), saved_sets[j].end(),
                              saved_sets[i].begin(), saved_sets[i].end())) {
                dominated = true;
            }
        }
        if (!dominated) {
            result.members.push_back(members[i]);
            result.values.push_back(static_cast<long long>(saved_sets[i].size()));
        }
    }
    return result;
}

ProtectPlan protect_arborescence_greedy(const Instance& inst, const VertexSet& I,
                                        long long lambda) {
    inst.validate();
    if (!inst.graph.directed()) {
        throw ValidationError("arborescence protection requires a directed graph");
    }
    for (int v = 0; v < inst.n(); ++v) {
        if (inst.prot_cost[v] != 1) {
            throw ValidationError("arborescence protection requires unit protection costs");
        }
    }
    if (lambda < 0) {
        throw ValidationError("negative protection budget");
    }
    check_vertex_set(inst.graph, I, "attack set");

    const int n = inst.n();
    std::vector<uint8_t> in_I(n, 0);
    for (int v : I) {
        in_I[v] = 1;
    }

    // The graph induced by the unattacked vertices must be an arborescence
    // forest: in-degree at most one and no cycles.
    std::vector<int> parent(n, -1);
    std::vector<uint8_t> candidate(n, 0);
    for (auto [u, v] : inst.graph.arcs()) {
        if (in_I[v]) {
            continue;
        }
        if (in_I[u]) {
            candidate[v] = 1;
        } else {
            if (parent[v] != -1) {
                throw ValidationError(
                    "not an arborescence: vertex " + std::to_string(v) +
                    " has several unattacked predecessors");
            }
            parent[v] = u;
        }
    }
    std::vector<int> mark(n, -1);
    for (int v = 0; v < n; ++v) {
        if (in_I[v]) {
            continue;
        }
        int u = v;
        while (u != -1 && mark[u] == -1) {
            mark[u] = v;
            u = parent[u];
        }
        if (u != -1 && mark[u] == v) {
            throw ValidationError("not an arborescence: cycle through vertex " +
                                  std::to_string(u));
        }
    }

    // Nearest candidate ancestor: protecting it is the only way to save the
    // vertex, so benefits partition by that ancestor.
    std::vector<int> nearest(n, -1);
    std::vector<std::vector<int>> children(n);
    std::vector<int> roots;
    for (int v = 0; v < n; ++v) {
        if (in_I[v]) {
            continue;
        }
        if (parent[v] == -1) {
            roots.push_back(v);
        } else {
            children[parent[v]].push_back(v);
        }
    }
    std::vector<long long> weight(n, 0);
    long long untouched = 0;
    std::vector<std::pair<int, int>> stack;
    for (int r : roots) {
        stack.emplace_back(r, -1);
    }
    while (!stack.empty()) {
        auto [v, above] = stack.back();
        stack.pop_back();
        int nca = candidate[v] ? v : above;
        nearest[v] = nca;
        if (nca == -1) {
            untouched += inst.benefit[v];  // never reached by the attack
        } else {
            weight[nca] += inst.benefit[v];
        }
        for (int child : children[v]) {
            stack.emplace_back(child, nca);
        }
    }

    std::vector<int> cands;
    for (int v = 0; v < n; ++v) {
        if (candidate[v]) {
            cands.push_back(v);
        }
    }
    std::sort(cands.begin(), cands.end(), [&](int a, int b) {
        if (weight[a] != weight[b]) {
            return weight[a] > weight[b];
        }
        return a < b;
    });

    ProtectPlan plan;
    plan.value = untouched;
    size_t take = std::min<size_t>(cands.size(), static_cast<size_t>(
                                                     std::min<long long>(lambda, n)));
    for (size_t i = 0; i < take; ++i) {
        plan.P.push_back(cands[i]);
        plan.value += weight[cands[i]];
    }
    plan.P = normalize_set(std::move(plan.P));
    return plan;
}

long long pairwise_connectivity(const Graph& g, const VertexSet& removed) {
    check_vertex_set(g, removed, "removed set");
    InducedSubgraph sub = induced_subgraph(g, removed);
    long long total = 0;
    for (const VertexSet& comp : connected_components(sub.graph)) {
        long long s = static_cast<long long>(comp.size());
        total += s * (s - 1) / 2;
    }
    return total;
}

}  // namespace mcn
