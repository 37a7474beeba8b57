#include "mcn/reductions.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

#include "mcn/poly.hpp"
#include "mcn/rng.hpp"

namespace mcn {

namespace {

using json = nlohmann::json;

const BigInt kLlMax = std::numeric_limits<long long>::max();
const BigInt kLlMin = std::numeric_limits<long long>::min();

// Narrow a big integer into the solver's weight range or refuse loudly.
long long checked_ll(const BigInt& v, const std::string& what) {
    if (v < 0 || v > kLlMax) {
        throw ValidationError(what + " does not fit the solver's 64-bit weight range");
    }
    return v.convert_to<long long>();
}

BigInt pow10_big(int k) {
    BigInt r = 1;
    for (int i = 0; i < k; ++i) r *= 10;
    return r;
}

// Largest component size s (0 <= s <= cap) whose pair count s*(s-1)/2 stays
// within `goal`. The pair-count goal of the source problem converts to a
// component-size threshold on the target side through this search.
long long max_size_within_pair_goal(long long goal, long long cap) {
    if (cap <= 0) return 0;
    long long s = 1;  // 1*(0)/2 == 0 <= goal always
    while (s < cap && (s + 1) * s / 2 <= goal) ++s;
    return s;
}

std::string literal_label(const CnfFormula& f, int lit) {
    return std::string("literal:") + (lit < 0 ? "-" : "") + f.var_name(lit < 0 ? -lit : lit);
}

void check_vertex_range(int v, int n, const char* what) {
    if (v < 0 || v >= n) {
        throw ValidationError(std::string(what) + " id " + std::to_string(v) + " out of range");
    }
}

// Deduplicates a clause and rejects tautologies (x and -x together), which
// would let one pick double-count its digit contribution.
std::vector<int> clean_clause_strict(const std::vector<int>& clause) {
    std::set<int> lits(clause.begin(), clause.end());
    for (int lit : lits) {
        if (lits.count(-lit)) {
            throw ValidationError("clause contains a variable and its negation");
        }
    }
    return {lits.begin(), lits.end()};
}

}  // namespace

// ---------------------------------------------------------------------------
// Source-problem types
// ---------------------------------------------------------------------------

void CnfFormula::validate() const {
    if (num_vars < 0) throw ValidationError("negative variable count");
    for (const auto& clause : clauses) {
        for (int lit : clause) {
            int v = lit < 0 ? -lit : lit;
            if (v < 1 || v > num_vars) {
                throw ValidationError("literal " + std::to_string(lit) + " out of range");
            }
        }
    }
    std::vector<int> seen(num_vars, 0);
    auto mark = [&](const std::vector<int>& block) {
        for (int v : block) {
            if (v < 1 || v > num_vars) throw ValidationError("block variable out of range");
            if (seen[v - 1]++) throw ValidationError("variable appears in two quantifier blocks");
        }
    };
    mark(block_x);
    mark(block_y);
    mark(block_z);
    if (!var_names.empty() && static_cast<int>(var_names.size()) != num_vars) {
        throw ValidationError("variable name table has the wrong length");
    }
}

std::string CnfFormula::var_name(int var) const {
    if (!var_names.empty()) return var_names[var - 1];
    return "x" + std::to_string(var);
}

bool CnfFormula::eval(const std::vector<uint8_t>& assignment) const {
    if (static_cast<int>(assignment.size()) < num_vars) {
        throw ValidationError("assignment shorter than the variable count");
    }
    for (const auto& clause : clauses) {
        bool sat = false;
        for (int lit : clause) {
            int v = lit < 0 ? -lit : lit;
            if ((lit > 0) == (assignment[v - 1] != 0)) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

void KnapsackInstance::validate() const {
    if (weight.size() != profit.size()) throw ValidationError("item vectors differ in length");
    if (weight.empty()) throw ValidationError("no items");
    for (long long w : weight)
        if (w < 0) throw ValidationError("negative item weight");
    for (long long p : profit)
        if (p < 0) throw ValidationError("negative item profit");
    if (capacity < 0) throw ValidationError("negative capacity");
    if (goal < 0) throw ValidationError("negative profit goal");
}

void BikInstance::validate() const {
    if (weight.size() != profit.size()) throw ValidationError("item vectors differ in length");
    if (weight.empty()) throw ValidationError("no items");
    for (long long w : weight)
        if (w < 1) throw ValidationError("item weights must be positive");
    for (long long p : profit)
        if (p < 1) throw ValidationError("item profits must be positive");
    if (leader_capacity < 1) throw ValidationError("leader capacity must be positive");
    if (profit_cap < 1) throw ValidationError("follower profit cap must be positive");
    if (goal < 1) throw ValidationError("profit goal must be positive");
    if (goal > profit_cap) throw ValidationError("profit goal must not exceed the follower profit cap");
}

long long BikInstance::total_profit() const {
    long long s = 0;
    for (long long p : profit) s += p;
    return s;
}

void TikInstance::validate() const {
    size_t n = profit.size();
    if (weight_first.size() != n || weight_second.size() != n) {
        throw ValidationError("item vectors differ in length");
    }
    for (const BigInt& v : weight_first)
        if (v < 0) throw ValidationError("negative first-level weight");
    for (const BigInt& v : weight_second)
        if (v < 0) throw ValidationError("negative second-level weight");
    for (const BigInt& v : profit)
        if (v < 0) throw ValidationError("negative profit");
    if (capacity_first < 0 || capacity_second < 0 || profit_cap < 0 || goal < 0) {
        throw ValidationError("capacities and goal must be non-negative");
    }
    if (!labels.empty() && labels.size() != n) {
        throw ValidationError("label table has the wrong length");
    }
}

void DominatingSetInstance::validate() const {
    if (n < 1) throw ValidationError("graph must have at least one vertex");
    for (auto [a, b] : edges) {
        check_vertex_range(a, n, "edge endpoint");
        check_vertex_range(b, n, "edge endpoint");
        if (a == b) throw ValidationError("self-loop in edge list");
    }
    if (budget < 0) throw ValidationError("negative budget");
}

int CnpSplitInstance::n() const {
    return static_cast<int>(clique.size() + independent.size());
}

void CnpSplitInstance::validate() const {
    int total = n();
    std::vector<int> seen(total, 0);
    auto mark = [&](const VertexSet& part, const char* what) {
        for (size_t i = 0; i < part.size(); ++i) {
            int v = part[i];
            check_vertex_range(v, total, what);
            if (i > 0 && part[i] <= part[i - 1]) {
                throw ValidationError(std::string(what) + " set is not sorted and duplicate-free");
            }
            if (seen[v]++) throw ValidationError("vertex in both parts of the split");
        }
    };
    mark(clique, "clique vertex");
    mark(independent, "independent vertex");
    for (auto [a, b] : edges) {
        check_vertex_range(a, total, "edge endpoint");
        check_vertex_range(b, total, "edge endpoint");
        if (a == b) throw ValidationError("self-loop in edge list");
        if (set_contains(independent, a) && set_contains(independent, b)) {
            throw ValidationError("edge inside the independent set");
        }
    }
    if (budget < 0) throw ValidationError("negative budget");
    if (goal < 0) throw ValidationError("negative connectivity goal");
}

Graph cnp_split_graph(const CnpSplitInstance& cnp) {
    cnp.validate();
    std::set<std::pair<int, int>> edges;
    for (size_t i = 0; i < cnp.clique.size(); ++i) {
        for (size_t j = i + 1; j < cnp.clique.size(); ++j) {
            edges.insert({cnp.clique[i], cnp.clique[j]});
        }
    }
    for (auto [a, b] : cnp.edges) {
        edges.insert({std::min(a, b), std::max(a, b)});
    }
    return Graph::make_undirected(cnp.n(), {edges.begin(), edges.end()});
}

// ---------------------------------------------------------------------------
// Certificate evaluation
// ---------------------------------------------------------------------------

TargetSolve solve_target(const ReductionCertificate& cert, const SolveLimits& limits) {
    const Instance& inst = cert.target;
    GameValue gv;
    switch (cert.problem) {
        case TargetProblem::protect:
            gv = best_protect(inst, {}, cert.fixed_I, limits);
            break;
        case TargetProblem::attack:
            gv = best_attack(inst, {}, limits);
            break;
        case TargetProblem::attack_protect:
            gv = best_attack_protect(inst, {}, limits);
            break;
        case TargetProblem::vaccination_attack:
            gv = best_vaccination_attack(inst, limits);
            break;
        case TargetProblem::full_game:
            gv = solve_mcn(inst, limits);
            break;
    }
    TargetSolve out;
    out.result = gv;
    out.metric_value = cert.metric == TargetMetric::saved_benefit
                           ? gv.value
                           : inst.total_benefit() - gv.value;
    switch (cert.relation) {
        case TargetRelation::less_equal: out.answer = out.metric_value <= cert.threshold; break;
        case TargetRelation::greater_equal: out.answer = out.metric_value >= cert.threshold; break;
        case TargetRelation::less: out.answer = out.metric_value < cert.threshold; break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Split-graph critical node -> Protect (undirected)
// ---------------------------------------------------------------------------

ReductionCertificate reduce_cnp_split_to_protect(const CnpSplitInstance& cnp) {
    cnp.validate();
    int nbar = cnp.n();
    int hub = nbar;  // fresh vertex joined to the whole clique, then attacked

    std::set<std::pair<int, int>> edges;
    for (size_t i = 0; i < cnp.clique.size(); ++i) {
        for (size_t j = i + 1; j < cnp.clique.size(); ++j) {
            edges.insert({cnp.clique[i], cnp.clique[j]});
        }
    }
    for (auto [a, b] : cnp.edges) edges.insert({std::min(a, b), std::max(a, b)});
    for (int r : cnp.clique) edges.insert({r, hub});

    Instance inst = make_unitary_instance(
        Graph::make_undirected(nbar + 1, {edges.begin(), edges.end()}), 0, 1, cnp.budget);
    inst.names.reserve(nbar + 1);
    for (int v = 0; v < nbar; ++v) inst.names.push_back("v:" + std::to_string(v));
    inst.names.push_back("hub");
    inst.validate();

    // Infection from the hub always floods the surviving clique and whatever
    // independent vertices it still dominates, so the infected count is
    // 1 + (size of that component); deletions in the source act exactly as
    // protections here.
    long long s_max = max_size_within_pair_goal(cnp.goal, nbar);

    ReductionCertificate cert;
    cert.target = std::move(inst);
    cert.fixed_I = {hub};
    cert.problem = TargetProblem::protect;
    cert.metric = TargetMetric::infected_benefit;
    cert.relation = TargetRelation::less_equal;
    cert.threshold = s_max + 1;
    cert.back_map = "protected vertices are the deleted ones";
    return cert;
}

// ---------------------------------------------------------------------------
// Dominating set -> Attack-Protect (unitary)
// ---------------------------------------------------------------------------

ReductionCertificate reduce_dominating_set_to_attack_protect(const DominatingSetInstance& ds) {
    ds.validate();
    if (ds.budget < 1 || ds.budget > ds.n - 1) {
        throw ValidationError(
            "this construction requires 1 <= budget <= n-1 so the protector is left "
            "exactly one vertex short");
    }
    std::set<std::pair<int, int>> edges;
    for (auto [a, b] : ds.edges) edges.insert({std::min(a, b), std::max(a, b)});

    Instance inst = make_unitary_instance(
        Graph::make_undirected(ds.n, {edges.begin(), edges.end()}), 0, ds.budget,
        ds.n - ds.budget - 1);
    inst.names.reserve(ds.n);
    for (int v = 0; v < ds.n; ++v) inst.names.push_back("v:" + std::to_string(v));
    inst.validate();

    ReductionCertificate cert;
    cert.target = std::move(inst);
    cert.problem = TargetProblem::attack_protect;
    cert.metric = TargetMetric::infected_benefit;
    cert.relation = TargetRelation::greater_equal;
    cert.threshold = ds.budget + 1;
    cert.back_map = "the attacked set dominates the graph (extend greedily if smaller than the budget)";
    return cert;
}

// ---------------------------------------------------------------------------
// Knapsack -> weighted Attack on an edgeless graph
// ---------------------------------------------------------------------------

ReductionCertificate reduce_knapsack_to_attack_w(const KnapsackInstance& kp) {
    kp.validate();
    int n = static_cast<int>(kp.weight.size());
    Instance inst;
    inst.graph = Graph::make_undirected(n, {});
    inst.benefit = kp.profit;
    inst.vacc_cost.assign(n, 1);
    inst.attack_cost = kp.weight;
    inst.prot_cost.assign(n, 1);
    inst.omega = 0;
    inst.phi = kp.capacity;
    inst.lambda = 0;
    inst.names.reserve(n);
    for (int o = 0; o < n; ++o) inst.names.push_back("item:" + std::to_string(o));
    inst.validate();

    ReductionCertificate cert;
    cert.target = std::move(inst);
    cert.problem = TargetProblem::attack;
    cert.metric = TargetMetric::infected_benefit;
    cert.relation = TargetRelation::greater_equal;
    cert.threshold = kp.goal;
    cert.back_map = "attacked vertices are the packed items";
    return cert;
}

// ---------------------------------------------------------------------------
// Bilevel interdiction knapsack -> weighted stars
// ---------------------------------------------------------------------------

namespace {

void require_bik_nontrivial(const BikInstance& bik) {
    long long total = bik.total_profit();
    if (bik.goal >= total || bik.profit_cap >= total) {
        throw ValidationError(
            "this construction requires the profit goal and the follower profit cap to be "
            "strictly below the total item profit; otherwise the leader is irrelevant");
    }
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(leaves);
    for (int o = 0; o < leaves; ++o) edges.push_back({0, 1 + o});
    return Graph::make_undirected(1 + leaves, edges);
}

std::vector<std::string> star_names(int leaves) {
    std::vector<std::string> names;
    names.reserve(1 + leaves);
    names.push_back("root");
    for (int o = 0; o < leaves; ++o) names.push_back("item:" + std::to_string(o));
    return names;
}

}  // namespace

ReductionCertificate reduce_bik_to_attack_protect_w(const BikInstance& bik) {
    bik.validate();
    require_bik_nontrivial(bik);
    int n = static_cast<int>(bik.profit.size());

    Instance inst;
    inst.graph = star_graph(n);
    inst.benefit.assign(1 + n, 0);
    inst.vacc_cost.assign(1 + n, 1);
    inst.attack_cost.assign(1 + n, 0);
    inst.prot_cost.assign(1 + n, 0);
    inst.benefit[0] = bik.total_profit() + 1;  // saving the root alone beats the goal
    inst.attack_cost[0] = 1;
    inst.prot_cost[0] = 1;
    for (int o = 0; o < n; ++o) {
        inst.benefit[1 + o] = bik.profit[o];
        inst.attack_cost[1 + o] = bik.weight[o];
        inst.prot_cost[1 + o] = bik.profit[o];  // the protection budget is the profit cap
    }
    inst.omega = 0;
    inst.phi = bik.leader_capacity + 1;  // leader weight plus the root attack
    inst.lambda = bik.profit_cap;
    inst.names = star_names(n);
    inst.validate();

    ReductionCertificate cert;
    cert.target = std::move(inst);
    cert.problem = TargetProblem::attack_protect;
    cert.metric = TargetMetric::saved_benefit;
    cert.relation = TargetRelation::less;
    cert.threshold = bik.goal;
    cert.back_map = "leaves attacked besides the root are the leader's items; protected leaves are the follower's";
    return cert;
}

ReductionCertificate reduce_bik_to_vaccination_attack_w(const BikInstance& bik) {
    bik.validate();
    require_bik_nontrivial(bik);
    int n = static_cast<int>(bik.profit.size());

    Instance inst;
    inst.graph = star_graph(n);
    inst.benefit.assign(1 + n, 0);
    inst.vacc_cost.assign(1 + n, 0);
    inst.attack_cost.assign(1 + n, 0);
    inst.prot_cost.assign(1 + n, 1);
    inst.benefit[0] = bik.goal;  // leaving the root open always costs the whole goal
    inst.vacc_cost[0] = 1;
    inst.attack_cost[0] = 1;
    for (int o = 0; o < n; ++o) {
        inst.benefit[1 + o] = bik.profit[o];
        inst.vacc_cost[1 + o] = bik.weight[o];
        inst.attack_cost[1 + o] = bik.profit[o];  // the attack budget is the profit cap
    }
    inst.omega = bik.leader_capacity + 1;  // leader weight plus the root vaccination
    inst.phi = bik.profit_cap;
    inst.lambda = 0;
    inst.names = star_names(n);
    inst.validate();

    ReductionCertificate cert;
    cert.target = std::move(inst);
    cert.problem = TargetProblem::vaccination_attack;
    cert.metric = TargetMetric::infected_benefit;
    cert.relation = TargetRelation::less;
    cert.threshold = bik.goal;
    cert.back_map = "leaves vaccinated besides the root are the leader's items; attacked leaves are the follower's";
    return cert;
}

// ---------------------------------------------------------------------------
// 3-alternating quantified CNF -> trilevel interdiction knapsack
// ---------------------------------------------------------------------------

TikInstance reduce_b3cnf_to_tik(const CnfFormula& qbf) {
    qbf.validate();
    if (static_cast<int>(qbf.block_x.size() + qbf.block_y.size() + qbf.block_z.size()) !=
        qbf.num_vars) {
        throw ValidationError("every variable must sit in one of the three quantifier blocks");
    }
    // With two or more universal variables the adversary could afford to
    // interdict both items of one of them (funding the second unit by
    // skipping another variable), which no exact profit target survives.
    // One universal variable keeps every affordable interdiction decodable
    // as an assignment.
    if (qbf.block_y.size() > 1) {
        throw ValidationError(
            "this construction supports at most one universally quantified variable");
    }
    int num_clauses = static_cast<int>(qbf.clauses.size());
    std::vector<std::vector<int>> clauses;
    clauses.reserve(num_clauses);
    for (const auto& raw : qbf.clauses) {
        auto clause = clean_clause_strict(raw);
        if (clause.size() > 3) throw ValidationError("clause wider than three literals");
        clauses.push_back(std::move(clause));
    }

    // One base-10 digit position per clause (clause 1 highest among them),
    // then one per variable in block order, then the top "forbidden" digit
    // shared by every clause filler item.
    std::vector<int> vars;  // concatenated block order: X, then Y, then Z
    vars.insert(vars.end(), qbf.block_x.begin(), qbf.block_x.end());
    vars.insert(vars.end(), qbf.block_y.begin(), qbf.block_y.end());
    vars.insert(vars.end(), qbf.block_z.begin(), qbf.block_z.end());
    std::vector<int> var_pos(qbf.num_vars + 1, -1);
    for (size_t t = 0; t < vars.size(); ++t) {
        var_pos[vars[t]] = num_clauses + static_cast<int>(t);
    }
    auto clause_pos = [&](int j) { return num_clauses - 1 - j; };
    int forbidden_pos = num_clauses + static_cast<int>(vars.size());

    TikInstance tik;
    auto add_item = [&](const BigInt& w1, const BigInt& w2, const BigInt& p, std::string label) {
        tik.weight_first.push_back(w1);
        tik.weight_second.push_back(w2);
        tik.profit.push_back(p);
        tik.labels.push_back(std::move(label));
    };

    // Two items per variable, one per polarity. Taking one contributes the
    // variable's digit once and one unit to each clause that literal satisfies.
    for (int v : vars) {
        for (int sign : {+1, -1}) {
            BigInt w = pow10_big(var_pos[v]);
            BigInt p = w;
            for (int j = 0; j < num_clauses; ++j) {
                for (int lit : clauses[j]) {
                    if (lit == sign * v) p += pow10_big(clause_pos(j));
                }
            }
            add_item(w, w, p, literal_label(qbf, sign * v));
        }
    }
    // Two filler items per clause carrying digit values one and two; their
    // weights sit on the forbidden digit so only the last level can take them.
    // Together with at least one satisfied literal they top the clause digit
    // up to exactly four, but on their own they can only reach three.
    for (int j = 0; j < num_clauses; ++j) {
        BigInt w = pow10_big(forbidden_pos);
        for (int slot = 1; slot <= 2; ++slot) {
            BigInt p = BigInt(slot) * pow10_big(clause_pos(j));
            add_item(w, w, p,
                     "clause:" + std::to_string(j + 1) + ":slot" + std::to_string(slot));
        }
    }

    tik.capacity_first = 0;
    tik.capacity_second = 0;
    tik.profit_cap = 0;
    tik.goal = 0;
    for (int v : qbf.block_x) {
        tik.capacity_first += pow10_big(var_pos[v]);
        tik.capacity_second += 2 * pow10_big(var_pos[v]);
        tik.profit_cap += pow10_big(var_pos[v]);
        tik.goal += pow10_big(var_pos[v]);
    }
    for (int v : qbf.block_y) {
        tik.capacity_second += pow10_big(var_pos[v]);
        tik.profit_cap += pow10_big(var_pos[v]);
        tik.goal += pow10_big(var_pos[v]);
    }
    for (int v : qbf.block_z) {
        tik.profit_cap += pow10_big(var_pos[v]);
        tik.goal += pow10_big(var_pos[v]);
    }
    for (int j = 0; j < num_clauses; ++j) {
        tik.profit_cap += 4 * pow10_big(clause_pos(j));
        tik.goal += 4 * pow10_big(clause_pos(j));
    }
    tik.validate();
    return tik;
}

std::string render_tik_digit_table(const TikInstance& tik) {
    tik.validate();
    std::vector<std::pair<std::string, BigInt>> rows;
    for (int o = 0; o < tik.items(); ++o) {
        std::string label = tik.labels.empty() ? "item:" + std::to_string(o) : tik.labels[o];
        rows.push_back({"a'(" + label + ")", tik.weight_first[o]});
        rows.push_back({"a(" + label + ")", tik.weight_second[o]});
        rows.push_back({"p(" + label + ")", tik.profit[o]});
    }
    rows.push_back({"A'", tik.capacity_first});
    rows.push_back({"A", tik.capacity_second});
    rows.push_back({"B", tik.profit_cap});
    rows.push_back({"Kbar", tik.goal});

    size_t width = 1;
    for (const auto& [head, value] : rows) width = std::max(width, value.str().size());

    std::ostringstream out;
    out << "items: " << tik.items() << ", digits: " << width << " (most significant first)\n";
    for (const auto& [head, value] : rows) {
        std::string dec = value.str();
        dec.insert(dec.begin(), width - dec.size(), '0');
        out << head << " |";
        for (char c : dec) out << ' ' << c;
        out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Trilevel interdiction knapsack -> weighted full game on chains
// ---------------------------------------------------------------------------

ReductionCertificate reduce_tik_to_mcn_w(const TikInstance& tik) {
    tik.validate();
    int n = tik.items();
    long long omega = checked_ll(tik.capacity_first, "first-level capacity");
    long long phi = checked_ll(tik.capacity_second + 1, "second-level capacity plus one");
    long long lambda = checked_ll(tik.profit_cap, "profit cap");
    long long goal = checked_ll(tik.goal, "profit goal");
    long long omega_block = checked_ll(BigInt(omega) + 1, "vaccination blocker cost");
    long long phi_block = checked_ll(BigInt(phi) + 1, "attack blocker cost");
    long long lambda_block = checked_ll(BigInt(lambda) + 1, "protection blocker cost");
    long long root_vacc = checked_ll(BigInt(std::max(omega, phi)) + 1, "root vaccination cost");

    // Chain r - v1 - v2 - v3 per item: v3 carries the item's own weights, v1
    // carries its profit as protection cost, v2 carries it as benefit.
    std::vector<std::pair<int, int>> edges;
    edges.reserve(3 * n);
    for (int o = 0; o < n; ++o) {
        edges.push_back({0, 1 + 3 * o});
        edges.push_back({1 + 3 * o, 2 + 3 * o});
        edges.push_back({2 + 3 * o, 3 + 3 * o});
    }

    Instance inst;
    inst.graph = Graph::make_undirected(1 + 3 * n, edges);
    int nv = 1 + 3 * n;
    inst.benefit.assign(nv, 0);
    inst.vacc_cost.assign(nv, 0);
    inst.attack_cost.assign(nv, 0);
    inst.prot_cost.assign(nv, 0);
    inst.names.assign(nv, {});

    inst.benefit[0] = goal;
    inst.vacc_cost[0] = root_vacc;
    inst.attack_cost[0] = 1;
    inst.prot_cost[0] = 1;
    inst.names[0] = "root";
    for (int o = 0; o < n; ++o) {
        long long p = checked_ll(tik.profit[o], "item profit");
        std::string tag = "item:" + std::to_string(o);
        int v1 = 1 + 3 * o, v2 = 2 + 3 * o, v3 = 3 + 3 * o;
        inst.vacc_cost[v1] = omega_block;
        inst.attack_cost[v1] = phi_block;
        inst.prot_cost[v1] = p;
        inst.names[v1] = tag + ":1";

        inst.benefit[v2] = p;
        inst.vacc_cost[v2] = omega_block;
        inst.attack_cost[v2] = phi_block;
        inst.prot_cost[v2] = lambda_block;
        inst.names[v2] = tag + ":2";

        inst.vacc_cost[v3] = checked_ll(tik.weight_first[o], "item first-level weight");
        inst.attack_cost[v3] = checked_ll(tik.weight_second[o], "item second-level weight");
        inst.prot_cost[v3] = lambda_block;
        inst.names[v3] = tag + ":3";
    }
    inst.omega = omega;
    inst.phi = phi;
    inst.lambda = lambda;
    inst.validate();

    ReductionCertificate cert;
    cert.target = std::move(inst);
    cert.problem = TargetProblem::full_game;
    cert.metric = TargetMetric::saved_benefit;
    cert.relation = TargetRelation::greater_equal;
    cert.threshold = goal;
    cert.back_map =
        "vaccinated chain ends are the first-level picks, attacked chain ends the second-level "
        "picks, protected chain heads the third-level picks";
    return cert;
}

// ---------------------------------------------------------------------------
// 3-SAT -> directed Attack
// ---------------------------------------------------------------------------

ReductionCertificate reduce_3sat_to_attack_dir(const CnfFormula& cnf) {
    cnf.validate();
    if (cnf.num_vars < 1) throw ValidationError("formula needs at least one variable");
    if (cnf.clauses.empty()) throw ValidationError("formula needs at least one clause");
    int nu = cnf.num_vars;
    int nc = static_cast<int>(cnf.clauses.size());
    std::vector<std::set<int>> clause_lits(nc);
    for (int j = 0; j < nc; ++j) {
        if (cnf.clauses[j].size() > 3) throw ValidationError("clause wider than three literals");
        clause_lits[j] = {cnf.clauses[j].begin(), cnf.clauses[j].end()};
    }

    // Both polarities of a variable feed one shared path long enough that an
    // optimal attack can never afford to skip a variable or double up on one.
    int path_len = nc + nu - 1;
    auto lit_id = [&](int lit) {
        int v = lit < 0 ? -lit : lit;
        return 2 * (v - 1) + (lit < 0 ? 1 : 0);
    };
    auto path_id = [&](int var, int k) { return 2 * nu + (var - 1) * path_len + k; };
    auto clause_id = [&](int j) { return 2 * nu + nu * path_len + j; };
    int total = 2 * nu + nu * path_len + nc;

    std::vector<std::pair<int, int>> arcs;
    for (int v = 1; v <= nu; ++v) {
        arcs.push_back({lit_id(v), path_id(v, 0)});
        arcs.push_back({lit_id(-v), path_id(v, 0)});
        for (int k = 0; k + 1 < path_len; ++k) arcs.push_back({path_id(v, k), path_id(v, k + 1)});
    }
    for (int j = 0; j < nc; ++j) {
        for (int lit : clause_lits[j]) arcs.push_back({lit_id(lit), clause_id(j)});
    }

    Instance inst = make_unitary_instance(Graph::make_directed(total, arcs), 0, nu, 0);
    inst.names.assign(total, {});
    for (int v = 1; v <= nu; ++v) {
        inst.names[lit_id(v)] = literal_label(cnf, v);
        inst.names[lit_id(-v)] = literal_label(cnf, -v);
        for (int k = 0; k < path_len; ++k) {
            inst.names[path_id(v, k)] = "path:" + cnf.var_name(v) + ":" + std::to_string(k);
        }
    }
    for (int j = 0; j < nc; ++j) inst.names[clause_id(j)] = "clause:" + std::to_string(j + 1);
    inst.validate();

    ReductionCertificate cert;
    cert.target = std::move(inst);
    cert.problem = TargetProblem::attack;
    cert.metric = TargetMetric::infected_benefit;
    cert.relation = TargetRelation::greater_equal;
    cert.threshold = static_cast<long long>(nu) * (nu + nc) + nc;
    cert.back_map = "attacked literal vertices form the satisfying assignment";
    return cert;
}

// ---------------------------------------------------------------------------
// 2-alternating quantified CNF -> directed Vaccination-Attack
// ---------------------------------------------------------------------------

ReductionCertificate reduce_b2cnf_to_vaccination_attack_dir(const CnfFormula& qbf) {
    qbf.validate();
    if (!qbf.block_z.empty()) throw ValidationError("third quantifier block must be empty");
    if (qbf.block_x.empty() || qbf.block_y.empty()) {
        throw ValidationError("both quantifier blocks must be non-empty");
    }
    if (static_cast<int>(qbf.block_x.size() + qbf.block_y.size()) != qbf.num_vars) {
        throw ValidationError("every variable must sit in one of the two quantifier blocks");
    }
    int nx = static_cast<int>(qbf.block_x.size());
    int ny = static_cast<int>(qbf.block_y.size());
    int nc = static_cast<int>(qbf.clauses.size());
    if (nc < 1) throw ValidationError("formula needs at least one clause");

    int clique_len = nc + ny - 1;

    // Ids: the X literal pairs, the Y literal pairs, one clique per X literal,
    // one shared clique per Y variable, then the clause vertices.
    std::vector<int> x_index(qbf.num_vars + 1, -1), y_index(qbf.num_vars + 1, -1);
    for (int i = 0; i < nx; ++i) x_index[qbf.block_x[i]] = i;
    for (int i = 0; i < ny; ++i) y_index[qbf.block_y[i]] = i;
    auto lit_id = [&](int lit) {
        int v = lit < 0 ? -lit : lit;
        if (x_index[v] >= 0) return 2 * x_index[v] + (lit < 0 ? 1 : 0);
        return 2 * nx + 2 * y_index[v] + (lit < 0 ? 1 : 0);
    };
    int clique_base = 2 * nx + 2 * ny;
    auto x_clique_id = [&](int i, bool neg, int k) {
        return clique_base + (2 * i + (neg ? 1 : 0)) * clique_len + k;
    };
    auto y_clique_id = [&](int i, int k) {
        return clique_base + (2 * nx + i) * clique_len + k;
    };
    int clause_base = clique_base + (2 * nx + ny) * clique_len;
    int total = clause_base + nc;

    std::set<std::pair<int, int>> arcs;
    auto add_clique = [&](auto id_of) {
        for (int a = 0; a < clique_len; ++a) {
            for (int b = 0; b < clique_len; ++b) {
                if (a != b) arcs.insert({id_of(a), id_of(b)});
            }
        }
    };
    for (int i = 0; i < nx; ++i) {
        int vp = 2 * i, vn = 2 * i + 1;
        arcs.insert({vp, vn});
        arcs.insert({vn, vp});
        arcs.insert({vp, x_clique_id(i, false, 0)});
        arcs.insert({vn, x_clique_id(i, true, 0)});
        add_clique([&](int k) { return x_clique_id(i, false, k); });
        add_clique([&](int k) { return x_clique_id(i, true, k); });
    }
    for (int i = 0; i < ny; ++i) {
        arcs.insert({2 * nx + 2 * i, y_clique_id(i, 0)});
        arcs.insert({2 * nx + 2 * i + 1, y_clique_id(i, 0)});
        add_clique([&](int k) { return y_clique_id(i, k); });
    }
    for (int j = 0; j < nc; ++j) {
        for (int lit : std::set<int>(qbf.clauses[j].begin(), qbf.clauses[j].end())) {
            arcs.insert({lit_id(lit), clause_base + j});
        }
    }

    Instance inst = make_unitary_instance(
        Graph::make_directed(total, {arcs.begin(), arcs.end()}), nx, nx + ny, 0);
    inst.names.assign(total, {});
    for (int i = 0; i < nx; ++i) {
        int v = qbf.block_x[i];
        inst.names[2 * i] = literal_label(qbf, v);
        inst.names[2 * i + 1] = literal_label(qbf, -v);
        for (int k = 0; k < clique_len; ++k) {
            inst.names[x_clique_id(i, false, k)] =
                "clique:" + qbf.var_name(v) + ":" + std::to_string(k);
            inst.names[x_clique_id(i, true, k)] =
                "clique:-" + qbf.var_name(v) + ":" + std::to_string(k);
        }
    }
    for (int i = 0; i < ny; ++i) {
        int v = qbf.block_y[i];
        inst.names[2 * nx + 2 * i] = literal_label(qbf, v);
        inst.names[2 * nx + 2 * i + 1] = literal_label(qbf, -v);
        for (int k = 0; k < clique_len; ++k) {
            inst.names[y_clique_id(i, k)] = "clique:" + qbf.var_name(v) + ":" + std::to_string(k);
        }
    }
    for (int j = 0; j < nc; ++j) inst.names[clause_base + j] = "clause:" + std::to_string(j + 1);
    inst.validate();

    ReductionCertificate cert;
    cert.target = std::move(inst);
    cert.problem = TargetProblem::vaccination_attack;
    cert.metric = TargetMetric::infected_benefit;
    cert.relation = TargetRelation::less_equal;
    cert.threshold = static_cast<long long>(nx + ny) * (ny + nc) + nc - 1;
    cert.back_map = "a variable is true when its negative literal vertex is vaccinated";
    return cert;
}

// ---------------------------------------------------------------------------
// Split-graph critical node -> Protect (directed)
// ---------------------------------------------------------------------------

ReductionCertificate reduce_cnp_split_to_protect_dir(const CnpSplitInstance& cnp) {
    cnp.validate();
    int nbar = cnp.n();
    // Every source vertex becomes a two-vertex chain so that one infected
    // vertex on the source side costs two here; the hub replaces the clique's
    // internal edges as the common infection source.
    auto first_id = [](int v) { return 1 + 2 * v; };
    auto second_id = [](int v) { return 2 + 2 * v; };

    std::set<std::pair<int, int>> arcs;
    for (int v = 0; v < nbar; ++v) arcs.insert({first_id(v), second_id(v)});
    for (int r : cnp.clique) arcs.insert({0, first_id(r)});
    for (auto [a, b] : cnp.edges) {
        int r = set_contains(cnp.clique, a) ? a : b;
        int w = r == a ? b : a;
        if (!set_contains(cnp.independent, w)) continue;  // clique edges are implicit
        arcs.insert({first_id(r), first_id(w)});
    }

    Instance inst = make_unitary_instance(
        Graph::make_directed(1 + 2 * nbar, {arcs.begin(), arcs.end()}), 0, 1, cnp.budget);
    inst.names.assign(1 + 2 * nbar, {});
    inst.names[0] = "hub";
    for (int v = 0; v < nbar; ++v) {
        inst.names[first_id(v)] = "v:" + std::to_string(v) + ":1";
        inst.names[second_id(v)] = "v:" + std::to_string(v) + ":2";
    }
    inst.validate();

    long long s_max = max_size_within_pair_goal(cnp.goal, nbar);

    ReductionCertificate cert;
    cert.target = std::move(inst);
    cert.fixed_I = {0};
    cert.problem = TargetProblem::protect;
    cert.metric = TargetMetric::infected_benefit;
    cert.relation = TargetRelation::less_equal;
    cert.threshold = 2 * s_max + 1;
    cert.back_map = "protected chain heads are the deleted vertices (extend greedily if needed)";
    return cert;
}

// ---------------------------------------------------------------------------
// Brute-force source oracles
// ---------------------------------------------------------------------------

namespace {

void require_cap(int actual, int cap, const char* what) {
    if (actual > cap) {
        throw SizeCapError(std::string(what) + " size " + std::to_string(actual) +
                           " exceeds the brute-force cap of " + std::to_string(cap));
    }
}

// Masks over n elements ordered by size first, then numeric value; gives the
// oracles a stable, documented witness preference.
std::vector<uint32_t> masks_by_size(int n) {
    std::vector<uint32_t> masks(size_t(1) << n);
    for (uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
    std::stable_sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
        return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
    });
    return masks;
}

std::vector<int> mask_to_indices(uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; mask >> i; ++i) {
        if (mask >> i & 1) out.push_back(i);
    }
    return out;
}

void require_blocks(const CnfFormula& f, bool with_z) {
    f.validate();
    size_t covered = f.block_x.size() + f.block_y.size() + f.block_z.size();
    if (static_cast<int>(covered) != f.num_vars) {
        throw ValidationError("quantifier blocks must cover every variable exactly once");
    }
    if (!with_z && !f.block_z.empty()) {
        throw ValidationError("third quantifier block must be empty");
    }
}

bool exists_assignment(const std::vector<int>& block, std::vector<uint8_t>& assignment,
                       const std::function<bool()>& inner) {
    uint32_t count = uint32_t(1) << block.size();
    for (uint32_t m = 0; m < count; ++m) {
        for (size_t i = 0; i < block.size(); ++i) assignment[block[i] - 1] = (m >> i) & 1;
        if (inner()) return true;
    }
    return false;
}

bool forall_assignment(const std::vector<int>& block, std::vector<uint8_t>& assignment,
                       const std::function<bool()>& inner) {
    uint32_t count = uint32_t(1) << block.size();
    for (uint32_t m = 0; m < count; ++m) {
        for (size_t i = 0; i < block.size(); ++i) assignment[block[i] - 1] = (m >> i) & 1;
        if (!inner()) return false;
    }
    return true;
}

}  // namespace

bool sat3_bruteforce(const CnfFormula& cnf, const OracleCaps& caps,
                     std::vector<uint8_t>* assignment) {
    cnf.validate();
    require_cap(cnf.num_vars, caps.max_bools, "formula");
    std::vector<uint8_t> a(cnf.num_vars, 0);
    uint32_t count = uint32_t(1) << cnf.num_vars;
    for (uint32_t m = 0; m < count; ++m) {
        for (int i = 0; i < cnf.num_vars; ++i) a[i] = (m >> i) & 1;
        if (cnf.eval(a)) {
            if (assignment) *assignment = a;
            return true;
        }
    }
    return false;
}

bool qbf3_inner(const CnfFormula& qbf, const std::vector<uint8_t>& x_assignment) {
    require_blocks(qbf, true);
    std::vector<uint8_t> a = x_assignment;
    a.resize(qbf.num_vars, 0);
    return forall_assignment(qbf.block_y, a, [&] {
        return exists_assignment(qbf.block_z, a, [&] { return qbf.eval(a); });
    });
}

bool qbf3_bruteforce(const CnfFormula& qbf, const OracleCaps& caps,
                     std::vector<uint8_t>* x_assignment) {
    require_blocks(qbf, true);
    require_cap(qbf.num_vars, caps.max_bools, "formula");
    std::vector<uint8_t> a(qbf.num_vars, 0);
    bool yes = exists_assignment(qbf.block_x, a, [&] {
        std::vector<uint8_t> x = a;
        if (!qbf3_inner(qbf, x)) return false;
        if (x_assignment) *x_assignment = x;
        return true;
    });
    return yes;
}

bool qbf2_inner(const CnfFormula& qbf, const std::vector<uint8_t>& x_assignment) {
    require_blocks(qbf, false);
    std::vector<uint8_t> a = x_assignment;
    a.resize(qbf.num_vars, 0);
    return forall_assignment(qbf.block_y, a, [&] { return !qbf.eval(a); });
}

bool qbf2_bruteforce(const CnfFormula& qbf, const OracleCaps& caps,
                     std::vector<uint8_t>* x_assignment) {
    require_blocks(qbf, false);
    require_cap(qbf.num_vars, caps.max_bools, "formula");
    std::vector<uint8_t> a(qbf.num_vars, 0);
    return exists_assignment(qbf.block_x, a, [&] {
        std::vector<uint8_t> x = a;
        if (!qbf2_inner(qbf, x)) return false;
        if (x_assignment) *x_assignment = x;
        return true;
    });
}

bool is_dominating_set(const DominatingSetInstance& ds, const VertexSet& set) {
    ds.validate();
    std::vector<uint8_t> covered(ds.n, 0);
    for (int v : set) {
        check_vertex_range(v, ds.n, "set vertex");
        covered[v] = 1;
    }
    for (auto [a, b] : ds.edges) {
        if (set_contains(set, a)) covered[b] = 1;
        if (set_contains(set, b)) covered[a] = 1;
    }
    for (uint8_t c : covered)
        if (!c) return false;
    return true;
}

bool dominating_set_bruteforce(const DominatingSetInstance& ds, const OracleCaps& caps,
                               VertexSet* witness) {
    ds.validate();
    require_cap(ds.n, caps.max_vertices, "graph");
    std::vector<uint32_t> closed(ds.n);
    for (int v = 0; v < ds.n; ++v) closed[v] = uint32_t(1) << v;
    for (auto [a, b] : ds.edges) {
        closed[a] |= uint32_t(1) << b;
        closed[b] |= uint32_t(1) << a;
    }
    uint32_t full = (uint32_t(1) << ds.n) - 1;
    for (uint32_t mask : masks_by_size(ds.n)) {
        if (std::popcount(mask) > ds.budget) break;
        uint32_t cover = 0;
        for (int v = 0; v < ds.n; ++v) {
            if (mask >> v & 1) cover |= closed[v];
        }
        if (cover == full) {
            if (witness) *witness = mask_to_indices(mask);
            return true;
        }
    }
    return false;
}

long long cnp_split_bruteforce_value(const CnpSplitInstance& cnp, const OracleCaps& caps,
                                     VertexSet* witness) {
    cnp.validate();
    require_cap(cnp.n(), caps.max_vertices, "graph");
    Graph g = cnp_split_graph(cnp);
    std::vector<long long> unit(cnp.n(), 1);
    VertexSet all(cnp.n());
    for (int v = 0; v < cnp.n(); ++v) all[v] = v;
    long long best = std::numeric_limits<long long>::max();
    VertexSet best_set;
    BudgetSubsetStream stream(unit, all, std::min<long long>(cnp.budget, cnp.n()));
    VertexSet removed;
    while (stream.next(removed)) {
        long long val = pairwise_connectivity(g, removed);
        if (val < best) {
            best = val;
            best_set = removed;
        }
    }
    if (witness) *witness = best_set;
    return best;
}

bool cnp_split_bruteforce(const CnpSplitInstance& cnp, const OracleCaps& caps) {
    return cnp_split_bruteforce_value(cnp, caps) <= cnp.goal;
}

long long bik_follower_best(const BikInstance& bik, const std::vector<int>& leader_set) {
    bik.validate();
    int n = static_cast<int>(bik.profit.size());
    require_cap(n, 20, "item set");
    std::vector<int> remaining;
    for (int o = 0; o < n; ++o) {
        if (!std::binary_search(leader_set.begin(), leader_set.end(), o)) remaining.push_back(o);
    }
    long long best = 0;
    uint32_t count = uint32_t(1) << remaining.size();
    for (uint32_t m = 0; m < count; ++m) {
        long long p = 0;
        for (size_t i = 0; i < remaining.size(); ++i) {
            if (m >> i & 1) p += bik.profit[remaining[i]];
        }
        if (p <= bik.profit_cap) best = std::max(best, p);
    }
    return best;
}

long long bik_bruteforce_value(const BikInstance& bik, const OracleCaps& caps,
                               std::vector<int>* leader_set) {
    bik.validate();
    int n = static_cast<int>(bik.profit.size());
    require_cap(n, caps.max_bik_items, "item set");
    long long best = std::numeric_limits<long long>::max();
    std::vector<int> best_set;
    for (uint32_t mask : masks_by_size(n)) {
        long long w = 0;
        for (int o = 0; o < n; ++o) {
            if (mask >> o & 1) w += bik.weight[o];
        }
        if (w > bik.leader_capacity) continue;
        std::vector<int> set = mask_to_indices(mask);
        long long follower = bik_follower_best(bik, set);
        if (follower < best) {
            best = follower;
            best_set = set;
        }
    }
    if (leader_set) *leader_set = best_set;
    return best;
}

bool bik_bruteforce(const BikInstance& bik, const OracleCaps& caps) {
    return bik_bruteforce_value(bik, caps) < bik.goal;
}

namespace {

// Per-mask sums plus, for every mask, the best profit <= cap attainable by
// one of its submasks. The latter falls out of a superset sweep: the best
// over submasks of m is the best over m itself and the best of every m minus
// one element.
struct TikTables {
    std::vector<BigInt> w1, w2, p, best;

    explicit TikTables(const TikInstance& tik) {
        size_t count = size_t(1) << tik.items();
        w1.assign(count, 0);
        w2.assign(count, 0);
        p.assign(count, 0);
        for (size_t m = 1; m < count; ++m) {
            int low = std::countr_zero(m);
            size_t rest = m & (m - 1);
            w1[m] = w1[rest] + tik.weight_first[low];
            w2[m] = w2[rest] + tik.weight_second[low];
            p[m] = p[rest] + tik.profit[low];
        }
        best.assign(count, -1);
        if (BigInt(0) <= tik.profit_cap) best[0] = 0;
        for (size_t m = 1; m < count; ++m) {
            BigInt b = -1;
            if (p[m] <= tik.profit_cap) b = p[m];
            for (int i = 0; i < tik.items(); ++i) {
                if (m >> i & 1) b = std::max(b, best[m ^ (size_t(1) << i)]);
            }
            best[m] = b;
        }
    }
};

bool tik_inner_masked(const TikInstance& tik, const TikTables& tables, size_t first_mask) {
    size_t full = (size_t(1) << tik.items()) - 1;
    size_t comp = full & ~first_mask;
    // Every affordable adversary pick must leave a packing that reaches the
    // goal: submasks of the complement, empty pick included.
    for (size_t o2 = comp;; o2 = (o2 - 1) & comp) {
        if (tables.w2[o2] <= tik.capacity_second) {
            if (tables.best[full & ~o2] < tik.goal) return false;
        }
        if (o2 == 0) break;
    }
    return true;
}

}  // namespace

bool tik_inner(const TikInstance& tik, const std::vector<int>& first_set) {
    tik.validate();
    require_cap(tik.items(), OracleCaps{}.max_tik_items, "item set");
    size_t mask = 0;
    for (int o : first_set) {
        if (o < 0 || o >= tik.items()) throw ValidationError("item index out of range");
        mask |= size_t(1) << o;
    }
    TikTables tables(tik);
    return tik_inner_masked(tik, tables, mask);
}

bool tik_bruteforce(const TikInstance& tik, const OracleCaps& caps, std::vector<int>* first_set) {
    tik.validate();
    require_cap(tik.items(), caps.max_tik_items, "item set");
    TikTables tables(tik);
    for (uint32_t mask : masks_by_size(tik.items())) {
        if (tables.w1[mask] > tik.capacity_first) continue;
        if (tik_inner_masked(tik, tables, mask)) {
            if (first_set) *first_set = mask_to_indices(mask);
            return true;
        }
    }
    return false;
}

SourceAnswer solve_source_bruteforce(const SourceProblem& src, const OracleCaps& caps) {
    SourceAnswer out;
    auto join = [](const std::vector<int>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
        return s.empty() ? std::string("(none)") : s;
    };
    auto assignment_text = [](const CnfFormula& f, const std::vector<int>& block,
                              const std::vector<uint8_t>& a) {
        std::string s;
        for (size_t i = 0; i < block.size(); ++i) {
            if (i) s += " ";
            s += f.var_name(block[i]) + "=" + (a[block[i] - 1] ? "1" : "0");
        }
        return s;
    };
    if (const auto* sat = std::get_if<Sat3Source>(&src)) {
        std::vector<uint8_t> a;
        out.yes = sat3_bruteforce(sat->formula, caps, &a);
        if (out.yes) {
            std::vector<int> all(sat->formula.num_vars);
            for (int i = 0; i < sat->formula.num_vars; ++i) all[i] = i + 1;
            out.witness = "assignment: " + assignment_text(sat->formula, all, a);
        }
    } else if (const auto* q3 = std::get_if<Qbf3Source>(&src)) {
        std::vector<uint8_t> a;
        out.yes = qbf3_bruteforce(q3->formula, caps, &a);
        if (out.yes) out.witness = "X: " + assignment_text(q3->formula, q3->formula.block_x, a);
    } else if (const auto* q2 = std::get_if<Qbf2Source>(&src)) {
        std::vector<uint8_t> a;
        out.yes = qbf2_bruteforce(q2->formula, caps, &a);
        if (out.yes) out.witness = "X: " + assignment_text(q2->formula, q2->formula.block_x, a);
    } else if (const auto* kp = std::get_if<KnapsackInstance>(&src)) {
        kp->validate();
        KnapsackResult res = knapsack_dp(kp->weight, kp->profit, kp->capacity);
        out.yes = res.profit >= kp->goal;
        if (out.yes) {
            out.witness = "items: " + join(res.selection) + " (profit " +
                          std::to_string(res.profit) + ")";
        }
    } else if (const auto* bik = std::get_if<BikInstance>(&src)) {
        std::vector<int> leader;
        long long value = bik_bruteforce_value(*bik, caps, &leader);
        out.yes = value < bik->goal;
        if (out.yes) {
            out.witness = "leader: " + join(leader) + " (follower best " +
                          std::to_string(value) + ")";
        }
    } else if (const auto* tik = std::get_if<TikInstance>(&src)) {
        std::vector<int> first;
        out.yes = tik_bruteforce(*tik, caps, &first);
        if (out.yes) out.witness = "first level: " + join(first);
    } else if (const auto* ds = std::get_if<DominatingSetInstance>(&src)) {
        VertexSet w;
        out.yes = dominating_set_bruteforce(*ds, caps, &w);
        if (out.yes) out.witness = "dominating set: " + join(w);
    } else if (const auto* cnp = std::get_if<CnpSplitInstance>(&src)) {
        VertexSet w;
        long long value = cnp_split_bruteforce_value(*cnp, caps, &w);
        out.yes = value <= cnp->goal;
        if (out.yes) {
            out.witness = "deletions: " + join(w) + " (connectivity " + std::to_string(value) + ")";
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// File formats
// ---------------------------------------------------------------------------

namespace {

json parse_json_or_throw(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("not valid JSON: ") + e.what());
    }
}

const json& must_get(const json& j, const char* key) {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

long long as_ll(const json& v, const char* what) {
    if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return v.get<long long>();
}

int as_int(const json& v, const char* what) {
    long long x = as_ll(v, what);
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
        throw ParseError(std::string(what) + " out of range");
    }
    return static_cast<int>(x);
}

BigInt as_big(const json& v, const char* what) {
    if (v.is_number_integer()) return BigInt(v.get<long long>());
    if (v.is_string()) {
        const std::string& s = v.get_ref<const std::string&>();
        size_t start = s.size() > 1 && s[0] == '-' ? 1 : 0;
        if (s.empty() || start == s.size() ||
            !std::all_of(s.begin() + start, s.end(), [](unsigned char c) { return std::isdigit(c); })) {
            throw ParseError(std::string(what) + " is not a decimal integer string");
        }
        return BigInt(s);
    }
    throw ParseError(std::string(what) + " must be an integer or a decimal string");
}

std::vector<std::pair<int, int>> as_edges(const json& v) {
    if (!v.is_array()) throw ParseError("\"edges\" must be an array");
    std::vector<std::pair<int, int>> out;
    for (const auto& e : v) {
        if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair");
        out.push_back({as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint")});
    }
    return out;
}

VertexSet as_vertex_list(const json& v, const char* what) {
    if (!v.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& e : v) out.push_back(as_int(e, what));
    return out;
}

json big_to_json(const BigInt& v) {
    if (v >= kLlMin && v <= kLlMax) return v.convert_to<long long>();
    return v.str();
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

CnfFormula parse_cnf_dimacs(const std::string& text) {
    CnfFormula f;
    bool saw_header = false;
    int declared_clauses = 0;
    std::vector<int> pending;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        line = trim(line);
        if (line.empty()) continue;
        if (line[0] == 'c') {
            std::istringstream words(line);
            std::string c, tag;
            words >> c >> tag;
            if (tag != "blocks") continue;
            std::string rest;
            std::getline(words, rest);
            std::istringstream segments(rest);
            std::string segment;
            while (std::getline(segments, segment, '/')) {
                segment = trim(segment);
                if (segment.empty()) continue;
                size_t colon = segment.find(':');
                if (colon == std::string::npos) throw ParseError("malformed blocks comment");
                std::string label = trim(segment.substr(0, colon));
                std::vector<int>* block = nullptr;
                if (label == "X") block = &f.block_x;
                else if (label == "Y") block = &f.block_y;
                else if (label == "Z") block = &f.block_z;
                else throw ParseError("unknown quantifier block \"" + label + "\"");
                std::istringstream nums(segment.substr(colon + 1));
                int v;
                while (nums >> v) block->push_back(v);
                if (!nums.eof()) throw ParseError("malformed blocks comment");
            }
            continue;
        }
        if (line[0] == 'p') {
            std::istringstream words(line);
            std::string p, fmt;
            words >> p >> fmt >> f.num_vars >> declared_clauses;
            if (fmt != "cnf" || words.fail() || f.num_vars < 0 || declared_clauses < 0) {
                throw ParseError("malformed problem line");
            }
            saw_header = true;
            continue;
        }
        std::istringstream nums(line);
        int lit;
        while (nums >> lit) {
            if (lit == 0) {
                f.clauses.push_back(pending);
                pending.clear();
            } else {
                pending.push_back(lit);
            }
        }
        if (!nums.eof()) throw ParseError("non-integer token in clause data");
    }
    if (!saw_header) throw ParseError("missing problem line");
    if (!pending.empty()) throw ParseError("clause not terminated by 0");
    if (static_cast<int>(f.clauses.size()) != declared_clauses) {
        throw ParseError("clause count does not match the problem line");
    }
    try {
        f.validate();
    } catch (const ValidationError& e) {
        throw ParseError(e.what());
    }
    return f;
}

KnapsackInstance parse_knapsack_json(const std::string& text) {
    json j = parse_json_or_throw(text);
    KnapsackInstance kp;
    const json& items = must_get(j, "items");
    if (!items.is_array()) throw ParseError("\"items\" must be an array");
    for (const auto& item : items) {
        kp.weight.push_back(as_ll(must_get(item, "a"), "item weight"));
        kp.profit.push_back(as_ll(must_get(item, "p"), "item profit"));
    }
    kp.capacity = as_ll(must_get(j, "B"), "capacity");
    kp.goal = as_ll(must_get(j, "Kbar"), "profit goal");
    try {
        kp.validate();
    } catch (const ValidationError& e) {
        throw ParseError(e.what());
    }
    return kp;
}

BikInstance parse_bik_json(const std::string& text) {
    json j = parse_json_or_throw(text);
    BikInstance bik;
    const json& items = must_get(j, "items");
    if (!items.is_array()) throw ParseError("\"items\" must be an array");
    for (const auto& item : items) {
        bik.weight.push_back(as_ll(must_get(item, "a"), "item weight"));
        bik.profit.push_back(as_ll(must_get(item, "p"), "item profit"));
    }
    bik.leader_capacity = as_ll(must_get(j, "A"), "leader capacity");
    bik.profit_cap = as_ll(must_get(j, "B"), "profit cap");
    bik.goal = as_ll(must_get(j, "Kbar"), "profit goal");
    try {
        bik.validate();
    } catch (const ValidationError& e) {
        throw ParseError(e.what());
    }
    return bik;
}

TikInstance parse_tik_json(const std::string& text) {
    json j = parse_json_or_throw(text);
    TikInstance tik;
    const json& items = must_get(j, "items");
    if (!items.is_array()) throw ParseError("\"items\" must be an array");
    bool any_label = false;
    for (const auto& item : items) {
        tik.weight_first.push_back(as_big(must_get(item, "a2"), "first-level weight"));
        tik.weight_second.push_back(as_big(must_get(item, "a"), "second-level weight"));
        tik.profit.push_back(as_big(must_get(item, "p"), "profit"));
        if (item.contains("label")) {
            if (!item["label"].is_string()) throw ParseError("item label must be a string");
            any_label = true;
            tik.labels.push_back(item["label"].get<std::string>());
        } else {
            tik.labels.push_back({});
        }
    }
    if (!any_label) tik.labels.clear();
    tik.capacity_first = as_big(must_get(j, "A2"), "first-level capacity");
    tik.capacity_second = as_big(must_get(j, "A"), "second-level capacity");
    tik.profit_cap = as_big(must_get(j, "B"), "profit cap");
    tik.goal = as_big(must_get(j, "Kbar"), "profit goal");
    try {
        tik.validate();
    } catch (const ValidationError& e) {
        throw ParseError(e.what());
    }
    return tik;
}

std::string serialize_tik_json(const TikInstance& tik) {
    tik.validate();
    json items = json::array();
    for (int o = 0; o < tik.items(); ++o) {
        json item;
        item["a2"] = big_to_json(tik.weight_first[o]);
        item["a"] = big_to_json(tik.weight_second[o]);
        item["p"] = big_to_json(tik.profit[o]);
        if (!tik.labels.empty()) item["label"] = tik.labels[o];
        items.push_back(item);
    }
    json j;
    j["items"] = items;
    j["A2"] = big_to_json(tik.capacity_first);
    j["A"] = big_to_json(tik.capacity_second);
    j["B"] = big_to_json(tik.profit_cap);
    j["Kbar"] = big_to_json(tik.goal);
    return j.dump(2) + "\n";
}

DominatingSetInstance parse_dominating_set_json(const std::string& text) {
    json j = parse_json_or_throw(text);
    DominatingSetInstance ds;
    ds.n = as_int(must_get(j, "n"), "vertex count");
    ds.edges = as_edges(must_get(j, "edges"));
    ds.budget = as_ll(must_get(j, "B"), "budget");
    try {
        ds.validate();
    } catch (const ValidationError& e) {
        throw ParseError(e.what());
    }
    return ds;
}

CnpSplitInstance parse_cnp_split_json(const std::string& text) {
    json j = parse_json_or_throw(text);
    CnpSplitInstance cnp;
    cnp.clique = normalize_set(as_vertex_list(must_get(j, "clique"), "clique vertex"));
    cnp.independent = normalize_set(as_vertex_list(must_get(j, "independent"), "independent vertex"));
    cnp.edges = as_edges(must_get(j, "edges"));
    cnp.budget = as_ll(must_get(j, "B"), "budget");
    cnp.goal = as_ll(must_get(j, "Kbar"), "connectivity goal");
    try {
        cnp.validate();
    } catch (const ValidationError& e) {
        throw ParseError(e.what());
    }
    return cnp;
}

// ---------------------------------------------------------------------------
// Round-trip verification
// ---------------------------------------------------------------------------

std::vector<std::string> reduction_names() {
    return {"cnp-split", "dominating-set", "knapsack", "bik", "b3cnf-tik",
            "tik",       "3sat",           "b2cnf",    "cnp-split-dir"};
}

namespace {

CnfFormula random_cnf(SplitMix64& rng, int num_vars, int num_clauses) {
    CnfFormula f;
    f.num_vars = num_vars;
    for (int j = 0; j < num_clauses; ++j) {
        int width = static_cast<int>(rng.range(1, std::min(3, num_vars)));
        std::vector<int> pool(num_vars);
        for (int i = 0; i < num_vars; ++i) pool[i] = i + 1;
        std::vector<int> clause;
        for (int k = 0; k < width; ++k) {
            size_t pick = rng.below(pool.size());
            int v = pool[pick];
            pool.erase(pool.begin() + pick);
            clause.push_back(rng.chance(50) ? v : -v);
        }
        f.clauses.push_back(clause);
    }
    return f;
}

CnpSplitInstance random_cnp_split(SplitMix64& rng) {
    CnpSplitInstance cnp;
    int nc = static_cast<int>(rng.range(1, 4));
    int ni = static_cast<int>(rng.range(0, 4));
    for (int v = 0; v < nc; ++v) cnp.clique.push_back(v);
    for (int v = nc; v < nc + ni; ++v) cnp.independent.push_back(v);
    for (int r = 0; r < nc; ++r) {
        for (int w = nc; w < nc + ni; ++w) {
            if (rng.chance(50)) cnp.edges.push_back({r, w});
        }
    }
    int n = nc + ni;
    cnp.budget = static_cast<long long>(rng.range(0, n));
    cnp.goal = static_cast<long long>(rng.range(0, n * (n - 1) / 2));
    return cnp;
}

DominatingSetInstance random_dominating_set(SplitMix64& rng) {
    DominatingSetInstance ds;
    ds.n = static_cast<int>(rng.range(2, 7));
    for (int a = 0; a < ds.n; ++a) {
        for (int b = a + 1; b < ds.n; ++b) {
            if (rng.chance(40)) ds.edges.push_back({a, b});
        }
    }
    ds.budget = static_cast<long long>(rng.range(1, ds.n - 1));
    return ds;
}

KnapsackInstance random_knapsack(SplitMix64& rng) {
    KnapsackInstance kp;
    int n = static_cast<int>(rng.range(1, 7));
    long long total = 0;
    for (int o = 0; o < n; ++o) {
        kp.weight.push_back(static_cast<long long>(rng.range(0, 9)));
        kp.profit.push_back(static_cast<long long>(rng.range(0, 9)));
        total += kp.profit.back();
    }
    kp.capacity = static_cast<long long>(rng.range(0, 20));
    kp.goal = static_cast<long long>(rng.range(0, uint64_t(total + 1)));
    return kp;
}

BikInstance random_bik(SplitMix64& rng) {
    BikInstance bik;
    int n = static_cast<int>(rng.range(2, 6));
    long long total_w = 0, total_p = 0;
    for (int o = 0; o < n; ++o) {
        bik.weight.push_back(static_cast<long long>(rng.range(1, 6)));
        bik.profit.push_back(static_cast<long long>(rng.range(1, 6)));
        total_w += bik.weight.back();
        total_p += bik.profit.back();
    }
    bik.leader_capacity = static_cast<long long>(rng.range(1, uint64_t(total_w)));
    bik.profit_cap = static_cast<long long>(rng.range(1, uint64_t(total_p - 1)));
    bik.goal = static_cast<long long>(rng.range(1, uint64_t(bik.profit_cap)));
    return bik;
}

TikInstance random_tik(SplitMix64& rng) {
    TikInstance tik;
    int n = static_cast<int>(rng.range(1, 5));
    BigInt tw1 = 0, tw2 = 0, tp = 0;
    for (int o = 0; o < n; ++o) {
        tik.weight_first.push_back(BigInt(rng.range(0, 6)));
        tik.weight_second.push_back(BigInt(rng.range(0, 6)));
        tik.profit.push_back(BigInt(rng.range(0, 6)));
        tw1 += tik.weight_first.back();
        tw2 += tik.weight_second.back();
        tp += tik.profit.back();
    }
    tik.capacity_first = BigInt(rng.range(0, tw1.convert_to<uint64_t>()));
    tik.capacity_second = BigInt(rng.range(0, tw2.convert_to<uint64_t>()));
    tik.profit_cap = BigInt(rng.range(0, tp.convert_to<uint64_t>()));
    tik.goal = BigInt(rng.range(0, tp.convert_to<uint64_t>() + 1));
    return tik;
}

CnfFormula random_qbf3(SplitMix64& rng) {
    int sizes[4][3] = {{1, 1, 1}, {2, 1, 1}, {1, 1, 2}, {2, 1, 2}};
    const int* pick = sizes[rng.below(4)];
    int nv = pick[0] + pick[1] + pick[2];
    CnfFormula f = random_cnf(rng, nv, static_cast<int>(rng.range(1, 2)));
    int v = 1;
    for (int i = 0; i < pick[0]; ++i) f.block_x.push_back(v++);
    for (int i = 0; i < pick[1]; ++i) f.block_y.push_back(v++);
    for (int i = 0; i < pick[2]; ++i) f.block_z.push_back(v++);
    return f;
}

CnfFormula random_qbf2(SplitMix64& rng) {
    int sizes[3][2] = {{1, 1}, {2, 1}, {1, 2}};
    const int* pick = sizes[rng.below(3)];
    int nv = pick[0] + pick[1];
    CnfFormula f = random_cnf(rng, nv, static_cast<int>(rng.range(1, 2)));
    int v = 1;
    for (int i = 0; i < pick[0]; ++i) f.block_x.push_back(v++);
    for (int i = 0; i < pick[1]; ++i) f.block_y.push_back(v++);
    return f;
}

// Vertices of the source split graph still reachable from its surviving
// clique once `deleted` is removed.
VertexSet split_reached(const Graph& g, const CnpSplitInstance& cnp, const VertexSet& deleted) {
    InducedSubgraph sub = induced_subgraph(g, deleted);
    VertexSet sources;
    for (int r : cnp.clique) {
        if (sub.new_of_old[r] >= 0) sources.push_back(sub.new_of_old[r]);
    }
    VertexSet reached_new = reachable_set(sub.graph, normalize_set(sources));
    std::vector<int> out;
    for (int v : reached_new) out.push_back(sub.old_of_new[v]);
    return normalize_set(out);
}

// Checks a deletion set transported back from the target; tops it up
// greedily inside the reached part while budget remains, since a target
// optimum may save single vertices in ways that do not map to deletions.
bool check_cnp_transport(const CnpSplitInstance& cnp, VertexSet deleted) {
    Graph g = cnp_split_graph(cnp);
    while (static_cast<long long>(deleted.size()) < cnp.budget &&
           pairwise_connectivity(g, deleted) > cnp.goal) {
        VertexSet reached = split_reached(g, cnp, deleted);
        if (reached.empty()) break;
        deleted = set_union(deleted, {reached.front()});
    }
    return static_cast<long long>(deleted.size()) <= cnp.budget &&
           pairwise_connectivity(g, deleted) <= cnp.goal;
}

bool check_ds_transport(const DominatingSetInstance& ds, VertexSet attacked) {
    // A winning attack smaller than the budget may need padding: repeatedly
    // adopt the least vertex outside the closed neighbourhood.
    while (static_cast<long long>(attacked.size()) <= ds.budget && !is_dominating_set(ds, attacked)) {
        std::vector<uint8_t> covered(ds.n, 0);
        for (int v : attacked) covered[v] = 1;
        for (auto [a, b] : ds.edges) {
            if (set_contains(attacked, a)) covered[b] = 1;
            if (set_contains(attacked, b)) covered[a] = 1;
        }
        int pick = -1;
        for (int v = 0; v < ds.n; ++v) {
            if (!covered[v]) {
                pick = v;
                break;
            }
        }
        if (pick < 0) break;
        attacked = set_union(attacked, {pick});
    }
    return static_cast<long long>(attacked.size()) <= ds.budget && is_dominating_set(ds, attacked);
}

struct SampleCheck {
    bool ok = true;
    std::string note;
};

void record(RoundTrip& rt, int sample, const SampleCheck& check) {
    if (check.ok) return;
    rt.mismatches += 1;
    if (rt.notes.size() < 8) {
        rt.notes.push_back("sample " + std::to_string(sample) + ": " + check.note);
    }
}

SampleCheck compare_answers(bool source_yes, const TargetSolve& target) {
    if (source_yes == target.answer) return {};
    return {false, std::string("source ") + (source_yes ? "Yes" : "No") + " but target " +
                       (target.answer ? "Yes" : "No") + " (metric " +
                       std::to_string(target.metric_value) + ")"};
}

}  // namespace

RoundTrip verify_reduction(const std::string& name, int samples, uint64_t seed,
                           const SolveLimits& limits) {
    bool known = false;
    for (const std::string& n : reduction_names()) known = known || n == name;
    if (!known) throw ValidationError("unknown reduction \"" + name + "\"");
    if (samples < 0) throw ValidationError("negative sample count");

    OracleCaps caps;
    RoundTrip rt;
    rt.reduction = name;
    rt.samples = samples;
    SplitMix64 rng(seed);

    for (int i = 0; i < samples; ++i) {
        try {
            if (name == "cnp-split" || name == "cnp-split-dir") {
                CnpSplitInstance cnp = random_cnp_split(rng);
                bool yes = cnp_split_bruteforce(cnp, caps);
                ReductionCertificate cert = name == "cnp-split"
                                                ? reduce_cnp_split_to_protect(cnp)
                                                : reduce_cnp_split_to_protect_dir(cnp);
                TargetSolve solve = solve_target(cert, limits);
                SampleCheck check = compare_answers(yes, solve);
                if (check.ok && yes) {
                    VertexSet deleted;
                    for (int v : solve.result.witness.P) {
                        if (name == "cnp-split") {
                            if (v < cnp.n()) deleted.push_back(v);
                        } else if (v >= 1 && (v - 1) % 2 == 0) {
                            deleted.push_back((v - 1) / 2);
                        }
                    }
                    if (!check_cnp_transport(cnp, normalize_set(deleted))) {
                        check = {false, "transported deletion set misses the connectivity goal"};
                    }
                }
                record(rt, i, check);
            } else if (name == "dominating-set") {
                DominatingSetInstance ds = random_dominating_set(rng);
                bool yes = dominating_set_bruteforce(ds, caps);
                TargetSolve solve = solve_target(reduce_dominating_set_to_attack_protect(ds), limits);
                SampleCheck check = compare_answers(yes, solve);
                if (check.ok && yes && !check_ds_transport(ds, solve.result.witness.I)) {
                    check = {false, "transported attack does not dominate within budget"};
                }
                record(rt, i, check);
            } else if (name == "knapsack") {
                KnapsackInstance kp = random_knapsack(rng);
                KnapsackResult res = knapsack_dp(kp.weight, kp.profit, kp.capacity);
                bool yes = res.profit >= kp.goal;
                TargetSolve solve = solve_target(reduce_knapsack_to_attack_w(kp), limits);
                SampleCheck check = compare_answers(yes, solve);
                if (check.ok && yes) {
                    long long w = 0, p = 0;
                    for (int v : solve.result.witness.I) {
                        w += kp.weight[v];
                        p += kp.profit[v];
                    }
                    if (w > kp.capacity || p < kp.goal) {
                        check = {false, "transported packing infeasible or below the goal"};
                    }
                }
                record(rt, i, check);
            } else if (name == "bik") {
                BikInstance bik = random_bik(rng);
                bool yes = bik_bruteforce(bik, caps);
                for (bool via_attack : {true, false}) {
                    ReductionCertificate cert = via_attack
                                                    ? reduce_bik_to_attack_protect_w(bik)
                                                    : reduce_bik_to_vaccination_attack_w(bik);
                    TargetSolve solve = solve_target(cert, limits);
                    SampleCheck check = compare_answers(yes, solve);
                    if (!check.ok) check.note += via_attack ? " [attack-protect]" : " [vaccination-attack]";
                    if (check.ok && yes) {
                        const VertexSet& move =
                            via_attack ? solve.result.witness.I : solve.result.witness.D;
                        std::vector<int> leader;
                        long long w = 0;
                        for (int v : move) {
                            if (v == 0) continue;
                            leader.push_back(v - 1);
                            w += bik.weight[v - 1];
                        }
                        if (w > bik.leader_capacity ||
                            bik_follower_best(bik, leader) >= bik.goal) {
                            check = {false, std::string("transported leader set fails") +
                                                (via_attack ? " [attack-protect]" : " [vaccination-attack]")};
                        }
                    }
                    record(rt, i, check);
                }
            } else if (name == "b3cnf-tik") {
                CnfFormula qbf = random_qbf3(rng);
                bool yes = qbf3_bruteforce(qbf, caps);
                TikInstance tik = reduce_b3cnf_to_tik(qbf);
                std::vector<int> first;
                bool target_yes = tik_bruteforce(tik, caps, &first);
                SampleCheck check;
                if (yes != target_yes) {
                    check = {false, std::string("source ") + (yes ? "Yes" : "No") +
                                        " but target " + (target_yes ? "Yes" : "No")};
                } else if (yes) {
                    std::vector<uint8_t> assignment(qbf.num_vars, 0);
                    for (int o : first) {
                        if (o < 2 * static_cast<int>(qbf.block_x.size()) && o % 2 == 0) {
                            assignment[qbf.block_x[o / 2] - 1] = 1;
                        }
                    }
                    if (!qbf3_inner(qbf, assignment)) {
                        check = {false, "decoded first-level assignment loses the inner game"};
                    }
                }
                record(rt, i, check);
            } else if (name == "tik") {
                TikInstance tik = random_tik(rng);
                bool yes = tik_bruteforce(tik, caps);
                TargetSolve solve = solve_target(reduce_tik_to_mcn_w(tik), limits);
                SampleCheck check = compare_answers(yes, solve);
                if (check.ok && yes) {
                    std::vector<int> first;
                    BigInt w = 0;
                    for (int v : solve.result.witness.D) {
                        if (v >= 3 && v % 3 == 0) {
                            first.push_back(v / 3 - 1);
                            w += tik.weight_first[v / 3 - 1];
                        }
                    }
                    if (w > tik.capacity_first || !tik_inner(tik, first)) {
                        check = {false, "transported first-level picks lose the inner game"};
                    }
                }
                record(rt, i, check);
            } else if (name == "3sat") {
                int num_vars = static_cast<int>(rng.range(1, 4));
                int num_clauses = static_cast<int>(rng.range(1, 4));
                CnfFormula cnf = random_cnf(rng, num_vars, num_clauses);
                bool yes = sat3_bruteforce(cnf, caps);
                TargetSolve solve = solve_target(reduce_3sat_to_attack_dir(cnf), limits);
                SampleCheck check = compare_answers(yes, solve);
                if (check.ok && yes) {
                    std::vector<uint8_t> assignment(cnf.num_vars, 0);
                    for (int v : solve.result.witness.I) {
                        if (v < 2 * cnf.num_vars && v % 2 == 0) assignment[v / 2] = 1;
                    }
                    if (!cnf.eval(assignment)) {
                        check = {false, "transported attack does not satisfy the formula"};
                    }
                }
                record(rt, i, check);
            } else if (name == "b2cnf") {
                CnfFormula qbf = random_qbf2(rng);
                bool yes = qbf2_bruteforce(qbf, caps);
                TargetSolve solve =
                    solve_target(reduce_b2cnf_to_vaccination_attack_dir(qbf), limits);
                SampleCheck check = compare_answers(yes, solve);
                if (check.ok && yes) {
                    std::vector<uint8_t> assignment(qbf.num_vars, 0);
                    for (int v : solve.result.witness.D) {
                        if (v < 2 * static_cast<int>(qbf.block_x.size()) && v % 2 == 1) {
                            assignment[qbf.block_x[v / 2] - 1] = 1;
                        }
                    }
                    if (!qbf2_inner(qbf, assignment)) {
                        check = {false, "decoded assignment does not falsify every extension"};
                    }
                }
                record(rt, i, check);
            }
        } catch (const Error& e) {
            record(rt, i, {false, std::string("exception: ") + e.what()});
        }
    }
    return rt;
}

}  // namespace mcn
