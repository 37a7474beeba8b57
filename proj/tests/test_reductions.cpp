#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "mcn/reductions.hpp"
#include "tik_fixture.hpp"

using namespace mcn;

namespace {

CnpSplitInstance small_split() {
    // Clique {0,1,2}, independent {3,4}; 3 and 4 each hang off one clique
    // vertex.
    CnpSplitInstance cnp;
    cnp.clique = {0, 1, 2};
    cnp.independent = {3, 4};
    cnp.edges = {{0, 3}, {1, 4}};
    cnp.budget = 2;
    cnp.goal = 3;
    return cnp;
}

// Reference evaluators written as directly as possible, used to cross-check
// the table-driven oracles.
bool bik_naive(const BikInstance& bik) {
    int n = static_cast<int>(bik.profit.size());
    long long best_over_leaders = -1;
    for (uint32_t leader = 0; leader < (1u << n); ++leader) {
        long long w = 0;
        for (int o = 0; o < n; ++o)
            if (leader >> o & 1) w += bik.weight[o];
        if (w > bik.leader_capacity) continue;
        long long follower = 0;
        for (uint32_t pick = 0; pick < (1u << n); ++pick) {
            if (pick & leader) continue;
            long long p = 0;
            for (int o = 0; o < n; ++o)
                if (pick >> o & 1) p += bik.profit[o];
            if (p <= bik.profit_cap) follower = std::max(follower, p);
        }
        if (best_over_leaders < 0 || follower < best_over_leaders) best_over_leaders = follower;
    }
    return best_over_leaders < bik.goal;
}

bool tik_naive(const TikInstance& tik) {
    int n = tik.items();
    auto sum = [&](const std::vector<BigInt>& vals, uint32_t mask) {
        BigInt s = 0;
        for (int o = 0; o < n; ++o)
            if (mask >> o & 1) s += vals[o];
        return s;
    };
    for (uint32_t first = 0; first < (1u << n); ++first) {
        if (sum(tik.weight_first, first) > tik.capacity_first) continue;
        bool holds = true;
        for (uint32_t second = 0; second < (1u << n) && holds; ++second) {
            if (second & first) continue;
            if (sum(tik.weight_second, second) > tik.capacity_second) continue;
            bool packable = false;
            for (uint32_t third = 0; third < (1u << n) && !packable; ++third) {
                if (third & second) continue;
                BigInt p = sum(tik.profit, third);
                packable = p <= tik.profit_cap && p >= tik.goal;
            }
            holds = packable;
        }
        if (holds) return true;
    }
    return false;
}

BikInstance worked_bik() {
    BikInstance bik;
    bik.weight = {2, 1};
    bik.profit = {3, 4};
    bik.leader_capacity = 2;
    bik.profit_cap = 4;
    bik.goal = 4;
    return bik;
}

}  // namespace

TEST_CASE("split connectivity thresholds freeze the component-size search") {
    CnpSplitInstance cnp = small_split();
    CHECK(reduce_cnp_split_to_protect(cnp).threshold == 4);       // goal 3 -> size 3
    CHECK(reduce_cnp_split_to_protect_dir(cnp).threshold == 7);
    cnp.goal = 0;
    CHECK(reduce_cnp_split_to_protect(cnp).threshold == 2);       // goal 0 -> size 1
    CHECK(reduce_cnp_split_to_protect_dir(cnp).threshold == 3);
    cnp.goal = 2;  // sizes 1 and 2 both fit, 3 needs pair count 3
    CHECK(reduce_cnp_split_to_protect(cnp).threshold == 3);
}

TEST_CASE("split deletion compiles to protection with a pinned hub attack") {
    CnpSplitInstance cnp = small_split();
    ReductionCertificate cert = reduce_cnp_split_to_protect(cnp);
    CHECK(cert.target.n() == 6);
    CHECK(cert.fixed_I == VertexSet{5});
    CHECK(cert.target.names[5] == "hub");
    CHECK(cert.target.lambda == 2);
    CHECK(cert.problem == TargetProblem::protect);
    CHECK(cert.relation == TargetRelation::less_equal);

    // Deleting clique vertices 0 and 1 leaves component {2}: pair count 0,
    // isolated 3 and 4. The protector can match that: infected 1 + 3.
    CHECK(cnp_split_bruteforce_value(cnp) == 0);
    TargetSolve solve = solve_target(cert);
    CHECK(solve.metric_value <= 4);
    CHECK(solve.answer);

    // Budget 0 leaves the whole split connected: pair count C(5,2) = 10.
    cnp.budget = 0;
    CHECK(cnp_split_bruteforce_value(cnp) == 10);
    CHECK_FALSE(solve_target(reduce_cnp_split_to_protect(cnp)).answer);
}

TEST_CASE("directed split variant doubles every vertex") {
    CnpSplitInstance cnp = small_split();
    ReductionCertificate cert = reduce_cnp_split_to_protect_dir(cnp);
    CHECK(cert.target.n() == 11);
    CHECK(cert.target.graph.directed());
    CHECK(cert.fixed_I == VertexSet{0});
    CHECK(cert.target.names[0] == "hub");
    CHECK(cert.target.names[1] == "v:0:1");
    CHECK(cert.target.names[2] == "v:0:2");
    // The clique is wired through the hub, not through pair arcs.
    for (auto [a, b] : cert.target.graph.edge_list()) {
        if (a == 0) CHECK((b == 1 || b == 3 || b == 5));
    }
    CHECK(solve_target(cert).answer == cnp_split_bruteforce(cnp));
}

TEST_CASE("dominating set compiles to attack-protect on the same graph") {
    DominatingSetInstance ds;
    ds.n = 3;
    ds.edges = {{0, 1}, {1, 2}};
    ds.budget = 1;
    ReductionCertificate cert = reduce_dominating_set_to_attack_protect(ds);
    CHECK(cert.target.phi == 1);
    CHECK(cert.target.lambda == 1);
    CHECK(cert.threshold == 2);
    CHECK(cert.target.graph.edge_list() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    CHECK(dominating_set_bruteforce(ds));
    TargetSolve solve = solve_target(cert);
    CHECK(solve.metric_value == 2);
    CHECK(solve.answer);

    // No single vertex dominates a triangle-free 4-path.
    DominatingSetInstance path4;
    path4.n = 4;
    path4.edges = {{0, 1}, {1, 2}, {2, 3}};
    path4.budget = 1;
    CHECK_FALSE(dominating_set_bruteforce(path4));
    CHECK_FALSE(solve_target(reduce_dominating_set_to_attack_protect(path4)).answer);
}

TEST_CASE("dominating set budget corner cases") {
    DominatingSetInstance ds;
    ds.n = 3;
    ds.edges = {{0, 1}, {1, 2}};

    // budget n-1 leaves the protector no budget at all.
    ds.budget = 2;
    ReductionCertificate cert = reduce_dominating_set_to_attack_protect(ds);
    CHECK(cert.target.lambda == 0);
    CHECK(solve_target(cert).answer);

    ds.budget = 0;
    CHECK_THROWS_AS(reduce_dominating_set_to_attack_protect(ds), ValidationError);
    ds.budget = 3;
    CHECK_THROWS_AS(reduce_dominating_set_to_attack_protect(ds), ValidationError);
}

TEST_CASE("knapsack compiles to a weighted attack on isolated vertices") {
    KnapsackInstance kp;
    kp.weight = {2, 3, 4};
    kp.profit = {3, 4, 5};
    kp.capacity = 5;
    kp.goal = 7;
    ReductionCertificate cert = reduce_knapsack_to_attack_w(kp);
    CHECK(cert.target.graph.edge_list().empty());
    CHECK(cert.target.phi == 5);
    CHECK(cert.target.benefit == std::vector<long long>{3, 4, 5});
    CHECK(cert.target.attack_cost == std::vector<long long>{2, 3, 4});

    TargetSolve solve = solve_target(cert);
    CHECK(solve.metric_value == 7);  // items 0 and 1 fit exactly
    CHECK(solve.answer);

    kp.goal = 8;
    CHECK_FALSE(solve_target(reduce_knapsack_to_attack_w(kp)).answer);
}

TEST_CASE("bilevel knapsack star carries the worked example") {
    BikInstance bik = worked_bik();

    std::vector<int> leader;
    CHECK(bik_bruteforce_value(bik, {}, &leader) == 3);
    CHECK(leader == std::vector<int>{1});
    CHECK(bik_bruteforce(bik));

    ReductionCertificate ap = reduce_bik_to_attack_protect_w(bik);
    CHECK(ap.target.n() == 3);
    CHECK(ap.target.benefit == std::vector<long long>{8, 3, 4});
    CHECK(ap.target.attack_cost == std::vector<long long>{1, 2, 1});
    CHECK(ap.target.prot_cost == std::vector<long long>{1, 3, 4});
    CHECK(ap.target.phi == 3);
    CHECK(ap.target.lambda == 4);
    CHECK(ap.threshold == 4);
    CHECK(ap.relation == TargetRelation::less);
    CHECK(ap.metric == TargetMetric::saved_benefit);
    TargetSolve ap_solve = solve_target(ap);
    CHECK(ap_solve.metric_value == 3);
    CHECK(ap_solve.answer);

    ReductionCertificate va = reduce_bik_to_vaccination_attack_w(bik);
    CHECK(va.target.benefit == std::vector<long long>{4, 3, 4});
    CHECK(va.target.vacc_cost == std::vector<long long>{1, 2, 1});
    CHECK(va.target.attack_cost == std::vector<long long>{1, 3, 4});
    CHECK(va.target.omega == 3);
    CHECK(va.target.phi == 4);
    CHECK(va.metric == TargetMetric::infected_benefit);
    TargetSolve va_solve = solve_target(va);
    CHECK(va_solve.metric_value == 3);
    CHECK(va_solve.answer);
}

TEST_CASE("bilevel knapsack rejects degenerate caps") {
    BikInstance bik = worked_bik();
    bik.profit_cap = 7;  // equals total profit
    bik.goal = 4;
    CHECK_THROWS_AS(reduce_bik_to_attack_protect_w(bik), ValidationError);
    bik = worked_bik();
    bik.goal = 4;
    bik.profit_cap = 4;
    bik.weight = {2, 1};
    bik.profit = {2, 2};  // total 4 == goal
    CHECK_THROWS_AS(reduce_bik_to_vaccination_attack_w(bik), ValidationError);
}

TEST_CASE("table-driven knapsack oracles match naive enumeration") {
    fixtures::SplitMix64 rng(0xb1f0cafeULL);
    for (int trial = 0; trial < 40; ++trial) {
        BikInstance bik;
        int n = 2 + static_cast<int>(rng.below(4));
        long long total = 0;
        for (int o = 0; o < n; ++o) {
            bik.weight.push_back(1 + static_cast<long long>(rng.below(5)));
            bik.profit.push_back(1 + static_cast<long long>(rng.below(5)));
            total += bik.profit.back();
        }
        bik.leader_capacity = 1 + static_cast<long long>(rng.below(8));
        bik.profit_cap = 1 + static_cast<long long>(rng.below(uint64_t(total)));
        bik.goal = 1 + static_cast<long long>(rng.below(uint64_t(bik.profit_cap)));
        CHECK(bik_bruteforce(bik) == bik_naive(bik));
    }
    for (int trial = 0; trial < 40; ++trial) {
        TikInstance tik;
        int n = 1 + static_cast<int>(rng.below(5));
        for (int o = 0; o < n; ++o) {
            tik.weight_first.push_back(BigInt(rng.below(5)));
            tik.weight_second.push_back(BigInt(rng.below(5)));
            tik.profit.push_back(BigInt(rng.below(5)));
        }
        tik.capacity_first = BigInt(rng.below(8));
        tik.capacity_second = BigInt(rng.below(8));
        tik.profit_cap = BigInt(rng.below(12));
        tik.goal = BigInt(rng.below(12));
        bool fast = tik_bruteforce(tik);
        CHECK(fast == tik_naive(tik));
        if (fast) {
            std::vector<int> first;
            REQUIRE(tik_bruteforce(tik, {}, &first));
            BigInt w = 0;
            for (int o : first) w += tik.weight_first[o];
            CHECK(w <= tik.capacity_first);
            CHECK(tik_inner(tik, first));
        }
    }
}

TEST_CASE("alternating quantifier digit encoding matches the worked table") {
    CnfFormula qbf = fixtures::worked_qbf3();
    CHECK(qbf3_bruteforce(qbf));

    TikInstance tik = reduce_b3cnf_to_tik(qbf);
    CHECK(tik.items() == 14);
    CHECK(tik.capacity_first == BigInt(11000));
    CHECK(tik.capacity_second == BigInt(122000));
    CHECK(tik.profit_cap == BigInt(1111444));
    CHECK(tik.goal == BigInt(1111444));
    CHECK(render_tik_digit_table(tik) == fixtures::worked_qbf3_digit_table());
    CHECK(tik_bruteforce(tik));
}

TEST_CASE("digit encoding agrees with quantifier brute force on tiny formulas") {
    fixtures::SplitMix64 rng(0x3a1ULL);
    int checked = 0;
    for (int trial = 0; trial < 24; ++trial) {
        CnfFormula f;
        f.num_vars = 3;
        f.block_x = {1};
        f.block_y = {2};
        f.block_z = {3};
        int num_clauses = 1 + static_cast<int>(rng.below(2));
        for (int j = 0; j < num_clauses; ++j) {
            std::vector<int> clause;
            std::set<int> used;
            int width = 1 + static_cast<int>(rng.below(3));
            while (static_cast<int>(used.size()) < width) used.insert(1 + static_cast<int>(rng.below(3)));
            for (int v : used) clause.push_back(rng.below(2) ? v : -v);
            f.clauses.push_back(clause);
        }
        TikInstance tik = reduce_b3cnf_to_tik(f);
        REQUIRE(tik.items() <= 12);
        CHECK(tik_bruteforce(tik) == qbf3_bruteforce(f));
        ++checked;
    }
    CHECK(checked == 24);
}

TEST_CASE("digit encoding rejects wide and tautological clauses") {
    CnfFormula f;
    f.num_vars = 4;
    f.block_x = {1, 2, 3, 4};
    f.clauses = {{1, 2, 3, 4}};
    CHECK_THROWS_AS(reduce_b3cnf_to_tik(f), ValidationError);
    f.clauses = {{1, -1, 2}};
    CHECK_THROWS_AS(reduce_b3cnf_to_tik(f), ValidationError);
    f.clauses = {{1, 1, 2}};  // duplicates collapse, width 2
    CHECK(reduce_b3cnf_to_tik(f).items() == 10);

    f.block_x = {1, 2};
    f.block_y = {3, 4};  // two universal variables are not supported
    CHECK_THROWS_AS(reduce_b3cnf_to_tik(f), ValidationError);
}

TEST_CASE("trilevel knapsack compiles to chains hanging off a root") {
    TikInstance tik;
    tik.weight_first = {BigInt(1), BigInt(2)};
    tik.weight_second = {BigInt(1), BigInt(1)};
    tik.profit = {BigInt(2), BigInt(3)};
    tik.capacity_first = 2;
    tik.capacity_second = 1;
    tik.profit_cap = 3;
    tik.goal = 3;

    std::vector<int> first;
    REQUIRE(tik_bruteforce(tik, {}, &first));
    CHECK(first == std::vector<int>{1});

    ReductionCertificate cert = reduce_tik_to_mcn_w(tik);
    CHECK(cert.target.n() == 7);
    CHECK(cert.target.omega == 2);
    CHECK(cert.target.phi == 2);
    CHECK(cert.target.lambda == 3);
    CHECK(cert.threshold == 3);
    CHECK(cert.target.names[0] == "root");
    CHECK(cert.target.names[3] == "item:0:3");
    CHECK(cert.target.benefit == std::vector<long long>{3, 0, 2, 0, 0, 3, 0});

    // Middle chain vertices are priced out of every budget so the three
    // levels can only ever touch the root and the chain ends they own.
    for (int o = 0; o < 2; ++o) {
        int v1 = 1 + 3 * o, v2 = 2 + 3 * o, v3 = 3 + 3 * o;
        CHECK(cert.target.vacc_cost[v1] > cert.target.omega);
        CHECK(cert.target.vacc_cost[v2] > cert.target.omega);
        CHECK(cert.target.attack_cost[v1] > cert.target.phi);
        CHECK(cert.target.attack_cost[v2] > cert.target.phi);
        CHECK(cert.target.prot_cost[v2] > cert.target.lambda);
        CHECK(cert.target.prot_cost[v3] > cert.target.lambda);
    }
    CHECK(cert.target.vacc_cost[0] > cert.target.omega);
    CHECK(cert.target.vacc_cost[0] > cert.target.phi);

    TargetSolve solve = solve_target(cert);
    CHECK(solve.answer);

    tik.capacity_first = 1;  // forces the first level to skip item 1
    CHECK_FALSE(tik_bruteforce(tik));
    CHECK_FALSE(solve_target(reduce_tik_to_mcn_w(tik)).answer);
}

TEST_CASE("trilevel chain construction refuses weights beyond 64 bits") {
    TikInstance tik;
    tik.weight_first = {BigInt("99999999999999999999999999999999")};
    tik.weight_second = {BigInt(1)};
    tik.profit = {BigInt(1)};
    tik.capacity_first = 0;
    tik.capacity_second = 0;
    tik.profit_cap = 1;
    tik.goal = 0;
    CHECK_THROWS_AS(reduce_tik_to_mcn_w(tik), ValidationError);
}

TEST_CASE("3-SAT compiles to a directed attack with literal choices") {
    CnfFormula sat;
    sat.num_vars = 2;
    sat.clauses = {{1, 2}, {-1, 2}};
    CHECK(sat3_bruteforce(sat));

    ReductionCertificate cert = reduce_3sat_to_attack_dir(sat);
    CHECK(cert.target.n() == 12);  // 4 literals, 2 paths of 3, 2 clauses
    CHECK(cert.target.graph.directed());
    CHECK(cert.target.phi == 2);
    CHECK(cert.threshold == 10);
    CHECK(cert.target.names[0] == "literal:x1");
    CHECK(cert.target.names[1] == "literal:-x1");

    TargetSolve solve = solve_target(cert);
    CHECK(solve.metric_value == 10);
    CHECK(solve.answer);

    CnfFormula unsat;
    unsat.num_vars = 1;
    unsat.clauses = {{1}, {-1}};
    CHECK_FALSE(sat3_bruteforce(unsat));
    CHECK_FALSE(solve_target(reduce_3sat_to_attack_dir(unsat)).answer);
}

TEST_CASE("two-block quantified CNF compiles to directed vaccination-attack") {
    CnfFormula no;
    no.num_vars = 2;
    no.block_x = {1};
    no.block_y = {2};
    no.clauses = {{1, 2}, {-1, -2}};
    CHECK_FALSE(qbf2_bruteforce(no));
    CHECK_FALSE(solve_target(reduce_b2cnf_to_vaccination_attack_dir(no)).answer);

    CnfFormula yes;
    yes.num_vars = 2;
    yes.block_x = {1};
    yes.block_y = {2};
    yes.clauses = {{1}};
    std::vector<uint8_t> x;
    CHECK(qbf2_bruteforce(yes, {}, &x));
    CHECK(x[0] == 0);  // x1 false falsifies the only clause
    ReductionCertificate cert = reduce_b2cnf_to_vaccination_attack_dir(yes);
    CHECK(cert.target.omega == 1);
    CHECK(cert.target.phi == 2);
    CHECK(solve_target(cert).answer);

    CnfFormula bad = yes;
    bad.block_y.clear();
    bad.num_vars = 1;
    bad.block_x = {1};
    CHECK_THROWS_AS(reduce_b2cnf_to_vaccination_attack_dir(bad), ValidationError);
}

TEST_CASE("constructions are deterministic byte for byte") {
    CnpSplitInstance cnp = small_split();
    CHECK(serialize_instance(reduce_cnp_split_to_protect(cnp).target) ==
          serialize_instance(reduce_cnp_split_to_protect(cnp).target));
    CHECK(serialize_instance(reduce_cnp_split_to_protect_dir(cnp).target) ==
          serialize_instance(reduce_cnp_split_to_protect_dir(cnp).target));
    BikInstance bik = worked_bik();
    CHECK(serialize_instance(reduce_bik_to_attack_protect_w(bik).target) ==
          serialize_instance(reduce_bik_to_attack_protect_w(bik).target));
    CnfFormula qbf = fixtures::worked_qbf3();
    CHECK(serialize_tik_json(reduce_b3cnf_to_tik(qbf)) ==
          serialize_tik_json(reduce_b3cnf_to_tik(qbf)));
}

TEST_CASE("CNF files parse with quantifier block comments") {
    std::string text =
        "c toy instance\n"
        "c blocks X: 1 2 / Y: 3 / Z: 4\n"
        "p cnf 4 2\n"
        "1 -2 3 0\n"
        "-4 2 0\n";
    CnfFormula f = parse_cnf_dimacs(text);
    CHECK(f.num_vars == 4);
    CHECK(f.clauses == std::vector<std::vector<int>>{{1, -2, 3}, {-4, 2}});
    CHECK(f.block_x == std::vector<int>{1, 2});
    CHECK(f.block_y == std::vector<int>{3});
    CHECK(f.block_z == std::vector<int>{4});

    CHECK_THROWS_AS(parse_cnf_dimacs("1 2 0\n"), ParseError);           // no header
    CHECK_THROWS_AS(parse_cnf_dimacs("p cnf 2 2\n1 2 0\n"), ParseError);  // count off
    CHECK_THROWS_AS(parse_cnf_dimacs("p cnf 2 1\n1 2\n"), ParseError);  // unterminated
    CHECK_THROWS_AS(parse_cnf_dimacs("p cnf 1 1\n2 0\n"), ParseError);  // var range
}

TEST_CASE("knapsack family JSON round-trips") {
    KnapsackInstance kp = parse_knapsack_json(
        R"({"items":[{"a":2,"p":3},{"a":3,"p":4}],"B":5,"Kbar":7})");
    CHECK(kp.weight == std::vector<long long>{2, 3});
    CHECK(kp.goal == 7);
    CHECK_THROWS_AS(parse_knapsack_json(R"({"items":[],"B":1,"Kbar":1})"), ParseError);
    CHECK_THROWS_AS(parse_knapsack_json(R"({"items":[{"a":1}],"B":1,"Kbar":1})"), ParseError);

    BikInstance bik = parse_bik_json(
        R"({"items":[{"a":2,"p":3},{"a":1,"p":4}],"A":2,"B":4,"Kbar":4})");
    CHECK(bik.leader_capacity == 2);
    CHECK(bik.profit_cap == 4);

    std::string big = "123456789012345678901234567890";
    TikInstance tik = parse_tik_json(
        R"({"items":[{"a2":")" + big + R"(","a":1,"p":2,"label":"only"}],)" +
        R"("A2":")" + big + R"(","A":1,"B":2,"Kbar":2})");
    CHECK(tik.weight_first[0] == BigInt(big));
    CHECK(tik.capacity_first == BigInt(big));
    CHECK(tik.labels == std::vector<std::string>{"only"});

    // Serialisation keeps big values as strings and small ones as numbers.
    std::string out = serialize_tik_json(tik);
    CHECK(out.find('"' + big + '"') != std::string::npos);
    CHECK(out.find("\"a\": 1") != std::string::npos);
    TikInstance back = parse_tik_json(out);
    CHECK(back.weight_first == tik.weight_first);
    CHECK(back.weight_second == tik.weight_second);
    CHECK(back.profit == tik.profit);
    CHECK(back.goal == tik.goal);
    CHECK(back.labels == tik.labels);

    CHECK_THROWS_AS(parse_tik_json(R"({"items":[{"a2":"x","a":1,"p":1}],"A2":1,"A":1,"B":1,"Kbar":1})"),
                    ParseError);
}

TEST_CASE("graph source JSON parses and validates") {
    DominatingSetInstance ds = parse_dominating_set_json(
        R"({"n":3,"edges":[[0,1],[1,2]],"B":1})");
    CHECK(ds.n == 3);
    CHECK(is_dominating_set(ds, {1}));
    CHECK_FALSE(is_dominating_set(ds, {0}));

    CnpSplitInstance cnp = parse_cnp_split_json(
        R"({"clique":[0,1,2],"independent":[3,4],"edges":[[0,3],[1,4]],"B":2,"Kbar":3})");
    CHECK(cnp.n() == 5);
    CHECK(cnp_split_graph(cnp).edge_list().size() == 5);

    CHECK_THROWS_AS(parse_cnp_split_json(
                        R"({"clique":[0],"independent":[1,2],"edges":[[1,2]],"B":0,"Kbar":0})"),
                    ParseError);  // edge inside the independent set
}

TEST_CASE("source dispatcher reports witnesses") {
    Sat3Source sat{{}};
    sat.formula.num_vars = 1;
    sat.formula.clauses = {{1}};
    SourceAnswer a = solve_source_bruteforce(sat);
    CHECK(a.yes);
    CHECK(a.witness == "assignment: x1=1");

    SourceAnswer b = solve_source_bruteforce(worked_bik());
    CHECK(b.yes);
    CHECK(b.witness == "leader: 1 (follower best 3)");

    DominatingSetInstance ds;
    ds.n = 2;
    ds.edges = {{0, 1}};
    ds.budget = 1;
    SourceAnswer c = solve_source_bruteforce(ds);
    CHECK(c.yes);
    CHECK(c.witness == "dominating set: 0");
}

TEST_CASE("every reduction survives seeded round trips") {
    struct Plan {
        const char* name;
        int samples;
    };
    const Plan plans[] = {{"cnp-split", 12}, {"dominating-set", 12}, {"knapsack", 12},
                          {"bik", 10},       {"b3cnf-tik", 10},      {"tik", 10},
                          {"3sat", 8},       {"b2cnf", 6},           {"cnp-split-dir", 8}};
    for (const Plan& plan : plans) {
        CAPTURE(plan.name);
        RoundTrip rt = verify_reduction(plan.name, plan.samples, 0x5eedULL);
        CHECK(rt.samples == plan.samples);
        CHECK(rt.mismatches == 0);
        if (!rt.notes.empty()) {
            CAPTURE(rt.notes.front());
            CHECK(rt.notes.empty());
        }
    }
    CHECK(reduction_names().size() == 9);
    CHECK_THROWS_AS(verify_reduction("unknown", 1, 0), ValidationError);
}
