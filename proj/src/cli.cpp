#include "mcn/cli.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "mcn/generators.hpp"
#include "mcn/poly.hpp"
#include "mcn/reductions.hpp"
#include "mcn/solvers.hpp"

namespace mcn {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ValidationError("cannot write " + path);
    }
    out << text;
}

// FNV-1a 64 over a canonical serialization; stable across platforms, unlike
// std::hash.
std::string digest_hex(const std::string& text) {
    uint64_t h = 1469598103934665603ULL;
    for (char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string join_args(const std::vector<std::string>& args) {
    std::string joined;
    for (const auto& a : args) {
        if (!joined.empty()) {
            joined += ' ';
        }
        joined += a;
    }
    return joined;
}

// Counts play() evaluations while alive; reported as the node count.
struct PlayCountGuard {
    long long plays = 0;
    PlayCountGuard() {
        set_play_observer([this](const Instance&, const StrategyTriple&, const PlayOutcome&) {
            ++plays;
        });
    }
    ~PlayCountGuard() { clear_play_observer(); }
    PlayCountGuard(const PlayCountGuard&) = delete;
    PlayCountGuard& operator=(const PlayCountGuard&) = delete;
};

json witness_json(const StrategyTriple& w) {
    return json{{"D", w.D}, {"I", w.I}, {"P", w.P}};
}

std::string problem_name(TargetProblem p) {
    switch (p) {
        case TargetProblem::protect: return "protect";
        case TargetProblem::attack: return "attack";
        case TargetProblem::attack_protect: return "attack-protect";
        case TargetProblem::vaccination_attack: return "vaccination-attack";
        case TargetProblem::full_game: return "mcn";
    }
    return "?";
}

std::string relation_name(TargetRelation r) {
    switch (r) {
        case TargetRelation::less_equal: return "<=";
        case TargetRelation::greater_equal: return ">=";
        case TargetRelation::less: return "<";
    }
    return "?";
}

json certificate_json(const std::string& reduction, const ReductionCertificate& cert) {
    return json{{"reduction", reduction},
                {"problem", problem_name(cert.problem)},
                {"metric", cert.metric == TargetMetric::saved_benefit ? "saved_benefit"
                                                                      : "infected_benefit"},
                {"relation", relation_name(cert.relation)},
                {"threshold", cert.threshold},
                {"fixed_I", cert.fixed_I},
                {"back_map", cert.back_map},
                {"instance", json::parse(serialize_instance(cert.target))}};
}

// ---------------------------------------------------------------------------
// Structure predicates backing --algo auto / poly
// ---------------------------------------------------------------------------

bool undirected_forest(const Graph& g) {
    if (g.directed()) {
        return false;
    }
    size_t components = connected_components(g).size();
    return g.edge_list().size() + components == static_cast<size_t>(g.n());
}

// Directed forest of arborescences: in-degree at most one and no cycle.
bool arborescence_forest(const Graph& g) {
    if (!g.directed()) {
        return false;
    }
    std::vector<int> parent(g.n(), -1);
    for (auto [a, b] : g.edge_list()) {
        if (parent[b] != -1) {
            return false;
        }
        parent[b] = a;
    }
    for (int v = 0; v < g.n(); ++v) {
        int steps = 0;
        for (int u = v; u != -1; u = parent[u]) {
            if (++steps > g.n()) {
                return false;  // parent chain loops
            }
        }
    }
    return true;
}

bool all_ones(const std::vector<long long>& xs) {
    for (long long x : xs) {
        if (x != 1) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

struct SolveConfig {
    std::string problem;
    std::string algo = "auto";
    std::string instance_path;
    std::vector<int> D, I;
    long long max_plays = SolveLimits{}.max_plays;
};

// Which fixed-move flags each subgame accepts.
void check_fixed_moves(const SolveConfig& cfg) {
    bool takes_D = cfg.problem == "protect" || cfg.problem == "attack" ||
                   cfg.problem == "attack-protect";
    bool takes_I = cfg.problem == "protect";
    if (!takes_D && !cfg.D.empty()) {
        throw ValidationError("--D is not applicable to problem " + cfg.problem);
    }
    if (!takes_I && !cfg.I.empty()) {
        throw ValidationError("--I is not applicable to problem " + cfg.problem);
    }
}

struct SolveOutcome {
    std::string algorithm;
    GameValue result;
};

SolveOutcome run_solve(const Instance& inst, const SolveConfig& cfg, const SolveLimits& limits,
                       const VertexSet& D, const VertexSet& I) {
    const bool want_poly = cfg.algo == "poly";
    const bool want_auto = cfg.algo == "auto";

    if (cfg.problem == "protect") {
        if (want_poly || want_auto) {
            bool tree_ok = D.empty() && inst.unitary() && undirected_forest(inst.graph);
            if (tree_ok) {
                ProtectPlan plan = protect_tree_dp(inst, I, inst.lambda);
                return {"tree-dp", {plan.value, {D, I, plan.P}}};
            }
            bool arb_ok = D.empty() && all_ones(inst.prot_cost) &&
                          arborescence_forest(induced_subgraph(inst.graph, I).graph);
            if (arb_ok) {
                ProtectPlan plan = protect_arborescence_greedy(inst, I, inst.lambda);
                return {"arborescence-greedy", {plan.value, {D, I, plan.P}}};
            }
            if (want_poly) {
                throw ValidationError(
                    "--algo poly needs a unitary undirected forest (tree dynamic program) or "
                    "a unit-protection-cost arborescence forest (greedy), with no --D");
            }
        }
        return {"brute", best_protect(inst, D, I, limits)};
    }

    if (cfg.problem == "attack") {
        if (want_poly || want_auto) {
            bool comp_ok = D.empty() && !inst.graph.directed();
            if (comp_ok && inst.unitary()) {
                AttackPlan plan = attack_components_unitary(inst.graph, inst.phi);
                long long saved = inst.total_benefit() - plan.infected;
                return {"components-unitary", {saved, {D, plan.I, {}}}};
            }
            if (comp_ok) {
                AttackPlan plan = attack_components_weighted(inst, inst.phi);
                long long saved = inst.total_benefit() - plan.infected;
                return {"components-weighted", {saved, {D, plan.I, {}}}};
            }
            if (want_poly) {
                throw ValidationError(
                    "--algo poly for attack needs an undirected instance and no --D");
            }
        }
        return {"brute", best_attack(inst, D, limits)};
    }

    if (want_poly) {
        throw ValidationError("no polynomial algorithm for problem " + cfg.problem);
    }
    if (cfg.problem == "attack-protect") {
        return {"brute", best_attack_protect(inst, D, limits)};
    }
    if (cfg.problem == "vaccination-attack") {
        return {"brute", best_vaccination_attack(inst, limits)};
    }
    return {"brute", solve_mcn(inst, limits)};
}

int cmd_solve(const SolveConfig& cfg, const std::vector<std::string>& args, std::ostream& out,
              std::ostream& err) {
    check_fixed_moves(cfg);
    Instance inst = parse_instance(read_file(cfg.instance_path));
    VertexSet D = normalize_set(cfg.D);
    VertexSet I = normalize_set(cfg.I);
    SolveLimits limits{cfg.max_plays};

    PlayCountGuard counter;
    auto start = Clock::now();
    SolveOutcome solved = run_solve(inst, cfg, limits, D, I);
    double wall = ms_since(start);
    long long solver_plays = counter.plays;

    PlayOutcome replay = play(inst, solved.result.witness);

    json report{{"command", join_args(args)},
                {"instance_digest", digest_hex(serialize_instance(inst))},
                {"problem", cfg.problem},
                {"algorithm", solved.algorithm},
                {"value", solved.result.value},
                {"witness", witness_json(solved.result.witness)},
                {"replay_value", replay.value},
                {"saved", replay.saved},
                {"plays", solver_plays},
                {"wall_ms", wall}};
    out << report.dump(2) << "\n";

    if (replay.value != solved.result.value) {
        err << "property violation: witness replay yields " << replay.value
            << ", solver reported " << solved.result.value << "\n";
        return 1;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// reduce
// ---------------------------------------------------------------------------

json build_reduction_document(const std::string& from, const std::string& text) {
    if (from == "3sat") {
        return certificate_json(from, reduce_3sat_to_attack_dir(parse_cnf_dimacs(text)));
    }
    if (from == "b2cnf") {
        return certificate_json(from,
                                reduce_b2cnf_to_vaccination_attack_dir(parse_cnf_dimacs(text)));
    }
    if (from == "b3cnf-tik") {
        TikInstance tik = reduce_b3cnf_to_tik(parse_cnf_dimacs(text));
        return json{{"reduction", from},
                    {"tik", json::parse(serialize_tik_json(tik))},
                    {"digit_table", render_tik_digit_table(tik)}};
    }
    if (from == "tik") {
        return certificate_json(from, reduce_tik_to_mcn_w(parse_tik_json(text)));
    }
    if (from == "knapsack") {
        return certificate_json(from, reduce_knapsack_to_attack_w(parse_knapsack_json(text)));
    }
    if (from == "bik") {
        BikInstance bik = parse_bik_json(text);
        return json{{"reduction", from},
                    {"variants",
                     json{{"attack-protect",
                           certificate_json(from, reduce_bik_to_attack_protect_w(bik))},
                          {"vaccination-attack",
                           certificate_json(from, reduce_bik_to_vaccination_attack_w(bik))}}}};
    }
    if (from == "dominating-set") {
        return certificate_json(
            from, reduce_dominating_set_to_attack_protect(parse_dominating_set_json(text)));
    }
    if (from == "cnp-split") {
        return certificate_json(from, reduce_cnp_split_to_protect(parse_cnp_split_json(text)));
    }
    return certificate_json("cnp-split-dir",
                            reduce_cnp_split_to_protect_dir(parse_cnp_split_json(text)));
}

int cmd_reduce(const std::string& from, const std::string& in_path, const std::string& out_path,
               const std::vector<std::string>& args, std::ostream& out) {
    json doc = build_reduction_document(from, read_file(in_path));
    std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) {
        out << text;
        return 0;
    }
    write_file(out_path, text);
    json report{{"command", join_args(args)},
                {"reduction", from},
                {"out", out_path},
                {"target_digest", digest_hex(text)}};
    out << report.dump(2) << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int cmd_verify(const std::string& reduction, int samples, uint64_t seed, long long max_plays,
               const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<std::string> names =
        reduction == "all" ? reduction_names() : std::vector<std::string>{reduction};
    SolveLimits limits{max_plays};

    json results = json::array();
    int total_mismatches = 0;
    auto start = Clock::now();
    for (const auto& name : names) {
        RoundTrip rt = verify_reduction(name, samples, seed, limits);
        results.push_back(json{{"reduction", rt.reduction},
                               {"samples", rt.samples},
                               {"mismatches", rt.mismatches},
                               {"notes", rt.notes}});
        total_mismatches += rt.mismatches;
    }
    json report{{"command", join_args(args)},
                {"results", results},
                {"ok", total_mismatches == 0},
                {"wall_ms", ms_since(start)}};
    out << report.dump(2) << "\n";
    if (total_mismatches > 0) {
        err << "property violation: " << total_mismatches << " round-trip mismatch(es)\n";
        return 1;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

int cmd_gen(const std::string& shape, int n, uint64_t seed, bool weighted,
            const std::string& out_path, std::ostream& out) {
    Instance inst = gen_random_instance(shape, n, seed,
                                        weighted ? WeightMode::weighted : WeightMode::unitary);
    std::string text = serialize_instance(inst);
    if (text.empty() || text.back() != '\n') {
        text += '\n';
    }
    if (out_path.empty()) {
        out << text;
    } else {
        write_file(out_path, text);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

json bench_entry(const std::string& name, const std::function<json()>& body) {
    auto start = Clock::now();
    json extra = body();
    extra["name"] = name;
    extra["wall_ms"] = ms_since(start);
    return extra;
}

void append_solver_suite(json& entries) {
    entries.push_back(bench_entry("mcn-random-9", [] {
        Instance inst = gen_random_instance("random", 9, 1);
        return json{{"value", solve_mcn(inst).value}};
    }));
    entries.push_back(bench_entry("attack-protect-tree-12", [] {
        Instance inst = gen_random_instance("tree", 12, 2);
        return json{{"value", best_attack_protect(inst, {}).value}};
    }));
    entries.push_back(bench_entry("vaccination-attack-random-14", [] {
        Instance inst = gen_random_instance("random", 14, 3);
        return json{{"value", best_vaccination_attack(inst).value}};
    }));
}

void append_poly_suite(json& entries) {
    entries.push_back(bench_entry("tree-dp-60", [] {
        Instance inst = gen_random_instance("tree", 60, 4);
        VertexSet I = {3, 17, 29, 41, 55};
        return json{{"value", protect_tree_dp(inst, I, 10).value}};
    }));
    entries.push_back(bench_entry("arborescence-greedy-200", [] {
        Instance inst = gen_random_instance("arborescence", 200, 5);
        VertexSet I = {0, 50, 100, 150};
        return json{{"value", protect_arborescence_greedy(inst, I, 8).value}};
    }));
    entries.push_back(bench_entry("components-weighted-300", [] {
        Instance inst = gen_random_instance("random", 300, 6, WeightMode::weighted);
        return json{{"infected", attack_components_weighted(inst, inst.phi).infected}};
    }));
}

int append_reduction_suite(json& entries) {
    int mismatches = 0;
    for (const auto& name : reduction_names()) {
        entries.push_back(bench_entry("verify-" + name, [&] {
            RoundTrip rt = verify_reduction(name, 3, 9);
            mismatches += rt.mismatches;
            return json{{"mismatches", rt.mismatches}};
        }));
    }
    entries.push_back(bench_entry("digit-table", [] {
        CnfFormula f;
        f.num_vars = 3;
        f.clauses = {{1, 2, 3}};
        f.block_x = {1};
        f.block_y = {2};
        f.block_z = {3};
        return json{{"bytes", render_tik_digit_table(reduce_b3cnf_to_tik(f)).size()}};
    }));
    return mismatches;
}

int cmd_bench(const std::string& suite, const std::vector<std::string>& args, std::ostream& out,
              std::ostream& err) {
    json entries = json::array();
    int mismatches = 0;
    if (suite == "solvers" || suite == "all") {
        append_solver_suite(entries);
    }
    if (suite == "poly" || suite == "all") {
        append_poly_suite(entries);
    }
    if (suite == "reductions" || suite == "all") {
        mismatches += append_reduction_suite(entries);
    }
    json report{{"command", join_args(args)}, {"suite", suite}, {"entries", entries}};
    out << report.dump(2) << "\n";
    if (mismatches > 0) {
        err << "property violation: " << mismatches << " round-trip mismatch(es)\n";
        return 1;
    }
    return 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// Argument wiring
// ---------------------------------------------------------------------------

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multilevel critical node workbench"};
    app.require_subcommand(1);

    SolveConfig solve_cfg;
    auto* solve = app.add_subcommand("solve", "Solve a game or subgame on an instance file");
    solve->add_option("--problem", solve_cfg.problem, "Which level stack to solve")
        ->required()
        ->check(CLI::IsMember(
            {"protect", "attack", "attack-protect", "vaccination-attack", "mcn"}));
    solve->add_option("--algo", solve_cfg.algo, "brute, poly, or auto (default)")
        ->check(CLI::IsMember({"brute", "poly", "auto"}));
    solve->add_option("--instance", solve_cfg.instance_path, "Instance JSON file")->required();
    solve->add_option("--D", solve_cfg.D, "Fixed vaccination set (vertex ids)")
        ->delimiter(',');
    solve->add_option("--I", solve_cfg.I, "Fixed attack set (vertex ids)")->delimiter(',');
    solve->add_option("--max-plays", solve_cfg.max_plays, "Enumeration cap on inner plays")
        ->check(CLI::PositiveNumber);

    std::string reduce_from, reduce_in, reduce_out;
    auto* reduce = app.add_subcommand("reduce", "Compile a source problem into a game instance");
    reduce->add_option("--from", reduce_from, "Source problem")
        ->required()
        ->check(CLI::IsMember(reduction_names()));
    reduce->add_option("--in", reduce_in, "Source file (DIMACS CNF or JSON)")->required();
    reduce->add_option("--out", reduce_out, "Write the target document here");

    std::string verify_reduction_name;
    int verify_samples = 50;
    uint64_t verify_seed = 0;
    long long verify_max_plays = SolveLimits{}.max_plays;
    auto* verify = app.add_subcommand("verify", "Round-trip a reduction on random instances");
    {
        std::vector<std::string> choices = reduction_names();
        choices.push_back("all");
        verify->add_option("--reduction", verify_reduction_name, "Reduction name or 'all'")
            ->required()
            ->check(CLI::IsMember(choices));
    }
    verify->add_option("--samples", verify_samples, "Random instances per reduction")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", verify_seed, "PRNG seed");
    verify->add_option("--max-plays", verify_max_plays, "Enumeration cap on inner plays")
        ->check(CLI::PositiveNumber);

    std::string gen_shape, gen_out;
    int gen_n = 0;
    uint64_t gen_seed = 0;
    bool gen_weighted = false;
    auto* gen = app.add_subcommand("gen", "Generate a seeded random instance");
    gen->add_option("--shape", gen_shape, "Graph shape")
        ->required()
        ->check(CLI::IsMember(generator_shapes()));
    gen->add_option("--n", gen_n, "Vertex count")->required()->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", gen_seed, "PRNG seed");
    gen->add_flag("--weighted", gen_weighted, "Draw non-unitary benefits and costs");
    gen->add_option("--out", gen_out, "Write the instance here instead of stdout");

    std::string bench_suite;
    auto* bench = app.add_subcommand("bench", "Run a timing suite");
    bench->add_option("--suite", bench_suite, "Suite name")
        ->required()
        ->check(CLI::IsMember({"solvers", "poly", "reductions", "all"}));

    try {
        // CLI11's vector overload consumes arguments from the back.
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) {
            return cmd_solve(solve_cfg, args, out, err);
        }
        if (reduce->parsed()) {
            return cmd_reduce(reduce_from, reduce_in, reduce_out, args, out);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_reduction_name, verify_samples, verify_seed,
                              verify_max_plays, args, out, err);
        }
        if (gen->parsed()) {
            return cmd_gen(gen_shape, gen_n, gen_seed, gen_weighted, gen_out, out);
        }
        return cmd_bench(bench_suite, args, out, err);
    } catch (const SizeCapError& e) {
        err << "size cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace mcn
