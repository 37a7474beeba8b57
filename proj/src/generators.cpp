#include "mcn/generators.hpp"

#include <algorithm>
#include <utility>

#include "mcn/rng.hpp"

namespace mcn {

namespace {

// Folds the shape name into the seed (FNV-1a) so different shapes given the
// same seed draw unrelated instances.
uint64_t shape_seed(const std::string& shape, uint64_t seed) {
    uint64_t h = 1469598103934665603ULL;
    for (char c : shape) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h ^ seed;
}

}  // namespace

const std::vector<std::string>& generator_shapes() {
    static const std::vector<std::string> shapes = {"tree",  "arborescence", "split",
                                                    "dag",   "star",         "random"};
    return shapes;
}

Instance gen_random_instance(const std::string& shape, int n, uint64_t seed,
                             WeightMode weights) {
    if (n < 0) {
        throw ValidationError("generator: n must be non-negative");
    }
    const auto& shapes = generator_shapes();
    if (std::find(shapes.begin(), shapes.end(), shape) == shapes.end()) {
        throw ValidationError("generator: unknown shape \"" + shape + "\"");
    }

    SplitMix64 rng(shape_seed(shape, seed));
    const bool directed = shape == "arborescence" || shape == "dag";
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> names;

    if (shape == "tree" || shape == "arborescence") {
        // Random recursive tree: each vertex attaches under an earlier one.
        for (int v = 1; v < n; ++v) {
            int parent = static_cast<int>(rng.below(static_cast<uint64_t>(v)));
            edges.push_back({parent, v});
        }
    } else if (shape == "split") {
        int clique_size = n == 0 ? 0 : 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n)));
        names.reserve(n);
        for (int v = 0; v < n; ++v) {
            names.push_back(v < clique_size ? "clique:" + std::to_string(v)
                                            : "indep:" + std::to_string(v));
        }
        for (int a = 0; a < clique_size; ++a) {
            for (int b = a + 1; b < clique_size; ++b) {
                edges.push_back({a, b});
            }
        }
        for (int w = clique_size; w < n; ++w) {
            for (int a = 0; a < clique_size; ++a) {
                if (rng.chance(50)) {
                    edges.push_back({a, w});
                }
            }
        }
    } else if (shape == "dag") {
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (rng.chance(30)) {
                    edges.push_back({a, b});
                }
            }
        }
    } else if (shape == "star") {
        for (int v = 1; v < n; ++v) {
            edges.push_back({0, v});
        }
    } else {  // random
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (rng.chance(30)) {
                    edges.push_back({a, b});
                }
            }
        }
    }

    Graph g = directed ? Graph::make_directed(n, edges) : Graph::make_undirected(n, edges);
    long long budget_cap = std::max(1, n / 4);
    long long omega = n == 0 ? 0 : rng.range(0, budget_cap);
    long long phi = n == 0 ? 0 : rng.range(1, budget_cap);
    long long lambda = n == 0 ? 0 : rng.range(0, budget_cap);

    Instance inst = make_unitary_instance(std::move(g), omega, phi, lambda);
    if (weights == WeightMode::weighted) {
        for (int v = 0; v < n; ++v) {
            inst.benefit[v] = rng.range(1, 9);
            inst.vacc_cost[v] = rng.range(1, 4);
            inst.attack_cost[v] = rng.range(1, 4);
            inst.prot_cost[v] = rng.range(1, 4);
        }
    }
    inst.names = std::move(names);
    inst.validate();
    return inst;
}

}  // namespace mcn
