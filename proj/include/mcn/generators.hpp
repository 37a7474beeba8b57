#pragma once

// Seeded random instance generators behind the CLI `gen` subcommand and the
// acceptance harness. An instance is a pure function of (shape, n, seed,
// weight mode): the PRNG is the fixed splitmix64 from rng.hpp, so identical
// arguments reproduce byte-identical documents on any platform.

#include <cstdint>
#include <string>
#include <vector>

#include "mcn/graph.hpp"

namespace mcn {

enum class WeightMode { unitary, weighted };

// The supported shapes, in the order the CLI lists them:
// tree, arborescence, split, dag, star, random.
const std::vector<std::string>& generator_shapes();

// Structural guarantees per shape: "tree" is connected, acyclic and
// undirected; "arborescence" is directed with root 0 and in-degree exactly 1
// everywhere else; "split" is undirected and declares its clique/independent
// partition through vertex names ("clique:i" / "indep:i"); "dag" only has
// arcs from lower to higher ids; "star" joins vertex 0 to every other
// vertex; "random" is an Erdos-Renyi undirected graph. Weighted mode draws
// benefits in [1,9] and the three costs in [1,4]; budgets are drawn small
// relative to n in both modes. Throws ValidationError for a negative n or an
// unknown shape.
Instance gen_random_instance(const std::string& shape, int n, uint64_t seed,
                             WeightMode weights = WeightMode::unitary);

}  // namespace mcn
