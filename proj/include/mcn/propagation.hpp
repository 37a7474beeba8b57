#pragma once

// Game semantics: given a strategy triple, compute infected/saved vertices,
// the saved-benefit value, and check the outcome against the trilevel
// feasibility constraints.

#include <functional>
#include <string>
#include <vector>

#include "mcn/graph.hpp"

namespace mcn {

// Result of one play of the game. The value convention is saved benefit
// (the maximizer's objective); "number infected" objectives are derived as
// total benefit minus value.
struct PlayOutcome {
    VertexSet infected;
    VertexSet saved;
    std::vector<uint8_t> alpha;  // alpha[v] = 1 iff v is saved
    long long value = 0;         // sum of b_v over saved vertices
};

// Plays out one full strategy: vaccinated and protected vertices are removed,
// then the infection spreads from the attacked vertices along remaining arcs.
// Throws ValidationError on budget or overlap violations.
PlayOutcome play(const Instance& inst, const StrategyTriple& strat);

// Verdict of the feasibility check below.
struct ConsistencyVerdict {
    bool consistent = true;
    std::vector<std::string> violations;
};

// Confirms that outcome.alpha satisfies, for every vertex v and arc (u,v):
//   alpha_v <= 1 + z_v - y_v          (attacked unvaccinated vertices fall)
//   alpha_v <= alpha_u + x_v + z_v    (infection travels unless v is shielded)
// and that alpha is the componentwise-maximal 0/1 vector doing so.
ConsistencyVerdict check_trilevel_consistency(const Instance& inst,
                                              const StrategyTriple& strat,
                                              const PlayOutcome& outcome);

// Vertex-deletion decomposition: the value of a play equals the value of the
// attack alone on the graph with D u P deleted, plus the benefit of D u P.
struct Decomposition {
    long long reduced_value = 0;    // attack-only value on the reduced graph
    long long removed_benefit = 0;  // benefit of the deleted (D u P) vertices
    long long total = 0;            // their sum; asserted equal to play().value
};

Decomposition property1_decompose(const Instance& inst, const StrategyTriple& strat);

// Optional observer called for every outcome play() produces; used by the
// acceptance harness to run the consistency check on every single play.
// Single-threaded use only.
using PlayObserver =
    std::function<void(const Instance&, const StrategyTriple&, const PlayOutcome&)>;
void set_play_observer(PlayObserver observer);
void clear_play_observer();

}  // namespace mcn
