#pragma once

// Shared test fixtures: the small worked instances used across the test
// suites, plus a tiny deterministic PRNG for randomized checks.

#include <cstdint>
#include <vector>

#include "mcn/graph.hpp"

namespace fixtures {

// 6-vertex directed demo instance (vertices named "1".."6", ids 0..5),
// unitary weights, budgets omega = phi = lambda = 1.
inline mcn::Instance six_vertex_demo() {
    // Arcs by name: 1->4, 2->1, 2->6, 3->1, 3->2, 3->5, 4->3, 5->3.
    mcn::Graph g = mcn::Graph::make_directed(
        6, {{0, 3}, {1, 0}, {1, 5}, {2, 0}, {2, 1}, {2, 4}, {3, 2}, {4, 2}});
    mcn::Instance inst = mcn::make_unitary_instance(g, 1, 1, 1);
    inst.names = {"1", "2", "3", "4", "5", "6"};
    return inst;
}

// Maps 1-based vertex names of the 6-vertex demo (and the polytree below)
// to 0-based ids.
inline mcn::VertexSet named(std::vector<int> one_based) {
    for (int& v : one_based) {
        --v;
    }
    return mcn::normalize_set(one_based);
}

// 12-vertex polytree (names "1".."12", ids 0..11); the three attack sources
// are 10, 11, 12 by name.
inline mcn::Graph twelve_vertex_polytree() {
    // Arcs by name: 12->1, 10->3, 1->2, 3->2, 2->4, 4->5, 5->6, 6->7, 6->8,
    // 8->9, 11->9.
    return mcn::Graph::make_directed(12, {{11, 0},
                                          {9, 2},
                                          {0, 1},
                                          {2, 1},
                                          {1, 3},
                                          {3, 4},
                                          {4, 5},
                                          {5, 6},
                                          {5, 7},
                                          {7, 8},
                                          {10, 8}});
}

// 6-vertex DAG with a join vertex of in-degree 2 (ids are as drawn, 0..5).
inline mcn::Graph six_vertex_dag() {
    return mcn::Graph::make_directed(6, {{0, 1}, {1, 2}, {1, 4}, {2, 3}, {4, 3}, {3, 5}});
}

// 10-vertex arborescence plus a second attack source feeding into it
// (ids as drawn, 0..9; attack sources 0 and 9).
inline mcn::Graph ten_vertex_arborescence() {
    return mcn::Graph::make_directed(
        10, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}, {9, 4}, {1, 6}, {1, 7}, {7, 8}});
}

// splitmix64: tiny deterministic generator for randomized tests.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform integer in [0, bound), bound > 0.
    uint64_t below(uint64_t bound) { return next() % bound; }
};

}  // namespace fixtures
