#pragma once

// Graph and game-instance representation for the multilevel critical node
// workbench: directed or undirected vertex-weighted graphs, the three budget
// levels, parsing/serialization, induced subgraphs, components, reachability.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcn {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-schema input documents.
struct ParseError : Error {
    using Error::Error;
};

// Violated preconditions/invariants: bad strategies, non-tree input to the
// tree solver, invalid split partitions, and the like.
struct ValidationError : Error {
    using Error::Error;
};

// Enumeration refused because it would exceed a configured search cap.
struct SizeCapError : Error {
    using Error::Error;
};

// A vertex set is a sorted, duplicate-free list of 0-based vertex ids.
using VertexSet = std::vector<int>;

// Sorts and deduplicates in place, turning any id list into a VertexSet.
VertexSet normalize_set(std::vector<int> ids);

// Set helpers used across the solver layers (inputs must be normalized).
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, int v);
bool sets_intersect(const VertexSet& a, const VertexSet& b);

// Finite graph with dense 0-based vertex ids. Undirected graphs are stored as
// symmetric arc pairs; the directedness flag is kept so that serialization
// can list each undirected edge once and semantics stay explicit.
class Graph {
public:
    Graph() = default;

    // Arcs are ordered pairs. Rejects self-loops, duplicates and range errors.
    static Graph make_directed(int n, std::vector<std::pair<int, int>> arcs);

    // Edges may be given in either orientation, each once; the symmetric
    // closure is stored internally.
    static Graph make_undirected(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    bool directed() const { return directed_; }

    // Full arc list (symmetric closure for undirected graphs), sorted.
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }

    // Out-neighbours of v, ascending.
    const std::vector<int>& out(int v) const { return out_[v]; }

    // Arcs for serialization: each undirected edge listed once as (min,max).
    std::vector<std::pair<int, int>> edge_list() const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    bool directed_ = true;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<std::vector<int>> out_;

    void build_adjacency();
};

// Result of deleting a vertex set: the remaining graph plus the id bijection.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_of_new;  // new id -> old id
    std::vector<int> new_of_old;  // old id -> new id, -1 if removed
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& removed);

// Components of the underlying undirected graph, sorted by
// (size descending, smallest member ascending); a fixed order keeps every
// downstream algorithm deterministic.
std::vector<VertexSet> connected_components(const Graph& g);

// All vertices reachable from `sources` along directed paths, sources
// included. On undirected graphs this is the union of their components.
VertexSet reachable_set(const Graph& g, const VertexSet& sources);

// The full game data: graph, the four per-vertex weight vectors, and the
// three level budgets (vaccination omega, attack phi, protection lambda).
struct Instance {
    Graph graph;
    std::vector<long long> benefit;      // b_v
    std::vector<long long> vacc_cost;    // cost to vaccinate v
    std::vector<long long> attack_cost;  // cost to attack v
    std::vector<long long> prot_cost;    // cost to protect v
    long long omega = 0;
    long long phi = 0;
    long long lambda = 0;
    std::vector<std::string> names;      // optional, size n when present

    int n() const { return graph.n(); }
    bool unitary() const;                // every weight equals 1
    long long total_benefit() const;

    // Checks vector lengths, non-negativity, and name-table size.
    void validate() const;

    bool operator==(const Instance& other) const = default;
};

// Convenience constructor: all weights 1.
Instance make_unitary_instance(Graph g, long long omega, long long phi, long long lambda);

// JSON document from the instance schema (see README). Weight arrays may be
// omitted when unitary; budgets are mandatory.
Instance parse_instance(const std::string& text);

// Canonical serialization; parse_instance(serialize_instance(i)) == i and
// serializing again is byte-identical.
std::string serialize_instance(const Instance& inst);

// The three moves of one play: D vaccinated, I attacked, P protected.
struct StrategyTriple {
    VertexSet D;
    VertexSet I;
    VertexSet P;

    bool operator==(const StrategyTriple& other) const = default;
};

}  // namespace mcn
