#include "mcn/graph.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

namespace mcn {

using json = nlohmann::ordered_json;

VertexSet normalize_set(std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size());
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

bool sets_intersect(const VertexSet& a, const VertexSet& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            return true;
        }
    }
    return false;
}

static void check_arc_range(int n, int u, int v) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
        throw ValidationError("arc endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ") with n=" + std::to_string(n));
    }
    if (u == v) {
        throw ValidationError("self-loop rejected at vertex " + std::to_string(u));
    }
}

void Graph::build_adjacency() {
    std::sort(arcs_.begin(), arcs_.end());
    out_.assign(n_, {});
    for (auto [u, v] : arcs_) {
        out_[u].push_back(v);
    }
}

Graph Graph::make_directed(int n, std::vector<std::pair<int, int>> arcs) {
    if (n < 0) {
        throw ValidationError("negative vertex count");
    }
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : arcs) {
        check_arc_range(n, u, v);
        if (!seen.insert({u, v}).second) {
            throw ValidationError("duplicate arc (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
        }
    }
    Graph g;
    g.n_ = n;
    g.directed_ = true;
    g.arcs_ = std::move(arcs);
    g.build_adjacency();
    return g;
}

Graph Graph::make_undirected(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) {
        throw ValidationError("negative vertex count");
    }
    std::set<std::pair<int, int>> seen;
    Graph g;
    g.n_ = n;
    g.directed_ = false;
    for (auto [u, v] : edges) {
        check_arc_range(n, u, v);
        auto e = std::minmax(u, v);
        if (!seen.insert({e.first, e.second}).second) {
            throw ValidationError("duplicate edge (" + std::to_string(e.first) + "," +
                                  std::to_string(e.second) + ")");
        }
        g.arcs_.emplace_back(u, v);
        g.arcs_.emplace_back(v, u);
    }
    g.build_adjacency();
    return g;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    if (directed_) {
        return arcs_;
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : arcs_) {
        if (u < v) {
            edges.emplace_back(u, v);
        }
    }
    return edges;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& removed) {
    for (int v : removed) {
        if (v < 0 || v >= g.n()) {
            throw ValidationError("removed vertex out of range: " + std::to_string(v));
        }
    }
    InducedSubgraph out;
    out.new_of_old.assign(g.n(), -1);
    for (int v = 0; v < g.n(); ++v) {
        if (!set_contains(removed, v)) {
            out.new_of_old[v] = static_cast<int>(out.old_of_new.size());
            out.old_of_new.push_back(v);
        }
    }
    std::vector<std::pair<int, int>> kept;
    for (auto [u, v] : g.edge_list()) {
        if (out.new_of_old[u] >= 0 && out.new_of_old[v] >= 0) {
            kept.emplace_back(out.new_of_old[u], out.new_of_old[v]);
        }
    }
    int m = static_cast<int>(out.old_of_new.size());
    out.graph = g.directed() ? Graph::make_directed(m, std::move(kept))
                             : Graph::make_undirected(m, kept);
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    // Undirected view: union the out-lists of both endpoints.
    std::vector<std::vector<int>> adj(g.n());
    for (auto [u, v] : g.arcs()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<VertexSet> comps;
    std::vector<char> seen(g.n(), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) {
            continue;
        }
        VertexSet comp;
        std::vector<int> stack = {s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) {
            return a.size() > b.size();
        }
        return a.front() < b.front();
    });
    return comps;
}

VertexSet reachable_set(const Graph& g, const VertexSet& sources) {
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack;
    for (int s : sources) {
        if (s < 0 || s >= g.n()) {
            throw ValidationError("source vertex out of range: " + std::to_string(s));
        }
        if (!seen[s]) {
            seen[s] = 1;
            stack.push_back(s);
        }
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.out(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    VertexSet out;
    for (int v = 0; v < g.n(); ++v) {
        if (seen[v]) {
            out.push_back(v);
        }
    }
    return out;
}

bool Instance::unitary() const {
    auto all_ones = [](const std::vector<long long>& w) {
        return std::all_of(w.begin(), w.end(), [](long long x) { return x == 1; });
    };
    return all_ones(benefit) && all_ones(vacc_cost) && all_ones(attack_cost) &&
           all_ones(prot_cost);
}

long long Instance::total_benefit() const {
    long long total = 0;
    for (long long b : benefit) {
        total += b;
    }
    return total;
}

void Instance::validate() const {
    size_t n = static_cast<size_t>(graph.n());
    const std::vector<long long>* vecs[] = {&benefit, &vacc_cost, &attack_cost, &prot_cost};
    const char* labels[] = {"b", "c_vacc", "c_att", "c_prot"};
    for (int i = 0; i < 4; ++i) {
        if (vecs[i]->size() != n) {
            throw ValidationError(std::string(labels[i]) + " has length " +
                                  std::to_string(vecs[i]->size()) + ", expected " +
                                  std::to_string(n));
        }
        for (long long x : *vecs[i]) {
            if (x < 0) {
                throw ValidationError(std::string("negative weight in ") + labels[i]);
            }
        }
    }
    if (omega < 0 || phi < 0 || lambda < 0) {
        throw ValidationError("negative budget");
    }
    if (!names.empty() && names.size() != n) {
        throw ValidationError("names table has wrong length");
    }
}

Instance make_unitary_instance(Graph g, long long omega, long long phi, long long lambda) {
    Instance inst;
    int n = g.n();
    inst.graph = std::move(g);
    inst.benefit.assign(n, 1);
    inst.vacc_cost.assign(n, 1);
    inst.attack_cost.assign(n, 1);
    inst.prot_cost.assign(n, 1);
    inst.omega = omega;
    inst.phi = phi;
    inst.lambda = lambda;
    return inst;
}

static std::vector<long long> parse_weights(const json& doc, const std::string& key, int n) {
    if (!doc.contains(key)) {
        return std::vector<long long>(n, 1);
    }
    const json& arr = doc.at(key);
    if (!arr.is_array()) {
        throw ParseError(key + " must be an array");
    }
    std::vector<long long> w;
    for (const json& x : arr) {
        if (!x.is_number_integer()) {
            throw ParseError(key + " must contain integers");
        }
        long long v = x.get<long long>();
        if (v < 0) {
            throw ParseError("negative weight in " + key);
        }
        w.push_back(v);
    }
    if (static_cast<int>(w.size()) != n) {
        throw ParseError(key + " has wrong length");
    }
    return w;
}

Instance parse_instance(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed instance document: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("instance document must be a JSON object");
    }
    for (const char* key : {"directed", "n", "arcs", "omega", "phi", "lambda"}) {
        if (!doc.contains(key)) {
            throw ParseError(std::string("missing field: ") + key);
        }
    }
    Instance inst;
    bool directed = doc.at("directed").get<bool>();
    int n = doc.at("n").get<int>();
    if (n < 0) {
        throw ParseError("n must be non-negative");
    }
    std::vector<std::pair<int, int>> arcs;
    for (const json& a : doc.at("arcs")) {
        if (!a.is_array() || a.size() != 2) {
            throw ParseError("each arc must be a pair");
        }
        arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    try {
        inst.graph = directed ? Graph::make_directed(n, std::move(arcs))
                              : Graph::make_undirected(n, arcs);
    } catch (const ValidationError& e) {
        throw ParseError(e.what());
    }
    inst.benefit = parse_weights(doc, "b", n);
    inst.vacc_cost = parse_weights(doc, "c_vacc", n);
    inst.attack_cost = parse_weights(doc, "c_att", n);
    inst.prot_cost = parse_weights(doc, "c_prot", n);
    inst.omega = doc.at("omega").get<long long>();
    inst.phi = doc.at("phi").get<long long>();
    inst.lambda = doc.at("lambda").get<long long>();
    if (inst.omega < 0 || inst.phi < 0 || inst.lambda < 0) {
        throw ParseError("negative budget");
    }
    if (doc.contains("names")) {
        for (const json& s : doc.at("names")) {
            inst.names.push_back(s.get<std::string>());
        }
        if (static_cast<int>(inst.names.size()) != n) {
            throw ParseError("names table has wrong length");
        }
    }
    inst.validate();
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    inst.validate();
    json doc;
    doc["directed"] = inst.graph.directed();
    doc["n"] = inst.graph.n();
    json arcs = json::array();
    auto edges = inst.graph.edge_list();
    std::sort(edges.begin(), edges.end());
    for (auto [u, v] : edges) {
        arcs.push_back(json::array({u, v}));
    }
    doc["arcs"] = std::move(arcs);
    auto all_ones = [](const std::vector<long long>& w) {
        return std::all_of(w.begin(), w.end(), [](long long x) { return x == 1; });
    };
    if (!all_ones(inst.benefit)) doc["b"] = inst.benefit;
    if (!all_ones(inst.vacc_cost)) doc["c_vacc"] = inst.vacc_cost;
    if (!all_ones(inst.attack_cost)) doc["c_att"] = inst.attack_cost;
    if (!all_ones(inst.prot_cost)) doc["c_prot"] = inst.prot_cost;
    doc["omega"] = inst.omega;
    doc["phi"] = inst.phi;
    doc["lambda"] = inst.lambda;
    if (!inst.names.empty()) {
        doc["names"] = inst.names;
    }
    return doc.dump(2) + "\n";
}

}  // namespace mcn
