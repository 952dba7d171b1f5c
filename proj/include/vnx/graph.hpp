#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "vnx/rational.hpp"

namespace vnx {

// Undirected simple graph with rational node/edge capacities and demands.
// Node ids are dense 0..n-1. Capacity is what a node/edge offers when the
// graph acts as a substrate; demand is what it requests when it acts as a
// guest. Both default to 1. Intended to be built once and then treated as
// immutable.
struct CapGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // normalized u < v, no duplicates
    std::vector<Rat> node_cap, node_demand;
    std::vector<Rat> edge_cap, edge_demand;
    // adjacency: adj[v] = list of (neighbor, edge index)
    std::vector<std::vector<std::pair<int, int>>> adj;

    int add_node(Rat cap = Rat(1), Rat demand = Rat(1));
    // Returns the new edge index. Throws on loops, duplicate edges or
    // out-of-range endpoints.
    int add_edge(int u, int v, Rat cap = Rat(1), Rat demand = Rat(1));

    int edge_index(int u, int v) const; // -1 if absent
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
    int degree(int v) const { return (int)adj[v].size(); }
    int m() const { return (int)edges.size(); }

    bool connected() const;
    std::vector<int> sorted_degrees() const; // ascending
    bool all_unit() const;                   // every cap and demand equals 1
};

CapGraph parse_edge_list(std::istream& in);
CapGraph parse_edge_list_file(const std::string& path);
std::string write_edge_list(const CapGraph& g);

// --- generators (all deterministic given the seed) ---

CapGraph make_single_node();
CapGraph make_path(int n);   // n nodes, n-1 edges
CapGraph make_cycle(int n);  // n >= 3
CapGraph make_clique(int n); // n >= 1
CapGraph make_star(int leaves);
CapGraph make_random_tree(int n, std::uint64_t seed);
// Cycles (length 3..6) and pendant edges attached at random nodes.
CapGraph make_random_cactus(int n, std::uint64_t seed);
// Cliques of size 2..max_clique attached at random nodes; with subdivisions=true
// some clique edges are subdivided afterwards (node budget permitting).
CapGraph make_random_block_graph(int n, int max_clique, std::uint64_t seed,
                                 bool subdivisions = false);

// Parses specs like "tree:n=20:seed=3", "cactus:n=12:seed=0",
// "block:n=25:k=6:seed=1:sub=1", "cycle:n=6", "clique:n=5", "path:n=4",
// or a plain filename (no ':'), which is loaded as an edge list.
CapGraph host_from_spec(const std::string& spec);

} // namespace vnx
