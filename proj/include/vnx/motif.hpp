#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vnx/graph.hpp"

namespace vnx {

// Biconnected components, each given as a list of edge indices. A block with
// a single edge is a bridge.
std::vector<std::vector<int>> biconnected_blocks(const CapGraph& g);

// Repeatedly removes degree-<=2 nodes (lowest id first): degree-0/1 nodes are
// dropped, a degree-2 node is dropped and its incident edges merged unless its
// neighbors are already adjacent (which would create a parallel edge). The
// result keeps the surviving nodes' original ids in `survivors` and is
// relabeled densely in that order. All capacities are reset to 1: the shape is
// what matters.
struct Contraction {
    CapGraph graph;
    std::vector<int> survivors; // original ids, ascending
};
Contraction contract_degree2(const CapGraph& g);

struct Motif {
    std::string name;
    CapGraph graph;
    bool is_chain = false;
};

struct MotifSet {
    std::vector<Motif> motifs;
    bool contains(const CapGraph& g) const;
};

// The motif set of a host: the chain iff the host has a bridge, plus the
// degree-2 contraction of every biconnected block with >= 3 nodes,
// de-duplicated up to isomorphism.
MotifSet extract_motifs(const CapGraph& host);

// Composition rules. insert_node subdivides the given edge; merge glues g2's
// node v2 onto g1's node v1.
CapGraph insert_node(const CapGraph& g, int u, int v);
CapGraph merge_at(const CapGraph& g1, int v1, const CapGraph& g2, int v2);

// Randomly composes a graph from the motif set (start with one motif, then
// repeatedly insert nodes or merge on fresh motifs) until it has >= target_n
// nodes. The derivation is recorded as one textual op per step.
struct Composed {
    CapGraph graph;
    std::vector<std::string> derivation;
};
Composed compose_from_rules(const MotifSet& motifs, int target_n, std::uint64_t seed);

// Node census for a host, in precedence order (each node counted once):
//   largest_motif: survives contraction of a block whose motif has maximal size
//   contracted:    inside a >=3-node block but removed by its contraction
//   tree_fringe:   appears in no >=3-node block (trees hanging off, chains)
//   other:         survivors of smaller motifs only
struct DissectStats {
    int n = 0;
    int tree_fringe = 0;
    int contracted = 0;
    int largest_motif = 0;
    int other = 0;
    // per-node category: 0 fringe, 1 contracted, 2 largest, 3 other
    std::vector<int> category;
};
DissectStats dissect(const CapGraph& host);

} // namespace vnx
