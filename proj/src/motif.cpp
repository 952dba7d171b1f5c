#include "vnx/motif.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

#include "vnx/isomorphism.hpp"

namespace vnx {

std::vector<std::vector<int>> biconnected_blocks(const CapGraph& g) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> disc(g.n, -1), low(g.n, 0);
    std::vector<int> estack;
    int timer = 0;

    // Iterative DFS to avoid recursion limits on long chains.
    struct Frame {
        int v, parent_edge;
        size_t it = 0;
    };
    for (int root = 0; root < g.n; ++root) {
        if (disc[root] >= 0) continue;
        std::vector<Frame> st;
        st.push_back({root, -1});
        disc[root] = low[root] = timer++;
        while (!st.empty()) {
            Frame& f = st.back();
            if (f.it < g.adj[f.v].size()) {
                auto [w, ei] = g.adj[f.v][f.it++];
                if (ei == f.parent_edge) continue;
                if (disc[w] < 0) {
                    estack.push_back(ei);
                    disc[w] = low[w] = timer++;
                    st.push_back({w, ei});
                } else if (disc[w] < disc[f.v]) {
                    estack.push_back(ei);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int fv = f.v, fparent = f.parent_edge;
                st.pop_back();
                if (st.empty()) break;
                Frame& p = st.back();
                low[p.v] = std::min(low[p.v], low[fv]);
                if (low[fv] >= disc[p.v]) {
                    // pop the block rooted at edge p.v -> fv
                    std::vector<int> blk;
                    while (!estack.empty()) {
                        int ei = estack.back();
                        estack.pop_back();
                        blk.push_back(ei);
                        if (ei == fparent) break;
                    }
                    std::sort(blk.begin(), blk.end());
                    blocks.push_back(std::move(blk));
                }
            }
        }
    }
    return blocks;
}

Contraction contract_degree2(const CapGraph& g) {
    std::vector<std::set<int>> nbr(g.n);
    for (auto [u, v] : g.edges) {
        nbr[u].insert(v);
        nbr[v].insert(u);
    }
    std::vector<char> alive(g.n, 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.n && !changed; ++v) {
            if (!alive[v]) continue;
            size_t d = nbr[v].size();
            if (d > 2) continue;
            if (d == 2) {
                auto it = nbr[v].begin();
                int a = *it++;
                int b = *it;
                if (nbr[a].count(b)) continue; // merging would duplicate an edge
                nbr[a].erase(v);
                nbr[b].erase(v);
                nbr[a].insert(b);
                nbr[b].insert(a);
            } else if (d == 1) {
                int a = *nbr[v].begin();
                nbr[a].erase(v);
            } else if (g.n > 1) {
                // isolated node in a multi-node graph: drop it
            } else {
                continue; // a single-node graph stays as it is
            }
            alive[v] = 0;
            nbr[v].clear();
            changed = true;
        }
    }
    Contraction c;
    std::vector<int> remap(g.n, -1);
    for (int v = 0; v < g.n; ++v)
        if (alive[v]) {
            remap[v] = c.graph.add_node();
            c.survivors.push_back(v);
        }
    for (int v = 0; v < g.n; ++v)
        if (alive[v])
            for (int w : nbr[v])
                if (v < w) c.graph.add_edge(remap[v], remap[w]);
    return c;
}

bool MotifSet::contains(const CapGraph& g) const {
    for (const auto& m : motifs)
        if (is_isomorphic(m.graph, g)) return true;
    return false;
}

namespace {

CapGraph subgraph_of_block(const CapGraph& g, const std::vector<int>& block_edges,
                           std::vector<int>* orig_ids = nullptr) {
    std::set<int> nodes;
    for (int ei : block_edges) {
        nodes.insert(g.edges[ei].first);
        nodes.insert(g.edges[ei].second);
    }
    CapGraph s;
    std::vector<int> remap(g.n, -1);
    for (int v : nodes) {
        remap[v] = s.add_node();
        if (orig_ids) orig_ids->push_back(v);
    }
    for (int ei : block_edges) s.add_edge(remap[g.edges[ei].first], remap[g.edges[ei].second]);
    return s;
}

} // namespace

MotifSet extract_motifs(const CapGraph& host) {
    MotifSet out;
    auto blocks = biconnected_blocks(host);
    bool has_bridge = false;
    for (const auto& blk : blocks)
        if (blk.size() == 1) has_bridge = true;
    if (has_bridge) {
        Motif c;
        c.name = "C";
        c.graph = make_path(2);
        c.is_chain = true;
        out.motifs.push_back(std::move(c));
    }
    for (const auto& blk : blocks) {
        if (blk.size() < 2) continue;
        CapGraph sub = subgraph_of_block(host, blk);
        CapGraph m = contract_degree2(sub).graph;
        if (!out.contains(m)) {
            Motif mo;
            mo.name = "M" + std::to_string(out.motifs.size());
            mo.graph = std::move(m);
            out.motifs.push_back(std::move(mo));
        }
    }
    return out;
}

CapGraph insert_node(const CapGraph& g, int u, int v) {
    int e = g.edge_index(u, v);
    if (e < 0) throw std::invalid_argument("insert_node: no such edge");
    CapGraph h;
    for (int i = 0; i < g.n; ++i) h.add_node(g.node_cap[i], g.node_demand[i]);
    for (size_t i = 0; i < g.edges.size(); ++i) {
        if ((int)i == e) continue;
        h.add_edge(g.edges[i].first, g.edges[i].second, g.edge_cap[i], g.edge_demand[i]);
    }
    int w = h.add_node();
    h.add_edge(std::min(u, v), w, g.edge_cap[e], g.edge_demand[e]);
    h.add_edge(w, std::max(u, v), g.edge_cap[e], g.edge_demand[e]);
    return h;
}

CapGraph merge_at(const CapGraph& g1, int v1, const CapGraph& g2, int v2) {
    if (v1 < 0 || v1 >= g1.n || v2 < 0 || v2 >= g2.n)
        throw std::invalid_argument("merge_at: node out of range");
    CapGraph h;
    for (int i = 0; i < g1.n; ++i) h.add_node(g1.node_cap[i], g1.node_demand[i]);
    for (size_t i = 0; i < g1.edges.size(); ++i)
        h.add_edge(g1.edges[i].first, g1.edges[i].second, g1.edge_cap[i], g1.edge_demand[i]);
    std::vector<int> remap(g2.n, -1);
    remap[v2] = v1;
    for (int i = 0; i < g2.n; ++i)
        if (i != v2) remap[i] = h.add_node(g2.node_cap[i], g2.node_demand[i]);
    for (size_t i = 0; i < g2.edges.size(); ++i)
        h.add_edge(remap[g2.edges[i].first], remap[g2.edges[i].second], g2.edge_cap[i],
                   g2.edge_demand[i]);
    return h;
}

Composed compose_from_rules(const MotifSet& motifs, int target_n, std::uint64_t seed) {
    if (motifs.motifs.empty()) throw std::invalid_argument("compose: empty motif set");
    std::mt19937_64 rng(seed);
    Composed out;
    size_t first = rng() % motifs.motifs.size();
    out.graph = motifs.motifs[first].graph;
    out.derivation.push_back("new_motif " + motifs.motifs[first].name);
    while (out.graph.n < target_n) {
        bool do_insert = out.graph.m() > 0 && rng() % 2 == 0;
        if (do_insert) {
            int e = (int)(rng() % (std::uint64_t)out.graph.m());
            auto [u, v] = out.graph.edges[e];
            out.graph = insert_node(out.graph, u, v);
            out.derivation.push_back("insert_node " + std::to_string(u) + " " + std::to_string(v));
        } else {
            size_t mi = rng() % motifs.motifs.size();
            int v1 = (int)(rng() % (std::uint64_t)out.graph.n);
            const CapGraph& m = motifs.motifs[mi].graph;
            int v2 = (int)(rng() % (std::uint64_t)m.n);
            out.graph = merge_at(out.graph, v1, m, v2);
            out.derivation.push_back("merge " + motifs.motifs[mi].name + " at " +
                                     std::to_string(v1) + "/" + std::to_string(v2));
        }
    }
    return out;
}

DissectStats dissect(const CapGraph& host) {
    DissectStats st;
    st.n = host.n;
    st.category.assign(host.n, 0); // default: tree fringe
    auto blocks = biconnected_blocks(host);

    struct BigBlock {
        std::vector<int> nodes;     // original ids
        std::vector<char> survived; // parallel to nodes
        int motif_size = 0;
    };
    std::vector<BigBlock> bigs;
    for (const auto& blk : blocks) {
        if (blk.size() < 2) continue;
        BigBlock bb;
        CapGraph sub = subgraph_of_block(host, blk, &bb.nodes);
        Contraction c = contract_degree2(sub);
        bb.survived.assign(bb.nodes.size(), 0);
        for (int s : c.survivors) bb.survived[s] = 1;
        bb.motif_size = (int)c.survivors.size();
        bigs.push_back(std::move(bb));
    }
    int largest = 0;
    for (const auto& bb : bigs) largest = std::max(largest, bb.motif_size);
    // Precedence: largest-motif survivor > contracted > other; fringe is the
    // default for nodes in no >=3-node block.
    std::vector<int> rank_of(host.n, -1); // -1 none, 0 other, 1 contracted, 2 largest
    for (const auto& bb : bigs) {
        for (size_t i = 0; i < bb.nodes.size(); ++i) {
            int v = bb.nodes[i];
            int r;
            if (!bb.survived[i])
                r = 1;
            else
                r = bb.motif_size == largest ? 2 : 0;
            rank_of[v] = std::max(rank_of[v], r);
        }
    }
    for (int v = 0; v < host.n; ++v) {
        switch (rank_of[v]) {
            case -1:
                st.category[v] = 0;
                ++st.tree_fringe;
                break;
            case 0:
                st.category[v] = 3;
                ++st.other;
                break;
            case 1:
                st.category[v] = 1;
                ++st.contracted;
                break;
            case 2:
                st.category[v] = 2;
                ++st.largest_motif;
                break;
        }
    }
    return st;
}

} // namespace vnx
