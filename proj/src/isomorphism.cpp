#include "vnx/isomorphism.hpp"

#include <algorithm>

namespace vnx {

namespace {

struct IsoSearch {
    const CapGraph& a;
    const CapGraph& b;
    const std::vector<int>* ca = nullptr;
    const std::vector<int>* cb = nullptr;
    std::vector<int> map;  // a node -> b node or -1
    std::vector<int> rmap; // b node -> a node or -1
    std::vector<int> order;

    IsoSearch(const CapGraph& a_, const CapGraph& b_) : a(a_), b(b_) {}

    bool compatible(int u, int v) const {
        if (a.degree(u) != b.degree(v)) return false;
        if (a.node_cap[u] != b.node_cap[v]) return false;
        if (a.node_demand[u] != b.node_demand[v]) return false;
        if (ca && (*ca)[u] != (*cb)[v]) return false;
        // Adjacency with already-mapped nodes must match both ways,
        // including edge attributes.
        for (auto [w, ei] : a.adj[u]) {
            if (map[w] < 0) continue;
            int be = b.edge_index(v, map[w]);
            if (be < 0) return false;
            if (a.edge_cap[ei] != b.edge_cap[be]) return false;
            if (a.edge_demand[ei] != b.edge_demand[be]) return false;
        }
        // Non-adjacency: any mapped b-neighbor of v must come from an
        // a-neighbor of u; count degrees of v into the mapped set.
        int a_mapped_nbrs = 0;
        for (auto [w, ei] : a.adj[u])
            if (map[w] >= 0) ++a_mapped_nbrs;
        int b_mapped_nbrs = 0;
        for (auto [w, ei] : b.adj[v])
            if (rmap[w] >= 0) ++b_mapped_nbrs;
        return a_mapped_nbrs == b_mapped_nbrs;
    }

    bool extend(size_t k) {
        if (k == order.size()) return true;
        int u = order[k];
        for (int v = 0; v < b.n; ++v) {
            if (rmap[v] >= 0) continue;
            if (!compatible(u, v)) continue;
            map[u] = v;
            rmap[v] = u;
            if (extend(k + 1)) return true;
            map[u] = -1;
            rmap[v] = -1;
        }
        return false;
    }

    bool run() {
        if (a.n != b.n || a.m() != b.m()) return false;
        if (a.sorted_degrees() != b.sorted_degrees()) return false;
        auto key = [](const CapGraph& g) {
            std::vector<std::pair<Rat, Rat>> k;
            for (int v = 0; v < g.n; ++v) k.emplace_back(g.node_cap[v], g.node_demand[v]);
            std::sort(k.begin(), k.end());
            return k;
        };
        if (key(a) != key(b)) return false;
        map.assign(a.n, -1);
        rmap.assign(b.n, -1);
        order.resize(a.n);
        for (int i = 0; i < a.n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            if (a.degree(x) != a.degree(y)) return a.degree(x) > a.degree(y);
            return x < y;
        });
        return extend(0);
    }
};

} // namespace

bool is_isomorphic(const CapGraph& a, const CapGraph& b) {
    IsoSearch s(a, b);
    return s.run();
}

bool is_isomorphic_marked(const CapGraph& a, const CapGraph& b,
                          const std::vector<int>& colors_a,
                          const std::vector<int>& colors_b) {
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    if (sorted(colors_a) != sorted(colors_b)) return false;
    IsoSearch s(a, b);
    s.ca = &colors_a;
    s.cb = &colors_b;
    return s.run();
}

} // namespace vnx
