#include "vnx/embedding.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "vnx/motif.hpp"

namespace vnx {

const char* phase_name(Phase p) {
    switch (p) {
        case Phase::motif_search: return "motif_search";
        case Phase::repetition: return "repetition";
        case Phase::edge_expansion: return "edge_expansion";
        case Phase::termination: return "termination";
    }
    return "?";
}

ValidationReport validate_embedding(const Embedding& e, const CapGraph& guest,
                                    const CapGraph& host, const Rat& epsilon) {
    if ((int)e.node_map.size() != guest.n || (int)e.edge_paths.size() != guest.m())
        throw std::invalid_argument("witness has wrong node map / edge path count");
    for (int v : e.node_map)
        if (v < 0 || v >= host.n) throw std::invalid_argument("witness maps node outside host");
    for (const auto& p : e.edge_paths)
        for (int v : p)
            if (v < 0 || v >= host.n) throw std::invalid_argument("witness path node outside host");

    auto fail = [](int cond, std::string detail) {
        return ValidationReport{false, cond, std::move(detail)};
    };

    std::vector<Rat> node_load(host.n, Rat(0));
    std::vector<Rat> edge_load(host.edges.size(), Rat(0));
    for (int u = 0; u < guest.n; ++u) node_load[e.node_map[u]] += guest.node_demand[u];

    for (int ge = 0; ge < guest.m(); ++ge) {
        auto [gu, gv] = guest.edges[ge];
        const auto& p = e.edge_paths[ge];
        int x = e.node_map[gu], y = e.node_map[gv];
        if (p.empty()) {
            if (x != y)
                return fail(2, "edge " + std::to_string(gu) + "-" + std::to_string(gv) +
                                   " has empty path but endpoints map to distinct hosts");
            continue;
        }
        if (x == y)
            return fail(2, "edge " + std::to_string(gu) + "-" + std::to_string(gv) +
                               " has a path although its endpoints share one image");
        if (p.front() != x || p.back() != y)
            return fail(2, "path for edge " + std::to_string(gu) + "-" + std::to_string(gv) +
                               " does not connect the endpoint images");
        std::vector<char> seen(host.n, 0);
        for (size_t i = 0; i < p.size(); ++i) {
            if (seen[p[i]])
                return fail(2, "path for edge " + std::to_string(gu) + "-" + std::to_string(gv) +
                                   " revisits host node " + std::to_string(p[i]));
            seen[p[i]] = 1;
            if (i + 1 < p.size()) {
                int he = host.edge_index(p[i], p[i + 1]);
                if (he < 0)
                    return fail(2, "path for edge " + std::to_string(gu) + "-" + std::to_string(gv) +
                                       " uses missing host edge " + std::to_string(p[i]) + "-" +
                                       std::to_string(p[i + 1]));
                edge_load[he] += guest.edge_demand[ge];
            }
        }
        for (size_t i = 1; i + 1 < p.size(); ++i) node_load[p[i]] += epsilon;
    }

    for (int v = 0; v < host.n; ++v)
        if (node_load[v] > host.node_cap[v])
            return fail(3, "host node " + std::to_string(v) + " overloaded: " +
                               format_rat(node_load[v]) + " > " + format_rat(host.node_cap[v]));
    for (size_t he = 0; he < host.edges.size(); ++he)
        if (edge_load[he] > host.edge_cap[he])
            return fail(4, "host edge " + std::to_string(host.edges[he].first) + "-" +
                               std::to_string(host.edges[he].second) + " overloaded: " +
                               format_rat(edge_load[he]) + " > " + format_rat(host.edge_cap[he]));
    return {};
}

namespace {

// 2-edge-connected components: connected components after removing bridges.
// comp[v] is the component id of node v; nodes/edges count per component.
struct TwoEdgeComps {
    std::vector<int> comp;
    std::vector<int> nodes;
    std::vector<int> edges;
};

TwoEdgeComps two_edge_components(const CapGraph& g) {
    std::vector<char> bridge(g.edges.size(), 0);
    for (const auto& block : biconnected_blocks(g))
        if (block.size() == 1) bridge[block[0]] = 1;
    TwoEdgeComps r;
    r.comp.assign(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (r.comp[s] >= 0) continue;
        int c = (int)r.nodes.size();
        r.nodes.push_back(0);
        r.edges.push_back(0);
        std::vector<int> stack{s};
        r.comp[s] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++r.nodes[c];
            for (auto [w, e] : g.adj[v]) {
                if (bridge[e]) continue;
                if (v < w) ++r.edges[c];
                if (r.comp[w] < 0) {
                    r.comp[w] = c;
                    stack.push_back(w);
                }
            }
        }
    }
    return r;
}

// Nontrivial biconnected blocks (>= 2 edges) as node sets, plus per-node
// block membership lists.
struct BlockInfo {
    std::vector<std::vector<int>> nodes;  // per block, ascending node ids
    std::vector<int> edges;               // per block, edge count
    std::vector<std::vector<int>> of_node;
};

BlockInfo block_info(const CapGraph& g) {
    BlockInfo r;
    r.of_node.resize(g.n);
    for (const auto& block : biconnected_blocks(g)) {
        if (block.size() < 2) continue;
        std::vector<int> ns;
        for (int e : block) {
            ns.push_back(g.edges[e].first);
            ns.push_back(g.edges[e].second);
        }
        std::sort(ns.begin(), ns.end());
        ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
        int id = (int)r.nodes.size();
        for (int v : ns) r.of_node[v].push_back(id);
        r.nodes.push_back(std::move(ns));
        r.edges.push_back((int)block.size());
    }
    return r;
}

class Solver {
public:
    Solver(const CapGraph& g, const CapGraph& h, const SolveOptions& opts)
        : g_(g), h_(h), opts_(opts) {}

    std::optional<Embedding> solve() {
        if (g_.n == 0) return Embedding{};
        if (!quick_feasible()) return std::nullopt;
        node_map_.assign(g_.n, -1);
        node_res_ = h_.node_cap;
        edge_res_ = h_.edge_cap;
        paths_.assign(g_.m(), {});
        all_unit_ = g_.all_unit() && h_.all_unit();
        sorted_adj_.resize(h_.n);
        for (int v = 0; v < h_.n; ++v) {
            sorted_adj_[v].assign(h_.adj[v].begin(), h_.adj[v].end());
            std::sort(sorted_adj_[v].begin(), sorted_adj_[v].end());
        }
        if (all_unit_) {
            // Unit capacities make routed paths edge-disjoint and forbid
            // co-mapping, so a 2-edge-connected group of guest nodes can only
            // land inside a single 2-edge-connected component of the host.
            gc_ = two_edge_components(g_);
            hc_ = two_edge_components(h_);
            comp_host_.assign(gc_.nodes.size(), -1);
            comp_placed_.assign(gc_.nodes.size(), 0);
            hres_nodes_ = hc_.nodes;
            hres_edges_ = hc_.edges;
            for (size_t c = 0; c < gc_.nodes.size(); ++c) {
                if (gc_.nodes[c] < 2) continue;
                bool fits = false;
                for (size_t hcc = 0; hcc < hc_.nodes.size() && !fits; ++hcc)
                    fits = hc_.nodes[hcc] >= gc_.nodes[c] && hc_.edges[hcc] >= gc_.edges[c];
                if (!fits) return std::nullopt;
            }
        }
        if (all_unit_) build_twins();
        if (all_unit_) {
            rmap_.assign(h_.n, -1);
            free_deg_.resize(h_.n);
            for (int v = 0; v < h_.n; ++v) free_deg_[v] = h_.degree(v);
            rem_deg_.resize(g_.n);
            for (int u = 0; u < g_.n; ++u) rem_deg_[u] = g_.degree(u);
        }
        // When a relay eats more than half a unit node, every node carries at
        // most one guest path, so a 2-connected group of guest nodes can only
        // land inside a single biconnected block of the host.
        strict_relay_ = all_unit_ && opts_.epsilon * 2 > Rat(1);
        std::vector<int> block_rank(g_.n, std::numeric_limits<int>::max());
        if (all_unit_) {
            gb_ = block_info(g_);
            // Densest blocks first; a node inherits the rank of its densest
            // block so each block is placed as one consecutive batch.
            std::vector<int> bs(gb_.nodes.size());
            std::iota(bs.begin(), bs.end(), 0);
            std::sort(bs.begin(), bs.end(), [&](int a, int b) {
                if (gb_.edges[a] != gb_.edges[b]) return gb_.edges[a] > gb_.edges[b];
                return a < b;
            });
            for (size_t r = 0; r < bs.size(); ++r)
                for (int v : gb_.nodes[bs[r]]) block_rank[v] = std::min(block_rank[v], (int)r);
        }
        if (strict_relay_) {
            hb_ = block_info(h_);
            cand_.resize(gb_.nodes.size());
            for (size_t b = 0; b < gb_.nodes.size(); ++b) {
                for (size_t x = 0; x < hb_.nodes.size(); ++x)
                    if (hb_.edges[x] >= gb_.edges[b] &&
                        hb_.nodes[x].size() >= gb_.nodes[b].size())
                        cand_[b].push_back((int)x);
                if (cand_[b].empty()) return std::nullopt;
            }
        }
        auto before = [&](int a, int b) {
            if (all_unit_) {
                // densest guest components first, all of a component together
                int ca = gc_.comp[a], cb = gc_.comp[b];
                if (ca != cb) {
                    if (gc_.edges[ca] != gc_.edges[cb]) return gc_.edges[ca] > gc_.edges[cb];
                    return ca < cb;
                }
                if (block_rank[a] != block_rank[b]) return block_rank[a] < block_rank[b];
            }
            if (g_.degree(a) != g_.degree(b)) return g_.degree(a) > g_.degree(b);
            return a < b;
        };
        // Connected placement order: after the first node, prefer nodes with an
        // already-ordered neighbor so every placement routes at least one edge
        // immediately; ties (and fresh components) fall back to `before`.
        order_.clear();
        order_.reserve(g_.n);
        std::vector<char> ordered(g_.n, 0);
        std::vector<int> frontier_hits(g_.n, 0);
        for (int step = 0; step < g_.n; ++step) {
            int pick = -1;
            for (int u = 0; u < g_.n; ++u) {
                if (ordered[u]) continue;
                if (pick < 0) {
                    pick = u;
                    continue;
                }
                bool uc = frontier_hits[u] > 0, pc = frontier_hits[pick] > 0;
                if (uc != pc) {
                    if (uc) pick = u;
                    continue;
                }
                if (before(u, pick)) pick = u;
            }
            ordered[pick] = 1;
            order_.push_back(pick);
            for (auto [w, e] : g_.adj[pick]) ++frontier_hits[w];
        }
        if (!place(0)) return std::nullopt;
        Embedding e;
        e.node_map = node_map_;
        e.edge_paths = paths_;
        return e;
    }

private:
    const CapGraph& g_;
    const CapGraph& h_;
    SolveOptions opts_;
    long long budget_ = 0;
    bool all_unit_ = false;
    std::vector<int> order_, node_map_;
    std::vector<Rat> node_res_, edge_res_;
    std::vector<std::vector<int>> paths_;
    std::vector<std::vector<std::pair<int, int>>> sorted_adj_;
    TwoEdgeComps gc_, hc_;
    std::vector<int> comp_host_, comp_placed_, hres_nodes_, hres_edges_;
    std::vector<int> twin_prev_;
    std::vector<int> rmap_;     // host node -> guest node hosted there (unit case)
    std::vector<int> free_deg_; // host node -> incident edges with full residual
    std::vector<int> rem_deg_;  // guest node -> incident edges not yet routed
    bool strict_relay_ = false;
    BlockInfo gb_, hb_;
    std::vector<std::vector<int>> cand_; // feasible host blocks per guest block

    // u and v are interchangeable guest nodes: equal neighborhoods apart from
    // each other (adjacent or not). Swapping their images turns any valid
    // embedding into another one, so their images may be forced into
    // ascending order.
    bool twins(int u, int v) const {
        std::vector<char> nu(g_.n, 0), nv(g_.n, 0);
        for (auto [w, e] : g_.adj[u]) nu[w] = 1;
        for (auto [w, e] : g_.adj[v]) nv[w] = 1;
        if (nu[v] != nv[u]) return false;
        nu[u] = nu[v] = nv[u] = nv[v] = 0;
        return nu == nv;
    }

    void build_twins() {
        twin_prev_.assign(g_.n, -1);
        std::vector<std::vector<int>> classes;
        for (int u = 0; u < g_.n; ++u) {
            bool put = false;
            for (auto& cls : classes) {
                bool all = true;
                for (int v : cls)
                    if (!twins(u, v)) {
                        all = false;
                        break;
                    }
                if (all) {
                    twin_prev_[u] = cls.back();
                    cls.push_back(u);
                    put = true;
                    break;
                }
            }
            if (!put) classes.push_back({u});
        }
    }

    void spend() {
        if (++budget_ > opts_.budget) throw BudgetError{};
    }

    bool quick_feasible() {
        Rat gsum(0), hsum(0);
        for (int v = 0; v < g_.n; ++v) gsum += g_.node_demand[v];
        for (int v = 0; v < h_.n; ++v) hsum += h_.node_cap[v];
        if (gsum > hsum) return false;
        if (g_.all_unit() && h_.all_unit()) {
            if (g_.n > h_.n || g_.m() > h_.m()) return false;
            auto gd = g_.sorted_degrees(), hd = h_.sorted_degrees();
            // compare the k largest degrees pairwise
            for (int i = 0; i < g_.n; ++i)
                if (gd[g_.n - 1 - i] > hd[h_.n - 1 - i]) return false;
        }
        return true;
    }

    bool place(size_t k) {
        if (k == order_.size()) return true;
        int u = order_[k];
        int c = all_unit_ ? gc_.comp[u] : -1;
        bool grouped = c >= 0 && gc_.nodes[c] >= 2;
        int vmin = 0;
        if (all_unit_ && twin_prev_[u] >= 0 && node_map_[twin_prev_[u]] >= 0)
            vmin = node_map_[twin_prev_[u]] + 1;
        for (int v = vmin; v < h_.n; ++v) {
            spend();
            if (node_res_[v] < g_.node_demand[u]) continue;
            if (all_unit_ && g_.degree(u) > free_deg_[v]) continue;
            bool claims = false;
            if (grouped) {
                int hcc = hc_.comp[v];
                if (comp_host_[c] >= 0) {
                    if (hcc != comp_host_[c]) continue;
                } else {
                    if (hres_nodes_[hcc] < gc_.nodes[c] || hres_edges_[hcc] < gc_.edges[c])
                        continue;
                    comp_host_[c] = hcc;
                    hres_nodes_[hcc] -= gc_.nodes[c];
                    hres_edges_[hcc] -= gc_.edges[c];
                    claims = true;
                }
                ++comp_placed_[c];
            }
            auto unclaim = [&] {
                if (!grouped) return;
                --comp_placed_[c];
                if (claims) {
                    int hcc = comp_host_[c];
                    hres_nodes_[hcc] += gc_.nodes[c];
                    hres_edges_[hcc] += gc_.edges[c];
                    comp_host_[c] = -1;
                    claims = false;
                }
            };
            std::vector<std::pair<int, std::vector<int>>> undo;
            if (strict_relay_) {
                bool dead = false;
                for (int b : gb_.of_node[u]) {
                    std::vector<int> keep;
                    for (int x : cand_[b])
                        if (std::binary_search(hb_.nodes[x].begin(), hb_.nodes[x].end(), v))
                            keep.push_back(x);
                    if (keep.size() == cand_[b].size()) continue;
                    if (keep.empty()) {
                        dead = true;
                        break;
                    }
                    undo.emplace_back(b, std::move(cand_[b]));
                    cand_[b] = std::move(keep);
                }
                if (dead) {
                    for (auto& [b, old] : undo) cand_[b] = std::move(old);
                    unclaim();
                    continue;
                }
            }
            node_map_[u] = v;
            node_res_[v] -= g_.node_demand[u];
            if (all_unit_) rmap_[v] = u;
            // Route every guest edge from u to an already-placed neighbor.
            std::vector<int> pending;
            for (auto [w, ge] : g_.adj[u])
                if (node_map_[w] >= 0) pending.push_back(ge);
            std::sort(pending.begin(), pending.end());
            if (route(pending, 0, k)) return true;
            node_res_[v] += g_.node_demand[u];
            node_map_[u] = -1;
            if (all_unit_) rmap_[v] = -1;
            for (auto& [b, old] : undo) cand_[b] = std::move(old);
            unclaim();
        }
        return false;
    }

    bool route(const std::vector<int>& pending, size_t i, size_t k) {
        if (i == pending.size()) return place(k + 1);
        int ge = pending[i];
        auto [gu, gv] = g_.edges[ge];
        int x = node_map_[gu], y = node_map_[gv];
        Rat d = g_.edge_demand[ge];
        if (x == y) {
            // Co-mapped endpoints: the edge rides along at zero cost.
            paths_[ge].clear();
            return route(pending, i + 1, k);
        }
        if (!reachable(x, y, d)) return false;
        // Every later pending edge must still be routable with the current
        // residuals; committing paths only removes capacity.
        for (size_t j = i + 1; j < pending.size(); ++j) {
            auto [au, av] = g_.edges[pending[j]];
            int ax = node_map_[au], ay = node_map_[av];
            if (ax != ay && !reachable(ax, ay, g_.edge_demand[pending[j]])) return false;
        }
        // Shortest paths first, for determinism and because short routes
        // leave the most residual capacity.
        std::vector<int> path{x};
        std::vector<char> on_path((size_t)h_.n, 0);
        on_path[x] = 1;
        for (int len = 1; len < h_.n; ++len) {
            if (dfs_exact(path, on_path, y, d, len, pending, i, k)) return true;
        }
        return false;
    }

    // Extends `path` to reach y with exactly `remaining` more edges.
    bool dfs_exact(std::vector<int>& path, std::vector<char>& on_path, int y, const Rat& d,
                   int remaining, const std::vector<int>& pending, size_t i, size_t k) {
        spend();
        int cur = path.back();
        if (remaining == 0) {
            if (cur != y) return false;
            // Commit the path: charge edges and relay nodes.
            int ge = pending[i];
            for (size_t j = 0; j + 1 < path.size(); ++j)
                edge_res_[h_.edge_index(path[j], path[j + 1])] -= d;
            for (size_t j = 1; j + 1 < path.size(); ++j) node_res_[path[j]] -= opts_.epsilon;
            paths_[ge] = path;
            bool viable = true;
            if (all_unit_) {
                for (size_t j = 0; j + 1 < path.size(); ++j) {
                    --free_deg_[path[j]];
                    --free_deg_[path[j + 1]];
                }
                auto [gu, gv] = g_.edges[ge];
                --rem_deg_[gu];
                --rem_deg_[gv];
                // Placed guests along the path must keep enough free incident
                // host edges for their still-unrouted guest edges.
                for (int x : path) {
                    int gw = rmap_[x];
                    if (gw >= 0 && free_deg_[x] < rem_deg_[gw]) {
                        viable = false;
                        break;
                    }
                }
            }
            if (viable && route(pending, i + 1, k)) return true;
            for (size_t j = 0; j + 1 < path.size(); ++j)
                edge_res_[h_.edge_index(path[j], path[j + 1])] += d;
            for (size_t j = 1; j + 1 < path.size(); ++j) node_res_[path[j]] += opts_.epsilon;
            if (all_unit_) {
                for (size_t j = 0; j + 1 < path.size(); ++j) {
                    ++free_deg_[path[j]];
                    ++free_deg_[path[j + 1]];
                }
                auto [gu, gv] = g_.edges[ge];
                ++rem_deg_[gu];
                ++rem_deg_[gv];
            }
            paths_[ge].clear();
            return false;
        }
        // Neighbors in ascending id order for determinism.
        for (auto [w, he] : sorted_adj_[cur]) {
            if (on_path[w]) continue;
            if (edge_res_[he] < d) continue;
            if (w != y && remaining > 1 && node_res_[w] < opts_.epsilon) continue;
            if (w == y && remaining > 1) continue; // must not pass through y early
            if (w != y && remaining == 1) continue;
            path.push_back(w);
            on_path[w] = 1;
            if (dfs_exact(path, on_path, y, d, remaining - 1, pending, i, k)) return true;
            on_path[w] = 0;
            path.pop_back();
        }
        return false;
    }

    bool reachable(int x, int y, const Rat& d) {
        std::vector<char> seen((size_t)h_.n, 0);
        std::vector<int> stack{x};
        seen[x] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, he] : h_.adj[v]) {
                if (seen[w] || edge_res_[he] < d) continue;
                if (w == y) return true;
                if (node_res_[w] < opts_.epsilon) continue; // cannot relay through w
                seen[w] = 1;
                stack.push_back(w);
            }
        }
        return x == y;
    }
};

} // namespace

std::optional<Embedding> find_embedding(const CapGraph& guest, const CapGraph& host,
                                        const SolveOptions& opts) {
    Solver s(guest, host, opts);
    return s.solve();
}

bool is_embeddable(const CapGraph& guest, const CapGraph& host, const SolveOptions& opts) {
    return find_embedding(guest, host, opts).has_value();
}

Oracle::Oracle(CapGraph host, SolveOptions opts) : host_(std::move(host)), opts_(opts) {}

bool Oracle::query(const CapGraph& guest, Phase phase) {
    bool reply = is_embeddable(guest, host_, opts_);
    log_.push_back({(int)log_.size(), phase, guest.n, guest.m(), reply});
    return reply;
}

} // namespace vnx
