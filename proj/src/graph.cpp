#include "vnx/graph.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace vnx {

int CapGraph::add_node(Rat cap, Rat demand) {
    node_cap.push_back(cap);
    node_demand.push_back(demand);
    adj.emplace_back();
    return n++;
}

int CapGraph::add_edge(int u, int v, Rat cap, Rat demand) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop not allowed");
    if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");
    if (u > v) std::swap(u, v);
    int idx = (int)edges.size();
    edges.emplace_back(u, v);
    edge_cap.push_back(cap);
    edge_demand.push_back(demand);
    adj[u].emplace_back(v, idx);
    adj[v].emplace_back(u, idx);
    return idx;
}

int CapGraph::edge_index(int u, int v) const {
    if (u < 0 || v < 0 || u >= n || v >= n) return -1;
    const auto& a = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
    int other = adj[u].size() <= adj[v].size() ? v : u;
    for (auto [w, idx] : a)
        if (w == other) return idx;
    return -1;
}

bool CapGraph::connected() const {
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, idx] : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                stack.push_back(w);
            }
    }
    return cnt == n;
}

std::vector<int> CapGraph::sorted_degrees() const {
    std::vector<int> d(n);
    for (int v = 0; v < n; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

bool CapGraph::all_unit() const {
    Rat one(1);
    for (int v = 0; v < n; ++v)
        if (node_cap[v] != one || node_demand[v] != one) return false;
    for (size_t e = 0; e < edges.size(); ++e)
        if (edge_cap[e] != one || edge_demand[e] != one) return false;
    return true;
}

// --- edge-list format ---
// Lines: "u v" (edge), "node u [cap=R] [demand=R]", "edge u v [cap=R] [demand=R]",
// '#' comments, blank lines ignored. Node count = max id seen + 1.

CapGraph parse_edge_list(std::istream& in) {
    struct EdgeDecl {
        int u, v;
        Rat cap, dem;
    };
    std::vector<EdgeDecl> edecls;
    struct NodeDecl {
        int u;
        Rat cap, dem;
    };
    std::vector<NodeDecl> ndecls;
    int max_id = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        auto parse_attrs = [&](Rat& cap, Rat& dem) {
            std::string a;
            while (ls >> a) {
                if (a.rfind("cap=", 0) == 0)
                    cap = parse_rat(a.substr(4));
                else if (a.rfind("demand=", 0) == 0)
                    dem = parse_rat(a.substr(7));
                else
                    throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown attribute '" + a + "'");
            }
        };
        if (tok == "node") {
            NodeDecl d{0, Rat(1), Rat(1)};
            if (!(ls >> d.u) || d.u < 0) throw std::invalid_argument("line " + std::to_string(lineno) + ": bad node id");
            parse_attrs(d.cap, d.dem);
            ndecls.push_back(d);
            max_id = std::max(max_id, d.u);
        } else if (tok == "edge") {
            EdgeDecl d{0, 0, Rat(1), Rat(1)};
            if (!(ls >> d.u >> d.v) || d.u < 0 || d.v < 0)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": bad edge endpoints");
            parse_attrs(d.cap, d.dem);
            edecls.push_back(d);
            max_id = std::max({max_id, d.u, d.v});
        } else {
            EdgeDecl d{0, 0, Rat(1), Rat(1)};
            try {
                d.u = std::stoi(tok);
            } catch (...) {
                throw std::invalid_argument("line " + std::to_string(lineno) + ": expected edge 'u v'");
            }
            if (!(ls >> d.v) || d.u < 0 || d.v < 0)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": expected edge 'u v'");
            std::string extra;
            if (ls >> extra) throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
            edecls.push_back(d);
            max_id = std::max({max_id, d.u, d.v});
        }
    }
    CapGraph g;
    for (int i = 0; i <= max_id; ++i) g.add_node();
    for (const auto& d : ndecls) {
        g.node_cap[d.u] = d.cap;
        g.node_demand[d.u] = d.dem;
    }
    for (const auto& d : edecls) g.add_edge(d.u, d.v, d.cap, d.dem);
    return g;
}

CapGraph parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_edge_list(in);
}

std::string write_edge_list(const CapGraph& g) {
    std::ostringstream out;
    Rat one(1);
    std::vector<char> mentioned(g.n, 0);
    for (auto [u, v] : g.edges) mentioned[u] = mentioned[v] = 1;
    for (int v = 0; v < g.n; ++v) {
        if (g.node_cap[v] != one || g.node_demand[v] != one || !mentioned[v]) {
            out << "node " << v;
            if (g.node_cap[v] != one) out << " cap=" << format_rat(g.node_cap[v]);
            if (g.node_demand[v] != one) out << " demand=" << format_rat(g.node_demand[v]);
            out << "\n";
        }
    }
    for (size_t e = 0; e < g.edges.size(); ++e) {
        auto [u, v] = g.edges[e];
        if (g.edge_cap[e] != one || g.edge_demand[e] != one) {
            out << "edge " << u << " " << v;
            if (g.edge_cap[e] != one) out << " cap=" << format_rat(g.edge_cap[e]);
            if (g.edge_demand[e] != one) out << " demand=" << format_rat(g.edge_demand[e]);
            out << "\n";
        } else {
            out << u << " " << v << "\n";
        }
    }
    return out.str();
}

// --- generators ---

CapGraph make_single_node() {
    CapGraph g;
    g.add_node();
    return g;
}

CapGraph make_path(int n) {
    CapGraph g;
    for (int i = 0; i < n; ++i) g.add_node();
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

CapGraph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs >= 3 nodes");
    CapGraph g = make_path(n);
    g.add_edge(n - 1, 0);
    return g;
}

CapGraph make_clique(int n) {
    CapGraph g;
    for (int i = 0; i < n; ++i) g.add_node();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

CapGraph make_star(int leaves) {
    CapGraph g;
    g.add_node();
    for (int i = 0; i < leaves; ++i) {
        int v = g.add_node();
        g.add_edge(0, v);
    }
    return g;
}

CapGraph make_random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("tree needs >= 1 node");
    std::mt19937_64 rng(seed);
    CapGraph g;
    g.add_node();
    for (int i = 1; i < n; ++i) {
        int parent = (int)(rng() % (std::uint64_t)i);
        int v = g.add_node();
        g.add_edge(parent, v);
    }
    return g;
}

CapGraph make_random_cactus(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("cactus needs >= 1 node");
    std::mt19937_64 rng(seed);
    CapGraph g;
    g.add_node();
    while (g.n < n) {
        int at = (int)(rng() % (std::uint64_t)g.n);
        int remaining = n - g.n;
        bool pendant = remaining < 2 || rng() % 3 == 0;
        if (pendant) {
            int v = g.add_node();
            g.add_edge(at, v);
        } else {
            int extra = 2 + (int)(rng() % 4); // cycle length 3..6 => 2..5 new nodes
            extra = std::min(extra, remaining);
            int prev = at;
            for (int i = 0; i < extra; ++i) {
                int v = g.add_node();
                g.add_edge(prev, v);
                prev = v;
            }
            g.add_edge(prev, at);
        }
    }
    return g;
}

CapGraph make_random_block_graph(int n, int max_clique, std::uint64_t seed, bool subdivisions) {
    if (n < 1) throw std::invalid_argument("block graph needs >= 1 node");
    if (max_clique < 2) throw std::invalid_argument("max clique must be >= 2");
    std::mt19937_64 rng(seed);
    CapGraph g;
    g.add_node();
    // Extra nodes reserved for subdivisions: roughly a quarter of the budget.
    int reserve = subdivisions ? (n - 1) / 4 : 0;
    while (g.n < n - reserve) {
        int at = (int)(rng() % (std::uint64_t)g.n);
        int remaining = (n - reserve) - g.n;
        int k = 2 + (int)(rng() % (std::uint64_t)(max_clique - 1)); // clique size 2..max
        int extra = std::min(k - 1, remaining);
        std::vector<int> members{at};
        for (int i = 0; i < extra; ++i) members.push_back(g.add_node());
        for (size_t i = 0; i < members.size(); ++i)
            for (size_t j = i + 1; j < members.size(); ++j) g.add_edge(members[i], members[j]);
    }
    while (g.n < n) {
        // Subdivide a random edge of a block with >= 3 nodes (skip bridges of
        // 2-cliques: both endpoints degree 1 means a pendant edge; subdividing
        // those only grows chains, which is fine too, so just pick any edge).
        int e = (int)(rng() % (std::uint64_t)g.edges.size());
        auto [u, v] = g.edges[e];
        // Rebuild without edge e, adding the subdivision node.
        CapGraph h;
        for (int i = 0; i < g.n; ++i) h.add_node(g.node_cap[i], g.node_demand[i]);
        for (size_t i = 0; i < g.edges.size(); ++i) {
            if ((int)i == e) continue;
            h.add_edge(g.edges[i].first, g.edges[i].second, g.edge_cap[i], g.edge_demand[i]);
        }
        int w = h.add_node();
        h.add_edge(u, w);
        h.add_edge(w, v);
        g = std::move(h);
    }
    return g;
}

CapGraph host_from_spec(const std::string& spec) {
    if (spec.find(':') == std::string::npos) return parse_edge_list_file(spec);
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream ss(spec);
    while (std::getline(ss, cur, ':')) parts.push_back(cur);
    if (parts.empty()) throw std::invalid_argument("empty host spec");
    std::string family = parts[0];
    long long n = -1, seed = 0, k = 4, sub = 0;
    for (size_t i = 1; i < parts.size(); ++i) {
        auto eq = parts[i].find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad host spec field '" + parts[i] + "'");
        std::string key = parts[i].substr(0, eq);
        long long val = std::stoll(parts[i].substr(eq + 1));
        if (key == "n")
            n = val;
        else if (key == "seed")
            seed = val;
        else if (key == "k")
            k = val;
        else if (key == "sub")
            sub = val;
        else
            throw std::invalid_argument("unknown host spec key '" + key + "'");
    }
    if (n < 1) throw std::invalid_argument("host spec needs n>=1");
    if (family == "tree") return make_random_tree((int)n, (std::uint64_t)seed);
    if (family == "cactus") return make_random_cactus((int)n, (std::uint64_t)seed);
    if (family == "block") return make_random_block_graph((int)n, (int)k, (std::uint64_t)seed, sub != 0);
    if (family == "cycle") return make_cycle((int)n);
    if (family == "clique") return make_clique((int)n);
    if (family == "path") return make_path((int)n);
    if (family == "star") return make_star((int)n);
    throw std::invalid_argument("unknown host family '" + family + "'");
}

} // namespace vnx
