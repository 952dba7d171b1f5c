#include "vnx/dictionary.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "vnx/isomorphism.hpp"

namespace vnx {

int Dictionary::find_label(const std::string& label) const {
    for (size_t i = 0; i < words.size(); ++i)
        if (words[i].label == label) return (int)i;
    return -1;
}

Word make_chain_word() {
    Word w;
    w.label = "C";
    w.graph = make_path(2);
    w.in_node = 0;
    w.out_node = 1;
    return w;
}

RealizedSeq realize_words(const std::vector<Word>& words) {
    if (words.empty()) throw std::invalid_argument("cannot realize empty sequence");
    RealizedSeq r;
    int cur = r.graph.add_node(); // shared attachment start
    r.in_node = cur;
    for (const Word& w : words) {
        std::vector<int> remap(w.graph.n, -1);
        remap[w.in_node] = cur;
        for (int v = 0; v < w.graph.n; ++v)
            if (v != w.in_node) remap[v] = r.graph.add_node();
        for (auto [u, v] : w.graph.edges) r.graph.add_edge(remap[u], remap[v]);
        cur = remap[w.out_node];
    }
    r.out_node = cur;
    return r;
}

RealizedSeq realize_sequence(const Dictionary& d, const std::vector<int>& word_ids) {
    std::vector<Word> ws;
    for (int id : word_ids) ws.push_back(d.words.at((size_t)id));
    return realize_words(ws);
}

CapGraph chain_context(const Word& w) {
    return realize_words({make_chain_word(), w, make_chain_word()}).graph;
}

bool dict_edge_test(const Word& w1, const Word& w2, const SolveOptions& opts) {
    return is_embeddable(chain_context(w1), chain_context(w2), opts);
}

std::vector<int> word_colors(const Word& w) {
    std::vector<int> c(w.graph.n, 0);
    c[w.in_node] = 1;
    c[w.out_node] = 2;
    return c;
}

bool words_equivalent(const Word& a, const Word& b) {
    return is_isomorphic_marked(a.graph, b.graph, word_colors(a), word_colors(b));
}

namespace {

bool is_chain_word(const Word& w) {
    return w.graph.n == 2 && w.graph.m() == 1;
}

// All automorphisms of a small unit graph (node permutations preserving
// adjacency). Throws if the group is unreasonably large.
std::vector<std::vector<int>> automorphisms(const CapGraph& g, size_t cap = 50000) {
    std::vector<std::vector<int>> out;
    std::vector<int> map(g.n, -1), rmap(g.n, -1);
    std::function<void(int)> rec = [&](int u) {
        if (u == g.n) {
            out.push_back(map);
            if (out.size() > cap) throw std::length_error("automorphism group too large");
            return;
        }
        for (int v = 0; v < g.n; ++v) {
            if (rmap[v] >= 0 || g.degree(u) != g.degree(v)) continue;
            bool ok = true;
            for (auto [w, ei] : g.adj[u]) {
                if (map[w] < 0) continue;
                if (!g.has_edge(v, map[w])) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                int mapped_u = 0, mapped_v = 0;
                for (auto [w, ei] : g.adj[u])
                    if (map[w] >= 0) ++mapped_u;
                for (auto [w, ei] : g.adj[v])
                    if (rmap[w] >= 0) ++mapped_v;
                ok = mapped_u == mapped_v;
            }
            if (!ok) continue;
            map[u] = v;
            rmap[v] = u;
            rec(u + 1);
            map[u] = -1;
            rmap[v] = -1;
        }
    };
    rec(0);
    return out;
}

// Attachment element: node (is_edge=false, id=v) or edge (is_edge=true, id=edge idx).
struct Elem {
    bool is_edge;
    int id;
    bool operator<(const Elem& o) const {
        if (is_edge != o.is_edge) return !is_edge;
        return id < o.id;
    }
    bool operator==(const Elem& o) const { return is_edge == o.is_edge && id == o.id; }
};

Elem apply_aut(const CapGraph& g, const std::vector<int>& f, const Elem& e) {
    if (!e.is_edge) return {false, f[e.id]};
    auto [u, v] = g.edges[e.id];
    int idx = g.edge_index(f[u], f[v]);
    return {true, idx};
}

int attach_node(CapGraph& g, const Elem& e) {
    if (!e.is_edge) return e.id;
    auto [u, v] = g.edges[e.id];
    g = insert_node(g, u, v);
    return g.n - 1;
}

} // namespace

std::vector<Word> motif_words(const Motif& m) {
    std::vector<Word> out;
    if (m.is_chain || (m.graph.n == 2 && m.graph.m() == 1)) {
        Word w = make_chain_word();
        w.label = m.name;
        out.push_back(w);
        return out;
    }
    auto auts = automorphisms(m.graph);
    std::vector<Elem> elems;
    for (int v = 0; v < m.graph.n; ++v) elems.push_back({false, v});
    for (int e = 0; e < m.graph.m(); ++e) elems.push_back({true, e});
    std::set<std::pair<Elem, Elem>> seen;
    int serial = 0;
    for (const Elem& p : elems) {
        for (const Elem& q : elems) {
            if (p == q) continue;
            std::pair<Elem, Elem> key{p, q};
            if (seen.count(key)) continue;
            // mark the whole orbit of (p, q)
            for (const auto& f : auts) seen.insert({apply_aut(m.graph, f, p), apply_aut(m.graph, f, q)});
            Word w;
            ++serial;
            w.label = serial == 1 ? m.name : m.name + "." + std::to_string(serial);
            CapGraph g = m.graph;
            // Order matters for ids only; subdividing p's edge leaves q's edge
            // endpoints untouched (node ids are stable under insert_node).
            std::pair<int, int> q_ends{-1, -1};
            if (q.is_edge) q_ends = g.edges[q.id];
            w.in_node = attach_node(g, p);
            if (q.is_edge) {
                g = insert_node(g, q_ends.first, q_ends.second);
                w.out_node = g.n - 1;
            } else {
                w.out_node = q.id;
            }
            w.graph = std::move(g);
            out.push_back(std::move(w));
        }
    }
    return out;
}

Dictionary finalize_dictionary(std::vector<Word> words, const SolveOptions& opts) {
    // de-duplicate up to marked isomorphism, keep first
    std::vector<Word> uniq;
    for (auto& w : words) {
        bool dup = false;
        for (const auto& u : uniq)
            if (words_equivalent(u, w)) {
                dup = true;
                break;
            }
        if (!dup) uniq.push_back(std::move(w));
    }
    int root = -1;
    for (size_t i = 0; i < uniq.size(); ++i)
        if (is_chain_word(uniq[i])) root = (int)i;
    if (root < 0) throw std::invalid_argument("dictionary must contain the chain word");

    size_t k = uniq.size();
    std::vector<std::vector<char>> R(k, std::vector<char>(k, 0));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            R[i][j] = i == j ? 1 : (char)dict_edge_test(uniq[i], uniq[j], opts);
    auto strict = [&](size_t i, size_t j) { return R[i][j] && !R[j][i]; };
    std::vector<std::pair<int, int>> redges;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (!strict(i, j)) continue;
            bool interposed = false;
            for (size_t l = 0; l < k && !interposed; ++l)
                if (l != i && l != j && strict(i, l) && strict(l, j)) interposed = true;
            if (!interposed) redges.emplace_back((int)i, (int)j);
        }

    // deterministic topological order: among ready words pick the one with the
    // fewest nodes, then smallest label
    std::vector<int> indeg(k, 0);
    for (auto [a, b] : redges) ++indeg[b];
    std::vector<char> done(k, 0);
    std::vector<int> order;
    while (order.size() < k) {
        int best = -1;
        for (size_t i = 0; i < k; ++i) {
            if (done[i] || indeg[i] > 0) continue;
            if (best < 0 || uniq[i].num_nodes() < uniq[best].num_nodes() ||
                (uniq[i].num_nodes() == uniq[best].num_nodes() && uniq[i].label < uniq[best].label))
                best = (int)i;
        }
        if (best < 0) throw std::logic_error("dictionary relation is not acyclic");
        done[best] = 1;
        order.push_back(best);
        for (auto [a, b] : redges)
            if (a == best) --indeg[b];
    }
    if (order[0] != root) {
        // The chain context embeds into every word context, so the root is the
        // unique source; anything else indicates a broken relation.
        throw std::logic_error("dictionary root is not the chain word");
    }

    // renumber words so that id == rank
    std::vector<int> new_id(k);
    for (size_t r = 0; r < k; ++r) new_id[order[r]] = (int)r;
    Dictionary d;
    d.words.resize(k);
    for (size_t i = 0; i < k; ++i) d.words[new_id[i]] = std::move(uniq[i]);
    d.root = 0;
    for (auto [a, b] : redges) d.edges.emplace_back(new_id[a], new_id[b]);
    std::sort(d.edges.begin(), d.edges.end());
    d.children.assign(k, {});
    for (auto [a, b] : d.edges) d.children[a].push_back(b); // ascending = rank order
    d.rank.resize(k);
    d.by_rank.resize(k);
    for (size_t i = 0; i < k; ++i) {
        d.rank[i] = (int)i;
        d.by_rank[i] = (int)i;
    }
    return d;
}

Dictionary build_dictionary(const MotifSet& motifs, int max_word_nodes, const SolveOptions& opts,
                            size_t word_cap) {
    std::vector<Word> alphabet{make_chain_word()};
    for (const auto& m : motifs.motifs) {
        for (auto& w : motif_words(m)) {
            bool dup = false;
            for (const auto& u : alphabet)
                if (words_equivalent(u, w)) {
                    dup = true;
                    break;
                }
            if (!dup) alphabet.push_back(std::move(w));
        }
    }
    std::vector<Word> words = alphabet;
    // breadth-first composition of glued sequences within the node bound
    std::vector<std::vector<int>> queue;
    for (size_t i = 0; i < alphabet.size(); ++i) queue.push_back({(int)i});
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        std::vector<int> seq = queue[qi];
        for (size_t nxt = 0; nxt < alphabet.size(); ++nxt) {
            std::vector<int> ext = seq;
            ext.push_back((int)nxt);
            std::vector<Word> parts;
            for (int id : ext) parts.push_back(alphabet[id]);
            RealizedSeq r = realize_words(parts);
            if (r.graph.n > max_word_nodes) continue;
            Word w;
            for (int id : ext) w.label += (w.label.empty() ? "" : "+") + alphabet[id].label;
            w.graph = r.graph;
            w.in_node = r.in_node;
            w.out_node = r.out_node;
            bool dup = false;
            for (const auto& u : words)
                if (words_equivalent(u, w)) {
                    dup = true;
                    break;
                }
            if (!dup) {
                words.push_back(std::move(w));
                if (words.size() > word_cap)
                    throw std::length_error("dictionary word cap exceeded; lower max_word_nodes");
            }
            queue.push_back(std::move(ext));
        }
    }
    return finalize_dictionary(std::move(words), opts);
}

namespace {

Word clique_variant(int k, const std::string& kind) {
    Word w;
    w.label = "K" + std::to_string(k) + "[" + kind + "]";
    CapGraph g = make_clique(k);
    if (kind == "n,n") {
        w.in_node = 0;
        w.out_node = 1;
    } else if (kind == "n,e+") { // out on an edge incident to the in corner
        w.in_node = 0;
        g = insert_node(g, 0, 1);
        w.out_node = g.n - 1;
    } else if (kind == "n,e-") { // out on an edge avoiding the in corner
        w.in_node = 0;
        g = insert_node(g, 1, 2);
        w.out_node = g.n - 1;
    } else if (kind == "e+,n") {
        w.out_node = 0;
        g = insert_node(g, 0, 1);
        w.in_node = g.n - 1;
    } else if (kind == "e-,n") {
        w.out_node = 0;
        g = insert_node(g, 1, 2);
        w.in_node = g.n - 1;
    } else if (kind == "e,e+") { // two adjacent edges
        g = insert_node(g, 0, 1);
        w.in_node = g.n - 1;
        g = insert_node(g, 0, 2);
        w.out_node = g.n - 1;
    } else if (kind == "e,e-") { // two disjoint edges
        g = insert_node(g, 0, 1);
        w.in_node = g.n - 1;
        g = insert_node(g, 2, 3);
        w.out_node = g.n - 1;
    } else {
        throw std::invalid_argument("unknown clique variant " + kind);
    }
    w.graph = std::move(g);
    return w;
}

Word triangle_word() {
    Word w;
    w.label = "Y";
    w.graph = make_cycle(3);
    w.in_node = 0;
    w.out_node = 1;
    return w;
}

} // namespace

Dictionary make_tree_dictionary() { return finalize_dictionary({make_chain_word()}); }

Dictionary make_cactus_dictionary() {
    return finalize_dictionary({make_chain_word(), triangle_word()});
}

Dictionary make_clique_dictionary(int max_clique) {
    if (max_clique < 3) throw std::invalid_argument("clique dictionary needs max >= 3");
    std::vector<Word> words{make_chain_word(), triangle_word()};
    // Three attachment pairs per clique keep every out-degree (and with it the
    // depth-first discovery cost) bounded by a constant per rank.
    for (int k = 4; k <= max_clique; ++k)
        for (const char* kind : {"n,n", "n,e-", "e,e-"})
            words.push_back(clique_variant(k, kind));
    // Order the DAG at relay cost 1, the regime the clique attack runs in;
    // free-relay detours at tiny epsilon make the context tests on large
    // cliques intractable without changing any answer.
    SolveOptions opts;
    opts.epsilon = Rat(1);
    opts.budget = 1'000'000'000;
    return finalize_dictionary(std::move(words), opts);
}

Dictionary make_mixed_dictionary() {
    std::vector<Word> words{make_chain_word(), triangle_word()};
    {
        Word d;
        d.label = "D"; // diamond, attached at a degree-2 tip and a degree-3 hub
        CapGraph g;
        for (int i = 0; i < 4; ++i) g.add_node();
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(1, 2);
        g.add_edge(1, 3);
        g.add_edge(2, 3);
        d.graph = std::move(g);
        d.in_node = 0;
        d.out_node = 1;
        words.push_back(std::move(d));
    }
    {
        Word b;
        b.label = "B"; // K_{2,3}, attached at a degree-2 leg and a degree-3 hub
        CapGraph g;
        for (int i = 0; i < 5; ++i) g.add_node();
        for (int leg : {0, 2, 3})
            for (int hub : {1, 4}) g.add_edge(leg, hub);
        b.graph = std::move(g);
        b.in_node = 0;
        b.out_node = 1;
        words.push_back(std::move(b));
    }
    {
        Word k = clique_variant(5, "n,n");
        k.label = "K";
        words.push_back(std::move(k));
    }
    return finalize_dictionary(std::move(words));
}

long long dict_cost(const Dictionary& d, int word_id) {
    // longest root-to-word path weighted by out-degrees, both ends included;
    // word ids are rank-ordered, so a forward sweep is a valid DAG order
    size_t k = d.words.size();
    std::vector<long long> best(k, -1);
    best[d.root] = (long long)d.children[d.root].size();
    for (size_t w = 0; w < k; ++w) {
        if (best[w] < 0) continue;
        for (int c : d.children[w])
            best[c] = std::max(best[c], best[w] + (long long)d.children[c].size());
    }
    if (best[word_id] < 0) throw std::logic_error("word unreachable from dictionary root");
    return best[word_id];
}

Rat dict_delta(const Dictionary& d) {
    Rat delta(0);
    for (size_t w = 0; w < d.words.size(); ++w)
        delta = std::max(delta, Rat(dict_cost(d, (int)w), d.words[w].num_nodes()));
    return delta;
}

std::optional<RobustnessViolation> check_robustness(const Dictionary& d, int node_bound,
                                                    const SolveOptions& opts, size_t seq_cap) {
    size_t k = d.words.size();
    size_t budget = 0;
    for (size_t v = 0; v < k; ++v) {
        // reachable set of v (descendants including v)
        std::vector<char> reach(k, 0);
        std::vector<int> stack{(int)v};
        reach[v] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int c : d.children[x])
                if (!reach[c]) {
                    reach[c] = 1;
                    stack.push_back(c);
                }
        }
        std::vector<int> rbar;
        for (size_t w = 0; w < k; ++w)
            if (!reach[w]) rbar.push_back((int)w);
        if (rbar.empty()) continue;

        // does graph g (with attachments) realize some reachable word?
        auto realizes_reachable = [&](const std::vector<int>& seq, size_t from, size_t to) {
            std::vector<int> window(seq.begin() + from, seq.begin() + to + 1);
            RealizedSeq r = realize_sequence(d, window);
            Word ww;
            ww.graph = r.graph;
            ww.in_node = r.in_node;
            ww.out_node = r.out_node;
            for (size_t w = 0; w < k; ++w)
                if (reach[w] && words_equivalent(ww, d.words[w])) return true;
            return false;
        };

        std::vector<int> seq;
        std::function<std::optional<RobustnessViolation>(int, bool)> rec =
            [&](int nodes_so_far, bool excused) -> std::optional<RobustnessViolation> {
            for (int w : rbar) {
                int nodes = nodes_so_far + d.words[w].num_nodes() - 1;
                if (nodes > node_bound) continue;
                if (++budget > seq_cap) throw std::length_error("robustness sequence cap exceeded");
                seq.push_back(w);
                bool now_excused = excused;
                if (!now_excused)
                    for (size_t from = 0; from < seq.size() && !now_excused; ++from)
                        if (realizes_reachable(seq, from, seq.size() - 1)) now_excused = true;
                if (!now_excused) {
                    RealizedSeq r = realize_sequence(d, seq);
                    if (is_embeddable(d.words[v].graph, r.graph, opts) &&
                        !is_isomorphic(d.words[v].graph, r.graph))
                        return RobustnessViolation{(int)v, seq};
                }
                auto sub = rec(nodes, now_excused);
                if (sub) return sub;
                seq.pop_back();
            }
            return std::nullopt;
        };
        auto found = rec(1, false);
        if (found) return found;
    }
    return std::nullopt;
}

Dictionary dictionary_from_spec(const std::string& spec) {
    if (spec == "trees") return make_tree_dictionary();
    if (spec == "cactus") return make_cactus_dictionary();
    if (spec == "mixed") return make_mixed_dictionary();
    if (spec.rfind("cliques:", 0) == 0) return make_clique_dictionary(std::stoi(spec.substr(8)));
    return parse_dictionary_file(spec);
}

std::string write_dictionary(const Dictionary& d) {
    std::ostringstream out;
    for (size_t i = 0; i < d.words.size(); ++i) {
        const Word& w = d.words[i];
        out << "[word " << i << "]\n";
        out << "label=" << w.label << "\n";
        out << "nodes=" << w.graph.n << "\n";
        out << "in=" << w.in_node << "\n";
        out << "out=" << w.out_node << "\n";
        out << "edges=";
        for (size_t e = 0; e < w.graph.edges.size(); ++e) {
            if (e) out << " ";
            out << w.graph.edges[e].first << "-" << w.graph.edges[e].second;
        }
        out << "\n";
    }
    out << "[dag]\n";
    for (size_t w = 0; w < d.children.size(); ++w)
        for (size_t p = 0; p < d.children[w].size(); ++p)
            out << w << " " << p << " " << d.children[w][p] << "\n";
    return out.str();
}

Dictionary parse_dictionary(std::istream& in) {
    Dictionary d;
    std::string line;
    Word* cur = nullptr;
    bool in_dag = false;
    int lineno = 0;
    auto err = [&](const std::string& msg) {
        return std::invalid_argument("dictionary line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t'))
            line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '[') {
            if (line == "[dag]") {
                in_dag = true;
                cur = nullptr;
                continue;
            }
            std::istringstream ls(line);
            std::string word;
            int id;
            char open, close;
            if (!(ls >> open >> word >> id >> close) || word != "word" || open != '[' || close != ']')
                throw err("bad section header '" + line + "'");
            if (id != (int)d.words.size()) throw err("word ids must be sequential");
            d.words.emplace_back();
            d.words.back().graph = CapGraph{};
            cur = &d.words.back();
            continue;
        }
        if (in_dag) {
            std::istringstream ls(line);
            int from, port, to;
            if (!(ls >> from >> port >> to)) throw err("bad dag line");
            if (from < 0 || from >= (int)d.words.size() || to < 0 || to >= (int)d.words.size())
                throw err("dag edge references unknown word");
            if ((int)d.children.size() < (int)d.words.size()) d.children.resize(d.words.size());
            if (port != (int)d.children[from].size()) throw err("dag ports must be sequential per word");
            d.children[from].push_back(to);
            d.edges.emplace_back(from, to);
            continue;
        }
        if (!cur) throw err("content outside any section");
        auto eq = line.find('=');
        if (eq == std::string::npos) throw err("expected key=value");
        std::string key = line.substr(0, eq), val = line.substr(eq + 1);
        if (key == "label")
            cur->label = val;
        else if (key == "nodes") {
            int n = std::stoi(val);
            for (int i = 0; i < n; ++i) cur->graph.add_node();
        } else if (key == "in")
            cur->in_node = std::stoi(val);
        else if (key == "out")
            cur->out_node = std::stoi(val);
        else if (key == "edges") {
            std::istringstream es(val);
            std::string pair;
            while (es >> pair) {
                auto dash = pair.find('-');
                if (dash == std::string::npos) throw err("bad edge '" + pair + "'");
                cur->graph.add_edge(std::stoi(pair.substr(0, dash)), std::stoi(pair.substr(dash + 1)));
            }
        } else
            throw err("unknown key '" + key + "'");
    }
    if (d.words.empty()) throw std::invalid_argument("dictionary file has no words");
    d.children.resize(d.words.size());
    std::sort(d.edges.begin(), d.edges.end());
    d.root = 0;
    if (!is_chain_word(d.words[0]))
        throw std::invalid_argument("dictionary word 0 must be the chain");
    d.rank.resize(d.words.size());
    d.by_rank.resize(d.words.size());
    for (size_t i = 0; i < d.words.size(); ++i) {
        d.rank[i] = (int)i;
        d.by_rank[i] = (int)i;
        if (d.words[i].in_node < 0 || d.words[i].in_node >= d.words[i].graph.n ||
            d.words[i].out_node < 0 || d.words[i].out_node >= d.words[i].graph.n ||
            d.words[i].in_node == d.words[i].out_node)
            throw std::invalid_argument("word " + std::to_string(i) + " has bad attachment points");
        for (auto [a, b] : d.edges)
            if (b <= a) throw std::invalid_argument("dag edges must increase in rank");
    }
    return d;
}

Dictionary parse_dictionary_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_dictionary(in);
}

} // namespace vnx
