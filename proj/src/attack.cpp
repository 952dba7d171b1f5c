#include "vnx/attack.hpp"

#include <algorithm>
#include <set>

namespace vnx {

int AttackResult::requests(Phase p) const {
    int c = 0;
    for (const auto& e : log)
        if (e.phase == p) ++c;
    return c;
}

namespace {

class DictRunner {
public:
    DictRunner(QueryOracle& oracle, const Dictionary& d, const AttackOptions& opts)
        : oracle_(oracle), d_(d), opts_(opts) {}

    AttackResult run() {
        hp_ = make_single_node();
        frontier_.insert(0);
        while (!frontier_.empty()) {
            int v = *frontier_.begin();
            std::vector<int> seq = find_motif_sequence(v, {}, {});
            if (seq.empty()) {
                frontier_.erase(v);
                continue;
            }
            SeqRecord rec;
            rec.at_node = v;
            for (int id : seq) rec.labels.push_back(d_.words[id].label);
            res_.sequence_tree.push_back(std::move(rec));
            Glued g = glue(hp_, v, seq);
            for (int nn : g.new_nodes) frontier_.insert(nn);
            for (auto [a, b] : g.new_edges) expand_edge(a, b);
        }
        if (opts_.confirm_termination) {
            bool full = ask(hp_, Phase::termination);
            CapGraph pend = hp_;
            int x = pend.add_node();
            pend.add_edge(0, x);
            bool extra = ask(pend, Phase::termination);
            res_.termination_anomaly = !full || extra;
        }
        res_.h_prime = hp_;
        return std::move(res_);
    }

private:
    QueryOracle& oracle_;
    const Dictionary& d_;
    AttackOptions opts_;
    CapGraph hp_;
    std::set<int> frontier_;
    AttackResult res_;

    bool ask(const CapGraph& g, Phase ph) {
        bool reply = oracle_.query(g, ph);
        res_.log.push_back({(int)res_.log.size(), ph, g.n, g.m(), reply});
        return reply;
    }

    struct Glued {
        std::vector<int> new_nodes;
        std::vector<std::pair<int, int>> new_edges;
    };

    // Glues the word sequence at node v of g, appending fresh node ids.
    Glued glue(CapGraph& g, int v, const std::vector<int>& seq) const {
        Glued out;
        int cur = v;
        for (int id : seq) {
            const Word& w = d_.words[id];
            std::vector<int> remap(w.graph.n, -1);
            remap[w.in_node] = cur;
            for (int i = 0; i < w.graph.n; ++i)
                if (i != w.in_node) {
                    remap[i] = g.add_node();
                    out.new_nodes.push_back(remap[i]);
                }
            for (auto [a, b] : w.graph.edges) {
                g.add_edge(remap[a], remap[b]);
                out.new_edges.emplace_back(std::min(remap[a], remap[b]),
                                           std::max(remap[a], remap[b]));
            }
            cur = remap[w.out_node];
        }
        return out;
    }

    CapGraph candidate(int v, const std::vector<int>& seq) const {
        CapGraph g = hp_;
        glue(g, v, seq);
        return g;
    }

    static std::vector<int> concat(std::initializer_list<std::vector<int>> parts) {
        std::vector<int> out;
        for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
        return out;
    }

    // Tries the four before/after-chain combinations in decreasing preference;
    // on success reports which one fit.
    bool fits(int v, const std::vector<int>& tl, const std::vector<int>& tr, int word, int reps,
              std::pair<bool, bool>* combo_out) {
        static const std::pair<bool, bool> combos[] = {
            {true, true}, {true, false}, {false, true}, {false, false}};
        std::vector<int> rep((size_t)reps, word);
        Phase ph = reps >= 2 ? Phase::repetition : Phase::motif_search;
        for (auto [bf, af] : combos) {
            std::vector<int> seq = concat({tl, bf ? std::vector<int>{d_.root} : std::vector<int>{},
                                           rep, af ? std::vector<int>{d_.root} : std::vector<int>{},
                                           tr});
            if (ask(candidate(v, seq), ph)) {
                if (combo_out) *combo_out = {bf, af};
                return true;
            }
        }
        return false;
    }

    // The maximal word sequence attachable at v between the committed-context
    // sequences tl (before the gap) and tr (after it). Empty when not even a
    // single chain fits.
    std::vector<int> find_motif_sequence(int v, const std::vector<int>& tl,
                                         const std::vector<int>& tr) {
        // probe: does a single chain fit in the gap?
        if (!ask(candidate(v, concat({tl, {d_.root}, tr})), Phase::motif_search)) return {};

        // descent: walk the DAG downward while some child fits in the gap
        int cur = d_.root;
        std::pair<bool, bool> combo{false, false};
        bool progressed = true;
        while (progressed) {
            progressed = false;
            for (int c : d_.children[cur]) {
                std::pair<bool, bool> cb;
                if (fits(v, tl, tr, c, 1, &cb)) {
                    cur = c;
                    combo = cb;
                    progressed = true;
                    break;
                }
            }
        }

        // repetition: maximize the number of consecutive copies
        int j = 1;
        if (cur == d_.root) {
            // chains around a chain block are just more chain copies, so the
            // combos collapse into the repetition count
            while (fits_plain(v, tl, tr, cur, j + 1)) ++j;
            combo = {false, false};
        } else {
            std::pair<bool, bool> cb;
            while (fits(v, tl, tr, cur, j + 1, &cb)) {
                ++j;
                combo = cb;
            }
        }

        std::vector<int> rep((size_t)j, cur);
        std::vector<int> before, after;
        if (combo.first)
            before = find_motif_sequence(
                v, tl,
                concat({rep, combo.second ? std::vector<int>{d_.root} : std::vector<int>{}, tr}));
        if (combo.second) after = find_motif_sequence(v, concat({tl, before, rep}), tr);
        return concat({before, rep, after});
    }

    bool fits_plain(int v, const std::vector<int>& tl, const std::vector<int>& tr, int word,
                    int reps) {
        std::vector<int> rep((size_t)reps, word);
        Phase ph = reps >= 2 ? Phase::repetition : Phase::motif_search;
        return ask(candidate(v, concat({tl, rep, tr})), ph);
    }

    // Replaces the committed edge (a, b) by the longest chain the oracle still
    // accepts; j failed+1 requests for a final chain of j interior nodes.
    void expand_edge(int a, int b) {
        int j = 0;
        while (ask(subdivided(hp_, a, b, j + 1), Phase::edge_expansion)) ++j;
        if (j > 0) {
            int before = hp_.n;
            hp_ = subdivided(hp_, a, b, j);
            for (int x = before; x < hp_.n; ++x) frontier_.insert(x);
        }
    }

    static CapGraph subdivided(const CapGraph& g, int a, int b, int interior) {
        int e = g.edge_index(a, b);
        CapGraph h;
        for (int i = 0; i < g.n; ++i) h.add_node(g.node_cap[i], g.node_demand[i]);
        for (size_t i = 0; i < g.edges.size(); ++i) {
            if ((int)i == e) continue;
            h.add_edge(g.edges[i].first, g.edges[i].second, g.edge_cap[i], g.edge_demand[i]);
        }
        int prev = a;
        for (int k = 0; k < interior; ++k) {
            int x = h.add_node();
            h.add_edge(prev, x);
            prev = x;
        }
        h.add_edge(prev, b);
        return h;
    }
};

} // namespace

AttackResult run_dict(QueryOracle& oracle, const Dictionary& dict, const AttackOptions& opts) {
    DictRunner r(oracle, dict, opts);
    return r.run();
}

EstimateResult estimate_n(QueryOracle& oracle, int upper_bound) {
    EstimateResult res;
    auto edgeless = [](int k) {
        CapGraph g;
        for (int i = 0; i < k; ++i) g.add_node();
        return g;
    };
    auto embeds = [&](int k) {
        ++res.requests;
        return oracle.query(edgeless(k), Phase::motif_search);
    };
    // exponential probe, then binary search in (lo, hi)
    int lo = 1, hi = 2;
    if (!embeds(1)) throw std::runtime_error("estimate_n: even one node does not embed");
    while (hi <= upper_bound && embeds(hi)) {
        lo = hi;
        hi *= 2;
    }
    if (hi > upper_bound) throw std::runtime_error("estimate_n: upper bound exceeded");
    // invariant: lo embeds, hi does not
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        if (embeds(mid))
            lo = mid;
        else
            hi = mid;
    }
    res.n = lo;
    return res;
}

double coverage_report(const AttackResult& r, const CapGraph& host) {
    if (host.n == 0) return 1.0;
    return (double)r.h_prime.n / (double)host.n;
}

} // namespace vnx
