#include <doctest.h>

#include <algorithm>
#include <set>

#include "vnx/graph.hpp"
#include "vnx/isomorphism.hpp"
#include "vnx/motif.hpp"

using namespace vnx;

TEST_SUITE_BEGIN("motif");

static bool set_contains(const MotifSet& ms, const CapGraph& g) { return ms.contains(g); }

TEST_CASE("biconnected blocks") {
    // triangle with a pendant: one 3-edge block, one bridge
    CapGraph g = make_cycle(3);
    int p = g.add_node();
    g.add_edge(0, p);
    auto blocks = biconnected_blocks(g);
    std::vector<size_t> sizes;
    for (auto& b : blocks) sizes.push_back(b.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 3});
}

TEST_CASE("degree-2 contraction") {
    auto c6 = contract_degree2(make_cycle(6));
    CHECK(c6.graph.n == 3); // halts at the triangle, never builds parallel edges
    CHECK(c6.graph.m() == 3);
    CHECK(c6.survivors.size() == 3);

    auto path = contract_degree2(make_path(5));
    CHECK(path.graph.n == 0); // trees contract away completely

    auto k4 = contract_degree2(make_clique(4));
    CHECK(is_isomorphic(k4.graph, make_clique(4)));
}

TEST_CASE("extract_motifs on the standard families") {
    // trees: just the chain
    MotifSet tree = extract_motifs(make_random_tree(9, 4));
    CHECK(tree.motifs.size() == 1);
    CHECK(tree.motifs[0].is_chain);

    // cactus with a bridge and a cycle: chain + triangle
    MotifSet cactus = extract_motifs(make_random_cactus(12, 7));
    CHECK(cactus.motifs.size() == 2);
    CHECK(set_contains(cactus, make_path(2)));
    CHECK(set_contains(cactus, make_cycle(3)));

    // two K4 blocks at a cut node plus one pendant edge: {C, K4}
    CapGraph bg = merge_at(make_clique(4), 0, make_clique(4), 0);
    int p = bg.add_node();
    bg.add_edge(1, p);
    MotifSet blocks = extract_motifs(bg);
    CHECK(blocks.motifs.size() == 2);
    CHECK(set_contains(blocks, make_path(2)));
    CHECK(set_contains(blocks, make_clique(4)));

    // bowtie: two triangles at a cut node, no bridge => {Y} only
    CapGraph bow = merge_at(make_cycle(3), 0, make_cycle(3), 0);
    MotifSet bows = extract_motifs(bow);
    CHECK(bows.motifs.size() == 1);
    CHECK(!bows.motifs[0].is_chain);
    CHECK(is_isomorphic(bows.motifs[0].graph, make_cycle(3)));

    // chain motif appears iff the host has a bridge
    CHECK(!set_contains(bows, make_path(2)));
    CHECK(set_contains(extract_motifs(make_path(3)), make_path(2)));
}

TEST_CASE("every non-chain motif is contraction-minimal") {
    for (std::uint64_t s : {1, 2, 3}) {
        MotifSet ms = extract_motifs(make_random_block_graph(18, 5, s, true));
        for (const auto& m : ms.motifs) {
            if (m.is_chain) continue;
            auto again = contract_degree2(m.graph);
            CHECK(is_isomorphic(again.graph, m.graph));
            // minimum degree >= 3 or the triangle floor
            int mind = m.graph.n;
            for (int v = 0; v < m.graph.n; ++v) mind = std::min(mind, m.graph.degree(v));
            CHECK((mind >= 3 || is_isomorphic(m.graph, make_cycle(3))));
        }
    }
}

TEST_CASE("composition rules") {
    CapGraph p3 = insert_node(make_path(2), 0, 1);
    CHECK(is_isomorphic(p3, make_path(3)));

    CapGraph c4 = insert_node(make_cycle(3), 0, 1);
    CHECK(is_isomorphic(c4, make_cycle(4)));

    CapGraph p = make_path(2);
    for (int k = 0; k < 4; ++k) p = insert_node(p, p.edges[0].first, p.edges[0].second);
    CHECK(p.n == 6);
    CHECK(is_isomorphic(p, make_path(6)));

    CHECK_THROWS(insert_node(make_path(2), 0, 5));

    CHECK(is_isomorphic(merge_at(make_path(2), 1, make_path(2), 0), make_path(3)));
    CapGraph bow = merge_at(make_cycle(3), 0, make_cycle(3), 2);
    CHECK(bow.n == 5);
    CHECK(bow.m() == 6);
    CHECK_THROWS(merge_at(make_path(2), 3, make_path(2), 0));
}

TEST_CASE("compose_from_rules stays inside the motif closure") {
    MotifSet ms = extract_motifs(make_random_cactus(14, 5));
    for (std::uint64_t s : {1, 2, 9}) {
        Composed c = compose_from_rules(ms, 20, s);
        CHECK(c.graph.n >= 20);
        CHECK(c.graph.connected());
        CHECK(!c.derivation.empty());
        // re-extracting from the composed graph yields a subset of the rules
        MotifSet again = extract_motifs(c.graph);
        for (const auto& m : again.motifs) CHECK(set_contains(ms, m.graph));
    }
}

TEST_CASE("dissect examples") {
    DissectStats p5 = dissect(make_path(5));
    CHECK(p5.n == 5);
    CHECK(p5.tree_fringe == 5);
    CHECK(p5.contracted == 0);
    CHECK(p5.largest_motif == 0);

    DissectStats c6 = dissect(make_cycle(6));
    CHECK(c6.largest_motif == 3);
    CHECK(c6.contracted == 3);
    CHECK(c6.tree_fringe == 0);

    CapGraph tp = make_cycle(3);
    int p = tp.add_node();
    tp.add_edge(0, p);
    DissectStats t = dissect(tp);
    CHECK(t.largest_motif == 3);
    CHECK(t.tree_fringe == 1);
}

TEST_CASE("dissect always partitions n") {
    for (std::uint64_t s : {1, 2, 3, 4}) {
        for (const CapGraph& g :
             {make_random_cactus(17, s), make_random_block_graph(21, 5, s, true),
              make_random_tree(11, s)}) {
            DissectStats st = dissect(g);
            CHECK(st.n == g.n);
            CHECK(st.tree_fringe + st.contracted + st.largest_motif + st.other == g.n);
            CHECK((int)st.category.size() == g.n);
        }
    }
}

TEST_SUITE_END();
