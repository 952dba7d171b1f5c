#include <doctest.h>

#include <fstream>
#include <sstream>

#include "vnx/dictionary.hpp"
#include "vnx/graph.hpp"
#include "vnx/isomorphism.hpp"
#include "vnx/motif.hpp"

using namespace vnx;

TEST_SUITE_BEGIN("dictionary");

TEST_CASE("chain word and realization") {
    Word c = make_chain_word();
    CHECK(c.graph.n == 2);
    CHECK(c.graph.m() == 1);

    Dictionary d = make_tree_dictionary();
    CHECK(d.words.size() == 1);
    CHECK(d.edges.empty());
    CHECK(d.root == 0);

    RealizedSeq seq = realize_sequence(d, {0, 0, 0});
    CHECK(is_isomorphic(seq.graph, make_path(4)));
    CHECK(seq.in_node == 0);
}

TEST_CASE("context embeddability drives the DAG") {
    Word c = make_chain_word();
    Word y;
    y.label = "Y";
    y.graph = make_cycle(3);
    y.in_node = 0;
    y.out_node = 1;
    CHECK(dict_edge_test(c, y));
    CHECK(!dict_edge_test(y, c));
    CHECK(dict_edge_test(y, y)); // reflexive
}

TEST_CASE("cactus dictionary: single edge C->Y, delta = 1/2") {
    Dictionary d = make_cactus_dictionary();
    CHECK(d.words.size() == 2);
    REQUIRE(d.edges.size() == 1);
    CHECK(d.words[d.edges[0].first].label == "C");
    CHECK(d.words[d.edges[0].second].label == "Y");
    CHECK(dict_cost(d, d.find_label("C")) == 1);  // out-degree 1 on the only path
    CHECK(dict_cost(d, d.find_label("Y")) == 1);  // 1 + 0
    CHECK(dict_delta(d) == Rat(1, 2));            // max(1/2, 1/3)
}

TEST_CASE("mixed dictionary DAG is the chain C->Y->D->B->K") {
    Dictionary d = dictionary_from_spec("mixed");
    REQUIRE(d.words.size() == 5);
    auto has_edge = [&](const char* a, const char* b) {
        int ia = d.find_label(a), ib = d.find_label(b);
        for (auto& [f, t] : d.edges)
            if (f == ia && t == ib) return true;
        return false;
    };
    CHECK(d.edges.size() == 4);
    CHECK(has_edge("C", "Y"));
    CHECK(has_edge("Y", "D"));
    CHECK(has_edge("D", "B"));
    CHECK(has_edge("B", "K"));
}

TEST_CASE("rank respects edges and starts at the root") {
    for (const Dictionary& d :
         {make_cactus_dictionary(), dictionary_from_spec("mixed"), make_clique_dictionary(5)}) {
        CHECK(d.rank[d.root] == 0);
        CHECK(d.by_rank[0] == d.root);
        for (auto& [f, t] : d.edges) CHECK(d.rank[f] < d.rank[t]);
        // stored edges are re-checkable and transitively reduced
        for (auto& [f, t] : d.edges) {
            CHECK(dict_edge_test(d.words[f], d.words[t]));
            for (size_t w = 0; w < d.words.size(); ++w) {
                if ((int)w == f || (int)w == t) continue;
                bool f_w = false, w_t = false;
                for (auto& [a, b] : d.edges) {
                    if (a == f && b == (int)w) f_w = true;
                    if (a == (int)w && b == t) w_t = true;
                }
                CHECK(!(f_w && w_t));
            }
        }
    }
}

TEST_CASE("build_dictionary from motif sets") {
    MotifSet trees;
    Motif c;
    c.name = "C";
    c.graph = make_path(2);
    c.is_chain = true;
    trees.motifs.push_back(c);
    // the generic builder also composes pure chain sequences C, CC, ... C^5
    Dictionary d1 = build_dictionary(trees, 6);
    CHECK(d1.words.size() == 5);
    for (auto& w : d1.words) CHECK(w.graph.m() == w.graph.n - 1);

    Motif y;
    y.name = "Y";
    y.graph = make_cycle(3);
    trees.motifs.push_back(y);
    Dictionary d2 = build_dictionary(trees, 3);
    CHECK(d2.words.size() >= 2); // C and the triangle word at least
    CHECK(d2.find_label("C") == d2.root);
    // the triangle word is reachable from the root
    int tri = -1;
    for (size_t i = 0; i < d2.words.size(); ++i)
        if (d2.words[i].graph.n == 3 && d2.words[i].graph.m() == 3) tri = (int)i;
    REQUIRE(tri >= 0);
    std::vector<char> reach(d2.words.size(), 0);
    reach[d2.root] = 1;
    for (int w : d2.by_rank)
        if (reach[w])
            for (int ch : d2.children[w]) reach[ch] = 1;
    CHECK(reach[tri]);

    Dictionary d3 = build_dictionary(trees, 5);
    CHECK(d3.words.size() > d2.words.size()); // composites appear under bound 5
    CHECK_THROWS_AS(build_dictionary(trees, 9, {}, 4), std::length_error);
}

TEST_CASE("attachment pair enumeration up to automorphism") {
    Motif y;
    y.name = "Y";
    y.graph = make_cycle(3);
    // Enumeration is per attachment-pair orbit; some orbits still realize
    // equivalent marked graphs (a node-edge pair and its mirror both realize a
    // 4-cycle), so the distinct classes are: corner pair, adjacent 4-cycle
    // pair, opposite 4-cycle pair, edge-edge pair.
    auto words = motif_words(y);
    std::vector<Word> classes;
    for (auto& w : words) {
        bool dup = false;
        for (auto& u : classes) dup |= words_equivalent(u, w);
        if (!dup) classes.push_back(w);
    }
    CHECK(words.size() == 6);
    CHECK(classes.size() == 4);

    Motif chain;
    chain.name = "C";
    chain.graph = make_path(2);
    chain.is_chain = true;
    CHECK(motif_words(chain).size() == 1);
}

TEST_CASE("clique dictionary cost growth stays linear") {
    for (int k : {5, 6, 7, 8}) {
        Dictionary d = make_clique_dictionary(k);
        for (size_t i = 0; i < d.words.size(); ++i) {
            int rank = d.rank[i];
            CHECK(dict_cost(d, (int)i) < 3 * (rank + 2));
        }
        CHECK(dict_delta(d) <= Rat(3));
    }
}

TEST_CASE("serialization round trip") {
    for (const std::string spec : {"cactus", "mixed", "cliques:5"}) {
        Dictionary d = dictionary_from_spec(spec);
        std::string text = write_dictionary(d);
        std::istringstream in(text);
        Dictionary back = parse_dictionary(in);
        REQUIRE(back.words.size() == d.words.size());
        CHECK(back.edges == d.edges);
        CHECK(back.rank == d.rank);
        CHECK(back.children == d.children);
        for (size_t i = 0; i < d.words.size(); ++i) {
            CHECK(back.words[i].label == d.words[i].label);
            CHECK(words_equivalent(back.words[i], d.words[i]));
        }
        CHECK(write_dictionary(back) == text);
    }
}

TEST_CASE("robustness of the curated dictionaries") {
    CHECK(!check_robustness(make_tree_dictionary(), 9).has_value());
    CHECK(!check_robustness(make_cactus_dictionary(), 9).has_value());
}

TEST_CASE("robustness flags a missing composed word") {
    Word c = make_chain_word();
    Word y;
    y.label = "Y";
    y.graph = make_cycle(3);
    y.in_node = 0;
    y.out_node = 1;
    Word q; // the 4-cycle: does not embed into one triangle, but into two
    q.label = "Q";
    q.graph = make_cycle(4);
    q.in_node = 0;
    q.out_node = 1;

    Dictionary broken = finalize_dictionary({c, y, q});
    auto v = check_robustness(broken, 5);
    REQUIRE(v.has_value());
    CHECK(broken.words[v->word_id].label == "Q");
    REQUIRE(v->sequence.size() == 2);
    CHECK(broken.words[v->sequence[0]].label == "Y");
    CHECK(broken.words[v->sequence[1]].label == "Y");

    Word yy; // the composed word: two triangles glued in sequence
    yy.label = "YY";
    yy.graph = merge_at(make_cycle(3), 1, make_cycle(3), 0);
    yy.in_node = 0;
    yy.out_node = 3;
    Dictionary fixed = finalize_dictionary({c, y, q, yy});
    CHECK(!check_robustness(fixed, 5).has_value());
}

TEST_SUITE_END();
