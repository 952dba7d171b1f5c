#include <doctest.h>

#include "brute_force.hpp"
#include "vnx/embedding.hpp"
#include "vnx/graph.hpp"

using namespace vnx;

TEST_SUITE_BEGIN("embedding");

static Embedding identity_witness(const CapGraph& g) {
    Embedding e;
    e.node_map.resize(g.n);
    for (int v = 0; v < g.n; ++v) e.node_map[v] = v;
    e.edge_paths.resize(g.m());
    for (int i = 0; i < g.m(); ++i)
        e.edge_paths[i] = {g.edges[i].first, g.edges[i].second};
    return e;
}

TEST_CASE("validator accepts the identity witness") {
    for (const auto& g : {make_cycle(5), make_clique(4), make_path(3)}) {
        auto rep = validate_embedding(identity_witness(g), g, g, Rat(1, 100));
        CHECK(rep.ok);
    }
}

TEST_CASE("validator flags each condition") {
    CapGraph guest = make_path(2), host = make_path(3);

    SUBCASE("node map: unmapped node") {
        Embedding e = identity_witness(guest);
        e.node_map[1] = 1;
        e.edge_paths[0] = {0, 1};
        CHECK(validate_embedding(e, guest, host, Rat(1, 100)).ok);
        e.node_map[1] = -1;
        CHECK_THROWS_AS(validate_embedding(e, guest, host, Rat(1, 100)), std::invalid_argument);
    }

    SUBCASE("edge path must connect the images") {
        Embedding e;
        e.node_map = {0, 2};
        e.edge_paths = {{0, 1}}; // stops short of node 2
        auto rep = validate_embedding(e, guest, host, Rat(1, 100));
        CHECK(!rep.ok);
        CHECK(rep.condition == 2);
    }

    SUBCASE("empty path only when co-mapped") {
        Embedding e;
        e.node_map = {0, 2};
        e.edge_paths = {{}};
        auto rep = validate_embedding(e, guest, host, Rat(1, 100));
        CHECK(!rep.ok);
        CHECK(rep.condition == 2);
    }

    SUBCASE("node capacity: two guests on one host node") {
        CapGraph g2;
        g2.add_node();
        g2.add_node();
        Embedding e;
        e.node_map = {1, 1};
        auto rep = validate_embedding(e, g2, host, Rat(1, 100));
        CHECK(!rep.ok);
        CHECK(rep.condition == 3);
    }

    SUBCASE("node capacity: relays exceed the residual") {
        // guest triangle on the star's leaves relays all three edges through
        // the hub: relay load 3*epsilon, fine at 1/100, overload at 1/2.
        // Spoke capacity 2 because each spoke carries two of the paths.
        CapGraph tri = make_cycle(3);
        CapGraph hub = make_star(3); // host star: hub 0, leaves 1,2,3
        for (auto& c : hub.edge_cap) c = Rat(2);
        Embedding e;
        e.node_map = {1, 2, 3};
        e.edge_paths = {{1, 0, 2}, {2, 0, 3}, {1, 0, 3}};
        CHECK(validate_embedding(e, tri, hub, Rat(1, 100)).ok);
        auto rep = validate_embedding(e, tri, hub, Rat(1, 2));
        CHECK(!rep.ok);
        CHECK(rep.condition == 3);
    }

    SUBCASE("path must be simple") {
        CapGraph g = make_path(2);
        CapGraph h = make_path(3);
        Embedding e;
        e.node_map = {0, 1};
        e.edge_paths = {{0, 1, 2, 1}};
        auto rep = validate_embedding(e, g, h, Rat(1, 100));
        CHECK(!rep.ok);
        CHECK(rep.condition == 2);
    }

    SUBCASE("edge capacity: two unit demands over one host edge") {
        CapGraph g; // two disjoint guest edges
        for (int i = 0; i < 4; ++i) g.add_node();
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        CapGraph h; // one host edge, node caps 2 so only the edge overloads
        h.add_node(Rat(2));
        h.add_node(Rat(2));
        h.add_edge(0, 1);
        Embedding e;
        e.node_map = {0, 1, 0, 1};
        e.edge_paths = {{0, 1}, {0, 1}};
        auto rep = validate_embedding(e, g, h, Rat(1, 100));
        CHECK(!rep.ok);
        CHECK(rep.condition == 4);
    }
}

TEST_CASE("solver examples") {
    SolveOptions opts;
    CHECK(is_embeddable(make_path(2), make_cycle(3), opts));
    CHECK(is_embeddable(make_cycle(3), make_cycle(3), opts));
    CHECK(!is_embeddable(make_clique(5), make_cycle(5), opts));
    CHECK(!is_embeddable(make_cycle(3), make_path(3), opts));

    auto e = find_embedding(make_path(2), make_path(3), opts);
    REQUIRE(e.has_value());
    CHECK(validate_embedding(*e, make_path(2), make_path(3), opts.epsilon).ok);

    CHECK(!find_embedding(make_path(4), make_path(3), opts).has_value());
}

TEST_CASE("relay cost is charged exactly") {
    // guest triangle into a host star (spoke capacity 2) needs three relays
    // through the hub, so it fits iff 3*epsilon <= the hub capacity
    CapGraph tri = make_cycle(3);
    CapGraph hub = make_star(3);
    for (auto& c : hub.edge_cap) c = Rat(2);
    SolveOptions lo, hi;
    lo.epsilon = Rat(1, 3);
    hi.epsilon = Rat(1, 2);
    CHECK(is_embeddable(tri, hub, lo));
    CHECK(!is_embeddable(tri, hub, hi));
}

TEST_CASE("witnesses found are always valid") {
    SolveOptions opts;
    auto corpus = bf::connected_graphs(4);
    CapGraph host = make_random_cactus(8, 3);
    for (const auto& g : corpus) {
        auto e = find_embedding(g, host, opts);
        CHECK(is_embeddable(g, host, opts) == e.has_value());
        if (e) CHECK(validate_embedding(*e, g, host, opts.epsilon).ok);
    }
}

TEST_CASE("budget exhaustion is an error, not a no") {
    SolveOptions opts;
    opts.budget = 3;
    CHECK_THROWS_AS(is_embeddable(make_clique(4), make_random_block_graph(20, 5, 1), opts),
                    BudgetError);
}

TEST_CASE("non-unit demands") {
    CapGraph g = make_path(2);
    g.node_demand[0] = Rat(2);
    CapGraph h = make_path(2);
    CHECK(!is_embeddable(g, h));
    h.node_cap[0] = Rat(2);
    h.node_cap[1] = Rat(2);
    CHECK(is_embeddable(g, h));
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("oracle");

TEST_CASE("honest replies, counting and purity") {
    Oracle o(make_path(5));
    CHECK(o.query(make_path(2), Phase::motif_search));
    CHECK(o.query_count() == 1);
    CHECK(o.query(make_path(2), Phase::motif_search));
    CHECK(o.query_count() == 2);
    CHECK(o.log()[0].reply == o.log()[1].reply);
    CHECK(!o.query(make_cycle(3), Phase::repetition));
    CHECK(o.log().back().phase == Phase::repetition);
    CHECK(o.log().back().guest_nodes == 3);
    CHECK(o.log().back().guest_edges == 3);
}

TEST_CASE("guest larger than host is rejected") {
    Oracle o(make_single_node());
    CHECK(!o.query(make_path(2), Phase::motif_search));
}

TEST_CASE("replay oracle replays and throws when drained") {
    ReplayOracle r({true, false});
    CHECK(r.query(make_path(2), Phase::motif_search));
    CHECK(!r.query(make_path(2), Phase::motif_search));
    CHECK_THROWS(r.query(make_path(2), Phase::motif_search));
}

TEST_CASE("phase names") {
    CHECK(std::string(phase_name(Phase::motif_search)) == "motif_search");
    CHECK(std::string(phase_name(Phase::repetition)) == "repetition");
    CHECK(std::string(phase_name(Phase::edge_expansion)) == "edge_expansion");
    CHECK(std::string(phase_name(Phase::termination)) == "termination");
}

TEST_SUITE_END();
