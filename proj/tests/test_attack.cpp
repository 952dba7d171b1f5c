#include <doctest.h>

#include "vnx/attack.hpp"
#include "vnx/dictionary.hpp"
#include "vnx/graph.hpp"
#include "vnx/isomorphism.hpp"
#include "vnx/motif.hpp"

using namespace vnx;

namespace {

AttackResult attack_host(const CapGraph& host, const Dictionary& dict,
                         SolveOptions opts = {}, AttackOptions aopts = {}) {
    Oracle oracle(host, opts);
    return run_dict(oracle, dict, aopts);
}

} // namespace

TEST_SUITE_BEGIN("attack");

TEST_CASE("single-node host") {
    Dictionary d = make_tree_dictionary();

    AttackOptions no_confirm;
    no_confirm.confirm_termination = false;
    AttackResult r = attack_host(make_single_node(), d, {}, no_confirm);
    CHECK(r.h_prime.n == 1);
    CHECK(r.requests_total() == 1); // one motif probe, answered no

    AttackResult rc = attack_host(make_single_node(), d);
    CHECK(rc.h_prime.n == 1);
    CHECK(rc.requests_total() == 3); // plus yes/no termination confirmation
    CHECK(!rc.termination_anomaly);
    CHECK(rc.log.back().phase == Phase::termination);
}

TEST_CASE("path host, tree dictionary") {
    CapGraph host = make_path(5);
    AttackResult r = attack_host(host, make_tree_dictionary());
    CHECK(is_isomorphic(r.h_prime, host));
    CHECK(!r.termination_anomaly);
    CHECK(r.requests_total() == 16);
    CHECK(coverage_report(r, host) == doctest::Approx(1.0));
    // every request is logged with a consistent phase split
    int by_phase = r.requests(Phase::motif_search) + r.requests(Phase::repetition) +
                   r.requests(Phase::edge_expansion) + r.requests(Phase::termination);
    CHECK(by_phase == r.requests_total());
    for (int i = 0; i < (int)r.log.size(); ++i) CHECK(r.log[i].idx == i);
}

TEST_CASE("cycle host, cactus dictionary: expansion stretches the triangle") {
    CapGraph host = make_cycle(6);
    AttackResult r = attack_host(host, make_cactus_dictionary());
    CHECK(is_isomorphic(r.h_prime, host));
    CHECK(r.requests_total() == 23);
    CHECK(r.requests(Phase::edge_expansion) == 6); // three extra nodes found
    REQUIRE(r.sequence_tree.size() >= 1);
    CHECK(r.sequence_tree[0].labels == std::vector<std::string>{"Y"});
}

TEST_CASE("triangle with a pendant: sequence record reads C Y") {
    CapGraph host = make_cycle(3);
    int p = host.add_node();
    host.add_edge(0, p);
    AttackResult r = attack_host(host, make_cactus_dictionary());
    CHECK(is_isomorphic(r.h_prime, host));
    CHECK(r.requests_total() == 23);
    REQUIRE(!r.sequence_tree.empty());
    CHECK(r.sequence_tree[0].at_node == 0);
    CHECK(r.sequence_tree[0].labels == std::vector<std::string>{"C", "Y"});
}

TEST_CASE("two triangles at a shared node need repetition queries") {
    CapGraph host = merge_at(make_cycle(3), 0, make_cycle(3), 0); // bowtie
    AttackResult r = attack_host(host, make_cactus_dictionary());
    CHECK(is_isomorphic(r.h_prime, host));
    CHECK(r.requests(Phase::repetition) > 0);
    int ys = 0;
    for (auto& rec : r.sequence_tree)
        for (auto& l : rec.labels) ys += l == "Y";
    CHECK(ys == 2);
}

TEST_CASE("node count estimation") {
    auto probe = [](const CapGraph& host) {
        Oracle o(host);
        EstimateResult e = estimate_n(o);
        CHECK(e.requests == o.query_count());
        return e;
    };
    EstimateResult e1 = probe(make_single_node());
    CHECK(e1.n == 1);
    CHECK(e1.requests == 2);
    EstimateResult e5 = probe(make_path(5));
    CHECK(e5.n == 5);
    CHECK(e5.requests == 6);
    EstimateResult e8 = probe(make_path(8));
    CHECK(e8.n == 8);
    CHECK(e8.requests == 8);
    // doubling + binary search: logarithmic, not linear
    for (int n : {2, 3, 7, 12, 16, 33}) {
        EstimateResult e = probe(make_random_tree(n, 1));
        CHECK(e.n == n);
        CHECK(e.requests <= 16);
    }
}

TEST_CASE("attacker is oracle-blind: replaying answers reproduces the run") {
    CapGraph host = make_random_cactus(12, 3);
    SolveOptions opts;
    opts.epsilon = Rat(1);
    Oracle honest(host, opts);
    Dictionary d = make_cactus_dictionary();
    AttackResult r1 = run_dict(honest, d);

    std::vector<bool> replies;
    for (auto& e : honest.log()) replies.push_back(e.reply);
    ReplayOracle replay(replies);
    AttackResult r2 = run_dict(replay, d);

    CHECK(replay.consumed() == replies.size());
    CHECK(r2.requests_total() == r1.requests_total());
    CHECK(write_edge_list(r2.h_prime) == write_edge_list(r1.h_prime));
    REQUIRE(r2.sequence_tree.size() == r1.sequence_tree.size());
    for (size_t i = 0; i < r1.sequence_tree.size(); ++i) {
        CHECK(r2.sequence_tree[i].at_node == r1.sequence_tree[i].at_node);
        CHECK(r2.sequence_tree[i].labels == r1.sequence_tree[i].labels);
    }
    for (size_t i = 0; i < r1.log.size(); ++i) {
        CHECK(r2.log[i].phase == r1.log[i].phase);
        CHECK(r2.log[i].guest_nodes == r1.log[i].guest_nodes);
        CHECK(r2.log[i].guest_edges == r1.log[i].guest_edges);
    }
}

TEST_CASE("reconstruction always embeds into the host") {
    SolveOptions opts;
    opts.epsilon = Rat(1);
    for (std::uint64_t s : {1, 2, 3}) {
        CapGraph host = make_random_cactus(14, s);
        AttackResult r = attack_host(host, make_cactus_dictionary(), opts);
        CHECK(is_embeddable(r.h_prime, host, opts));
        CHECK(is_isomorphic(r.h_prime, host));
        CHECK(coverage_report(r, host) == doctest::Approx(1.0));
    }
}

TEST_CASE("coverage_report measures the node deficit") {
    CapGraph host = make_path(10);
    AttackResult full = attack_host(host, make_tree_dictionary());
    CHECK(coverage_report(full, host) == doctest::Approx(1.0));

    AttackResult half = full;
    half.h_prime = make_path(5);
    CHECK(coverage_report(half, host) == doctest::Approx(0.5));
}

TEST_SUITE_END();
