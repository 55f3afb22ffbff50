#include <doctest.h>

#include <chrono>

#include "brush/cleaning.hpp"
#include "brush/error.hpp"
#include "brush/graph.hpp"
#include "brush/solver.hpp"
#include "oracles.hpp"

using namespace brush;

namespace {

Graph star(int leaves) {
    std::vector<Edge> e;
    for (int k = 1; k <= leaves; ++k) e.emplace_back(0, k);
    return Graph::from_edges(leaves + 1, e);
}

Graph plus_isolated(const Graph& g) {
    auto e = g.edges();
    return Graph::from_edges(g.vertex_count() + 1, e);
}

void check_witness(const Graph& g, const SolveResult& r) {
    REQUIRE(r.witness.is_complete());
    CHECK(brush_cost(g, orientation_from_sequence(g, r.witness)) == r.value);
    const auto w0 = minimal_config_for_sequence(g, r.witness);
    CHECK(w0.total() == r.value);
    CHECK_NOTHROW(simulate(g, w0, r.witness));
}

}  // namespace

TEST_CASE("dp known values") {
    CHECK(brush_number_dp(make_path(5)).value == 1);
    CHECK(brush_number_dp(make_clique(6)).value == 9);
    CHECK(brush_number_dp(make_cycle(5)).value == 2);
    CHECK(brush_number_dp(make_empty(4)).value == 0);
    CHECK(brush_number_dp(make_empty(0)).value == 0);
    CHECK(brush_number_dp(make_path(1)).value == 0);
}

TEST_CASE("dp witness is consistent and deterministic") {
    for (const auto& g : {make_torus(3, 4).graph, make_clique_path(4, 2).graph, make_random(10, 0.5, 9)}) {
        const auto a = brush_number_dp(g);
        const auto b = brush_number_dp(g);
        check_witness(g, a);
        CHECK(a.witness == b.witness);
        CHECK(a.complete);
        CHECK(a.lower_bound == a.value);
    }
}

TEST_CASE("dp caps") {
    CHECK_THROWS_AS(brush_number_dp(make_path(23)), TooLarge);
    DpOptions small;
    small.max_vertices = 5;
    CHECK_THROWS_AS(brush_number_dp(make_path(6), small), TooLarge);
    DpOptions tight;
    tight.memory_budget_bytes = 16;
    CHECK_THROWS_AS(brush_number_dp(make_path(10), tight), ResourceError);
}

TEST_CASE("optimal_sequences") {
    const auto g = make_cycle(4);
    const auto all = optimal_sequences(g, 1000);
    CHECK(all.front() == brush_number_dp(g).witness);
    for (const auto& s : all) {
        CHECK(brush_cost(g, orientation_from_sequence(g, s)) == 2);
    }
    // count the optimal orders directly
    std::vector<int> order{0, 1, 2, 3};
    std::size_t optimal = 0;
    do {
        optimal += oracle::order_cost(g, order) == 2;
    } while (std::next_permutation(order.begin(), order.end()));
    CHECK(all.size() == optimal);
    CHECK(optimal_sequences(g, 3).size() == 3);
}

TEST_CASE("branch and bound matches dp") {
    CHECK(brush_number_bnb(make_torus(3, 4).graph).value == 10);
    CHECK(brush_number_bnb(make_clique_path(4, 2).graph).value == 8);
    CHECK(brush_number_bnb(star(3)).value == 2);
    for (const auto& g : {make_torus(4, 4).graph, make_clique_path(3, 4).graph, make_clique(7),
                          make_random(14, 0.4, 2), make_random(16, 0.3, 5)}) {
        const auto r = brush_number_bnb(g);
        CHECK(r.complete);
        CHECK(r.value == brush_number_dp(g).value);
        CHECK(r.lower_bound == r.value);
        check_witness(g, r);
    }
}

TEST_CASE("branch and bound honours a hint and a timeout") {
    BnbOptions o;
    o.upper_hint = 12;
    const auto r = brush_number_bnb(make_torus(4, 4).graph, o);
    CHECK(r.value == 12);
    CHECK(r.complete);
    CHECK(r.witness.is_complete());

    BnbOptions rushed;
    rushed.timeout = std::chrono::milliseconds(0);
    const auto g = make_torus(6, 7).graph;
    const auto partial = brush_number_bnb(g, rushed);
    CHECK(partial.lower_bound <= partial.value);
    CHECK(partial.lower_bound <= 2 * (6 + 7 - 2));
    CHECK(partial.value >= 2 * (6 + 7 - 2));
    check_witness(g, partial);

    CHECK_THROWS_AS(brush_number_bnb(make_path(65)), TooLarge);
}

TEST_CASE("parity lower bound") {
    CHECK(parity_lower_bound(make_cycle(7)) == 0);
    CHECK(parity_lower_bound(make_path(5)) == 1);
    CHECK(parity_lower_bound(make_clique(4)) == 2);
    CHECK(parity_lower_bound(star(3)) == 2);
}

TEST_CASE("brute force") {
    CHECK(brute_force_permutations(make_cycle(3)).value == 2);
    CHECK(brute_force_permutations(make_path(4)).value == 1);
    CHECK(brute_force_permutations(make_clique(5)).value == 6);
    CHECK(brute_force_permutations(star(3)).value == 2);
    check_witness(make_clique(5), brute_force_permutations(make_clique(5)));
    CHECK_THROWS_AS(brute_force_permutations(make_path(10)), TooLarge);
}

TEST_CASE("isolated vertices do not change the value") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = make_random(8, 0.5, seed);
        CHECK(brush_number_dp(plus_isolated(g)).value == brush_number_dp(g).value);
    }
}

TEST_CASE("is_connected") {
    CHECK(is_connected(make_path(4)));
    CHECK(is_connected(make_path(1)));
    CHECK_FALSE(is_connected(make_empty(2)));
    CHECK(is_connected(make_empty(0)));
}

TEST_CASE("box check small cases") {
    auto r = check_box_conjecture(make_path(2), 3, "P2");
    CHECK(r.graphs_checked == 8);
    CHECK(r.path_value == 3);
    CHECK(r.clique_value == 5);
    CHECK(r.holds());
    CHECK(r.min.value == 3);
    CHECK(r.max.value == 5);

    // m = 2: P_2 = K_2 so the bounds coincide, but the edgeless G sits below them
    auto two = check_box_conjecture(make_cycle(3), 2, "C3");
    CHECK(two.path_value == two.clique_value);
    CHECK(two.path_value == 5);
    CHECK(two.min.value == 4);
    CHECK_FALSE(two.holds());
    CHECK(check_box_conjecture(make_cycle(3), 2, "C3", {}, BoxFilter::ConnectedOnly).holds());

    // edgeless G falls below b(P_3 x P_3)
    auto p3 = check_box_conjecture(make_path(3), 3, "P3");
    CHECK_FALSE(p3.holds());
    CHECK(p3.min.value == 3);
    CHECK(p3.min.edges.empty());
    auto conn = check_box_conjecture(make_path(3), 3, "P3", {}, BoxFilter::ConnectedOnly);
    CHECK(conn.holds());
    CHECK(conn.graphs_checked == 4);

    CHECK_THROWS_AS(check_box_conjecture(make_path(2), 6, "P2"), InvalidParameter);
    CHECK_THROWS_AS(check_box_conjecture(make_path(6), 5, "P6"), TooLarge);
}
