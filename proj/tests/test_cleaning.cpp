#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>

#include "brush/cleaning.hpp"
#include "brush/constructions.hpp"
#include "brush/error.hpp"
#include "brush/graph.hpp"

using namespace brush;

namespace {

CleaningSequence seq_of(int n, std::vector<Vertex> order) {
    return CleaningSequence(n, std::move(order));
}

CleaningSequence identity(int n) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    return seq_of(n, order);
}

bool same_arcs(Orientation o, std::vector<Edge> want) {
    std::sort(o.arcs.begin(), o.arcs.end());
    std::sort(want.begin(), want.end());
    return o.arcs == want;
}

long abs_half(const Graph& g, const Orientation& o) {
    std::vector<int> out(g.vertex_count()), in(g.vertex_count());
    for (auto [a, b] : o.arcs) {
        ++out[a];
        ++in[b];
    }
    long s = 0;
    for (int v = 0; v < g.vertex_count(); ++v) s += std::abs(out[v] - in[v]);
    return s / 2;
}

}  // namespace

TEST_CASE("sequences validate their entries") {
    CHECK_THROWS_AS(seq_of(3, {0, 0}), InvalidSequence);
    CHECK_THROWS_AS(seq_of(3, {3}), InvalidSequence);
    CHECK_THROWS_AS(seq_of(3, {-1}), InvalidSequence);
    auto s = seq_of(4, {2, 0});
    CHECK_FALSE(s.is_complete());
    CHECK(s.positions() == std::vector<int>{1, -1, 0, -1});
}

TEST_CASE("configs reject negative counts") {
    CHECK_THROWS_AS(BrushConfig(std::vector<int>{1, -1}), InvalidParameter);
    BrushConfig w0(2);
    w0.add(1, 3);
    CHECK(w0.total() == 3);
    CHECK_THROWS_AS(w0.add(0, -1), InvalidParameter);
}

TEST_CASE("orientation_from_sequence") {
    CHECK(same_arcs(orientation_from_sequence(make_path(3), identity(3)), {{0, 1}, {1, 2}}));
    CHECK(same_arcs(orientation_from_sequence(make_cycle(3), identity(3)), {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(same_arcs(orientation_from_sequence(make_cycle(4), seq_of(4, {0, 2, 1, 3})),
                    {{0, 1}, {0, 3}, {2, 1}, {2, 3}}));
    CHECK_THROWS_AS(orientation_from_sequence(make_path(3), seq_of(3, {0, 1})), InvalidSequence);
    CHECK_THROWS_AS(orientation_from_sequence(make_path(3), identity(4)), InvalidSequence);
}

TEST_CASE("brush_cost") {
    CHECK(brush_cost(make_path(3), Orientation{3, {{0, 1}, {1, 2}}}) == 1);
    CHECK(brush_cost(make_cycle(4), Orientation{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}}) == 0);
    CHECK(brush_cost(make_clique(4), orientation_from_sequence(make_clique(4), identity(4))) == 4);

    // missing edge, extra arc, both directions
    CHECK_THROWS_AS(brush_cost(make_path(3), Orientation{3, {{0, 1}}}), InvalidOrientation);
    CHECK_THROWS_AS(brush_cost(make_path(3), Orientation{3, {{0, 1}, {1, 2}, {0, 2}}}),
                    InvalidOrientation);
    CHECK_THROWS_AS(brush_cost(make_path(2), Orientation{2, {{0, 1}, {1, 0}}}), InvalidOrientation);
    CHECK_THROWS_AS(brush_cost(make_path(2), Orientation{3, {{0, 1}}}), InvalidOrientation);
}

TEST_CASE("minimal_config_for_sequence") {
    CHECK(minimal_config_for_sequence(make_path(3), identity(3)) ==
          BrushConfig(std::vector<int>{1, 0, 0}));
    CHECK(minimal_config_for_sequence(make_clique(4), identity(4)) ==
          BrushConfig(std::vector<int>{3, 1, 0, 0}));
    CHECK(minimal_config_for_sequence(make_cycle(4), seq_of(4, {0, 2, 1, 3})) ==
          BrushConfig(std::vector<int>{2, 0, 2, 0}));
}

TEST_CASE("simulate") {
    auto p3 = make_path(3);
    auto trace = simulate(p3, BrushConfig(std::vector<int>{1, 0, 0}), identity(3));
    REQUIRE(trace.steps.size() == 3);
    CHECK(trace.steps[0].cleaned_to == std::vector<Vertex>{1});
    CHECK(trace.steps[1].brushes_before == 1);
    CHECK(trace.steps[1].cleaned_to == std::vector<Vertex>{2});
    CHECK(trace.steps[2].cleaned_to.empty());
    CHECK(trace.final_brushes == std::vector<int>{0, 0, 1});

    try {
        simulate(p3, BrushConfig(3), seq_of(3, {1, 0, 2}));
        FAIL("expected InfeasibleStep");
    } catch (const InfeasibleStep& e) {
        CHECK(e.step() == 0);
        CHECK(e.vertex() == 1);
        CHECK(e.have() == 0);
        CHECK(e.need() == 2);
    }

    auto t = torus_config(3, 3);
    auto tt = simulate(make_torus(3, 3).graph, t.config, t.sequence);
    CHECK(std::accumulate(tt.final_brushes.begin(), tt.final_brushes.end(), 0) == 8);

    CHECK_THROWS_AS(simulate(p3, BrushConfig(2), identity(3)), InvalidInput);
}

TEST_CASE("surplus brushes stay put") {
    auto p2 = make_path(2);
    auto trace = simulate(p2, BrushConfig(std::vector<int>{3, 0}), identity(2));
    CHECK(trace.steps[0].brushes_left == 2);
    CHECK(trace.final_brushes == std::vector<int>{2, 1});
}

TEST_CASE("isolated and already-clean vertices fire for free") {
    auto g = make_empty(3);
    auto trace = simulate(g, BrushConfig(3), seq_of(3, {2, 0, 1}));
    CHECK(trace.steps.size() == 3);
}

TEST_CASE("simulate needs the whole sequence") {
    CHECK_THROWS_AS(simulate(make_path(4), BrushConfig(std::vector<int>{1, 0, 0, 0}), seq_of(4, {0, 1})),
                    InvalidSequence);
}

TEST_CASE("can_clean examples") {
    auto c4 = make_cycle(4);
    auto ok = can_clean(c4, BrushConfig(std::vector<int>{2, 0, 0, 0}));
    CHECK(ok.cleanable);
    CHECK(ok.sequence.is_complete());
    CHECK(ok.blocking.empty());

    auto stuck = can_clean(c4, BrushConfig(std::vector<int>{1, 1, 0, 0}));
    CHECK_FALSE(stuck.cleanable);
    CHECK(stuck.blocking == std::vector<Vertex>{0, 1, 2, 3});

    auto p3 = can_clean(make_path(3), BrushConfig(3));
    CHECK_FALSE(p3.cleanable);
    CHECK(p3.blocking == std::vector<Vertex>{0, 1, 2});

    // fully stocked
    auto g = make_random(9, 0.5, 3);
    std::vector<int> deg;
    for (Vertex v = 0; v < 9; ++v) deg.push_back(g.degree(v));
    CHECK(can_clean(g, BrushConfig(deg)).cleanable);

    CHECK_THROWS_AS(can_clean(c4, BrushConfig(3)), InvalidInput);
}

TEST_CASE("greedy blocking set excludes vertices that did fire") {
    // 0-1 fires, 2-3-4 triangle is stuck
    auto g = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {2, 3}, {3, 4}, {2, 4}});
    auto r = can_clean(g, BrushConfig(std::vector<int>{1, 0, 0, 0, 0}));
    CHECK_FALSE(r.cleanable);
    CHECK(r.blocking == std::vector<Vertex>{2, 3, 4});
    CHECK(r.sequence.size() == 2);
}

TEST_CASE("verify_acyclic") {
    CHECK(verify_acyclic(orientation_from_sequence(make_clique(5), identity(5))));
    CHECK_FALSE(verify_acyclic(Orientation{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}}));
    CHECK_FALSE(verify_acyclic(Orientation{3, {{0, 1}, {1, 2}, {2, 0}}}));
    CHECK(verify_acyclic(Orientation{3, {}}));
}

TEST_CASE("cost identity on random orientations") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 100; ++round) {
        const int n = 2 + static_cast<int>(rng() % 9);
        auto g = make_random(n, 0.5, rng());
        Orientation o{n, {}};
        for (auto [u, v] : g.edges()) {
            o.arcs.push_back(rng() & 1 ? Edge{u, v} : Edge{v, u});
        }
        CHECK(brush_cost(g, o) == abs_half(g, o));
    }
}

TEST_CASE("sequence-induced cleanings are consistent") {
    std::mt19937_64 rng(12);
    for (int round = 0; round < 100; ++round) {
        const int n = 1 + static_cast<int>(rng() % 12);
        auto g = make_random(n, 0.45, rng());
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        const auto seq = seq_of(n, order);
        const auto o = orientation_from_sequence(g, seq);
        CHECK(verify_acyclic(o));
        const auto w0 = minimal_config_for_sequence(g, seq);
        CHECK(w0.total() == brush_cost(g, o));
        const auto trace = simulate(g, w0, seq);
        // every edge cleaned exactly once
        std::size_t sent = 0;
        for (const auto& s : trace.steps) sent += s.cleaned_to.size();
        CHECK(sent == static_cast<std::size_t>(g.edge_count()));
        CHECK(std::accumulate(trace.final_brushes.begin(), trace.final_brushes.end(), 0L) == w0.total());
    }
}
