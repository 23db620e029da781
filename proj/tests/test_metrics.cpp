#include "doctest.h"

#include "fixtures.hpp"
#include "metrics_oracle.hpp"
#include "stec/errors.hpp"
#include "stec/metrics.hpp"
#include "stec/routing.hpp"
#include "stec/simulator.hpp"
#include "stec/strategy.hpp"
#include "stec/workload.hpp"

using namespace stec;
using fixtures::make_vnr;
using fixtures::vnode;

TEST_CASE("acceptance rate") {
    MetricWindow w{0, 10, 10, 8, 0, 0};
    CHECK(*acceptance_rate(w) == doctest::Approx(0.8));
    w.arrived = 0;
    w.accepted = 0;
    CHECK_FALSE(acceptance_rate(w).has_value());
    w.arrived = w.accepted = 5;
    CHECK(*acceptance_rate(w) == 1.0);
}

TEST_CASE("revenue") {
    CHECK(revenue(20, 10, {0.5, 0.5}) == 15.0);
    auto lone = make_vnr(1, {vnode(0, 12, 0, 0, {0}), vnode(1, 8, 0, 0, {0})}, {});
    CHECK(revenue(lone) == 10.0);
    CHECK(revenue(20, 10, {1.0, 0.0}) == 20.0);
    CHECK_THROWS_AS(revenue(20, 10, {0.7, 0.7}), InvalidWeights);
    CHECK_THROWS_AS(revenue(20, 10, {1.5, -0.5}), InvalidWeights);
}

TEST_CASE("cost modes") {
    auto net = fixtures::two_domain_line();
    auto vnr = make_vnr(1, {vnode(0, 12, 0, 4, {0}), vnode(1, 8, 0, 4, {0, 1})}, {{0, 1, 10}});
    SUBCASE("one hop") {
        auto emb = make_embedding(vnr, {0, 1}, route_all_links(vnr, {0, 1}, net));
        CHECK(cost(vnr, emb, CostMode::literal) == 30.0);
        CHECK(cost(vnr, emb, CostMode::hop_weighted) == 30.0);
    }
    SUBCASE("three hops") {
        auto emb = make_embedding(vnr, {0, 3}, route_all_links(vnr, {0, 3}, net));
        CHECK(cost(vnr, emb, CostMode::literal) == 30.0);
        CHECK(cost(vnr, emb, CostMode::hop_weighted) == 50.0);
        CHECK(emb.cost == 50.0);
        CHECK(emb.revenue == 15.0);
    }
    SUBCASE("no links") {
        auto lone = make_vnr(2, {vnode(0, 12, 0, 4, {0})}, {});
        auto emb = make_embedding(lone, {0}, route_all_links(lone, {0}, net));
        CHECK(cost(lone, emb, CostMode::literal) == 12.0);
        CHECK(cost(lone, emb, CostMode::hop_weighted) == 12.0);
    }
    CHECK(parse_cost_mode("literal") == CostMode::literal);
    CHECK(parse_cost_mode("hop") == CostMode::hop_weighted);
    CHECK_THROWS(parse_cost_mode("flat"));
}

TEST_CASE("windowed series examples") {
    std::vector<TraceEvent> events(1);
    events[0].time = 3.0;
    events[0].outcome = Outcome::accepted;
    events[0].cpu_sum = 20;
    events[0].bw_sum = 10;
    events[0].bw_hop_sum = 10;
    const auto rows = windowed_series(events, 20.0, 10.0, {}, CostMode::hop_weighted);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].avg_revenue == 1.5);
    CHECK(*rows[0].rc_ratio == 0.5);
    CHECK_FALSE(rows[1].acceptance.has_value());
    CHECK(rows[1].avg_revenue == 0.0);
    CHECK(rows[1].avg_cost == 0.0);
    CHECK_FALSE(rows[1].rc_ratio.has_value());
}

TEST_CASE("last window is clipped at the horizon") {
    const auto ws = empty_windows(25.0, 10.0);
    REQUIRE(ws.size() == 3);
    CHECK(ws[2].t_start == 20.0);
    CHECK(ws[2].t_end == 25.0);
    CHECK(empty_windows(0.0, 10.0).empty());
}

TEST_CASE("csv renders missing samples as empty fields") {
    std::vector<TraceEvent> events(1);
    events[0].time = 1.0;
    events[0].outcome = Outcome::rejected;
    const auto csv = series_to_csv(windowed_series(events, 20.0, 10.0));
    CHECK(csv == "t_start,t_end,arrived,accepted,acceptance,avg_revenue,avg_cost,rc_ratio\n"
                 "0,10,1,0,0,0,0,\n"
                 "10,20,0,0,,0,0,\n");
}

TEST_CASE("cumulative series runs from time zero") {
    std::vector<MetricWindow> ws{{0, 10, 2, 1, 15, 30}, {10, 20, 3, 3, 45, 60}};
    const auto rows = cumulative_series(ws);
    CHECK(rows[1].window.arrived == 5);
    CHECK(*rows[1].acceptance == 0.8);
    CHECK(rows[1].avg_revenue == 3.0);
    CHECK(rows[1].avg_cost == 4.5);
}

TEST_CASE("steady state skips the warmup windows") {
    std::vector<MetricWindow> ws{{0, 10, 1, 1, 10, 10}, {10, 20, 2, 1, 10, 20}, {20, 30, 4, 1, 10, 40}};
    const auto ss = steady_state(series_from_windows(ws), 30.0, 0.2);
    CHECK(*ss.acceptance == doctest::Approx(0.375));
    CHECK(*ss.min_acceptance == 0.25);
    CHECK(*ss.rc_ratio == doctest::Approx(0.375));
}

TEST_CASE("simulated runs: bounds and oracle equivalence") {
    GeneratorConfig g;
    g.node_count = 24;
    g.domain_count = 3;
    g.vnr_arrival_rate = 0.1;
    g.vnr_mean_lifetime = 200;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        g.seed = seed;
        const auto net = generate_substrate(g);
        const auto vnrs = generate_vnr_stream(g, 3000);
        for (const auto& name : strategy_names()) {
            StrategyOptions so;
            so.seed = seed;
            auto strategy = make_strategy(name, so);
            SimulationOptions opts;
            opts.horizon = 3000;
            opts.window_width = 250;
            const auto trace = run_simulation(net, vnrs, *strategy, opts);
            CAPTURE(name);
            const auto lib = series_from_windows(trace.streaming_windows);
            CHECK(metrics_oracle::same(lib, metrics_oracle::recompute(trace.events, vnrs, 3000, 250, 0.5, 0.5, true)));
            const auto literal = windowed_series(trace.events, 3000, 250, {}, CostMode::literal);
            CHECK(metrics_oracle::same(literal,
                                       metrics_oracle::recompute(trace.events, vnrs, 3000, 250, 0.5, 0.5, false)));
            for (const auto& row : lib) {
                if (row.acceptance) CHECK((*row.acceptance >= 0.0 && *row.acceptance <= 1.0));
                if (row.rc_ratio) CHECK(*row.rc_ratio <= 1.0);
            }
            for (const auto& row : literal)
                if (row.rc_ratio) CHECK(*row.rc_ratio == doctest::Approx(0.5));
        }
    }
}
