#include "doctest.h"

#include "fixtures.hpp"
#include "pso_oracle.hpp"
#include "stec/errors.hpp"
#include "stec/node_mapping.hpp"
#include "stec/strategy.hpp"
#include "stec/validation.hpp"

using namespace stec;
using fixtures::make_net;
using fixtures::make_vnr;
using fixtures::vnode;

TEST_CASE("greedy takes the candidate with most residual cpu") {
    auto net = make_net({{0, 40, 4, 0}, {0, 90, 4, 0}, {1, 10, 4, 0}}, {{0, 1, 50}, {1, 2, 50}});
    auto vnr = make_vnr(1, {vnode(0, 10, 0, 4, {0})}, {});
    CHECK(greedy_embed(vnr, net).node_map == std::vector<NodeId>{1});
}

TEST_CASE("greedy agrees with map_nodes when every node has one candidate") {
    auto net = fixtures::two_domain_line();
    auto vnr = make_vnr(1, {vnode(0, 10, 0, 4, {0}), vnode(1, 20, 0, 4, {1})}, {{0, 1, 3}});
    // leave one node per domain with room
    auto busy = net;
    auto filler = make_vnr(9, {vnode(0, 45, 0, 4, {0}), vnode(1, 45, 0, 4, {0}), vnode(2, 45, 0, 4, {1}),
                               vnode(3, 45, 0, 4, {1})}, {});
    Embedding fe;
    fe.vnr_id = 9;
    fe.node_map = {0, 1, 4, 5};
    busy.allocate(filler, fe);
    CHECK(greedy_embed(vnr, busy).node_map == map_nodes(vnr, busy).assignment);
}

TEST_CASE("greedy walks into a bandwidth bottleneck that stec-iot avoids") {
    // Node 1 has the most cpu but reaches the other domain only over the thin link 1-0.
    auto net = make_net({{0, 50, 4, 0}, {0, 90, 4, 0}, {1, 50, 4, 0}}, {{0, 2, 100}, {0, 1, 1}});
    auto vnr = make_vnr(1, {vnode(0, 10, 0, 4, {0}), vnode(1, 10, 0, 4, {1})}, {{0, 1, 5}});
    CHECK_THROWS_AS(greedy_embed(vnr, net), EmbeddingInfeasible);
    auto stec = make_strategy("stec-iot", {});
    const auto emb = stec->embed(vnr, net);
    CHECK(emb.node_map == std::vector<NodeId>{0, 2});
    CHECK(validate_embedding(net, vnr, emb).empty());
}

TEST_CASE("random embedding") {
    auto net = fixtures::two_domain_line();
    SUBCASE("empty candidate set fails at once") {
        auto vnr = make_vnr(1, {vnode(0, 10, 0, 4, {0}), vnode(1, 10, 0, 4, {7})}, {});
        CHECK_THROWS_AS(random_embed(vnr, net, 1), EmbeddingInfeasible);
    }
    SUBCASE("unique feasible assignment is found") {
        auto vnr = make_vnr(1, {vnode(0, 10, 0, 0, {0}), vnode(1, 10, 0, 4, {1})}, {{0, 1, 1}});
        auto strict = make_net({{0, 50, 4, 1}, {0, 50, 4, 0}, {0, 50, 4, 1}, {1, 50, 4, 0}, {1, 5, 4, 0}},
                               {{0, 1, 10}, {1, 2, 10}, {2, 3, 10}, {3, 4, 10}});
        for (std::uint64_t seed = 0; seed < 10; ++seed)
            CHECK(random_embed(vnr, strict, seed).node_map == std::vector<NodeId>{1, 3});
    }
    SUBCASE("same seed, same draw") {
        auto vnr = make_vnr(1, {vnode(0, 10, 0, 4, {0, 1}), vnode(1, 10, 0, 4, {0, 1})}, {{0, 1, 1}});
        CHECK(random_embed(vnr, net, 42) == random_embed(vnr, net, 42));
    }
}

TEST_CASE("every strategy output passes the validator") {
    for (int i = 0; i < 40; ++i) {
        const auto in = pso_oracle::make_instance(static_cast<std::uint64_t>(500 + i), 3 + i % 2);
        for (const auto& name : strategy_names()) {
            StrategyOptions so;
            so.seed = static_cast<std::uint64_t>(i);
            auto s = make_strategy(name, so);
            try {
                const auto emb = s->embed(in.vnr, in.net);
                CAPTURE(name);
                CHECK(validate_embedding(in.net, in.vnr, emb).empty());
            } catch (const EmbeddingInfeasible&) {
            }
        }
    }
}

TEST_CASE("unknown strategy names are rejected") {
    CHECK_THROWS_AS(make_strategy("topsis", {}), std::invalid_argument);
    CHECK(make_strategy("random", {})->name() == "random");
}
