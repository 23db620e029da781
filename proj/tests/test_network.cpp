#include "doctest.h"

#include <algorithm>
#include <limits>
#include <queue>

#include "fixtures.hpp"
#include "stec/errors.hpp"
#include "stec/random.hpp"
#include "stec/routing.hpp"

using namespace stec;
using fixtures::make_net;
using fixtures::make_vnr;
using fixtures::vnode;

namespace {

Embedding embedding_for(const Vnr& vnr, std::vector<NodeId> hosts, const SubstrateNetwork& net) {
    Embedding emb;
    emb.vnr_id = vnr.id;
    emb.node_map = hosts;
    emb.link_map = route_all_links(vnr, hosts, net).paths;
    return emb;
}

struct Residuals {
    std::vector<int> cpu;
    std::vector<int> bw;
    bool operator==(const Residuals&) const = default;
};

Residuals snapshot(const SubstrateNetwork& net) {
    Residuals r;
    for (const auto& n : net.nodes()) r.cpu.push_back(n.cpu_residual);
    r.bw = net.bw_residuals();
    return r;
}

} // namespace

TEST_CASE("allocate debits cpu and bandwidth") {
    auto net = fixtures::two_domain_line(50, 100);
    auto vnr = make_vnr(7, {vnode(0, 20, 0, 4, {0}), vnode(1, 5, 0, 4, {0})}, {{0, 1, 10}});
    const auto emb = embedding_for(vnr, {0, 2}, net);
    net.allocate(vnr, emb);
    CHECK(net.node(0).cpu_residual == 30);
    CHECK(net.node(2).cpu_residual == 45);
    CHECK(net.link(*net.link_between(0, 1)).bw_residual == 90);
    CHECK(net.link(*net.link_between(1, 2)).bw_residual == 90);
    CHECK(net.is_active(7));
}

TEST_CASE("empty embedding leaves the network unchanged") {
    auto net = fixtures::two_domain_line();
    const auto before = snapshot(net);
    Vnr empty;
    empty.id = 3;
    Embedding emb;
    emb.vnr_id = 3;
    net.allocate(empty, emb);
    CHECK(snapshot(net) == before);
    net.release(empty, emb);
    CHECK(snapshot(net) == before);
}

TEST_CASE("allocate then release restores residuals exactly") {
    auto net = fixtures::two_domain_line();
    const auto before = snapshot(net);
    auto vnr = make_vnr(1, {vnode(0, 30, 0, 4, {0, 1}), vnode(1, 40, 0, 4, {0, 1})}, {{0, 1, 7}});
    const auto emb = embedding_for(vnr, {0, 5}, net);
    net.allocate(vnr, emb);
    CHECK_FALSE(snapshot(net) == before);
    net.release(vnr, emb);
    CHECK(snapshot(net) == before);
    CHECK(net.pristine());
}

TEST_CASE("releasing twice raises DoubleRelease") {
    auto net = fixtures::two_domain_line();
    auto vnr = make_vnr(1, {vnode(0, 10, 0, 4, {0})}, {});
    const auto emb = embedding_for(vnr, {1}, net);
    net.allocate(vnr, emb);
    net.release(vnr, emb);
    CHECK_THROWS_AS(net.release(vnr, emb), DoubleRelease);
}

TEST_CASE("over-allocation raises InsufficientResources and leaves state untouched") {
    auto net = fixtures::two_domain_line(50, 100);
    auto vnr = make_vnr(1, {vnode(0, 60, 0, 4, {0})}, {});
    Embedding emb;
    emb.vnr_id = 1;
    emb.node_map = {0};
    const auto before = snapshot(net);
    CHECK_THROWS_AS(net.allocate(vnr, emb), InsufficientResources);
    CHECK(snapshot(net) == before);
    CHECK_FALSE(net.is_active(1));
}

TEST_CASE("release order does not matter") {
    auto net_ab = fixtures::two_domain_line();
    auto net_b = fixtures::two_domain_line();
    auto a = make_vnr(1, {vnode(0, 10, 0, 4, {0}), vnode(1, 12, 0, 4, {1})}, {{0, 1, 5}});
    auto b = make_vnr(2, {vnode(0, 7, 0, 4, {0}), vnode(1, 9, 0, 4, {0})}, {{0, 1, 3}});
    const auto emb_a = embedding_for(a, {1, 4}, net_ab);
    const auto emb_b = embedding_for(b, {0, 2}, net_ab);
    net_ab.allocate(a, emb_a);
    net_ab.allocate(b, emb_b);
    net_ab.release(a, emb_a);
    net_b.allocate(b, emb_b);
    CHECK(snapshot(net_ab) == snapshot(net_b));
}

TEST_CASE("boundary hops on hand-checked graphs") {
    SUBCASE("path a-b-c with only a on the boundary") {
        // domain 0: 0-1-2, node 0 linked to domain 1 node 3.
        auto net = make_net({{0, 10, 0, 0}, {0, 10, 0, 0}, {0, 10, 0, 0}, {1, 10, 0, 0}},
                            {{0, 1, 5}, {1, 2, 5}, {0, 3, 5}});
        const auto hops = compute_boundary_hops(net);
        CHECK(hops == std::vector<int>{0, 1, 2, 0});
        CHECK(net.node(2).hop_to_boundary == 2);
    }
    SUBCASE("inter-domain links are not traversed") {
        // 0 reaches boundary node 2 in two intra hops even though 3 is adjacent to 2.
        auto net = fixtures::two_domain_line();
        CHECK(compute_boundary_hops(net) == std::vector<int>{2, 1, 0, 0, 1, 2});
    }
    SUBCASE("domain without inter-domain link") {
        auto net = make_net({{0, 10, 0, 0}, {0, 10, 0, 0}, {1, 10, 0, 0}, {1, 10, 0, 0}}, {{0, 1, 5}, {2, 3, 5}}, false);
        CHECK_THROWS_AS(compute_boundary_hops(net), NoBoundaryNode);
    }
}

namespace {

/// Independent check: for every node, BFS over intra-domain links to every
/// other node, then take the minimum distance to a boundary node.
std::vector<int> brute_force_hops(const SubstrateNetwork& net) {
    const std::size_t n = net.node_count();
    std::vector<int> out(n, std::numeric_limits<int>::max());
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1);
        std::queue<std::size_t> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            auto cur = q.front();
            q.pop();
            for (std::size_t t = 0; t < n; ++t) {
                auto l = net.link_between(static_cast<NodeId>(cur), static_cast<NodeId>(t));
                if (!l || net.link(*l).kind != LinkKind::intra_domain || dist[t] >= 0) continue;
                dist[t] = dist[cur] + 1;
                q.push(t);
            }
        }
        for (std::size_t t = 0; t < n; ++t) {
            if (dist[t] >= 0 && net.is_boundary(static_cast<NodeId>(t))) out[s] = std::min(out[s], dist[t]);
        }
    }
    return out;
}

} // namespace

TEST_CASE("boundary hops agree with all-pairs BFS on random connected domains") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(seed);
        SubstrateNetwork net;
        const int domains = static_cast<int>(rng.uniform_int(2, 4));
        std::vector<std::vector<NodeId>> members(static_cast<std::size_t>(domains));
        for (int d = 0; d < domains; ++d) {
            const int size = static_cast<int>(rng.uniform_int(1, 9));
            for (int i = 0; i < size; ++i) members[static_cast<std::size_t>(d)].push_back(net.add_node(d, 10, 0, 0));
            auto& m = members[static_cast<std::size_t>(d)];
            // random tree keeps the domain connected, then sprinkle extra links
            for (std::size_t i = 1; i < m.size(); ++i) net.add_link(m[i], m[rng.index(i)], 10);
            for (int extra = 0; extra < size; ++extra) {
                auto a = m[rng.index(m.size())], b = m[rng.index(m.size())];
                if (a != b && !net.link_between(a, b)) net.add_link(a, b, 10);
            }
        }
        for (int d = 1; d < domains; ++d) {
            auto& a = members[static_cast<std::size_t>(d - 1)];
            auto& b = members[static_cast<std::size_t>(d)];
            net.add_link(a[rng.index(a.size())], b[rng.index(b.size())], 10);
        }
        CAPTURE(seed);
        CHECK(compute_boundary_hops(net) == brute_force_hops(net));
    }
}

TEST_CASE("random allocate/release sequences conserve resources and respect bounds") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        auto net = make_net({{0, 100, 4, 0}, {0, 100, 4, 0}, {0, 100, 4, 0}, {1, 100, 4, 0}, {1, 100, 4, 0}},
                            {{0, 1, 60}, {1, 2, 60}, {0, 2, 60}, {2, 3, 60}, {3, 4, 60}});
        const auto initial = snapshot(net);
        std::vector<std::pair<Vnr, Embedding>> live;
        for (int step = 0; step < 60; ++step) {
            if (!live.empty() && rng.bernoulli(0.4)) {
                const auto k = rng.index(live.size());
                net.release(live[k].first, live[k].second);
                live.erase(live.begin() + static_cast<std::ptrdiff_t>(k));
            } else {
                auto vnr = make_vnr(step, {vnode(0, static_cast<int>(rng.uniform_int(1, 30)), 0, 4, {0, 1}),
                                           vnode(1, static_cast<int>(rng.uniform_int(1, 30)), 0, 4, {0, 1})},
                                    {{0, 1, static_cast<int>(rng.uniform_int(1, 20))}});
                const NodeId a = static_cast<NodeId>(rng.index(5));
                NodeId b = static_cast<NodeId>(rng.index(5));
                if (a == b) b = (b + 1) % 5;
                auto routing = try_route_all_links(vnr, {a, b}, net);
                if (!routing) continue;
                Embedding emb;
                emb.vnr_id = vnr.id;
                emb.node_map = {a, b};
                emb.link_map = routing->paths;
                try {
                    net.allocate(vnr, emb);
                    live.emplace_back(vnr, emb);
                } catch (const InsufficientResources&) {
                }
            }
            for (const auto& n : net.nodes()) REQUIRE((n.cpu_residual >= 0 && n.cpu_residual <= n.cpu_capacity));
            for (const auto& l : net.links()) REQUIRE((l.bw_residual >= 0 && l.bw_residual <= l.bw_capacity));
        }
        while (!live.empty()) {
            net.release(live.back().first, live.back().second);
            live.pop_back();
        }
        CHECK(snapshot(net) == initial);
    }
}

TEST_CASE("link kind follows endpoint domains") {
    auto net = fixtures::two_domain_line();
    CHECK(net.link(*net.link_between(0, 1)).kind == LinkKind::intra_domain);
    CHECK(net.link(*net.link_between(2, 3)).kind == LinkKind::inter_domain);
    CHECK(net.is_boundary(2));
    CHECK_FALSE(net.is_boundary(1));
    CHECK_THROWS_AS(net.add_link(0, 0, 5), std::invalid_argument);
    CHECK_THROWS_AS(net.add_link(1, 0, 5), std::invalid_argument);
}
