#include "stec/routing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "stec/errors.hpp"

namespace stec {

std::optional<SubstratePath> find_path(const SubstrateNetwork& net, NodeId src, NodeId dst, int bw,
                                       std::span<const int> bw_residual) {
    const std::size_t n = net.node_count();
    if (src < 0 || dst < 0 || static_cast<std::size_t>(src) >= n || static_cast<std::size_t>(dst) >= n) {
        throw std::invalid_argument("path endpoint out of range");
    }
    if (src == dst) return SubstratePath{{src}, {}};

    // BFS visiting neighbors in ascending id order. The first parent to reach
    // a node is the one with the lexicographically smallest shortest prefix.
    std::vector<NodeId> parent(n, -1);
    std::vector<LinkId> via(n, -1);
    std::vector<NodeId> queue;
    queue.reserve(n);
    queue.push_back(src);
    parent[static_cast<std::size_t>(src)] = src;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeId cur = queue[head];
        for (const auto& adj : net.neighbors(cur)) {
            if (parent[static_cast<std::size_t>(adj.neighbor)] != -1) continue;
            if (bw_residual[static_cast<std::size_t>(adj.link)] < bw) continue;
            parent[static_cast<std::size_t>(adj.neighbor)] = cur;
            via[static_cast<std::size_t>(adj.neighbor)] = adj.link;
            if (adj.neighbor == dst) {
                SubstratePath path;
                for (NodeId at = dst; at != src; at = parent[static_cast<std::size_t>(at)]) {
                    path.nodes.push_back(at);
                    path.links.push_back(via[static_cast<std::size_t>(at)]);
                }
                path.nodes.push_back(src);
                std::reverse(path.nodes.begin(), path.nodes.end());
                std::reverse(path.links.begin(), path.links.end());
                return path;
            }
            queue.push_back(adj.neighbor);
        }
    }
    return std::nullopt;
}

SubstratePath route_link(NodeId src, NodeId dst, int bw, const SubstrateNetwork& net) {
    if (src == dst) throw std::invalid_argument("route_link: both ends on node " + std::to_string(src));
    const auto residual = net.bw_residuals();
    auto path = find_path(net, src, dst, bw, residual);
    if (!path) {
        throw NoFeasiblePath("no path " + std::to_string(src) + " -> " + std::to_string(dst) + " with bandwidth " +
                             std::to_string(bw));
    }
    return *path;
}

std::optional<RoutingResult> try_route_all_links(const Vnr& vnr, const std::vector<NodeId>& assignment,
                                                 const SubstrateNetwork& net, int* failed_link) {
    if (assignment.size() != vnr.nodes.size()) throw std::invalid_argument("assignment does not cover the request");
    std::vector<std::size_t> order(vnr.links.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return vnr.links[a].bw_demand > vnr.links[b].bw_demand;
    });

    auto residual = net.bw_residuals();
    RoutingResult result;
    result.paths.resize(vnr.links.size());
    for (std::size_t j : order) {
        const auto& vl = vnr.links[j];
        const NodeId src = assignment[static_cast<std::size_t>(vl.u)];
        const NodeId dst = assignment[static_cast<std::size_t>(vl.v)];
        std::optional<SubstratePath> path;
        if (src != dst) path = find_path(net, src, dst, vl.bw_demand, residual);
        if (!path) {
            if (failed_link) *failed_link = static_cast<int>(j);
            return std::nullopt;
        }
        for (LinkId l : path->links) residual[static_cast<std::size_t>(l)] -= vl.bw_demand;
        result.total_bw_cost += static_cast<long long>(vl.bw_demand) * static_cast<long long>(path->hops());
        result.paths[j] = std::move(*path);
    }
    return result;
}

RoutingResult route_all_links(const Vnr& vnr, const std::vector<NodeId>& assignment, const SubstrateNetwork& net) {
    int failed = -1;
    auto result = try_route_all_links(vnr, assignment, net, &failed);
    if (!result) throw LinkMappingInfeasible(failed);
    return std::move(*result);
}

} // namespace stec
