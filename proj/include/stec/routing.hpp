#pragma once

#include <optional>
#include <span>
#include <vector>

#include "stec/network.hpp"

namespace stec {

/// One substrate path per virtual link, indexed like Vnr::links.
struct RoutingResult {
    std::vector<SubstratePath> paths;
    long long total_bw_cost = 0; ///< sum over links of bw_demand * hops
};

/// Minimum-hop path from src to dst over links whose entry in
/// `bw_residual` is at least `bw`. Among shortest paths the one with the
/// lexicographically smallest node sequence is returned.
std::optional<SubstratePath> find_path(const SubstrateNetwork& net, NodeId src, NodeId dst, int bw,
                                       std::span<const int> bw_residual);

/// find_path() against the network's own residuals. Throws NoFeasiblePath,
/// or std::invalid_argument when src == dst.
SubstratePath route_link(NodeId src, NodeId dst, int bw, const SubstrateNetwork& net);

/// Routes every virtual link of `vnr` in descending bandwidth order (ties by
/// link id), debiting a private copy of the residuals as it goes.
/// Returns nullopt and sets `failed_link` when some link cannot be routed.
std::optional<RoutingResult> try_route_all_links(const Vnr& vnr, const std::vector<NodeId>& assignment,
                                                 const SubstrateNetwork& net, int* failed_link = nullptr);

/// Throwing form of try_route_all_links(); raises LinkMappingInfeasible.
RoutingResult route_all_links(const Vnr& vnr, const std::vector<NodeId>& assignment, const SubstrateNetwork& net);

} // namespace stec
