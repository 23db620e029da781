#include "stec/node_mapping.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "stec/errors.hpp"

namespace stec {

void PriorityWeights::validate() const {
    if (gamma < 0.0 || delta < 0.0 || theta < 0.0) throw std::invalid_argument("priority weights must be non-negative");
    if (std::abs(gamma + delta + theta - 1.0) > 1e-9) throw std::invalid_argument("priority weights must sum to 1");
}

long long virtual_node_priority(const VirtualNode& v) {
    return static_cast<long long>(v.vsd) * static_cast<long long>(v.cpu_demand);
}

std::vector<int> virtual_node_order(const Vnr& vnr) {
    std::vector<int> order(vnr.nodes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return virtual_node_priority(vnr.nodes[static_cast<std::size_t>(a)]) >
               virtual_node_priority(vnr.nodes[static_cast<std::size_t>(b)]);
    });
    return order;
}

std::vector<NodeId> candidate_nodes(const VirtualNode& v, const SubstrateNetwork& net) {
    std::vector<NodeId> out;
    for (const auto& s : net.nodes()) {
        if (!std::binary_search(v.cd.begin(), v.cd.end(), s.domain)) continue;
        if (s.cpu_residual < v.cpu_demand) continue;
        if (s.ssl < v.vsd) continue;
        if (v.vsl < s.ssd) continue;
        out.push_back(s.id);
    }
    return out;
}

namespace {

constexpr double kScoreTolerance = 1e-9;

void normalise(std::vector<double>& xs) {
    if (xs.empty()) return;
    const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
    const double min = *lo;
    const double range = *hi - *lo;
    for (double& x : xs) x = range > 0.0 ? (x - min) / range : 0.0;
}

} // namespace

std::vector<double> substrate_priorities(const VirtualNode& v, const SubstrateNetwork& net,
                                         std::span<const NodeId> candidates, const NodeMappingOptions& opts) {
    const std::size_t n = candidates.size();
    std::vector<double> security(n), slack(n), hop(n);
    int max_hop = 0;
    for (NodeId c : candidates) max_hop = std::max(max_hop, net.node(c).hop_to_boundary);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& s = net.node(candidates[i]);
        security[i] = s.ssl - v.vsd;
        slack[i] = s.cpu_residual - v.cpu_demand;
        hop[i] = opts.literal_hop_term ? s.hop_to_boundary : max_hop - s.hop_to_boundary;
    }
    normalise(security);
    normalise(slack);
    normalise(hop);
    const auto& w = opts.weights;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = w.gamma * security[i] + w.delta * slack[i] + w.theta * hop[i];
    return out;
}

double substrate_node_priority(NodeId s, const VirtualNode& v, const SubstrateNetwork& net,
                               std::span<const NodeId> candidates, const NodeMappingOptions& opts) {
    const auto it = std::find(candidates.begin(), candidates.end(), s);
    if (it == candidates.end()) throw NotACandidate("node " + std::to_string(s) + " is not a candidate");
    const auto scores = substrate_priorities(v, net, candidates, opts);
    return scores[static_cast<std::size_t>(it - candidates.begin())];
}

NodeMappingResult map_nodes(const Vnr& vnr, const SubstrateNetwork& net, const NodeMappingOptions& opts) {
    NodeMappingResult result;
    result.ordered_virtual_nodes = virtual_node_order(vnr);
    result.assignment.assign(vnr.nodes.size(), -1);
    std::set<NodeId> used;
    for (int vi : result.ordered_virtual_nodes) {
        const auto& v = vnr.nodes[static_cast<std::size_t>(vi)];
        const auto candidates = candidate_nodes(v, net);
        const auto scores = substrate_priorities(v, net, candidates, opts);
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (used.contains(candidates[i])) continue;
            // Candidates are ascending, so a strict win keeps the smallest id on ties.
            // Scores that agree up to rounding count as tied.
            if (!best || scores[i] > scores[*best] + kScoreTolerance) best = i;
        }
        if (!best) throw NodeMappingInfeasible(v.id);
        result.assignment[static_cast<std::size_t>(vi)] = candidates[*best];
        used.insert(candidates[*best]);
    }
    return result;
}

} // namespace stec
