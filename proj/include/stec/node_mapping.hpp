#pragma once

#include <span>
#include <vector>

#include "stec/network.hpp"

namespace stec {

/// Weights of the security, cpu-slack and boundary-distance terms.
struct PriorityWeights {
    double gamma = 0.5;
    double delta = 0.3;
    double theta = 0.2;

    /// Throws std::invalid_argument unless all weights are >= 0 and sum to 1.
    void validate() const;
};

struct NodeMappingOptions {
    PriorityWeights weights;
    /// Score hop_to_boundary as-is, favouring nodes far from the boundary.
    /// The default inverts it so that boundary-proximal nodes win.
    bool literal_hop_term = false;
};

struct NodeMappingResult {
    std::vector<NodeId> assignment;     ///< indexed by virtual node
    std::vector<int> ordered_virtual_nodes; ///< processing order
};

/// vsd * cpu_demand.
long long virtual_node_priority(const VirtualNode& v);

/// Virtual node indices by descending priority, ties by ascending id.
std::vector<int> virtual_node_order(const Vnr& vnr);

/// Substrate nodes n (ascending id) with domain(n) in cd(v),
/// cpu_residual(n) >= cpu_demand(v), ssl(n) >= vsd(v) and vsl(v) >= ssd(n).
std::vector<NodeId> candidate_nodes(const VirtualNode& v, const SubstrateNetwork& net);

/// Priority of every candidate, aligned with `candidates`. Each of the three
/// terms is min-max normalised over the candidate set; a term that is
/// constant across candidates contributes 0.
std::vector<double> substrate_priorities(const VirtualNode& v, const SubstrateNetwork& net,
                                         std::span<const NodeId> candidates, const NodeMappingOptions& opts = {});

/// Priority of one candidate. Throws NotACandidate if `s` is not in `candidates`.
double substrate_node_priority(NodeId s, const VirtualNode& v, const SubstrateNetwork& net,
                               std::span<const NodeId> candidates, const NodeMappingOptions& opts = {});

/// Greedy node mapping: virtual nodes in virtual_node_order(), each taking
/// its highest-priority candidate not yet used by this request (ties by
/// ascending substrate id). Throws NodeMappingInfeasible on the first
/// virtual node left without a candidate.
NodeMappingResult map_nodes(const Vnr& vnr, const SubstrateNetwork& net, const NodeMappingOptions& opts = {});

} // namespace stec
