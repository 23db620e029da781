#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stec/network.hpp"

namespace stec {

/// Constraint classes checked by validate_embedding().
enum class ViolationKind {
    malformed,         ///< embedding shape does not match the request
    cpu,               ///< host residual cpu below demand
    injectivity,       ///< one substrate node hosts several virtual nodes
    candidate_domain,  ///< host outside the virtual node's candidate domains
    bandwidth,         ///< summed demand over a substrate link exceeds its residual
    loop,              ///< both ends of a virtual link on one substrate node
    single_path,       ///< missing, broken, or non-simple path
    security_forward,  ///< host ssd above the tenant's vsl
    security_backward, ///< tenant vsd above the host ssl
};

std::string_view to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string detail;
};

/// Re-checks every node, link and security constraint of `emb` against the
/// current residuals of `net`. Returns an empty list iff all hold.
std::vector<Violation> validate_embedding(const SubstrateNetwork& net, const Vnr& vnr, const Embedding& emb);

/// Only the per-node checks (cpu, injectivity, candidate domain, security).
std::vector<Violation> validate_node_mapping(const SubstrateNetwork& net, const Vnr& vnr,
                                             const std::vector<NodeId>& node_map);

} // namespace stec
