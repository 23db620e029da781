#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace stec {

using NodeId = int;
using LinkId = int;
using DomainId = int;
using VnrId = int;

/// Default closed range for security levels and security demand levels.
inline constexpr int kMinSecurity = 0;
inline constexpr int kMaxSecurity = 4;

struct SubstrateNode {
    NodeId id = 0;
    DomainId domain = 0;
    int cpu_capacity = 0;
    int cpu_residual = 0;
    int ssl = 0; ///< security level offered to tenants
    int ssd = 0; ///< security level demanded from tenants
    int hop_to_boundary = 0;
};

enum class LinkKind { intra_domain, inter_domain };

struct SubstrateLink {
    LinkId id = 0;
    NodeId u = 0; ///< always u < v
    NodeId v = 0;
    int bw_capacity = 0;
    int bw_residual = 0;
    LinkKind kind = LinkKind::intra_domain;

    NodeId other(NodeId n) const { return n == u ? v : u; }
};

struct Adjacency {
    NodeId neighbor;
    LinkId link;
};

struct VirtualNode {
    int id = 0;
    int cpu_demand = 1;
    int vsd = 0; ///< security level demanded from the host
    int vsl = 0; ///< security level offered to the host
    std::vector<DomainId> cd; ///< candidate domains, sorted ascending
};

struct VirtualLink {
    int id = 0;
    int u = 0;
    int v = 0;
    int bw_demand = 1;
};

struct VirtualNetworkRequest {
    VnrId id = 0;
    std::vector<VirtualNode> nodes;
    std::vector<VirtualLink> links;
    double arrival_time = 0.0;
    double lifetime = 1.0;

    int total_cpu() const;
    int total_bw() const;
    /// True when every virtual node is reachable from node 0 (vacuously true when empty).
    bool connected() const;
};

using Vnr = VirtualNetworkRequest;

/// A substrate path: `nodes` has one more entry than `links`.
struct SubstratePath {
    std::vector<NodeId> nodes;
    std::vector<LinkId> links;

    std::size_t hops() const { return links.size(); }
    friend bool operator==(const SubstratePath&, const SubstratePath&) = default;
};

/// Node assignment plus one substrate path per virtual link.
/// `node_map[i]` hosts virtual node i; `link_map[j]` carries virtual link j.
struct Embedding {
    VnrId vnr_id = 0;
    std::vector<NodeId> node_map;
    std::vector<SubstratePath> link_map;
    double revenue = 0.0;
    double cost = 0.0;

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Multi-domain substrate graph with residual-resource bookkeeping.
///
/// Nodes and links are identified by their insertion index. Residuals are
/// only changed through allocate()/release(), which keep 0 <= residual <=
/// capacity and track which requests are currently hosted.
class SubstrateNetwork {
public:
    SubstrateNetwork() = default;

    NodeId add_node(DomainId domain, int cpu, int ssl, int ssd);
    /// Adds an undirected link; throws std::invalid_argument on self-loops,
    /// duplicates, or unknown endpoints. Kind is derived from endpoint domains.
    LinkId add_link(NodeId a, NodeId b, int bw);

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t link_count() const { return links_.size(); }
    int domain_count() const { return domain_count_; }

    const SubstrateNode& node(NodeId id) const { return nodes_.at(static_cast<std::size_t>(id)); }
    const SubstrateLink& link(LinkId id) const { return links_.at(static_cast<std::size_t>(id)); }
    std::span<const SubstrateNode> nodes() const { return nodes_; }
    std::span<const SubstrateLink> links() const { return links_; }
    /// Neighbors sorted by ascending node id.
    std::span<const Adjacency> neighbors(NodeId id) const { return adjacency_.at(static_cast<std::size_t>(id)); }
    std::optional<LinkId> link_between(NodeId a, NodeId b) const;
    std::vector<NodeId> domain_nodes(DomainId domain) const;

    bool is_boundary(NodeId id) const;

    /// Stores compute_boundary_hops() into each node's hop_to_boundary.
    void refresh_boundary_hops();

    std::vector<int> bw_residuals() const;

    /// Debits the embedding's demands. Throws InsufficientResources (leaving
    /// the network untouched) if any residual would go negative.
    void allocate(const Vnr& vnr, const Embedding& emb);
    /// Exact inverse of allocate(). Throws DoubleRelease when `emb` is not active.
    void release(const Vnr& vnr, const Embedding& emb);

    bool is_active(VnrId id) const { return active_.contains(id); }
    const std::set<VnrId>& active() const { return active_; }

    /// Hash over all residuals; used to detect unexpected mutation.
    std::uint64_t state_hash() const;

    /// True when every residual equals its capacity.
    bool pristine() const;

private:
    std::vector<SubstrateNode> nodes_;
    std::vector<SubstrateLink> links_;
    std::vector<std::vector<Adjacency>> adjacency_;
    std::set<VnrId> active_;
    int domain_count_ = 0;
};

/// Hop distance from each node to the nearest boundary node of its own
/// domain, walking intra-domain links only. Boundary nodes get 0.
/// Throws NoBoundaryNode if some populated domain has no boundary node.
std::vector<int> compute_boundary_hops(const SubstrateNetwork& net);

} // namespace stec
