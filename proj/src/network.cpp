#include "stec/network.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "stec/errors.hpp"

namespace stec {

int VirtualNetworkRequest::total_cpu() const {
    int sum = 0;
    for (const auto& n : nodes) sum += n.cpu_demand;
    return sum;
}

int VirtualNetworkRequest::total_bw() const {
    int sum = 0;
    for (const auto& l : links) sum += l.bw_demand;
    return sum;
}

bool VirtualNetworkRequest::connected() const {
    if (nodes.empty()) return true;
    std::vector<std::vector<int>> adj(nodes.size());
    for (const auto& l : links) {
        adj[static_cast<std::size_t>(l.u)].push_back(l.v);
        adj[static_cast<std::size_t>(l.v)].push_back(l.u);
    }
    std::vector<bool> seen(nodes.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const int cur = stack.back();
        stack.pop_back();
        for (int nb : adj[static_cast<std::size_t>(cur)]) {
            if (!seen[static_cast<std::size_t>(nb)]) {
                seen[static_cast<std::size_t>(nb)] = true;
                ++reached;
                stack.push_back(nb);
            }
        }
    }
    return reached == nodes.size();
}

NodeId SubstrateNetwork::add_node(DomainId domain, int cpu, int ssl, int ssd) {
    if (domain < 0) throw std::invalid_argument("negative domain id");
    if (cpu < 0) throw std::invalid_argument("negative cpu capacity");
    SubstrateNode n;
    n.id = static_cast<NodeId>(nodes_.size());
    n.domain = domain;
    n.cpu_capacity = cpu;
    n.cpu_residual = cpu;
    n.ssl = ssl;
    n.ssd = ssd;
    nodes_.push_back(n);
    adjacency_.emplace_back();
    domain_count_ = std::max(domain_count_, domain + 1);
    return n.id;
}

LinkId SubstrateNetwork::add_link(NodeId a, NodeId b, int bw) {
    const auto n = static_cast<NodeId>(nodes_.size());
    if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("link endpoint out of range");
    if (a == b) throw std::invalid_argument("self-loop link at node " + std::to_string(a));
    if (link_between(a, b)) {
        throw std::invalid_argument("duplicate link " + std::to_string(a) + "-" + std::to_string(b));
    }
    if (bw < 0) throw std::invalid_argument("negative bandwidth");
    SubstrateLink l;
    l.id = static_cast<LinkId>(links_.size());
    l.u = std::min(a, b);
    l.v = std::max(a, b);
    l.bw_capacity = bw;
    l.bw_residual = bw;
    l.kind = node(a).domain == node(b).domain ? LinkKind::intra_domain : LinkKind::inter_domain;
    links_.push_back(l);

    auto insert_sorted = [](std::vector<Adjacency>& list, Adjacency entry) {
        auto pos = std::lower_bound(list.begin(), list.end(), entry.neighbor,
                                    [](const Adjacency& x, NodeId id) { return x.neighbor < id; });
        list.insert(pos, entry);
    };
    insert_sorted(adjacency_[static_cast<std::size_t>(a)], {b, l.id});
    insert_sorted(adjacency_[static_cast<std::size_t>(b)], {a, l.id});
    return l.id;
}

std::optional<LinkId> SubstrateNetwork::link_between(NodeId a, NodeId b) const {
    if (a < 0 || a >= static_cast<NodeId>(adjacency_.size())) return std::nullopt;
    const auto& list = adjacency_[static_cast<std::size_t>(a)];
    auto pos = std::lower_bound(list.begin(), list.end(), b,
                                [](const Adjacency& x, NodeId id) { return x.neighbor < id; });
    if (pos != list.end() && pos->neighbor == b) return pos->link;
    return std::nullopt;
}

std::vector<NodeId> SubstrateNetwork::domain_nodes(DomainId domain) const {
    std::vector<NodeId> out;
    for (const auto& n : nodes_) {
        if (n.domain == domain) out.push_back(n.id);
    }
    return out;
}

bool SubstrateNetwork::is_boundary(NodeId id) const {
    for (const auto& adj : neighbors(id)) {
        if (link(adj.link).kind == LinkKind::inter_domain) return true;
    }
    return false;
}

void SubstrateNetwork::refresh_boundary_hops() {
    const auto hops = compute_boundary_hops(*this);
    for (std::size_t i = 0; i < nodes_.size(); ++i) nodes_[i].hop_to_boundary = hops[i];
}

std::vector<int> SubstrateNetwork::bw_residuals() const {
    std::vector<int> out;
    out.reserve(links_.size());
    for (const auto& l : links_) out.push_back(l.bw_residual);
    return out;
}

namespace {

struct Debits {
    std::map<NodeId, long long> cpu;
    std::map<LinkId, long long> bw;
};

Debits collect_debits(const SubstrateNetwork& net, const Vnr& vnr, const Embedding& emb) {
    if (emb.node_map.size() != vnr.nodes.size() || emb.link_map.size() != vnr.links.size()) {
        throw std::invalid_argument("embedding shape does not match request " + std::to_string(vnr.id));
    }
    Debits d;
    for (std::size_t i = 0; i < vnr.nodes.size(); ++i) {
        const NodeId host = emb.node_map[i];
        if (host < 0 || static_cast<std::size_t>(host) >= net.node_count()) {
            throw std::invalid_argument("embedding references unknown substrate node");
        }
        d.cpu[host] += vnr.nodes[i].cpu_demand;
    }
    for (std::size_t j = 0; j < vnr.links.size(); ++j) {
        for (LinkId l : emb.link_map[j].links) {
            if (l < 0 || static_cast<std::size_t>(l) >= net.link_count()) {
                throw std::invalid_argument("embedding references unknown substrate link");
            }
            d.bw[l] += vnr.links[j].bw_demand;
        }
    }
    return d;
}

} // namespace

void SubstrateNetwork::allocate(const Vnr& vnr, const Embedding& emb) {
    if (active_.contains(emb.vnr_id)) {
        throw InsufficientResources("request " + std::to_string(emb.vnr_id) + " is already allocated");
    }
    const Debits d = collect_debits(*this, vnr, emb);
    for (const auto& [id, amount] : d.cpu) {
        if (nodes_[static_cast<std::size_t>(id)].cpu_residual < amount) {
            throw InsufficientResources("cpu residual of node " + std::to_string(id) + " would go negative");
        }
    }
    for (const auto& [id, amount] : d.bw) {
        if (links_[static_cast<std::size_t>(id)].bw_residual < amount) {
            throw InsufficientResources("bandwidth residual of link " + std::to_string(id) + " would go negative");
        }
    }
    for (const auto& [id, amount] : d.cpu) nodes_[static_cast<std::size_t>(id)].cpu_residual -= static_cast<int>(amount);
    for (const auto& [id, amount] : d.bw) links_[static_cast<std::size_t>(id)].bw_residual -= static_cast<int>(amount);
    active_.insert(emb.vnr_id);
}

void SubstrateNetwork::release(const Vnr& vnr, const Embedding& emb) {
    if (!active_.contains(emb.vnr_id)) {
        throw DoubleRelease("request " + std::to_string(emb.vnr_id) + " is not active");
    }
    const Debits d = collect_debits(*this, vnr, emb);
    for (const auto& [id, amount] : d.cpu) {
        const auto& n = nodes_[static_cast<std::size_t>(id)];
        if (n.cpu_residual + amount > n.cpu_capacity) {
            throw InternalConsistencyError("release would push cpu residual of node " + std::to_string(id) +
                                           " above capacity");
        }
    }
    for (const auto& [id, amount] : d.bw) {
        const auto& l = links_[static_cast<std::size_t>(id)];
        if (l.bw_residual + amount > l.bw_capacity) {
            throw InternalConsistencyError("release would push bandwidth residual of link " + std::to_string(id) +
                                           " above capacity");
        }
    }
    for (const auto& [id, amount] : d.cpu) nodes_[static_cast<std::size_t>(id)].cpu_residual += static_cast<int>(amount);
    for (const auto& [id, amount] : d.bw) links_[static_cast<std::size_t>(id)].bw_residual += static_cast<int>(amount);
    active_.erase(emb.vnr_id);
}

std::uint64_t SubstrateNetwork::state_hash() const {
    // FNV-1a over residuals in id order.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xffU;
            h *= 0x100000001b3ULL;
        }
    };
    for (const auto& n : nodes_) mix(static_cast<std::uint64_t>(n.cpu_residual));
    for (const auto& l : links_) mix(static_cast<std::uint64_t>(l.bw_residual));
    return h;
}

bool SubstrateNetwork::pristine() const {
    return std::all_of(nodes_.begin(), nodes_.end(), [](const auto& n) { return n.cpu_residual == n.cpu_capacity; }) &&
           std::all_of(links_.begin(), links_.end(), [](const auto& l) { return l.bw_residual == l.bw_capacity; });
}

std::vector<int> compute_boundary_hops(const SubstrateNetwork& net) {
    constexpr int kUnreached = std::numeric_limits<int>::max();
    std::vector<int> hops(net.node_count(), kUnreached);
    std::deque<NodeId> frontier;
    std::vector<bool> has_boundary(static_cast<std::size_t>(net.domain_count()), false);
    std::vector<bool> populated(static_cast<std::size_t>(net.domain_count()), false);
    for (const auto& n : net.nodes()) {
        populated[static_cast<std::size_t>(n.domain)] = true;
        if (net.is_boundary(n.id)) {
            hops[static_cast<std::size_t>(n.id)] = 0;
            has_boundary[static_cast<std::size_t>(n.domain)] = true;
            frontier.push_back(n.id);
        }
    }
    for (int d = 0; d < net.domain_count(); ++d) {
        if (populated[static_cast<std::size_t>(d)] && !has_boundary[static_cast<std::size_t>(d)]) throw NoBoundaryNode(d);
    }
    // Multi-source BFS restricted to intra-domain links.
    while (!frontier.empty()) {
        const NodeId cur = frontier.front();
        frontier.pop_front();
        for (const auto& adj : net.neighbors(cur)) {
            if (net.link(adj.link).kind != LinkKind::intra_domain) continue;
            auto& h = hops[static_cast<std::size_t>(adj.neighbor)];
            if (h == kUnreached) {
                h = hops[static_cast<std::size_t>(cur)] + 1;
                frontier.push_back(adj.neighbor);
            }
        }
    }
    for (const auto& n : net.nodes()) {
        if (hops[static_cast<std::size_t>(n.id)] == kUnreached) throw NoBoundaryNode(n.domain);
    }
    return hops;
}

} // namespace stec
