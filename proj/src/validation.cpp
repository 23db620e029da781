#include "stec/validation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace stec {

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::malformed: return "malformed";
    case ViolationKind::cpu: return "cpu";
    case ViolationKind::injectivity: return "injectivity";
    case ViolationKind::candidate_domain: return "candidate-domain";
    case ViolationKind::bandwidth: return "bandwidth";
    case ViolationKind::loop: return "loop";
    case ViolationKind::single_path: return "single-path";
    case ViolationKind::security_forward: return "security-forward";
    case ViolationKind::security_backward: return "security-backward";
    }
    return "unknown";
}

namespace {

bool valid_node(const SubstrateNetwork& net, NodeId id) {
    return id >= 0 && static_cast<std::size_t>(id) < net.node_count();
}

std::string vn(std::size_t i) { return "virtual node " + std::to_string(i); }

} // namespace

std::vector<Violation> validate_node_mapping(const SubstrateNetwork& net, const Vnr& vnr,
                                             const std::vector<NodeId>& node_map) {
    std::vector<Violation> out;
    if (node_map.size() != vnr.nodes.size()) {
        out.push_back({ViolationKind::malformed, "node map has " + std::to_string(node_map.size()) +
                                                     " entries for " + std::to_string(vnr.nodes.size()) + " nodes"});
        return out;
    }
    std::map<NodeId, std::size_t> first_host;
    for (std::size_t i = 0; i < node_map.size(); ++i) {
        const NodeId host = node_map[i];
        if (!valid_node(net, host)) {
            out.push_back({ViolationKind::malformed, vn(i) + " mapped to unknown node " + std::to_string(host)});
            continue;
        }
        const auto& v = vnr.nodes[i];
        const auto& s = net.node(host);
        if (s.cpu_residual < v.cpu_demand) {
            out.push_back({ViolationKind::cpu, vn(i) + " demands " + std::to_string(v.cpu_demand) + " cpu, node " +
                                                   std::to_string(host) + " has " + std::to_string(s.cpu_residual)});
        }
        if (auto [it, fresh] = first_host.emplace(host, i); !fresh) {
            out.push_back({ViolationKind::injectivity,
                           vn(i) + " shares node " + std::to_string(host) + " with " + vn(it->second)});
        }
        if (!std::binary_search(v.cd.begin(), v.cd.end(), s.domain)) {
            out.push_back({ViolationKind::candidate_domain,
                           vn(i) + " placed in domain " + std::to_string(s.domain) + " outside its candidates"});
        }
        if (s.ssd > v.vsl) {
            out.push_back({ViolationKind::security_forward, "node " + std::to_string(host) + " ssd " +
                                                                std::to_string(s.ssd) + " exceeds vsl " +
                                                                std::to_string(v.vsl) + " of " + vn(i)});
        }
        if (v.vsd > s.ssl) {
            out.push_back({ViolationKind::security_backward, vn(i) + " vsd " + std::to_string(v.vsd) +
                                                                 " exceeds ssl " + std::to_string(s.ssl) +
                                                                 " of node " + std::to_string(host)});
        }
    }
    return out;
}

std::vector<Violation> validate_embedding(const SubstrateNetwork& net, const Vnr& vnr, const Embedding& emb) {
    auto out = validate_node_mapping(net, vnr, emb.node_map);
    if (!out.empty() && out.front().kind == ViolationKind::malformed && emb.node_map.size() != vnr.nodes.size()) {
        return out;
    }
    if (emb.link_map.size() != vnr.links.size()) {
        out.push_back({ViolationKind::malformed, "link map has " + std::to_string(emb.link_map.size()) +
                                                     " entries for " + std::to_string(vnr.links.size()) + " links"});
        return out;
    }

    std::map<LinkId, long long> load;
    for (std::size_t j = 0; j < vnr.links.size(); ++j) {
        const auto& vl = vnr.links[j];
        const auto& path = emb.link_map[j];
        const std::string tag = "virtual link " + std::to_string(j);
        const NodeId src = emb.node_map[static_cast<std::size_t>(vl.u)];
        const NodeId dst = emb.node_map[static_cast<std::size_t>(vl.v)];
        if (src == dst) {
            out.push_back({ViolationKind::loop, tag + " has both ends on node " + std::to_string(src)});
            continue;
        }
        if (path.links.empty() || path.nodes.size() != path.links.size() + 1) {
            out.push_back({ViolationKind::single_path, tag + " has no well-formed path"});
            continue;
        }
        if (path.nodes.front() != src || path.nodes.back() != dst) {
            out.push_back({ViolationKind::single_path, tag + " path does not join its endpoints' hosts"});
            continue;
        }
        std::set<NodeId> seen(path.nodes.begin(), path.nodes.end());
        if (seen.size() != path.nodes.size()) {
            out.push_back({ViolationKind::single_path, tag + " path revisits a node"});
            continue;
        }
        bool contiguous = true;
        for (std::size_t h = 0; h < path.links.size(); ++h) {
            const LinkId l = path.links[h];
            if (l < 0 || static_cast<std::size_t>(l) >= net.link_count()) {
                contiguous = false;
                break;
            }
            const auto& sl = net.link(l);
            const NodeId a = path.nodes[h];
            const NodeId b = path.nodes[h + 1];
            if (!((sl.u == a && sl.v == b) || (sl.u == b && sl.v == a))) {
                contiguous = false;
                break;
            }
        }
        if (!contiguous) {
            out.push_back({ViolationKind::single_path, tag + " path steps over a missing link"});
            continue;
        }
        for (LinkId l : path.links) load[l] += vl.bw_demand;
    }
    for (const auto& [l, amount] : load) {
        const auto& sl = net.link(l);
        if (amount > sl.bw_residual) {
            out.push_back({ViolationKind::bandwidth, "link " + std::to_string(l) + " carries " +
                                                         std::to_string(amount) + " over residual " +
                                                         std::to_string(sl.bw_residual)});
        }
    }
    return out;
}

} // namespace stec
