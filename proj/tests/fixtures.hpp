#pragma once

// Small hand-built networks shared by the unit suites.

#include <initializer_list>
#include <utility>
#include <vector>

#include "stec/network.hpp"

namespace fixtures {

struct NodeSpec {
    int domain;
    int cpu;
    int ssl;
    int ssd;
};

struct LinkSpec {
    int u;
    int v;
    int bw;
};

inline stec::SubstrateNetwork make_net(std::initializer_list<NodeSpec> nodes, std::initializer_list<LinkSpec> links,
                                       bool hops = true) {
    stec::SubstrateNetwork net;
    for (const auto& n : nodes) net.add_node(n.domain, n.cpu, n.ssl, n.ssd);
    for (const auto& l : links) net.add_link(l.u, l.v, l.bw);
    if (hops) net.refresh_boundary_hops();
    return net;
}

inline stec::VirtualNode vnode(int id, int cpu, int vsd, int vsl, std::vector<int> cd) {
    stec::VirtualNode v;
    v.id = id;
    v.cpu_demand = cpu;
    v.vsd = vsd;
    v.vsl = vsl;
    v.cd = std::move(cd);
    return v;
}

inline stec::Vnr make_vnr(int id, std::vector<stec::VirtualNode> nodes, std::initializer_list<LinkSpec> links) {
    stec::Vnr r;
    r.id = id;
    r.nodes = std::move(nodes);
    for (const auto& l : links) {
        stec::VirtualLink vl;
        vl.id = static_cast<int>(r.links.size());
        vl.u = l.u;
        vl.v = l.v;
        vl.bw_demand = l.bw;
        r.links.push_back(vl);
    }
    r.lifetime = 10.0;
    return r;
}

/// Two domains of three nodes each, every node permissive (ssl 4, ssd 0).
///   domain 0: 0-1-2 path, domain 1: 3-4-5 path, inter-domain 2-3.
inline stec::SubstrateNetwork two_domain_line(int cpu = 50, int bw = 100) {
    return make_net({{0, cpu, 4, 0}, {0, cpu, 4, 0}, {0, cpu, 4, 0}, {1, cpu, 4, 0}, {1, cpu, 4, 0}, {1, cpu, 4, 0}},
                    {{0, 1, bw}, {1, 2, bw}, {2, 3, bw}, {3, 4, bw}, {4, 5, bw}});
}

} // namespace fixtures
