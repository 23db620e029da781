#pragma once

// Random toy embedding instances and an exhaustive search over them, shared
// by the PSO unit suite and the acceptance runner.

#include <algorithm>
#include <functional>

#include "stec/network.hpp"
#include "stec/node_mapping.hpp"
#include "stec/pso.hpp"
#include "stec/random.hpp"

namespace pso_oracle {

struct Instance {
    stec::SubstrateNetwork net;
    stec::Vnr vnr;
    stec::CandidateSets candidates;
};

/// Two domains of 4-5 nodes with tight link bandwidth, and a request of
/// `vnodes` nodes whose candidate sets hold at most 8 nodes. Returns an
/// instance where every virtual node has at least one candidate.
inline Instance make_instance(std::uint64_t seed, int vnodes) {
    stec::Rng rng(stec::derive_seed(seed, 77));
    for (;;) {
        Instance in;
        const int per_domain = static_cast<int>(rng.uniform_int(4, 5));
        for (int d = 0; d < 2; ++d)
            for (int i = 0; i < per_domain; ++i)
                in.net.add_node(d, static_cast<int>(rng.uniform_int(20, 60)), static_cast<int>(rng.uniform_int(1, 4)),
                                static_cast<int>(rng.uniform_int(0, 2)));
        for (int d = 0; d < 2; ++d) {
            const int base = d * per_domain;
            for (int i = 1; i < per_domain; ++i) in.net.add_link(base + i, base + static_cast<int>(rng.index(i)), 30);
            for (int a = 0; a < per_domain; ++a)
                for (int b = a + 1; b < per_domain; ++b)
                    if (!in.net.link_between(base + a, base + b) && rng.bernoulli(0.3))
                        in.net.add_link(base + a, base + b, static_cast<int>(rng.uniform_int(5, 30)));
        }
        in.net.add_link(static_cast<int>(rng.index(per_domain)), per_domain + static_cast<int>(rng.index(per_domain)),
                        static_cast<int>(rng.uniform_int(10, 30)));
        in.net.refresh_boundary_hops();

        in.vnr.id = 0;
        in.vnr.lifetime = 1.0;
        for (int i = 0; i < vnodes; ++i) {
            stec::VirtualNode v;
            v.id = i;
            v.cpu_demand = static_cast<int>(rng.uniform_int(1, 30));
            v.vsd = static_cast<int>(rng.uniform_int(0, 2));
            v.vsl = static_cast<int>(rng.uniform_int(1, 4));
            switch (rng.uniform_int(0, 2)) {
            case 0: v.cd = {0}; break;
            case 1: v.cd = {1}; break;
            default: v.cd = {0, 1}; break;
            }
            in.vnr.nodes.push_back(v);
        }
        for (int i = 1; i < vnodes; ++i) {
            in.vnr.links.push_back({static_cast<int>(in.vnr.links.size()), static_cast<int>(rng.index(i)), i,
                                    static_cast<int>(rng.uniform_int(1, 10))});
        }
        if (vnodes > 2 && rng.bernoulli(0.5)) {
            in.vnr.links.push_back({static_cast<int>(in.vnr.links.size()), 0, vnodes - 1,
                                    static_cast<int>(rng.uniform_int(1, 10))});
        }
        bool ok = true;
        for (const auto& v : in.vnr.nodes) {
            in.candidates.push_back(stec::candidate_nodes(v, in.net));
            const auto n = in.candidates.back().size();
            ok = ok && n >= 1 && n <= 8;
        }
        if (ok) return in;
    }
}

/// Minimum fitness over every injective candidate-respecting assignment
/// (+inf when none routes).
inline double brute_force_optimum(const Instance& in) {
    double best = stec::kInfeasibleFitness;
    stec::Position pos;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == in.candidates.size()) {
            best = std::min(best, stec::fitness(pos, in.vnr, in.net));
            return;
        }
        for (stec::NodeId c : in.candidates[k]) {
            if (std::find(pos.begin(), pos.end(), c) != pos.end()) continue;
            pos.push_back(c);
            rec(k + 1);
            pos.pop_back();
        }
    };
    rec(0);
    return best;
}

} // namespace pso_oracle
