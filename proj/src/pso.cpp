#include "stec/pso.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "stec/errors.hpp"
#include "stec/metrics.hpp"
#include "stec/routing.hpp"

namespace stec {

void PsoConfig::validate() const {
    if (particle_count <= 0) throw std::invalid_argument("particle_count must be positive");
    if (iterations < 0) throw std::invalid_argument("iterations must be non-negative");
    if (!(c1 > 0.0) || !(c2 > 0.0)) throw std::invalid_argument("c1 and c2 must be positive");
    if (inertia_start < 0.0 || inertia_end < 0.0) throw std::invalid_argument("inertia must be non-negative");
    node_mapping.weights.validate();
}

double PsoConfig::inertia(int t) const {
    if (iterations <= 1) return inertia_start;
    return inertia_start - (inertia_start - inertia_end) * static_cast<double>(t) / static_cast<double>(iterations - 1);
}

Velocity position_subtract(const Position& a, const Position& b) {
    if (a.size() != b.size()) throw LengthMismatch("positions differ in length");
    Velocity out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] == b[k] ? 1 : 0;
    return out;
}

Velocity velocity_update(const Velocity& v, const Position& x, const Position& pbest, const Position& gbest,
                         double inertia, double r1, double r2, double c1, double c2) {
    if (v.size() != x.size()) throw LengthMismatch("velocity and position differ in length");
    const auto to_pbest = position_subtract(pbest, x);
    const auto to_gbest = position_subtract(gbest, x);
    Velocity out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        const double s = inertia * v[k] + r1 * c1 * to_pbest[k] + r2 * c2 * to_gbest[k];
        out[k] = std::floor(s + 0.5) >= 1.0 ? 1 : 0;
    }
    return out;
}

Velocity velocity_update(const Particle& p, const Position& gbest, double inertia, double r1, double r2, double c1,
                         double c2) {
    return velocity_update(p.velocity, p.position, p.pbest_position, gbest, inertia, r1, r2, c1, c2);
}

std::optional<Position> random_injective_position(const CandidateSets& candidates, Rng& rng, int attempts) {
    std::vector<NodeId> pool;
    for (int a = 0; a < attempts; ++a) {
        Position pos;
        pos.reserve(candidates.size());
        std::set<NodeId> used;
        bool ok = true;
        for (const auto& cands : candidates) {
            pool.clear();
            for (NodeId c : cands) {
                if (!used.contains(c)) pool.push_back(c);
            }
            if (pool.empty()) {
                ok = false;
                break;
            }
            const NodeId pick = pool[rng.index(pool.size())];
            pos.push_back(pick);
            used.insert(pick);
        }
        if (ok) return pos;
    }
    return std::nullopt;
}

namespace {

bool augment(const CandidateSets& candidates, std::size_t k, std::map<NodeId, std::size_t>& owner,
             std::set<NodeId>& visited) {
    for (NodeId c : candidates[k]) {
        if (!visited.insert(c).second) continue;
        auto it = owner.find(c);
        if (it == owner.end() || augment(candidates, it->second, owner, visited)) {
            owner[c] = k;
            return true;
        }
    }
    return false;
}

/// Any injective assignment, found by bipartite matching (augmenting paths).
std::optional<Position> first_injective_position(const CandidateSets& candidates) {
    std::map<NodeId, std::size_t> owner;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        std::set<NodeId> visited;
        if (!augment(candidates, k, owner, visited)) return std::nullopt;
    }
    Position pos(candidates.size(), -1);
    for (const auto& [node, k] : owner) pos[k] = node;
    return pos;
}

Position draw_position(const CandidateSets& candidates, Rng& rng) {
    if (auto pos = random_injective_position(candidates, rng)) return *pos;
    if (auto pos = first_injective_position(candidates)) return *pos;
    throw EmbeddingInfeasible("no injective assignment respects the candidate sets");
}

} // namespace

Position position_update(const Position& x, const Velocity& v_new, const CandidateSets& candidates, Rng& rng) {
    if (x.size() != v_new.size() || x.size() != candidates.size()) throw LengthMismatch("position_update shapes differ");
    Position next = x;
    std::set<NodeId> used;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (v_new[k]) used.insert(x[k]);
    }
    std::vector<NodeId> pool;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (v_new[k]) continue;
        pool.clear();
        for (NodeId c : candidates[k]) {
            if (!used.contains(c)) pool.push_back(c);
        }
        if (pool.empty()) return draw_position(candidates, rng);
        next[k] = pool[rng.index(pool.size())];
        used.insert(next[k]);
    }
    return next;
}

double fitness(const Position& position, const Vnr& vnr, const SubstrateNetwork& net) {
    const auto routing = try_route_all_links(vnr, position, net);
    if (!routing) return kInfeasibleFitness;
    return static_cast<double>(vnr.total_cpu()) + static_cast<double>(routing->total_bw_cost);
}

PsoResult optimize_assignment(const Vnr& vnr, const SubstrateNetwork& net, const PsoConfig& cfg) {
    cfg.validate();
    CandidateSets candidates;
    candidates.reserve(vnr.nodes.size());
    for (const auto& v : vnr.nodes) {
        candidates.push_back(candidate_nodes(v, net));
        if (candidates.back().empty()) {
            throw EmbeddingInfeasible("virtual node " + std::to_string(v.id) + " has no candidate");
        }
    }

    // The network is fixed for the whole search, so fitness is a pure function of position.
    std::map<Position, double> memo;
    auto evaluate = [&](const Position& pos) {
        auto [it, fresh] = memo.try_emplace(pos, 0.0);
        if (fresh) it->second = fitness(pos, vnr, net);
        return it->second;
    };

    Rng rng(cfg.seed);
    std::vector<Particle> swarm(static_cast<std::size_t>(cfg.particle_count));
    for (std::size_t i = 0; i < swarm.size(); ++i) {
        auto& p = swarm[i];
        bool seeded = false;
        if (i == 0 && cfg.seed_with_node_mapping) {
            try {
                p.position = map_nodes(vnr, net, cfg.node_mapping).assignment;
                seeded = true;
            } catch (const NodeMappingInfeasible&) {
            }
        }
        if (!seeded) p.position = draw_position(candidates, rng);
        p.velocity.resize(p.position.size());
        for (auto& bit : p.velocity) bit = rng.bernoulli(0.5) ? 1 : 0;
        p.current_fitness = evaluate(p.position);
        p.pbest_position = p.position;
        p.pbest_fitness = p.current_fitness;
    }

    PsoResult result;
    result.gbest = swarm.front().pbest_position;
    result.gbest_fitness = swarm.front().pbest_fitness;
    for (const auto& p : swarm) {
        if (p.pbest_fitness < result.gbest_fitness) {
            result.gbest = p.pbest_position;
            result.gbest_fitness = p.pbest_fitness;
        }
    }
    result.gbest_history.push_back(result.gbest_fitness);

    for (int t = 0; t < cfg.iterations; ++t) {
        const double w = cfg.inertia(t);
        for (auto& p : swarm) {
            const double r1 = rng.uniform01();
            const double r2 = rng.uniform01();
            p.velocity = velocity_update(p, result.gbest, w, r1, r2, cfg.c1, cfg.c2);
            p.position = position_update(p.position, p.velocity, candidates, rng);
            p.current_fitness = evaluate(p.position);
            if (p.current_fitness < p.pbest_fitness) {
                p.pbest_position = p.position;
                p.pbest_fitness = p.current_fitness;
            }
            if (p.pbest_fitness < result.gbest_fitness) {
                result.gbest = p.pbest_position;
                result.gbest_fitness = p.pbest_fitness;
            }
        }
        result.gbest_history.push_back(result.gbest_fitness);
    }

    if (result.gbest_fitness == kInfeasibleFitness) {
        throw EmbeddingInfeasible("no particle found a routable assignment");
    }
    return result;
}

Embedding optimize(const Vnr& vnr, const SubstrateNetwork& net, const PsoConfig& cfg) {
    auto best = optimize_assignment(vnr, net, cfg);
    auto routing = route_all_links(vnr, best.gbest, net);
    return make_embedding(vnr, std::move(best.gbest), std::move(routing));
}

} // namespace stec
