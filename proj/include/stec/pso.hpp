#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "stec/network.hpp"
#include "stec/node_mapping.hpp"
#include "stec/random.hpp"

namespace stec {

/// Candidate node per virtual node.
using Position = std::vector<NodeId>;
/// Per-component keep (1) / re-select (0) mask.
using Velocity = std::vector<std::uint8_t>;
/// One candidate list per virtual node, ascending.
using CandidateSets = std::vector<std::vector<NodeId>>;

inline constexpr double kInfeasibleFitness = std::numeric_limits<double>::infinity();

struct Particle {
    Position position;
    Velocity velocity;
    Position pbest_position;
    double pbest_fitness = kInfeasibleFitness;
    double current_fitness = kInfeasibleFitness;
};

struct PsoConfig {
    int particle_count = 10;
    int iterations = 50;
    double inertia_start = 0.9;
    double inertia_end = 0.1;
    double c1 = 1.5;
    double c2 = 1.5;
    std::uint64_t seed = 1;
    /// Seed particle 0 with map_nodes() when it succeeds.
    bool seed_with_node_mapping = true;
    NodeMappingOptions node_mapping;

    void validate() const;
    /// Inertia for iteration t, decreasing linearly from inertia_start to inertia_end.
    double inertia(int t) const;
};

/// Component-wise equality indicator: 1 where a and b agree.
Velocity position_subtract(const Position& a, const Position& b);

/// s_k = w*v_k + r1*c1*(pbest - x)_k + r2*c2*(gbest - x)_k; the new bit is 1
/// when s_k rounded half-up is at least 1, i.e. when s_k >= 0.5.
Velocity velocity_update(const Velocity& v, const Position& x, const Position& pbest, const Position& gbest,
                         double inertia, double r1, double r2, double c1, double c2);
Velocity velocity_update(const Particle& p, const Position& gbest, double inertia, double r1, double r2, double c1,
                         double c2);

/// Uniform injective draw, components in ascending order. Gives up after
/// `attempts` dead ends.
std::optional<Position> random_injective_position(const CandidateSets& candidates, Rng& rng, int attempts = 64);

/// Keeps components whose bit is 1 and re-draws the rest uniformly from
/// their candidates minus nodes already taken. If a pool runs dry, the whole
/// position is re-drawn.
Position position_update(const Position& x, const Velocity& v_new, const CandidateSets& candidates, Rng& rng);

/// sum(cpu) + sum(bw * hops) after routing every virtual link, or
/// kInfeasibleFitness when routing fails.
double fitness(const Position& position, const Vnr& vnr, const SubstrateNetwork& net);

struct PsoResult {
    Position gbest;
    double gbest_fitness = kInfeasibleFitness;
    /// gbest fitness after initialisation (entry 0) and after each iteration.
    std::vector<double> gbest_history;
};

/// Runs the swarm and returns the best assignment found. Throws
/// EmbeddingInfeasible when some virtual node has no candidate, no injective
/// assignment exists, or no particle ever reaches a finite fitness.
PsoResult optimize_assignment(const Vnr& vnr, const SubstrateNetwork& net, const PsoConfig& cfg);

/// optimize_assignment() followed by routing of the best assignment.
Embedding optimize(const Vnr& vnr, const SubstrateNetwork& net, const PsoConfig& cfg);

} // namespace stec
