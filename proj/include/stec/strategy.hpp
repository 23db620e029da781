#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "stec/network.hpp"
#include "stec/node_mapping.hpp"
#include "stec/pso.hpp"

namespace stec {

/// An embedding policy. embed() reads the network and either returns a
/// feasible Embedding or throws EmbeddingInfeasible; it never mutates.
class EmbeddingStrategy {
public:
    virtual ~EmbeddingStrategy() = default;
    virtual std::string name() const = 0;
    virtual Embedding embed(const Vnr& vnr, const SubstrateNetwork& net) = 0;
};

/// Largest-demand-first baseline: virtual nodes by descending cpu demand,
/// each on the unused candidate with the most residual cpu (ties by id),
/// then route_all_links(). Stands in for a greedy secure embedding; it is
/// an approximation, not a reimplementation of any published baseline.
Embedding greedy_embed(const Vnr& vnr, const SubstrateNetwork& net);

/// Uniform injective draw from the candidate sets, up to `retries` draws
/// before giving up. Deterministic for a given seed.
Embedding random_embed(const Vnr& vnr, const SubstrateNetwork& net, std::uint64_t seed, int retries = 10);

/// Node mapping followed by swarm search over joint placements.
Embedding stec_iot_embed(const Vnr& vnr, const SubstrateNetwork& net, const PsoConfig& cfg);

struct StrategyOptions {
    std::uint64_t seed = 1;
    PsoConfig pso;
};

/// Known names: "stec-iot", "greedy", "random". Per-request randomness is
/// derived from `opts.seed` and the request id. Throws std::invalid_argument
/// for an unknown name.
std::unique_ptr<EmbeddingStrategy> make_strategy(const std::string& name, const StrategyOptions& opts = {});

const std::vector<std::string>& strategy_names();

} // namespace stec
