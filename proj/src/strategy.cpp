#include "stec/strategy.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "stec/errors.hpp"
#include "stec/metrics.hpp"
#include "stec/random.hpp"
#include "stec/routing.hpp"

namespace stec {

Embedding greedy_embed(const Vnr& vnr, const SubstrateNetwork& net) {
    std::vector<int> order(vnr.nodes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return vnr.nodes[static_cast<std::size_t>(a)].cpu_demand > vnr.nodes[static_cast<std::size_t>(b)].cpu_demand;
    });
    std::vector<NodeId> assignment(vnr.nodes.size(), -1);
    std::set<NodeId> used;
    for (int vi : order) {
        const auto& v = vnr.nodes[static_cast<std::size_t>(vi)];
        std::optional<NodeId> best;
        for (NodeId c : candidate_nodes(v, net)) {
            if (used.contains(c)) continue;
            if (!best || net.node(c).cpu_residual > net.node(*best).cpu_residual) best = c;
        }
        if (!best) throw EmbeddingInfeasible("greedy: virtual node " + std::to_string(v.id) + " has no free candidate");
        assignment[static_cast<std::size_t>(vi)] = *best;
        used.insert(*best);
    }
    auto routing = try_route_all_links(vnr, assignment, net);
    if (!routing) throw EmbeddingInfeasible("greedy: link routing failed");
    return make_embedding(vnr, std::move(assignment), std::move(*routing));
}

Embedding random_embed(const Vnr& vnr, const SubstrateNetwork& net, std::uint64_t seed, int retries) {
    CandidateSets candidates;
    for (const auto& v : vnr.nodes) {
        candidates.push_back(candidate_nodes(v, net));
        if (candidates.back().empty()) {
            throw EmbeddingInfeasible("random: virtual node " + std::to_string(v.id) + " has no candidate");
        }
    }
    Rng rng(seed);
    for (int attempt = 0; attempt < retries; ++attempt) {
        auto pos = random_injective_position(candidates, rng, 1);
        if (!pos) continue;
        if (auto routing = try_route_all_links(vnr, *pos, net)) {
            return make_embedding(vnr, std::move(*pos), std::move(*routing));
        }
    }
    throw EmbeddingInfeasible("random: no routable draw within " + std::to_string(retries) + " attempts");
}

Embedding stec_iot_embed(const Vnr& vnr, const SubstrateNetwork& net, const PsoConfig& cfg) {
    return optimize(vnr, net, cfg);
}

namespace {

class StecIotStrategy final : public EmbeddingStrategy {
public:
    explicit StecIotStrategy(StrategyOptions opts) : opts_(std::move(opts)) {}
    std::string name() const override { return "stec-iot"; }
    Embedding embed(const Vnr& vnr, const SubstrateNetwork& net) override {
        PsoConfig cfg = opts_.pso;
        cfg.seed = derive_seed(derive_seed(opts_.seed, streams::kStrategy), static_cast<std::uint64_t>(vnr.id));
        return stec_iot_embed(vnr, net, cfg);
    }

private:
    StrategyOptions opts_;
};

class GreedyStrategy final : public EmbeddingStrategy {
public:
    std::string name() const override { return "greedy"; }
    Embedding embed(const Vnr& vnr, const SubstrateNetwork& net) override { return greedy_embed(vnr, net); }
};

class RandomStrategy final : public EmbeddingStrategy {
public:
    explicit RandomStrategy(std::uint64_t seed) : seed_(seed) {}
    std::string name() const override { return "random"; }
    Embedding embed(const Vnr& vnr, const SubstrateNetwork& net) override {
        return random_embed(vnr, net,
                            derive_seed(derive_seed(seed_, streams::kStrategy), static_cast<std::uint64_t>(vnr.id)));
    }

private:
    std::uint64_t seed_;
};

} // namespace

const std::vector<std::string>& strategy_names() {
    static const std::vector<std::string> names{"stec-iot", "greedy", "random"};
    return names;
}

std::unique_ptr<EmbeddingStrategy> make_strategy(const std::string& name, const StrategyOptions& opts) {
    if (name == "stec-iot") return std::make_unique<StecIotStrategy>(opts);
    if (name == "greedy") return std::make_unique<GreedyStrategy>();
    if (name == "random") return std::make_unique<RandomStrategy>(opts.seed);
    throw std::invalid_argument("unknown strategy '" + name + "'");
}

} // namespace stec
