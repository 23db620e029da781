#pragma once

#include <string>
#include <vector>

#include "stec/metrics.hpp"
#include "stec/network.hpp"
#include "stec/strategy.hpp"
#include "stec/trace.hpp"

namespace stec {

struct SimulationOptions {
    double horizon = 50000.0;
    double window_width = 2000.0;
    RevenueWeights weights;
    CostMode cost_mode = CostMode::hop_weighted;
    /// Re-validate one acceptance in every `validate_every` (1 = all, 0 = never).
    int validate_every = 1;
    /// Recompute all residuals from the active set every `audit_every` events (0 = never).
    int audit_every = 0;
    /// Compare state hashes around every rejected arrival.
    bool check_rejections = true;
};

struct SimulationTrace {
    std::string strategy;
    double horizon = 0.0;
    std::vector<TraceEvent> events;
    SubstrateNetwork final_state;
    /// Windows aggregated online while the run progressed.
    std::vector<MetricWindow> streaming_windows;
    long long arrivals = 0;
    long long accepted = 0;
};

/// Processes arrivals and departures in time order (departures first on
/// equal timestamps, then by request id). Each arrival is embedded by the
/// strategy or rejected; each accepted request is released at
/// arrival + lifetime, including departures past the horizon. Arrivals at
/// or after the horizon are ignored. Throws InternalConsistencyError when
/// a shadow check disagrees with the bookkeeping.
SimulationTrace run_simulation(SubstrateNetwork net, const std::vector<Vnr>& vnrs, EmbeddingStrategy& strategy,
                               const SimulationOptions& opts);

/// Recomputes every residual from capacities minus the active embeddings and
/// throws InternalConsistencyError on mismatch.
void audit_residuals(const SubstrateNetwork& net, const std::vector<const Vnr*>& vnrs,
                     const std::vector<const Embedding*>& embeddings);

/// One JSON object per line: time, kind, vnr_id, outcome, revenue, cost.
std::string trace_to_ndjson(const SimulationTrace& trace);

} // namespace stec
