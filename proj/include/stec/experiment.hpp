#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stec/metrics.hpp"
#include "stec/simulator.hpp"
#include "stec/strategy.hpp"
#include "stec/workload.hpp"

namespace stec {

/// Steady-state figures of one (strategy, seed) run.
struct RunSummary {
    std::string strategy;
    std::uint64_t seed = 0;
    long long arrivals = 0;
    long long accepted = 0;
    SteadyState steady;         ///< under the run's cost mode
    SteadyState steady_literal; ///< cost counted without path lengths
    SteadyState steady_hop;     ///< cost weighted by path length
    bool conserved = false;     ///< residuals back to capacity after the last departure
};

RunSummary summarize(const SimulationTrace& trace, std::uint64_t seed, const SimulationOptions& sim,
                     double warmup_fraction);

struct CompareRequest {
    std::vector<std::string> strategies;
    std::vector<std::uint64_t> seeds;
    SimulationOptions sim;
    StrategyOptions strategy;
    double warmup_fraction = 0.2;
    /// When set, every seed regenerates substrate and workload from this
    /// config (with the seed substituted). Otherwise `substrate`/`vnrs` are
    /// shared and seeds only drive the strategies.
    std::optional<GeneratorConfig> generator;
    const SubstrateNetwork* substrate = nullptr;
    const std::vector<Vnr>* vnrs = nullptr;
    unsigned threads = 0; ///< 0 = hardware concurrency
};

/// Runs strategies x seeds, concurrently, and returns summaries ordered by
/// strategy then seed regardless of scheduling.
std::vector<RunSummary> run_comparison(const CompareRequest& req);

struct MetricTable {
    std::string metric; ///< acceptance, revenue, cost or rc_ratio
    std::string csv;
};

/// One table per metric: strategy,mean,stddev,seed_<s>... rows.
std::vector<MetricTable> metric_tables(const std::vector<RunSummary>& runs, const std::vector<std::string>& strategies,
                                       const std::vector<std::uint64_t>& seeds);

/// One row per strategy with mean/stddev of every metric, plus the
/// revenue/cost ratio under both cost modes.
std::string summary_table(const std::vector<RunSummary>& runs, const std::vector<std::string>& strategies);

struct MeanStd {
    double mean = 0.0;
    double stddev = 0.0;
    int count = 0;
};
MeanStd mean_std(const std::vector<double>& xs);

} // namespace stec
