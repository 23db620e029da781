#include "stec/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace stec {

RunSummary summarize(const SimulationTrace& trace, std::uint64_t seed, const SimulationOptions& sim,
                     double warmup_fraction) {
    RunSummary s;
    s.strategy = trace.strategy;
    s.seed = seed;
    s.arrivals = trace.arrivals;
    s.accepted = trace.accepted;
    auto steady_for = [&](CostMode mode) {
        const auto rows = windowed_series(trace.events, trace.horizon, sim.window_width, sim.weights, mode);
        return steady_state(rows, trace.horizon, warmup_fraction);
    };
    s.steady_literal = steady_for(CostMode::literal);
    s.steady_hop = steady_for(CostMode::hop_weighted);
    s.steady = sim.cost_mode == CostMode::literal ? s.steady_literal : s.steady_hop;
    s.conserved = trace.final_state.pristine() && trace.final_state.active().empty();
    return s;
}

std::vector<RunSummary> run_comparison(const CompareRequest& req) {
    struct Task {
        std::size_t strategy;
        std::size_t seed;
    };
    std::vector<Task> tasks;
    for (std::size_t a = 0; a < req.strategies.size(); ++a) {
        for (std::size_t b = 0; b < req.seeds.size(); ++b) tasks.push_back({a, b});
    }
    for (const auto& name : req.strategies) make_strategy(name); // reject unknown names up front
    if (!req.generator && (!req.substrate || !req.vnrs)) {
        throw std::invalid_argument("comparison needs a generator config or a substrate and workload");
    }

    std::vector<RunSummary> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                const auto& task = tasks[i];
                const std::uint64_t seed = req.seeds[task.seed];
                StrategyOptions so = req.strategy;
                so.seed = seed;
                auto strategy = make_strategy(req.strategies[task.strategy], so);
                SimulationTrace trace;
                if (req.generator) {
                    GeneratorConfig g = *req.generator;
                    g.seed = seed;
                    auto vnrs = generate_vnr_stream(g, req.sim.horizon);
                    trace = run_simulation(generate_substrate(g), vnrs, *strategy, req.sim);
                } else {
                    trace = run_simulation(*req.substrate, *req.vnrs, *strategy, req.sim);
                }
                results[i] = summarize(trace, seed, req.sim, req.warmup_fraction);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = tasks.size();
            }
        }
    };

    unsigned n = req.threads ? req.threads : std::max(1u, std::thread::hardware_concurrency());
    n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

MeanStd mean_std(const std::vector<double>& xs) {
    MeanStd out;
    out.count = static_cast<int>(xs.size());
    if (xs.empty()) return out;
    double sum = 0.0;
    for (double x : xs) sum += x;
    out.mean = sum / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double sq = 0.0;
        for (double x : xs) sq += (x - out.mean) * (x - out.mean);
        out.stddev = std::sqrt(sq / static_cast<double>(xs.size() - 1));
    }
    return out;
}

namespace {

using Getter = std::optional<double> (*)(const RunSummary&);

// Empty cells where there is nothing to average, or a single sample for the spread.
std::string mean_cell(const MeanStd& ms) { return ms.count > 0 ? format_number(ms.mean) : std::string(); }
std::string stddev_cell(const MeanStd& ms) { return ms.count > 1 ? format_number(ms.stddev) : std::string(); }

struct MetricDef {
    const char* name;
    Getter get;
};

const MetricDef kMetrics[] = {
    {"acceptance", [](const RunSummary& r) { return r.steady.acceptance; }},
    {"revenue", [](const RunSummary& r) { return r.steady.avg_revenue; }},
    {"cost", [](const RunSummary& r) { return r.steady.avg_cost; }},
    {"rc_ratio", [](const RunSummary& r) { return r.steady.rc_ratio; }},
};

std::vector<double> collect(const std::vector<RunSummary>& runs, const std::string& strategy, Getter get) {
    std::vector<double> xs;
    for (const auto& r : runs) {
        if (r.strategy != strategy) continue;
        if (auto v = get(r)) xs.push_back(*v);
    }
    return xs;
}

} // namespace

std::vector<MetricTable> metric_tables(const std::vector<RunSummary>& runs, const std::vector<std::string>& strategies,
                                       const std::vector<std::uint64_t>& seeds) {
    std::vector<MetricTable> out;
    for (const auto& m : kMetrics) {
        std::string csv = "strategy,mean,stddev";
        for (auto s : seeds) csv += ",seed_" + std::to_string(s);
        csv += '\n';
        for (const auto& name : strategies) {
            const auto ms = mean_std(collect(runs, name, m.get));
            csv += name + ',' + mean_cell(ms) + ',' + stddev_cell(ms);
            for (auto s : seeds) {
                csv += ',';
                for (const auto& r : runs) {
                    if (r.strategy == name && r.seed == s) {
                        if (auto v = m.get(r)) csv += format_number(*v);
                    }
                }
            }
            csv += '\n';
        }
        out.push_back({m.name, std::move(csv)});
    }
    return out;
}

std::string summary_table(const std::vector<RunSummary>& runs, const std::vector<std::string>& strategies) {
    std::string csv = "strategy,runs";
    for (const auto& m : kMetrics) csv += std::string(",") + m.name + "_mean," + m.name + "_stddev";
    csv += ",rc_ratio_literal_mean,rc_ratio_hop_mean\n";
    for (const auto& name : strategies) {
        csv += name + ',' + std::to_string(std::count_if(runs.begin(), runs.end(), [&](const auto& r) { return r.strategy == name; }));
        for (const auto& m : kMetrics) {
            const auto ms = mean_std(collect(runs, name, m.get));
            csv += ',' + mean_cell(ms) + ',' + stddev_cell(ms);
        }
        const auto lit = mean_std(collect(runs, name, [](const RunSummary& r) { return r.steady_literal.rc_ratio; }));
        const auto hop = mean_std(collect(runs, name, [](const RunSummary& r) { return r.steady_hop.rc_ratio; }));
        csv += ',' + mean_cell(lit) + ',' + mean_cell(hop) + '\n';
    }
    return csv;
}

} // namespace stec
