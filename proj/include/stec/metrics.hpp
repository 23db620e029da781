#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stec/network.hpp"
#include "stec/routing.hpp"
#include "stec/trace.hpp"

namespace stec {

enum class CostMode { literal, hop_weighted };

CostMode parse_cost_mode(const std::string& text);
const char* to_string(CostMode mode);

struct RevenueWeights {
    double alpha = 0.5;
    double beta = 0.5;

    /// Throws InvalidWeights unless alpha, beta >= 0 and alpha + beta == 1.
    void validate() const;
};

struct MetricWindow {
    double t_start = 0.0;
    double t_end = 0.0;
    long long arrived = 0;
    long long accepted = 0;
    double revenue_sum = 0.0;
    double cost_sum = 0.0;

    friend bool operator==(const MetricWindow&, const MetricWindow&) = default;
};

/// accepted / arrived, or nullopt for a window without arrivals.
std::optional<double> acceptance_rate(const MetricWindow& w);

/// alpha * sum(cpu) + beta * sum(bw).
double revenue(const Vnr& vnr, const RevenueWeights& weights = {});
double revenue(long long cpu_sum, long long bw_sum, const RevenueWeights& weights);

/// Literal: sum(cpu) + sum(bw). Hop-weighted: sum(cpu) + sum(bw * hops).
double cost(const Vnr& vnr, const Embedding& emb, CostMode mode = CostMode::hop_weighted);
double cost(long long cpu_sum, long long bw_sum, long long bw_hop_sum, CostMode mode);

/// Packs an assignment and its routing into an Embedding with revenue and cost filled in.
Embedding make_embedding(const Vnr& vnr, std::vector<NodeId> node_map, RoutingResult routing,
                         const RevenueWeights& weights = {}, CostMode mode = CostMode::hop_weighted);

/// Fixed-width windows [k*w, min((k+1)*w, horizon)) covering [0, horizon).
std::vector<MetricWindow> empty_windows(double horizon, double width);

/// Online window aggregation, fed one arrival at a time.
class WindowAccumulator {
public:
    WindowAccumulator(double horizon, double width, RevenueWeights weights, CostMode mode);

    void record_arrival(double time, bool accepted, long long cpu_sum, long long bw_sum, long long bw_hop_sum);
    const std::vector<MetricWindow>& windows() const { return windows_; }

private:
    std::vector<MetricWindow> windows_;
    double width_;
    RevenueWeights weights_;
    CostMode mode_;
};

struct SeriesRow {
    MetricWindow window;
    std::optional<double> acceptance;
    double avg_revenue = 0.0;
    double avg_cost = 0.0;
    std::optional<double> rc_ratio;
};

/// Aggregates the arrivals of a trace into windows.
std::vector<MetricWindow> aggregate_windows(std::span<const TraceEvent> events, double horizon, double width,
                                            const RevenueWeights& weights, CostMode mode);

/// Per-window acceptance, time-averaged revenue and cost, and their ratio.
std::vector<SeriesRow> series_from_windows(std::span<const MetricWindow> windows);

std::vector<SeriesRow> windowed_series(std::span<const TraceEvent> events, double horizon, double width,
                                       const RevenueWeights& weights = {}, CostMode mode = CostMode::hop_weighted);

/// Running totals from t = 0 to the end of each window. Averages divide by
/// the elapsed time since 0.
std::vector<SeriesRow> cumulative_series(std::span<const MetricWindow> windows);

/// Means of the per-window metrics over windows starting at or after
/// warmup_fraction * horizon. Windows without a sample are skipped.
struct SteadyState {
    std::optional<double> acceptance;
    std::optional<double> avg_revenue;
    std::optional<double> avg_cost;
    std::optional<double> rc_ratio;
    std::optional<double> min_acceptance;
};
SteadyState steady_state(std::span<const SeriesRow> rows, double horizon, double warmup_fraction);

/// CSV with header t_start,t_end,arrived,accepted,acceptance,avg_revenue,avg_cost,rc_ratio.
/// Missing samples are empty fields.
std::string series_to_csv(std::span<const SeriesRow> rows);

/// Shortest round-trip decimal form of a double.
std::string format_number(double x);

} // namespace stec
