#include "stec/metrics.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "stec/errors.hpp"

namespace stec {

const char* to_string(EventKind kind) { return kind == EventKind::arrival ? "arrival" : "departure"; }

const char* to_string(Outcome outcome) {
    switch (outcome) {
    case Outcome::accepted: return "accepted";
    case Outcome::rejected: return "rejected";
    case Outcome::released: return "released";
    }
    return "unknown";
}

CostMode parse_cost_mode(const std::string& text) {
    if (text == "literal") return CostMode::literal;
    if (text == "hop" || text == "hop-weighted") return CostMode::hop_weighted;
    throw std::invalid_argument("unknown cost mode '" + text + "' (expected literal or hop)");
}

const char* to_string(CostMode mode) { return mode == CostMode::literal ? "literal" : "hop"; }

void RevenueWeights::validate() const {
    if (alpha < 0.0 || beta < 0.0) throw InvalidWeights("revenue weights must be non-negative");
    if (std::abs(alpha + beta - 1.0) > 1e-12) throw InvalidWeights("revenue weights must sum to 1");
}

std::optional<double> acceptance_rate(const MetricWindow& w) {
    if (w.arrived == 0) return std::nullopt;
    return static_cast<double>(w.accepted) / static_cast<double>(w.arrived);
}

double revenue(long long cpu_sum, long long bw_sum, const RevenueWeights& weights) {
    weights.validate();
    return weights.alpha * static_cast<double>(cpu_sum) + weights.beta * static_cast<double>(bw_sum);
}

double revenue(const Vnr& vnr, const RevenueWeights& weights) {
    return revenue(vnr.total_cpu(), vnr.total_bw(), weights);
}

double cost(long long cpu_sum, long long bw_sum, long long bw_hop_sum, CostMode mode) {
    return static_cast<double>(cpu_sum + (mode == CostMode::literal ? bw_sum : bw_hop_sum));
}

double cost(const Vnr& vnr, const Embedding& emb, CostMode mode) {
    if (emb.link_map.size() != vnr.links.size()) throw std::invalid_argument("embedding does not match request");
    long long bw_hop = 0;
    for (std::size_t j = 0; j < vnr.links.size(); ++j) {
        bw_hop += static_cast<long long>(vnr.links[j].bw_demand) * static_cast<long long>(emb.link_map[j].hops());
    }
    return cost(vnr.total_cpu(), vnr.total_bw(), bw_hop, mode);
}

Embedding make_embedding(const Vnr& vnr, std::vector<NodeId> node_map, RoutingResult routing,
                         const RevenueWeights& weights, CostMode mode) {
    Embedding emb;
    emb.vnr_id = vnr.id;
    emb.node_map = std::move(node_map);
    emb.link_map = std::move(routing.paths);
    emb.revenue = revenue(vnr, weights);
    emb.cost = cost(vnr, emb, mode);
    return emb;
}

std::vector<MetricWindow> empty_windows(double horizon, double width) {
    if (!(width > 0.0)) throw std::invalid_argument("window width must be positive");
    std::vector<MetricWindow> out;
    for (std::size_t k = 0; static_cast<double>(k) * width < horizon; ++k) {
        MetricWindow w;
        w.t_start = static_cast<double>(k) * width;
        w.t_end = std::min(static_cast<double>(k + 1) * width, horizon);
        out.push_back(w);
    }
    return out;
}

namespace {

std::size_t window_index(double time, double width, std::size_t count) {
    const auto k = static_cast<std::size_t>(std::floor(time / width));
    return std::min(k, count - 1);
}

} // namespace

WindowAccumulator::WindowAccumulator(double horizon, double width, RevenueWeights weights, CostMode mode)
    : windows_(empty_windows(horizon, width)), width_(width), weights_(weights), mode_(mode) {
    weights_.validate();
}

void WindowAccumulator::record_arrival(double time, bool accepted, long long cpu_sum, long long bw_sum,
                                       long long bw_hop_sum) {
    if (windows_.empty() || time < 0.0) return;
    auto& w = windows_[window_index(time, width_, windows_.size())];
    ++w.arrived;
    if (!accepted) return;
    ++w.accepted;
    w.revenue_sum += revenue(cpu_sum, bw_sum, weights_);
    w.cost_sum += cost(cpu_sum, bw_sum, bw_hop_sum, mode_);
}

std::vector<MetricWindow> aggregate_windows(std::span<const TraceEvent> events, double horizon, double width,
                                            const RevenueWeights& weights, CostMode mode) {
    weights.validate();
    auto windows = empty_windows(horizon, width);
    if (windows.empty()) return windows;
    for (const auto& e : events) {
        if (e.kind != EventKind::arrival || e.time < 0.0) continue;
        auto& w = windows[window_index(e.time, width, windows.size())];
        ++w.arrived;
        if (e.outcome != Outcome::accepted) continue;
        ++w.accepted;
        w.revenue_sum += revenue(e.cpu_sum, e.bw_sum, weights);
        w.cost_sum += cost(e.cpu_sum, e.bw_sum, e.bw_hop_sum, mode);
    }
    return windows;
}

namespace {

SeriesRow make_row(const MetricWindow& w, double elapsed) {
    SeriesRow row;
    row.window = w;
    row.acceptance = acceptance_rate(w);
    row.avg_revenue = w.revenue_sum / elapsed;
    row.avg_cost = w.cost_sum / elapsed;
    if (row.avg_cost > 0.0) row.rc_ratio = row.avg_revenue / row.avg_cost;
    return row;
}

} // namespace

std::vector<SeriesRow> series_from_windows(std::span<const MetricWindow> windows) {
    std::vector<SeriesRow> out;
    out.reserve(windows.size());
    for (const auto& w : windows) out.push_back(make_row(w, w.t_end - w.t_start));
    return out;
}

std::vector<SeriesRow> windowed_series(std::span<const TraceEvent> events, double horizon, double width,
                                       const RevenueWeights& weights, CostMode mode) {
    const auto windows = aggregate_windows(events, horizon, width, weights, mode);
    return series_from_windows(windows);
}

std::vector<SeriesRow> cumulative_series(std::span<const MetricWindow> windows) {
    std::vector<SeriesRow> out;
    MetricWindow total;
    for (const auto& w : windows) {
        total.t_end = w.t_end;
        total.arrived += w.arrived;
        total.accepted += w.accepted;
        total.revenue_sum += w.revenue_sum;
        total.cost_sum += w.cost_sum;
        out.push_back(make_row(total, total.t_end - total.t_start));
    }
    return out;
}

SteadyState steady_state(std::span<const SeriesRow> rows, double horizon, double warmup_fraction) {
    const double cutoff = warmup_fraction * horizon;
    double acc = 0.0, rev = 0.0, cst = 0.0, rc = 0.0;
    int n_acc = 0, n_win = 0, n_rc = 0;
    SteadyState out;
    for (const auto& r : rows) {
        if (r.window.t_start < cutoff) continue;
        ++n_win;
        rev += r.avg_revenue;
        cst += r.avg_cost;
        if (r.acceptance) {
            acc += *r.acceptance;
            ++n_acc;
            out.min_acceptance = out.min_acceptance ? std::min(*out.min_acceptance, *r.acceptance) : *r.acceptance;
        }
        if (r.rc_ratio) {
            rc += *r.rc_ratio;
            ++n_rc;
        }
    }
    if (n_acc > 0) out.acceptance = acc / n_acc;
    if (n_win > 0) {
        out.avg_revenue = rev / n_win;
        out.avg_cost = cst / n_win;
    }
    if (n_rc > 0) out.rc_ratio = rc / n_rc;
    return out;
}

std::string format_number(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string series_to_csv(std::span<const SeriesRow> rows) {
    std::string out = "t_start,t_end,arrived,accepted,acceptance,avg_revenue,avg_cost,rc_ratio\n";
    auto opt = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
    for (const auto& r : rows) {
        out += format_number(r.window.t_start) + ',' + format_number(r.window.t_end) + ',' +
               std::to_string(r.window.arrived) + ',' + std::to_string(r.window.accepted) + ',' + opt(r.acceptance) +
               ',' + format_number(r.avg_revenue) + ',' + format_number(r.avg_cost) + ',' + opt(r.rc_ratio) + '\n';
    }
    return out;
}

} // namespace stec
