#pragma once

// Straight-line recomputation of windowed metrics from a finished trace,
// working from the requests and recorded paths rather than the demand sums
// stored on each event.

#include <cmath>
#include <map>
#include <optional>
#include <vector>

#include "stec/metrics.hpp"
#include "stec/trace.hpp"

namespace metrics_oracle {

struct Row {
    double t_start = 0.0;
    double t_end = 0.0;
    long long arrived = 0;
    long long accepted = 0;
    double revenue_sum = 0.0;
    double cost_sum = 0.0;
    std::optional<double> acceptance;
    double avg_revenue = 0.0;
    double avg_cost = 0.0;
    std::optional<double> rc;
};

inline std::vector<Row> recompute(const std::vector<stec::TraceEvent>& events, const std::vector<stec::Vnr>& vnrs,
                                  double horizon, double width, double alpha, double beta, bool hop_weighted) {
    std::map<stec::VnrId, const stec::Vnr*> by_id;
    for (const auto& r : vnrs) by_id[r.id] = &r;
    std::vector<Row> rows;
    for (long long k = 0; static_cast<double>(k) * width < horizon; ++k) {
        Row r;
        r.t_start = static_cast<double>(k) * width;
        r.t_end = std::min(static_cast<double>(k + 1) * width, horizon);
        rows.push_back(r);
    }
    for (const auto& e : events) {
        if (e.kind != stec::EventKind::arrival) continue;
        auto& row = rows.at(static_cast<std::size_t>(std::floor(e.time / width)));
        ++row.arrived;
        if (e.outcome != stec::Outcome::accepted) continue;
        ++row.accepted;
        const auto& vnr = *by_id.at(e.vnr_id);
        long long cpu = 0, bw = 0, link_cost = 0;
        for (const auto& v : vnr.nodes) cpu += v.cpu_demand;
        for (std::size_t j = 0; j < vnr.links.size(); ++j) {
            const long long demand = vnr.links[j].bw_demand;
            bw += demand;
            link_cost += hop_weighted ? demand * static_cast<long long>(e.embedding->link_map[j].links.size()) : demand;
        }
        row.revenue_sum += alpha * static_cast<double>(cpu) + beta * static_cast<double>(bw);
        row.cost_sum += static_cast<double>(cpu + link_cost);
    }
    for (auto& row : rows) {
        const double span = row.t_end - row.t_start;
        if (row.arrived > 0) row.acceptance = static_cast<double>(row.accepted) / static_cast<double>(row.arrived);
        row.avg_revenue = row.revenue_sum / span;
        row.avg_cost = row.cost_sum / span;
        if (row.avg_cost > 0.0) row.rc = row.avg_revenue / row.avg_cost;
    }
    return rows;
}

/// Exact (bitwise for doubles) agreement between the library's series and the oracle.
inline bool same(const std::vector<stec::SeriesRow>& lib, const std::vector<Row>& oracle) {
    if (lib.size() != oracle.size()) return false;
    for (std::size_t i = 0; i < lib.size(); ++i) {
        const auto& a = lib[i];
        const auto& b = oracle[i];
        if (a.window.t_start != b.t_start || a.window.t_end != b.t_end || a.window.arrived != b.arrived ||
            a.window.accepted != b.accepted || a.window.revenue_sum != b.revenue_sum ||
            a.window.cost_sum != b.cost_sum || a.acceptance != b.acceptance || a.avg_revenue != b.avg_revenue ||
            a.avg_cost != b.avg_cost || a.rc_ratio != b.rc) {
            return false;
        }
    }
    return true;
}

} // namespace metrics_oracle
