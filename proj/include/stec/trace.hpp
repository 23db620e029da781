#pragma once

#include <optional>

#include "stec/network.hpp"

namespace stec {

enum class EventKind { arrival, departure };
enum class Outcome { accepted, rejected, released };

const char* to_string(EventKind kind);
const char* to_string(Outcome outcome);

/// One processed simulation event.
struct TraceEvent {
    double time = 0.0;
    EventKind kind = EventKind::arrival;
    VnrId vnr_id = 0;
    Outcome outcome = Outcome::rejected;
    /// Revenue and cost of an accepted arrival under the run's settings; 0 otherwise.
    double revenue = 0.0;
    double cost = 0.0;
    /// Demand sums of an accepted arrival; bw_hop_sum weights each link by its path length.
    long long cpu_sum = 0;
    long long bw_sum = 0;
    long long bw_hop_sum = 0;
    std::optional<Embedding> embedding;
    /// True when the shadow validator re-checked this acceptance and found no violation.
    bool validated = false;
};

} // namespace stec
