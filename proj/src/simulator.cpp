#include "stec/simulator.hpp"

#include <map>
#include <queue>
#include <tuple>

#include "json.hpp"

#include "stec/errors.hpp"
#include "stec/validation.hpp"

namespace stec {

namespace {

struct QueuedEvent {
    double time;
    EventKind kind;
    VnrId vnr_id;
    std::size_t index; ///< position in the request vector

    // Departures sort before arrivals at equal times, then by request id.
    bool operator>(const QueuedEvent& o) const {
        return std::tuple(time, kind == EventKind::arrival, vnr_id) >
               std::tuple(o.time, o.kind == EventKind::arrival, o.vnr_id);
    }
};

long long bw_hop_sum(const Vnr& vnr, const Embedding& emb) {
    long long sum = 0;
    for (std::size_t j = 0; j < vnr.links.size(); ++j) {
        sum += static_cast<long long>(vnr.links[j].bw_demand) * static_cast<long long>(emb.link_map[j].hops());
    }
    return sum;
}

} // namespace

void audit_residuals(const SubstrateNetwork& net, const std::vector<const Vnr*>& vnrs,
                     const std::vector<const Embedding*>& embeddings) {
    std::vector<long long> cpu(net.node_count(), 0);
    std::vector<long long> bw(net.link_count(), 0);
    for (std::size_t i = 0; i < vnrs.size(); ++i) {
        const auto& vnr = *vnrs[i];
        const auto& emb = *embeddings[i];
        for (std::size_t k = 0; k < vnr.nodes.size(); ++k) cpu[static_cast<std::size_t>(emb.node_map[k])] += vnr.nodes[k].cpu_demand;
        for (std::size_t j = 0; j < vnr.links.size(); ++j) {
            for (LinkId l : emb.link_map[j].links) bw[static_cast<std::size_t>(l)] += vnr.links[j].bw_demand;
        }
    }
    for (const auto& n : net.nodes()) {
        if (n.cpu_capacity - cpu[static_cast<std::size_t>(n.id)] != n.cpu_residual) {
            throw InternalConsistencyError("audit: cpu residual of node " + std::to_string(n.id) + " is off");
        }
    }
    for (const auto& l : net.links()) {
        if (l.bw_capacity - bw[static_cast<std::size_t>(l.id)] != l.bw_residual) {
            throw InternalConsistencyError("audit: bandwidth residual of link " + std::to_string(l.id) + " is off");
        }
    }
}

SimulationTrace run_simulation(SubstrateNetwork net, const std::vector<Vnr>& vnrs, EmbeddingStrategy& strategy,
                               const SimulationOptions& opts) {
    opts.weights.validate();
    SimulationTrace trace;
    trace.strategy = strategy.name();
    trace.horizon = opts.horizon;
    WindowAccumulator streaming(opts.horizon, opts.window_width, opts.weights, opts.cost_mode);

    std::priority_queue<QueuedEvent, std::vector<QueuedEvent>, std::greater<>> queue;
    for (std::size_t i = 0; i < vnrs.size(); ++i) {
        const auto& r = vnrs[i];
        if (r.arrival_time < 0.0 || r.arrival_time >= opts.horizon) continue;
        queue.push({r.arrival_time, EventKind::arrival, r.id, i});
    }

    std::map<VnrId, Embedding> active;
    std::map<VnrId, std::size_t> active_index;
    long long accepted_count = 0;
    long long processed = 0;

    while (!queue.empty()) {
        const QueuedEvent ev = queue.top();
        queue.pop();
        const Vnr& vnr = vnrs[ev.index];
        TraceEvent rec;
        rec.time = ev.time;
        rec.kind = ev.kind;
        rec.vnr_id = ev.vnr_id;

        if (ev.kind == EventKind::departure) {
            auto it = active.find(ev.vnr_id);
            net.release(vnr, it->second);
            active.erase(it);
            active_index.erase(ev.vnr_id);
            rec.outcome = Outcome::released;
        } else {
            ++trace.arrivals;
            const auto before = opts.check_rejections ? net.state_hash() : 0;
            std::optional<Embedding> emb;
            try {
                emb = strategy.embed(vnr, net);
            } catch (const EmbeddingInfeasible&) {
            }
            if (!emb) {
                if (opts.check_rejections && net.state_hash() != before) {
                    throw InternalConsistencyError("rejected request " + std::to_string(vnr.id) +
                                                   " changed substrate state");
                }
                rec.outcome = Outcome::rejected;
                streaming.record_arrival(ev.time, false, 0, 0, 0);
            } else {
                ++accepted_count;
                if (opts.validate_every > 0 && accepted_count % opts.validate_every == 0) {
                    const auto violations = validate_embedding(net, vnr, *emb);
                    if (!violations.empty()) {
                        throw InternalConsistencyError("strategy " + strategy.name() + " produced an invalid embedding for request " +
                                                       std::to_string(vnr.id) + ": " +
                                                       std::string(to_string(violations.front().kind)) + " (" +
                                                       violations.front().detail + ")");
                    }
                    rec.validated = true;
                }
                try {
                    net.allocate(vnr, *emb);
                } catch (const InsufficientResources& e) {
                    throw InternalConsistencyError(std::string("allocation disagreed with the strategy: ") + e.what());
                }
                rec.outcome = Outcome::accepted;
                rec.cpu_sum = vnr.total_cpu();
                rec.bw_sum = vnr.total_bw();
                rec.bw_hop_sum = bw_hop_sum(vnr, *emb);
                rec.revenue = revenue(rec.cpu_sum, rec.bw_sum, opts.weights);
                rec.cost = cost(rec.cpu_sum, rec.bw_sum, rec.bw_hop_sum, opts.cost_mode);
                emb->revenue = rec.revenue;
                emb->cost = rec.cost;
                streaming.record_arrival(ev.time, true, rec.cpu_sum, rec.bw_sum, rec.bw_hop_sum);
                rec.embedding = *emb;
                active.emplace(vnr.id, std::move(*emb));
                active_index.emplace(vnr.id, ev.index);
                queue.push({ev.time + vnr.lifetime, EventKind::departure, vnr.id, ev.index});
            }
        }
        trace.events.push_back(std::move(rec));

        ++processed;
        if (opts.audit_every > 0 && processed % opts.audit_every == 0) {
            std::vector<const Vnr*> rs;
            std::vector<const Embedding*> es;
            for (const auto& [id, e] : active) {
                rs.push_back(&vnrs[active_index.at(id)]);
                es.push_back(&e);
            }
            audit_residuals(net, rs, es);
        }
    }
    trace.accepted = accepted_count;
    trace.final_state = std::move(net);
    trace.streaming_windows = streaming.windows();
    return trace;
}

std::string trace_to_ndjson(const SimulationTrace& trace) {
    std::string out;
    for (const auto& e : trace.events) {
        nlohmann::ordered_json j;
        j["time"] = e.time;
        j["kind"] = to_string(e.kind);
        j["vnr_id"] = e.vnr_id;
        j["outcome"] = to_string(e.outcome);
        j["revenue"] = e.revenue;
        j["cost"] = e.cost;
        out += j.dump();
        out += '\n';
    }
    return out;
}

} // namespace stec
