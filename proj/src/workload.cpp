#include "stec/workload.hpp"

#include <algorithm>
#include <numeric>
#include <string_view>

#include "json.hpp"

#include "stec/errors.hpp"
#include "stec/random.hpp"

namespace stec {

using nlohmann::json;

void GeneratorConfig::apply_literal_table1() {
    substrate_cpu_range = {0, 50};
    vnr_cpu_range = {50, 100};
}

namespace {

void require(bool ok, std::string_view key, std::string_view what) {
    if (!ok) throw InvalidConfig("config key '" + std::string(key) + "': " + std::string(what));
}

void require_range(const IntRange& r, std::string_view key) {
    require(r.min <= r.max, key, "min exceeds max");
}

} // namespace

void GeneratorConfig::validate() const {
    require(domain_count >= 2, "domain_count", "at least two domains are needed for boundary nodes");
    require(node_count >= domain_count, "node_count", "fewer nodes than domains");
    require(intra_link_rate >= 0.0 && intra_link_rate <= 1.0, "intra_link_rate", "must lie in [0,1]");
    require_range(substrate_cpu_range, "substrate_cpu_range");
    require(substrate_cpu_range.min >= 0, "substrate_cpu_range", "negative cpu");
    require_range(substrate_bw_range, "substrate_bw_range");
    require(substrate_bw_range.min >= 0, "substrate_bw_range", "negative bandwidth");
    require_range(inter_bw_range, "inter_bw_range");
    require(inter_bw_range.min >= 0, "inter_bw_range", "negative bandwidth");
    require_range(security_range, "security_range");
    require_range(vnr_node_range, "vnr_node_range");
    require(vnr_node_range.min >= 1, "vnr_node_range", "requests need at least one node");
    require_range(vnr_cpu_range, "vnr_cpu_range");
    require(vnr_cpu_range.max >= 1, "vnr_cpu_range", "cpu demand must be positive");
    require_range(vnr_bw_range, "vnr_bw_range");
    require(vnr_bw_range.min >= 1, "vnr_bw_range", "bandwidth demand must be positive");
    require(vnr_link_rate >= 0.0 && vnr_link_rate <= 1.0, "vnr_link_rate", "must lie in [0,1]");
    require(vnr_arrival_rate > 0.0, "vnr_arrival_rate", "must be positive");
    require(vnr_mean_lifetime > 0.0, "vnr_mean_lifetime", "must be positive");
    require_range(cd_size_range, "cd_size_range");
    require(cd_size_range.min >= 1, "cd_size_range", "candidate domain sets cannot be empty");
    require(cd_size_range.max <= domain_count, "cd_size_range", "larger than domain_count");
    require(inter_link_count_per_domain_pair >= 1, "inter_link_count_per_domain_pair", "must be at least 1");
    const int smallest_domain = node_count / domain_count;
    require(inter_link_count_per_domain_pair <= smallest_domain * smallest_domain,
            "inter_link_count_per_domain_pair", "more links than node pairs");
    require(horizon >= 0.0, "horizon", "must be non-negative");
}

namespace {

IntRange range_from(const json& j, std::string_view key) {
    require(j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer(), key,
            "expected [min, max] integer pair");
    return {j[0].get<int>(), j[1].get<int>()};
}

int int_from(const json& j, std::string_view key) {
    require(j.is_number_integer(), key, "expected integer");
    return j.get<int>();
}

double double_from(const json& j, std::string_view key) {
    require(j.is_number(), key, "expected number");
    return j.get<double>();
}

} // namespace

GeneratorConfig config_from_json(const std::string& text, GeneratorConfig cfg) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidConfig(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InvalidConfig("config must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key == "seed") {
            require(value.is_number_unsigned() || (value.is_number_integer() && value.get<long long>() >= 0), key,
                    "expected non-negative integer");
            cfg.seed = value.get<std::uint64_t>();
        } else if (key == "domain_count") cfg.domain_count = int_from(value, key);
        else if (key == "node_count") cfg.node_count = int_from(value, key);
        else if (key == "intra_link_rate") cfg.intra_link_rate = double_from(value, key);
        else if (key == "substrate_cpu_range") cfg.substrate_cpu_range = range_from(value, key);
        else if (key == "substrate_bw_range") cfg.substrate_bw_range = range_from(value, key);
        else if (key == "inter_bw_range") cfg.inter_bw_range = range_from(value, key);
        else if (key == "security_range") cfg.security_range = range_from(value, key);
        else if (key == "vnr_node_range") cfg.vnr_node_range = range_from(value, key);
        else if (key == "vnr_cpu_range") cfg.vnr_cpu_range = range_from(value, key);
        else if (key == "vnr_bw_range") cfg.vnr_bw_range = range_from(value, key);
        else if (key == "vnr_link_rate") cfg.vnr_link_rate = double_from(value, key);
        else if (key == "vnr_arrival_rate") cfg.vnr_arrival_rate = double_from(value, key);
        else if (key == "vnr_mean_lifetime") cfg.vnr_mean_lifetime = double_from(value, key);
        else if (key == "cd_size_range") cfg.cd_size_range = range_from(value, key);
        else if (key == "inter_link_count_per_domain_pair") cfg.inter_link_count_per_domain_pair = int_from(value, key);
        else if (key == "horizon") cfg.horizon = double_from(value, key);
        else throw InvalidConfig("unknown config key '" + key + "'");
    }
    cfg.validate();
    return cfg;
}

std::string config_to_json(const GeneratorConfig& cfg) {
    auto pair = [](const IntRange& r) { return json::array({r.min, r.max}); };
    json j = {
        {"seed", cfg.seed},
        {"domain_count", cfg.domain_count},
        {"node_count", cfg.node_count},
        {"intra_link_rate", cfg.intra_link_rate},
        {"substrate_cpu_range", pair(cfg.substrate_cpu_range)},
        {"substrate_bw_range", pair(cfg.substrate_bw_range)},
        {"inter_bw_range", pair(cfg.inter_bw_range)},
        {"security_range", pair(cfg.security_range)},
        {"vnr_node_range", pair(cfg.vnr_node_range)},
        {"vnr_cpu_range", pair(cfg.vnr_cpu_range)},
        {"vnr_bw_range", pair(cfg.vnr_bw_range)},
        {"vnr_link_rate", cfg.vnr_link_rate},
        {"vnr_arrival_rate", cfg.vnr_arrival_rate},
        {"vnr_mean_lifetime", cfg.vnr_mean_lifetime},
        {"cd_size_range", pair(cfg.cd_size_range)},
        {"inter_link_count_per_domain_pair", cfg.inter_link_count_per_domain_pair},
        {"horizon", cfg.horizon},
    };
    return j.dump(2);
}

namespace {

int draw(Rng& rng, const IntRange& r) { return static_cast<int>(rng.uniform_int(r.min, r.max)); }

/// Connected components of `members` under `linked`, each sorted, ordered by smallest member.
template <typename Linked>
std::vector<std::vector<int>> components(const std::vector<int>& members, Linked linked) {
    std::vector<int> label(members.size(), -1);
    std::vector<std::vector<int>> out;
    for (std::size_t s = 0; s < members.size(); ++s) {
        if (label[s] >= 0) continue;
        const int c = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<std::size_t> stack{s};
        label[s] = c;
        while (!stack.empty()) {
            const std::size_t cur = stack.back();
            stack.pop_back();
            out.back().push_back(members[cur]);
            for (std::size_t o = 0; o < members.size(); ++o) {
                if (label[o] < 0 && linked(members[cur], members[o])) {
                    label[o] = c;
                    stack.push_back(o);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

/// Joins every component to the union of the ones before it with a single
/// link between uniformly chosen endpoints. `add` receives (a, b).
template <typename Linked, typename Add>
void repair_connectivity(const std::vector<int>& members, Rng& rng, Linked linked, Add add) {
    auto comps = components(members, linked);
    std::vector<int> merged = comps.empty() ? std::vector<int>{} : comps.front();
    for (std::size_t c = 1; c < comps.size(); ++c) {
        const int a = merged[rng.index(merged.size())];
        const int b = comps[c][rng.index(comps[c].size())];
        add(a, b);
        merged.insert(merged.end(), comps[c].begin(), comps[c].end());
    }
}

} // namespace

SubstrateNetwork generate_substrate(const GeneratorConfig& cfg) {
    cfg.validate();
    Rng rng(derive_seed(cfg.seed, streams::kSubstrate));
    SubstrateNetwork net;

    std::vector<std::vector<NodeId>> members(static_cast<std::size_t>(cfg.domain_count));
    const int base = cfg.node_count / cfg.domain_count;
    const int extra = cfg.node_count % cfg.domain_count;
    for (int d = 0; d < cfg.domain_count; ++d) {
        const int size = base + (d < extra ? 1 : 0);
        for (int i = 0; i < size; ++i) {
            const int cpu = draw(rng, cfg.substrate_cpu_range);
            const int ssl = draw(rng, cfg.security_range);
            const int ssd = draw(rng, cfg.security_range);
            members[static_cast<std::size_t>(d)].push_back(net.add_node(d, cpu, ssl, ssd));
        }
    }

    auto linked = [&net](int a, int b) { return net.link_between(a, b).has_value(); };
    for (const auto& dom : members) {
        for (std::size_t i = 0; i < dom.size(); ++i) {
            for (std::size_t j = i + 1; j < dom.size(); ++j) {
                if (rng.bernoulli(cfg.intra_link_rate)) net.add_link(dom[i], dom[j], draw(rng, cfg.substrate_bw_range));
            }
        }
        repair_connectivity(dom, rng, linked,
                            [&](int a, int b) { net.add_link(a, b, draw(rng, cfg.substrate_bw_range)); });
    }

    for (int a = 0; a < cfg.domain_count; ++a) {
        for (int b = a + 1; b < cfg.domain_count; ++b) {
            const auto& da = members[static_cast<std::size_t>(a)];
            const auto& db = members[static_cast<std::size_t>(b)];
            int placed = 0;
            while (placed < cfg.inter_link_count_per_domain_pair) {
                const NodeId x = da[rng.index(da.size())];
                const NodeId y = db[rng.index(db.size())];
                if (net.link_between(x, y)) continue;
                net.add_link(x, y, draw(rng, cfg.inter_bw_range));
                ++placed;
            }
        }
    }
    net.refresh_boundary_hops();
    return net;
}

std::vector<Vnr> generate_vnr_stream(const GeneratorConfig& cfg, double horizon) {
    cfg.validate();
    if (horizon < 0.0) throw InvalidConfig("horizon must be non-negative");
    Rng rng(derive_seed(cfg.seed, streams::kWorkload));
    std::vector<Vnr> out;
    const IntRange cpu{std::max(1, cfg.vnr_cpu_range.min), cfg.vnr_cpu_range.max};

    std::vector<DomainId> domains(static_cast<std::size_t>(cfg.domain_count));
    double t = 0.0;
    while (true) {
        t += rng.exponential(1.0 / cfg.vnr_arrival_rate);
        if (t >= horizon) break;
        Vnr vnr;
        vnr.id = static_cast<VnrId>(out.size());
        vnr.arrival_time = t;
        const int n = draw(rng, cfg.vnr_node_range);
        for (int i = 0; i < n; ++i) {
            VirtualNode v;
            v.id = i;
            v.cpu_demand = draw(rng, cpu);
            v.vsd = draw(rng, cfg.security_range);
            v.vsl = draw(rng, cfg.security_range);
            const int k = draw(rng, cfg.cd_size_range);
            std::iota(domains.begin(), domains.end(), 0);
            // Partial Fisher-Yates: first k entries form a uniform subset.
            for (int s = 0; s < k; ++s) {
                const auto pick = static_cast<std::size_t>(rng.uniform_int(s, cfg.domain_count - 1));
                std::swap(domains[static_cast<std::size_t>(s)], domains[pick]);
            }
            v.cd.assign(domains.begin(), domains.begin() + k);
            std::sort(v.cd.begin(), v.cd.end());
            vnr.nodes.push_back(std::move(v));
        }
        std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
        auto add = [&](int a, int b) {
            VirtualLink l;
            l.id = static_cast<int>(vnr.links.size());
            l.u = std::min(a, b);
            l.v = std::max(a, b);
            l.bw_demand = draw(rng, cfg.vnr_bw_range);
            vnr.links.push_back(l);
            adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
            adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
        };
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (rng.bernoulli(cfg.vnr_link_rate)) add(i, j);
            }
        }
        std::vector<int> ids(static_cast<std::size_t>(n));
        std::iota(ids.begin(), ids.end(), 0);
        repair_connectivity(ids, rng,
                            [&](int a, int b) { return static_cast<bool>(adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]); },
                            add);
        double life = 0.0;
        while (life <= 0.0) life = rng.exponential(cfg.vnr_mean_lifetime);
        vnr.lifetime = life;
        out.push_back(std::move(vnr));
    }
    return out;
}

} // namespace stec
