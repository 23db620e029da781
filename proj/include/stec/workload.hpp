#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stec/network.hpp"

namespace stec {

struct IntRange {
    int min = 0;
    int max = 0;
    friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Parameters of substrate and workload generation.
///
/// Defaults follow the simulation settings table, except that the substrate
/// and virtual CPU ranges are swapped back (see `literal_table1`).
struct GeneratorConfig {
    std::uint64_t seed = 1;
    int domain_count = 4;
    int node_count = 120;
    double intra_link_rate = 0.6;
    IntRange substrate_cpu_range{50, 100};
    IntRange substrate_bw_range{1000, 3000};
    IntRange inter_bw_range{1000, 3000};
    IntRange security_range{kMinSecurity, kMaxSecurity};
    IntRange vnr_node_range{2, 10};
    IntRange vnr_cpu_range{0, 50}; ///< lower bound is clamped to 1
    IntRange vnr_bw_range{1, 10};
    double vnr_link_rate = 0.5;
    double vnr_arrival_rate = 0.05;
    double vnr_mean_lifetime = 1000.0;
    IntRange cd_size_range{1, 2};
    int inter_link_count_per_domain_pair = 2;
    double horizon = 50000.0;

    /// Substrate CPU U[0,50] and virtual CPU U[50,100], exactly as tabulated.
    /// Under these ranges no virtual node fits on any substrate node.
    void apply_literal_table1();

    /// Throws InvalidConfig naming the first offending field.
    void validate() const;
};

/// Builds a config from a JSON object whose keys mirror the field names
/// above. Ranges are two-element arrays. Unknown keys are rejected.
GeneratorConfig config_from_json(const std::string& text, GeneratorConfig base = {});
std::string config_to_json(const GeneratorConfig& cfg);

/// Random multi-domain substrate: Bernoulli(intra_link_rate) links inside
/// each domain with spanning-tree repair, plus a fixed number of inter-domain
/// links per domain pair. Boundary hops are filled in.
SubstrateNetwork generate_substrate(const GeneratorConfig& cfg);

/// Poisson arrivals on [0, horizon) with exponential lifetimes. Request ids
/// are assigned in arrival order starting at 0.
std::vector<Vnr> generate_vnr_stream(const GeneratorConfig& cfg, double horizon);

} // namespace stec
