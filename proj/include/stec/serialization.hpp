#pragma once

#include <string>
#include <vector>

#include "stec/network.hpp"

namespace stec {

/// Substrate document: one JSON value with a `nodes` array of
/// {id, domain, cpu, ssl, ssd} and a `links` array of {u, v, bw}, one entry
/// per line. Residuals are not stored; a parsed network starts pristine.
std::string substrate_to_json(const SubstrateNetwork& net);
SubstrateNetwork substrate_from_json(const std::string& text);

/// Workload document: {"horizon": h, "vnrs": [...]} with one request per
/// line. Each request carries id, arrival, lifetime, nodes {id, cpu, vsd,
/// vsl, cd} and links {u, v, bw}.
std::string workload_to_json(const std::vector<Vnr>& vnrs, double horizon);

struct Workload {
    std::vector<Vnr> vnrs;
    double horizon = 0.0;
};
Workload workload_from_json(const std::string& text);

std::string read_file(const std::string& path);
/// Writes via a temporary sibling file and rename, so readers never see a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace stec
