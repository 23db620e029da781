#include "stec/serialization.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "stec/errors.hpp"

namespace stec {

using nlohmann::json;

namespace {

template <typename T>
T field(const json& obj, const char* key, const char* where) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw FormatError(std::string(where) + ": missing field '" + key + "'");
    }
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw FormatError(std::string(where) + ": field '" + key + "' has the wrong type");
    }
}

json parse(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string(what) + " is not valid JSON: " + e.what());
    }
}

/// Joins already-dumped entries into a JSON array, one entry per line.
std::string lines(const std::vector<std::string>& entries) {
    std::string out = "[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        out += "\n  ";
        out += entries[i];
        if (i + 1 < entries.size()) out += ',';
    }
    out += entries.empty() ? "]" : "\n]";
    return out;
}

} // namespace

std::string substrate_to_json(const SubstrateNetwork& net) {
    std::vector<std::string> nodes;
    for (const auto& n : net.nodes()) {
        nodes.push_back(json{{"id", n.id}, {"domain", n.domain}, {"cpu", n.cpu_capacity}, {"ssl", n.ssl}, {"ssd", n.ssd}}
                            .dump());
    }
    std::vector<std::string> links;
    for (const auto& l : net.links()) links.push_back(json{{"u", l.u}, {"v", l.v}, {"bw", l.bw_capacity}}.dump());
    return "{\"nodes\": " + lines(nodes) + ",\n\"links\": " + lines(links) + "}\n";
}

SubstrateNetwork substrate_from_json(const std::string& text) {
    const json doc = parse(text, "substrate");
    if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("links") || !doc["nodes"].is_array() ||
        !doc["links"].is_array()) {
        throw FormatError("substrate: expected object with 'nodes' and 'links' arrays");
    }
    SubstrateNetwork net;
    for (const auto& n : doc["nodes"]) {
        const int id = field<int>(n, "id", "substrate node");
        if (id != static_cast<int>(net.node_count())) {
            throw FormatError("substrate node ids must be 0..n-1 in order (got " + std::to_string(id) + ")");
        }
        try {
            net.add_node(field<int>(n, "domain", "substrate node"), field<int>(n, "cpu", "substrate node"),
                         field<int>(n, "ssl", "substrate node"), field<int>(n, "ssd", "substrate node"));
        } catch (const std::invalid_argument& e) {
            throw FormatError(std::string("substrate node: ") + e.what());
        }
    }
    for (const auto& l : doc["links"]) {
        try {
            net.add_link(field<int>(l, "u", "substrate link"), field<int>(l, "v", "substrate link"),
                         field<int>(l, "bw", "substrate link"));
        } catch (const std::invalid_argument& e) {
            throw FormatError(std::string("substrate link: ") + e.what());
        }
    }
    net.refresh_boundary_hops();
    return net;
}

std::string workload_to_json(const std::vector<Vnr>& vnrs, double horizon) {
    std::vector<std::string> entries;
    for (const auto& r : vnrs) {
        json nodes = json::array();
        for (const auto& n : r.nodes) {
            nodes.push_back({{"id", n.id}, {"cpu", n.cpu_demand}, {"vsd", n.vsd}, {"vsl", n.vsl}, {"cd", n.cd}});
        }
        json links = json::array();
        for (const auto& l : r.links) links.push_back({{"u", l.u}, {"v", l.v}, {"bw", l.bw_demand}});
        entries.push_back(json{{"id", r.id},
                               {"arrival", r.arrival_time},
                               {"lifetime", r.lifetime},
                               {"nodes", std::move(nodes)},
                               {"links", std::move(links)}}
                              .dump());
    }
    return "{\"horizon\": " + json(horizon).dump() + ",\n\"vnrs\": " + lines(entries) + "}\n";
}

Workload workload_from_json(const std::string& text) {
    const json doc = parse(text, "workload");
    if (!doc.is_object() || !doc.contains("vnrs") || !doc["vnrs"].is_array()) {
        throw FormatError("workload: expected object with a 'vnrs' array");
    }
    Workload w;
    w.horizon = field<double>(doc, "horizon", "workload");
    for (const auto& r : doc["vnrs"]) {
        Vnr vnr;
        vnr.id = field<int>(r, "id", "request");
        vnr.arrival_time = field<double>(r, "arrival", "request");
        vnr.lifetime = field<double>(r, "lifetime", "request");
        if (!(vnr.lifetime > 0.0)) throw FormatError("request " + std::to_string(vnr.id) + ": lifetime must be positive");
        for (const auto& n : field<json>(r, "nodes", "request")) {
            VirtualNode v;
            v.id = field<int>(n, "id", "virtual node");
            if (v.id != static_cast<int>(vnr.nodes.size())) throw FormatError("virtual node ids must be 0..n-1 in order");
            v.cpu_demand = field<int>(n, "cpu", "virtual node");
            if (v.cpu_demand <= 0) throw FormatError("virtual node cpu demand must be positive");
            v.vsd = field<int>(n, "vsd", "virtual node");
            v.vsl = field<int>(n, "vsl", "virtual node");
            v.cd = field<std::vector<int>>(n, "cd", "virtual node");
            if (v.cd.empty()) throw FormatError("virtual node candidate domains must be non-empty");
            std::sort(v.cd.begin(), v.cd.end());
            v.cd.erase(std::unique(v.cd.begin(), v.cd.end()), v.cd.end());
            vnr.nodes.push_back(std::move(v));
        }
        for (const auto& l : field<json>(r, "links", "request")) {
            VirtualLink vl;
            vl.id = static_cast<int>(vnr.links.size());
            vl.u = field<int>(l, "u", "virtual link");
            vl.v = field<int>(l, "v", "virtual link");
            vl.bw_demand = field<int>(l, "bw", "virtual link");
            const int n = static_cast<int>(vnr.nodes.size());
            if (vl.u == vl.v || vl.u < 0 || vl.v < 0 || vl.u >= n || vl.v >= n) {
                throw FormatError("request " + std::to_string(vnr.id) + ": bad virtual link endpoints");
            }
            if (vl.bw_demand <= 0) throw FormatError("virtual link bandwidth demand must be positive");
            if (vl.u > vl.v) std::swap(vl.u, vl.v);
            vnr.links.push_back(vl);
        }
        w.vnrs.push_back(std::move(vnr));
    }
    return w;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::filesystem::path target(path);
    if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
    const std::filesystem::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw FormatError("cannot open '" + tmp.string() + "' for writing");
        out << content;
        if (!out) throw FormatError("failed writing '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, target);
}

} // namespace stec
