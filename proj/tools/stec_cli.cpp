// Experiment driver: generate substrates and workloads, run one strategy,
// or compare several strategies across seeds.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "stec/errors.hpp"
#include "stec/experiment.hpp"
#include "stec/serialization.hpp"
#include "stec/simulator.hpp"
#include "stec/workload.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitConfig = 2;
constexpr int kExitInternal = 3;

namespace fs = std::filesystem;

struct Common {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<double> horizon;
    double window = 2000.0;
    std::string cost_mode = "hop";
    bool literal_table1 = false;
    bool eq20_literal = false;
    double warmup = 0.2;
    std::string out = ".";
};

stec::GeneratorConfig load_config(const Common& c) {
    stec::GeneratorConfig cfg;
    if (!c.config_path.empty()) cfg = stec::config_from_json(stec::read_file(c.config_path));
    if (c.seed) cfg.seed = *c.seed;
    if (c.horizon) cfg.horizon = *c.horizon;
    if (c.literal_table1) cfg.apply_literal_table1();
    cfg.validate();
    return cfg;
}

stec::SimulationOptions sim_options(const Common& c, double horizon) {
    stec::SimulationOptions opts;
    opts.horizon = horizon;
    if (!(c.window > 0.0)) throw stec::InvalidConfig("--window must be positive");
    opts.window_width = c.window;
    opts.cost_mode = stec::parse_cost_mode(c.cost_mode);
    opts.validate_every = 1;
    return opts;
}

stec::StrategyOptions strategy_options(const Common& c, std::uint64_t seed) {
    stec::StrategyOptions so;
    so.seed = seed;
    so.pso.node_mapping.literal_hop_term = c.eq20_literal;
    return so;
}

std::string join(const fs::path& dir, const char* name) { return (dir / name).string(); }

fs::path out_dir(const Common& c) {
    const fs::path dir(c.out);
    fs::create_directories(dir);
    return dir;
}

int cmd_generate(const Common& c) {
    const auto cfg = load_config(c);
    const auto net = stec::generate_substrate(cfg);
    const auto vnrs = stec::generate_vnr_stream(cfg, cfg.horizon);
    const fs::path dir = out_dir(c);
    stec::write_file_atomic(join(dir, "substrate.json"), stec::substrate_to_json(net));
    stec::write_file_atomic(join(dir, "workload.json"), stec::workload_to_json(vnrs, cfg.horizon));
    std::cout << "substrate: " << net.node_count() << " nodes, " << net.link_count() << " links, "
              << net.domain_count() << " domains\n"
              << "workload: " << vnrs.size() << " requests over horizon " << cfg.horizon << '\n';
    return 0;
}

int cmd_run(const Common& c, const std::string& substrate_path, const std::string& workload_path,
            const std::string& strategy_name) {
    const auto net = stec::substrate_from_json(stec::read_file(substrate_path));
    const auto workload = stec::workload_from_json(stec::read_file(workload_path));
    const double horizon = c.horizon.value_or(workload.horizon);
    const auto sim = sim_options(c, horizon);
    auto strategy = stec::make_strategy(strategy_name, strategy_options(c, c.seed.value_or(1)));
    const auto trace = stec::run_simulation(net, workload.vnrs, *strategy, sim);

    const auto windows = stec::aggregate_windows(trace.events, horizon, sim.window_width, sim.weights, sim.cost_mode);
    const auto rows = stec::series_from_windows(windows);
    const auto cumulative = stec::cumulative_series(windows);
    const fs::path dir = out_dir(c);
    stec::write_file_atomic(join(dir, "trace.ndjson"), stec::trace_to_ndjson(trace));
    stec::write_file_atomic(join(dir, "metrics.csv"), stec::series_to_csv(rows));
    stec::write_file_atomic(join(dir, "cumulative.csv"), stec::series_to_csv(cumulative));

    const auto steady = stec::steady_state(rows, horizon, c.warmup);
    auto show = [](const std::optional<double>& v) { return v ? stec::format_number(*v) : std::string("n/a"); };
    std::cout << strategy_name << ": " << trace.accepted << '/' << trace.arrivals << " accepted; steady acceptance "
              << show(steady.acceptance) << ", rc_ratio " << show(steady.rc_ratio) << '\n';
    return 0;
}

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

int cmd_compare(const Common& c, const std::string& substrate_path, const std::string& workload_path,
                const std::string& strategies, int seed_count) {
    if (seed_count <= 0) throw stec::InvalidConfig("--seeds must be positive");
    stec::CompareRequest req;
    req.strategies = split(strategies);
    if (req.strategies.empty()) throw stec::InvalidConfig("no strategies given");
    const std::uint64_t first = c.seed.value_or(1);
    for (int i = 0; i < seed_count; ++i) req.seeds.push_back(first + static_cast<std::uint64_t>(i));
    req.warmup_fraction = c.warmup;

    std::optional<stec::SubstrateNetwork> net;
    std::optional<stec::Workload> workload;
    double horizon = 0.0;
    if (!substrate_path.empty() || !workload_path.empty()) {
        if (substrate_path.empty() || workload_path.empty()) {
            throw stec::InvalidConfig("--substrate and --workload must be given together");
        }
        net = stec::substrate_from_json(stec::read_file(substrate_path));
        workload = stec::workload_from_json(stec::read_file(workload_path));
        horizon = c.horizon.value_or(workload->horizon);
        req.substrate = &*net;
        req.vnrs = &workload->vnrs;
    } else {
        req.generator = load_config(c);
        horizon = req.generator->horizon;
    }
    req.sim = sim_options(c, horizon);
    req.strategy = strategy_options(c, first);

    const auto runs = stec::run_comparison(req);
    const fs::path dir = out_dir(c);
    for (const auto& table : stec::metric_tables(runs, req.strategies, req.seeds)) {
        stec::write_file_atomic((dir / (table.metric + ".csv")).string(), table.csv);
    }
    const auto summary = stec::summary_table(runs, req.strategies);
    stec::write_file_atomic(join(dir, "summary.csv"), summary);
    std::cout << summary;
    return 0;
}

void add_common(CLI::App* sub, Common& c, bool generation, bool simulation) {
    sub->add_option("--out", c.out, "Output directory")->capture_default_str();
    sub->add_option("--seed", c.seed, "Root seed");
    sub->add_option("--horizon", c.horizon, "Simulated time span");
    if (generation) {
        sub->add_option("--config", c.config_path, "Generator config (JSON)");
        sub->add_flag("--literal-table1", c.literal_table1,
                      "Use substrate cpu U[0,50] and virtual cpu U[50,100] exactly as tabulated");
    }
    if (simulation) {
        sub->add_option("--window", c.window, "Metric window width")->capture_default_str();
        sub->add_option("--cost-mode", c.cost_mode, "Cost accounting: literal or hop")
            ->check(CLI::IsMember({"literal", "hop"}))
            ->capture_default_str();
        sub->add_flag("--eq20-literal", c.eq20_literal, "Reward distance from the domain boundary instead of proximity");
        sub->add_option("--warmup", c.warmup, "Fraction of the horizon excluded from steady-state means")
            ->check(CLI::Range(0.0, 1.0))
            ->capture_default_str();
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Security-aware virtual network embedding simulator"};
    app.require_subcommand(1);

    Common gen_opts, run_opts, cmp_opts;
    auto* gen = app.add_subcommand("generate", "Write a random substrate and request stream");
    add_common(gen, gen_opts, true, false);

    std::string run_substrate, run_workload, run_strategy = "stec-iot";
    auto* run = app.add_subcommand("run", "Simulate one strategy and export its trace and metrics");
    add_common(run, run_opts, false, true);
    run->add_option("--substrate", run_substrate, "Substrate JSON")->required();
    run->add_option("--workload", run_workload, "Workload JSON")->required();
    run->add_option("--strategy", run_strategy, "stec-iot, greedy or random")->capture_default_str();

    std::string cmp_substrate, cmp_workload, cmp_strategies = "stec-iot,greedy";
    int cmp_seeds = 5;
    auto* cmp = app.add_subcommand("compare", "Compare strategies across seeds");
    add_common(cmp, cmp_opts, true, true);
    cmp->add_option("--substrate", cmp_substrate, "Shared substrate JSON (otherwise generated per seed)");
    cmp->add_option("--workload", cmp_workload, "Shared workload JSON (otherwise generated per seed)");
    cmp->add_option("--strategy,--strategies", cmp_strategies, "Comma-separated strategies")->capture_default_str();
    cmp->add_option("--seeds", cmp_seeds, "Number of consecutive seeds starting at --seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*gen) return cmd_generate(gen_opts);
        if (*run) return cmd_run(run_opts, run_substrate, run_workload, run_strategy);
        if (*cmp) return cmd_compare(cmp_opts, cmp_substrate, cmp_workload, cmp_strategies, cmp_seeds);
    } catch (const stec::InternalConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << '\n';
        return kExitInternal;
    } catch (const stec::InvalidConfig& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return kExitConfig;
    } catch (const stec::FormatError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}
