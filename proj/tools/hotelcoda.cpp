// hotelcoda command-line front end.
//
// Exit status: 0 ok, 2 usage, 3 I/O, 4 data, 5 graph, 6 model, 7 config, 1 anything else.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include <hotelcoda/hotelcoda.hpp>

namespace {

using namespace hotelcoda;

enum Exit : int {
    exit_ok = 0,
    exit_other = 1,
    exit_usage = 2,
    exit_io = 3,
    exit_data = 4,
    exit_graph = 5,
    exit_model = 6,
    exit_config = 7,
};

struct Options {
    std::string file;
    std::string graph_file;
    std::string config_file;
    std::string out_file;
    std::string format = "md";
    std::string seasonal = "dummy";
    std::string restaurant = "share";
    std::string ratio;
    std::optional<int> n;
    std::optional<std::uint64_t> seed;
};

LogRatioGraph resolve_graph(const Options& o) {
    if (o.graph_file.empty()) {
        return default_hotel_graph();
    }
    auto cfg = load_config(o.graph_file);
    if (!cfg.graph) {
        throw InvalidConfig("no [graph] edges in " + o.graph_file);
    }
    return *cfg.graph;
}

EncodingOptions resolve_encoding(const Options& o) {
    // CLI11 validators already restrict the spelling.
    return {*parse_restaurant_mode(o.restaurant), *parse_seasonal_mode(o.seasonal)};
}

Format resolve_format(const Options& o) { return *parse_format(o.format); }

int run_describe(const Options& o) {
    auto ds = load_dataset(o.file);
    std::cout << render_descriptives(describe(ds), resolve_format(o));
    return exit_ok;
}

int run_graph_validate(const Options& o) {
    auto g = resolve_graph(o);
    auto report = validate_graph(g);
    std::cout << render_graph_validation(g, report, resolve_format(o));
    return report.valid ? exit_ok : exit_graph;
}

int run_fit(const Options& o) {
    auto ds = load_dataset(o.file);
    auto g = resolve_graph(o);
    auto fit = fit_model(ds, g, resolve_encoding(o));
    ReportMetadata meta{fit.design.encoding, std::nullopt, ds.size()};
    std::cout << render_fit_table(fit.responses, resolve_format(o), meta);
    return exit_ok;
}

int run_signs(const Options& o) {
    auto ds = load_dataset(o.file);
    auto fit = fit_model(ds, resolve_graph(o), resolve_encoding(o));
    std::cout << render_sign_report(expected_sign_report(fit), resolve_format(o));
    return exit_ok;
}

int run_consistency(const Options& o) {
    auto ds = load_dataset(o.file);
    auto report = consistency_demo(ds, resolve_graph(o), o.ratio, resolve_encoding(o));
    std::cout << render_consistency(report, resolve_format(o));
    return exit_ok;
}

int run_simulate(const Options& o) {
    SynthConfig cfg;
    if (!o.config_file.empty()) {
        cfg = load_config(o.config_file).synth;
    }
    if (o.n) cfg.n = *o.n;
    if (o.seed) cfg.seed = *o.seed;
    auto generated = generate(cfg);
    save_dataset(o.out_file, generated.records);
    std::printf("wrote %zu records to %s (seed %llu, occupancy capped in %zu)\n", generated.records.size(),
                o.out_file.c_str(), static_cast<unsigned long long>(cfg.seed), generated.capped.size());
    return exit_ok;
}

int report_error(const char* kind, const std::string& what, int code) {
    std::size_t start = 0;
    while (true) {
        auto end = what.find('\n', start);
        std::cerr << "hotelcoda: " << kind << ": " << what.substr(start, end - start) << "\n";
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pairwise log-ratio regression toolkit for hotel performance ratios"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);
    Options o;

    const auto formats = CLI::IsMember({"md", "markdown", "csv", "json"});
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format: md, csv or json")->check(formats);
    };
    auto add_modes = [&](CLI::App* sub) {
        sub->add_option("--seasonal-mode", o.seasonal, "Seasonal encoding: dummy (<270 days) or days")
            ->check(CLI::IsMember({"dummy", "days"}));
        sub->add_option("--restaurant-mode", o.restaurant, "Restaurant encoding: share or dummy (>20%)")
            ->check(CLI::IsMember({"share", "dummy"}));
    };

    auto* describe_cmd = app.add_subcommand("describe", "Descriptive statistics for a dataset");
    describe_cmd->add_option("file", o.file, "Dataset file")->required();
    add_format(describe_cmd);

    auto* graph_cmd = app.add_subcommand("graph", "Log-ratio graph utilities");
    graph_cmd->require_subcommand(1);
    auto* validate_cmd = graph_cmd->add_subcommand("validate", "Check that the graph is a connected acyclic graph");
    validate_cmd->add_option("--graph", o.graph_file, "Configuration file with a [graph] section");
    add_format(validate_cmd);

    auto* fit_cmd = app.add_subcommand("fit", "Fit one regression per log-ratio");
    fit_cmd->add_option("file", o.file, "Dataset file")->required();
    fit_cmd->add_option("--graph", o.graph_file, "Configuration file with a [graph] section");
    add_modes(fit_cmd);
    add_format(fit_cmd);

    auto* simulate_cmd = app.add_subcommand("simulate", "Generate a synthetic calibrated dataset");
    simulate_cmd->add_option("--n", o.n, "Number of hotels");
    simulate_cmd->add_option("--seed", o.seed, "Random seed");
    simulate_cmd->add_option("--config", o.config_file, "Configuration file with a [synth] section");
    simulate_cmd->add_option("--out", o.out_file, "Output dataset file")->required();

    auto* consistency_cmd = app.add_subcommand("consistency", "Compare fits on a ratio and on its inverse");
    consistency_cmd->add_option("file", o.file, "Dataset file")->required();
    consistency_cmd->add_option("--ratio", o.ratio, "Edge name, e.g. P3")->required();
    consistency_cmd->add_option("--graph", o.graph_file, "Configuration file with a [graph] section");
    add_modes(consistency_cmd);
    add_format(consistency_cmd);

    auto* signs_cmd = app.add_subcommand("signs", "Compare fitted signs with the hypothesised ones");
    signs_cmd->add_option("file", o.file, "Dataset file")->required();
    signs_cmd->add_option("--graph", o.graph_file, "Configuration file with a [graph] section");
    add_modes(signs_cmd);
    add_format(signs_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*describe_cmd) return run_describe(o);
        if (*validate_cmd) return run_graph_validate(o);
        if (*fit_cmd) return run_fit(o);
        if (*simulate_cmd) return run_simulate(o);
        if (*consistency_cmd) return run_consistency(o);
        if (*signs_cmd) return run_signs(o);
    } catch (const IoError& e) {
        return report_error("io error", e.what(), exit_io);
    } catch (const SchemaError& e) {
        return report_error("schema error", e.what(), exit_data);
    } catch (const ParseError& e) {
        return report_error("parse error", e.what(), exit_data);
    } catch (const ValidationError& e) {
        return report_error("validation error", e.what(), exit_data);
    } catch (const DataError& e) {
        return report_error("data error", e.what(), exit_data);
    } catch (const GraphError& e) {
        return report_error("graph error", e.what(), exit_graph);
    } catch (const ModelError& e) {
        return report_error("model error", e.what(), exit_model);
    } catch (const InvalidConfig& e) {
        return report_error("config error", e.what(), exit_config);
    } catch (const DegenerateVariance& e) {
        return report_error("config error", e.what(), exit_config);
    } catch (const std::exception& e) {
        return report_error("error", e.what(), exit_other);
    }
    std::cerr << app.help();
    return exit_usage;
}
