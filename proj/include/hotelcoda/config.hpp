#ifndef HOTELCODA_CONFIG_HPP
#define HOTELCODA_CONFIG_HPP

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "coda.hpp"
#include "dataset_io.hpp"
#include "design.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "synth.hpp"

/**
 * @file config.hpp
 * @brief Line-oriented configuration: graph edges, generator marginals, coefficient table.
 *
 *     # comment
 *     [graph]
 *     P1: occupied_room_nights/available_room_nights
 *     nodes: extra_part another_part        (optional isolated nodes)
 *
 *     [synth]
 *     n = 255
 *     fb_share = 0.25 0.13 0 0.57            (mean sd lo hi)
 *
 *     [coefficients]
 *     response intercept leasing ...         (header row, any column order)
 *     P1 -0.30 0.017 ...
 *
 * Lines before the first section header belong to [graph], so a bare edge
 * list is a valid graph file. Keys left out of [synth] keep their defaults.
 * See config/default.conf for the complete built-in configuration.
 */

namespace hotelcoda {

struct ToolConfig {
    std::optional<LogRatioGraph> graph;
    SynthConfig synth;
};

namespace detail {

inline std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return std::string(trim(pos == std::string::npos ? std::string_view(line) : std::string_view(line).substr(0, pos)));
}

inline std::vector<std::string> words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

[[noreturn]] inline void config_fail(std::size_t line, const std::string& why) {
    throw InvalidConfig("config line " + std::to_string(line) + ": " + why);
}

inline std::vector<double> config_numbers(std::size_t line, const std::string& key, const std::string& value,
                                          std::size_t expected) {
    std::vector<double> out;
    for (const auto& w : words(value)) {
        auto v = parse_number<double>(w);
        if (!v) config_fail(line, "'" + key + "': not a number '" + w + "'");
        out.push_back(*v);
    }
    if (out.size() != expected) {
        config_fail(line, "'" + key + "' expects " + std::to_string(expected) + " values, got " +
                              std::to_string(out.size()));
    }
    return out;
}

inline void apply_synth_key(SynthConfig& cfg, std::size_t line, const std::string& key, const std::string& value) {
    auto nums = [&](std::size_t count) { return config_numbers(line, key, value, count); };
    auto to_tn = [&]() {
        auto v = nums(4);
        return TruncatedNormal{v[0], v[1], v[2], v[3]};
    };
    if (key == "n") {
        auto v = parse_number<int>(value);
        if (!v) config_fail(line, "'n' must be an integer");
        cfg.n = *v;
    } else if (key == "seed") {
        auto v = parse_number<std::uint64_t>(value);
        if (!v) config_fail(line, "'seed' must be a non-negative integer");
        cfg.seed = *v;
    } else if (key == "strategy") {
        auto v = nums(4);
        std::copy(v.begin(), v.end(), cfg.strategy.begin());
    } else if (key == "region") {
        auto v = nums(3);
        std::copy(v.begin(), v.end(), cfg.region.begin());
    } else if (key == "all_inclusive") {
        cfg.all_inclusive = nums(1)[0];
    } else if (key == "urban") {
        cfg.urban = nums(1)[0];
    } else if (key == "fb_share") {
        cfg.fb_share = to_tn();
    } else if (key == "rooms") {
        cfg.rooms = to_tn();
    } else if (key == "days_open") {
        cfg.days_open = to_tn();
    } else if (key == "stars") {
        cfg.stars = to_tn();
    } else if (key == "employees") {
        auto v = nums(4);
        cfg.employees = {v[0], v[1], v[2], v[3]};
    } else if (key == "short_season") {
        auto v = nums(2);
        cfg.short_season_rate = v[0];
        cfg.short_season_below = static_cast<int>(v[1]);
        if (cfg.short_season_below != v[1]) config_fail(line, "short_season day bound must be an integer");
    } else if (key == "r_squared") {
        auto v = nums(n_responses);
        std::copy(v.begin(), v.end(), cfg.r_squared.begin());
    } else if (key == "restaurant_mode") {
        auto m = parse_restaurant_mode(value);
        if (!m) config_fail(line, "restaurant_mode must be share or dummy");
        cfg.encoding.restaurant = *m;
    } else if (key == "seasonal_mode") {
        auto m = parse_seasonal_mode(value);
        if (!m) config_fail(line, "seasonal_mode must be dummy or days");
        cfg.encoding.seasonal = *m;
    } else {
        config_fail(line, "unknown [synth] key '" + key + "'");
    }
}

} // namespace detail

inline ToolConfig parse_config(std::istream& in) {
    ToolConfig out;
    std::vector<LogRatioSpec> edges;
    std::vector<std::string> extra_nodes;
    bool graph_seen = false;

    std::vector<std::size_t> coefficient_columns;
    std::vector<bool> coefficient_rows(n_responses, false);
    bool coefficients_seen = false;

    enum class Section { graph, synth, coefficients } section = Section::graph;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string text = detail::strip_comment(raw);
        if (text.empty()) continue;

        if (text.front() == '[') {
            if (text == "[graph]") section = Section::graph;
            else if (text == "[synth]") section = Section::synth;
            else if (text == "[coefficients]") section = Section::coefficients;
            else detail::config_fail(line, "unknown section " + text);
            continue;
        }

        switch (section) {
        case Section::graph: {
            auto colon = text.find(':');
            if (colon == std::string::npos) detail::config_fail(line, "expected 'name: numerator/denominator'");
            const std::string name(detail::trim(std::string_view(text).substr(0, colon)));
            const std::string rhs(detail::trim(std::string_view(text).substr(colon + 1)));
            graph_seen = true;
            if (name == "nodes") {
                for (auto& w : detail::words(rhs)) extra_nodes.push_back(w);
                break;
            }
            auto slash = rhs.find('/');
            if (name.empty() || slash == std::string::npos) {
                detail::config_fail(line, "expected 'name: numerator/denominator'");
            }
            const std::string num(detail::trim(std::string_view(rhs).substr(0, slash)));
            const std::string den(detail::trim(std::string_view(rhs).substr(slash + 1)));
            if (num.empty() || den.empty()) detail::config_fail(line, "empty part name");
            try {
                edges.emplace_back(name, num, den);
            } catch (const std::invalid_argument& e) {
                detail::config_fail(line, e.what());
            }
            break;
        }
        case Section::synth: {
            auto eq = text.find('=');
            if (eq == std::string::npos) detail::config_fail(line, "expected 'key = value'");
            const std::string key(detail::trim(std::string_view(text).substr(0, eq)));
            const std::string value(detail::trim(std::string_view(text).substr(eq + 1)));
            detail::apply_synth_key(out.synth, line, key, value);
            break;
        }
        case Section::coefficients: {
            auto w = detail::words(text);
            if (!coefficients_seen) {
                coefficients_seen = true;
                if (w.empty() || w[0] != "response") detail::config_fail(line, "coefficient table needs a 'response' header row");
                if (w.size() != n_columns + 1) detail::config_fail(line, "coefficient header must name all 12 columns");
                const auto& keys = predictor_keys();
                for (std::size_t i = 1; i < w.size(); ++i) {
                    auto it = std::find(keys.begin(), keys.end(), w[i]);
                    if (it == keys.end()) detail::config_fail(line, "unknown coefficient column '" + w[i] + "'");
                    std::size_t col = static_cast<std::size_t>(it - keys.begin());
                    if (std::find(coefficient_columns.begin(), coefficient_columns.end(), col) != coefficient_columns.end())
                        detail::config_fail(line, "coefficient column '" + w[i] + "' repeated");
                    coefficient_columns.push_back(col);
                }
                break;
            }
            const auto& names = synth_response_names();
            auto it = std::find(names.begin(), names.end(), w[0]);
            if (it == names.end()) detail::config_fail(line, "unknown response '" + w[0] + "'");
            const auto row = static_cast<std::size_t>(it - names.begin());
            if (coefficient_rows[row]) detail::config_fail(line, "response '" + w[0] + "' repeated");
            if (w.size() != n_columns + 1) detail::config_fail(line, "coefficient row needs 12 values");
            for (std::size_t i = 1; i < w.size(); ++i) {
                auto v = detail::parse_number<double>(w[i]);
                if (!v) detail::config_fail(line, "not a number '" + w[i] + "'");
                out.synth.coefficients(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(coefficient_columns[i - 1])) = *v;
            }
            coefficient_rows[row] = true;
            break;
        }
        }
    }

    if (coefficients_seen && std::find(coefficient_rows.begin(), coefficient_rows.end(), false) != coefficient_rows.end()) {
        throw InvalidConfig("coefficient table must list P1, P2, P3 and P4");
    }
    if (graph_seen) {
        try {
            out.graph.emplace(std::move(edges), std::move(extra_nodes));
        } catch (const std::invalid_argument& e) {
            throw InvalidConfig(std::string("graph: ") + e.what());
        }
    }
    return out;
}

inline ToolConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("file not found: " + path.string());
    }
    return parse_config(in);
}

inline void write_config(std::ostream& out, const LogRatioGraph& g, const SynthConfig& cfg) {
    auto real = [](double v) { return detail::format_real(v); };
    out << "[graph]\n";
    for (const auto& e : g.edges()) {
        out << e.name() << ": " << e.numerator() << "/" << e.denominator() << "\n";
    }
    out << "\n[synth]\n";
    out << "n = " << cfg.n << "\n";
    out << "seed = " << cfg.seed << "\n";
    out << "strategy =";
    for (double p : cfg.strategy) out << " " << real(p);
    out << "\nall_inclusive = " << real(cfg.all_inclusive) << "\n";
    out << "urban = " << real(cfg.urban) << "\n";
    out << "region =";
    for (double p : cfg.region) out << " " << real(p);
    out << "\n";
    auto tn = [&](const char* key, const TruncatedNormal& d) {
        out << key << " = " << real(d.mean) << " " << real(d.sd) << " " << real(d.lo) << " " << real(d.hi) << "\n";
    };
    tn("fb_share", cfg.fb_share);
    out << "employees = " << real(cfg.employees.mean) << " " << real(cfg.employees.sd) << " "
        << real(cfg.employees.min) << " " << real(cfg.employees.max) << "\n";
    tn("rooms", cfg.rooms);
    tn("days_open", cfg.days_open);
    out << "short_season = " << real(cfg.short_season_rate) << " " << cfg.short_season_below << "\n";
    tn("stars", cfg.stars);
    out << "r_squared =";
    for (double r : cfg.r_squared) out << " " << real(r);
    out << "\nrestaurant_mode = " << to_string(cfg.encoding.restaurant) << "\n";
    out << "seasonal_mode = " << to_string(cfg.encoding.seasonal) << "\n";

    out << "\n[coefficients]\nresponse";
    for (const auto& k : predictor_keys()) out << " " << k;
    out << "\n";
    for (std::size_t j = 0; j < n_responses; ++j) {
        out << synth_response_names()[j];
        for (std::size_t c = 0; c < n_columns; ++c) {
            out << " " << real(cfg.coefficients(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(c)));
        }
        out << "\n";
    }
}

} // namespace hotelcoda

#endif
