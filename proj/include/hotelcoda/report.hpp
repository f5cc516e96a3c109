#ifndef HOTELCODA_REPORT_HPP
#define HOTELCODA_REPORT_HPP

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "consistency.hpp"
#include "descriptive.hpp"
#include "design.hpp"
#include "graph.hpp"
#include "model.hpp"
#include "ols.hpp"

/**
 * @file report.hpp
 * @brief Markdown, CSV and JSON renderers for fits, descriptives, graphs and checks.
 *
 * Renderers are pure: the same inputs always give byte-identical output.
 */

namespace hotelcoda {

inline constexpr std::string_view tool_version = "0.1.0";

enum class Format { markdown, csv, json };

inline std::optional<Format> parse_format(std::string_view s) {
    if (s == "md" || s == "markdown") return Format::markdown;
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    return std::nullopt;
}

inline constexpr std::string_view significance_legend =
    "Notes: * significant at 5%; ** significant at 1%; *** significant at 0.1%.";

/// Context printed alongside fit tables.
struct ReportMetadata {
    EncodingOptions encoding;
    std::optional<std::uint64_t> seed;
    std::size_t observations = 0;
};

namespace detail {

inline std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    std::string s = buf;
    // No "-0.000".
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

inline std::string general(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

inline std::string sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

// JSON has no NaN/inf; emit null.
inline nlohmann::ordered_json number(double v) {
    return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline void metadata_lines(std::ostream& out, const ReportMetadata& meta) {
    out << "Encoding: restaurant=" << to_string(meta.encoding.restaurant)
        << ", seasonal=" << to_string(meta.encoding.seasonal) << ".\n";
    out << "Standard errors: classical OLS (homoskedastic).";
    if (meta.observations) out << " Observations: " << meta.observations << ".";
    if (meta.seed) out << " Seed: " << *meta.seed << ".";
    out << " hotelcoda " << tool_version << ".\n";
}

inline nlohmann::ordered_json metadata_json(const ReportMetadata& meta) {
    nlohmann::ordered_json j;
    j["tool_version"] = std::string(tool_version);
    j["restaurant_mode"] = std::string(to_string(meta.encoding.restaurant));
    j["seasonal_mode"] = std::string(to_string(meta.encoding.seasonal));
    j["standard_errors"] = "classical_ols";
    j["observations"] = meta.observations;
    if (meta.seed) j["seed"] = *meta.seed;
    return j;
}

} // namespace detail

/// Column heading for a response; P2 is revenue per occupied room-night.
inline std::string response_label(const std::string& response) {
    if (response == "P1") return "Occupancy Ln(P1)";
    if (response == "P2") return "ADR (revenue/occupied) Ln(P2)";
    if (response == "P3") return "Efficiency Ln(P3)";
    if (response == "P4") return "Asset Turnover Ln(P4)";
    return "Ln(" + response + ")";
}

/// "-3.157 ***": coefficient at 3 decimals, then the significance stars if any.
inline std::string coefficient_cell(double coefficient, double p_value) {
    std::string cell = detail::fixed(coefficient, 3);
    const std::string stars = significance_stars(p_value);
    if (!stars.empty()) cell += " " + stars;
    return cell;
}

inline std::string render_fit_table(const std::vector<FitResult>& results, Format format,
                                    const ReportMetadata& meta = {}) {
    std::ostringstream out;
    if (results.empty()) return {};
    const auto& columns = results.front().columns;

    switch (format) {
    case Format::markdown: {
        out << "| Variable |";
        for (const auto& r : results) out << " " << response_label(r.response) << " |";
        out << "\n|---|";
        for (std::size_t i = 0; i < results.size(); ++i) out << "---|";
        out << "\n";
        for (std::size_t c = 0; c < columns.size(); ++c) {
            out << "| " << columns[c] << " |";
            for (const auto& r : results) {
                const auto idx = static_cast<Eigen::Index>(c);
                out << " " << coefficient_cell(r.coefficients(idx), r.p_values(idx)) << " |";
            }
            out << "\n";
        }
        out << "| R² |";
        for (const auto& r : results) out << " " << detail::fixed(r.r_squared, 3) << " |";
        out << "\n\n" << significance_legend << "\n";
        out << "Significance uses strict inequalities (p < 0.05, p < 0.01, p < 0.001).\n";
        bool has_p2 = false;
        for (const auto& r : results) has_p2 = has_p2 || r.response == "P2";
        if (has_p2) {
            out << "ADR (revenue/occupied) is ln(revenue / occupied room-nights), often reported under the RevPAR "
                   "heading; RevPAR itself is P1 x P2.\n";
        }
        detail::metadata_lines(out, meta);
        break;
    }
    case Format::csv: {
        out << "response,variable,coefficient,std_error,t_statistic,p_value,stars\n";
        for (const auto& r : results) {
            for (std::size_t c = 0; c < columns.size(); ++c) {
                const auto idx = static_cast<Eigen::Index>(c);
                out << detail::csv_field(r.response) << "," << detail::csv_field(r.columns[c]) << ","
                    << detail::fixed(r.coefficients(idx), 3) << "," << detail::fixed(r.standard_errors(idx), 3) << ","
                    << detail::fixed(r.t_statistics(idx), 3) << "," << detail::general(r.p_values(idx), 3) << ","
                    << r.stars[c] << "\n";
            }
            out << detail::csv_field(r.response) << ",R2," << detail::fixed(r.r_squared, 3) << ",,,,\n";
        }
        break;
    }
    case Format::json: {
        nlohmann::ordered_json doc;
        doc["metadata"] = detail::metadata_json(meta);
        doc["legend"] = std::string(significance_legend);
        auto& fits = doc["responses"] = nlohmann::ordered_json::array();
        for (const auto& r : results) {
            nlohmann::ordered_json fit;
            fit["response"] = r.response;
            fit["label"] = response_label(r.response);
            fit["r_squared"] = detail::number(r.r_squared);
            fit["degrees_of_freedom"] = r.degrees_of_freedom;
            fit["residual_skewness"] = detail::number(r.residual_skewness);
            fit["residual_excess_kurtosis"] = detail::number(r.residual_excess_kurtosis);
            auto& terms = fit["terms"] = nlohmann::ordered_json::array();
            for (std::size_t c = 0; c < r.columns.size(); ++c) {
                const auto idx = static_cast<Eigen::Index>(c);
                terms.push_back({{"variable", r.columns[c]},
                                 {"coefficient", detail::number(r.coefficients(idx))},
                                 {"std_error", detail::number(r.standard_errors(idx))},
                                 {"t_statistic", detail::number(r.t_statistics(idx))},
                                 {"p_value", detail::number(r.p_values(idx))},
                                 {"stars", r.stars[c]}});
            }
            fits.push_back(std::move(fit));
        }
        out << doc.dump(2) << "\n";
        break;
    }
    }
    return out.str();
}

inline std::string render_descriptives(const DescriptiveTable& table, Format format) {
    std::ostringstream out;
    switch (format) {
    case Format::markdown: {
        out << "| Variable | Mean | Std. Dev | Min. | Max. |\n|---|---|---|---|---|\n";
        std::string group;
        for (const auto& row : table.rows) {
            if (row.group != group) {
                group = row.group;
                out << "| **" << group << "** | | | | |\n";
            }
            const auto& s = row.summary;
            out << "| " << row.variable << (row.proportion ? "*" : "") << " | " << detail::fixed(s.mean, 2) << " | "
                << (row.proportion ? "-" : detail::fixed(s.sd, 2)) << " | " << detail::fixed(s.min, 2) << " | "
                << detail::fixed(s.max, 2) << " |\n";
        }
        out << "\n* Dummy-coded variables; the mean is a proportion. n = " << table.n << ".\n";
        break;
    }
    case Format::csv: {
        out << "group,variable,mean,sd,min,max,proportion\n";
        for (const auto& row : table.rows) {
            const auto& s = row.summary;
            out << detail::csv_field(row.group) << "," << detail::csv_field(row.variable) << ","
                << detail::general(s.mean, 10) << "," << (row.proportion ? "" : detail::general(s.sd, 10)) << ","
                << detail::general(s.min, 10) << "," << detail::general(s.max, 10) << ","
                << (row.proportion ? 1 : 0) << "\n";
        }
        break;
    }
    case Format::json: {
        nlohmann::ordered_json doc;
        doc["n"] = table.n;
        auto& rows = doc["variables"] = nlohmann::ordered_json::array();
        for (const auto& row : table.rows) {
            nlohmann::ordered_json j;
            j["group"] = row.group;
            j["variable"] = row.variable;
            j["mean"] = detail::number(row.summary.mean);
            j["sd"] = row.proportion ? nlohmann::ordered_json(nullptr) : detail::number(row.summary.sd);
            j["min"] = detail::number(row.summary.min);
            j["max"] = detail::number(row.summary.max);
            j["proportion"] = row.proportion;
            rows.push_back(std::move(j));
        }
        out << doc.dump(2) << "\n";
        break;
    }
    }
    return out.str();
}

/// One-line verdict, e.g. "valid: 5 nodes, 4 edges, tree".
inline std::string graph_summary(const ValidationReport& report) {
    std::string out = report.valid ? "valid: " : "invalid: ";
    out += std::to_string(report.node_count) + " nodes, " + std::to_string(report.edge_count) + " edges";
    if (report.valid) return out + ", tree";
    if (!report.connected) {
        out += "; disconnected (unreachable:";
        for (const auto& n : report.unreachable) out += " " + n;
        out += ")";
    }
    if (!report.acyclic) {
        out += "; cycle:";
        for (std::size_t i = 0; i < report.cycle.size(); ++i) out += (i ? " - " : " ") + report.cycle[i];
    }
    if (report.node_count == 0) out += "; no nodes";
    return out;
}

inline std::string render_graph_validation(const LogRatioGraph& g, const ValidationReport& report, Format format) {
    std::ostringstream out;
    switch (format) {
    case Format::markdown:
        out << graph_summary(report) << "\n";
        out << "connected: " << (report.connected ? "yes" : "no") << "; acyclic: " << (report.acyclic ? "yes" : "no")
            << "; unique paths: " << (report.unique_paths ? "yes" : "no") << "\n";
        for (const auto& e : g.edges()) {
            out << "  " << e.name() << ": " << e.numerator() << " / " << e.denominator() << "\n";
        }
        break;
    case Format::csv:
        out << "edge,numerator,denominator\n";
        for (const auto& e : g.edges()) out << e.name() << "," << e.numerator() << "," << e.denominator() << "\n";
        out << "# " << graph_summary(report) << "\n";
        break;
    case Format::json: {
        nlohmann::ordered_json doc;
        doc["valid"] = report.valid;
        doc["connected"] = report.connected;
        doc["acyclic"] = report.acyclic;
        doc["unique_paths"] = report.unique_paths;
        doc["nodes"] = g.nodes();
        auto& edges = doc["edges"] = nlohmann::ordered_json::array();
        for (const auto& e : g.edges()) {
            edges.push_back({{"name", e.name()}, {"numerator", e.numerator()}, {"denominator", e.denominator()}});
        }
        doc["cycle"] = report.cycle;
        doc["unreachable"] = report.unreachable;
        out << doc.dump(2) << "\n";
        break;
    }
    }
    return out.str();
}

inline std::string render_sign_report(const SignReport& report, Format format) {
    std::ostringstream out;
    auto sign = [](int s) { return s > 0 ? "+" : "-"; };
    switch (format) {
    case Format::markdown:
        out << "| Variable | Response | Expected | Coefficient | p-value | Verdict |\n|---|---|---|---|---|---|\n";
        for (const auto& e : report.entries) {
            out << "| " << e.predictor << " | " << e.response << " | " << sign(e.expected) << " | "
                << coefficient_cell(e.coefficient, e.p_value) << " | " << detail::general(e.p_value, 3) << " | "
                << to_string(e.verdict) << " |\n";
        }
        out << "\nSigns are judged only when p < 0.05. Seasonal encoding: " << to_string(report.encoding.seasonal)
            << ".\n";
        break;
    case Format::csv:
        out << "variable,response,expected,coefficient,p_value,verdict\n";
        for (const auto& e : report.entries) {
            out << detail::csv_field(e.predictor) << "," << e.response << "," << sign(e.expected) << ","
                << detail::fixed(e.coefficient, 3) << "," << detail::general(e.p_value, 3) << ","
                << to_string(e.verdict) << "\n";
        }
        break;
    case Format::json: {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const auto& e : report.entries) {
            doc.push_back({{"variable", e.predictor},
                           {"response", e.response},
                           {"expected", sign(e.expected)},
                           {"coefficient", detail::number(e.coefficient)},
                           {"p_value", detail::number(e.p_value)},
                           {"verdict", to_string(e.verdict)}});
        }
        out << doc.dump(2) << "\n";
        break;
    }
    }
    return out.str();
}

inline std::string render_consistency(const ConsistencyReport& r, Format format) {
    std::ostringstream out;
    switch (format) {
    case Format::markdown: {
        out << "Consistency check: " << r.ratio << " vs " << r.inverse_ratio << "\n\n";
        out << "| Variable | ln " << r.ratio << " | ln " << r.inverse_ratio << " | raw " << r.ratio << " | raw "
            << r.inverse_ratio << " |\n|---|---|---|---|---|\n";
        const auto& cols = r.log_fit.columns;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const auto i = static_cast<Eigen::Index>(c);
            out << "| " << cols[c] << " | " << detail::fixed(r.log_fit.coefficients(i), 3) << " | "
                << detail::fixed(r.log_inverse_fit.coefficients(i), 3) << " | "
                << detail::fixed(r.raw_fit.coefficients(i), 3) << " | "
                << detail::fixed(r.raw_inverse_fit.coefficients(i), 3) << " |\n";
        }
        out << "| R² | " << detail::fixed(r.log_fit.r_squared, 3) << " | "
            << detail::fixed(r.log_inverse_fit.r_squared, 3) << " | " << detail::fixed(r.raw_fit.r_squared, 3)
            << " | " << detail::fixed(r.raw_inverse_fit.r_squared, 3) << " |\n\n";
        out << "log-ratio: max |b + b_inv| = " << detail::sci(r.log_max_coefficient_sum)
            << ", |R2 - R2_inv| = " << detail::sci(r.log_r2_difference) << "\n";
        out << "raw ratio: ||b + b_inv|| / ||b|| = " << detail::general(r.raw_divergence, 6)
            << ", |R2 - R2_inv| = " << detail::general(r.raw_r2_difference, 6) << "\n";
        if (r.no_variance) out << "no variance: the ratio is constant across records\n";
        break;
    }
    case Format::csv:
        out << "metric,value\n";
        out << "log_max_coefficient_sum," << detail::general(r.log_max_coefficient_sum, 17) << "\n";
        out << "log_r2_difference," << detail::general(r.log_r2_difference, 17) << "\n";
        out << "raw_divergence," << detail::general(r.raw_divergence, 17) << "\n";
        out << "raw_r2_difference," << detail::general(r.raw_r2_difference, 17) << "\n";
        out << "no_variance," << (r.no_variance ? 1 : 0) << "\n";
        break;
    case Format::json: {
        nlohmann::ordered_json doc;
        doc["ratio"] = r.ratio;
        doc["inverse_ratio"] = r.inverse_ratio;
        doc["log_max_coefficient_sum"] = detail::number(r.log_max_coefficient_sum);
        doc["log_r2_difference"] = detail::number(r.log_r2_difference);
        doc["raw_divergence"] = detail::number(r.raw_divergence);
        doc["raw_r2_difference"] = detail::number(r.raw_r2_difference);
        doc["no_variance"] = r.no_variance;
        auto coef = [](const FitResult& f) {
            std::vector<double> v(f.coefficients.data(), f.coefficients.data() + f.coefficients.size());
            return v;
        };
        doc["coefficients"] = {{"log", coef(r.log_fit)},
                               {"log_inverse", coef(r.log_inverse_fit)},
                               {"raw", coef(r.raw_fit)},
                               {"raw_inverse", coef(r.raw_inverse_fit)}};
        out << doc.dump(2) << "\n";
        break;
    }
    }
    return out.str();
}

} // namespace hotelcoda

#endif
