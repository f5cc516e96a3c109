#ifndef HOTELCODA_MODEL_HPP
#define HOTELCODA_MODEL_HPP

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "coda.hpp"
#include "dataset.hpp"
#include "design.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "ols.hpp"

namespace hotelcoda {

/// One OLS fit per graph edge, all sharing the same design matrix.
struct ModelFit {
    DesignMatrix design;
    std::vector<FitResult> responses;
};

inline ModelFit fit_model(const Dataset& ds, const LogRatioGraph& g, const EncodingOptions& opts = {}) {
    auto report = validate_graph(g);
    if (!report.valid) {
        throw InvalidGraph("log-ratio graph is not a connected acyclic graph; refusing to fit");
    }
    ModelFit out{build_design_matrix(ds, opts), {}};
    const Eigen::MatrixXd y = batch_logratios(ds, std::span<const LogRatioSpec>(g.edges()));
    out.responses.reserve(g.edges().size());
    for (std::size_t j = 0; j < g.edges().size(); ++j) {
        out.responses.push_back(fit_ols(out.design, y.col(static_cast<Eigen::Index>(j)), g.edges()[j].name()));
    }
    return out;
}

enum class PerformanceKind { operational, economic };

/// P1/P2 are operational, P3/P4 economic; other names carry no hypothesis.
inline std::optional<PerformanceKind> performance_kind(const std::string& response) {
    if (response == "P1" || response == "P2") return PerformanceKind::operational;
    if (response == "P3" || response == "P4") return PerformanceKind::economic;
    return std::nullopt;
}

/**
 * Hypothesised sign of a predictor (+1/-1), or nullopt when there is none.
 *
 * Hypotheses are stated for days open, so the seasonal dummy (fewer days)
 * flips the expected sign. Intercept and region columns have no hypothesis.
 */
inline std::optional<int> expected_sign(const std::string& predictor, PerformanceKind kind,
                                        const EncodingOptions& enc) {
    const bool op = kind == PerformanceKind::operational;
    if (predictor == "Leasing" || predictor == "Management" || predictor == "Franchise") {
        return op ? -1 : +1;
    }
    if (predictor == "Restaurant" || predictor == "All-inclusive" || predictor == "Size" || predictor == "Stars" ||
        predictor == "Urban") {
        return +1;
    }
    if (predictor == "Seasonal") {
        return enc.seasonal == SeasonalMode::days ? +1 : -1;
    }
    return std::nullopt;
}

struct SignEntry {
    enum class Verdict { agree, contradict, not_significant };

    std::string predictor;
    std::string response;
    int expected;
    double coefficient;
    double p_value;
    Verdict verdict;
};

inline const char* to_string(SignEntry::Verdict v) {
    switch (v) {
    case SignEntry::Verdict::agree: return "agree";
    case SignEntry::Verdict::contradict: return "contradict";
    case SignEntry::Verdict::not_significant: return "not-significant";
    }
    return "?";
}

struct SignReport {
    EncodingOptions encoding;
    std::vector<SignEntry> entries;

    std::optional<SignEntry> find(const std::string& predictor, const std::string& response) const {
        for (const auto& e : entries) {
            if (e.predictor == predictor && e.response == response) {
                return e;
            }
        }
        return std::nullopt;
    }
};

inline constexpr double sign_significance_level = 0.05;

inline SignEntry::Verdict judge_sign(int expected, double coefficient, double p) {
    if (!(p < sign_significance_level)) {
        return SignEntry::Verdict::not_significant;
    }
    const int fitted = coefficient > 0.0 ? +1 : (coefficient < 0.0 ? -1 : 0);
    return fitted == expected ? SignEntry::Verdict::agree : SignEntry::Verdict::contradict;
}

/// Compares significant fitted signs with the hypothesised ones, predictor by response.
inline SignReport expected_sign_report(const std::vector<FitResult>& results, const EncodingOptions& enc = {}) {
    SignReport report{enc, {}};
    for (const auto& fit : results) {
        auto kind = performance_kind(fit.response);
        if (!kind) {
            continue;
        }
        for (std::size_t j = 0; j < fit.columns.size(); ++j) {
            auto expected = expected_sign(fit.columns[j], *kind, enc);
            if (!expected) {
                continue;
            }
            const auto idx = static_cast<Eigen::Index>(j);
            const double b = fit.coefficients(idx);
            const double p = fit.p_values(idx);
            report.entries.push_back({fit.columns[j], fit.response, *expected, b, p, judge_sign(*expected, b, p)});
        }
    }
    return report;
}

inline SignReport expected_sign_report(const ModelFit& fit) {
    return expected_sign_report(fit.responses, fit.design.encoding);
}

} // namespace hotelcoda

#endif
