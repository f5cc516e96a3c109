#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include <hotelcoda/model.hpp>
#include <hotelcoda/report.hpp>
#include <hotelcoda/synth.hpp>

using namespace hotelcoda;

namespace {

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)}); }

SynthConfig noiseless() {
    SynthConfig cfg;
    cfg.r_squared = {1.0, 1.0, 1.0, 1.0};
    return cfg;
}

FitResult injected(const std::string& response, const std::string& predictor, double b, double p) {
    FitResult f;
    f.response = response;
    f.columns = {"Intercept", predictor};
    f.coefficients = Eigen::Vector2d(0.0, b);
    f.p_values = Eigen::Vector2d(1.0, p);
    return f;
}

} // namespace

TEST(FitModel, NoiselessRecoveryOfGeneratingCoefficients) {
    auto cfg = noiseless();
    auto gen = generate(cfg);
    auto fit = fit_model(gen.records, default_hotel_graph(), gen.encoding);
    ASSERT_EQ(fit.responses.size(), 4u);
    for (std::size_t j = 1; j < 4; ++j) {
        for (int c = 0; c < 12; ++c) {
            EXPECT_NEAR(fit.responses[j].coefficients(c), cfg.coefficients(j, c), 1e-6)
                << fit.responses[j].response << " " << fit.design.columns[c];
        }
    }
    // Occupancy is censored at 100%; the uncapped records carry the exact linear signal.
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < gen.sampled_logratios.rows(); ++i) {
        if (std::find(gen.capped.begin(), gen.capped.end(), static_cast<std::size_t>(i)) == gen.capped.end())
            keep.push_back(i);
    }
    Eigen::MatrixXd x = fit.design.values(keep, Eigen::all);
    Eigen::VectorXd y = fit.responses[0].residuals(keep) + fit.responses[0].fitted(keep);
    auto p1 = fit_ols(x, y, fit.design.columns, "P1");
    for (int c = 0; c < 12; ++c) EXPECT_NEAR(p1.coefficients(c), cfg.coefficients(0, c), 1e-6);
}

TEST(FitModel, InvertedResponsesNegateCoefficients) {
    SynthConfig cfg;
    cfg.seed = 5;
    auto ds = generate(cfg).records;
    auto g = default_hotel_graph();
    std::vector<LogRatioSpec> inverted;
    for (const auto& e : g.edges()) inverted.push_back(inverse_logratio(e));
    auto a = fit_model(ds, g);
    auto b = fit_model(ds, LogRatioGraph(inverted));
    for (std::size_t j = 0; j < 4; ++j) {
        const auto& f = a.responses[j];
        const auto& h = b.responses[j];
        EXPECT_EQ(h.response, f.response + "^-1");
        for (int c = 0; c < 12; ++c) {
            EXPECT_TRUE(rel_close(h.coefficients(c), -f.coefficients(c), 1e-10));
            EXPECT_TRUE(rel_close(h.standard_errors(c), f.standard_errors(c), 1e-10));
            EXPECT_TRUE(rel_close(std::abs(h.t_statistics(c)), std::abs(f.t_statistics(c)), 1e-10));
            EXPECT_TRUE(rel_close(h.p_values(c), f.p_values(c), 1e-10));
        }
        EXPECT_TRUE(rel_close(h.r_squared, f.r_squared, 1e-10));
    }
}

TEST(FitModel, RejectsInvalidGraph) {
    auto ds = generate({}).records;
    auto g = default_hotel_graph().with_edge({"X", parts::assets, parts::expenses});
    EXPECT_THROW(fit_model(ds, g), InvalidGraph);
}

TEST(FitModel, ManagementCellRendering) {
    auto f = injected("P2", "Management", -3.157, 0.0002);
    EXPECT_EQ(coefficient_cell(f.coefficients(1), f.p_values(1)), "-3.157 ***");
}

// Multiplying revenue by c shifts the intercepts of P2, P3, P4 by ln c and nothing else.
TEST(FitModel, ScaleEquivariance) {
    SynthConfig cfg;
    cfg.seed = 9;
    auto ds = generate(cfg).records;
    auto scaled = ds;
    for (auto& r : scaled) r.revenue *= 1000.0;
    auto g = default_hotel_graph();
    auto a = fit_model(ds, g);
    auto b = fit_model(scaled, g);
    const double shift[] = {0.0, std::log(1000.0), std::log(1000.0), std::log(1000.0)};
    for (std::size_t j = 0; j < 4; ++j) {
        const auto& f = a.responses[j];
        const auto& h = b.responses[j];
        EXPECT_NEAR(h.coefficients(0) - f.coefficients(0), shift[j], 1e-9) << f.response;
        for (int c = 1; c < 12; ++c) {
            EXPECT_TRUE(rel_close(h.coefficients(c), f.coefficients(c), 1e-10));
            EXPECT_TRUE(rel_close(h.standard_errors(c), f.standard_errors(c), 1e-10));
        }
        EXPECT_TRUE(rel_close(h.standard_errors(0), f.standard_errors(0), 1e-10));
        EXPECT_TRUE(rel_close(h.r_squared, f.r_squared, 1e-10));
    }
}

TEST(ExpectedSigns, TableOfHypotheses) {
    const EncodingOptions dummy{};
    const EncodingOptions days{RestaurantMode::share, SeasonalMode::days};
    EXPECT_EQ(expected_sign("Management", PerformanceKind::operational, dummy), -1);
    EXPECT_EQ(expected_sign("Management", PerformanceKind::economic, dummy), +1);
    EXPECT_EQ(expected_sign("Restaurant", PerformanceKind::economic, dummy), +1);
    EXPECT_EQ(expected_sign("Seasonal", PerformanceKind::operational, dummy), -1);
    EXPECT_EQ(expected_sign("Seasonal", PerformanceKind::operational, days), +1);
    EXPECT_FALSE(expected_sign("Intercept", PerformanceKind::operational, dummy));
    EXPECT_FALSE(expected_sign("Caribbean", PerformanceKind::economic, dummy));
}

TEST(ExpectedSigns, Verdicts) {
    auto agree = expected_sign_report({injected("P3", "Stars", 0.1, 0.001)});
    ASSERT_EQ(agree.entries.size(), 1u);
    EXPECT_EQ(agree.entries[0].verdict, SignEntry::Verdict::agree);

    auto weak = expected_sign_report({injected("P3", "Stars", -0.2, 0.5)});
    EXPECT_EQ(weak.entries[0].verdict, SignEntry::Verdict::not_significant);

    auto against = expected_sign_report({injected("P1", "Stars", -0.2, 0.01)});
    EXPECT_EQ(against.entries[0].verdict, SignEntry::Verdict::contradict);

    auto boundary = expected_sign_report({injected("P1", "Stars", 0.2, 0.05)});
    EXPECT_EQ(boundary.entries[0].verdict, SignEntry::Verdict::not_significant);

    EXPECT_TRUE(expected_sign_report({injected("Z", "Stars", 0.2, 0.0)}).entries.empty());
}

TEST(ExpectedSigns, RestaurantContradictsOnGeneratedData) {
    SynthConfig cfg;
    cfg.seed = 1;
    auto gen = generate(cfg);
    auto report = expected_sign_report(fit_model(gen.records, default_hotel_graph(), gen.encoding));
    for (const char* response : {"P1", "P2", "P3", "P4"}) {
        auto e = report.find("Restaurant", response);
        ASSERT_TRUE(e) << response;
        EXPECT_EQ(e->verdict, SignEntry::Verdict::contradict) << response << " b=" << e->coefficient << " p=" << e->p_value;
    }
}
