#include <cmath>

#include <gtest/gtest.h>

#include <hotelcoda/consistency.hpp>
#include <hotelcoda/synth.hpp>

#include "fixtures.hpp"

using namespace hotelcoda;

namespace {

Dataset seed_one() {
    SynthConfig cfg;
    cfg.seed = 1;
    return generate(cfg).records;
}

} // namespace

TEST(Consistency, LogFitsAreExactMirrors) {
    auto ds = seed_one();
    for (const char* ratio : {"P1", "P2", "P3", "P4"}) {
        auto r = consistency_demo(ds, default_hotel_graph(), ratio);
        EXPECT_LE(r.log_max_coefficient_sum, 1e-10) << ratio;
        EXPECT_LE(r.log_r2_difference, 1e-10) << ratio;
        EXPECT_EQ(r.inverse_ratio, std::string(ratio) + "^-1");
    }
}

// Realized value frozen from the seed-1 default dataset.
TEST(Consistency, RawRatiosDivergeOnSeedOne) {
    auto r = consistency_demo(seed_one(), default_hotel_graph(), "P3");
    EXPECT_GT(r.raw_divergence, 0.01);
    EXPECT_NEAR(r.raw_divergence, 0.90595124492720069, 1e-9);
    EXPECT_FALSE(r.no_variance);
}

TEST(Consistency, ConstantRatioHasNoVariance) {
    Dataset ds;
    for (int i = 0; i < 30; ++i) {
        auto h = fixtures::hotel("h" + std::to_string(i), 50.0, 200.0 + i, 100.0 + i / 2.0, 400.0);
        h.revenue = 3.0 * h.expenses;
        h.employees = 1 + i;
        h.stars = 2.0 + ((i * 7) % 5) * 0.5;
        h.strategy = static_cast<Strategy>(i % 4);
        h.region = static_cast<Region>(i % 3);
        h.urban = (i * 5) % 7 < 3;
        h.all_inclusive = i % 5 == 0;
        h.fb_share = (i % 6) / 10.0;
        h.days_open = 100 + 9 * i;
        h.rooms = 2;
        ds.push_back(h);
    }
    auto r = consistency_demo(ds, {"P3", parts::revenue, parts::expenses});
    EXPECT_TRUE(r.no_variance);
    EXPECT_TRUE(r.log_fit.no_variance);
    EXPECT_TRUE(r.raw_fit.no_variance);
    EXPECT_EQ(r.log_fit.r_squared, 0.0);
}

TEST(Consistency, UnknownRatio) {
    EXPECT_THROW(consistency_demo(seed_one(), default_hotel_graph(), "P9"), UnknownRatio);
}
