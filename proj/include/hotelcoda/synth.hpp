#ifndef HOTELCODA_SYNTH_HPP
#define HOTELCODA_SYNTH_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/distributions/normal.hpp>

#include "dataset.hpp"
#include "design.hpp"
#include "errors.hpp"

/**
 * @file synth.hpp
 * @brief Synthetic hotel datasets calibrated to published marginals.
 *
 * Attributes are drawn independently from their marginals. Each of the four
 * log-ratio responses is X * beta_j plus Gaussian noise whose variance makes
 * the population R^2 hit the configured target, and the parts are then
 * rebuilt from the responses:
 *
 *     available = rooms * days_open
 *     occupied  = available * exp(min(lnP1, 0))
 *     revenue   = occupied  * exp(lnP2)
 *     expenses  = revenue   / exp(lnP3)
 *     assets    = revenue   / exp(lnP4)
 *
 * Record i draws from its own engine seeded by (seed, i), so output does not
 * depend on how records are scheduled.
 */

namespace hotelcoda {

/// Normal distribution truncated to [lo, hi].
struct TruncatedNormal {
    double mean;
    double sd;
    double lo;
    double hi;

    friend bool operator==(const TruncatedNormal&, const TruncatedNormal&) = default;
};

/// Log-normal matched to the given mean/sd, then clipped to [min, max].
struct ClippedLogNormal {
    double mean;
    double sd;
    double min;
    double max;

    friend bool operator==(const ClippedLogNormal&, const ClippedLogNormal&) = default;
};

inline constexpr std::size_t n_responses = 4;
inline constexpr std::size_t n_columns = 12;

using CoefficientMatrix = Eigen::Matrix<double, n_responses, n_columns, Eigen::RowMajor>;

/// Means of the four log-ratio responses the default intercepts are tuned to.
inline const std::array<double, n_responses>& response_log_mean_targets() {
    static const std::array<double, n_responses> targets = {
        std::log(0.6762),          // occupancy 67.62%
        std::log(107.78 / 0.6762), // RevPAR / occupancy
        std::log(2.03),            // efficiency
        std::log(0.63),            // asset turnover
    };
    return targets;
}

/**
 * Default coefficients, one row per response (P1..P4), columns in
 * `predictor_names()` order.
 *
 * Slopes are the published estimates. Intercepts come from
 * `derive_intercepts()` (see tools/derive_intercepts.cpp) run with the
 * default marginals and encoding.
 */
inline CoefficientMatrix default_coefficients() {
    CoefficientMatrix b;
    // clang-format off
    //    Intercept  Leasing  Mgmt    Franch  Rest.   AllInc  Size    Stars   Urban   Seas.   Carib.  RoW
    b << -0.351028,  0.017, -0.031, -0.304, -0.095,  0.069,  0.059, -0.018, -0.113, -0.081, -0.315, -0.120,
          4.157673, -0.141, -3.157, -3.033, -0.199, -0.187,  0.182,  0.448, -0.062, -0.379, -0.265, -0.245,
         -0.468386, -0.218,  0.807,  1.353, -0.213, -0.171,  0.158,  0.136, -0.150, -0.142, -0.319, -0.260,
          0.558143, -0.119, -2.578, -2.731, -0.260, -0.327, -0.246,  0.470, -0.328, -0.670, -0.259, -0.110;
    // clang-format on
    return b;
}

struct SynthConfig {
    int n = 255;
    std::uint64_t seed = 1;

    // lease, management, franchise, ownership
    std::array<double, 4> strategy = {0.40, 0.33, 0.08, 0.18};
    double all_inclusive = 0.18;
    double urban = 0.55;
    // europe, caribbean, rest_of_world
    std::array<double, 3> region = {0.64, 0.16, 0.19};

    TruncatedNormal fb_share{0.25, 0.13, 0.0, 0.57};
    ClippedLogNormal employees{161.0, 198.0, 2.0, 1541.0};
    TruncatedNormal rooms{273.0, 179.0, 19.0, 1176.0};
    TruncatedNormal days_open{331.6, 68.4, 101.0, 365.0};
    /// Fraction of hotels drawn uniformly from [days_open.lo, short_season_below).
    double short_season_rate = 0.07;
    int short_season_below = 183;
    TruncatedNormal stars{4.2, 0.61, 2.0, 5.0};

    CoefficientMatrix coefficients = default_coefficients();
    std::array<double, n_responses> r_squared = {0.382, 0.947, 0.675, 0.865};

    /// Encoding used to build X during generation (and to refit it).
    EncodingOptions encoding{RestaurantMode::dummy, SeasonalMode::dummy};

    friend bool operator==(const SynthConfig&, const SynthConfig&) = default;
};

inline const std::array<std::string, n_responses>& synth_response_names() {
    static const std::array<std::string, n_responses> names = {"P1", "P2", "P3", "P4"};
    return names;
}

namespace detail {

template <std::size_t N>
std::array<double, N> normalized(const std::array<double, N>& p, const char* what) {
    double total = 0.0;
    for (double x : p) {
        if (!(x >= 0.0 && x <= 1.0)) {
            throw InvalidConfig(std::string(what) + ": probabilities must lie in [0, 1]");
        }
        total += x;
    }
    if (!(total > 0.0)) {
        throw InvalidConfig(std::string(what) + ": probabilities sum to zero");
    }
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) {
        out[i] = p[i] / total;
    }
    return out;
}

inline void check_range(const char* what, double mean, double sd, double lo, double hi) {
    if (!(sd > 0.0) || !(lo < hi) || !std::isfinite(mean)) {
        throw InvalidConfig(std::string(what) + ": need sd > 0 and lo < hi");
    }
}

inline void check_probability(const char* what, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidConfig(std::string(what) + ": probability must lie in [0, 1]");
    }
}

inline double draw_truncated_normal(std::mt19937_64& rng, const TruncatedNormal& d) {
    boost::math::normal_distribution<double> unit;
    const double a = boost::math::cdf(unit, (d.lo - d.mean) / d.sd);
    const double b = boost::math::cdf(unit, (d.hi - d.mean) / d.sd);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double p = a + (b - a) * u(rng);
    p = std::clamp(p, std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0));
    return std::clamp(d.mean + d.sd * boost::math::quantile(unit, p), d.lo, d.hi);
}

inline double draw_clipped_lognormal(std::mt19937_64& rng, const ClippedLogNormal& d) {
    const double s2 = std::log1p((d.sd * d.sd) / (d.mean * d.mean));
    const double mu = std::log(d.mean) - 0.5 * s2;
    std::normal_distribution<double> z(0.0, 1.0);
    return std::clamp(std::exp(mu + std::sqrt(s2) * z(rng)), d.min, d.max);
}

template <std::size_t N>
std::size_t draw_category(std::mt19937_64& rng, const std::array<double, N>& p) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double x = u(rng);
    double cum = 0.0;
    for (std::size_t i = 0; i + 1 < N; ++i) {
        cum += p[i];
        if (x < cum) {
            return i;
        }
    }
    return N - 1;
}

inline bool draw_bernoulli(std::mt19937_64& rng, double p) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return u(rng) < p;
}

inline std::mt19937_64 record_engine(std::uint64_t seed, std::size_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(std::uint64_t(index) >> 32)};
    return std::mt19937_64(seq);
}

inline std::string record_id(std::size_t index) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "H%04zu", index + 1);
    return buf;
}

struct NormalizedMarginals {
    std::array<double, 4> strategy;
    std::array<double, 3> region;
};

inline NormalizedMarginals check_config(const SynthConfig& cfg) {
    if (cfg.n < 20) {
        throw InvalidConfig("n must be at least 20");
    }
    check_probability("all_inclusive", cfg.all_inclusive);
    check_probability("urban", cfg.urban);
    check_probability("short_season_rate", cfg.short_season_rate);
    check_range("fb_share", cfg.fb_share.mean, cfg.fb_share.sd, cfg.fb_share.lo, cfg.fb_share.hi);
    check_range("rooms", cfg.rooms.mean, cfg.rooms.sd, cfg.rooms.lo, cfg.rooms.hi);
    check_range("days_open", cfg.days_open.mean, cfg.days_open.sd, cfg.days_open.lo, cfg.days_open.hi);
    check_range("stars", cfg.stars.mean, cfg.stars.sd, cfg.stars.lo, cfg.stars.hi);
    if (!(cfg.employees.mean > 0.0) || !(cfg.employees.sd > 0.0) || !(cfg.employees.min >= 1.0) ||
        !(cfg.employees.min < cfg.employees.max)) {
        throw InvalidConfig("employees: need mean > 0, sd > 0 and 1 <= min < max");
    }
    if (cfg.fb_share.lo < 0.0 || cfg.fb_share.hi > 1.0) {
        throw InvalidConfig("fb_share: range must lie within [0, 1]");
    }
    if (cfg.stars.lo < 1.0 || cfg.stars.hi > 5.0) {
        throw InvalidConfig("stars: range must lie within [1, 5]");
    }
    if (cfg.rooms.lo < 1.0) {
        throw InvalidConfig("rooms: minimum must be at least 1");
    }
    if (cfg.days_open.lo < 1.0 || cfg.days_open.hi > 366.0) {
        throw InvalidConfig("days_open: range must lie within [1, 366]");
    }
    if (cfg.short_season_below <= cfg.days_open.lo || cfg.short_season_below > cfg.days_open.hi) {
        throw InvalidConfig("short_season_below must lie in (days_open.lo, days_open.hi]");
    }
    for (double r2 : cfg.r_squared) {
        if (!(r2 > 0.0 && r2 <= 1.0)) {
            throw InvalidConfig("R^2 targets must lie in (0, 1]");
        }
    }
    if (!cfg.coefficients.allFinite()) {
        throw InvalidConfig("coefficients must be finite");
    }
    return {normalized(cfg.strategy, "strategy"), normalized(cfg.region, "region")};
}

/// Attribute draws for record `index`; leaves the engine positioned for the noise draws.
inline HotelRecord sample_attributes(const SynthConfig& cfg, const NormalizedMarginals& m, std::size_t index,
                                     std::mt19937_64& rng) {
    HotelRecord r;
    r.id = record_id(index);
    r.strategy = static_cast<Strategy>(draw_category(rng, m.strategy));
    r.all_inclusive = draw_bernoulli(rng, cfg.all_inclusive);
    r.urban = draw_bernoulli(rng, cfg.urban);
    r.region = static_cast<Region>(draw_category(rng, m.region));
    r.fb_share = draw_truncated_normal(rng, cfg.fb_share);
    r.employees = static_cast<int>(std::lround(draw_clipped_lognormal(rng, cfg.employees)));
    r.rooms = static_cast<int>(std::lround(draw_truncated_normal(rng, cfg.rooms)));
    if (draw_bernoulli(rng, cfg.short_season_rate)) {
        std::uniform_int_distribution<int> days(static_cast<int>(std::ceil(cfg.days_open.lo)),
                                                cfg.short_season_below - 1);
        r.days_open = days(rng);
    } else {
        TruncatedNormal regular = cfg.days_open;
        regular.lo = cfg.short_season_below;
        r.days_open = static_cast<int>(std::lround(draw_truncated_normal(rng, regular)));
    }
    r.stars = draw_truncated_normal(rng, cfg.stars);
    return r;
}

inline std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace detail

/// Stable fingerprint of every generation parameter.
inline std::uint64_t config_hash(const SynthConfig& cfg) {
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&](const auto& value) { h = detail::fnv1a(h, &value, sizeof value); };
    mix(cfg.n);
    mix(cfg.seed);
    for (double p : cfg.strategy) mix(p);
    mix(cfg.all_inclusive);
    mix(cfg.urban);
    for (double p : cfg.region) mix(p);
    for (const auto* d : {&cfg.fb_share, &cfg.rooms, &cfg.days_open, &cfg.stars}) {
        mix(d->mean);
        mix(d->sd);
        mix(d->lo);
        mix(d->hi);
    }
    mix(cfg.employees.mean);
    mix(cfg.employees.sd);
    mix(cfg.employees.min);
    mix(cfg.employees.max);
    mix(cfg.short_season_rate);
    mix(cfg.short_season_below);
    for (Eigen::Index i = 0; i < cfg.coefficients.size(); ++i) mix(cfg.coefficients.data()[i]);
    for (double r2 : cfg.r_squared) mix(r2);
    int modes[2] = {static_cast<int>(cfg.encoding.restaurant), static_cast<int>(cfg.encoding.seasonal)};
    mix(modes);
    return h;
}

struct GeneratedDataset {
    Dataset records;
    std::uint64_t seed = 0;
    std::uint64_t config_hash = 0;
    EncodingOptions encoding;
    /// Noise standard deviation applied to each response.
    std::array<double, n_responses> noise_sigma{};
    /// Log-ratios as sampled, before the occupancy cap (n x 4).
    Eigen::MatrixXd sampled_logratios;
    /// Records whose occupancy draw exceeded 100% and was capped.
    std::vector<std::size_t> capped;

    double capped_fraction() const {
        return records.empty() ? 0.0 : static_cast<double>(capped.size()) / static_cast<double>(records.size());
    }
};

/**
 * @throws InvalidConfig for out-of-range parameters.
 * @throws DegenerateVariance when a response has a constant linear predictor but an R^2 target below 1.
 */
inline GeneratedDataset generate(const SynthConfig& cfg) {
    const auto marginals = detail::check_config(cfg);
    const auto n = static_cast<std::size_t>(cfg.n);

    GeneratedDataset out;
    out.seed = cfg.seed;
    out.config_hash = config_hash(cfg);
    out.encoding = cfg.encoding;
    out.records.reserve(n);

    Eigen::MatrixXd noise(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n_responses));
    for (std::size_t i = 0; i < n; ++i) {
        auto rng = detail::record_engine(cfg.seed, i);
        out.records.push_back(detail::sample_attributes(cfg, marginals, i, rng));
        std::normal_distribution<double> z(0.0, 1.0);
        for (std::size_t j = 0; j < n_responses; ++j) {
            noise(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = z(rng);
        }
    }

    const DesignMatrix x = build_design_matrix(out.records, cfg.encoding);
    out.sampled_logratios.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n_responses));
    for (std::size_t j = 0; j < n_responses; ++j) {
        const auto col = static_cast<Eigen::Index>(j);
        const Eigen::VectorXd eta = x.values * cfg.coefficients.row(col).transpose();
        const double var = (eta.array() - eta.mean()).square().mean();
        const double r2 = cfg.r_squared[j];
        double sigma = 0.0;
        if (r2 < 1.0) {
            if (!(var > 1e-24)) {
                throw DegenerateVariance(synth_response_names()[j]);
            }
            sigma = std::sqrt(var * (1.0 - r2) / r2);
        }
        out.noise_sigma[j] = sigma;
        out.sampled_logratios.col(col) = eta + sigma * noise.col(col);
    }

    for (std::size_t i = 0; i < n; ++i) {
        auto& r = out.records[i];
        const auto row = static_cast<Eigen::Index>(i);
        double ln_occupancy = out.sampled_logratios(row, 0);
        if (ln_occupancy > 0.0) {
            ln_occupancy = 0.0;
            out.capped.push_back(i);
        }
        const double available = r.available();
        r.occupied_room_nights = available * std::exp(ln_occupancy);
        r.revenue = r.occupied_room_nights * std::exp(out.sampled_logratios(row, 1));
        r.expenses = r.revenue / std::exp(out.sampled_logratios(row, 2));
        r.assets = r.revenue / std::exp(out.sampled_logratios(row, 3));
    }
    return out;
}

/**
 * Intercepts that put each response mean on `targets` for the given slopes,
 * estimated from the column means of `n_sim` simulated attribute rows.
 */
inline std::array<double, n_responses> derive_intercepts(const SynthConfig& cfg, std::size_t n_sim,
                                                         std::uint64_t seed,
                                                         const std::array<double, n_responses>& targets =
                                                             response_log_mean_targets()) {
    const auto marginals = detail::check_config(cfg);
    Eigen::VectorXd column_mean = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n_columns));
    for (std::size_t i = 0; i < n_sim; ++i) {
        auto rng = detail::record_engine(seed, i);
        column_mean += encode_record(detail::sample_attributes(cfg, marginals, i, rng), cfg.encoding).transpose();
    }
    column_mean /= static_cast<double>(n_sim);

    std::array<double, n_responses> out{};
    for (std::size_t j = 0; j < n_responses; ++j) {
        const auto row = static_cast<Eigen::Index>(j);
        const double slope_part = cfg.coefficients.row(row).tail(n_columns - 1).dot(column_mean.tail(n_columns - 1));
        out[j] = targets[j] - slope_part;
    }
    return out;
}

} // namespace hotelcoda

#endif
