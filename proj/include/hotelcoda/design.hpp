#ifndef HOTELCODA_DESIGN_HPP
#define HOTELCODA_DESIGN_HPP

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "dataset.hpp"
#include "errors.hpp"

/**
 * @file design.hpp
 * @brief Dummy/continuous encoding of hotel attributes into a design matrix.
 *
 * Reference levels are ownership (strategy), vacation (location) and Europe
 * (region); those levels get no column.
 */

namespace hotelcoda {

/// How the restaurant predictor is encoded.
enum class RestaurantMode {
    share, ///< F&B revenue share as-is
    dummy, ///< 1 when the F&B share exceeds 20%
};

/// How the seasonality predictor is encoded.
enum class SeasonalMode {
    dummy, ///< 1 when open fewer than 270 days (under nine months)
    days,  ///< number of days open
};

inline constexpr double restaurant_share_threshold = 0.20;
inline constexpr int seasonal_days_threshold = 270;

struct EncodingOptions {
    RestaurantMode restaurant = RestaurantMode::share;
    SeasonalMode seasonal = SeasonalMode::dummy;

    friend bool operator==(const EncodingOptions&, const EncodingOptions&) = default;
};

inline std::string_view to_string(RestaurantMode m) { return m == RestaurantMode::share ? "share" : "dummy"; }
inline std::string_view to_string(SeasonalMode m) { return m == SeasonalMode::dummy ? "dummy" : "days"; }

inline std::optional<RestaurantMode> parse_restaurant_mode(std::string_view s) {
    if (s == "share") return RestaurantMode::share;
    if (s == "dummy") return RestaurantMode::dummy;
    return std::nullopt;
}

inline std::optional<SeasonalMode> parse_seasonal_mode(std::string_view s) {
    if (s == "dummy") return SeasonalMode::dummy;
    if (s == "days") return SeasonalMode::days;
    return std::nullopt;
}

/// Column labels in model order; index 0 is the intercept.
inline const std::array<std::string, 12>& predictor_names() {
    static const std::array<std::string, 12> names = {
        "Intercept", "Leasing", "Management", "Franchise", "Restaurant", "All-inclusive",
        "Size",      "Stars",   "Urban",      "Seasonal",  "Caribbean",  "Rest of the world",
    };
    return names;
}

/// Config-file spelling of the same columns.
inline const std::array<std::string, 12>& predictor_keys() {
    static const std::array<std::string, 12> keys = {
        "intercept", "leasing", "management", "franchise", "restaurant", "all_inclusive",
        "size",      "stars",   "urban",      "seasonal",  "caribbean",  "rest_of_world",
    };
    return keys;
}

struct DesignMatrix {
    std::vector<std::string> columns;
    Eigen::MatrixXd values;
    EncodingOptions encoding;
};

/// One encoded row; the same rules `build_design_matrix()` applies.
inline Eigen::RowVectorXd encode_record(const HotelRecord& r, const EncodingOptions& opts) {
    if (r.employees < 1) {
        throw InvalidEmployees(r.id);
    }
    Eigen::RowVectorXd row(12);
    row(0) = 1.0;
    row(1) = r.strategy == Strategy::lease ? 1.0 : 0.0;
    row(2) = r.strategy == Strategy::management ? 1.0 : 0.0;
    row(3) = r.strategy == Strategy::franchise ? 1.0 : 0.0;
    row(4) = opts.restaurant == RestaurantMode::share ? r.fb_share
                                                      : (r.fb_share > restaurant_share_threshold ? 1.0 : 0.0);
    row(5) = r.all_inclusive ? 1.0 : 0.0;
    row(6) = std::log(static_cast<double>(r.employees));
    row(7) = r.stars;
    row(8) = r.urban ? 1.0 : 0.0;
    row(9) = opts.seasonal == SeasonalMode::dummy ? (r.days_open < seasonal_days_threshold ? 1.0 : 0.0)
                                                  : static_cast<double>(r.days_open);
    row(10) = r.region == Region::caribbean ? 1.0 : 0.0;
    row(11) = r.region == Region::rest_of_world ? 1.0 : 0.0;
    return row;
}

inline DesignMatrix build_design_matrix(const Dataset& ds, const EncodingOptions& opts = {}) {
    if (ds.empty()) {
        throw EmptyDataset();
    }
    const auto& names = predictor_names();
    DesignMatrix out{{names.begin(), names.end()}, Eigen::MatrixXd(static_cast<Eigen::Index>(ds.size()), 12), opts};
    for (std::size_t i = 0; i < ds.size(); ++i) {
        out.values.row(static_cast<Eigen::Index>(i)) = encode_record(ds[i], opts);
    }
    return out;
}

} // namespace hotelcoda

#endif
