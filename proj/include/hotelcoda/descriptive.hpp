#ifndef HOTELCODA_DESCRIPTIVE_HPP
#define HOTELCODA_DESCRIPTIVE_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dataset.hpp"
#include "errors.hpp"

namespace hotelcoda {

struct Summary {
    double mean = 0.0;
    double sd = 0.0; // n - 1 denominator; 0 when n == 1
    double min = 0.0;
    double max = 0.0;
};

inline Summary summarize(std::span<const double> values) {
    if (values.empty()) {
        throw EmptyDataset();
    }
    Summary s;
    const double n = static_cast<double>(values.size());
    double total = 0.0;
    for (double v : values) total += v;
    s.mean = total / n;
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - s.mean) * (v - s.mean);
        s.sd = std::sqrt(ss / (n - 1.0));
    }
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    s.min = *lo;
    s.max = *hi;
    return s;
}

struct DescriptiveRow {
    std::string group;
    std::string variable;
    Summary summary;
    /// Dummy variable: the mean is a proportion and no sd is reported.
    bool proportion = false;
};

struct DescriptiveTable {
    std::size_t n = 0;
    std::vector<DescriptiveRow> rows;

    std::optional<DescriptiveRow> find(const std::string& variable) const {
        for (const auto& r : rows) {
            if (r.variable == variable) return r;
        }
        return std::nullopt;
    }
};

/// Per-variable mean, sd, min and max, laid out in the usual performance / strategy / ... grouping.
inline DescriptiveTable describe(const Dataset& ds) {
    if (ds.empty()) {
        throw EmptyDataset();
    }
    DescriptiveTable table;
    table.n = ds.size();
    std::vector<double> col(ds.size());

    auto add = [&](const char* group, const char* name, bool proportion,
                   const std::function<double(const HotelRecord&)>& f) {
        std::transform(ds.begin(), ds.end(), col.begin(), f);
        Summary s = summarize(col);
        if (proportion) {
            s.sd = 0.0;
        }
        table.rows.push_back({group, name, s, proportion});
    };
    auto flag = [](bool b) { return b ? 1.0 : 0.0; };

    add("PERFORMANCE", "Occupancy", false, [](const HotelRecord& r) { return 100.0 * r.occupied_room_nights / r.available(); });
    add("PERFORMANCE", "RevPAR", false, [](const HotelRecord& r) { return r.revenue / r.available(); });
    add("PERFORMANCE", "Efficiency", false, [](const HotelRecord& r) { return r.revenue / r.expenses; });
    add("PERFORMANCE", "Asset Turnover", false, [](const HotelRecord& r) { return r.revenue / r.assets; });

    add("GROWTH STRATEGIES", "Leasing", true, [&](const HotelRecord& r) { return flag(r.strategy == Strategy::lease); });
    add("GROWTH STRATEGIES", "Management", true, [&](const HotelRecord& r) { return flag(r.strategy == Strategy::management); });
    add("GROWTH STRATEGIES", "Franchise", true, [&](const HotelRecord& r) { return flag(r.strategy == Strategy::franchise); });
    add("GROWTH STRATEGIES", "Ownership", true, [&](const HotelRecord& r) { return flag(r.strategy == Strategy::ownership); });

    add("DIVERSIFICATION", "% Food & Beverage", false, [](const HotelRecord& r) { return r.fb_share; });
    add("DIVERSIFICATION", "All-inclusive", true, [&](const HotelRecord& r) { return flag(r.all_inclusive); });

    add("LOCATION", "Urban", true, [&](const HotelRecord& r) { return flag(r.urban); });
    add("LOCATION", "Vacation", true, [&](const HotelRecord& r) { return flag(!r.urban); });
    add("LOCATION", "Europe", true, [&](const HotelRecord& r) { return flag(r.region == Region::europe); });
    add("LOCATION", "Caribbean", true, [&](const HotelRecord& r) { return flag(r.region == Region::caribbean); });
    add("LOCATION", "Rest of the world", true, [&](const HotelRecord& r) { return flag(r.region == Region::rest_of_world); });

    add("SIZE", "Employees", false, [](const HotelRecord& r) { return static_cast<double>(r.employees); });
    add("SIZE", "Rooms", false, [](const HotelRecord& r) { return static_cast<double>(r.rooms); });
    add("SIZE", "Revenue", false, [](const HotelRecord& r) { return r.revenue; });

    add("SEASONALITY", "Days open", false, [](const HotelRecord& r) { return static_cast<double>(r.days_open); });
    add("SERVICE QUALITY", "Stars", false, [](const HotelRecord& r) { return r.stars; });
    return table;
}

} // namespace hotelcoda

#endif
