#ifndef HOTELCODA_DATASET_HPP
#define HOTELCODA_DATASET_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "coda.hpp"
#include "part_names.hpp"

namespace hotelcoda {

enum class Strategy { lease, management, franchise, ownership };
enum class Region { europe, caribbean, rest_of_world };

inline std::string_view to_string(Strategy s) {
    switch (s) {
    case Strategy::lease: return "lease";
    case Strategy::management: return "management";
    case Strategy::franchise: return "franchise";
    case Strategy::ownership: return "ownership";
    }
    throw std::logic_error("bad strategy");
}

inline std::string_view to_string(Region r) {
    switch (r) {
    case Region::europe: return "europe";
    case Region::caribbean: return "caribbean";
    case Region::rest_of_world: return "rest_of_world";
    }
    throw std::logic_error("bad region");
}

inline std::optional<Strategy> parse_strategy(std::string_view s) {
    if (s == "lease") return Strategy::lease;
    if (s == "management") return Strategy::management;
    if (s == "franchise") return Strategy::franchise;
    if (s == "ownership") return Strategy::ownership;
    return std::nullopt;
}

inline std::optional<Region> parse_region(std::string_view s) {
    if (s == "europe") return Region::europe;
    if (s == "caribbean") return Region::caribbean;
    if (s == "rest_of_world") return Region::rest_of_world;
    return std::nullopt;
}

/// One hotel: categorical attributes, covariates and the measured parts.
struct HotelRecord {
    std::string id;
    Strategy strategy = Strategy::ownership;
    double fb_share = 0.0; // food & beverage revenue / total revenue
    bool all_inclusive = false;
    bool urban = false;
    Region region = Region::europe;
    int employees = 1;
    int rooms = 1;
    int days_open = 365;
    double stars = 3.0;

    double occupied_room_nights = 1.0;
    double revenue = 1.0;
    double expenses = 1.0;
    double assets = 1.0;
    std::optional<double> available_room_nights;

    /// Explicit value when supplied, otherwise rooms x days open.
    double available() const {
        return available_room_nights ? *available_room_nights : static_cast<double>(rooms) * days_open;
    }

    PartVector parts() const {
        PartVector v;
        v.set(parts::available_room_nights, available());
        v.set(parts::occupied_room_nights, occupied_room_nights);
        v.set(parts::revenue, revenue);
        v.set(parts::expenses, expenses);
        v.set(parts::assets, assets);
        return v;
    }

    friend bool operator==(const HotelRecord&, const HotelRecord&) = default;
};

using Dataset = std::vector<HotelRecord>;

/// Invariant breaches for one record, as human-readable messages (empty when valid).
inline std::vector<std::string> record_problems(const HotelRecord& r) {
    std::vector<std::string> out;
    auto positive = [&](const char* name, double v) {
        if (!(v > 0.0)) {
            out.push_back(std::string("part '") + name + "' must be > 0 (got " + std::to_string(v) + ")");
        }
    };
    if (!(r.fb_share >= 0.0 && r.fb_share <= 1.0)) {
        out.push_back("fb_share must lie in [0, 1]");
    }
    if (r.employees < 1) {
        out.push_back("employees must be >= 1");
    }
    if (r.rooms < 1) {
        out.push_back("rooms must be >= 1");
    }
    if (r.days_open < 1 || r.days_open > 366) {
        out.push_back("days_open must lie in [1, 366]");
    }
    if (!(r.stars >= 1.0 && r.stars <= 5.0)) {
        out.push_back("stars must lie in [1, 5]");
    }
    positive(parts::occupied_room_nights, r.occupied_room_nights);
    positive(parts::revenue, r.revenue);
    positive(parts::expenses, r.expenses);
    positive(parts::assets, r.assets);
    if (r.available_room_nights) {
        positive(parts::available_room_nights, *r.available_room_nights);
    }
    if (r.occupied_room_nights > r.available()) {
        out.push_back("occupied_room_nights exceeds available_room_nights");
    }
    return out;
}

} // namespace hotelcoda

#endif
