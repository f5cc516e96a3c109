#ifndef HOTELCODA_PART_NAMES_HPP
#define HOTELCODA_PART_NAMES_HPP

#include <array>

namespace hotelcoda::parts {

// Canonical part names; these are also the dataset column headers.
inline constexpr const char* occupied_room_nights = "occupied_room_nights";
inline constexpr const char* available_room_nights = "available_room_nights";
inline constexpr const char* revenue = "revenue";
inline constexpr const char* expenses = "expenses";
inline constexpr const char* assets = "assets";

inline constexpr std::array<const char*, 5> all = {
    available_room_nights, occupied_room_nights, revenue, expenses, assets,
};

} // namespace hotelcoda::parts

#endif
