#ifndef HOTELCODA_TESTS_FIXTURES_HPP
#define HOTELCODA_TESTS_FIXTURES_HPP

#include <string>

#include <hotelcoda/dataset.hpp>

namespace fixtures {

// A valid ownership / Europe / vacation hotel; tests override what they need.
inline hotelcoda::HotelRecord hotel(std::string id, double occupied = 50.0, double revenue = 200.0,
                                    double expenses = 100.0, double assets = 400.0) {
    hotelcoda::HotelRecord r;
    r.id = std::move(id);
    r.strategy = hotelcoda::Strategy::ownership;
    r.fb_share = 0.10;
    r.employees = 1;
    r.rooms = 1;
    r.days_open = 100;
    r.stars = 4.0;
    r.occupied_room_nights = occupied;
    r.revenue = revenue;
    r.expenses = expenses;
    r.assets = assets;
    return r;
}

} // namespace fixtures

#endif
