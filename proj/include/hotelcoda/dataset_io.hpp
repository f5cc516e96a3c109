#ifndef HOTELCODA_DATASET_IO_HPP
#define HOTELCODA_DATASET_IO_HPP

#include <algorithm>
#include <array>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dataset.hpp"
#include "errors.hpp"

/**
 * @file dataset_io.hpp
 * @brief Delimited-text dataset files.
 *
 * A header row is required; names must match exactly but may come in any
 * order. `available_room_nights` is optional and an empty cell means
 * "rooms x days_open". Reals are written in shortest round-trip form so a
 * save/load cycle reproduces every field.
 */

namespace hotelcoda {

inline const std::array<std::string, 14>& required_columns() {
    static const std::array<std::string, 14> cols = {
        "id",    "strategy",  "fb_share", "all_inclusive",        "urban",   "region",   "employees",
        "rooms", "days_open", "stars",    "occupied_room_nights", "revenue", "expenses", "assets",
    };
    return cols;
}

inline constexpr std::string_view optional_available_column = "available_room_nights";

struct LoadOptions {
    char delimiter = ',';
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view line, char delim) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(delim, start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

template <typename T>
std::optional<T> parse_number(std::string_view s) {
    T value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        return std::nullopt;
    }
    return value;
}

inline std::optional<bool> parse_flag(std::string_view s) {
    if (s == "1" || s == "true") return true;
    if (s == "0" || s == "false") return false;
    return std::nullopt;
}

// Shortest text that reads back to the same double.
inline std::string format_real(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

} // namespace detail

/**
 * @throws SchemaError for missing, unknown or repeated header names.
 * @throws ParseError / ValidationError carrying every line-anchored issue.
 */
inline Dataset read_dataset(std::istream& in, const LoadOptions& opts = {}) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::trim(line).empty()) continue;
        for (auto f : detail::split(line, opts.delimiter)) header.emplace_back(f);
        break;
    }
    if (header.empty()) {
        throw SchemaError("missing header row");
    }

    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < header.size(); ++i) {
        const auto& name = header[i];
        bool known = name == optional_available_column ||
                     std::find(required_columns().begin(), required_columns().end(), name) != required_columns().end();
        if (!known) {
            throw SchemaError("unknown column '" + name + "' in header");
        }
        if (!index.emplace(name, i).second) {
            throw SchemaError("column '" + name + "' appears twice in header");
        }
    }
    for (const auto& name : required_columns()) {
        if (!index.count(name)) {
            throw SchemaError("missing column '" + name + "' in header");
        }
    }
    const bool has_available = index.count(std::string(optional_available_column)) > 0;

    Dataset ds;
    std::vector<LoadIssue> issues;
    std::set<std::string> ids;
    bool any_parse_issue = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::trim(line).empty()) continue;
        auto fields = detail::split(line, opts.delimiter);
        if (fields.size() != header.size()) {
            issues.push_back({LoadIssue::Kind::parse, line_no, {},
                              "expected " + std::to_string(header.size()) + " fields, found " +
                                  std::to_string(fields.size())});
            any_parse_issue = true;
            continue;
        }
        const std::size_t issues_before = issues.size();
        auto cell = [&](const std::string& name) { return fields[index.at(name)]; };
        auto fail = [&](const std::string& name, const std::string& why) {
            issues.push_back({LoadIssue::Kind::parse, line_no, name, why + " '" + std::string(cell(name)) + "'"});
            any_parse_issue = true;
        };
        auto real = [&](const std::string& name, double& dst) {
            if (auto v = detail::parse_number<double>(cell(name))) dst = *v;
            else fail(name, "not a number:");
        };
        auto integer = [&](const std::string& name, int& dst) {
            if (auto v = detail::parse_number<int>(cell(name))) dst = *v;
            else fail(name, "not an integer:");
        };
        auto boolean = [&](const std::string& name, bool& dst) {
            if (auto v = detail::parse_flag(cell(name))) dst = *v;
            else fail(name, "not a 0/1 flag:");
        };

        HotelRecord r;
        r.id = std::string(cell("id"));
        if (r.id.empty()) fail("id", "empty identifier");
        if (auto s = parse_strategy(cell("strategy"))) r.strategy = *s;
        else fail("strategy", "unknown strategy");
        real("fb_share", r.fb_share);
        boolean("all_inclusive", r.all_inclusive);
        boolean("urban", r.urban);
        if (auto reg = parse_region(cell("region"))) r.region = *reg;
        else fail("region", "unknown region");
        integer("employees", r.employees);
        integer("rooms", r.rooms);
        integer("days_open", r.days_open);
        real("stars", r.stars);
        real("occupied_room_nights", r.occupied_room_nights);
        real("revenue", r.revenue);
        real("expenses", r.expenses);
        real("assets", r.assets);
        if (has_available) {
            const std::string name(optional_available_column);
            if (!cell(name).empty()) {
                double v = 0.0;
                real(name, v);
                r.available_room_nights = v;
            }
        }
        if (issues.size() != issues_before) continue;

        for (auto& problem : record_problems(r)) {
            issues.push_back({LoadIssue::Kind::validation, line_no, {}, "record '" + r.id + "': " + problem});
        }
        if (!ids.insert(r.id).second) {
            issues.push_back({LoadIssue::Kind::validation, line_no, "id", "duplicate record id '" + r.id + "'"});
        }
        if (issues.size() == issues_before) ds.push_back(std::move(r));
    }

    if (!issues.empty()) {
        if (any_parse_issue) throw ParseError(std::move(issues));
        throw ValidationError(std::move(issues));
    }
    return ds;
}

inline Dataset load_dataset(const std::filesystem::path& path, const LoadOptions& opts = {}) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("file not found: " + path.string());
    }
    return read_dataset(in, opts);
}

inline void write_dataset(std::ostream& out, const Dataset& ds, char delim = ',') {
    const bool has_available =
        std::any_of(ds.begin(), ds.end(), [](const HotelRecord& r) { return r.available_room_nights.has_value(); });
    const auto& cols = required_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) {
        out << (i ? std::string(1, delim) : std::string()) << cols[i];
    }
    if (has_available) out << delim << optional_available_column;
    out << '\n';

    using detail::format_real;
    for (const auto& r : ds) {
        out << r.id << delim << to_string(r.strategy) << delim << format_real(r.fb_share) << delim
            << (r.all_inclusive ? 1 : 0) << delim << (r.urban ? 1 : 0) << delim << to_string(r.region) << delim
            << r.employees << delim << r.rooms << delim << r.days_open << delim << format_real(r.stars) << delim
            << format_real(r.occupied_room_nights) << delim << format_real(r.revenue) << delim
            << format_real(r.expenses) << delim << format_real(r.assets);
        if (has_available) {
            out << delim;
            if (r.available_room_nights) out << format_real(*r.available_room_nights);
        }
        out << '\n';
    }
}

inline void save_dataset(const std::filesystem::path& path, const Dataset& ds, char delim = ',') {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    write_dataset(out, ds, delim);
    if (!out) {
        throw IoError("write failed: " + path.string());
    }
}

} // namespace hotelcoda

#endif
