#ifndef HOTELCODA_CODA_HPP
#define HOTELCODA_CODA_HPP

#include <cmath>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <ranges>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <Eigen/Dense>

#include "errors.hpp"

/**
 * @file coda.hpp
 * @brief Strictly positive part vectors and pairwise log-ratios.
 */

namespace hotelcoda {

/**
 * @brief Named collection of measured parts for one observation.
 *
 * Values are stored as given; positivity is checked when a part enters a
 * log-ratio so the error can name the offending part.
 */
class PartVector {
public:
    PartVector() = default;

    PartVector(std::initializer_list<std::pair<const std::string, double>> parts) {
        for (const auto& [name, value] : parts) {
            set(name, value);
        }
    }

    /// Adds a part. Names are unique and case-sensitive.
    void set(const std::string& name, double value) {
        auto [it, inserted] = parts_.emplace(name, value);
        if (!inserted) {
            throw std::invalid_argument("duplicate part '" + name + "'");
        }
    }

    bool contains(const std::string& name) const { return parts_.count(name) > 0; }

    double at(const std::string& name) const {
        auto it = parts_.find(name);
        if (it == parts_.end()) {
            throw MissingPart(name);
        }
        return it->second;
    }

    std::size_t size() const { return parts_.size(); }

    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    /// Copy with one part multiplied by `factor`.
    PartVector scaled(const std::string& name, double factor) const {
        PartVector out = *this;
        auto it = out.parts_.find(name);
        if (it == out.parts_.end()) {
            throw MissingPart(name);
        }
        it->second *= factor;
        return out;
    }

private:
    std::map<std::string, double> parts_;
};

/**
 * @brief A named ratio `numerator / denominator` between two parts.
 */
class LogRatioSpec {
public:
    LogRatioSpec(std::string name, std::string numerator, std::string denominator)
        : name_(std::move(name)), numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
        if (numerator_ == denominator_) {
            throw std::invalid_argument("log-ratio '" + name_ + "' uses part '" + numerator_ + "' on both sides");
        }
    }

    const std::string& name() const { return name_; }
    const std::string& numerator() const { return numerator_; }
    const std::string& denominator() const { return denominator_; }

    friend bool operator==(const LogRatioSpec&, const LogRatioSpec&) = default;

private:
    std::string name_;
    std::string numerator_;
    std::string denominator_;
};

inline constexpr std::string_view inverse_suffix = "^-1";

namespace detail {

inline double checked_part(const PartVector& v, const std::string& name) {
    double value = v.at(name);
    if (!(value > 0.0)) {
        throw NonPositivePart(name, value);
    }
    return value;
}

} // namespace detail

/**
 * Natural log of `v[numerator] / v[denominator]`.
 *
 * Evaluated as a difference of logs, so swapping the two parts negates the
 * result exactly in floating point.
 */
inline double pairwise_logratio(const PartVector& v, const LogRatioSpec& spec) {
    double num = detail::checked_part(v, spec.numerator());
    double den = detail::checked_part(v, spec.denominator());
    return std::log(num) - std::log(den);
}

/// Swaps numerator and denominator. The name gains or loses a "^-1" suffix, so inversion is an involution.
inline LogRatioSpec inverse_logratio(const LogRatioSpec& spec) {
    std::string name = spec.name();
    if (name.ends_with(inverse_suffix)) {
        name.resize(name.size() - inverse_suffix.size());
    } else {
        name += inverse_suffix;
    }
    return LogRatioSpec(std::move(name), spec.denominator(), spec.numerator());
}

/// Anything with an identifier and a part vector.
template <typename Record>
concept PartRecord = requires(const Record& r) {
    { r.id } -> std::convertible_to<std::string>;
    { r.parts() } -> std::convertible_to<PartVector>;
};

/**
 * Log-ratio matrix: row i is record i, column j is `specs[j]`.
 *
 * Errors from individual cells are rethrown with the record identifier
 * attached.
 */
template <std::ranges::forward_range Records>
    requires PartRecord<std::ranges::range_value_t<Records>>
Eigen::MatrixXd batch_logratios(const Records& records, std::span<const LogRatioSpec> specs) {
    const auto n = static_cast<Eigen::Index>(std::ranges::distance(records));
    Eigen::MatrixXd out(n, static_cast<Eigen::Index>(specs.size()));

    Eigen::Index row = 0;
    for (const auto& record : records) {
        const PartVector parts = record.parts();
        for (std::size_t j = 0; j < specs.size(); ++j) {
            try {
                out(row, static_cast<Eigen::Index>(j)) = pairwise_logratio(parts, specs[j]);
            } catch (const MissingPart& e) {
                throw MissingPart(e.part(), record.id);
            } catch (const NonPositivePart& e) {
                throw NonPositivePart(e.part(), e.value(), record.id);
            }
        }
        ++row;
    }
    return out;
}

} // namespace hotelcoda

#endif
