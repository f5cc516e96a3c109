#ifndef HOTELCODA_ERRORS_HPP
#define HOTELCODA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

/**
 * @file errors.hpp
 * @brief Exception hierarchy shared by every hotelcoda module.
 *
 * The CLI maps each family onto its own exit status, so callers that only
 * care about the category can catch the intermediate bases.
 */

namespace hotelcoda {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Part-vector and log-ratio domain errors.
struct DataError : Error {
    using Error::Error;
};

struct MissingPart : DataError {
    MissingPart(std::string part, std::string record = {})
        : DataError(compose(part, record)), part_(std::move(part)), record_(std::move(record)) {}

    const std::string& part() const { return part_; }
    const std::string& record() const { return record_; }

private:
    static std::string compose(const std::string& part, const std::string& record) {
        std::string msg = "missing part '" + part + "'";
        if (!record.empty()) {
            msg += " in record '" + record + "'";
        }
        return msg;
    }

    std::string part_;
    std::string record_;
};

struct NonPositivePart : DataError {
    NonPositivePart(std::string part, double value, std::string record = {})
        : DataError(compose(part, value, record)), part_(std::move(part)), value_(value), record_(std::move(record)) {}

    const std::string& part() const { return part_; }
    double value() const { return value_; }
    const std::string& record() const { return record_; }

private:
    static std::string compose(const std::string& part, double value, const std::string& record) {
        std::string msg = "part '" + part + "' must be > 0 (got " + std::to_string(value) + ")";
        if (!record.empty()) {
            msg += " in record '" + record + "'";
        }
        return msg;
    }

    std::string part_;
    double value_;
    std::string record_;
};

struct EmptyDataset : DataError {
    EmptyDataset() : DataError("dataset is empty") {}
};

struct InvalidEmployees : DataError {
    explicit InvalidEmployees(const std::string& record)
        : DataError("record '" + record + "': employees must be >= 1") {}
};

// Graph errors.
struct GraphError : Error {
    using Error::Error;
};

struct InvalidGraph : GraphError {
    using GraphError::GraphError;
};

struct UnknownPart : GraphError {
    explicit UnknownPart(const std::string& part) : GraphError("unknown part '" + part + "'") {}
};

struct UnknownRatio : GraphError {
    explicit UnknownRatio(const std::string& ratio) : GraphError("no log-ratio named '" + ratio + "' in graph") {}
};

// Estimation errors.
struct ModelError : Error {
    using Error::Error;
};

struct InsufficientData : ModelError {
    InsufficientData(std::size_t n, std::size_t k)
        : ModelError("insufficient data: " + std::to_string(n) + " observations for " + std::to_string(k) + " columns") {}
};

struct RankDeficient : ModelError {
    RankDeficient(double condition, std::vector<std::string> dependent)
        : ModelError(compose(condition, dependent)), condition_(condition), dependent_(std::move(dependent)) {}

    double condition_number() const { return condition_; }

    /// Columns carrying most of the weight of the near-null direction.
    const std::vector<std::string>& dependent_columns() const { return dependent_; }

private:
    static std::string compose(double condition, const std::vector<std::string>& dependent) {
        std::string msg = "design matrix is rank deficient (condition number " + std::to_string(condition) + ")";
        if (!dependent.empty()) {
            msg += "; near-dependent columns:";
            for (const auto& name : dependent) {
                msg += " " + name;
            }
        }
        return msg;
    }

    double condition_;
    std::vector<std::string> dependent_;
};

// Synthetic generator errors.
struct InvalidConfig : Error {
    using Error::Error;
};

struct DegenerateVariance : Error {
    explicit DegenerateVariance(const std::string& response)
        : Error("response '" + response + "': linear predictor has zero variance but R^2 target is below 1") {}
};

// File ingestion errors.
struct IoError : Error {
    using Error::Error;
};

struct SchemaError : Error {
    using Error::Error;
};

/// One line-anchored problem found while reading a dataset file.
struct LoadIssue {
    enum class Kind { parse, validation };

    Kind kind;
    std::size_t line;
    std::string column;
    std::string message;

    std::string describe() const {
        std::string out = "line " + std::to_string(line);
        if (!column.empty()) {
            out += ", column '" + column + "'";
        }
        return out + ": " + message;
    }
};

/// Base for row-level failures; carries every issue collected in the file.
struct LoadError : Error {
    explicit LoadError(std::vector<LoadIssue> issues) : Error(compose(issues)), issues_(std::move(issues)) {}

    const std::vector<LoadIssue>& issues() const { return issues_; }

private:
    static std::string compose(const std::vector<LoadIssue>& issues) {
        std::string msg;
        for (std::size_t i = 0; i < issues.size(); ++i) {
            if (i) {
                msg += "\n";
            }
            msg += issues[i].describe();
        }
        return msg;
    }

    std::vector<LoadIssue> issues_;
};

struct ParseError : LoadError {
    using LoadError::LoadError;
};

struct ValidationError : LoadError {
    using LoadError::LoadError;
};

} // namespace hotelcoda

#endif
