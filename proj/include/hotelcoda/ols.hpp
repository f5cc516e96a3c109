#ifndef HOTELCODA_OLS_HPP
#define HOTELCODA_OLS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/distributions/students_t.hpp>

#include "design.hpp"
#include "errors.hpp"

/**
 * @file ols.hpp
 * @brief Ordinary least squares with classical (homoskedastic) inference.
 *
 * The solve goes through a thin SVD of the design matrix, which also gives
 * the condition number used for the rank check. Standard errors are
 * sqrt(diag(sigma^2 (X'X)^-1)) with sigma^2 = RSS / (n - k).
 */

namespace hotelcoda {

/// Designs whose condition number exceeds this are treated as rank deficient.
inline constexpr double max_condition_number = 1e10;

/// "*" for p < 0.05, "**" for p < 0.01, "***" for p < 0.001 (strict).
inline std::string significance_stars(double p) {
    if (p < 0.001) return "***";
    if (p < 0.01) return "**";
    if (p < 0.05) return "*";
    return "";
}

/// Two-sided tail probability P(|T| >= |t|) for Student's t with `df` degrees of freedom.
inline double two_sided_p_value(double t, double df) {
    if (std::isnan(t)) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    if (std::isinf(t)) {
        return 0.0;
    }
    boost::math::students_t dist(df);
    return 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
}

struct FitResult {
    std::string response;
    std::vector<std::string> columns;
    Eigen::VectorXd coefficients;
    Eigen::VectorXd standard_errors;
    Eigen::VectorXd t_statistics;
    Eigen::VectorXd p_values;
    std::vector<std::string> stars;
    double r_squared = 0.0;
    Eigen::VectorXd fitted;
    Eigen::VectorXd residuals;
    int degrees_of_freedom = 0;
    double rss = 0.0;
    double tss = 0.0;
    /// TSS indistinguishable from zero; R^2 is then reported as 0.
    bool no_variance = false;
    double residual_skewness = 0.0;
    double residual_excess_kurtosis = 0.0;
    double condition_number = 0.0;
};

namespace detail {

inline void residual_moments(const Eigen::VectorXd& e, double& skew, double& kurt) {
    const double n = static_cast<double>(e.size());
    const double mean = e.mean();
    const Eigen::ArrayXd c = e.array() - mean;
    const double m2 = c.square().sum() / n;
    if (!(m2 > 0.0)) {
        skew = 0.0;
        kurt = 0.0;
        return;
    }
    skew = c.cube().sum() / n / std::pow(m2, 1.5);
    kurt = c.square().square().sum() / n / (m2 * m2) - 3.0;
}

} // namespace detail

/**
 * Fits `y` on the columns of `x`.
 *
 * @throws InsufficientData when n <= k.
 * @throws RankDeficient when the condition number exceeds `max_condition_number`.
 */
inline FitResult fit_ols(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, std::vector<std::string> columns,
                         std::string response = {}) {
    const auto n = x.rows();
    const auto k = x.cols();
    if (y.size() != n) {
        throw std::invalid_argument("response length does not match design rows");
    }
    if (columns.size() != static_cast<std::size_t>(k)) {
        throw std::invalid_argument("column names do not match design columns");
    }
    if (n <= k) {
        throw InsufficientData(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double smax = sv(0);
    const double smin = sv(k - 1);
    const double cond = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
    if (!(cond <= max_condition_number)) {
        std::vector<std::string> dependent;
        const Eigen::VectorXd null_dir = svd.matrixV().col(k - 1);
        for (Eigen::Index j = 0; j < k; ++j) {
            if (std::abs(null_dir(j)) > 0.1) {
                dependent.push_back(columns[static_cast<std::size_t>(j)]);
            }
        }
        throw RankDeficient(cond, std::move(dependent));
    }

    FitResult fit;
    fit.response = std::move(response);
    fit.columns = std::move(columns);
    fit.condition_number = cond;
    fit.degrees_of_freedom = static_cast<int>(n - k);

    const Eigen::VectorXd inv_sv = sv.cwiseInverse();
    fit.coefficients = svd.matrixV() * (inv_sv.asDiagonal() * (svd.matrixU().transpose() * y));
    fit.fitted = x * fit.coefficients;
    fit.residuals = y - fit.fitted;
    fit.rss = fit.residuals.squaredNorm();

    const double mean = y.mean();
    fit.tss = (y.array() - mean).square().sum();
    const double scale = 1.0 + y.squaredNorm();
    fit.no_variance = fit.tss <= 1e-20 * scale;
    fit.r_squared = fit.no_variance ? 0.0 : std::clamp(1.0 - fit.rss / fit.tss, 0.0, 1.0);

    // diag((X'X)^-1) = row norms of V * diag(1/s), squared.
    const double sigma2 = fit.rss / static_cast<double>(fit.degrees_of_freedom);
    const Eigen::MatrixXd vs = svd.matrixV() * inv_sv.asDiagonal();
    fit.standard_errors = (sigma2 * vs.rowwise().squaredNorm().array()).sqrt().matrix();

    fit.t_statistics.resize(k);
    fit.p_values.resize(k);
    fit.stars.resize(static_cast<std::size_t>(k));
    for (Eigen::Index j = 0; j < k; ++j) {
        const double b = fit.coefficients(j);
        const double se = fit.standard_errors(j);
        double t;
        if (se > 0.0) {
            t = b / se;
        } else if (b == 0.0) {
            t = 0.0;
        } else {
            t = std::copysign(std::numeric_limits<double>::infinity(), b);
        }
        fit.t_statistics(j) = t;
        fit.p_values(j) = two_sided_p_value(t, fit.degrees_of_freedom);
        fit.stars[static_cast<std::size_t>(j)] = significance_stars(fit.p_values(j));
    }

    detail::residual_moments(fit.residuals, fit.residual_skewness, fit.residual_excess_kurtosis);
    return fit;
}

inline FitResult fit_ols(const DesignMatrix& x, const Eigen::VectorXd& y, std::string response = {}) {
    return fit_ols(x.values, y, x.columns, std::move(response));
}

} // namespace hotelcoda

#endif
