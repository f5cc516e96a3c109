#ifndef HOTELCODA_CONSISTENCY_HPP
#define HOTELCODA_CONSISTENCY_HPP

#include <cmath>
#include <limits>
#include <span>
#include <string>

#include <Eigen/Dense>

#include "coda.hpp"
#include "dataset.hpp"
#include "design.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "ols.hpp"

/**
 * @file consistency.hpp
 * @brief Does a regression on a ratio agree with the regression on its reciprocal?
 *
 * For log-ratios the two fits are exact negatives of each other. For raw
 * ratios r and 1/r they are not, and the size of the disagreement is what
 * this module measures.
 */

namespace hotelcoda {

struct ConsistencyReport {
    std::string ratio;
    std::string inverse_ratio;
    FitResult log_fit;
    FitResult log_inverse_fit;
    FitResult raw_fit;
    FitResult raw_inverse_fit;

    /// max_j |b_j + b_inv_j| for the log-ratio fits.
    double log_max_coefficient_sum = 0.0;
    double log_r2_difference = 0.0;
    /// ||b_raw + b_raw_inv|| / ||b_raw||.
    double raw_divergence = 0.0;
    double raw_r2_difference = 0.0;
    /// The ratio is constant across records, so neither form has variance to explain.
    bool no_variance = false;
};

inline ConsistencyReport consistency_demo(const Dataset& ds, const LogRatioSpec& spec, const EncodingOptions& opts = {}) {
    const DesignMatrix x = build_design_matrix(ds, opts);
    const LogRatioSpec inverse = inverse_logratio(spec);
    const LogRatioSpec both[2] = {spec, inverse};
    const Eigen::MatrixXd lr = batch_logratios(ds, std::span<const LogRatioSpec>(both));

    ConsistencyReport out;
    out.ratio = spec.name();
    out.inverse_ratio = inverse.name();
    out.log_fit = fit_ols(x, lr.col(0), spec.name());
    out.log_inverse_fit = fit_ols(x, lr.col(1), inverse.name());
    const Eigen::VectorXd raw = lr.col(0).array().exp().matrix();
    const Eigen::VectorXd raw_inv = lr.col(1).array().exp().matrix();
    out.raw_fit = fit_ols(x, raw, spec.name());
    out.raw_inverse_fit = fit_ols(x, raw_inv, inverse.name());

    out.log_max_coefficient_sum = (out.log_fit.coefficients + out.log_inverse_fit.coefficients).cwiseAbs().maxCoeff();
    out.log_r2_difference = std::abs(out.log_fit.r_squared - out.log_inverse_fit.r_squared);
    const double norm = out.raw_fit.coefficients.norm();
    const Eigen::VectorXd sum = out.raw_fit.coefficients + out.raw_inverse_fit.coefficients;
    out.raw_divergence = norm > 0.0 ? sum.norm() / norm : std::numeric_limits<double>::infinity();
    out.raw_r2_difference = std::abs(out.raw_fit.r_squared - out.raw_inverse_fit.r_squared);
    out.no_variance = out.log_fit.no_variance || out.raw_fit.no_variance;
    return out;
}

/// Looks the ratio up by edge name in `g`.
inline ConsistencyReport consistency_demo(const Dataset& ds, const LogRatioGraph& g, const std::string& ratio,
                                          const EncodingOptions& opts = {}) {
    auto edge = g.find_edge(ratio);
    if (!edge) {
        throw UnknownRatio(ratio);
    }
    return consistency_demo(ds, g.edges()[*edge], opts);
}

} // namespace hotelcoda

#endif
