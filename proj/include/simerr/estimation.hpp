#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <vector>

#include "simerr/matrix.hpp"
#include "simerr/normal.hpp"
#include "simerr/types.hpp"

namespace simerr {

namespace detail {

// ceil(n*q)-th order statistic, 1-indexed, with a guard against the
// product landing a hair above an exact integer in floating point.
inline std::size_t order_statistic_rank(std::size_t n, double q) {
    long double t = static_cast<long double>(n) * static_cast<long double>(q);
    auto m = static_cast<std::size_t>(std::ceil(static_cast<double>(t)));
    if (m >= 1 && static_cast<long double>(m) - t >= 1.0L - 1e-9L) --m;
    if (m < 1) m = 1;
    if (m > n) m = n;
    return m;
}

// k-th smallest (1-indexed) of a copy of v.
inline double kth_order_statistic(std::vector<double> v, std::size_t k) {
    auto nth = v.begin() + static_cast<std::ptrdiff_t>(k - 1);
    std::nth_element(v.begin(), nth, v.end());
    return *nth;
}

}  // namespace detail

// Arithmetic mean of each selected column, pairwise-summed so the result
// is independent of any internal work splitting.
inline std::vector<double> compute_means(const SampleMatrix& samples,
                                         const ResolvedSpec& spec) {
    std::vector<double> out;
    out.reserve(spec.p1());
    for (std::size_t j : spec.mean_cols) out.push_back(mean_of(samples.column(j)));
    return out;
}

inline std::vector<double> compute_means(const SampleMatrix& samples,
                                         const EstimandSpec& spec) {
    return compute_means(samples, resolve(spec, samples));
}

// Sample quantiles as exact order statistics: the ceil(n*q)-th smallest
// value, never an interpolation.
inline std::vector<double> compute_quantiles(const SampleMatrix& samples,
                                             const ResolvedSpec& spec) {
    const std::size_t n = samples.rows();
    if (n < 1) throw DataError("compute_quantiles needs at least one row");

    // Sort each referenced column once, even when it carries several targets.
    std::map<std::size_t, std::vector<double>> sorted;
    for (const auto& [col, q] : spec.quantile_cols) {
        if (!sorted.count(col)) {
            auto v = samples.column(col);
            std::sort(v.begin(), v.end());
            sorted.emplace(col, std::move(v));
        }
    }
    std::vector<double> out;
    out.reserve(spec.p2());
    for (const auto& [col, q] : spec.quantile_cols)
        out.push_back(sorted.at(col)[detail::order_statistic_rank(n, q) - 1]);
    return out;
}

inline std::vector<double> compute_quantiles(const SampleMatrix& samples,
                                             const EstimandSpec& spec) {
    return compute_quantiles(samples, resolve(spec, samples));
}

inline JointEstimate estimate_joint(const SampleMatrix& samples,
                                    const EstimandSpec& spec) {
    ResolvedSpec rs = resolve(spec, samples);
    JointEstimate est;
    est.n = samples.rows();
    est.nu_hat = compute_means(samples, rs);
    auto quants = compute_quantiles(samples, rs);
    est.nu_hat.insert(est.nu_hat.end(), quants.begin(), quants.end());
    est.spec = std::move(rs);
    return est;
}

// Row j of the result is (g(X_j), I(h(X_j) > phi_hat)): the selected mean
// columns followed by 0/1 indicators of strictly exceeding the estimated
// quantile.  This is the process whose long-run covariance is Sigma.
inline Matrix build_s_process(const SampleMatrix& samples, const ResolvedSpec& spec,
                              const JointEstimate& estimate) {
    if (estimate.nu_hat.size() != spec.p())
        throw SpecError("estimate dimension does not match spec");
    const std::size_t n = samples.rows();
    const std::size_t p1 = spec.p1();
    const std::size_t p2 = spec.p2();
    Matrix s(n, p1 + p2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < p1; ++k)
            s(i, k) = samples.values(i, spec.mean_cols[k]);
        for (std::size_t k = 0; k < p2; ++k) {
            double xi = estimate.nu_hat[p1 + k];
            s(i, p1 + k) =
                samples.values(i, spec.quantile_cols[k].first) > xi ? 1.0 : 0.0;
        }
    }
    return s;
}

inline Matrix build_s_process(const SampleMatrix& samples, const EstimandSpec& spec,
                              const JointEstimate& estimate) {
    return build_s_process(samples, resolve(spec, samples), estimate);
}

namespace detail {

// Silverman's rule of thumb on one column.  The sorted column is reused
// for the IQR so the bandwidth is an exact function of the data.
inline double silverman_bandwidth(const std::vector<double>& sorted_col) {
    const std::size_t n = sorted_col.size();
    double mean = mean_of(sorted_col);
    double ss = 0.0;
    for (double v : sorted_col) ss += (v - mean) * (v - mean);
    double sd = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
    double iqr = sorted_col[order_statistic_rank(n, 0.75) - 1] -
                 sorted_col[order_statistic_rank(n, 0.25) - 1];
    double scale = std::min(sd, iqr / 1.34);
    if (scale <= 0.0) scale = sd;  // heavy ties can zero the IQR
    if (scale <= 0.0)
        throw DegenerateDensityError("column is (numerically) a point mass");
    return 0.9 * scale * std::pow(static_cast<double>(n), -0.2);
}

}  // namespace detail

// Gaussian-kernel density estimate of each quantile column's density at
// its estimated quantile.  These are the diagonal entries of Lambda that
// convert indicator variance into quantile variance.
inline DensityAtQuantiles estimate_density_at_quantiles(const SampleMatrix& samples,
                                                        const ResolvedSpec& spec,
                                                        const JointEstimate& estimate) {
    if (spec.p2() == 0) throw SpecError("no quantile targets declared");
    if (estimate.nu_hat.size() != spec.p())
        throw SpecError("estimate dimension does not match spec");
    const std::size_t n = samples.rows();

    std::map<std::size_t, std::vector<double>> sorted;
    for (const auto& [col, q] : spec.quantile_cols) {
        if (!sorted.count(col)) {
            auto v = samples.column(col);
            std::sort(v.begin(), v.end());
            sorted.emplace(col, std::move(v));
        }
    }

    DensityAtQuantiles out;
    for (std::size_t k = 0; k < spec.p2(); ++k) {
        const auto& col = sorted.at(spec.quantile_cols[k].first);
        double b = detail::silverman_bandwidth(col);
        double xi = estimate.nu_hat[spec.p1() + k];
        std::vector<double> kernel(n);
        for (std::size_t i = 0; i < n; ++i) kernel[i] = norm_pdf((xi - col[i]) / b);
        double f = pairwise_sum(kernel) / (static_cast<double>(n) * b);
        if (!(f > 1e3 * std::numeric_limits<double>::min()) || !std::isfinite(f))
            throw DegenerateDensityError("density estimate at quantile " +
                                         std::to_string(k) + " vanished");
        out.values.push_back(f);
        out.bandwidths.push_back(b);
    }
    return out;
}

inline DensityAtQuantiles estimate_density_at_quantiles(const SampleMatrix& samples,
                                                        const EstimandSpec& spec,
                                                        const JointEstimate& estimate) {
    return estimate_density_at_quantiles(samples, resolve(spec, samples), estimate);
}

}  // namespace simerr
