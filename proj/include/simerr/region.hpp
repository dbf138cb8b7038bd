#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "simerr/covariance.hpp"
#include "simerr/mvn.hpp"
#include "simerr/normal.hpp"
#include "simerr/types.hpp"

namespace simerr {

enum class RegionMethod { Uncorrected, Simultaneous, Bonferroni };

inline const char* region_method_name(RegionMethod m) {
    switch (m) {
        case RegionMethod::Uncorrected: return "uncorrected";
        case RegionMethod::Simultaneous: return "simultaneous";
        case RegionMethod::Bonferroni: return "bonferroni";
    }
    return "?";
}

// A hyperrectangular confidence region: interval i is
// nu_hat_i +- z * sqrt(assembled_ii / n).
struct ConfidenceRegion {
    RegionMethod method = RegionMethod::Uncorrected;
    double alpha = 0.0;
    double z = 0.0;
    std::vector<std::pair<double, double>> intervals;
    std::vector<double> half_widths;
    double achieved_coverage = 0.0;
    double coverage_error = 0.0;  // MVN error estimate on achieved_coverage
    bool coverage_tolerance_met = true;
    std::vector<std::string> warnings;

    bool contains(const std::vector<double>& truth) const {
        if (truth.size() != intervals.size()) throw SpecError("dimension mismatch");
        for (std::size_t i = 0; i < truth.size(); ++i)
            if (truth[i] < intervals[i].first || truth[i] > intervals[i].second)
                return false;
        return true;
    }
};

inline constexpr double kDefaultCovTol = 1e-3;

namespace detail {

// Correlation matrix of the assembled covariance.  The region coverage
// P(U in C_SI(z)) equals the probability that a zero-mean normal with
// this correlation lands in [-z, z]^p, which is the better-conditioned
// form to hand to the MVN engine.
inline Matrix assembled_correlation(const AsymptoticCovariance& acov) {
    const std::size_t p = acov.assembled.rows();
    std::vector<double> sd(p);
    for (std::size_t i = 0; i < p; ++i) {
        double v = acov.assembled(i, i);
        if (!(v > 0.0))
            throw FactorizationError("assembled covariance has nonpositive diagonal", i);
        sd[i] = std::sqrt(v);
    }
    Matrix corr(p, p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
            corr(i, j) = acov.assembled(i, j) / (sd[i] * sd[j]);
    corr.symmetrize();
    return corr;
}

inline MvnResult coverage_at(const Matrix& corr, double z, double mvn_abs_tol,
                             std::uint64_t seed) {
    const std::size_t p = corr.rows();
    MvnProblem prob{std::vector<double>(p, 0.0), corr, std::vector<double>(p, -z),
                    std::vector<double>(p, z)};
    return mvn_rectangle_probability(prob, mvn_abs_tol, seed);
}

inline ConfidenceRegion build_region(RegionMethod method, const JointEstimate& estimate,
                                     const AsymptoticCovariance& acov, double alpha,
                                     double z, const MvnResult& coverage) {
    ConfidenceRegion region;
    region.method = method;
    region.alpha = alpha;
    region.z = z;
    const std::size_t p = estimate.p();
    for (std::size_t i = 0; i < p; ++i) {
        double hw = z * acov.standard_error(i);
        region.half_widths.push_back(hw);
        region.intervals.emplace_back(estimate.nu_hat[i] - hw, estimate.nu_hat[i] + hw);
    }
    region.achieved_coverage = coverage.probability;
    region.coverage_error = coverage.error_estimate;
    region.coverage_tolerance_met = coverage.tolerance_met;
    if (!coverage.tolerance_met)
        region.warnings.push_back("MVN probability did not reach its tolerance");
    return region;
}

inline void check_region_inputs(const JointEstimate& estimate,
                                const AsymptoticCovariance& acov, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw SpecError("alpha must lie in (0,1)");
    if (estimate.p() != acov.assembled.rows())
        throw SpecError("estimate and covariance disagree on dimension");
    if (acov.n < 2) throw DataError("sample size too small for a region");
}

}  // namespace detail

// Uncorrected marginal intervals, z = z_{1-alpha/2}.  Simultaneous
// coverage is at most 1-alpha.
inline ConfidenceRegion uncorrected_region(const JointEstimate& estimate,
                                           const AsymptoticCovariance& acov,
                                           double alpha,
                                           double mvn_abs_tol = kMvnDefaultAbsTol,
                                           std::uint64_t seed = 0) {
    detail::check_region_inputs(estimate, acov, alpha);
    Matrix corr = detail::assembled_correlation(acov);
    double z = std_normal_quantile(1.0 - alpha / 2.0);
    return detail::build_region(RegionMethod::Uncorrected, estimate, acov, alpha, z,
                                detail::coverage_at(corr, z, mvn_abs_tol, seed));
}

// Bonferroni-corrected region, z = z_{1-alpha/(2p)}.  Coverage is at
// least 1-alpha.
inline ConfidenceRegion bonferroni_region(const JointEstimate& estimate,
                                          const AsymptoticCovariance& acov, double alpha,
                                          double mvn_abs_tol = kMvnDefaultAbsTol,
                                          std::uint64_t seed = 0) {
    detail::check_region_inputs(estimate, acov, alpha);
    Matrix corr = detail::assembled_correlation(acov);
    double p = static_cast<double>(estimate.p());
    double z = std_normal_quantile(1.0 - alpha / (2.0 * p));
    return detail::build_region(RegionMethod::Bonferroni, estimate, acov, alpha, z,
                                detail::coverage_at(corr, z, mvn_abs_tol, seed));
}

// Exact-coverage simultaneous region: bisection on z between the
// uncorrected and Bonferroni multipliers against the plug-in coverage
// f(z) = P(U in C_SI(z)).  Every f evaluation shares the same seed, so
// the empirical f is monotone and the bisection cannot stall on MVN
// noise.  Stops when |f(z) - (1-alpha)| <= cov_tol or the bracket is
// narrower than 1e-6.
inline ConfidenceRegion simultaneous_region(const JointEstimate& estimate,
                                            const AsymptoticCovariance& acov,
                                            double alpha,
                                            double cov_tol = kDefaultCovTol,
                                            std::uint64_t seed = 0,
                                            double mvn_abs_tol = kMvnDefaultAbsTol) {
    detail::check_region_inputs(estimate, acov, alpha);
    if (!(cov_tol >= 2.0 * mvn_abs_tol))
        throw SpecError("cov_tol must be at least twice the MVN tolerance");
    Matrix corr = detail::assembled_correlation(acov);
    const double target = 1.0 - alpha;
    const double p = static_cast<double>(estimate.p());
    double z_lo = std_normal_quantile(1.0 - alpha / 2.0);
    double z_hi = std_normal_quantile(1.0 - alpha / (2.0 * p));

    auto finish = [&](double z, const MvnResult& cov) {
        return detail::build_region(RegionMethod::Simultaneous, estimate, acov, alpha, z,
                                    cov);
    };

    if (estimate.p() == 1) {
        // one coordinate needs no correction; both bracket ends coincide
        return finish(z_lo, detail::coverage_at(corr, z_lo, mvn_abs_tol, seed));
    }

    // extreme positive dependence: the lower bracket may already cover
    MvnResult at_lo = detail::coverage_at(corr, z_lo, mvn_abs_tol, seed);
    if (at_lo.probability >= target - cov_tol) return finish(z_lo, at_lo);

    double z = z_hi;
    MvnResult at_z = detail::coverage_at(corr, z, mvn_abs_tol, seed);
    while (std::abs(at_z.probability - target) > cov_tol && z_hi - z_lo >= 1e-6) {
        z = 0.5 * (z_lo + z_hi);
        at_z = detail::coverage_at(corr, z, mvn_abs_tol, seed);
        if (at_z.probability < target)
            z_lo = z;
        else
            z_hi = z;
    }
    return finish(z, at_z);
}

}  // namespace simerr
