#pragma once

#include <cmath>
#include <limits>

#include "simerr/error.hpp"

namespace simerr {

inline constexpr double kSqrt2Pi = 2.5066282746310005024;

inline double norm_pdf(double x) { return std::exp(-0.5 * x * x) / kSqrt2Pi; }

inline double norm_cdf(double x) { return 0.5 * std::erfc(-x * 0.7071067811865475244); }

namespace detail {

// Rational approximation of Phi^-1 (Acklam), |error| ~ 1.15e-9; the Halley
// step below polishes it to full double accuracy.
inline double norm_quantile_approx(double p) {
    static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                    -2.759285104469687e+02, 1.383577518672690e+02,
                                    -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                    -1.556989798598866e+02, 6.680131188771972e+01,
                                    -1.328068155288572e+01};
    static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                    -2.400758277161838e+00, -2.549732539343734e+00,
                                    4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                    2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    if (p < p_low) {
        double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - p_low) {
        double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    double q = p - 0.5;
    double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace detail

// Inverse standard normal CDF.  Rational approximation plus one Halley
// refinement; absolute accuracy well below 1e-9 over (0, 1).
inline double std_normal_quantile(double p) {
    if (!(p > 0.0) || !(p < 1.0))
        throw NumericError("std_normal_quantile: p must lie strictly in (0,1)");
    double x = detail::norm_quantile_approx(p);
    double e = norm_cdf(x) - p;
    double u = e * kSqrt2Pi * std::exp(0.5 * x * x);
    x -= u / (1.0 + 0.5 * x * u);
    return x;
}

}  // namespace simerr
