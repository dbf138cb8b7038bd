#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "simerr/lattice_vectors.hpp"
#include "simerr/matrix.hpp"
#include "simerr/normal.hpp"
#include "simerr/rng.hpp"
#include "simerr/types.hpp"

namespace simerr {

// P(lower <= U <= upper) for U ~ N(mean, covariance).  Bounds may be
// +-infinity.
struct MvnProblem {
    std::vector<double> mean;
    Matrix covariance;
    std::vector<double> lower;
    std::vector<double> upper;

    std::size_t dim() const { return mean.size(); }

    void validate() const {
        std::size_t p = dim();
        if (p == 0) throw SpecError("MVN problem has dimension 0");
        if (covariance.rows() != p || covariance.cols() != p ||
            lower.size() != p || upper.size() != p)
            throw SpecError("MVN problem fields disagree on dimension");
        if (covariance.symmetry_defect() > 1e-10)
            throw NumericError("MVN covariance is not symmetric");
        for (std::size_t i = 0; i < p; ++i) {
            if (std::isnan(lower[i]) || std::isnan(upper[i]))
                throw NumericError("MVN bounds contain NaN");
            if (!(lower[i] < upper[i]))
                throw SpecError("MVN bounds must satisfy lower < upper");
        }
    }
};

struct MvnResult {
    double probability = 0.0;
    double error_estimate = 0.0;  // 3 x standard error over random shifts
    std::uint64_t points_used = 0;
    bool tolerance_met = true;

    bool operator==(const MvnResult&) const = default;
};

struct ReorderedCholesky {
    std::vector<std::size_t> permutation;  // position i holds original index
    Matrix factor;                         // lower triangular
};

namespace detail {

inline double clamp_unit(double u) {
    return std::min(1.0 - 1e-16, std::max(1e-16, u));
}

// CDF of the standardized bound, with infinities mapped to 0/1.
inline double bound_cdf(double bound, double shift, double scale) {
    if (std::isinf(bound)) return bound > 0 ? 1.0 : 0.0;
    return norm_cdf((bound - shift) / scale);
}

}  // namespace detail

// Greedy variable reordering plus Cholesky factorization, the standard
// preprocessing for the separation-of-variables transform: at each step
// pick the remaining variable with the smallest conditional truncation
// probability so the innermost integrals are the least variable ones.
inline ReorderedCholesky cholesky_reordered(const Matrix& covariance,
                                            const std::vector<double>& lower,
                                            const std::vector<double>& upper) {
    const std::size_t p = covariance.rows();
    Matrix c = covariance;  // working copy, progressively overwritten with L
    std::vector<std::size_t> perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<double> a = lower, b = upper;
    std::vector<double> y(p, 0.0);  // conditional means of the truncated normals
    Matrix l(p, p);

    for (std::size_t i = 0; i < p; ++i) {
        // choose the candidate minimizing Phi(b~) - Phi(a~)
        std::size_t best = i;
        double best_prob = std::numeric_limits<double>::infinity();
        for (std::size_t j = i; j < p; ++j) {
            double cond_var = c(j, j);
            for (std::size_t k = 0; k < i; ++k) cond_var -= l(j, k) * l(j, k);
            if (cond_var <= 0.0) continue;  // handled below if chosen last
            double sd = std::sqrt(cond_var);
            double m = 0.0;
            for (std::size_t k = 0; k < i; ++k) m += l(j, k) * y[k];
            double prob =
                detail::bound_cdf(b[j], m, sd) - detail::bound_cdf(a[j], m, sd);
            if (prob < best_prob) {
                best_prob = prob;
                best = j;
            }
        }

        if (best != i) {
            std::swap(perm[best], perm[i]);
            std::swap(a[best], a[i]);
            std::swap(b[best], b[i]);
            for (std::size_t k = 0; k < p; ++k) std::swap(c(best, k), c(i, k));
            for (std::size_t k = 0; k < p; ++k) std::swap(c(k, best), c(k, i));
            for (std::size_t k = 0; k < i; ++k) std::swap(l(best, k), l(i, k));
        }

        double cond_var = c(i, i);
        for (std::size_t k = 0; k < i; ++k) cond_var -= l(i, k) * l(i, k);
        if (!(cond_var > 0.0))
            throw FactorizationError("covariance is not positive definite", i);
        double lii = std::sqrt(cond_var);
        l(i, i) = lii;
        for (std::size_t r = i + 1; r < p; ++r) {
            double s = c(r, i);
            for (std::size_t k = 0; k < i; ++k) s -= l(r, k) * l(i, k);
            l(r, i) = s / lii;
        }

        // expected value of the conditioned-and-truncated coordinate,
        // used to score the next pivot choice
        double m = 0.0;
        for (std::size_t k = 0; k < i; ++k) m += l(i, k) * y[k];
        double at = std::isinf(a[i]) ? -std::numeric_limits<double>::infinity()
                                     : (a[i] - m) / lii;
        double bt = std::isinf(b[i]) ? std::numeric_limits<double>::infinity()
                                     : (b[i] - m) / lii;
        double da = std::isinf(at) ? 0.0 : norm_cdf(at);
        double db = std::isinf(bt) ? 1.0 : norm_cdf(bt);
        double span = db - da;
        if (span > 1e-300) {
            double pa = std::isinf(at) ? 0.0 : norm_pdf(at);
            double pb = std::isinf(bt) ? 0.0 : norm_pdf(bt);
            y[i] = (pa - pb) / span;
        } else {
            y[i] = 0.5 * (std::isinf(at) ? (std::isinf(bt) ? 0.0 : bt)
                                         : (std::isinf(bt) ? at : at + bt));
        }
    }
    return {std::move(perm), std::move(l)};
}

namespace detail {

// Genz integrand at one point of the unit cube (w has p-1 coordinates).
// a and b are the permuted, mean-shifted bounds.
inline double genz_integrand(const Matrix& l, const std::vector<double>& a,
                             const std::vector<double>& b, const double* w,
                             std::vector<double>& y) {
    const std::size_t p = a.size();
    double d = bound_cdf(a[0], 0.0, l(0, 0));
    double e = bound_cdf(b[0], 0.0, l(0, 0));
    double f = e - d;
    for (std::size_t i = 1; i < p; ++i) {
        if (f <= 0.0) return 0.0;
        y[i - 1] = std_normal_quantile(clamp_unit(d + w[i - 1] * (e - d)));
        double m = 0.0;
        for (std::size_t k = 0; k < i; ++k) m += l(i, k) * y[k];
        d = bound_cdf(a[i], m, l(i, i));
        e = bound_cdf(b[i], m, l(i, i));
        f *= (e - d);
    }
    return f;
}

}  // namespace detail

inline constexpr double kMvnDefaultAbsTol = 5e-4;
inline constexpr int kMvnShifts = 12;

// Quasi-Monte Carlo MVN rectangle probability via the separation-of-
// variables transform.  Integration uses a rank-1 lattice rule (fixed
// generating vector per stage) with kMvnShifts independent random shifts;
// the lattice size doubles from 2^10 until 3x the shift standard error
// falls below abs_tol or the 2^19 budget is exhausted.  Deterministic
// given (problem, abs_tol, seed).
inline MvnResult mvn_rectangle_probability(const MvnProblem& problem,
                                           double abs_tol = kMvnDefaultAbsTol,
                                           std::uint64_t seed = 0) {
    problem.validate();
    if (!(abs_tol > 0.0)) throw SpecError("abs_tol must be positive");
    const std::size_t p = problem.dim();

    // mean-shift the bounds once
    std::vector<double> a(p), b(p);
    for (std::size_t i = 0; i < p; ++i) {
        a[i] = std::isinf(problem.lower[i]) ? problem.lower[i]
                                            : problem.lower[i] - problem.mean[i];
        b[i] = std::isinf(problem.upper[i]) ? problem.upper[i]
                                            : problem.upper[i] - problem.mean[i];
    }

    if (p == 1) {
        double sd = std::sqrt(problem.covariance(0, 0));
        if (!(sd > 0.0)) throw FactorizationError("covariance is not positive definite", 0);
        double prob = detail::bound_cdf(b[0], 0.0, sd) - detail::bound_cdf(a[0], 0.0, sd);
        return {std::clamp(prob, 0.0, 1.0), 0.0, 1, true};
    }
    if (p - 1 > detail::kLatticeMaxDim)
        throw SpecError("dimension exceeds the supported maximum of " +
                        std::to_string(detail::kLatticeMaxDim + 1));

    ReorderedCholesky rc = cholesky_reordered(problem.covariance, a, b);
    std::vector<double> ap(p), bp(p);
    for (std::size_t i = 0; i < p; ++i) {
        ap[i] = a[rc.permutation[i]];
        bp[i] = b[rc.permutation[i]];
    }

    const std::size_t s = p - 1;
    std::vector<double> y(p), point(s), shift(s), means(kMvnShifts);
    std::uint64_t points_used = 0;

    for (std::size_t stage = 0; stage < detail::kLatticeStages; ++stage) {
        const std::uint32_t n = detail::kLatticeSizes[stage];
        const auto& gen = detail::kLatticeGenerators[stage];
        Rng rng = Rng::derived(seed, stage);

        for (int r = 0; r < kMvnShifts; ++r) {
            for (std::size_t j = 0; j < s; ++j) shift[j] = rng.uniform();
            double sum = 0.0;
            for (std::uint32_t k = 0; k < n; ++k) {
                for (std::size_t j = 0; j < s; ++j) {
                    double frac =
                        static_cast<double>((static_cast<std::uint64_t>(k) * gen[j]) &
                                            (n - 1)) /
                            n +
                        shift[j];
                    frac -= std::floor(frac);
                    point[j] = 1.0 - std::abs(2.0 * frac - 1.0);  // baker fold
                }
                sum += detail::genz_integrand(rc.factor, ap, bp, point.data(), y);
            }
            means[r] = sum / n;
        }
        points_used += static_cast<std::uint64_t>(n) * kMvnShifts;

        double est = pairwise_sum(means) / kMvnShifts;
        double var = 0.0;
        for (double m : means) var += (m - est) * (m - est);
        var /= (kMvnShifts - 1);
        double err = 3.0 * std::sqrt(var / kMvnShifts);

        if (err <= abs_tol || stage + 1 == detail::kLatticeStages) {
            return {std::clamp(est, 0.0, 1.0), err, points_used, err <= abs_tol};
        }
    }
    throw NumericError("unreachable");  // loop always returns on the last stage
}

// Inverse standard normal CDF; see normal.hpp.  Re-exported here because
// region construction treats it as part of this module's surface.
using simerr::std_normal_quantile;

}  // namespace simerr
