#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "simerr/matrix.hpp"
#include "simerr/types.hpp"

namespace simerr {

enum class CovMode { IID, MCMC };

// How to estimate Sigma: plain sample covariance for IID draws, batch
// means for Markov chains.  batch_size empty means AUTO (floor(sqrt(n))).
struct CovModeConfig {
    CovMode mode = CovMode::IID;
    std::optional<std::size_t> batch_size;  // nullopt => AUTO
};

struct BatchLayout {
    std::size_t batch_size = 0;
    std::size_t n_batches = 0;
    std::size_t rows_used = 0;  // n_batches * batch_size; the tail is discarded
};

inline BatchLayout resolve_batch_layout(std::size_t n, const CovModeConfig& config) {
    std::size_t b = config.batch_size
                        ? *config.batch_size
                        : static_cast<std::size_t>(std::floor(std::sqrt(
                              static_cast<double>(n))));
    if (b < 1) throw BatchConfigError("batch size must be positive");
    if (config.batch_size && b > n / 2)
        throw BatchConfigError("explicit batch size " + std::to_string(b) +
                               " leaves fewer than 2 batches for n = " +
                               std::to_string(n));
    std::size_t a = n / b;
    if (a < 2)
        throw BatchConfigError("need at least 2 batches, got " + std::to_string(a));
    return {b, a, a * b};
}

// Unbiased sample covariance (divisor n-1) of the rows of the S-process.
inline Matrix sample_covariance_iid(const Matrix& s_process) {
    const std::size_t n = s_process.rows();
    const std::size_t p = s_process.cols();
    if (n < 2) throw DataError("sample covariance needs at least 2 rows");

    std::vector<double> mean(p);
    for (std::size_t j = 0; j < p; ++j) mean[j] = mean_of(s_process.column(j));

    Matrix cov(p, p);
    for (std::size_t i = 0; i < n; ++i) {
        auto row = s_process.row(i);
        for (std::size_t j = 0; j < p; ++j) {
            double dj = row[j] - mean[j];
            for (std::size_t k = j; k < p; ++k)
                cov(j, k) += dj * (row[k] - mean[k]);
        }
    }
    for (std::size_t j = 0; j < p; ++j)
        for (std::size_t k = j; k < p; ++k) {
            cov(j, k) /= static_cast<double>(n - 1);
            cov(k, j) = cov(j, k);
        }
    return cov;
}

// Batch means estimator: Sigma_hat = b/(a-1) * sum_k (Sbar_k - Sbar)(Sbar_k - Sbar)'
// over a batches of b consecutive rows.  Rows past a*b are discarded and
// Sbar is the mean of the a batch means.
inline Matrix batch_means_covariance(const Matrix& s_process,
                                     const CovModeConfig& config) {
    const std::size_t n = s_process.rows();
    const std::size_t p = s_process.cols();
    BatchLayout layout = resolve_batch_layout(n, config);
    const std::size_t b = layout.batch_size;
    const std::size_t a = layout.n_batches;

    Matrix batch_means(a, p);
    for (std::size_t k = 0; k < a; ++k) {
        for (std::size_t t = 0; t < b; ++t) {
            auto row = s_process.row(k * b + t);
            for (std::size_t j = 0; j < p; ++j) batch_means(k, j) += row[j];
        }
        for (std::size_t j = 0; j < p; ++j) batch_means(k, j) /= static_cast<double>(b);
    }

    std::vector<double> grand(p);
    for (std::size_t j = 0; j < p; ++j) grand[j] = mean_of(batch_means.column(j));

    Matrix cov(p, p);
    for (std::size_t k = 0; k < a; ++k) {
        auto row = batch_means.row(k);
        for (std::size_t j = 0; j < p; ++j) {
            double dj = row[j] - grand[j];
            for (std::size_t l = j; l < p; ++l)
                cov(j, l) += dj * (row[l] - grand[l]);
        }
    }
    double scale = static_cast<double>(b) / static_cast<double>(a - 1);
    for (std::size_t j = 0; j < p; ++j)
        for (std::size_t l = j; l < p; ++l) {
            cov(j, l) *= scale;
            cov(l, j) = cov(j, l);
        }
    return cov;
}

inline Matrix estimate_sigma(const Matrix& s_process, const CovModeConfig& config) {
    return config.mode == CovMode::IID ? sample_covariance_iid(s_process)
                                       : batch_means_covariance(s_process, config);
}

// Sigma_hat together with the Lambda^-1 scaling and the assembled plug-in
// covariance Lambda^-1 Sigma_hat Lambda^-1 that region construction uses.
struct AsymptoticCovariance {
    Matrix sigma_hat;
    std::vector<double> lambda_inv;  // diagonal: 1 for means, 1/f_hat for quantiles
    Matrix assembled;
    std::size_t n = 0;

    double standard_error(std::size_t i) const {
        return std::sqrt(assembled(i, i) / static_cast<double>(n));
    }
};

inline AsymptoticCovariance assemble_asymptotic_covariance(
    const Matrix& sigma_hat, const DensityAtQuantiles& densities,
    const ResolvedSpec& spec, std::size_t n) {
    const std::size_t p = spec.p();
    if (sigma_hat.rows() != p || sigma_hat.cols() != p)
        throw SpecError("sigma_hat dimension does not match spec");
    if (densities.values.size() != spec.p2())
        throw SpecError("density vector length does not match quantile targets");
    if (!sigma_hat.all_finite()) throw NumericError("sigma_hat has non-finite entries");

    AsymptoticCovariance out;
    out.sigma_hat = sigma_hat;
    out.n = n;
    out.lambda_inv.assign(p, 1.0);
    for (std::size_t k = 0; k < spec.p2(); ++k) {
        double f = densities.values[k];
        if (!(f > 0.0) || !std::isfinite(f))
            throw DegenerateDensityError("nonpositive density value in Lambda");
        out.lambda_inv[spec.p1() + k] = 1.0 / f;
    }
    out.assembled = Matrix(p, p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
            out.assembled(i, j) = out.lambda_inv[i] * sigma_hat(i, j) * out.lambda_inv[j];
    out.assembled.symmetrize();
    if (!out.assembled.all_finite())
        throw NumericError("assembled covariance has non-finite entries");
    return out;
}

}  // namespace simerr
