#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "simerr/matrix.hpp"
#include "simerr/normal.hpp"
#include "simerr/rng.hpp"
#include "simerr/types.hpp"

namespace simerr {

// Three-component normal mixture.  Defaults are the reference target used
// by the coverage experiments: 0.3 N(1, 2.5) + 0.5 N(5, 4) + 0.2 N(11, 3)
// (second parameter is the variance).
struct MixtureSpec {
    std::array<double, 3> weights{0.3, 0.5, 0.2};
    std::array<double, 3> means{1.0, 5.0, 11.0};
    std::array<double, 3> variances{2.5, 4.0, 3.0};

    void validate() const {
        double total = 0.0;
        for (double w : weights) {
            if (!(w >= 0.0)) throw SpecError("mixture weights must be nonnegative");
            total += w;
        }
        if (std::abs(total - 1.0) > 1e-12)
            throw SpecError("mixture weights must sum to 1");
        for (double v : variances)
            if (!(v > 0.0)) throw SpecError("mixture variances must be positive");
    }

    double pdf(double x) const {
        double f = 0.0;
        for (int i = 0; i < 3; ++i) {
            double sd = std::sqrt(variances[i]);
            f += weights[i] * norm_pdf((x - means[i]) / sd) / sd;
        }
        return f;
    }

    double cdf(double x) const {
        double f = 0.0;
        for (int i = 0; i < 3; ++i)
            f += weights[i] * norm_cdf((x - means[i]) / std::sqrt(variances[i]));
        return f;
    }
};

// Draws are component choice by mixture probability, then a normal draw.
// `components`, when given, receives the chosen component indices.
inline SampleMatrix sample_mixture_iid(const MixtureSpec& spec, std::size_t n,
                                       std::uint64_t seed,
                                       std::vector<int>* components = nullptr) {
    spec.validate();
    if (n < 1) throw SpecError("need at least one draw");
    Rng rng(seed);
    Matrix m(n, 1);
    if (components) components->resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double u = rng.uniform();
        int comp = u < spec.weights[0] ? 0 : (u < spec.weights[0] + spec.weights[1] ? 1 : 2);
        m(i, 0) = rng.normal(spec.means[comp], std::sqrt(spec.variances[comp]));
        if (components) (*components)[i] = comp;
    }
    return SampleMatrix{std::move(m), {"x"}};
}

struct MhConfig {
    double proposal_sd = 3.0;
    std::size_t n_draws = 0;
    std::uint64_t seed = 0;
    double initial_state = 5.0;

    void validate() const {
        if (!(proposal_sd > 0.0)) throw SpecError("proposal_sd must be positive");
        if (n_draws < 1) throw SpecError("need at least one draw");
    }
};

// min(1, ratio) acceptance probability of a random-walk move.
inline double mh_acceptance_ratio(const MixtureSpec& spec, double current,
                                  double proposal) {
    return std::min(1.0, spec.pdf(proposal) / spec.pdf(current));
}

// Random-walk Metropolis-Hastings targeting the mixture.  Row 0 is the
// initial state; each later row is one transition.
inline SampleMatrix sample_mixture_mh(const MixtureSpec& spec, const MhConfig& config) {
    spec.validate();
    config.validate();
    Rng rng(config.seed);
    Matrix m(config.n_draws, 1);
    double x = config.initial_state;
    double fx = spec.pdf(x);
    m(0, 0) = x;
    for (std::size_t i = 1; i < config.n_draws; ++i) {
        double prop = x + config.proposal_sd * rng.normal();
        double fp = spec.pdf(prop);
        if (rng.uniform() * fx < fp) {
            x = prop;
            fx = fp;
        }
        m(i, 0) = x;
    }
    return SampleMatrix{std::move(m), {"x"}};
}

// Estimated treatment effects and their known standard deviations for the
// eight-schools hierarchical model.
struct EightSchoolsData {
    std::array<double, 8> y{};
    std::array<double, 8> sigma{};

    void validate() const {
        for (double s : sigma)
            if (!(s > 0.0)) throw SpecError("school standard deviations must be positive");
    }
};

struct EightSchoolsInit {
    std::array<double, 8> theta{};
    double mu = 0.0;
    double tau = 1.0;

    static EightSchoolsInit from_data(const EightSchoolsData& data) {
        EightSchoolsInit init;
        init.theta = data.y;
        double sum = 0.0, ss = 0.0;
        for (double v : data.y) sum += v;
        init.mu = sum / 8.0;
        for (double v : data.y) ss += (v - init.mu) * (v - init.mu);
        init.tau = std::sqrt(ss / 7.0);
        if (!(init.tau > 0.0)) init.tau = 1.0;
        return init;
    }
};

namespace eight_schools {

// Full conditionals of the model
//   y_j | theta_j ~ N(theta_j, sigma_j^2),  theta_j ~ N(mu, tau^2),
//   f(mu) ∝ 1,  tau^2 with the scaled inverse chi-squared conditional
//   Inv-chi2(J-1, sum_j (theta_j - mu)^2 / (J-1)).
// Exposed individually so each can be checked against its analytic density.

inline std::array<double, 8> draw_theta(const EightSchoolsData& data, double mu,
                                        double tau2, Rng& rng) {
    std::array<double, 8> theta;
    for (int j = 0; j < 8; ++j) {
        double s2 = data.sigma[j] * data.sigma[j];
        double mean = (data.y[j] * tau2 + mu * s2) / (tau2 + s2);
        double var = 1.0 / (1.0 / s2 + 1.0 / tau2);
        theta[j] = rng.normal(mean, std::sqrt(var));
    }
    return theta;
}

inline double draw_mu(const std::array<double, 8>& theta, double tau2, Rng& rng) {
    double mean = 0.0;
    for (double t : theta) mean += t;
    mean /= 8.0;
    return rng.normal(mean, std::sqrt(tau2 / 8.0));
}

inline double draw_tau2(const std::array<double, 8>& theta, double mu, Rng& rng) {
    double ss = 0.0;
    for (double t : theta) ss += (t - mu) * (t - mu);
    // scaled inverse chi-squared via chi2_7 = sum of 7 squared normals
    for (;;) {
        double chi2 = 0.0;
        for (int i = 0; i < 7; ++i) {
            double z = rng.normal();
            chi2 += z * z;
        }
        double tau2 = ss / chi2;
        if (tau2 > 0.0 && std::isfinite(tau2)) return tau2;  // underflow guard
    }
}

}  // namespace eight_schools

// Deterministic-scan Gibbs sampler for the eight-schools model.  Each
// output row is the state after one full (theta, mu, tau2) sweep; the
// columns are theta1..theta8, mu, tau.
inline SampleMatrix gibbs_eight_schools(const EightSchoolsData& data, std::size_t n,
                                        std::uint64_t seed,
                                        const EightSchoolsInit& init) {
    data.validate();
    if (n < 1) throw SpecError("need at least one draw");
    Rng rng(seed);
    Matrix m(n, 10);
    std::array<double, 8> theta = init.theta;
    double mu = init.mu;
    double tau2 = init.tau * init.tau;
    for (std::size_t i = 0; i < n; ++i) {
        theta = eight_schools::draw_theta(data, mu, tau2, rng);
        mu = eight_schools::draw_mu(theta, tau2, rng);
        tau2 = eight_schools::draw_tau2(theta, mu, rng);
        for (int j = 0; j < 8; ++j) m(i, j) = theta[j];
        m(i, 8) = mu;
        m(i, 9) = std::sqrt(tau2);
    }
    std::vector<std::string> names;
    for (int j = 1; j <= 8; ++j) names.push_back("theta" + std::to_string(j));
    names.push_back("mu");
    names.push_back("tau");
    return SampleMatrix{std::move(m), std::move(names)};
}

inline SampleMatrix gibbs_eight_schools(const EightSchoolsData& data, std::size_t n,
                                        std::uint64_t seed) {
    return gibbs_eight_schools(data, n, seed, EightSchoolsInit::from_data(data));
}

struct MixtureTruth {
    double mean = 0.0;
    std::vector<double> quantiles;
};

// Closed-form mean and bisection quantiles of the mixture.  The bisection
// runs the bracket down to ~1e-12, far below the 1e-8 contract, so the
// CDF evaluated at a returned quantile reproduces q to full precision.
inline MixtureTruth mixture_truth(const MixtureSpec& spec,
                                  const std::vector<double>& quantile_targets) {
    spec.validate();
    MixtureTruth out;
    for (int i = 0; i < 3; ++i) out.mean += spec.weights[i] * spec.means[i];

    double max_sd = 0.0;
    for (double v : spec.variances) max_sd = std::max(max_sd, std::sqrt(v));
    double lo_all = *std::min_element(spec.means.begin(), spec.means.end()) - 15.0 * max_sd;
    double hi_all = *std::max_element(spec.means.begin(), spec.means.end()) + 15.0 * max_sd;

    for (double q : quantile_targets) {
        if (!(q > 0.0 && q < 1.0)) throw SpecError("quantile level outside (0,1)");
        double lo = lo_all, hi = hi_all;
        for (int iter = 0; iter < 200 && hi - lo > 1e-12 * (1.0 + std::abs(lo)); ++iter) {
            double mid = 0.5 * (lo + hi);
            if (spec.cdf(mid) < q)
                lo = mid;
            else
                hi = mid;
        }
        out.quantiles.push_back(0.5 * (lo + hi));
    }
    return out;
}

}  // namespace simerr
