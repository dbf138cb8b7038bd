#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "oracles.hpp"
#include "simerr/covariance.hpp"
#include "simerr/region.hpp"
#include "simerr/rng.hpp"

using namespace simerr;

namespace {

// Minimal estimate/covariance pair around a given assembled matrix.
struct Setup {
    JointEstimate estimate;
    AsymptoticCovariance acov;
};

Setup make_setup(const Matrix& assembled, std::size_t n = 10000,
                 std::vector<double> nu = {}) {
    Setup s;
    const std::size_t p = assembled.rows();
    if (nu.empty()) nu.assign(p, 0.0);
    s.estimate.nu_hat = nu;
    s.estimate.n = n;
    for (std::size_t i = 0; i < p; ++i) {
        s.estimate.spec.mean_cols.push_back(i);
        s.estimate.spec.labels.push_back("m" + std::to_string(i));
    }
    s.acov.sigma_hat = assembled;
    s.acov.assembled = assembled;
    s.acov.lambda_inv.assign(p, 1.0);
    s.acov.n = n;
    return s;
}

Matrix correlation_matrix(std::size_t p, double rho) {
    Matrix m(p, p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) m(i, j) = i == j ? 1.0 : rho;
    return m;
}

}  // namespace

TEST_CASE("uncorrected region uses z_{1-alpha/2}") {
    auto s = make_setup(Matrix::identity(3));
    auto region = uncorrected_region(s.estimate, s.acov, 0.10);
    CHECK(region.z == Catch::Approx(1.644854).margin(1e-5));
    // three independent coordinates: coverage 0.9^3 = 0.729
    CHECK(region.achieved_coverage == Catch::Approx(0.729).margin(2e-3));
}

TEST_CASE("bonferroni region uses z_{1-alpha/(2p)}") {
    auto s = make_setup(Matrix::identity(3));
    auto region = bonferroni_region(s.estimate, s.acov, 0.10);
    CHECK(region.z == Catch::Approx(2.128045).margin(1e-5));
    // independent coordinates: coverage (1 - alpha/3)^3, strictly above 0.90
    double per = 2.0 * oracles::Phi(region.z) - 1.0;
    CHECK(region.achieved_coverage == Catch::Approx(per * per * per).margin(2e-3));
    CHECK(region.achieved_coverage > 0.90);
}

TEST_CASE("single coordinate needs no correction") {
    Matrix v(1, 1);
    v(0, 0) = 2.0;
    auto s = make_setup(v, 500, {1.3});
    auto unc = uncorrected_region(s.estimate, s.acov, 0.10);
    auto bon = bonferroni_region(s.estimate, s.acov, 0.10);
    auto sim = simultaneous_region(s.estimate, s.acov, 0.10);
    CHECK(unc.z == bon.z);
    CHECK(unc.z == sim.z);
    CHECK(unc.achieved_coverage == Catch::Approx(0.90).margin(1e-9));
    CHECK(sim.intervals[0].first == Catch::Approx(unc.intervals[0].first));
    CHECK(sim.intervals[0].second == Catch::Approx(unc.intervals[0].second));
}

TEST_CASE("simultaneous region solves the independence case in closed form") {
    auto s = make_setup(Matrix::identity(2));
    auto region = simultaneous_region(s.estimate, s.acov, 0.10, 1e-3, 42);
    // z* solves (2 Phi(z) - 1)^2 = 0.90
    double z_star = oracles::normal_quantile_oracle((1.0 + std::sqrt(0.90)) / 2.0);
    CHECK(region.z == Catch::Approx(z_star).margin(0.01));
    CHECK(region.achieved_coverage == Catch::Approx(0.90).margin(1.5e-3));
}

TEST_CASE("near-perfect correlation collapses to the univariate multiplier") {
    auto s = make_setup(correlation_matrix(2, 0.9999));
    auto region = simultaneous_region(s.estimate, s.acov, 0.10, 1e-3, 4);
    CHECK(std::abs(region.z - 1.644854) < 1e-2);
}

TEST_CASE("multiplier ordering and interval nesting hold") {
    Rng rng(55);
    for (int rep = 0; rep < 5; ++rep) {
        const std::size_t p = 2 + rng.below(4);
        Matrix b(p, p);
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < p; ++j) b(i, j) = rng.normal();
        Matrix cov(p, p);
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < p; ++j) {
                double acc = 0.0;
                for (std::size_t k = 0; k < p; ++k) acc += b(i, k) * b(j, k);
                cov(i, j) = acc;
            }
        for (std::size_t i = 0; i < p; ++i) cov(i, i) += 0.1;
        std::vector<double> nu(p);
        for (auto& x : nu) x = rng.normal();
        auto s = make_setup(cov, 2000, nu);

        double alpha = 0.10;
        auto unc = uncorrected_region(s.estimate, s.acov, alpha, kMvnDefaultAbsTol, rep);
        auto sim = simultaneous_region(s.estimate, s.acov, alpha, 1e-3, rep);
        auto bon = bonferroni_region(s.estimate, s.acov, alpha, kMvnDefaultAbsTol, rep);

        CHECK(unc.z <= sim.z + 1e-12);
        CHECK(sim.z <= bon.z + 1e-12);
        for (std::size_t i = 0; i < p; ++i) {
            CHECK(unc.intervals[i].first >= sim.intervals[i].first - 1e-12);
            CHECK(unc.intervals[i].second <= sim.intervals[i].second + 1e-12);
            CHECK(sim.intervals[i].first >= bon.intervals[i].first - 1e-12);
            CHECK(sim.intervals[i].second <= bon.intervals[i].second + 1e-12);
        }
        CHECK(std::abs(sim.achieved_coverage - 0.90) <=
              1e-3 + sim.coverage_error + 1e-12);
        // half widths follow z * sqrt(assembled_ii / n)
        for (std::size_t i = 0; i < p; ++i) {
            CHECK(sim.half_widths[i] ==
                  Catch::Approx(sim.z * std::sqrt(cov(i, i) / 2000.0)));
            CHECK(sim.half_widths[i] > 0.0);
        }
    }
}

TEST_CASE("coverage function is monotone in z under a common seed") {
    auto corr = correlation_matrix(4, 0.3);
    auto s = make_setup(corr);
    auto f = [&](double z) {
        return detail::coverage_at(corr, z, kMvnDefaultAbsTol, 77).probability;
    };
    double prev = f(1.0);
    for (double z = 1.2; z <= 3.0; z += 0.2) {
        double cur = f(z);
        CHECK(cur + 2.0 * kMvnDefaultAbsTol >= prev);
        prev = cur;
    }
}

TEST_CASE("scale equivariance: rescaling a coordinate rescales its interval") {
    Matrix cov = correlation_matrix(3, 0.4);
    auto s = make_setup(cov, 1000, {1.0, 2.0, 3.0});
    auto base = simultaneous_region(s.estimate, s.acov, 0.10, 1e-3, 5);

    // scale row/col 0 by c (variance by c^2)
    const double c = 4.0;
    Matrix cov2 = cov;
    for (std::size_t j = 0; j < 3; ++j) {
        cov2(0, j) *= c;
        cov2(j, 0) *= c;
    }
    auto s2 = make_setup(cov2, 1000, {c * 1.0, 2.0, 3.0});
    auto moved = simultaneous_region(s2.estimate, s2.acov, 0.10, 1e-3, 5);

    CHECK(moved.z == Catch::Approx(base.z).margin(5e-3));
    CHECK(moved.intervals[0].first == Catch::Approx(c * base.intervals[0].first)
                                          .epsilon(1e-6)
                                          .margin(1e-8));
    CHECK(moved.intervals[0].second == Catch::Approx(c * base.intervals[0].second)
                                           .epsilon(1e-6)
                                           .margin(1e-8));
    CHECK(moved.intervals[1].first == Catch::Approx(base.intervals[1].first)
                                          .epsilon(1e-6)
                                          .margin(1e-8));
}

TEST_CASE("region construction rejects a non-PD assembled covariance") {
    Matrix bad = correlation_matrix(2, 1.5);  // |rho| > 1
    auto s = make_setup(bad);
    CHECK_THROWS_AS(uncorrected_region(s.estimate, s.acov, 0.10), FactorizationError);
}

TEST_CASE("region construction validates alpha and cov_tol") {
    auto s = make_setup(Matrix::identity(2));
    CHECK_THROWS_AS(uncorrected_region(s.estimate, s.acov, 0.0), SpecError);
    CHECK_THROWS_AS(uncorrected_region(s.estimate, s.acov, 1.0), SpecError);
    CHECK_THROWS_AS(simultaneous_region(s.estimate, s.acov, 0.10, 1e-5, 0), SpecError);
}
