#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "simerr/covariance.hpp"
#include "simerr/estimation.hpp"
#include "simerr/rng.hpp"

using namespace simerr;

namespace {

Matrix from_rows(const std::vector<std::vector<double>>& rows) {
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

}  // namespace

TEST_CASE("sample covariance of a two-point cloud") {
    auto cov = sample_covariance_iid(from_rows({{0, 0}, {1, 1}}));
    CHECK(cov(0, 0) == Catch::Approx(0.5));
    CHECK(cov(0, 1) == Catch::Approx(0.5));
    CHECK(cov(1, 0) == Catch::Approx(0.5));
    CHECK(cov(1, 1) == Catch::Approx(0.5));
}

TEST_CASE("sample covariance of constant rows is zero") {
    auto cov = sample_covariance_iid(from_rows({{2, 3}, {2, 3}, {2, 3}}));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(cov(i, j) == 0.0);
}

TEST_CASE("sample covariance requires two rows") {
    CHECK_THROWS_AS(sample_covariance_iid(from_rows({{1.0, 2.0}})), DataError);
}

TEST_CASE("sample covariance of IID N(0, I) rows approaches the identity") {
    const std::size_t n = 100000;
    Rng rng(5);
    Matrix s(n, 2);
    for (std::size_t i = 0; i < n; ++i) {
        s(i, 0) = rng.normal();
        s(i, 1) = rng.normal();
    }
    auto cov = sample_covariance_iid(s);
    CHECK(std::abs(cov(0, 0) - 1.0) < 0.02);
    CHECK(std::abs(cov(1, 1) - 1.0) < 0.02);
    CHECK(std::abs(cov(0, 1)) < 0.02);
}

TEST_CASE("batch means on the worked four-row example") {
    Matrix s(4, 1);
    s(0, 0) = 0;
    s(1, 0) = 0;
    s(2, 0) = 1;
    s(3, 0) = 1;
    CovModeConfig config{CovMode::MCMC, 2};
    auto cov = batch_means_covariance(s, config);
    // batch means (0,1), overall 0.5, so 2 * (0.25 + 0.25) / 1 = 1
    CHECK(cov(0, 0) == Catch::Approx(1.0));
}

TEST_CASE("batch means of a constant process is zero") {
    Matrix s(100, 2);
    for (std::size_t i = 0; i < 100; ++i) {
        s(i, 0) = 4.0;
        s(i, 1) = -1.0;
    }
    auto cov = batch_means_covariance(s, {CovMode::MCMC, std::nullopt});
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(cov(i, j) == 0.0);
}

TEST_CASE("batch means with b = 1 reproduces the sample covariance exactly") {
    const std::size_t n = 923;  // deliberately not a square
    Rng rng(8);
    Matrix s(n, 3);
    for (std::size_t i = 0; i < n; ++i) {
        s(i, 0) = rng.normal();
        s(i, 1) = 0.5 * s(i, 0) + rng.normal();
        s(i, 2) = rng.uniform();
    }
    auto bm = batch_means_covariance(s, {CovMode::MCMC, 1});
    auto sc = sample_covariance_iid(s);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(bm(i, j) == Catch::Approx(sc(i, j)).epsilon(1e-10).margin(1e-14));
}

TEST_CASE("auto batch size is floor(sqrt(n)) and the tail is discarded") {
    auto layout = resolve_batch_layout(400, {CovMode::MCMC, std::nullopt});
    CHECK(layout.batch_size == 20);
    CHECK(layout.n_batches == 20);
    CHECK(layout.rows_used == 400);

    layout = resolve_batch_layout(1000, {CovMode::MCMC, std::nullopt});
    CHECK(layout.batch_size == 31);
    CHECK(layout.n_batches == 32);
    CHECK(layout.rows_used == 992);
}

TEST_CASE("batch configuration errors") {
    Matrix s(10, 1);
    CHECK_THROWS_AS(batch_means_covariance(s, {CovMode::MCMC, 6}), BatchConfigError);
    CHECK_THROWS_AS(resolve_batch_layout(3, {CovMode::MCMC, std::nullopt}),
                    BatchConfigError);
}

TEST_CASE("batch means close to sample covariance on IID rows") {
    const std::size_t n = 100000;
    Rng rng(13);
    Matrix s(n, 2);
    for (std::size_t i = 0; i < n; ++i) {
        s(i, 0) = rng.normal(1.0, 2.0);
        s(i, 1) = rng.uniform();
    }
    auto bm = batch_means_covariance(s, {CovMode::MCMC, std::nullopt});
    auto sc = sample_covariance_iid(s);
    for (std::size_t j = 0; j < 2; ++j)
        CHECK(bm(j, j) == Catch::Approx(sc(j, j)).epsilon(0.10));
}

TEST_CASE("batch means sees the AR(1) autocorrelation the naive variance misses") {
    const std::size_t n = 1000000;
    const double rho = 0.5;
    Rng rng(21);
    Matrix s(n, 1);
    double x = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        x = rho * x + rng.normal();
        s(i, 0) = x;
    }
    auto bm = batch_means_covariance(s, {CovMode::MCMC, std::nullopt});
    auto naive = sample_covariance_iid(s);
    // asymptotic-variance inflation is (1+rho)/(1-rho) = 3
    CHECK(bm(0, 0) / naive(0, 0) > 2.0);
}

TEST_CASE("assembling with p2 = 0 returns sigma unchanged") {
    ResolvedSpec spec;
    spec.mean_cols = {0, 1};
    spec.labels = {"mean[a]", "mean[b]"};
    auto sigma = from_rows({{2.0, 0.3}, {0.3, 1.0}});
    auto acov = assemble_asymptotic_covariance(sigma, {}, spec, 100);
    CHECK(acov.assembled == sigma);
    CHECK(acov.lambda_inv == std::vector<double>{1.0, 1.0});
}

TEST_CASE("assembling recovers the classical quantile asymptotic variance") {
    // p1 = 0, p2 = 1: sigma = q(1-q), Lambda = f  =>  q(1-q)/f^2
    ResolvedSpec spec;
    spec.quantile_cols = {{0, 0.3}};
    spec.labels = {"q0.3[x]"};
    const double q = 0.3, f = 0.17;
    Matrix sigma(1, 1);
    sigma(0, 0) = q * (1 - q);
    DensityAtQuantiles dens{{f}, {0.1}};
    auto acov = assemble_asymptotic_covariance(sigma, dens, spec, 50);
    CHECK(acov.assembled(0, 0) == Catch::Approx(q * (1 - q) / (f * f)));
}

TEST_CASE("unit densities leave sigma unchanged") {
    ResolvedSpec spec;
    spec.mean_cols = {0};
    spec.quantile_cols = {{1, 0.5}, {2, 0.9}};
    spec.labels = {"m", "qa", "qb"};
    auto sigma = from_rows({{1.0, 0.1, 0.2}, {0.1, 2.0, 0.3}, {0.2, 0.3, 3.0}});
    DensityAtQuantiles dens{{1.0, 1.0}, {0.1, 0.1}};
    auto acov = assemble_asymptotic_covariance(sigma, dens, spec, 10);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(acov.assembled(i, j) == Catch::Approx(sigma(i, j)));
}

TEST_CASE("assembly rejects nonpositive densities") {
    ResolvedSpec spec;
    spec.quantile_cols = {{0, 0.5}};
    spec.labels = {"q"};
    Matrix sigma(1, 1);
    sigma(0, 0) = 0.25;
    CHECK_THROWS_AS(
        assemble_asymptotic_covariance(sigma, DensityAtQuantiles{{0.0}, {0.1}}, spec, 10),
        DegenerateDensityError);
}

TEST_CASE("assembly is equivariant under quantile reordering") {
    Rng rng(31);
    const std::size_t n = 500;
    Matrix draws(n, 2);
    for (std::size_t i = 0; i < n; ++i) {
        draws(i, 0) = rng.normal();
        draws(i, 1) = rng.normal(0.0, 2.0) + 0.5 * draws(i, 0);
    }
    SampleMatrix samples{draws, {"a", "b"}};

    EstimandSpec s1;
    s1.quantile_targets = {{ColumnRef::name("a"), 0.2}, {ColumnRef::name("b"), 0.7}};
    EstimandSpec s2;
    s2.quantile_targets = {{ColumnRef::name("b"), 0.7}, {ColumnRef::name("a"), 0.2}};

    auto build = [&](const EstimandSpec& spec) {
        auto est = estimate_joint(samples, spec);
        auto rs = resolve(spec, samples);
        auto s = build_s_process(samples, rs, est);
        auto dens = estimate_density_at_quantiles(samples, rs, est);
        return assemble_asymptotic_covariance(sample_covariance_iid(s), dens, rs, n);
    };
    auto a1 = build(s1);
    auto a2 = build(s2);
    CHECK(a1.assembled(0, 0) == Catch::Approx(a2.assembled(1, 1)));
    CHECK(a1.assembled(1, 1) == Catch::Approx(a2.assembled(0, 0)));
    CHECK(a1.assembled(0, 1) == Catch::Approx(a2.assembled(1, 0)));
}

TEST_CASE("covariance outputs are symmetric with nonnegative diagonals") {
    Rng rng(41);
    Matrix s(777, 4);
    for (std::size_t i = 0; i < 777; ++i)
        for (std::size_t j = 0; j < 4; ++j) s(i, j) = rng.normal();
    for (const auto& cov :
         {sample_covariance_iid(s), batch_means_covariance(s, {CovMode::MCMC, std::nullopt})}) {
        CHECK(cov.symmetry_defect() < 1e-12);
        for (std::size_t j = 0; j < 4; ++j) CHECK(cov(j, j) >= 0.0);
    }
}
