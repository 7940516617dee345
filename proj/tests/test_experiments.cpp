#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "navslip/error.hpp"
#include "navslip/experiments.hpp"
#include "oracles.hpp"

using namespace navslip;

TEST_CASE("exact power law") {
    std::vector<std::pair<double, double>> pts;
    for (double nu : {1e-2, 1e-3, 1e-4, 1e-5}) {
        pts.emplace_back(nu, 3.0 * std::pow(nu, 0.4));
    }
    const auto f = fit_rate(pts);
    CHECK(f.slope == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(std::exp(f.intercept) == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(f.residual < 1e-12);
    CHECK(f.meets_cube_root);
    CHECK_FALSE(f.consistent_sqrt);
}

TEST_CASE("slope uncertainty against the textbook formulas") {
    const std::vector<double> x = {0.0, 1.0, 2.0, 3.0, 4.0};
    const std::vector<double> y = {0.1, 0.9, 2.2, 2.8, 4.1};
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < x.size(); ++i) {
        pts.emplace_back(std::exp(x[i]), std::exp(y[i]));
    }
    // hand-computed: xbar 2, Sxx 10, Sxy 9.9
    const double slope = 0.99, intercept = 2.02 - slope * 2.0;  // ybar 2.02
    double ss = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (intercept + slope * x[i]);
        ss += r * r;
    }
    const double se = std::sqrt(ss / 3.0 / 10.0);
    const auto f = fit_rate(pts);
    CHECK(f.slope == doctest::Approx(slope).epsilon(1e-12));
    CHECK(f.intercept == doctest::Approx(intercept).epsilon(1e-12));
    CHECK(f.residual == doctest::Approx(std::sqrt(ss / 5.0)).epsilon(1e-12));
    CHECK(f.slope_stderr == doctest::Approx(se).epsilon(1e-12));
    CHECK(f.slope_ci95 == doctest::Approx(oracle::t975_dof3 * se).epsilon(1e-12));
}

TEST_CASE("fit errors") {
    auto code = [](const std::vector<std::pair<double, double>>& p) {
        try {
            fit_rate(p);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::DomainError;
    };
    CHECK(code({{1e-2, 1.0}, {1e-3, 0.5}}) == Errc::TooFewPoints);
    CHECK(code({{1e-2, 1.0}, {1e-3, 0.0}, {1e-4, 0.1}}) == Errc::NonpositiveValue);
    CHECK(code({{-1e-2, 1.0}, {1e-3, 0.5}, {1e-4, 0.1}}) == Errc::NonpositiveValue);
}

TEST_CASE("campaign spec validation") {
    CampaignSpec s = default_campaign();
    CHECK_NOTHROW(s.validate());
    s.nu_ladder = {1e-2, 1e-3, 1e-3};
    CHECK_THROWS_AS(s.validate(), Error);
    s.nu_ladder = {1e-2, 1e-3};
    CHECK_THROWS_AS(s.validate(), Error);
}

TEST_CASE("gradient probe") {
    std::vector<CampaignRow> rows;
    for (double nu : {1e-1, 1e-2, 1e-3, 1e-4}) {
        for (double t : {0.0, 0.5}) {
            rows.push_back({nu, t, {0.0}, 1.0 + t / std::sqrt(nu)});
        }
    }
    auto p = gradient_uniformity_probe(rows);
    CHECK(p.rows_max.size() == 4);
    CHECK(p.rows_max.front().first == 1e-1);
    CHECK_FALSE(p.uniform);
    for (auto& r : rows) {
        r.grad_inf = 2.0 + r.t;
    }
    CHECK(gradient_uniformity_probe(rows).uniform);
}

TEST_CASE("small campaign") {
    CampaignSpec s = default_campaign();
    s.base.domain.nx = 8;
    s.base.domain.ny = 8;
    s.base.domain.nz = 17;
    s.base.T = 0.05;
    s.base.save_every = 5;
    s.nu_ladder = {1e-1, 1e-2, 1e-3};
    s.error_orders = {1, 2};
    const auto res = inviscid_limit_campaign(s);
    CHECK(res.raw.size() == 3 * 11);
    CHECK(res.max_t0_error < 1e-12);
    CHECK(res.monotone);
    REQUIRE(res.fits.size() == 2);
    CHECK(res.fits[1].slope >= 1.0 / 3.0 - 0.02);
    CHECK(res.nu_star == 1e-1);
    for (const auto& e : res.entries) {
        CHECK(e.completed);
        CHECK(e.integrated_hr1 > 0.0);
    }
}
